#include "degseq/verify.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <numeric>
#include <sstream>

#include "degseq/coloring.hpp"
#include "degseq/connect.hpp"
#include "degseq/construct.hpp"
#include "degseq/error.hpp"
#include "degseq/oracle.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

SweepParams parse_sweep(std::string_view text) {
  SweepParams p;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    pos = end + 1;
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) continue;
    std::size_t op = item.find("<=");
    std::size_t skip = 2;
    if (op == std::string_view::npos) {
      op = item.find('=');
      skip = 1;
    }
    if (op == std::string_view::npos) throw Error(ErrorKind::ParseError, "sweep entry '" + std::string(item) + "' has no value");
    const std::string_view key = item.substr(0, op);
    const std::string_view val = item.substr(op + skip);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
    if (ec != std::errc() || ptr != val.data() + val.size())
      throw Error(ErrorKind::ParseError, "sweep value '" + std::string(val) + "' is not a non-negative integer");
    if (key == "n") p.max_n = static_cast<int>(v);
    else if (key == "k") p.max_k = static_cast<int>(v);
    else if (key == "count") p.count = static_cast<int>(v);
    else if (key == "seed") p.seed = v;
    else throw Error(ErrorKind::ParseError, "unknown sweep key '" + std::string(key) + "'");
  }
  return p;
}

Graph random_bounded_graph(int n, int max_degree, double density, std::mt19937_64& rng) {
  Graph g(n);
  if (n < 2) return g;
  std::vector<Edge> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::bernoulli_distribution keep(density);
  for (const auto& [a, b] : pairs)
    if (g.degree(a) < max_degree && g.degree(b) < max_degree && keep(rng)) g.add_edge(a, b);
  return g;
}

std::optional<Graph> random_perfect_matching(const Graph& avoid, std::mt19937_64& rng) {
  const int n = avoid.order();
  if (n % 2 != 0) return std::nullopt;
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    Graph m(n);
    std::vector<bool> used(n, false);
    bool ok = true;
    for (Vertex a : order) {
      if (used[a]) continue;
      std::vector<Vertex> cand;
      for (Vertex b = 0; b < n; ++b)
        if (b != a && !used[b] && !avoid.has_edge(a, b)) cand.push_back(b);
      if (cand.empty()) {
        ok = false;
        break;
      }
      const Vertex b = cand[std::uniform_int_distribution<std::size_t>(0, cand.size() - 1)(rng)];
      used[a] = used[b] = true;
      m.add_edge(a, b);
    }
    if (ok) return m;
  }
  return std::nullopt;
}

FactorDecomposition random_decomposition(int n, int p, std::mt19937_64& rng) {
  std::vector<Graph> factors;
  Graph taken(n);
  for (int i = 0; i < p; ++i) {
    const int k = std::uniform_int_distribution<int>(1, 2)(rng);
    Graph f(n);
    bool ok = true;
    for (int j = 0; j < k && ok; ++j) {
      auto m = random_perfect_matching(graph_union(taken, f), rng);
      if (!m) ok = false;
      else f = graph_union(f, *m);
    }
    if (!ok) continue;
    taken = graph_union(taken, f);
    factors.push_back(f);
  }
  Graph host = taken;
  std::bernoulli_distribution extra(0.3);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!host.has_edge(a, b) && extra(rng)) host.add_edge(a, b);
  return FactorDecomposition(host, factors);
}

namespace {

class Runner {
 public:
  Runner(int id, std::string name) : start_(std::chrono::steady_clock::now()) {
    r_.id = id;
    r_.name = std::move(name);
  }
  void pass() { ++r_.checked; }
  void fail(const std::string& why) {
    ++r_.checked;
    ++r_.failures;
    if (r_.failure_samples.size() < 5) r_.failure_samples.push_back(why);
  }
  void check(bool ok, const std::function<std::string()>& why) { ok ? pass() : fail(why()); }
  CriterionReport finish(std::string detail) {
    r_.passed = r_.failures == 0 && r_.checked > 0;
    r_.detail = std::move(detail);
    r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return r_;
  }
  const CriterionReport& report() const { return r_; }

 private:
  CriterionReport r_;
  std::chrono::steady_clock::time_point start_;
};

int pick(int v, int fallback) { return v > 0 ? v : fallback; }
std::uint64_t pick_seed(std::uint64_t v, std::uint64_t fallback) { return v > 0 ? v : fallback; }

std::string seq_text(std::span<const int> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

// Every non-increasing sequence of length n with entries in [lo, hi].
void for_each_sequence(int n, int lo, int hi, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int cap) {
    if (static_cast<int>(cur.size()) == n) {
      visit(cur);
      return;
    }
    for (int v = cap; v >= lo; --v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(hi);
}

std::optional<EquitableColoring> exact(const Graph& g, int c) {
  ExactColoringOptions o;
  o.max_n = 40;
  return equitable_exact(g, c, o);
}

CriterionReport c1_graphic_oracle(const SweepParams& p) {
  Runner run(1, "graphicality oracle equivalence");
  const int max_n = pick(p.max_n, 7);
  for (int n = 1; n <= max_n; ++n)
    for_each_sequence(n, 0, std::min(6, n - 1), [&](const std::vector<int>& v) {
      const DegreeSequence pi(v);
      bool realized = false;
      enumerate_realizations(pi, [&](const Graph&) {
        realized = true;
        return false;
      });
      run.check(is_graphic(pi) == realized, [&] { return "mismatch on " + seq_text(v); });
    });
  return run.finish(std::to_string(run.report().checked) + " sequences, n <= " + std::to_string(max_n));
}

CriterionReport c2_strong_index(const SweepParams& p) {
  Runner run(2, "strong-index refinement of Erdos-Gallai");
  const int count = pick(p.count, 100000);
  const int max_n = pick(p.max_n, 30);
  std::mt19937_64 rng(pick_seed(p.seed, 2));
  for (int i = 0; i < count; ++i) {
    const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
    std::vector<int> v(n);
    if (i % 2 == 0) {
      for (int& x : v) x = std::uniform_int_distribution<int>(0, n - 1)(rng);
    } else {
      // near-graphic: degrees of a random graph, nudged
      const double dens = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
      v = random_bounded_graph(n, n, dens, rng).degrees();
      const int j = std::uniform_int_distribution<int>(0, n - 1)(rng);
      const int delta = std::uniform_int_distribution<int>(-2, 2)(rng);
      v[j] = std::clamp(v[j] + delta, 0, n - 1);
    }
    std::sort(v.rbegin(), v.rend());
    run.check(is_graphic(std::span<const int>(v)) == is_graphic_full(v), [&] { return "mismatch on " + seq_text(v); });
  }
  return run.finish(std::to_string(count) + " sequences, n <= " + std::to_string(max_n));
}

CriterionReport c3_thm3(const SweepParams& p) {
  Runner run(3, "k-factor criterion sweep");
  const int max_n = pick(p.max_n, 7);
  const int max_k = pick(p.max_k, 3);
  ConstructOptions opts;
  opts.seed = pick_seed(p.seed, 3);
  for (int n = 2; n <= max_n; ++n)
    for_each_sequence(n, 1, n - 1, [&](const std::vector<int>& v) {
      const DegreeSequence pi(v);
      if (!is_graphic(pi)) return;
      for (int k = 1; k <= max_k; ++k) {
        if (k > pi.min_degree() || (k * n) % 2 != 0) continue;
        if (!kfactor_condition(pi, {k}).holds) continue;
        const std::string tag = seq_text(v) + " k=" + std::to_string(k);
        try {
          const auto r = thm3_construct(pi, {k}, opts);
          const bool degrees = r.graph.degrees() == v;
          const bool factor = r.factors && r.factors->factor_degrees() == std::vector<int>{k} &&
                              r.factors->check().empty() && has_k_factor(r.graph, k);
          const bool oracle = exists_realization_with_kfactor(pi, k);
          run.check(degrees && factor && oracle, [&] {
            return tag + (degrees ? "" : " degrees") + (factor ? "" : " factor") + (oracle ? "" : " oracle");
          });
        } catch (const Error& e) {
          run.fail(tag + ": " + e.what());
        }
      }
    });
  return run.finish(std::to_string(run.report().checked) + " (sequence, k) pairs, n <= " + std::to_string(max_n));
}

CriterionReport c4_sharpness_family(const SweepParams&) {
  Runner run(4, "k-factor criterion sharpness family");
  for (int k = 2; k <= 5; ++k) {
    const Graph g = sharpness_factor_family(k);
    const DegreeSequence pi = degree_sequence_of(g);
    const int d1 = pi.max_degree(), dn = pi.min_degree();
    const int lhs = pi.d(d1 - dn + 1);
    const bool shifted = is_graphic(std::span<const int>(shift(pi, k)));
    run.check(!shifted && lhs == d1 - dn + k - 2, [&] {
      return "k=" + std::to_string(k) + " pi=" + to_string(pi) + " lhs=" + std::to_string(lhs) +
             (shifted ? " shift graphic" : "");
    });
  }
  return run.finish("k = 2..5");
}

CriterionReport c5_eq1_sharpness(const SweepParams&) {
  Runner run(5, "colour bound sharpness on split graphs");
  for (int s = 2; s <= 4; ++s)
    for (int t = 2; t <= 3; ++t) {
      const Graph g = split_graph(s, t);
      const DegreeSequence pi = degree_sequence_of(g);
      const int bound = gamma_bound(pi);
      const bool at = exact(g, s + t).has_value();
      const bool below = exact(g, s + t - 1).has_value();
      run.check(bound == s + t && at && !below, [&] {
        return "s=" + std::to_string(s) + " t=" + std::to_string(t) + " bound=" + std::to_string(bound) +
               (at ? "" : " no colouring at s+t") + (below ? " colouring at s+t-1" : "");
      });
    }
  return run.finish("s in 2..4, t in 2..3");
}

CriterionReport c6_hs(const SweepParams& p) {
  Runner run(6, "equitable colouring with max degree + 1 colours");
  const int count = pick(p.count, 200);
  const int max_n = pick(p.max_n, 40);
  std::mt19937_64 rng(pick_seed(p.seed, 6));
  for (int i = 0; i < count; ++i) {
    const int n = std::uniform_int_distribution<int>(2, max_n)(rng);
    const int cap = std::uniform_int_distribution<int>(1, 6)(rng);
    const double dens = std::uniform_real_distribution<double>(0.1, 1.0)(rng);
    const Graph g = random_bounded_graph(n, cap, dens, rng);
    const int c = g.max_degree() + 1;
    try {
      const auto f = hs_coloring(g, c, i);
      run.check(f.colors == c && check_coloring(g, f).ok(), [&] { return "graph " + std::to_string(i) + " bad colouring"; });
    } catch (const Error& e) {
      run.fail("graph " + std::to_string(i) + ": " + e.what());
    }
  }
  return run.finish(std::to_string(count) + " graphs, n <= " + std::to_string(max_n) + ", max degree <= 6");
}

CriterionReport c7_exceptions(const SweepParams&) {
  Runner run(7, "negative fixtures K5/4, C7/2, K33/3");
  run.check(!exact(complete_graph(5), 4), [] { return "K5 is equitably 4-colourable"; });
  run.check(!exact(cycle_graph(7), 2), [] { return "C7 is equitably 2-colourable"; });
  run.check(!exact(complete_bipartite(3, 3), 3), [] { return "K33 is equitably 3-colourable"; });
  return run.finish("3 fixtures");
}

CriterionReport c8_thm1(const SweepParams& p) {
  Runner run(8, "max-degree colouring sweep with a k-factor");
  const int count = pick(p.count, 50);
  const int max_n = pick(p.max_n, 16);
  const int max_k = pick(p.max_k, 3);
  std::mt19937_64 rng(pick_seed(p.seed, 8));
  int built = 0;
  while (built < count) {
    const int n = 2 * std::uniform_int_distribution<int>(2, max_n / 2)(rng);
    const int k = std::uniform_int_distribution<int>(1, std::min(max_k, n - 2))(rng);
    Graph f(n);
    bool ok = true;
    for (int j = 0; j < k && ok; ++j) {
      auto m = random_perfect_matching(f, rng);
      if (!m) ok = false;
      else f = graph_union(f, *m);
    }
    if (!ok) continue;
    Graph g = f;
    const int extra = std::uniform_int_distribution<int>(0, n)(rng);
    for (int e = 0; e < extra; ++e) {
      const int a = std::uniform_int_distribution<int>(0, n - 1)(rng);
      const int b = std::uniform_int_distribution<int>(0, n - 1)(rng);
      if (a != b) g.add_edge(a, b);
    }
    if (g.edge_count() == static_cast<std::size_t>(n) * (n - 1) / 2 || g.is_regular(1)) continue;
    ++built;
    const Graph fs[1] = {f};
    const FactorDecomposition d(g, fs);
    const Graph z = graph_difference(g, f);
    const std::string tag = "instance " + std::to_string(built) + " (n=" + std::to_string(n) + ", k=" +
                            std::to_string(k) + ")";
    try {
      ConstructOptions opts;
      opts.seed = built;
      const auto r = thm1_construct(d, opts);
      const Graph& h = r.graph;
      const bool degrees = h.degrees() == g.degrees();
      bool contains = true;
      for (const auto& [a, b] : z.edges()) contains = contains && h.has_edge(a, b);
      const bool colourable = exact(h, g.max_degree()).has_value();
      bool connected = true;
      if (g.edge_count() + 1 >= static_cast<std::size_t>(n))
        connected = edge_connectivity(h).lambda >= connect_target(h.min_degree()).target;
      run.check(degrees && contains && colourable && connected, [&] {
        return tag + (degrees ? "" : " degrees") + (contains ? "" : " lost Z edge") +
               (colourable ? "" : " not equitably colourable") + (connected ? "" : " connectivity");
      });
    } catch (const Error& e) {
      run.fail(tag + ": " + e.what());
    }
  }
  return run.finish(std::to_string(count) + " instances, n <= " + std::to_string(max_n));
}

CriterionReport c9_thm2(const SweepParams& p) {
  Runner run(9, "colouring descent sweep at the gamma bound");
  const int count = pick(p.count, 100);
  const int max_n = pick(p.max_n, 10);
  std::mt19937_64 rng(pick_seed(p.seed, 9));
  for (int i = 0; i < count; ++i) {
    const int n = std::uniform_int_distribution<int>(3, max_n)(rng);
    const double dens = std::uniform_real_distribution<double>(0.15, 0.85)(rng);
    Graph g = random_bounded_graph(n, n, dens, rng);
    for (Vertex v = 0; v < n; ++v)
      if (g.degree(v) == 0) g.add_edge(v, (v + 1 + std::uniform_int_distribution<int>(0, n - 2)(rng)) % n);
    const DegreeSequence pi = normalize(g.degrees());
    const int gamma = gamma_bound(pi);
    const std::string tag = seq_text(pi.values()) + " gamma=" + std::to_string(gamma);
    try {
      Thm2Log log;
      ConstructOptions opts;
      opts.seed = i + 1;
      const auto r = thm2_construct(pi, {}, gamma, opts, &log);
      const bool colour = r.coloring && r.coloring->colors == gamma && check_coloring(r.graph, *r.coloring).ok();
      const bool degrees = r.graph.degrees() == pi.vector();
      run.check(colour && degrees && log.clean(), [&] {
        return tag + (colour ? "" : " colouring") + (degrees ? "" : " degrees") + (log.clean() ? "" : " potential");
      });
    } catch (const Error& e) {
      run.fail(tag + ": " + e.what());
    }
  }
  return run.finish(std::to_string(count) + " sequences, n <= " + std::to_string(max_n));
}

CriterionReport c10_exchange(const SweepParams& p) {
  Runner run(10, "colored exchange invariants");
  const int count = pick(p.count, 10000);
  const int max_n = pick(p.max_n, 16);
  std::mt19937_64 rng(pick_seed(p.seed, 10));
  std::size_t attempts = 0;
  while (static_cast<int>(run.report().checked) < count && attempts < 400 * static_cast<std::size_t>(count)) {
    const int n = 2 * std::uniform_int_distribution<int>(2, max_n / 2)(rng);
    const int p_count = std::uniform_int_distribution<int>(0, 3)(rng);
    FactorDecomposition d = random_decomposition(n, p_count, rng);
    for (int walk = 0; walk < 25 && static_cast<int>(run.report().checked) < count; ++walk) {
      ++attempts;
      const int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
      const int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
      const int x0 = std::uniform_int_distribution<int>(0, n - 1)(rng);
      if (u == v || x0 == u || x0 == v) continue;
      ExchangeSearchOptions o;
      o.node_budget = 5000;
      const auto l = find_exchange(d, u, v, x0, o);
      if (!l) continue;
      const FactorDecomposition after = apply_colored_exchange(d, *l);
      const bool partition = after.check().empty();
      const bool regular = after.factor_degrees() == d.factor_degrees();
      const bool degrees = after.host().degrees() == d.host().degrees();
      const bool involution = apply_colored_exchange(after, *l) == d;
      run.check(partition && regular && degrees && involution, [&] {
        return "exchange on n=" + std::to_string(n) + (partition ? "" : " partition: " + after.check()) +
               (regular ? "" : " factor degrees") + (degrees ? "" : " host degrees") + (involution ? "" : " involution");
      });
      d = after;
    }
  }
  return run.finish(std::to_string(run.report().checked) + " exchanges on decompositions with n <= " +
                    std::to_string(max_n));
}

struct ConnectInstance {
  Graph g0, z0;
  EquitableColoring f;
};

std::optional<ConnectInstance> connect_instance(int n, std::mt19937_64& rng) {
  const int c = std::uniform_int_distribution<int>(2, 4)(rng);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  EquitableColoring f{std::vector<int>(n), c, std::nullopt};
  for (int i = 0; i < n; ++i) f.assignment[order[i]] = i % c;
  // a few loosely joined blocks
  const int blocks = std::uniform_int_distribution<int>(1, 3)(rng);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> block(n);
  for (int i = 0; i < n; ++i) block[order[i]] = i % blocks;
  const double dens = std::uniform_real_distribution<double>(0.3, 0.9)(rng);
  std::bernoulli_distribution in(dens), across(0.03);
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (f.assignment[a] != f.assignment[b] && (block[a] == block[b] ? in(rng) : across(rng))) g.add_edge(a, b);
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == 0) {
      std::vector<Vertex> cand;
      for (Vertex w = 0; w < n; ++w)
        if (f.assignment[w] != f.assignment[v]) cand.push_back(w);
      g.add_edge(v, cand[std::uniform_int_distribution<std::size_t>(0, cand.size() - 1)(rng)]);
    }
  const double share = std::uniform_real_distribution<double>(0.5, 1.0)(rng);
  std::bernoulli_distribution pick_z(share);
  Graph z(n);
  for (const auto& [a, b] : g.edges())
    if (pick_z(rng)) z.add_edge(a, b);
  for (Vertex v = 0; v < n; ++v)
    if (z.degree(v) == 0) z.add_edge(v, g.neighbors(v)[0]);
  if (g.min_degree() == 1) {
    if (g.edge_count() + 1 < static_cast<std::size_t>(n)) return std::nullopt;
    for (const auto& [a, b] : g.edges())
      if (z.edge_count() + 1 < static_cast<std::size_t>(n)) z.add_edge(a, b);
  }
  return ConnectInstance{g, z, f};
}

CriterionReport c11_connectify(const SweepParams& p) {
  Runner run(11, "edge-connectivity repair");
  const int count = pick(p.count, 100);
  const int max_n = pick(p.max_n, 20);
  std::mt19937_64 rng(pick_seed(p.seed, 11));
  int stuck = 0;
  int built = 0;
  int repaired = 0;
  while (built < count) {
    const int n = std::uniform_int_distribution<int>(std::min(6, max_n), max_n)(rng);
    auto inst = connect_instance(n, rng);
    if (!inst) continue;
    ++built;
    const std::string tag = "instance " + std::to_string(built) + " (n=" + std::to_string(n) + ")";
    try {
      const auto r = connectify(inst->g0, inst->z0, inst->f);
      if (!r.steps.empty()) ++repaired;
      const Graph kept = graph_difference(inst->g0, inst->z0);
      const bool degrees = r.graph.degrees() == inst->g0.degrees();
      const bool protected_ok = r.graph.contains(kept);
      const bool colour = check_coloring(r.graph, inst->f).ok();
      const int lambda = edge_connectivity(r.graph).lambda;
      const bool target = lambda >= connect_target(inst->g0.min_degree()).target;
      run.check(degrees && protected_ok && colour && target, [&] {
        return tag + (degrees ? "" : " degrees") + (protected_ok ? "" : " protected edge lost") +
               (colour ? "" : " colouring") + (target ? "" : " lambda " + std::to_string(lambda));
      });
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::RepairStuck) ++stuck;
      run.fail(tag + ": " + e.what());
    }
  }
  return run.finish(std::to_string(count) + " instances, n <= " + std::to_string(max_n) + ", " + std::to_string(repaired) +
                    " needed swaps, RepairStuck = " + std::to_string(stuck));
}

CriterionReport pipeline_sweep(const SweepParams& p) {
  Runner run(0, "max-degree colouring pipeline sweep");
  const int max_n = pick(p.max_n, 6);
  const int max_k = p.max_k > 0 ? p.max_k : 2;
  ConstructOptions opts;
  opts.seed = pick_seed(p.seed, 4);
  for (int n = 2; n <= max_n; ++n)
    for_each_sequence(n, 1, n - 1, [&](const std::vector<int>& v) {
      const DegreeSequence pi(v);
      if (!is_graphic(pi)) return;
      const int d1 = pi.max_degree(), dn = pi.min_degree();
      if (dn == n - 1 || d1 == 1 || (d1 == 2 && dn == 2 && n % 2 == 1)) return;
      for (int k = 0; k <= std::min(max_k, dn); ++k) {
        if ((k * n) % 2 != 0) continue;
        if (k > 0 && !exists_realization_with_kfactor(pi, k)) continue;
        const std::string tag = seq_text(v) + " k=" + std::to_string(k);
        try {
          const auto r = thm4_pipeline(pi, {k}, opts);
          const bool colour = r.coloring && r.coloring->colors == d1 && check_coloring(r.graph, *r.coloring).ok();
          const bool degrees = r.graph.degrees() == v;
          bool factor = true;
          if (k > 0) {
            const auto& fd = r.factors->factor_degrees();
            factor = r.factors->check().empty() && std::find(fd.begin(), fd.end(), k) != fd.end();
          }
          bool connected = true;
          if (pi.degree_sum() >= 2L * (n - 1))
            connected = edge_connectivity(r.graph).lambda >= connect_target(dn).target;
          run.check(colour && degrees && factor && connected, [&] {
            return tag + (colour ? "" : " colouring") + (degrees ? "" : " degrees") + (factor ? "" : " factor") +
                   (connected ? "" : " connectivity");
          });
        } catch (const Error& e) {
          run.fail(tag + ": " + e.what());
        }
      }
    });
  return run.finish(std::to_string(run.report().checked) + " (sequence, k) pairs, n <= " + std::to_string(max_n));
}

}  // namespace

CriterionReport run_criterion(int id, const SweepParams& params) {
  switch (id) {
    case 1: return c1_graphic_oracle(params);
    case 2: return c2_strong_index(params);
    case 3: return c3_thm3(params);
    case 4: return c4_sharpness_family(params);
    case 5: return c5_eq1_sharpness(params);
    case 6: return c6_hs(params);
    case 7: return c7_exceptions(params);
    case 8: return c8_thm1(params);
    case 9: return c9_thm2(params);
    case 10: return c10_exchange(params);
    case 11: return c11_connectify(params);
    default: throw Error(ErrorKind::InvalidParams, "criterion id must be in 1..11");
  }
}

CriterionReport theorem_sweep(int theorem, const SweepParams& params) {
  switch (theorem) {
    case 1: return c8_thm1(params);
    case 2: return c9_thm2(params);
    case 3: return c3_thm3(params);
    case 4: return pipeline_sweep(params);
    default: throw Error(ErrorKind::InvalidParams, "theorem must be 1, 2, 3 or 4");
  }
}

}  // namespace degseq
