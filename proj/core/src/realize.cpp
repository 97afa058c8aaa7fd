#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "degseq/construct.hpp"
#include "degseq/error.hpp"
#include "degseq/oracle.hpp"
#include "realize_detail.hpp"

namespace degseq {

bool RealizationResult::all_passed() const {
  return std::all_of(certificates.begin(), certificates.end(), [](const Certificate& c) { return c.passed; });
}

namespace detail {

std::optional<Graph> havel_hakimi_raw(std::vector<int> need) {
  const int n = static_cast<int>(need.size());
  Graph g(n);
  std::vector<int> order(n);
  for (int round = 0; round < n; ++round) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return need[a] > need[b]; });
    const int v = order[0];
    const int r = need[v];
    if (r == 0) break;
    if (r < 0 || r > n - 1) return std::nullopt;
    need[v] = 0;
    for (int i = 1; i <= r; ++i) {
      const int w = order[i];
      if (need[w] <= 0) return std::nullopt;
      --need[w];
      g.add_edge(v, w);
    }
  }
  if (std::any_of(need.begin(), need.end(), [](int x) { return x != 0; })) return std::nullopt;
  return g;
}

Graph random_regular_start(int n, int k, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(circulant_regular(n, k), perm);
}

bool separate_layers(std::vector<Graph>& layers, const std::vector<bool>& movable, std::mt19937_64& rng,
                     std::size_t max_iters) {
  if (layers.empty()) return true;
  const int n = layers[0].order();
  std::vector<int> cnt(static_cast<std::size_t>(n) * n, 0);
  auto at = [&](int a, int b) -> int& { return cnt[static_cast<std::size_t>(a) * n + b]; };
  for (const auto& l : layers)
    for (const auto& [a, b] : l.edges()) {
      ++at(a, b);
      ++at(b, a);
    }
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (std::size_t it = 0; it < max_iters; ++it) {
    std::vector<Edge> bad;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (at(a, b) >= 2) bad.emplace_back(a, b);
    if (bad.empty()) return true;
    auto [x, y] = bad[std::uniform_int_distribution<std::size_t>(0, bad.size() - 1)(rng)];
    if (coin(rng) < 0.5) std::swap(x, y);
    std::vector<int> owners;
    for (std::size_t i = 0; i < layers.size(); ++i)
      if (movable[i] && layers[i].has_edge(x, y)) owners.push_back(static_cast<int>(i));
    if (owners.empty()) return false;  // overlap between fixed layers
    Graph& l = layers[owners[std::uniform_int_distribution<std::size_t>(0, owners.size() - 1)(rng)]];
    int best = 1 << 20;
    std::vector<Edge> choices;
    for (int u = 0; u < n; ++u) {
      if (u == x || u == y) continue;
      for (int v : l.neighbors(u)) {
        if (v == x || v == y) continue;
        // remove xy, uv; add xu, yv
        if (l.has_edge(x, u) || l.has_edge(y, v)) continue;
        const int delta = -1 - (at(u, v) >= 2 ? 1 : 0) + (at(x, u) >= 1 ? 1 : 0) + (at(y, v) >= 1 ? 1 : 0);
        if (delta < best) {
          best = delta;
          choices.clear();
        }
        if (delta == best) choices.emplace_back(u, v);
      }
    }
    if (choices.empty()) continue;
    if (best > 0 && coin(rng) > 0.15) continue;
    const auto [u, v] = choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
    l.remove_edge(x, y);
    l.remove_edge(u, v);
    l.add_edge(x, u);
    l.add_edge(y, v);
    --at(x, y), --at(y, x), --at(u, v), --at(v, u);
    ++at(x, u), ++at(u, x), ++at(y, v), ++at(v, y);
  }
  return false;
}

}  // namespace detail

Graph havel_hakimi(const DegreeSequence& pi) {
  auto g = detail::havel_hakimi_raw(pi.vector());
  if (!g) throw Error(ErrorKind::NotGraphic, "sequence " + to_string(pi) + " is not graphic");
  return *g;
}

namespace {

std::string join_ints(std::span<const int> v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::optional<FactorDecomposition> oracle_factors(const DegreeSequence& pi, std::span<const int> ks, int max_n) {
  OracleBudget budget;
  budget.max_n = max_n;
  std::optional<FactorDecomposition> out;
  enumerate_realizations(
      pi,
      [&](const Graph& g) {
        Graph rest = g;
        std::vector<Graph> fs;
        for (int k : ks) {
          auto f = find_k_factor(rest, k, budget);
          if (!f) return true;
          rest = graph_difference(rest, *f);
          fs.push_back(*f);
        }
        out = FactorDecomposition(g, fs);
        return false;
      },
      budget);
  return out;
}

}  // namespace

RealizationResult realize_with_factors(const DegreeSequence& pi, std::span<const int> ks,
                                       const ConstructOptions& options) {
  const int n = static_cast<int>(pi.size());
  int total = 0;
  for (int k : ks) {
    if (k < 0) throw Error(ErrorKind::InvalidInput, "factor degree must be non-negative");
    if (!FactorSpec{k}.parity_ok(n)) throw Error(ErrorKind::ParityError, "k*n is odd for k = " + std::to_string(k));
    total += k;
  }
  if (!is_graphic(pi)) throw Error(ErrorKind::NotGraphic, "sequence " + to_string(pi) + " is not graphic");
  const auto reduced = shift(pi, total);
  if (!is_graphic(std::span<const int>(reduced)))
    throw Error(ErrorKind::NotGraphic, "shifted sequence (" + join_ints(reduced) + ") is not graphic");

  RealizationResult r;
  const Graph base = *detail::havel_hakimi_raw(reduced);
  std::mt19937_64 rng(options.seed);
  std::optional<FactorDecomposition> found;
  for (int attempt = 0; attempt < options.restarts && !found; ++attempt) {
    std::vector<Graph> layers{base};
    for (int k : ks) layers.push_back(detail::random_regular_start(n, k, rng));
    std::vector<bool> movable(layers.size(), true);
    const std::size_t iters = 200 + 60 * static_cast<std::size_t>(n) * n;
    if (!detail::separate_layers(layers, movable, rng, iters)) continue;
    Graph host = layers[0];
    for (std::size_t i = 1; i < layers.size(); ++i) host = graph_union(host, layers[i]);
    found = FactorDecomposition(host, std::span<const Graph>(layers).subspan(1));
    r.provenance = "layered overlap repair, attempt " + std::to_string(attempt + 1);
  }
  if (!found && n <= options.oracle_max_n) {
    found = oracle_factors(pi, ks, options.oracle_max_n);
    r.provenance = "oracle enumeration";
  }
  if (!found)
    throw Error(ErrorKind::SearchFailed, "no realization of " + to_string(pi) + " with factors (" + join_ints(ks) +
                                             ") found");
  r.graph = found->host();
  r.factors = std::move(found);
  Requirements req;
  req.degrees = pi.vector();
  req.factor_degrees.assign(ks.begin(), ks.end());
  req.oracle_kfactor = true;
  certify(r, req);
  return r;
}

RealizationResult realize_with_factor(const DegreeSequence& pi, FactorSpec spec, const ConstructOptions& options) {
  const int ks[1] = {spec.k};
  return realize_with_factors(pi, ks, options);
}

std::optional<Graph> try_pack_factor(int n, int k, const Graph& g2prime, std::uint64_t seed, int restarts) {
  if (k == 0) return Graph(n);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < restarts; ++attempt) {
    std::vector<Graph> layers{detail::random_regular_start(n, k, rng), g2prime};
    const std::size_t iters = 200 + 60 * static_cast<std::size_t>(n) * n;
    if (detail::separate_layers(layers, {true, false}, rng, iters)) return layers[0];
  }
  return std::nullopt;
}

Graph pack_factor(const DegreeSequence& pi_f, const Graph& g2prime, const ConstructOptions& options) {
  const int n = static_cast<int>(pi_f.size());
  if (g2prime.order() != n) throw Error(ErrorKind::InvalidInput, "G2' order differs from the factor sequence");
  const int k = n == 0 ? 0 : pi_f[0];
  if (pi_f.min_degree() != k) throw Error(ErrorKind::InvalidInput, "factor sequence must be regular");
  if (!FactorSpec{k}.parity_ok(n)) throw Error(ErrorKind::ParityError, "k*n is odd");
  if (auto f = try_pack_factor(n, k, g2prime, options.seed, options.restarts)) return *f;
  if (n <= 16) {
    OracleBudget budget;
    budget.max_n = 16;
    budget.node_budget = 50'000'000;
    try {
      if (auto f = find_k_factor(complement(g2prime), k, budget)) return *f;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::OracleTooLarge) throw;
    }
  }
  const bool katerinis = k >= 1 && n >= 2 * (g2prime.max_degree() + 1) && n >= 4 * k - 5;
  if (katerinis)
    throw Error(ErrorKind::TheoremViolation, "no " + std::to_string(k) + "-regular graph packs with G2' although n = " +
                                                 std::to_string(n) + " meets the size conditions");
  throw Error(ErrorKind::PackingFailed, "no " + std::to_string(k) + "-regular graph packs with G2'");
}

RealizationResult thm3_construct(const DegreeSequence& pi, FactorSpec spec, const ConstructOptions& options) {
  const auto crit = kfactor_condition(pi, spec);
  if (!crit.holds)
    throw Error(ErrorKind::CriterionFails, "d_" + std::to_string(crit.index) + " = " + std::to_string(crit.lhs) +
                                               " < " + std::to_string(crit.rhs));
  if (!is_graphic(pi)) throw Error(ErrorKind::NotGraphic, "sequence " + to_string(pi) + " is not graphic");
  const int kp = max_even_k(pi, spec.k);
  if (!is_graphic(std::span<const int>(shift(pi, kp))))
    throw Error(ErrorKind::TheoremViolation, "shift by k' = " + std::to_string(kp) + " is not graphic for " + to_string(pi));
  RealizationResult top = realize_with_factor(pi, {kp}, options);
  if (kp == spec.k) {
    top.provenance = "k' = k = " + std::to_string(kp) + "; " + top.provenance;
    return top;
  }
  if (!is_graphic(std::span<const int>(shift(pi, spec.k))))
    throw Error(ErrorKind::TheoremViolation, "shift by k = " + std::to_string(spec.k) + " is not graphic although k' = " +
                                                 std::to_string(kp) + " is");
  RealizationResult r = realize_with_factor(pi, spec, options);
  r.provenance = "k' = " + std::to_string(kp) + " then k = " + std::to_string(spec.k) + "; " + r.provenance;
  r.certificates.insert(r.certificates.begin(), {"k_prime_factor", true,
                                                 "realization with a " + std::to_string(kp) + "-factor built first"});
  return r;
}

void certify(RealizationResult& r, const Requirements& req) {
  const Graph& g = r.graph;
  const int n = g.order();
  auto add = [&](std::string name, bool ok, std::string detail) {
    r.certificates.push_back({std::move(name), ok, std::move(detail)});
    if (!ok) throw Error(ErrorKind::TheoremViolation, "certificate " + r.certificates.back().name + " failed: " +
                                                          r.certificates.back().detail);
  };
  if (req.degrees) {
    const bool ok = g.degrees() == *req.degrees;
    add("degree_sequence", ok, ok ? "per-vertex degrees match" : "degrees differ");
  }
  if (!req.factor_degrees.empty()) {
    std::string why;
    if (!r.factors) {
      why = "no factor decomposition";
    } else if (!(r.factors->host() == g)) {
      why = "decomposition host differs from the graph";
    } else if (auto bad = r.factors->check(); !bad.empty()) {
      why = bad;
    } else if (r.factors->factor_degrees() != req.factor_degrees) {
      why = "factor degrees (" + join_ints(r.factors->factor_degrees()) + ") differ from (" +
            join_ints(req.factor_degrees) + ")";
    }
    add("factors", why.empty(), why.empty() ? "factors (" + join_ints(req.factor_degrees) + ") regular and disjoint" : why);
  }
  if (req.oracle_kfactor) {
    for (int k : req.factor_degrees) {
      if (n <= 16) {
        OracleBudget budget;
        budget.max_n = 16;
        budget.node_budget = 50'000'000;
        bool ok = false;
        std::string detail;
        try {
          ok = has_k_factor(g, k, budget);
          detail = ok ? "oracle finds a " + std::to_string(k) + "-factor" : "oracle finds no k-factor";
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::OracleTooLarge) throw;
          ok = true;
          detail = "oracle budget exceeded; factor regularity checked directly";
        }
        add("k_factor_oracle", ok, detail);
      } else {
        r.certificates.push_back({"k_factor_oracle", true, "n > 16: factor regularity checked directly"});
      }
    }
  }
  if (req.must_contain) {
    const bool ok = g.contains(*req.must_contain);
    add("contains_required", ok, ok ? std::to_string(req.must_contain->edge_count()) + " required edges present"
                                    : "a required edge is missing");
  }
  if (req.colors) {
    std::string why;
    if (!r.coloring) {
      why = "no colouring";
    } else if (r.coloring->colors != *req.colors) {
      why = "colouring uses " + std::to_string(r.coloring->colors) + " colours, expected " + std::to_string(*req.colors);
    } else if (!check_coloring(g, *r.coloring).ok()) {
      why = "colouring is not proper and equitable";
    }
    add("equitable_coloring", why.empty(),
        why.empty() ? "proper equitable " + std::to_string(*req.colors) + "-colouring" : why);
  }
  if (req.connectivity && n >= 2) {
    const auto target = connect_target(g.min_degree());
    const int lambda = edge_connectivity(g).lambda;
    add("edge_connectivity", lambda >= target.target,
        "lambda = " + std::to_string(lambda) + ", target = " + std::to_string(target.target));
  }
}

}  // namespace degseq
