#include <algorithm>
#include <numeric>

#include "degseq/construct.hpp"
#include "degseq/error.hpp"

namespace degseq {

bool Thm2Log::clean() const {
  return std::all_of(moves.begin(), moves.end(), [](const Thm2Move& m) { return m.decreased; });
}

namespace {

long long index_sum(const VertexSet& y) {
  long long s = 0;
  for (Vertex v : y) s += v + 1;
  return s;
}

bool has_neighbor_in(const Graph& h, Vertex x, const VertexSet& y, Vertex skip = -1) {
  return std::any_of(y.begin(), y.end(), [&](Vertex w) { return w != skip && h.has_edge(x, w); });
}

bool proper(const Graph& h, const std::vector<VertexSet>& classes) {
  for (const auto& y : classes)
    for (std::size_t i = 0; i < y.size(); ++i)
      for (std::size_t j = i + 1; j < y.size(); ++j)
        if (h.has_edge(y[i], y[j])) return false;
  return true;
}

void move_vertex(std::vector<VertexSet>& classes, Vertex x, std::size_t from, std::size_t to) {
  auto& a = classes[from];
  a.erase(std::find(a.begin(), a.end(), x));
  auto& b = classes[to];
  b.insert(std::lower_bound(b.begin(), b.end(), x), x);
}

struct Proposal {
  FactorDecomposition d;
  std::vector<VertexSet> classes;
  std::string kind;
};

}  // namespace

std::optional<Thm2SearchState> thm2_state(const FactorDecomposition& d, const std::vector<VertexSet>& classes,
                                          int gamma) {
  if (static_cast<int>(classes.size()) != gamma + 1 || gamma < 1) return std::nullopt;
  const Graph& h = d.host();
  std::optional<Thm2SearchState> best;
  for (std::size_t o = 0; o < classes.size(); ++o) {
    std::vector<VertexSet> rest;
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (i != o) rest.push_back(classes[i]);
    std::size_t lo = rest[0].size(), hi = rest[0].size();
    for (const auto& y : rest) {
      lo = std::min(lo, y.size());
      hi = std::max(hi, y.size());
    }
    if (hi - lo > 1 || classes[o].size() > lo) continue;
    std::stable_sort(rest.begin(), rest.end(), [](const VertexSet& a, const VertexSet& b) {
      if (a.size() != b.size()) return a.size() > b.size();
      return index_sum(a) < index_sum(b);
    });
    std::vector<long long> pot{static_cast<long long>(classes[o].size())};
    long long running = 0;
    for (const auto& y : rest) {
      running += index_sum(y);
      pot.push_back(running);
    }
    long long t = 0;
    if (!classes[o].empty()) {
      const Vertex a = classes[o].back();
      for (const auto& y : rest)
        for (Vertex w : y)
          if (h.has_edge(a, w)) t += w + 1;
    }
    pot.push_back(t);
    if (best && !(pot < best->potential)) continue;
    Thm2SearchState st;
    st.gamma = gamma;
    st.classes = rest;
    st.classes.push_back(classes[o]);
    st.potential = std::move(pot);
    best = std::move(st);
  }
  if (!best) return best;
  Thm2SearchState& st = *best;
  st.decomposition = d;
  const auto& y = st.classes;
  st.q_index = gamma;
  for (int i = gamma; i >= 1; --i)
    if (y[i - 1].size() == y[gamma - 1].size()) st.q_index = i;
  for (const auto& c : y) st.alpha.push_back(c.empty() ? 0 : c.back() + 1);
  const int alpha = st.alpha[gamma];
  if (alpha > 0)
    for (Vertex w : y[gamma - 1])
      if (h.has_edge(alpha - 1, w)) {
        st.beta_gamma = w + 1;
        break;
      }
  int s = 0;
  for (int cand : {alpha, st.beta_gamma})
    if (cand > 0 && h.degree(cand - 1) >= gamma && (s == 0 || cand < s)) s = cand;
  if (s > 0)
    for (int i = 0; i + 1 < gamma; ++i) {
      int hits = 0;
      for (Vertex w : y[i]) hits += h.has_edge(s - 1, w) ? 1 : 0;
      st.partition[std::min(hits, 2)].push_back(i + 1);
    }
  return best;
}

namespace {

class Descent {
 public:
  Descent(FactorDecomposition d, std::vector<VertexSet> classes, int gamma, Thm2Log* log, std::size_t& moves_left)
      : d_(std::move(d)), classes_(std::move(classes)), gamma_(gamma), log_(log), moves_left_(moves_left) {}

  void run() {
    for (;;) {
      auto st = thm2_state(d_, classes_, gamma_);
      if (!st) throw Error(ErrorKind::SearchStalled, "state lost its canonical labeling at stage " + std::to_string(gamma_));
      if (st->classes[gamma_].empty()) {
        classes_ = st->classes;
        classes_.pop_back();
        return;
      }
      if (moves_left_ == 0) throw Error(ErrorKind::SearchStalled, "move cap reached at stage " + std::to_string(gamma_));
      if (!step(*st))
        throw Error(ErrorKind::SearchStalled, "no improving move at stage " + std::to_string(gamma_) + " with overflow of " +
                                                  std::to_string(st->classes[gamma_].size()));
      --moves_left_;
    }
  }

  const FactorDecomposition& decomposition() const { return d_; }
  const std::vector<VertexSet>& classes() const { return classes_; }

 private:
  bool try_accept(const Thm2SearchState& st, Proposal p) {
    if (!proper(p.d.host(), p.classes)) return false;
    if (!p.d.check().empty()) return false;
    auto next = thm2_state(p.d, p.classes, gamma_);
    if (!next || !(next->potential < st.potential)) return false;
    if (log_) log_->moves.push_back({gamma_, p.kind, st.potential, next->potential, true});
    d_ = std::move(p.d);
    classes_ = std::move(p.classes);
    return true;
  }

  std::optional<FactorDecomposition> exchanges(Vertex u, Vertex v, const VertexSet& x, const VertexSet& forbid) {
    if (x.empty()) return d_;
    ExchangeSearchOptions o;
    o.forbidden_terminal.assign(d_.order(), false);
    for (Vertex w : forbid) o.forbidden_terminal[w] = true;
    o.node_budget = 200'000;
    try {
      return apply_all(d_, find_disjoint_exchanges(d_, u, v, x, o));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::SearchFailed || e.kind() == ErrorKind::InvalidInput ||
          e.kind() == ErrorKind::InvalidExchange)
        return std::nullopt;
      throw;
    }
  }

  bool step(const Thm2SearchState& st) {
    const Graph& h = d_.host();
    const auto& y = st.classes;
    const int g = gamma_;
    const int q0 = st.q_index - 1;
    const int n = h.order();

    // an overflow vertex with no neighbour in a smallest class moves there
    for (Vertex x : y[g])
      for (int j = q0; j < g; ++j)
        if (!has_neighbor_in(h, x, y[j])) {
          auto c = y;
          move_vertex(c, x, g, j);
          if (try_accept(st, {d_, c, "overflow recolour"})) return true;
        }

    // overflow vertex v_i, smallest class Y_j, and a vertex v_s of degree at
    // least d_i with no neighbour in Y_j: exchange N(v_i) cap Y_j over to v_s
    for (auto it = y[g].rbegin(); it != y[g].rend(); ++it) {
      const Vertex vi = *it;
      for (int j = q0; j < g; ++j) {
        VertexSet x;
        for (Vertex w : y[j])
          if (h.has_edge(vi, w)) x.push_back(w);
        for (Vertex vs = 0; vs < n; ++vs) {
          if (vs == vi || h.degree(vs) < h.degree(vi)) continue;
          if (std::binary_search(y[j].begin(), y[j].end(), vs) || has_neighbor_in(h, vs, y[j])) continue;
          auto nd = exchanges(vi, vs, x, y[j]);
          if (!nd) continue;
          auto c = y;
          move_vertex(c, vi, g, j);
          if (try_accept(st, {std::move(*nd), c, "exchange overflow vertex into smallest class"})) return true;
        }
      }
    }

    // v_t in Y_z, v_s in Y_z' (z < z') with s < t and v_s free of Y_z - v_t:
    // exchange N(v_t) cap (Y_z' - v_s) over to v_s and swap the two
    for (int z = 0; z < g; ++z)
      for (int zp = z + 1; zp <= g; ++zp)
        for (Vertex vt : y[z])
          for (Vertex vs : y[zp]) {
            if (vs >= vt || has_neighbor_in(h, vs, y[z], vt)) continue;
            VertexSet x;
            for (Vertex w : y[zp])
              if (w != vs && h.has_edge(vt, w)) x.push_back(w);
            VertexSet forbid;
            for (Vertex w : y[zp])
              if (w != vs) forbid.push_back(w);
            auto nd = exchanges(vt, vs, x, forbid);
            if (!nd) continue;
            auto c = y;
            move_vertex(c, vt, z, zp);
            move_vertex(c, vs, zp, z);
            if (try_accept(st, {std::move(*nd), c, "swap lower index forward"})) return true;
          }

    // v_s in Y_gamma below beta, not adjacent to v_alpha: hand the edge
    // v_beta v_alpha over to v_s
    if (st.beta_gamma > 0) {
      const Vertex va = st.alpha[g] - 1, vb = st.beta_gamma - 1;
      for (Vertex vs : y[g - 1]) {
        if (vs >= vb || h.has_edge(vs, va)) continue;
        auto nd = exchanges(vb, vs, VertexSet{va}, y[g - 1]);
        if (!nd) continue;
        if (try_accept(st, {std::move(*nd), y, "lower the overflow anchor's neighbour"})) return true;
      }
    }

    // plain recolourings and swaps anywhere
    for (int i = 0; i <= g; ++i)
      for (Vertex x : y[i])
        for (int j = 0; j <= g; ++j) {
          if (j == i || has_neighbor_in(h, x, y[j])) continue;
          auto c = y;
          move_vertex(c, x, i, j);
          if (try_accept(st, {d_, c, "recolour"})) return true;
        }
    for (int i = 0; i <= g; ++i)
      for (int j = i + 1; j <= g; ++j)
        for (Vertex a : y[i])
          for (Vertex b : y[j]) {
            if (has_neighbor_in(h, a, y[j], b) || has_neighbor_in(h, b, y[i], a)) continue;
            auto c = y;
            move_vertex(c, a, i, j);
            move_vertex(c, b, j, i);
            if (try_accept(st, {d_, c, "swap"})) return true;
          }
    return false;
  }

  FactorDecomposition d_;
  std::vector<VertexSet> classes_;
  int gamma_;
  Thm2Log* log_;
  std::size_t& moves_left_;
};

}  // namespace

RealizationResult thm2_construct(const DegreeSequence& pi, std::span<const FactorSpec> factor_specs, int gamma,
                                 const ConstructOptions& options, Thm2Log* log) {
  const int n = static_cast<int>(pi.size());
  const int bound = gamma_bound(pi);
  if (gamma < 1) throw Error(ErrorKind::InvalidInput, "gamma must be positive");
  // below the bound nothing is guaranteed; the descent is still tried and a dead end is an input problem
  const bool below_bound = gamma < bound;
  if (!is_graphic(pi)) throw Error(ErrorKind::NotGraphic, "sequence " + to_string(pi) + " is not graphic");
  std::vector<int> ks;
  for (const auto& s : factor_specs) ks.push_back(s.k);

  FactorDecomposition d;
  std::string provenance;
  if (ks.empty()) {
    d = FactorDecomposition::plain(havel_hakimi(pi));
    provenance = "Havel-Hakimi start";
  } else {
    auto base = realize_with_factors(pi, ks, options);
    d = *base.factors;
    provenance = "factor start (" + base.provenance + ")";
  }
  const Graph& h0 = d.host();
  const int delta = h0.max_degree();

  std::vector<VertexSet> classes;
  int colors = 0;
  auto from_coloring = [&](const EquitableColoring& f) {
    classes = f.classes();
    colors = f.colors;
  };
  if (gamma >= n) {
    EquitableColoring f{std::vector<int>(n), gamma, std::nullopt};
    std::iota(f.assignment.begin(), f.assignment.end(), 0);
    from_coloring(f);
  } else {
    from_coloring(hs_coloring(h0, std::max(gamma, delta + 1), options.seed));
  }
  provenance += "; equitable " + std::to_string(colors) + "-colouring";

  std::size_t moves_left = std::max<std::size_t>(64, static_cast<std::size_t>(n) * n * n * n);
  Thm2Log local;
  Thm2Log* sink = log ? log : &local;
  for (int c = colors - 1; c >= gamma; --c) {
    Descent step(d, classes, c, sink, moves_left);
    try {
      step.run();
    } catch (const Error& e) {
      if (!below_bound || e.kind() != ErrorKind::SearchStalled) throw;
      throw Error(ErrorKind::InvalidInput, "gamma = " + std::to_string(gamma) + " is below the bound " +
                                               std::to_string(bound) + " and the descent stopped: " + e.what());
    }
    d = step.decomposition();
    classes = step.classes();
  }
  if (!sink->clean()) throw Error(ErrorKind::SearchStalled, "a logged move did not decrease the potential");

  RealizationResult r;
  r.graph = d.host();
  EquitableColoring f{std::vector<int>(n, 0), gamma, std::nullopt};
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (Vertex v : classes[i]) f.assignment[v] = static_cast<int>(i);
  r.coloring = f;
  r.factors = d;
  provenance += "; descent to " + std::to_string(gamma) + " colours in " + std::to_string(sink->moves.size()) + " moves";

  const bool want_connect = options.connect && pi.degree_sum() >= 2L * (n - 1) && n >= 2;
  if (want_connect) {
    ConnectifyOptions co;
    if (!ks.empty()) {
      co.edge_class.assign(static_cast<std::size_t>(n) * n, 0);
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
          if (a != b && r.graph.has_edge(a, b)) co.edge_class[static_cast<std::size_t>(a) * n + b] = d.class_of(a, b);
    }
    auto res = connectify(r.graph, r.graph, f, co);
    r.graph = res.graph;
    if (ks.empty()) {
      r.factors = FactorDecomposition::plain(r.graph);
    } else {
      std::vector<Graph> fs(ks.size(), Graph(n));
      for (const auto& [a, b] : r.graph.edges()) {
        const int label = res.edge_class[static_cast<std::size_t>(a) * n + b];
        if (label >= factor_label(0)) fs[label - factor_label(0)].add_edge(a, b);
      }
      r.factors = FactorDecomposition(r.graph, fs);
    }
    provenance += "; connectify " + std::to_string(res.lambda_before) + " -> " + std::to_string(res.lambda_after);
  }
  r.provenance = provenance;

  Requirements req;
  req.degrees = pi.vector();
  req.factor_degrees = ks;
  req.colors = gamma;
  req.connectivity = want_connect;
  certify(r, req);
  return r;
}

}  // namespace degseq
