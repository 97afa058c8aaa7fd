#include "degseq/coloring.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <unordered_set>

#include "json.hpp"

#include "degseq/error.hpp"

namespace degseq {

std::vector<int> EquitableColoring::class_sizes() const {
  std::vector<int> sizes(std::max(colors, 0), 0);
  for (int c : assignment)
    if (c >= 0 && c < colors) ++sizes[c];
  return sizes;
}

std::vector<VertexSet> EquitableColoring::classes() const {
  std::vector<VertexSet> out(std::max(colors, 0));
  for (std::size_t v = 0; v < assignment.size(); ++v)
    if (assignment[v] >= 0 && assignment[v] < colors) out[assignment[v]].push_back(static_cast<Vertex>(v));
  return out;
}

std::vector<VertexSet> EquitableColoring::sorted_classes() const {
  auto out = classes();
  std::stable_sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
  return out;
}

ColoringCheck check_coloring(const Graph& g, const EquitableColoring& f) {
  ColoringCheck r;
  r.class_sizes = f.class_sizes();
  const bool total = static_cast<int>(f.assignment.size()) == g.order() &&
                     std::all_of(f.assignment.begin(), f.assignment.end(),
                                 [&](int c) { return c >= 0 && c < f.colors; });
  r.proper = total;
  if (total)
    for (const auto& [u, v] : g.edges())
      if (f.assignment[u] == f.assignment[v]) {
        r.proper = false;
        break;
      }
  if (!r.class_sizes.empty()) {
    const auto [lo, hi] = std::minmax_element(r.class_sizes.begin(), r.class_sizes.end());
    r.equitable = total && *hi - *lo <= 1;
  } else {
    r.equitable = total && g.order() == 0;
  }
  return r;
}

namespace {

// Balancing state for the incremental colouring.
class Balancer {
 public:
  Balancer(const Graph& g, std::vector<int>& color, int c) : g_(g), color_(color), c_(c), size_(c, 0) {
    for (int x : color_) ++size_[x];
  }

  void move(Vertex v, int to) {
    --size_[color_[v]];
    color_[v] = to;
    ++size_[to];
  }

  bool movable(Vertex v, int to) const {
    if (color_[v] == to) return false;
    for (Vertex w : g_.neighbors(v))
      if (color_[w] == to) return false;
    return true;
  }

  int min_size() const { return *std::min_element(size_.begin(), size_.end()); }
  int max_size() const { return *std::max_element(size_.begin(), size_.end()); }

  // For every class, the next class and vertex on a shortest chain towards a
  // class of minimum size (excluding `avoid`).
  struct Chains {
    std::vector<int> next_class;
    std::vector<Vertex> mover;
    std::vector<bool> reaches;
  };

  Chains chains(int avoid = -1) const {
    const int lo = min_size();
    Chains ch{std::vector<int>(c_, -1), std::vector<Vertex>(c_, -1), std::vector<bool>(c_, false)};
    std::deque<int> q;
    for (int k = 0; k < c_; ++k)
      if (size_[k] == lo && k != avoid) {
        ch.reaches[k] = true;
        q.push_back(k);
      }
    while (!q.empty()) {
      const int target = q.front();
      q.pop_front();
      for (Vertex v = 0; v < g_.order(); ++v) {
        const int from = color_[v];
        if (from == avoid || ch.reaches[from] || !movable(v, target)) continue;
        ch.reaches[from] = true;
        ch.next_class[from] = target;
        ch.mover[from] = v;
        q.push_back(from);
      }
    }
    return ch;
  }

  void shift_from(int start, const Chains& ch) {
    std::vector<std::pair<Vertex, int>> moves;
    for (int k = start; ch.next_class[k] != -1; k = ch.next_class[k]) moves.emplace_back(ch.mover[k], ch.next_class[k]);
    for (const auto& [v, to] : moves) move(v, to);
  }

  // One step that strictly lowers the sum of squared class sizes; false when
  // none of the moves below applies.
  bool improve() {
    const int lo = min_size();
    const auto ch = chains();
    // direct chain from an oversized class
    int best = -1;
    for (int k = 0; k < c_; ++k)
      if (ch.reaches[k] && size_[k] >= lo + 2 && (best == -1 || size_[k] > size_[best])) best = k;
    if (best != -1) {
      shift_from(best, ch);
      return true;
    }
    // solo move: y in an unreachable oversized class Z has exactly one
    // neighbour x in a reachable class V; x leaves V for a reachable class W,
    // y takes its place, and W is drained along a chain.
    for (int z = 0; z < c_; ++z) {
      if (ch.reaches[z] || size_[z] < lo + 2) continue;
      if (solo_move_from(z, ch)) return true;
    }
    return false;
  }

  // Size-neutral solo move out of an unreachable class; used to reshape the
  // reachability structure when improve() is stuck.
  bool neutral_move(std::mt19937_64& rng) {
    const auto ch = chains();
    std::vector<int> candidates;
    for (int z = 0; z < c_; ++z)
      if (!ch.reaches[z]) candidates.push_back(z);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    for (int z : candidates)
      if (solo_move_from(z, ch)) return true;
    return false;
  }

 private:
  bool solo_move_from(int z, const Chains& ch) {
    const int lo = min_size();
    for (Vertex y = 0; y < g_.order(); ++y) {
      if (color_[y] != z) continue;
      for (int vcls = 0; vcls < c_; ++vcls) {
        if (!ch.reaches[vcls] || vcls == z) continue;
        Vertex solo = -1;
        int count = 0;
        for (Vertex w : g_.neighbors(y))
          if (color_[w] == vcls) {
            solo = w;
            ++count;
          }
        if (count != 1) continue;
        for (int w = 0; w < c_; ++w) {
          if (w == vcls || w == z || !ch.reaches[w] || !movable(solo, w)) continue;
          const std::vector<int> saved = color_;
          const std::vector<int> saved_size = size_;
          move(solo, w);
          move(y, vcls);
          if (size_[w] == lo + 1 && saved_size[w] == lo) return true;
          const auto after = chains();
          if (after.reaches[w] && size_[w] > min_size()) {
            shift_from(w, after);
            return true;
          }
          color_ = saved;
          size_ = saved_size;
        }
      }
    }
    return false;
  }

  const Graph& g_;
  std::vector<int>& color_;
  int c_;
  std::vector<int> size_;
};

bool rebalance(const Graph& g, std::vector<int>& color, int c, std::mt19937_64& rng, std::size_t cap) {
  Balancer b(g, color, c);
  std::unordered_set<std::string> seen;
  std::size_t steps = 0;
  while (b.max_size() - b.min_size() >= 2) {
    if (++steps > cap) return false;
    if (b.improve()) {
      seen.clear();
      continue;
    }
    const std::string key(color.begin(), color.end());
    if (!seen.insert(key).second) return false;
    if (!b.neutral_move(rng)) return false;
  }
  return true;
}

bool incremental_coloring(const Graph& g, int c, std::vector<int>& color, std::mt19937_64& rng, bool shuffle_edges) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (shuffle_edges) std::shuffle(perm.begin(), perm.end(), rng);
  color.assign(n, 0);
  for (int i = 0; i < n; ++i) color[perm[i]] = i % c;

  auto edges = g.edges();
  if (shuffle_edges) std::shuffle(edges.begin(), edges.end(), rng);
  Graph partial(n);
  const std::size_t cap = static_cast<std::size_t>(n) * c * c + 16;
  for (const auto& [x0, y0] : edges) {
    partial.add_edge(x0, y0);
    if (color[x0] != color[y0]) continue;
    // pick the endpoint/class pair that keeps sizes as even as possible
    Vertex best_v = -1;
    int best_cls = -1;
    std::vector<int> size(c, 0);
    for (int x : color) ++size[x];
    for (Vertex v : {x0, y0}) {
      std::vector<bool> blocked(c, false);
      for (Vertex w : partial.neighbors(v)) blocked[color[w]] = true;
      for (int k = 0; k < c; ++k)
        if (!blocked[k] && (best_cls == -1 || size[k] < size[best_cls])) {
          best_v = v;
          best_cls = k;
        }
    }
    if (best_v == -1) return false;  // impossible when c > max degree
    color[best_v] = best_cls;
    if (!rebalance(partial, color, c, rng, cap)) return false;
  }
  return true;
}

}  // namespace

EquitableColoring hs_coloring(const Graph& g, int c, std::uint64_t seed) {
  if (c < g.max_degree() + 1 || c < 1)
    throw Error(ErrorKind::InvalidInput, "hs_coloring needs c >= max degree + 1 (c = " + std::to_string(c) +
                                             ", max degree = " + std::to_string(g.max_degree()) + ")");
  std::mt19937_64 rng(seed);
  std::vector<int> color;
  for (int attempt = 0; attempt < 64; ++attempt) {
    if (incremental_coloring(g, c, color, rng, attempt > 0)) {
      EquitableColoring f{color, c, std::nullopt};
      if (check_coloring(g, f).ok()) return f;
    }
  }
  ExactColoringOptions opt;
  opt.max_n = 64;
  if (auto f = equitable_exact(g, c, opt)) return *f;
  throw Error(ErrorKind::SearchStalled, "hs_coloring failed to balance a colouring with c = " + std::to_string(c));
}

namespace {

class ExactSearch {
 public:
  ExactSearch(const Graph& g, int c, std::uint64_t budget)
      : g_(g), n_(g.order()), c_(c), base_(n_ / c), big_allowed_(n_ % c), budget_(budget),
        color_(n_, -1), size_(c, 0), forbid_(n_, 0) {
    nbrs_.reserve(n_);
    for (int v = 0; v < n_; ++v) nbrs_.push_back(g.neighbors(v));
  }

  bool run() { return solve(0); }
  const std::vector<int>& color() const { return color_; }
  bool exhausted() const { return nodes_ > budget_; }

 private:
  using Mask = std::uint64_t;
  static int count(Mask m) { return __builtin_popcountll(m); }

  bool class_open(int k) const { return size_[k] < base_ || (size_[k] == base_ && big_used_ < big_allowed_); }

  Mask options(Vertex v) const {
    Mask m = 0;
    bool empty_taken = false;
    for (int k = 0; k < c_; ++k) {
      if ((forbid_[v] >> k) & 1U) continue;
      if (!class_open(k)) continue;
      if (size_[k] == 0) {
        // empty classes are interchangeable
        if (empty_taken) continue;
        empty_taken = true;
      }
      m |= Mask{1} << k;
    }
    return m;
  }

  void place(Vertex v, int k) {
    color_[v] = k;
    if (size_[k] == base_) ++big_used_;
    ++size_[k];
    for (Vertex w : nbrs_[v]) forbid_count_add(w, k, +1);
  }
  void unplace(Vertex v, int k) {
    for (Vertex w : nbrs_[v]) forbid_count_add(w, k, -1);
    --size_[k];
    if (size_[k] == base_) --big_used_;
    color_[v] = -1;
  }
  void forbid_count_add(Vertex w, int k, int delta) {
    auto& cnt = counts_[static_cast<std::size_t>(w) * c_ + k];
    cnt += delta;
    if (cnt > 0) forbid_[w] |= Mask{1} << k;
    else forbid_[w] &= ~(Mask{1} << k);
  }

  bool solve(int assigned) {
    if (assigned == n_) return true;
    if (++nodes_ > budget_) return false;
    Vertex pick = -1;
    int best = 1 << 30;
    Mask pick_opts = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] != -1) continue;
      const Mask o = options(v);
      const int k = count(o);
      if (k == 0) return false;
      if (k < best || (k == best && g_.degree(v) > g_.degree(pick))) {
        best = k;
        pick = v;
        pick_opts = o;
      }
    }
    for (int k = 0; k < c_; ++k) {
      if (!((pick_opts >> k) & 1U)) continue;
      place(pick, k);
      if (solve(assigned + 1)) return true;
      unplace(pick, k);
      if (nodes_ > budget_) return false;
    }
    return false;
  }

 public:
  void init_counts() { counts_.assign(static_cast<std::size_t>(n_) * c_, 0); }

 private:
  const Graph& g_;
  int n_, c_, base_, big_allowed_;
  int big_used_ = 0;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> color_, size_;
  std::vector<Mask> forbid_;
  std::vector<int> counts_;
  std::vector<std::vector<Vertex>> nbrs_;
};

}  // namespace

std::optional<EquitableColoring> equitable_exact(const Graph& g, int c, const ExactColoringOptions& options) {
  const int n = g.order();
  if (c < 1) throw Error(ErrorKind::InvalidInput, "colour count must be positive");
  if (n > options.max_n)
    throw Error(ErrorKind::OracleTooLarge, "exact colouring limited to n <= " + std::to_string(options.max_n));
  if (c >= n) {
    EquitableColoring f{std::vector<int>(n), c, std::nullopt};
    std::iota(f.assignment.begin(), f.assignment.end(), 0);
    return f;
  }
  if (c > 64) throw Error(ErrorKind::OracleTooLarge, "exact colouring limited to 64 colours");
  ExactSearch s(g, c, options.node_budget);
  s.init_counts();
  if (s.run()) return EquitableColoring{s.color(), c, std::nullopt};
  if (s.exhausted()) throw Error(ErrorKind::OracleTooLarge, "exact colouring node budget exhausted");
  return std::nullopt;
}

std::string coloring_to_json(const EquitableColoring& f) {
  nlohmann::json j = nlohmann::json::array();
  for (int c : f.assignment) j.push_back(c + 1);
  return j.dump();
}

EquitableColoring coloring_from_json(std::string_view text, int colors) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("colouring JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("coloring")) j = j["coloring"];
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "colouring JSON must be an array of 1-based classes");
  EquitableColoring f;
  int hi = 0;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<int>() < 1) throw Error(ErrorKind::ParseError, "colouring classes must be integers >= 1");
    f.assignment.push_back(x.get<int>() - 1);
    hi = std::max(hi, x.get<int>());
  }
  f.colors = colors > 0 ? colors : hi;
  if (hi > f.colors) throw Error(ErrorKind::ParseError, "class index exceeds colour count");
  return f;
}

}  // namespace degseq
