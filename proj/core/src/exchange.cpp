#include "degseq/exchange.hpp"

#include <algorithm>
#include <functional>

#include "degseq/error.hpp"

namespace degseq {

FactorDecomposition::FactorDecomposition(Graph host, std::span<const Graph> factors)
    : host_(std::move(host)),
      label_(static_cast<std::size_t>(host_.order()) * host_.order(), static_cast<std::int8_t>(kLeftover)) {
  if (factors.size() > 100) throw Error(ErrorKind::InvalidInput, "too many factors");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Graph& f = factors[i];
    if (f.order() != host_.order()) throw Error(ErrorKind::InvalidInput, "factor order differs from host");
    const int r = f.order() == 0 ? 0 : f.degree(0);
    if (!f.is_regular(r)) throw Error(ErrorKind::InvalidInput, "factor " + std::to_string(i + 1) + " is not regular");
    for (const auto& [a, b] : f.edges()) {
      if (!host_.has_edge(a, b))
        throw Error(ErrorKind::InvalidInput, "factor " + std::to_string(i + 1) + " edge outside host");
      if (label_[index(a, b)] != kLeftover) throw Error(ErrorKind::InvalidInput, "factors overlap");
      label_[index(a, b)] = label_[index(b, a)] = static_cast<std::int8_t>(factor_label(static_cast<int>(i)));
    }
    factor_degrees_.push_back(r);
  }
}

FactorDecomposition FactorDecomposition::plain(Graph host) { return FactorDecomposition(std::move(host), {}); }

void FactorDecomposition::set_class(Vertex a, Vertex b, int label) {
  if (label == kComplement) {
    host_.remove_edge(a, b);
    return;
  }
  host_.add_edge(a, b);
  label_[index(a, b)] = label_[index(b, a)] = static_cast<std::int8_t>(label);
}

Graph FactorDecomposition::factor(int i) const {
  Graph g(order());
  for (const auto& [a, b] : host_.edges())
    if (label_[index(a, b)] == factor_label(i)) g.add_edge(a, b);
  return g;
}

Graph FactorDecomposition::factor_union() const {
  Graph g(order());
  for (const auto& [a, b] : host_.edges())
    if (label_[index(a, b)] >= 2) g.add_edge(a, b);
  return g;
}

Graph FactorDecomposition::leftover() const {
  Graph g(order());
  for (const auto& [a, b] : host_.edges())
    if (label_[index(a, b)] == kLeftover) g.add_edge(a, b);
  return g;
}

std::string FactorDecomposition::check() const {
  const int n = order();
  std::vector<std::vector<int>> deg(factor_count(), std::vector<int>(n, 0));
  for (const auto& [a, b] : host_.edges()) {
    const int lab = label_[index(a, b)];
    if (lab != label_[index(b, a)]) return "asymmetric label";
    if (lab == kComplement || lab < 0 || lab >= class_count()) return "host edge with invalid label";
    if (lab >= 2) {
      ++deg[lab - 2][a];
      ++deg[lab - 2][b];
    }
  }
  for (int i = 0; i < factor_count(); ++i)
    for (int v = 0; v < n; ++v)
      if (deg[i][v] != factor_degrees_[i])
        return "factor " + std::to_string(i + 1) + " not " + std::to_string(factor_degrees_[i]) + "-regular at vertex " +
               std::to_string(v + 1);
  return {};
}

bool operator==(const FactorDecomposition& x, const FactorDecomposition& y) {
  if (!(x.host_ == y.host_) || x.factor_degrees_ != y.factor_degrees_) return false;
  for (const auto& [a, b] : x.host_.edges())
    if (x.class_of(a, b) != y.class_of(a, b)) return false;
  return true;
}

std::vector<Edge> ExchangeList::edges() const {
  std::vector<Edge> out;
  for (Vertex x : internals) {
    out.emplace_back(hub_v, x);
    out.emplace_back(x, hub_u);
  }
  return out;
}

ExchangeList ExchangeList::reversed() const {
  return ExchangeList{hub_v, hub_u, internals};
}

namespace {

bool pattern_holds(const FactorDecomposition& d, Vertex u, Vertex v, const std::vector<Vertex>& xs) {
  const std::size_t q = xs.size();
  std::vector<bool> seen(d.class_count(), false);
  for (std::size_t j = 0; j < q; ++j) {
    const int c = d.class_of(xs[j], u);
    if (seen[c]) return false;
    seen[c] = true;
    if (c != d.class_of(v, xs[(j + 1) % q])) return false;
  }
  return true;
}

}  // namespace

std::string exchange_violation(const FactorDecomposition& d, const ExchangeList& l) {
  if (l.internals.empty()) return {};
  const int n = d.order();
  auto in_range = [n](Vertex x) { return x >= 0 && x < n; };
  if (!in_range(l.hub_u) || !in_range(l.hub_v) || l.hub_u == l.hub_v) return "hubs must be two distinct vertices";
  std::vector<bool> seen(n, false);
  for (Vertex x : l.internals) {
    if (!in_range(x)) return "internal vertex out of range";
    if (x == l.hub_u || x == l.hub_v) return "internal vertex coincides with a hub";
    if (seen[x]) return "internal vertices repeat";
    seen[x] = true;
  }
  if (pattern_holds(d, l.hub_u, l.hub_v, l.internals)) return {};
  if (pattern_holds(d, l.hub_v, l.hub_u, l.internals)) return {};
  return "colour pattern violated";
}

FactorDecomposition apply_colored_exchange(const FactorDecomposition& d, const ExchangeList& l) {
  if (auto why = exchange_violation(d, l); !why.empty()) throw Error(ErrorKind::InvalidExchange, why);
  FactorDecomposition out = d;
  for (Vertex x : l.internals) {
    const int to_v = d.class_of(l.hub_v, x);
    const int to_u = d.class_of(x, l.hub_u);
    out.set_class(l.hub_v, x, to_u);
    out.set_class(x, l.hub_u, to_v);
  }
  return out;
}

FactorDecomposition apply_all(const FactorDecomposition& d, std::span<const ExchangeList> lists) {
  FactorDecomposition out = d;
  for (const auto& l : lists) out = apply_colored_exchange(out, l);
  return out;
}

Graph two_swap(const Graph& g, Edge e1, Edge e2) {
  const auto [x, y] = e1;
  const auto [u, v] = e2;
  auto blocked = [&](const std::string& why) {
    return Error(ErrorKind::SwapBlocked, why + " for (" + std::to_string(x + 1) + "," + std::to_string(y + 1) + "),(" +
                                             std::to_string(u + 1) + "," + std::to_string(v + 1) + ")");
  };
  const std::vector<Vertex> all{x, y, u, v};
  for (Vertex a : all)
    if (a < 0 || a >= g.order()) throw blocked("vertex out of range");
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (all[i] == all[j]) throw blocked("endpoints not distinct");
  if (!g.has_edge(x, y) || !g.has_edge(u, v)) throw blocked("removed pair is not an edge");
  if (g.has_edge(x, u) || g.has_edge(y, v)) throw blocked("added pair is already an edge");
  Graph out = g;
  out.remove_edge(x, y);
  out.remove_edge(u, v);
  out.add_edge(x, u);
  out.add_edge(y, v);
  return out;
}

namespace {

struct ExchangeSearch {
  const FactorDecomposition& d;
  Vertex u, v;
  const ExchangeSearchOptions& opt;
  std::vector<bool> used;  // vertices claimed by other lists or blocked
  std::size_t nodes = 0;

  bool over_budget() const { return nodes > opt.node_budget; }

  bool terminal_ok(Vertex x) const {
    return opt.forbidden_terminal.empty() || !opt.forbidden_terminal[x];
  }

  // Enumerates every exchange starting at x0; visit returns true to stop.
  bool enumerate(Vertex x0, const std::function<bool(const std::vector<Vertex>&)>& visit) {
    std::vector<Vertex> path{x0};
    std::vector<bool> colour_used(d.class_count(), false);
    std::vector<bool> on_path(d.order(), false);
    on_path[x0] = true;
    const int closing = d.class_of(v, x0);
    std::function<bool()> extend = [&]() -> bool {
      if (++nodes > opt.node_budget) return true;
      const Vertex last = path.back();
      const int c = d.class_of(last, u);
      if (c == closing) {
        if (path.size() >= 2 && terminal_ok(last)) return visit(path);
        return false;
      }
      if (colour_used[c]) return false;
      colour_used[c] = true;
      for (Vertex y = 0; y < d.order(); ++y) {
        if (y == u || y == v || on_path[y] || used[y]) continue;
        if (d.class_of(v, y) != c) continue;
        const int cy = d.class_of(y, u);
        if (cy != closing && colour_used[cy]) continue;
        path.push_back(y);
        on_path[y] = true;
        const bool stop = extend();
        on_path[y] = false;
        path.pop_back();
        if (stop) {
          colour_used[c] = false;
          return true;
        }
      }
      colour_used[c] = false;
      return false;
    };
    return extend();
  }
};

}  // namespace

std::optional<ExchangeList> find_exchange(const FactorDecomposition& d, Vertex u, Vertex v, Vertex x0,
                                          const ExchangeSearchOptions& options) {
  const int n = d.order();
  if (u < 0 || v < 0 || x0 < 0 || u >= n || v >= n || x0 >= n || u == v || x0 == u || x0 == v)
    throw Error(ErrorKind::InvalidInput, "find_exchange: bad vertices");
  ExchangeSearch s{d, u, v, options, options.blocked.empty() ? std::vector<bool>(n, false) : options.blocked};
  s.used[x0] = false;
  std::optional<ExchangeList> found;
  s.enumerate(x0, [&](const std::vector<Vertex>& path) {
    found = ExchangeList{u, v, path};
    return true;
  });
  return found;
}

std::vector<ExchangeList> find_disjoint_exchanges(const FactorDecomposition& d, Vertex u, Vertex v,
                                                  std::span<const Vertex> x, const ExchangeSearchOptions& options) {
  const int n = d.order();
  if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw Error(ErrorKind::InvalidInput, "hubs must be distinct vertices");
  const Graph& h = d.host();
  if (h.degree(v) < h.degree(u)) throw Error(ErrorKind::InvalidInput, "requires deg(v) >= deg(u)");
  std::vector<bool> anchor(n, false);
  for (Vertex a : x) {
    if (a < 0 || a >= n || a == u || a == v) throw Error(ErrorKind::InvalidInput, "anchor out of range or a hub");
    if (h.has_edge(v, a) || !h.has_edge(u, a))
      throw Error(ErrorKind::InvalidInput, "anchor " + std::to_string(a + 1) + " must be a neighbour of u and not of v");
    if (anchor[a]) throw Error(ErrorKind::InvalidInput, "anchors repeat");
    anchor[a] = true;
  }
  if (x.empty()) return {};

  ExchangeSearch s{d, u, v, options, options.blocked.empty() ? std::vector<bool>(n, false) : options.blocked};
  for (int a = 0; a < n; ++a)
    if (anchor[a]) s.used[a] = true;

  std::vector<ExchangeList> chosen;
  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == x.size()) return true;
    const Vertex a = x[i];
    s.used[a] = false;
    bool done = s.enumerate(a, [&](const std::vector<Vertex>& path) {
      for (Vertex y : path) s.used[y] = true;
      chosen.push_back(ExchangeList{u, v, path});
      if (place(i + 1)) return true;
      chosen.pop_back();
      for (Vertex y : path) s.used[y] = false;
      s.used[a] = false;
      return s.over_budget();
    });
    if (!done || s.over_budget()) {
      s.used[a] = true;
      return false;
    }
    return true;
  };
  if (!place(0) || chosen.size() != x.size())
    throw Error(ErrorKind::SearchFailed, "no internally disjoint exchange system for hubs (" + std::to_string(u + 1) +
                                             "," + std::to_string(v + 1) + ") with " + std::to_string(x.size()) +
                                             " anchors (" + std::to_string(s.nodes) + " nodes searched)");
  return chosen;
}

}  // namespace degseq
