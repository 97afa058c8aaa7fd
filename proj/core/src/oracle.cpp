#include "degseq/oracle.hpp"

#include <chrono>
#include <string>

#include "degseq/coloring.hpp"
#include "degseq/error.hpp"

namespace degseq {

namespace {

class Meter {
 public:
  explicit Meter(const OracleBudget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

  void tick() {
    if (++nodes_ > budget_.node_budget) throw Error(ErrorKind::OracleTooLarge, "oracle node budget exhausted");
    if (budget_.max_seconds > 0 && (nodes_ & 0xfff) == 0) {
      const std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start_;
      if (spent.count() > budget_.max_seconds) throw Error(ErrorKind::OracleTooLarge, "oracle time budget exhausted");
    }
  }

 private:
  const OracleBudget& budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
};

void require_n(int n, int cap, const char* what) {
  if (n > cap)
    throw Error(ErrorKind::OracleTooLarge,
                std::string(what) + ": n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

struct Enumerator {
  int n;
  std::vector<int> need;
  Graph g;
  const std::function<bool(const Graph&)>& visit;
  Meter meter;
  std::uint64_t found = 0;
  bool stop = false;

  // pair (i, j) with i < j; row i closes when j == n
  void run(int i, int j) {
    if (stop) return;
    meter.tick();
    if (i == n) {
      ++found;
      if (!visit(g)) stop = true;
      return;
    }
    if (j == n) {
      if (need[i] == 0) run(i + 1, i + 2);
      return;
    }
    if (need[i] > n - j) return;
    if (need[i] > 0 && need[j] > 0) {
      --need[i];
      --need[j];
      g.add_edge(i, j);
      run(i, j + 1);
      g.remove_edge(i, j);
      ++need[i];
      ++need[j];
    }
    if (need[i] <= n - j - 1) run(i, j + 1);
  }
};

struct FactorSearch {
  const Graph& g;
  int n;
  std::vector<int> need;
  Graph f;
  Meter meter;

  // fills vertex i's remaining need from neighbours j > i
  bool run(int i) {
    meter.tick();
    while (i < n && need[i] == 0) ++i;
    if (i == n) return true;
    std::vector<Vertex> cand;
    for (Vertex j : g.neighbors(i))
      if (j > i && need[j] > 0) cand.push_back(j);
    if (static_cast<int>(cand.size()) < need[i]) return false;
    return choose(i, cand, 0);
  }

  bool choose(int i, const std::vector<Vertex>& cand, std::size_t from) {
    if (need[i] == 0) return run(i + 1);
    if (cand.size() - from < static_cast<std::size_t>(need[i])) return false;
    for (std::size_t p = from; p < cand.size(); ++p) {
      const Vertex j = cand[p];
      if (need[j] == 0) continue;
      --need[i];
      --need[j];
      f.add_edge(i, j);
      if (choose(i, cand, p + 1)) return true;
      f.remove_edge(i, j);
      ++need[i];
      ++need[j];
    }
    return false;
  }
};

}  // namespace

std::uint64_t enumerate_realizations(const DegreeSequence& pi, const std::function<bool(const Graph&)>& visit,
                                     const OracleBudget& budget) {
  const int n = static_cast<int>(pi.size());
  require_n(n, budget.max_n, "enumerate_realizations");
  if (pi.degree_sum() % 2 != 0) return 0;
  Enumerator e{n, pi.vector(), Graph(n), visit, Meter(budget)};
  if (n == 0) {
    visit(e.g);
    return 1;
  }
  e.run(0, 1);
  return e.found;
}

std::uint64_t count_realizations(const DegreeSequence& pi, const OracleBudget& budget) {
  return enumerate_realizations(pi, [](const Graph&) { return true; }, budget);
}

std::optional<Graph> find_k_factor(const Graph& g, int k, const OracleBudget& budget) {
  const int n = g.order();
  require_n(n, std::max(budget.max_n, 16), "has_k_factor");
  if (k < 0) throw Error(ErrorKind::InvalidInput, "k must be non-negative");
  if (k == 0) return Graph(n);
  if (k > g.min_degree() || (static_cast<long long>(k) * n) % 2 != 0) return std::nullopt;
  FactorSearch s{g, n, std::vector<int>(n, k), Graph(n), Meter(budget)};
  if (s.run(0)) return s.f;
  return std::nullopt;
}

bool has_k_factor(const Graph& g, int k, const OracleBudget& budget) {
  return find_k_factor(g, k, budget).has_value();
}

std::optional<RealizationWithFactor> find_realization_with_kfactor(const DegreeSequence& pi, int k,
                                                                   const OracleBudget& budget) {
  std::optional<RealizationWithFactor> out;
  enumerate_realizations(
      pi,
      [&](const Graph& g) {
        if (auto f = find_k_factor(g, k, budget)) {
          out = RealizationWithFactor{g, *f};
          return false;
        }
        return true;
      },
      budget);
  return out;
}

bool exists_realization_with_kfactor(const DegreeSequence& pi, int k, const OracleBudget& budget) {
  return find_realization_with_kfactor(pi, k, budget).has_value();
}

int min_equitable_colors(const Graph& g, const OracleBudget& budget) {
  const int n = g.order();
  require_n(n, budget.coloring_max_n, "min_equitable_colors");
  if (n == 0) return 0;
  ExactColoringOptions opts;
  opts.max_n = budget.coloring_max_n;
  opts.node_budget = budget.node_budget;
  for (int c = g.edge_count() == 0 ? 1 : 2; c <= n; ++c)
    if (equitable_exact(g, c, opts)) return c;
  return n;
}

}  // namespace degseq
