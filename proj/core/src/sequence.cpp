#include "degseq/sequence.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "degseq/error.hpp"

namespace degseq {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidDegree: return "InvalidDegree";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::CriterionFails: return "CriterionFails";
    case ErrorKind::InvalidEdge: return "InvalidEdge";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::InvalidCut: return "InvalidCut";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SwapBlocked: return "SwapBlocked";
    case ErrorKind::InvalidExchange: return "InvalidExchange";
    case ErrorKind::SearchFailed: return "SearchFailed";
    case ErrorKind::OracleTooLarge: return "OracleTooLarge";
    case ErrorKind::RepairStuck: return "RepairStuck";
    case ErrorKind::NotGraphic: return "NotGraphic";
    case ErrorKind::ParityError: return "ParityError";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::ForbiddenGraph: return "ForbiddenGraph";
    case ErrorKind::ForbiddenSequence: return "ForbiddenSequence";
    case ErrorKind::PackingFailed: return "PackingFailed";
    case ErrorKind::SearchStalled: return "SearchStalled";
  }
  return "Unknown";
}

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  const int n = static_cast<int>(degrees_.size());
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (degrees_[i] < 0) throw Error(ErrorKind::InvalidDegree, "negative degree at position " + std::to_string(i + 1));
    if (degrees_[i] >= n && degrees_[i] > 0)
      throw Error(ErrorKind::NotSimple, "degree " + std::to_string(degrees_[i]) + " >= n = " + std::to_string(n));
    if (i > 0 && degrees_[i] > degrees_[i - 1])
      throw Error(ErrorKind::InvalidInput, "degree sequence must be non-increasing");
  }
}

long long DegreeSequence::degree_sum() const noexcept {
  return std::accumulate(degrees_.begin(), degrees_.end(), 0LL);
}

std::ostream& operator<<(std::ostream& os, const DegreeSequence& pi) {
  os << '(';
  for (std::size_t i = 0; i < pi.size(); ++i) os << (i ? "," : "") << pi[i];
  return os << ')';
}

std::string to_string(const DegreeSequence& pi) {
  std::ostringstream os;
  os << pi;
  return os.str();
}

DegreeSequence normalize(std::span<const int> raw) {
  std::vector<int> d(raw.begin(), raw.end());
  const int n = static_cast<int>(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0) throw Error(ErrorKind::InvalidDegree, "negative degree at position " + std::to_string(i + 1));
    if (d[i] >= n && d[i] > 0)
      throw Error(ErrorKind::NotSimple, "degree " + std::to_string(d[i]) + " >= n = " + std::to_string(n));
  }
  std::sort(d.begin(), d.end(), std::greater<>());
  return DegreeSequence(std::move(d));
}

int strong_index(std::span<const int> d) {
  int m = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] >= static_cast<int>(i + 1)) m = static_cast<int>(i + 1);
    else break;
  }
  return m;
}

int strong_index(const DegreeSequence& pi) { return strong_index(pi.values()); }

namespace {

// d is sorted non-increasing with entries in [0, n-1]. Checks l = 1..limit.
bool erdos_gallai(std::span<const int> d, int limit) {
  const int n = static_cast<int>(d.size());
  long long total = 0;
  for (int x : d) total += x;
  if (total % 2 != 0) return false;

  // suffix[j] = sum of d over 0-based indices >= j
  std::vector<long long> suffix(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + d[i];

  long long prefix = 0;
  int p = n;  // number of entries with d_i >= l
  for (int l = 1; l <= limit; ++l) {
    prefix += d[l - 1];
    while (p > 0 && d[p - 1] < l) --p;
    const int head_end = std::max(p, l);
    const long long rhs = static_cast<long long>(l) * (l - 1) +
                          static_cast<long long>(l) * (head_end - l) + suffix[head_end];
    if (prefix > rhs) return false;
  }
  return true;
}

bool sorted_valid(std::vector<int>& d) {
  const int n = static_cast<int>(d.size());
  for (int x : d)
    if (x < 0 || (x >= n && x > 0)) return false;
  std::sort(d.begin(), d.end(), std::greater<>());
  return true;
}

}  // namespace

bool is_graphic(const DegreeSequence& pi) { return erdos_gallai(pi.values(), strong_index(pi)); }

bool is_graphic(std::span<const int> raw) {
  std::vector<int> d(raw.begin(), raw.end());
  if (!sorted_valid(d)) return false;
  return erdos_gallai(d, strong_index(d));
}

bool is_graphic_full(std::span<const int> raw) {
  std::vector<int> d(raw.begin(), raw.end());
  if (!sorted_valid(d)) return false;
  const int n = static_cast<int>(d.size());
  long long total = 0;
  for (int x : d) total += x;
  if (total % 2 != 0) return false;
  for (int l = 1; l <= n; ++l) {
    long long lhs = 0, rhs = static_cast<long long>(l) * (l - 1);
    for (int i = 0; i < l; ++i) lhs += d[i];
    for (int i = l; i < n; ++i) rhs += std::min(l, d[i]);
    if (lhs > rhs) return false;
  }
  return true;
}

std::vector<int> shift(std::span<const int> pi, int k) {
  std::vector<int> out(pi.begin(), pi.end());
  for (int& x : out) x -= k;
  return out;
}

int gamma_bound(const DegreeSequence& pi) {
  if (!pi.is_positive()) throw Error(ErrorKind::InvalidInput, "gamma bound needs a positive sequence");
  const int m = strong_index(pi);
  int best = 0;
  for (int l = 1; l <= m; ++l) best = std::max(best, (pi.d(l) + l) / 2);
  return best + 1;
}

KFactorCriterion kfactor_condition(const DegreeSequence& pi, FactorSpec spec) {
  if (pi.empty()) throw Error(ErrorKind::InvalidInput, "empty sequence");
  if (spec.k < 0 || spec.k > pi.min_degree())
    throw Error(ErrorKind::InvalidInput, "k must satisfy 0 <= k <= d_n");
  if (!spec.parity_ok(pi.size())) throw Error(ErrorKind::InvalidInput, "k*n must be even");

  KFactorCriterion c;
  const int spread = pi.max_degree() - pi.min_degree();
  c.index = spread + 1;
  c.rhs = spread + spec.k - 1;
  c.applicable = c.index >= 1 && c.index <= static_cast<int>(pi.size());
  if (!c.applicable) return c;
  c.lhs = pi.d(static_cast<std::size_t>(c.index));
  c.holds = c.lhs >= c.rhs;
  return c;
}

int max_even_k(const DegreeSequence& pi, int k) {
  const auto base = kfactor_condition(pi, FactorSpec{k});
  if (!base.applicable || !base.holds)
    throw Error(ErrorKind::CriterionFails, "criterion does not hold at k = " + std::to_string(k));
  const int spread = pi.max_degree() - pi.min_degree();
  // criterion <=> k' <= lhs - spread + 1; also capped by d_n
  int hi = std::min(pi.min_degree(), base.lhs - spread + 1);
  const bool odd_n = pi.size() % 2 == 1;
  for (int kp = hi; kp >= k; --kp)
    if (!odd_n || kp % 2 == 0) return kp;
  return k;
}

SequenceProfile profile(const DegreeSequence& pi) {
  SequenceProfile p;
  p.m = strong_index(pi);
  p.delta1 = pi.max_degree();
  p.delta_n = pi.min_degree();
  p.degree_sum = pi.degree_sum();
  if (pi.is_positive()) p.gamma_min = gamma_bound(pi);
  return p;
}

std::vector<int> parse_sequence_line(const std::string& line) {
  std::string cleaned = line;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream ss(cleaned);
  std::vector<int> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "not an integer: '" + tok + "'");
    }
    if (used != tok.size()) throw Error(ErrorKind::ParseError, "not an integer: '" + tok + "'");
    out.push_back(value);
  }
  return out;
}

std::vector<std::vector<int>> parse_sequences(std::istream& in) {
  std::vector<std::vector<int>> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(parse_sequence_line(line));
  }
  return out;
}

}  // namespace degseq
