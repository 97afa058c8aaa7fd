#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace degseq {

/// A non-increasing list of vertex degrees d_1 >= ... >= d_n with every
/// entry in [0, n-1]. Construction validates; use normalize() for raw input.
class DegreeSequence {
 public:
  DegreeSequence() = default;
  explicit DegreeSequence(std::vector<int> degrees);

  std::size_t size() const noexcept { return degrees_.size(); }
  bool empty() const noexcept { return degrees_.empty(); }

  /// 0-based access; d(i) is the 1-based d_i.
  int operator[](std::size_t i) const { return degrees_[i]; }
  int d(std::size_t one_based) const { return degrees_.at(one_based - 1); }

  int max_degree() const noexcept { return degrees_.empty() ? 0 : degrees_.front(); }
  int min_degree() const noexcept { return degrees_.empty() ? 0 : degrees_.back(); }
  long long degree_sum() const noexcept;
  bool is_positive() const noexcept { return !degrees_.empty() && degrees_.back() > 0; }

  std::span<const int> values() const noexcept { return degrees_; }
  const std::vector<int>& vector() const noexcept { return degrees_; }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> degrees_;
};

std::ostream& operator<<(std::ostream& os, const DegreeSequence& pi);
std::string to_string(const DegreeSequence& pi);

struct SequenceProfile {
  int m = 0;
  int delta1 = 0;
  int delta_n = 0;
  long long degree_sum = 0;
  /// Smallest colour count guaranteed by the equitable-colouring bound;
  /// empty when the sequence is not positive.
  std::optional<int> gamma_min;
};

struct FactorSpec {
  int k = 0;
  bool parity_ok(std::size_t n) const noexcept { return (static_cast<long long>(k) * static_cast<long long>(n)) % 2 == 0; }
};

/// Sorts into non-increasing order. Throws InvalidDegree on a negative entry
/// and NotSimple on an entry >= n.
DegreeSequence normalize(std::span<const int> raw);

/// Parity plus Erdos-Gallai, checking only l <= m(pi).
bool is_graphic(const DegreeSequence& pi);

/// Same test on a raw list (for example the output of shift); negative
/// entries or entries >= n make it non-graphic. Order does not matter.
bool is_graphic(std::span<const int> raw);

/// Reference Erdos-Gallai over every l in 1..n. Quadratic; kept for checks.
bool is_graphic_full(std::span<const int> raw);

/// m(pi) = max{i : d_i >= i}; 0 for the all-zero sequence.
int strong_index(const DegreeSequence& pi);
int strong_index(std::span<const int> nonincreasing);

/// (d_1 - k, ..., d_n - k); entries may go negative.
std::vector<int> shift(std::span<const int> pi, int k);
inline std::vector<int> shift(const DegreeSequence& pi, int k) { return shift(pi.values(), k); }

/// max_{l <= m} floor((d_l + l) / 2) + 1. Throws InvalidInput unless positive.
int gamma_bound(const DegreeSequence& pi);

struct KFactorCriterion {
  bool applicable = false;  ///< index d_1 - d_n + 1 lies within 1..n
  bool holds = false;
  int index = 0;  ///< d_1 - d_n + 1 (1-based)
  int lhs = 0;    ///< d_{d_1 - d_n + 1}
  int rhs = 0;    ///< d_1 - d_n + k - 1
};

/// Evaluates d_{d1-dn+1} >= d1 - dn + k - 1. Throws InvalidInput when k < 0,
/// k > d_n or k*n is odd. An out-of-range index yields applicable == false.
KFactorCriterion kfactor_condition(const DegreeSequence& pi, FactorSpec spec);

/// Largest k' >= k with k' <= d_n, k'*n even and the criterion holding at k'.
/// Throws CriterionFails when the criterion does not hold at k.
int max_even_k(const DegreeSequence& pi, int k);

SequenceProfile profile(const DegreeSequence& pi);

/// One sequence per line, integers separated by commas and/or whitespace.
/// Blank lines and lines starting with '#' are skipped. Entries are returned
/// raw (unsorted, unvalidated); ParseError on non-integer tokens.
std::vector<std::vector<int>> parse_sequences(std::istream& in);
std::vector<int> parse_sequence_line(const std::string& line);

}  // namespace degseq
