#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pdlab/groebner/hilbert.hpp"

namespace pdlab {

/// Graded Betti numbers beta_{i,j}: rank of the degree-j generators of the
/// i-th module of a minimal free resolution. Only nonzero entries are stored.
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(std::map<std::pair<int, int>, std::int64_t> entries);

  /// Sets beta_{i,j}; zero erases. Negative values are rejected.
  void set(int i, int j, std::int64_t value);
  std::int64_t at(int i, int j) const;
  const std::map<std::pair<int, int>, std::int64_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Column sums, indexed by homological degree 0..pd.
  std::vector<std::int64_t> totals() const;
  /// (i, j, beta) in increasing (i, j).
  std::vector<std::tuple<int, int, std::int64_t>> triples() const;

  /// A truncated table is exact only for internal degrees up to the limit.
  bool complete() const { return !truncated_at_; }
  std::optional<int> truncated_at() const { return truncated_at_; }
  void mark_truncated(int degree_limit) { truncated_at_ = degree_limit; }

  /// Rows indexed by j - i, columns by i, "-" for zero, with a total row.
  std::string to_text() const;

  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.entries_ == b.entries_; }

 private:
  std::map<std::pair<int, int>, std::int64_t> entries_;
  std::optional<int> truncated_at_;
};

/// max{i : beta_{i,j} != 0}; DomainError on a truncated table.
int pd_of(const BettiTable& table);
/// max{j - i : beta_{i,j} != 0}; DomainError on a truncated table.
int reg_of(const BettiTable& table);

/// sum_{i,j} (-1)^i beta_{i,j} t^j == N(t) coefficientwise.
bool hilbert_crosscheck(const BettiTable& table, const HilbertNumerator& numerator);

}  // namespace pdlab
