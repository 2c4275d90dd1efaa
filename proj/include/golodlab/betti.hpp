#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace golod {

/// Graded Betti numbers beta_{i,j} of a cyclic module R/I.
class BettiTable {
 public:
  long get(int i, int j) const;
  void set(int i, int j, long value);
  void add(int i, int j, long value) { set(i, j, get(i, j) + value); }

  const std::map<std::pair<int, int>, long>& entries() const { return entries_; }
  int projectiveDimension() const;
  /// sum_j beta_{i,j} for i = 0..pd.
  std::vector<long> totals() const;

  /// Every entry of *this is <= the matching entry of `other`.
  bool entrywiseLeq(const BettiTable& other) const;
  bool operator==(const BettiTable& other) const { return entries_ == other.entries_; }

  /// Macaulay2-style grid: columns i, rows j - i.
  std::string toGrid() const;

 private:
  std::map<std::pair<int, int>, long> entries_;  // only non-zero values
};

}  // namespace golod
