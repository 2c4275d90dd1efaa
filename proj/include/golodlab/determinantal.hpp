#pragma once

#include <optional>
#include <string>
#include <vector>

#include "golodlab/golod.hpp"

namespace golod {

/// n x m matrix whose nonzero entries are distinct variables x{i}{j}
/// (1-based) on a two-sided ladder pattern.
class LadderMatrix {
 public:
  /// Every entry present.
  static LadderMatrix generic(int rows, int cols, Field field = Field::rationals());
  /// "111/011": one 0/1 string per row.
  static LadderMatrix fromMask(const std::string& mask, Field field = Field::rationals());
  /// Checks the shape: rows <= cols, and in every row and column the present
  /// cells are contiguous with row intervals [a_i, b_i] where a_i and b_i
  /// never decrease going down. Throws inputError otherwise.
  LadderMatrix(std::vector<std::vector<bool>> pattern, Field field);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const RingPtr& ring() const { return ring_; }
  bool present(int i, int j) const { return pattern_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  /// Ring variable at (i, j), or nullopt for a zero entry.
  std::optional<std::size_t> variable(int i, int j) const;
  Polynomial entry(int i, int j) const;
  std::string maskText() const;
  /// Diagonal term order: lex with variables read row by row.
  TermOrder diagonalOrder() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::vector<bool>> pattern_;
  std::vector<std::vector<long>> var_;
  RingPtr ring_;
};

/// Determinant of the submatrix on the given columns, Laplace expansion along `row`.
Polynomial minor(const LadderMatrix& x, const std::vector<int>& columns, int row = 0);

/// All nonzero rows x rows minors, column sets in lexicographic order.
std::vector<Polynomial> maximalMinors(const LadderMatrix& x);

/// All products of t generators (with repetition), zero products dropped.
std::vector<Polynomial> idealPower(const std::vector<Polynomial>& ideal, int t);

/// Diagonal order, grevlex, then `randomLex` lex orders on seeded random
/// variable permutations (duplicates skipped).
std::vector<TermOrder> sampleOrders(const LadderMatrix& x, int randomLex = 8, unsigned seed = 1);

struct SparseOrderCheck {
  std::string order;
  bool groebner = false;           // (a) minors form a Groebner basis
  bool transversalLeads = false;   // leading terms are products of diagonals
  bool fiberInvariant = false;     // (d)
  std::string fiberReason;
};

struct SparsePowerCheck {
  int t = 0;
  bool initialIsPower = false;     // (b) in(I^t) = in(I)^t
  bool linear = false;             // (c) in(I)^t has linear resolution
  bool fiberInvariant = false;
  std::string fiberReason;
  GolodCertificate certificate;    // (e)
  bool golodClass = false;
};

struct SparseReport {
  std::string mask;
  int rows = 0;
  int cols = 0;
  int tMax = 0;
  std::size_t minorCount = 0;
  std::vector<SparseOrderCheck> orders;
  bool rainbowRows = false;  // diagonal in(I) is rainbow with colors = rows
  std::vector<SparsePowerCheck> powers;
  bool allPass = false;
  std::vector<std::string> findings;
};

/// Checks (a)-(e) at desk scale: rows <= 3, cols <= 5, tMax <= 3.
SparseReport verifySparseTheorems(const LadderMatrix& x, int tMax, const std::vector<TermOrder>& orders,
                                  const GolodConfig& config = {});

std::string sparseReportJson(const SparseReport& r);

}  // namespace golod
