#pragma once

#include <map>
#include <utility>
#include <vector>

#include "golodlab/field.hpp"

namespace golod {

/// Sparse vector: strictly increasing indices, no zero entries.
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec axpy(const Field& f, const SparseVec& x, const Scalar& a, const SparseVec& y);  // x + a*y
SparseVec scale(const Field& f, const SparseVec& x, const Scalar& a);
SparseVec unitVector(int index);

/// Incremental row echelon form over a field. Each stored row can carry a tag
/// vector recording the combination of inputs it came from, which is what
/// turns rank computations into kernel and preimage computations.
class Echelon {
 public:
  explicit Echelon(Field field) : field_(field) {}

  struct Reduction {
    SparseVec remainder;
    SparseVec tag;  // input tag minus the tags of the subtracted rows
  };

  Reduction reduce(const SparseVec& v, const SparseVec& tag = {}) const;
  bool inSpan(const SparseVec& v) const { return reduce(v).remainder.empty(); }

  /// Adds v to the span. Returns false (and the kernel relation in `relation`
  /// when requested) if v was dependent.
  bool insert(const SparseVec& v, const SparseVec& tag = {}, SparseVec* relation = nullptr);

  /// Tag combination x with sum_i x_i * input_i = v, or nullopt-like failure
  /// signalled by returning false.
  bool solve(const SparseVec& v, SparseVec& preimage) const;

  std::size_t rank() const { return rows_.size(); }
  const Field& field() const { return field_; }

 private:
  struct Row {
    SparseVec vec;
    SparseVec tag;
  };
  Field field_;
  std::map<int, Row> rows_;  // keyed by pivot (smallest index, coefficient 1)
};

/// Rank of the matrix whose columns are the given vectors.
std::size_t rankOf(const Field& field, const std::vector<SparseVec>& columns);

/// Basis of {x : sum_j x_j * columns[j] = 0}, as vectors over column ids.
std::vector<SparseVec> kernelOf(const Field& field, const std::vector<SparseVec>& columns);

}  // namespace golod
