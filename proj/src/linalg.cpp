#include "golodlab/linalg.hpp"

namespace golod {

SparseVec axpy(const Field& f, const SparseVec& x, const Scalar& a, const SparseVec& y) {
  SparseVec out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      Scalar v = f.mul(a, y[j].second);
      if (v != 0) out.emplace_back(y[j].first, std::move(v));
      ++j;
    } else {
      Scalar v = f.add(x[i].second, f.mul(a, y[j].second));
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec scale(const Field& f, const SparseVec& x, const Scalar& a) {
  SparseVec out;
  if (a == 0) return out;
  out.reserve(x.size());
  for (const auto& [k, v] : x) out.emplace_back(k, f.mul(v, a));
  return out;
}

SparseVec unitVector(int index) { return SparseVec{{index, Scalar(1)}}; }

Echelon::Reduction Echelon::reduce(const SparseVec& v, const SparseVec& tag) const {
  Reduction r{v, tag};
  if (rows_.empty()) return r;
  // Entries below `cursor` are final: rows only add indices above their pivot.
  std::size_t cursor = 0;
  while (cursor < r.remainder.size()) {
    int idx = r.remainder[cursor].first;
    auto it = rows_.find(idx);
    if (it == rows_.end()) {
      ++cursor;
      continue;
    }
    Scalar c = r.remainder[cursor].second;
    Scalar minus = field_.neg(c);
    r.remainder = axpy(field_, r.remainder, minus, it->second.vec);
    if (!it->second.tag.empty() || !r.tag.empty()) r.tag = axpy(field_, r.tag, minus, it->second.tag);
  }
  return r;
}

bool Echelon::insert(const SparseVec& v, const SparseVec& tag, SparseVec* relation) {
  Reduction r = reduce(v, tag);
  if (r.remainder.empty()) {
    if (relation) *relation = std::move(r.tag);
    return false;
  }
  Scalar inv = field_.inv(r.remainder.front().second);
  int pivot = r.remainder.front().first;
  rows_.emplace(pivot, Row{scale(field_, r.remainder, inv), scale(field_, r.tag, inv)});
  return true;
}

bool Echelon::solve(const SparseVec& v, SparseVec& preimage) const {
  Reduction r = reduce(v, {});
  if (!r.remainder.empty()) return false;
  preimage = scale(field_, r.tag, field_.neg(Scalar(1)));
  return true;
}

std::size_t rankOf(const Field& field, const std::vector<SparseVec>& columns) {
  Echelon e(field);
  for (const auto& c : columns) e.insert(c);
  return e.rank();
}

std::vector<SparseVec> kernelOf(const Field& field, const std::vector<SparseVec>& columns) {
  Echelon e(field);
  std::vector<SparseVec> out;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    SparseVec rel;
    if (!e.insert(columns[j], unitVector(static_cast<int>(j)), &rel)) out.push_back(std::move(rel));
  }
  return out;
}

}  // namespace golod
