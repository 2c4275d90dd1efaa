#include "golodlab/betti.hpp"

#include <algorithm>
#include <sstream>

namespace golod {

long BettiTable::get(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(int i, int j, long value) {
  if (value == 0)
    entries_.erase({i, j});
  else
    entries_[{i, j}] = value;
}

int BettiTable::projectiveDimension() const {
  int pd = 0;
  for (const auto& [k, v] : entries_) pd = std::max(pd, k.first);
  return pd;
}

std::vector<long> BettiTable::totals() const {
  std::vector<long> out(static_cast<std::size_t>(projectiveDimension()) + 1, 0);
  for (const auto& [k, v] : entries_) out[static_cast<std::size_t>(k.first)] += v;
  return out;
}

bool BettiTable::entrywiseLeq(const BettiTable& other) const {
  for (const auto& [k, v] : entries_)
    if (v > other.get(k.first, k.second)) return false;
  return true;
}

std::string BettiTable::toGrid() const {
  if (entries_.empty()) return "(empty)\n";
  int pd = projectiveDimension();
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& [k, v] : entries_) {
    int r = k.second - k.first;
    if (first || r < lo) lo = r;
    if (first || r > hi) hi = r;
    first = false;
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> labels;
  std::vector<std::string> header{""};
  for (int i = 0; i <= pd; ++i) header.push_back(std::to_string(i));
  std::vector<std::string> total{"total:"};
  for (long t : totals()) total.push_back(std::to_string(t));
  cells.push_back(header);
  cells.push_back(total);
  for (int r = lo; r <= hi; ++r) {
    std::vector<std::string> row{std::to_string(r) + ":"};
    for (int i = 0; i <= pd; ++i) {
      long v = get(i, i + r);
      row.push_back(v == 0 ? "." : std::to_string(v));
    }
    cells.push_back(row);
  }
  std::vector<std::size_t> width(static_cast<std::size_t>(pd) + 2, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) os << ' ';
      os << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace golod
