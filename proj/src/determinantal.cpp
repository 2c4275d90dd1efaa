#include "golodlab/determinantal.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "json.hpp"

namespace golod {

using nlohmann::json;

LadderMatrix::LadderMatrix(std::vector<std::vector<bool>> pattern, Field field) : pattern_(std::move(pattern)) {
  rows_ = static_cast<int>(pattern_.size());
  if (rows_ == 0) throw inputError("matrix has no rows");
  cols_ = static_cast<int>(pattern_[0].size());
  for (const auto& r : pattern_)
    if (static_cast<int>(r.size()) != cols_) throw inputError("mask rows have different lengths");
  if (rows_ > cols_) throw inputError("need rows <= cols for maximal minors");
  int prevA = -1, prevB = -1;
  for (int i = 0; i < rows_; ++i) {
    const auto& r = pattern_[static_cast<std::size_t>(i)];
    auto first = std::find(r.begin(), r.end(), true);
    if (first == r.end()) throw inputError("row " + std::to_string(i + 1) + " of the mask is empty");
    int a = static_cast<int>(first - r.begin());
    int b = cols_ - 1 - static_cast<int>(std::find(r.rbegin(), r.rend(), true) - r.rbegin());
    for (int j = a; j <= b; ++j)
      if (!r[static_cast<std::size_t>(j)]) throw inputError("row " + std::to_string(i + 1) + " is not contiguous");
    if (a < prevA || b < prevB) throw inputError("row intervals must move right going down (two-sided ladder)");
    prevA = a;
    prevB = b;
  }
  for (int j = 0; j < cols_; ++j) {
    int state = 0;  // 0 before, 1 inside, 2 after
    for (int i = 0; i < rows_; ++i) {
      bool p = pattern_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (p && state == 2) throw inputError("column " + std::to_string(j + 1) + " is not contiguous");
      if (p) state = 1;
      else if (state == 1) state = 2;
    }
  }
  std::vector<std::string> names;
  var_.assign(static_cast<std::size_t>(rows_), std::vector<long>(static_cast<std::size_t>(cols_), -1));
  bool wide = rows_ > 9 || cols_ > 9;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (present(i, j)) {
        var_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<long>(names.size());
        names.push_back("x" + std::to_string(i + 1) + (wide ? "_" : "") + std::to_string(j + 1));
      }
  ring_ = makeRing(names, field);
}

LadderMatrix LadderMatrix::generic(int rows, int cols, Field field) {
  if (rows < 1 || cols < 1) throw inputError("matrix shape must be positive");
  return LadderMatrix(std::vector<std::vector<bool>>(static_cast<std::size_t>(rows),
                                                     std::vector<bool>(static_cast<std::size_t>(cols), true)),
                      field);
}

LadderMatrix LadderMatrix::fromMask(const std::string& mask, Field field) {
  std::vector<std::vector<bool>> pattern(1);
  for (char c : mask) {
    if (c == '/') pattern.emplace_back();
    else if (c == '0' || c == '1') pattern.back().push_back(c == '1');
    else if (c != ' ') throw inputError(std::string("unexpected character '") + c + "' in mask");
  }
  return LadderMatrix(std::move(pattern), field);
}

std::optional<std::size_t> LadderMatrix::variable(int i, int j) const {
  long v = var_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  if (v < 0) return std::nullopt;
  return static_cast<std::size_t>(v);
}

Polynomial LadderMatrix::entry(int i, int j) const {
  auto v = variable(i, j);
  return v ? Polynomial::variable(ring_, *v) : Polynomial(ring_);
}

std::string LadderMatrix::maskText() const {
  std::string s;
  for (int i = 0; i < rows_; ++i) {
    if (i) s += "/";
    for (int j = 0; j < cols_; ++j) s += present(i, j) ? '1' : '0';
  }
  return s;
}

TermOrder LadderMatrix::diagonalOrder() const { return TermOrder::diagonal(ring_->nvars(), rows_, cols_); }

namespace {

Polynomial det(const LadderMatrix& x, const std::vector<int>& rows, const std::vector<int>& cols, std::size_t along) {
  if (rows.size() == 1) return x.entry(rows[0], cols[0]);
  Polynomial sum(x.ring());
  std::vector<int> restRows;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (r != along) restRows.push_back(rows[r]);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    Polynomial e = x.entry(rows[along], cols[c]);
    if (e.isZero()) continue;
    std::vector<int> restCols;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (k != c) restCols.push_back(cols[k]);
    Polynomial term = e * det(x, restRows, restCols, 0);
    sum = (along + c) % 2 == 0 ? sum + term : sum - term;
  }
  return sum;
}

}  // namespace

Polynomial minor(const LadderMatrix& x, const std::vector<int>& columns, int row) {
  if (static_cast<int>(columns.size()) != x.rows()) throw inputError("need one column per row");
  if (row < 0 || row >= x.rows()) throw inputError("expansion row out of range");
  std::vector<int> rows(static_cast<std::size_t>(x.rows()));
  for (int i = 0; i < x.rows(); ++i) rows[static_cast<std::size_t>(i)] = i;
  return det(x, rows, columns, static_cast<std::size_t>(row));
}

std::vector<Polynomial> maximalMinors(const LadderMatrix& x) {
  std::vector<Polynomial> out;
  std::vector<int> cols;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cols.size()) == x.rows()) {
      Polynomial p = minor(x, cols);
      if (!p.isZero()) out.push_back(std::move(p));
      return;
    }
    for (int j = from; j < x.cols(); ++j) {
      cols.push_back(j);
      rec(j + 1);
      cols.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<Polynomial> idealPower(const std::vector<Polynomial>& ideal, int t) {
  if (t < 1) throw inputError("power must be at least 1");
  std::vector<Polynomial> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(pick.size()) == t) {
      Polynomial p = ideal[pick[0]];
      for (std::size_t k = 1; k < pick.size(); ++k) p = p * ideal[pick[k]];
      if (!p.isZero()) out.push_back(std::move(p));
      return;
    }
    for (std::size_t g = from; g < ideal.size(); ++g) {
      pick.push_back(g);
      rec(g);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<TermOrder> sampleOrders(const LadderMatrix& x, int randomLex, unsigned seed) {
  const std::size_t n = x.ring()->nvars();
  std::vector<TermOrder> out{x.diagonalOrder(), TermOrder::grevlex(n)};
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> identity(n);
  for (std::size_t k = 0; k < n; ++k) identity[k] = k;
  seen.insert(identity);  // same as the diagonal order
  std::mt19937 rng(seed);
  int attempts = 0;
  while (static_cast<int>(out.size()) < randomLex + 2 && attempts++ < 1000) {
    auto perm = identity;
    std::shuffle(perm.begin(), perm.end(), rng);
    if (!seen.insert(perm).second) continue;
    out.push_back(TermOrder::lex(perm));
  }
  return out;
}

namespace {

// One variable from each row, all in distinct columns.
bool isTransversal(const LadderMatrix& x, const Monomial& m) {
  if (m.degree() != x.rows() || !m.isSquarefree()) return false;
  std::set<int> rows, cols;
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) {
      auto v = x.variable(i, j);
      if (v && m[*v]) {
        rows.insert(i);
        cols.insert(j);
      }
    }
  return static_cast<int>(rows.size()) == x.rows() && static_cast<int>(cols.size()) == x.rows();
}

}  // namespace

SparseReport verifySparseTheorems(const LadderMatrix& x, int tMax, const std::vector<TermOrder>& orders,
                                  const GolodConfig& config) {
  if (x.rows() > 3 || x.cols() > 5 || tMax > 3)
    throw capError("desk-scale bounds exceeded: need rows <= 3, cols <= 5, tMax <= 3");
  if (tMax < 1) throw inputError("tMax must be at least 1");
  SparseReport r;
  r.mask = x.maskText();
  r.rows = x.rows();
  r.cols = x.cols();
  r.tMax = tMax;
  std::vector<Polynomial> minors = maximalMinors(x);
  r.minorCount = minors.size();
  if (minors.empty()) throw inputError("every maximal minor vanishes");
  bool pass = true;
  for (const auto& order : orders) {
    SparseOrderCheck c;
    c.order = order.describe(*x.ring());
    c.groebner = isGroebnerBasis(minors, order);
    c.transversalLeads = std::all_of(minors.begin(), minors.end(), [&](const Polynomial& p) {
      return isTransversal(x, p.leadingTerm(order).mono);
    });
    FiberInvariance fib = fiberInvariant(buchberger(minors, order));
    c.fiberInvariant = fib.invariant;
    c.fiberReason = fib.reason;
    if (!c.groebner) r.findings.push_back("minors are not a Groebner basis under " + c.order);
    pass = pass && c.groebner && c.transversalLeads && c.fiberInvariant;
    r.orders.push_back(std::move(c));
  }

  TermOrder diag = x.diagonalOrder();
  GroebnerBasis gb1 = buchberger(minors, diag);
  MonomialIdeal in1 = gb1.leadingIdeal();
  std::vector<int> rowColor(x.ring()->nvars());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      if (auto v = x.variable(i, j)) rowColor[*v] = i;
  RainbowSearch rs = rainbowDetect(in1, rowColor);
  r.rainbowRows = rs.outcome == RainbowSearch::Outcome::Found;
  pass = pass && r.rainbowRows;

  for (int t = 1; t <= tMax; ++t) {
    SparsePowerCheck p;
    p.t = t;
    std::vector<Polynomial> power = idealPower(minors, t);
    GroebnerBasis gbt = buchberger(power, diag);
    MonomialIdeal target = in1.power(t);
    p.initialIsPower = gbt.leadingIdeal() == target;
    p.linear = hasLinearResolution(target);
    FiberInvariance fib = fiberInvariant(gbt);
    p.fiberInvariant = fib.invariant;
    p.fiberReason = fib.reason;
    p.certificate = golodCertificate(power, diag, config);
    p.golodClass = p.certificate.verdict != GolodCertificate::Verdict::NotGolod;
    pass = pass && p.initialIsPower && p.linear && p.fiberInvariant && p.golodClass;
    r.powers.push_back(std::move(p));
  }
  r.allPass = pass;
  return r;
}

std::string sparseReportJson(const SparseReport& r) {
  json j;
  j["matrix"] = {{"rows", r.rows}, {"cols", r.cols}, {"mask", r.mask}};
  j["tMax"] = r.tMax;
  j["minors"] = r.minorCount;
  json orders = json::array();
  for (const auto& o : r.orders)
    orders.push_back({{"order", o.order},
                      {"groebner", o.groebner},
                      {"transversalLeads", o.transversalLeads},
                      {"fiberInvariant", o.fiberInvariant},
                      {"fiberReason", o.fiberReason}});
  j["orders"] = orders;
  j["ordersSampled"] = r.orders.size();
  j["rainbowRows"] = r.rainbowRows;
  json powers = json::array();
  for (const auto& p : r.powers)
    powers.push_back({{"t", p.t},
                      {"initialIsPower", p.initialIsPower},
                      {"linear", p.linear},
                      {"fiberInvariant", p.fiberInvariant},
                      {"fiberReason", p.fiberReason},
                      {"verdict", verdictName(p.certificate.verdict)},
                      {"rule", p.certificate.rule.empty() ? json(nullptr) : json(p.certificate.rule)},
                      {"chain", p.certificate.chain},
                      {"golodClass", p.golodClass}});
  j["powers"] = powers;
  j["allPass"] = r.allPass;
  j["findings"] = r.findings;
  return j.dump(2);
}

}  // namespace golod
