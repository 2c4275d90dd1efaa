#include "golodlab/poly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace golod {

Field Field::prime(std::uint32_t p) {
  if (p < 2 || p >= (1u << 31)) throw inputError("characteristic must be a prime below 2^31");
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw inputError(std::to_string(p) + " is not prime");
  return Field(p);
}

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw internalError("division by zero");
  if (p_ == 0) return 1 / a;
  mpz_class inv;
  mpz_class mod = p_;
  mpz_class num = a.get_num();
  mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t());
  return Scalar(inv);
}

// ---------------------------------------------------------------- Monomial

int Monomial::degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

long Monomial::weightedDegree(const std::vector<int>& w) const {
  long s = 0;
  for (std::size_t k = 0; k < e_.size(); ++k) s += static_cast<long>(w[k]) * e_[k];
  return s;
}

bool Monomial::isOne() const {
  return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
}

bool Monomial::isSquarefree() const {
  return std::all_of(e_.begin(), e_.end(), [](int v) { return v <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t k = 0; k < e_.size(); ++k)
    if (e_[k] > other.e_[k]) return false;
  return true;
}

std::size_t Monomial::supportSize() const {
  return static_cast<std::size_t>(std::count_if(e_.begin(), e_.end(), [](int v) { return v > 0; }));
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] -= o.e_[k];
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = std::max(e_[k], o.e_[k]);
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = std::min(e_[k], o.e_[k]);
  return r;
}

Monomial Monomial::pow(int t) const {
  Monomial r(*this);
  for (auto& v : r.e_) v *= t;
  return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : m.exponents()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------- PolyRing

PolyRing::PolyRing(std::vector<std::string> names, Field field)
    : names_(std::move(names)), field_(field) {
  if (names_.empty()) throw inputError("a ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw inputError("empty variable name");
    if (!seen.insert(n).second) throw inputError("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> PolyRing::indexOf(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

void PolyRing::setWeights(std::vector<int> w) {
  if (w.size() != names_.size()) throw inputError("weight vector length does not match ring");
  for (int v : w)
    if (v <= 0) throw inputError("weights must be strictly positive");
  weights_ = std::move(w);
}

void PolyRing::setColors(std::vector<int> colorOfVariable) {
  if (colorOfVariable.size() != names_.size())
    throw inputError("color labelling does not cover the ring");
  for (int c : colorOfVariable)
    if (c < 0) throw inputError("negative color id");
  colors_ = std::move(colorOfVariable);
}

std::string PolyRing::describe() const {
  std::string s = "ring: " + field_.name() + "[";
  for (std::size_t k = 0; k < names_.size(); ++k) {
    if (k) s += ",";
    s += names_[k];
  }
  return s + "]";
}

RingPtr makeRing(std::vector<std::string> names, Field field) {
  return std::make_shared<const PolyRing>(std::move(names), field);
}

// ---------------------------------------------------------------- TermOrder

namespace {
std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

void checkPermutation(const std::vector<std::size_t>& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto k : p) {
    if (k >= p.size() || seen[k]) throw inputError("variable priority is not a permutation");
    seen[k] = true;
  }
}
}  // namespace

TermOrder TermOrder::lex(std::size_t nvars) { return lex(identity(nvars)); }

TermOrder TermOrder::lex(std::vector<std::size_t> priority) {
  checkPermutation(priority);
  TermOrder o;
  o.kind_ = Kind::Lex;
  o.priority_ = std::move(priority);
  return o;
}

TermOrder TermOrder::grevlex(std::size_t nvars) { return grevlex(identity(nvars)); }

TermOrder TermOrder::grevlex(std::vector<std::size_t> priority) {
  checkPermutation(priority);
  TermOrder o;
  o.kind_ = Kind::GrevLex;
  o.priority_ = std::move(priority);
  return o;
}

TermOrder TermOrder::weight(std::vector<int> w) {
  for (int v : w)
    if (v < 0) throw inputError("order weights must be non-negative");
  TermOrder o;
  o.kind_ = Kind::Weight;
  o.priority_ = identity(w.size());
  o.weights_ = std::move(w);
  return o;
}

TermOrder TermOrder::diagonal(std::size_t nvars, int rows, int cols) {
  TermOrder o;
  o.kind_ = Kind::Diagonal;
  o.priority_ = identity(nvars);
  o.rows_ = rows;
  o.cols_ = cols;
  return o;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Weight: {
      long wa = a.weightedDegree(weights_);
      long wb = b.weightedDegree(weights_);
      if (wa != wb) return wa > wb ? 1 : -1;
      [[fallthrough]];
    }
    case Kind::Lex:
    case Kind::Diagonal:
      for (auto k : priority_)
        if (a[k] != b[k]) return a[k] > b[k] ? 1 : -1;
      return 0;
    case Kind::GrevLex: {
      int da = a.degree();
      int db = b.degree();
      if (da != db) return da > db ? 1 : -1;
      for (auto it = priority_.rbegin(); it != priority_.rend(); ++it)
        if (a[*it] != b[*it]) return a[*it] < b[*it] ? 1 : -1;
      return 0;
    }
  }
  return 0;
}

int compare(const TermOrder& order, const Monomial& a, const Monomial& b) {
  if (a.size() != b.size() || a.size() != order.nvars())
    throw inputError("monomials and order belong to different rings");
  return order.compare(a, b);
}

std::string TermOrder::describe(const PolyRing& ring) const {
  auto chain = [&] {
    std::string s;
    for (std::size_t i = 0; i < priority_.size(); ++i) {
      if (i) s += ">";
      s += ring.name(priority_[i]);
    }
    return s;
  };
  switch (kind_) {
    case Kind::Lex: return "lex " + chain();
    case Kind::GrevLex: return "grevlex " + chain();
    case Kind::Weight: {
      std::string s = "weight ";
      for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(weights_[i]);
      }
      return s;
    }
    case Kind::Diagonal:
      return "diagonal " + std::to_string(rows_) + "x" + std::to_string(cols_);
  }
  return {};
}

TermOrder TermOrder::parse(const std::string& text, const PolyRing& ring) {
  std::istringstream in(text);
  std::string kind;
  in >> kind;
  std::string rest;
  std::getline(in, rest);
  rest.erase(std::remove_if(rest.begin(), rest.end(), [](unsigned char c) { return std::isspace(c); }),
             rest.end());
  const std::size_t n = ring.nvars();

  auto parseChain = [&]() -> std::vector<std::size_t> {
    if (rest.empty()) return identity(n);
    std::vector<std::size_t> p;
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      auto next = rest.find('>', pos);
      std::string name = rest.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      auto idx = ring.indexOf(name);
      if (!idx) throw inputError("unknown variable '" + name + "' in order");
      p.push_back(*idx);
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    if (p.size() != n) throw inputError("order must list every variable exactly once");
    return p;
  };

  if (kind == "lex") return lex(parseChain());
  if (kind == "grevlex") return grevlex(parseChain());
  if (kind == "weight") {
    std::vector<int> w;
    std::stringstream ws(rest);
    std::string item;
    while (std::getline(ws, item, ',')) w.push_back(std::stoi(item));
    if (w.size() != n) throw inputError("weight order needs one weight per variable");
    return weight(std::move(w));
  }
  if (kind == "diagonal") {
    int r = 0, c = 0;
    if (!rest.empty()) {
      auto x = rest.find('x');
      if (x == std::string::npos) throw inputError("diagonal order shape must read RxC");
      r = std::stoi(rest.substr(0, x));
      c = std::stoi(rest.substr(x + 1));
    }
    return diagonal(n, r, c);
  }
  throw inputError("unknown term order '" + kind + "'");
}

// ---------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Polynomial p(ring);
  p.addTerm(Monomial(ring->nvars()), c);
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Scalar& c) {
  Polynomial p(std::move(ring));
  p.addTerm(m, c);
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t k) {
  auto n = ring->nvars();
  return monomial(std::move(ring), Monomial::variable(n, k));
}

void Polynomial::addTerm(const Monomial& m, const Scalar& c) {
  const Field& f = ring_->field();
  Scalar cc = f.normalize(c);
  if (cc == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, cc);
  if (!inserted) {
    it->second = f.add(it->second, cc);
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::checkRing(const Polynomial& o) const {
  if (ring_ != o.ring_ && !(ring_ && o.ring_ && ring_->sameAs(*o.ring_)))
    throw inputError("polynomials belong to different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  checkRing(o);
  Polynomial r(*this);
  for (const auto& [m, c] : o.terms_) r.addTerm(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, ring_->field().neg(c));
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  checkRing(o);
  Polynomial r(ring_);
  const Field& f = ring_->field();
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.addTerm(m1 * m2, f.mul(c1, c2));
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial r(ring_);
  if (ring_->field().normalize(c) == 0) return r;
  for (const auto& [m, a] : terms_) r.terms_.emplace(m, ring_->field().mul(a, c));
  return r;
}

Polynomial Polynomial::times(const Monomial& mono, const Scalar& c) const {
  Polynomial r(ring_);
  if (ring_->field().normalize(c) == 0) return r;
  for (const auto& [m, a] : terms_) r.terms_.emplace(m * mono, ring_->field().mul(a, c));
  return r;
}

Polynomial Polynomial::pow(int t) const {
  if (t < 0) throw inputError("negative power");
  Polynomial r = constant(ring_, 1);
  for (int i = 0; i < t; ++i) r = r * *this;
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return terms_ == o.terms_ && (ring_ == o.ring_ || (ring_ && o.ring_ && ring_->sameAs(*o.ring_)));
}

bool Polynomial::isHomogeneous() const { return homogeneousDegree().has_value() || isZero(); }

bool Polynomial::isHomogeneous(const std::vector<int>& w) const {
  std::optional<long> d;
  for (const auto& [m, c] : terms_) {
    long v = m.weightedDegree(w);
    if (d && *d != v) return false;
    d = v;
  }
  return true;
}

std::optional<int> Polynomial::homogeneousDegree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    int v = m.degree();
    if (d && *d != v) return std::nullopt;
    d = v;
  }
  return d;
}

int Polynomial::maxDegree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Term Polynomial::leadingTerm(const TermOrder& order) const {
  if (terms_.empty()) throw inputError("the zero polynomial has no leading term");
  if (order.nvars() != ring_->nvars()) throw inputError("order belongs to a different ring");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (order.compare(it->first, best->first) > 0) best = it;
  return {best->first, best->second};
}

Term leadingTerm(const Polynomial& f, const TermOrder& order) { return f.leadingTerm(order); }

std::vector<Term> Polynomial::sortedTerms(const TermOrder& order) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back({m, c});
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  return out;
}

std::string formatMonomial(const PolyRing& ring, const Monomial& m) {
  std::string s;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.name(k);
    if (m[k] > 1) s += "^" + std::to_string(m[k]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::toString() const {
  if (terms_.empty()) return "0";
  auto order = TermOrder::grevlex(ring_->nvars());
  std::string s;
  bool first = true;
  for (const auto& t : sortedTerms(order)) {
    Scalar c = t.coeff;
    bool negative = ring_->field().isRational() && c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? "-" : "+";
    }
    first = false;
    if (t.mono.isOne()) {
      s += c.get_str();
    } else {
      if (c != 1) s += c.get_str() + "*";
      s += formatMonomial(*ring_, t.mono);
    }
  }
  return s;
}

}  // namespace golod
