#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "golodlab/field.hpp"

namespace golod {

/// Dense exponent vector. Length always equals the variable count of the ring
/// it is used with.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t k, int power = 1) {
    Monomial m(nvars);
    m.e_[k] = power;
    return m;
  }

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t k) const { return e_[k]; }
  int& operator[](std::size_t k) { return e_[k]; }
  const std::vector<int>& exponents() const { return e_; }

  int degree() const;
  long weightedDegree(const std::vector<int>& w) const;
  bool isOne() const;
  bool isSquarefree() const;
  bool divides(const Monomial& other) const;
  std::size_t supportSize() const;

  Monomial operator*(const Monomial& o) const;
  /// Requires `o` to divide `*this`.
  Monomial operator/(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;
  Monomial pow(int t) const;

  /// Plain lexicographic comparison of exponent vectors; container order only.
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<int> e_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Declared polynomial ring k[x_1..x_n].
class PolyRing {
 public:
  PolyRing(std::vector<std::string> names, Field field);

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t k) const { return names_[k]; }
  std::optional<std::size_t> indexOf(const std::string& name) const;
  const Field& field() const { return field_; }

  const std::optional<std::vector<int>>& weights() const { return weights_; }
  void setWeights(std::vector<int> w);

  /// Color class of every variable (0-based class ids).
  const std::optional<std::vector<int>>& colors() const { return colors_; }
  void setColors(std::vector<int> colorOfVariable);

  /// `ring: QQ[x1,x2]` header line.
  std::string describe() const;

  bool sameAs(const PolyRing& o) const { return names_ == o.names_ && field_ == o.field_; }

 private:
  std::vector<std::string> names_;
  Field field_;
  std::optional<std::vector<int>> weights_;
  std::optional<std::vector<int>> colors_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr makeRing(std::vector<std::string> names, Field field = Field::rationals());

/// Total monomial order on a fixed ring.
class TermOrder {
 public:
  enum class Kind { Lex, GrevLex, Weight, Diagonal };

  static TermOrder lex(std::size_t nvars);
  static TermOrder lex(std::vector<std::size_t> priority);
  static TermOrder grevlex(std::size_t nvars);
  static TermOrder grevlex(std::vector<std::size_t> priority);
  /// Weight order; ties broken by lex on the declared variable order.
  static TermOrder weight(std::vector<int> w);
  /// Lex on the variables of a rows x cols matrix read row by row.
  static TermOrder diagonal(std::size_t nvars, int rows, int cols);

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& priority() const { return priority_; }
  const std::vector<int>& weights() const { return weights_; }
  std::size_t nvars() const { return priority_.size(); }

  /// -1, 0, +1.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// `lex x1>x2>x3`, `grevlex ...`, `weight 1,2,3`, `diagonal 2x3`.
  std::string describe(const PolyRing& ring) const;
  /// Inverse of describe(); also accepts the bare kind names.
  static TermOrder parse(const std::string& text, const PolyRing& ring);

 private:
  Kind kind_ = Kind::Lex;
  std::vector<std::size_t> priority_;
  std::vector<int> weights_;
  int rows_ = 0;
  int cols_ = 0;
};

/// Three-way compare under an order with a ring-size check.
int compare(const TermOrder& order, const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Sparse exact polynomial. Terms with zero coefficient are never stored.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Scalar& c = 1);
  static Polynomial variable(RingPtr ring, std::size_t k);

  const RingPtr& ring() const { return ring_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t termCount() const { return terms_.size(); }

  /// Adds c*m; drops the term if it cancels.
  void addTerm(const Monomial& m, const Scalar& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times(const Monomial& m, const Scalar& c) const;
  Polynomial pow(int t) const;
  bool operator==(const Polynomial& o) const;

  bool isMonomial() const { return terms_.size() == 1; }
  bool isHomogeneous() const;
  bool isHomogeneous(const std::vector<int>& w) const;
  /// Total degree when homogeneous, otherwise nullopt.
  std::optional<int> homogeneousDegree() const;
  int maxDegree() const;

  /// Maximal term under `order`. Throws on the zero polynomial.
  Term leadingTerm(const TermOrder& order) const;

  /// Terms in descending order.
  std::vector<Term> sortedTerms(const TermOrder& order) const;

  /// Canonical text: terms descending in grevlex on the declared order.
  std::string toString() const;

 private:
  void checkRing(const Polynomial& o) const;

  RingPtr ring_;
  std::map<Monomial, Scalar> terms_;
};

/// leadingTerm() as a free function.
Term leadingTerm(const Polynomial& f, const TermOrder& order);

std::string formatMonomial(const PolyRing& ring, const Monomial& m);

}  // namespace golod
