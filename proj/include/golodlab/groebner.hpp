#pragma once

#include <vector>

#include "golodlab/monomial_ideal.hpp"
#include "golodlab/poly.hpp"

namespace golod {

/// Reduced Groebner basis: monic, sorted by descending leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, TermOrder order, std::vector<Polynomial> reduced,
                std::vector<Polynomial> source);

  const RingPtr& ring() const { return ring_; }
  const TermOrder& order() const { return order_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const std::vector<Polynomial>& sourceIdeal() const { return source_; }
  const std::vector<Monomial>& leadingMonomials() const { return leads_; }
  MonomialIdeal leadingIdeal() const;
  /// Largest total degree of a basis element.
  int maxDegree() const;

  Polynomial normalForm(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normalForm(f).isZero(); }

 private:
  RingPtr ring_;
  TermOrder order_;
  std::vector<Polynomial> gens_;
  std::vector<Polynomial> source_;
  std::vector<Monomial> leads_;
};

/// Buchberger's algorithm with Gebauer-Moeller pair elimination.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const TermOrder& order);

/// Full reduction by an arbitrary generator list (division algorithm).
Polynomial normalForm(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const TermOrder& order);
Polynomial normalForm(const Polynomial& f, const GroebnerBasis& gb);

/// Buchberger criterion: every S-pair of `gens` reduces to zero.
bool isGroebnerBasis(const std::vector<Polynomial>& gens, const TermOrder& order);

/// Minimal generators of in_<(I).
MonomialIdeal initialIdeal(const std::vector<Polynomial>& gens, const TermOrder& order);

/// Ideal equality by mutual membership.
bool sameIdeal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
               const TermOrder& order);

/// Standard monomials of total degree d (a k-basis of (R/I)_d).
std::vector<Monomial> standardMonomials(const GroebnerBasis& gb, int d);
/// Standard monomials of weighted degree d under the weight vector w > 0.
std::vector<Monomial> standardMonomials(const GroebnerBasis& gb, int d, const std::vector<int>& w);
/// Every monomial of total degree d in n variables.
std::vector<Monomial> monomialsOfDegree(std::size_t n, int d);

/// dim_k (R/I)_d for d = 0..maxDegree by ranks of Macaulay matrices; needs no
/// Groebner basis.
std::vector<long> hilbertFunctionByRank(const std::vector<Polynomial>& gens, int maxDegree);

// ---------------------------------------------------------------- flat family

/// R^h = R[t] with t last; grading deg x_i = w_i, deg t = 1.
struct HomogenizedIdeal {
  RingPtr base;
  RingPtr extended;
  std::vector<int> weights;
  std::vector<Polynomial> generators;
  TermOrder order;  // weight order on the base ring that the family degenerates along
};

/// Extends `base` by a variable t (renamed if taken).
RingPtr homogenizationRing(const RingPtr& base);

/// f^h = t^{w(a_1)} f(t^{-w_1} x_1, ..., t^{-w_n} x_n).
Polynomial homogenize(const Polynomial& f, const std::vector<int>& w, const RingPtr& extended);
Polynomial homogenize(const Polynomial& f, const std::vector<int>& w);

/// I^h = (g^h | g in G). G must be a Groebner basis for the weight order of w
/// unless `recompute` is set, in which case one is computed from G's source.
/// The t = 0 and t = 1 fibers are checked before returning.
HomogenizedIdeal homogenizeIdeal(const GroebnerBasis& gb, const std::vector<int>& w,
                                 bool recompute = false);

/// Substitutes t -> a and maps back to the base ring.
std::vector<Polynomial> specializeT(const HomogenizedIdeal& ih, const Scalar& a);

/// Terms of maximal w-degree.
Polynomial weightInitialForm(const Polynomial& f, const std::vector<int>& w);

}  // namespace golod
