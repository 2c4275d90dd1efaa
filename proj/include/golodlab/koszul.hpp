#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "golodlab/betti.hpp"
#include "golodlab/groebner.hpp"
#include "golodlab/linalg.hpp"
#include "golodlab/monomial_ideal.hpp"

namespace golod {

/// Multidegree. Entry 0 is always the total degree.
using Key = std::vector<long>;

/// A Z^r-grading of the ring given by integer rows (row 0 = all ones) under
/// which the ideal is homogeneous. Exponent gradings (monomial ideals) use
/// the exponent vector itself.
class Grading {
 public:
  Grading() = default;
  static Grading exponents(std::size_t nvars);
  static Grading fromRows(std::vector<std::vector<long>> rows);
  /// Finest grading: the integer kernel of the term differences of the basis.
  static Grading finest(const GroebnerBasis& gb);

  /// Grading on the source of `phi` obtained by composing with phi.
  Grading pullback(const VariableIdentification& phi) const;

  std::size_t nvars() const { return nvars_; }
  bool isExponent() const { return exponent_; }
  const std::vector<std::vector<long>>& rows() const { return rows_; }

  Key of(const Monomial& m) const;
  Key ofMask(std::uint64_t mask) const;
  Key of(std::uint64_t mask, const Monomial& m) const;
  static Key add(const Key& a, const Key& b);
  static Key sub(const Key& a, const Key& b);

 private:
  std::size_t nvars_ = 0;
  bool exponent_ = false;
  std::vector<std::vector<long>> rows_;
};

/// R/I for a homogeneous ideal given by a Groebner basis, with cached normal
/// forms of monomials and standard-monomial lists. Not safe for concurrent use
/// of one instance.
class QuotientAlgebra {
 public:
  explicit QuotientAlgebra(GroebnerBasis gb);
  /// R/0.
  static std::shared_ptr<const QuotientAlgebra> polynomialRing(RingPtr ring);
  static std::shared_ptr<const QuotientAlgebra> create(GroebnerBasis gb);
  static std::shared_ptr<const QuotientAlgebra> create(const MonomialIdeal& ideal);

  const RingPtr& ring() const { return gb_.ring(); }
  const Field& field() const { return gb_.ring()->field(); }
  std::size_t nvars() const { return gb_.ring()->nvars(); }
  const GroebnerBasis& groebnerBasis() const { return gb_; }
  bool isMonomial() const { return monomial_; }
  MonomialIdeal leadingIdeal() const { return lead_; }

  bool isStandard(const Monomial& m) const { return !lead_.contains(m); }
  /// Normal form of a monomial as terms over standard monomials.
  const std::vector<Term>& reduce(const Monomial& m) const;
  const std::vector<Monomial>& standardOfDegree(int d) const;

 private:
  GroebnerBasis gb_;
  MonomialIdeal lead_;
  bool monomial_ = false;
  mutable std::map<Monomial, std::vector<Term>> nf_;
  mutable std::map<int, std::vector<Monomial>> standard_;
};

using AlgebraPtr = std::shared_ptr<const QuotientAlgebra>;

/// Basis element e_S (x) m of R/I (x) K^R; S as a bit mask over variables.
struct Cell {
  std::uint64_t mask = 0;
  Monomial mono;
  auto operator<=>(const Cell&) const = default;
  bool operator==(const Cell&) const = default;
};

/// (-1)^{#{(s, t) in S x T : s > t}}: sign of e_S ^ e_T against e_{S u T}.
int wedgeSign(std::uint64_t s, std::uint64_t t);

/// Element of R/I (x) K^R. Monomials are always standard.
class KoszulElement {
 public:
  KoszulElement() = default;
  explicit KoszulElement(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

  /// c * m * e_S, reduced.
  static KoszulElement basis(AlgebraPtr algebra, std::uint64_t mask, const Monomial& m,
                             const Scalar& c = 1);
  static KoszulElement one(AlgebraPtr algebra);
  /// e_{v_1} ^ ... ^ e_{v_k} in the given order.
  static KoszulElement wedgeOf(AlgebraPtr algebra, const std::vector<std::size_t>& vars);
  /// The polynomial f as an element of degree 0.
  static KoszulElement scalarPart(AlgebraPtr algebra, const Polynomial& f);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::map<Cell, Scalar>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  /// Homological degree when all terms share it.
  std::optional<int> degree() const;

  /// Adds c * m * e_S with m reduced to normal form first.
  void add(std::uint64_t mask, const Monomial& m, const Scalar& c);
  /// Adds c * cell; the cell monomial must be standard.
  void addCell(const Cell& cell, const Scalar& c);

  KoszulElement operator+(const KoszulElement& o) const;
  KoszulElement operator-(const KoszulElement& o) const;
  KoszulElement scaled(const Scalar& c) const;
  bool operator==(const KoszulElement& o) const { return terms_ == o.terms_; }

  /// `(x1*x3-x2^2)*e1^e3 + x2*e2`, wedges ascending, coefficient polynomials
  /// in canonical form.
  std::string toString() const;

 private:
  AlgebraPtr algebra_;
  std::map<Cell, Scalar> terms_;
};

KoszulElement differential(const KoszulElement& a);
KoszulElement wedge(const KoszulElement& a, const KoszulElement& b);
/// (-1)^{|a|+1} a, applied per homological degree.
KoszulElement bar(const KoszulElement& a);

struct HomologyClass {
  int degree = 0;
  Key key;
  int index = 0;  // position in the basis of its piece
  KoszulElement rep;
  /// Rainbow block label: one sorted index list per color.
  std::optional<std::vector<std::vector<int>>> label;
};

/// Homology of R/I (x) K^R split into graded pieces (i, key). Pieces are
/// computed on demand and cached.
class KoszulHomology {
 public:
  explicit KoszulHomology(AlgebraPtr algebra);
  KoszulHomology(AlgebraPtr algebra, Grading grading);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Grading& grading() const { return grading_; }
  std::size_t nvars() const { return algebra_->nvars(); }

  /// Basis cells of C_i in the piece `key`, sorted.
  std::vector<Cell> cells(int i, const Key& key) const;
  /// Keys with nonempty C_i in total degree j.
  std::vector<Key> keys(int i, int j) const;
  Key keyOf(const KoszulElement& e) const;

  struct Piece {
    int degree = 0;
    Key key;
    std::vector<Cell> cells;
    std::map<Cell, int> index;
    std::vector<Cell> upper;  // cells of C_{i+1}
    Echelon boundaries{Field()};  // d(upper); tags are upper-cell indices
    Echelon classes{Field()};     // boundaries (no tag) + representatives (tagged)
    std::vector<KoszulElement> reps;
    long cycleDimension = 0;
  };
  const Piece& piece(int i, const Key& key) const;
  long dimension(int i, const Key& key) const { return static_cast<long>(piece(i, key).reps.size()); }
  std::vector<HomologyClass> basis(int i, const Key& key) const;

  SparseVec toVector(const KoszulElement& e, const Piece& p) const;
  KoszulElement fromVector(const SparseVec& v, const std::vector<Cell>& cells) const;

  bool isCycle(const KoszulElement& e) const { return differential(e).isZero(); }
  bool isBoundary(const KoszulElement& e) const;
  /// a with d(a) = e, if any. e must be homogeneous.
  std::optional<KoszulElement> boundaryPreimage(const KoszulElement& e) const;
  /// Coordinates of the class of a cycle in the basis of its piece.
  SparseVec classCoordinates(const KoszulElement& cycle) const;

  void clearCache() const { pieces_.clear(); }

 private:
  AlgebraPtr algebra_;
  Grading grading_;
  mutable std::map<std::pair<int, Key>, Piece> pieces_;
  mutable std::map<std::pair<int, Key>, std::vector<Cell>> buckets_;  // (monomial degree, key)
  mutable std::map<int, bool> bucketed_;
};

/// Every homology class of H_{>=1}, ordered by (degree, key). Monomial rings
/// scan multidegrees below lcm(G(I)); otherwise the bidegrees are those where
/// the leading ideal has Betti numbers (upper semicontinuity).
std::vector<HomologyClass> homologyBasisAll(const KoszulHomology& h);

/// beta_{ij}(R/I) = dim H_i(R/I (x) K)_j.
BettiTable bettiViaKoszul(const KoszulHomology& h);

/// Class of h1 * h2 (coordinates in its piece); empty when the product is zero.
SparseVec homologyProduct(const KoszulHomology& h, const HomologyClass& a, const HomologyClass& b);

// ---------------------------------------------------------------- Massey

using Tuple = std::vector<int>;

/// Values of a trivial Massey operation on tuples of basis classes.
struct MasseyTable {
  std::string domain = "all";  // "all" or "valid"
  int pMax = 0;
  std::vector<HomologyClass> basis;
  std::map<Tuple, KoszulElement> values;
  std::map<Tuple, std::string> method;
  std::vector<std::string> notes;
  bool verified = false;
};

/// sum_{j=1}^{p-1} bar(mu(t_1..t_j)) mu(t_{j+1}..t_p), from stored values.
KoszulElement masseyRightHandSide(const MasseyTable& table, const Tuple& t, AlgebraPtr algebra);

struct MasseyCheck {
  bool ok = true;
  std::size_t checked = 0;
  Tuple failing;
  std::string detail;
};

/// Exact check of every stored tuple: p = 1 values are cycles representing
/// their class, longer ones satisfy the defining equation.
MasseyCheck verifyMasseyTable(const MasseyTable& table, const KoszulHomology& h);

struct MasseyBuild {
  enum class Status { Complete, Obstructed, CapExceeded };
  Status status = Status::Complete;
  MasseyTable table;
  Tuple obstruction;
  KoszulElement obstructionValue;  // right-hand side that is not a boundary
  std::size_t tuplesTried = 0;
  std::string detail;
};

/// Solves for mu over all basis tuples of length <= pMax whose value can be
/// nonzero (right-hand side in degree <= n). Stops at the first obstruction;
/// given the shorter values, that is a nonzero Massey product.
MasseyBuild buildTrivialMassey(const KoszulHomology& h, std::vector<HomologyClass> basis, int pMax,
                               std::size_t tupleCap = 200000);

struct MasseyProductResult {
  enum class Kind { UniqueZero, UniqueNonzero, Undefined };
  Kind kind = Kind::Undefined;
  SparseVec value;  // class coordinates when nonzero
  KoszulElement representative;
  std::string detail;
};

/// <h_1, ..., h_p> via a defining system solved on contiguous sub-tuples.
MasseyProductResult masseyProduct(const KoszulHomology& h, const std::vector<HomologyClass>& classes);

// ---------------------------------------------------------------- rainbow

using RainbowLabel = std::vector<std::vector<int>>;

/// Monomial x_{[n],A}: the product of the variables in all blocks.
Monomial labelMonomial(const RainbowStructure& rs, std::size_t nvars, const RainbowLabel& label);
/// Every transversal of the blocks is a minimal generator.
bool validMultidegree(const MonomialIdeal& ideal, const RainbowStructure& rs, const RainbowLabel& label);
/// Blocks read off the support of m, per color.
bool validMultidegree(const MonomialIdeal& ideal, const RainbowStructure& rs, const Monomial& m);
/// Per-color union of the blocks.
RainbowLabel mergeLabels(const std::vector<RainbowLabel>& labels);
std::vector<RainbowLabel> validLabels(const MonomialIdeal& ideal, const RainbowStructure& rs);

/// e_{1,A1} ^ ... ^ e_{n,An} with d applied to the last `dCount` blocks.
KoszulElement etaCycle(const AlgebraPtr& algebra, const RainbowStructure& rs, const RainbowLabel& label,
                       int dCount);

/// Classes of eta(A) = e_{1,A1} ^ d(e_{2,A2}) ^ ... ^ d(e_{n,An}) over valid labels,
/// checked against the homology dimensions piece by piece.
std::vector<HomologyClass> rainbowHomologyBasis(const KoszulHomology& h, const MonomialIdeal& ideal,
                                                const RainbowStructure& rs);

struct RainbowMassey {
  MasseyTable table;
  /// Construction that held for every tuple: "literal", "corrected" or "mixed".
  std::string construction;
  std::vector<std::string> findings;
};

/// Trivial Massey operation on the valid tuples (per-color union of the
/// labels is a valid multidegree), up to length pMax.
RainbowMassey rainbowMasseyTable(const KoszulHomology& h, const MonomialIdeal& ideal,
                                 const RainbowStructure& rs, int pMax);

/// Stored value of a valid tuple; errors for tuples outside the domain.
KoszulElement rainbowMasseyOperation(const RainbowMassey& rm, const MonomialIdeal& ideal,
                                     const RainbowStructure& rs, const Tuple& tuple);

// ---------------------------------------------------------------- transfer

/// DG-algebra map R/I (x) K^R -> S/phi(I) (x) K^S induced by a variable
/// identification phi: x_v -> x_phi(v), e_v -> e_phi(v).
struct KoszulMap {
  AlgebraPtr source;
  AlgebraPtr target;
  VariableIdentification phi;

  KoszulElement apply(const KoszulElement& a) const;
};

struct TransferResult {
  bool ok = false;
  MasseyTable table;
  std::string detail;
};

/// mu'(phi h_1, ..., phi h_p) := phi(mu(h_1, ..., h_p)). Checks that phi is a
/// quasi-isomorphism (Betti tables agree) and that phi of the basis is a basis.
TransferResult pushforwardMassey(const KoszulMap& map, const MasseyTable& table, const KoszulHomology& source,
                                 const KoszulHomology& target);

/// Images of `classes` completed greedily to a basis of the target homology.
std::vector<HomologyClass> extendImageBasis(const KoszulMap& map, const std::vector<HomologyClass>& classes,
                                            const KoszulHomology& target);

/// Lifts a trivial Massey operation on the target, whose basis starts with
/// phi(sourceBasis) in order, to one on the source with phi o mu' = mu o phi.
/// `source` must use a grading pulled back from the target's.
TransferResult pullbackMassey(const KoszulMap& map, const MasseyTable& targetTable,
                              const std::vector<HomologyClass>& sourceBasis, const KoszulHomology& source,
                              const KoszulHomology& target);

}  // namespace golod
