#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "golodlab/koszul.hpp"

namespace golod {

struct FiberInvariance {
  bool invariant = false;
  /// "monomial", "linear initial ideal", "linear squarefree initial ideal" or
  /// "compared" when both tables were computed.
  std::string reason;
  std::optional<BettiTable> ideal;
  std::optional<BettiTable> initial;
};

/// beta_{ij}(R/I) == beta_{ij}(R/in(I)) for all i, j.
FiberInvariance fiberInvariant(const GroebnerBasis& gb);
FiberInvariance fiberInvariant(const std::vector<Polynomial>& ideal, const TermOrder& order);

/// First N+1 coefficients of (1+t)^n / (1 - sum_{i>=1} h_i t^{i+1}) where
/// h_i = dim H_i of the Koszul complex (h[0] is ignored).
std::vector<mpz_class> serreBound(const std::vector<long>& homologyTotals, std::size_t nvars, int N);
std::vector<mpz_class> serreBound(const BettiTable& betti, std::size_t nvars, int N);

struct PoincareData {
  std::vector<mpz_class> coefficients;  // total Betti numbers of k over R/I
  int N = 0;
  int D = 0;
  /// Internal degree needed for homological degree N: generators of the i-th
  /// syzygy of k sit in degrees <= 1 + (i-1)(m-1), m the top degree of in(I).
  int degreeNeeded = 0;
  std::size_t work = 0;  // largest graded piece handled
  /// False when a cap stopped the computation; coefficients then holds the
  /// degrees finished before that and `detail` names the cap.
  bool complete = true;
  std::string detail;
};

/// Minimal graded resolution of k over R/I up to homological degree N.
/// Throws capError when D is below the degree bound. A graded piece with more
/// than `workCap` basis vectors throws too, unless `partial` is set, in which
/// case the finished coefficients are returned with complete = false.
PoincareData poincareCoeffs(const AlgebraPtr& algebra, int N, int D, std::size_t workCap = 20000,
                            bool partial = false);

struct GolodConfig {
  int N = 8;
  int pMax = 4;
  int D = 0;  // 0 = 3 * maxGenDegree * N
  std::size_t tupleCap = 200000;
  /// Rough count of (cell, bidegree) pairs allowed in the product/Massey scan.
  std::size_t scanCap = 250000;
  std::size_t poincareWorkCap = 20000;
};

struct GolodWitness {
  std::string kind;   // "product", "massey" or "serre"
  std::string ideal;  // the ideal whose Koszul homology carries the witness
  std::vector<HomologyClass> classes;
  KoszulElement value;  // cycle that is not a boundary
  SparseVec coordinates;
  int serreIndex = -1;
  bool reverified = false;
  std::string detail;
};

struct SerreData {
  std::vector<mpz_class> poincare;
  std::vector<mpz_class> bound;
  int N = 0;  // coefficients actually compared
  bool complete = false;
  std::string detail;
};

struct GolodCertificate {
  enum class Verdict { NotGolod, GolodProven, GolodUpTo };
  Verdict verdict = Verdict::GolodUpTo;
  /// HomologyProduct, MasseyProduct, SerreDeficit, RainbowLinear,
  /// MonomialPower, FiberInvariantTransfer, PolarizationTransfer; empty for
  /// GolodUpTo.
  std::string rule;
  /// Nested rules, outermost first: e.g. FiberInvariantTransfer, RainbowLinear.
  std::vector<std::string> chain;
  int upTo = 0;
  std::optional<GolodWitness> witness;
  std::vector<std::string> evidence;
  SerreData serre;
  GolodConfig config;
  std::optional<MasseyTable> table;
  std::string ideal;
  std::string order;
};

std::string verdictName(GolodCertificate::Verdict v);

/// Rule order: product/Massey scan, rainbow + linear, monomial power, fiber
/// invariance (recursing on in(I)), polarization, then truncated evidence.
GolodCertificate golodCertificate(const std::vector<Polynomial>& ideal, const TermOrder& order,
                                  const GolodConfig& config = {});

/// {verdict, rule, witness?, serre: {poincare, bound, N}, config, ...}
std::string certificateJson(const GolodCertificate& cert);

/// Witness check from scratch: recomputes the ideal's homology and the product.
bool reverifyWitness(const GolodWitness& w);

}  // namespace golod
