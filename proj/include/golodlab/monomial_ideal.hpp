#pragma once

#include <optional>
#include <string>
#include <vector>

#include "golodlab/betti.hpp"
#include "golodlab/poly.hpp"

namespace golod {

/// Monomial ideal stored by its minimal generators.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(RingPtr ring, std::vector<Monomial> gens);

  /// Errors unless every generator is a single term.
  static MonomialIdeal fromPolynomials(RingPtr ring, const std::vector<Polynomial>& gens);

  const RingPtr& ring() const { return ring_; }
  /// Sorted by degree, then descending lex on the declared order.
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool isZero() const { return gens_.empty(); }
  bool isUnit() const;

  bool contains(const Monomial& m) const;
  bool isSquarefree() const;
  /// Common degree of all generators, or nullopt when mixed.
  std::optional<int> generatorDegree() const;
  int maxDegree() const;
  Monomial lcmOfGenerators() const;

  MonomialIdeal operator*(const MonomialIdeal& o) const;
  MonomialIdeal operator+(const MonomialIdeal& o) const;
  MonomialIdeal power(int t) const;
  bool operator==(const MonomialIdeal& o) const { return gens_ == o.gens_; }

  std::vector<Polynomial> toPolynomials() const;
  std::string toString() const;

 private:
  RingPtr ring_;
  std::vector<Monomial> gens_;
};

/// Removes non-minimal generators and sorts canonically.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// Numerator K(t) of the Hilbert series H_{R/I}(t) = K(t) / (1-t)^n, by the
/// colon recursion K(I + (m)) = K(I) - t^deg(m) K(I : m).
std::vector<long> hilbertNumerator(const MonomialIdeal& ideal);

/// dim_k (R/I)_d for d = 0..maxDegree, read off the numerator.
std::vector<long> hilbertFunction(const MonomialIdeal& ideal, int maxDegree);

// ---------------------------------------------------------------- polarization

/// A ring map that identifies variables: source variable k goes to target
/// variable target[k]. Its kernel is generated by the variable differences.
struct VariableIdentification {
  RingPtr source;
  RingPtr target;
  std::vector<std::size_t> targetOf;

  Monomial apply(const Monomial& m) const;
  Polynomial apply(const Polynomial& f) const;
};

struct Polarization {
  MonomialIdeal source;
  MonomialIdeal polarized;
  /// Polarized ring -> source ring (x_{i,j} -> x_i).
  VariableIdentification depolarize;
  /// sigma: pairs (a, b) standing for the linear form x_a - x_b in the polarized ring.
  std::vector<std::pair<std::size_t, std::size_t>> regularSequence;
};

/// Standard polarization: x_i^k -> x_{i,1} x_{i,2} ... x_{i,k}.
Polarization polarize(const MonomialIdeal& ideal);

struct Specialization {
  VariableIdentification map;
  std::vector<Polynomial> image;
  /// Whether the differences form a regular sequence on R/J: the Hilbert
  /// series of R/(J + sigma) must equal (1-t)^c H_{R/J}(t). Compared through
  /// the series numerators, which is exact; checkedDegree is the largest
  /// numerator degree involved.
  bool regular = false;
  int checkedDegree = 0;
};

/// Identifies variables along the differences `sigma` (pairs (a, b) meaning
/// x_a - x_b) and reports whether sigma is regular on R/J. J must be
/// homogeneous.
Specialization specializeVariableDifferences(const std::vector<Polynomial>& ideal,
                                             const std::vector<std::pair<std::size_t, std::size_t>>& sigma);

// ---------------------------------------------------------------- Betti oracle

/// Graded Betti numbers of R/I from the Taylor complex (or, above
/// `taylorGeneratorLimit` generators, the upper Koszul simplicial complexes of
/// the lcm lattice). Independent of the Koszul homology code path.
BettiTable bettiOracle(const MonomialIdeal& ideal, std::size_t taylorGeneratorLimit = 14);
BettiTable bettiOracleTaylor(const MonomialIdeal& ideal);
BettiTable bettiOracleSimplicial(const MonomialIdeal& ideal);

/// beta_{i,j} != 0 => j = i + d - 1 for i >= 1. Throws on mixed degrees.
bool hasLinearResolution(const BettiTable& table, int generatorDegree);
bool hasLinearResolution(const MonomialIdeal& ideal);

// ---------------------------------------------------------------- rainbow ideals

struct RainbowStructure {
  int colorCount = 0;
  std::vector<int> classSizes;
  /// For each ring variable: (color, index within the color class), 0-based.
  std::vector<std::pair<int, int>> label;
  /// variableOf[color][index] -> ring variable.
  std::vector<std::vector<std::size_t>> variableOf;
};

struct RainbowSearch {
  enum class Outcome { Found, NotFound, BoundExceeded };
  Outcome outcome = Outcome::NotFound;
  std::optional<RainbowStructure> structure;
  std::string detail;
  int maxColors = 6;
  int maxVariables = 24;
};

/// Builds a RainbowStructure from a color per variable (colors need not be
/// contiguous ids); nullopt when some generator is not rainbow for it.
std::optional<RainbowStructure> rainbowFromColoring(const MonomialIdeal& ideal,
                                                    const std::vector<int>& colorOfVariable);

/// Validates the given coloring, or searches for one exhaustively.
RainbowSearch rainbowDetect(const MonomialIdeal& ideal,
                            const std::optional<std::vector<int>>& coloring = std::nullopt,
                            int maxColors = 6, int maxVariables = 24);

/// Sets every variable of a color outside `keep` to 1 and minimalizes.
MonomialIdeal rankedProjection(const MonomialIdeal& ideal, const RainbowStructure& rainbow,
                               const std::vector<int>& keep);

/// Rainbow monomials of the full product I_1...I_n that are not in G(I).
MonomialIdeal complementaryIdeal(const MonomialIdeal& ideal, const RainbowStructure& rainbow);

/// Recognizes ideal = J^t with t >= 2; returns (J, t).
std::optional<std::pair<MonomialIdeal, int>> recognizePower(const MonomialIdeal& ideal);

}  // namespace golod
