#include "doctest.h"

#include <random>

#include "golodlab/monomial_ideal.hpp"
#include "golodlab/text_format.hpp"

using namespace golod;

namespace {

MonomialIdeal mono(const std::string& text) {
  auto it = parseIdeal(text);
  return MonomialIdeal::fromPolynomials(it.ring, it.generators);
}

MonomialIdeal randomIdeal(std::mt19937& rng, std::size_t n, int maxDeg, int count) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back("x" + std::to_string(k + 1));
  auto ring = makeRing(names);
  std::vector<Monomial> gens;
  std::uniform_int_distribution<int> e(0, maxDeg);
  while (static_cast<int>(gens.size()) < count) {
    Monomial m(n);
    int deg = 0;
    for (std::size_t k = 0; k < n; ++k) {
      m[k] = e(rng);
      deg += m[k];
    }
    if (deg >= 1 && deg <= maxDeg) gens.push_back(m);
  }
  return MonomialIdeal(ring, gens);
}

}  // namespace

TEST_CASE("minimal generators and basic predicates") {
  auto i = mono("ring: QQ[x,y]\nx^2, x^2*y, x*y, y^3\n");
  CHECK(i.size() == 3);
  CHECK(i.contains(Monomial({3, 1})));
  CHECK_FALSE(i.contains(Monomial({0, 2})));
  CHECK_FALSE(i.isSquarefree());
  CHECK(i.lcmOfGenerators() == Monomial({2, 3}));
  CHECK(mono("xy,yz").isSquarefree());
  CHECK(mono("xy,yz").generatorDegree() == 2);
}

TEST_CASE("Betti numbers of small ideals by hand") {
  // (xy, yz): resolution 0 <- R <- R(-2)^2 <- R(-3) <- 0
  auto b = bettiOracle(mono("xy,yz"));
  CHECK(b.get(0, 0) == 1);
  CHECK(b.get(1, 2) == 2);
  CHECK(b.get(2, 3) == 1);
  CHECK(b.totals() == std::vector<long>{1, 2, 1});
  // m^2 in two variables: Eagon-Northcott, 3 quadrics and 2 linear syzygies
  auto m2 = bettiOracle(mono("ring: QQ[x,y]\nx^2, x*y, y^2\n"));
  CHECK(m2.get(1, 2) == 3);
  CHECK(m2.get(2, 3) == 2);
  CHECK(hasLinearResolution(mono("ring: QQ[x,y]\nx^2, x*y, y^2\n")));
  CHECK_FALSE(hasLinearResolution(mono("ring: QQ[x,y]\nx^2, y^2\n")));
}

TEST_CASE("Taylor and lcm-lattice oracles agree") {
  std::mt19937 rng(11);
  for (int k = 0; k < 25; ++k) {
    auto i = randomIdeal(rng, 3 + static_cast<std::size_t>(k % 2), 3, 3 + k % 4);
    CHECK(bettiOracleTaylor(i) == bettiOracleSimplicial(i));
  }
}

TEST_CASE("Hilbert numerator of a complete intersection") {
  // (x^2, y^3): K(t) = (1 - t^2)(1 - t^3)
  auto k = hilbertNumerator(mono("ring: QQ[x,y]\nx^2, y^3\n"));
  CHECK(k == std::vector<long>{1, 0, -1, -1, 0, 1});
  CHECK(hilbertFunction(mono("ring: QQ[x,y]\nx^2, y^3\n"), 4) == std::vector<long>{1, 2, 2, 1, 0});
}

TEST_CASE("polarization") {
  auto i = mono("ring: QQ[x,y]\nx^2, x*y^2\n");
  auto p = polarize(i);
  CHECK(p.polarized.isSquarefree());
  CHECK(p.polarized.ring()->nvars() == 4);  // x, x', y, y'
  CHECK(p.regularSequence.size() == 2);
  std::vector<Monomial> back;
  for (const auto& g : p.polarized.generators()) back.push_back(p.depolarize.apply(g));
  CHECK(MonomialIdeal(i.ring(), back) == i);
  auto spec = specializeVariableDifferences(p.polarized.toPolynomials(), p.regularSequence);
  CHECK(spec.regular);
  CHECK(bettiOracle(p.polarized) == bettiOracle(i));
}

TEST_CASE("variable differences that are not regular are reported") {
  // identifying x and y in (x*y) gives (x^2): Hilbert series changes the wrong way
  auto it = parseIdeal("ring: QQ[x,y,z]\nx*z, y*z\n");
  auto spec = specializeVariableDifferences(it.generators, {{0, 1}});
  CHECK_FALSE(spec.regular);
}

TEST_CASE("rainbow recognition") {
  auto i = mono("ring: QQ[x11,x12,x13,x21,x22,x23]\nx11*x22, x11*x23, x12*x23\n");
  auto found = rainbowDetect(i);
  REQUIRE(found.outcome == RainbowSearch::Outcome::Found);
  CHECK(found.structure->colorCount == 2);
  CHECK_FALSE(rainbowFromColoring(i, {0, 1, 0, 1, 0, 1}).has_value());
  auto triangle = rainbowDetect(mono("xy,yz,xz"));
  CHECK(triangle.outcome == RainbowSearch::Outcome::NotFound);
  CHECK_FALSE(triangle.detail.empty());
  auto mixed = rainbowDetect(mono("ring: QQ[x,y,z]\nx*y, z\n"));
  CHECK(mixed.outcome == RainbowSearch::Outcome::NotFound);
}

TEST_CASE("ranked projections and the complementary ideal") {
  auto i = mono("ring: QQ[a1,a2,b1,b2]\ncolors: a1,a2 | b1,b2\na1*b1, a1*b2, a2*b2\n");
  auto rs = rainbowDetect(i, i.ring()->colors());
  REQUIRE(rs.structure);
  auto proj = rankedProjection(i, *rs.structure, {0});
  CHECK(proj.toString() == "(a1, a2)");
  auto comp = complementaryIdeal(i, *rs.structure);
  CHECK(comp.toString() == "(a2*b1)");
}

TEST_CASE("powers are recognized") {
  auto m3 = mono("ring: QQ[x,y]\nx^3, x^2*y, x*y^2, y^3\n");
  auto p = recognizePower(m3);
  REQUIRE(p);
  CHECK(p->second == 3);
  CHECK(p->first.toString() == "(x, y)");
  CHECK_FALSE(recognizePower(mono("ring: QQ[x,y]\nx^2, y^2\n")));
  CHECK(mono("ring: QQ[x,y]\nx, y\n").power(2) == mono("ring: QQ[x,y]\nx^2, x*y, y^2\n"));
}
