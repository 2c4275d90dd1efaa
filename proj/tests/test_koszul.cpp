#include "doctest.h"

#include "golodlab/koszul.hpp"
#include "golodlab/massey_io.hpp"
#include "golodlab/text_format.hpp"

using namespace golod;

namespace {

AlgebraPtr algebraOf(const std::string& text) {
  IdealText it = parseIdeal(text);
  TermOrder order = it.order ? TermOrder::parse(*it.order, *it.ring) : TermOrder::grevlex(it.ring->nvars());
  return QuotientAlgebra::create(buchberger(it.generators, order));
}

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

const char* kGorenstein =
    "ring: QQ[x1,x2,x3]\norder: lex x1>x2>x3\nx1^2, x1*x3, -x1*x2+x3^2, x2*x3, x2^2\n";

}  // namespace

TEST_CASE("differential sign anchors") {
  auto a = QuotientAlgebra::polynomialRing(makeRing({"x1", "x2"}));
  auto e12 = KoszulElement::basis(a, 0b11, mono({0, 0}));
  KoszulElement expect(a);
  expect.add(0b10, mono({1, 0}), 1);
  expect.add(0b01, mono({0, 1}), -1);
  CHECK(differential(e12) == expect);
  CHECK(differential(differential(e12)).isZero());
  auto e1 = KoszulElement::basis(a, 0b01, mono({0, 0}));
  auto e2 = KoszulElement::basis(a, 0b10, mono({0, 0}));
  CHECK(wedge(e1, e1).isZero());
  CHECK(wedge(e1, e2) == wedge(e2, e1).scaled(-1));
}

TEST_CASE("x e1 is a cycle in k[x]/(x^2)") {
  auto a = algebraOf("ring: QQ[x]\nx^2\n");
  KoszulHomology h(a);
  auto xe1 = KoszulElement::basis(a, 1, mono({1}));
  CHECK(h.isCycle(xe1));
  auto b = h.basis(1, {2, 2});
  REQUIRE(b.size() == 1);
  CHECK(h.isBoundary(b[0].rep - xe1) == true);
}

TEST_CASE("Leibniz rule on random pairs") {
  auto a = algebraOf(kGorenstein);
  std::vector<KoszulElement> els;
  unsigned seed = 7;
  auto next = [&] { return seed = seed * 1103515245u + 12345u, (seed >> 16) & 0x7fff; };
  for (int r = 0; r < 12; ++r) {
    KoszulElement e(a);
    std::uint64_t mask = next() % 8;
    for (int t = 0; t < 3; ++t)
      e.add(mask, mono({int(next() % 3), int(next() % 3), int(next() % 3)}), int(next() % 7) - 3);
    els.push_back(e);
  }
  for (const auto& x : els) {
    CHECK(differential(differential(x)).isZero());
    for (const auto& y : els) {
      int sx = x.degree().value_or(0);
      auto lhs = differential(wedge(x, y));
      auto rhs = wedge(differential(x), y) + wedge(x, differential(y)).scaled(sx % 2 ? -1 : 1);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("betti via Koszul matches the oracle") {
  auto it = parseIdeal("xy,yz");
  auto mi = MonomialIdeal::fromPolynomials(it.ring, it.generators);
  KoszulHomology h(QuotientAlgebra::create(mi));
  BettiTable b = bettiViaKoszul(h);
  CHECK(b == bettiOracle(mi));
  CHECK(b.get(1, 2) == 2);
  CHECK(b.get(2, 3) == 1);
}

TEST_CASE("zero ideal has only beta00") {
  KoszulHomology h(QuotientAlgebra::polynomialRing(makeRing({"x", "y"})));
  BettiTable b = bettiViaKoszul(h);
  CHECK(b.entries().size() == 1);
  CHECK(b.get(0, 0) == 1);
}

TEST_CASE("Gorenstein example: totals and a nonzero H1 x H2 product") {
  auto a = algebraOf(kGorenstein);
  KoszulHomology h(a);
  CHECK(bettiViaKoszul(h).totals() == std::vector<long>{1, 5, 5, 1});
  auto basis = homologyBasisAll(h);
  bool found = false;
  for (const auto& x : basis)
    for (const auto& y : basis)
      if (x.degree == 1 && y.degree == 2 && !homologyProduct(h, x, y).empty()) found = true;
  CHECK(found);
  auto build = buildTrivialMassey(h, basis, 2);
  CHECK(build.status == MasseyBuild::Status::Obstructed);
}

TEST_CASE("odd classes square to zero") {
  auto a = algebraOf(kGorenstein);
  KoszulHomology h(a);
  for (const auto& x : homologyBasisAll(h))
    if (x.degree % 2 == 1) CHECK(homologyProduct(h, x, x).empty());
}

namespace {

struct RainbowFixture {
  MonomialIdeal ideal;
  RainbowStructure rs;
};

RainbowFixture rainbowOf(const std::string& text) {
  auto it = parseIdeal(text);
  auto mi = MonomialIdeal::fromPolynomials(it.ring, it.generators);
  auto search = rainbowDetect(mi, it.ring->colors());
  REQUIRE(search.outcome == RainbowSearch::Outcome::Found);
  return {mi, *search.structure};
}

}  // namespace

TEST_CASE("rainbow Massey table on in(I) of 2x3 minors") {
  auto f = rainbowOf("ring: QQ[x11,x12,x13,x21,x22,x23]\ncolors: x11,x12,x13 | x21,x22,x23\nx11*x22, x11*x23, x12*x23\n");
  KoszulHomology h(QuotientAlgebra::create(f.ideal));
  auto basis = rainbowHomologyBasis(h, f.ideal, f.rs);
  CHECK(basis.size() == 5);
  auto rm = rainbowMasseyTable(h, f.ideal, f.rs, 4);
  for (const auto& s : rm.findings) MESSAGE(s);
  CHECK(rm.table.verified);
  CHECK(verifyMasseyTable(rm.table, h).ok);
  for (const auto& x : rm.table.basis)
    for (const auto& y : rm.table.basis) CHECK(homologyProduct(h, x, y).empty());
}

TEST_CASE("rainbow Massey table on the full product I1 I2 sizes (2,2)") {
  auto f = rainbowOf("ring: QQ[x11,x12,x21,x22]\ncolors: x11,x12 | x21,x22\nx11*x21, x11*x22, x12*x21, x12*x22\n");
  KoszulHomology h(QuotientAlgebra::create(f.ideal));
  auto rm = rainbowMasseyTable(h, f.ideal, f.rs, 4);
  for (const auto& s : rm.findings) MESSAGE(s);
  CHECK(rm.table.verified);
  CHECK(rm.table.basis.size() == 9);
}

TEST_CASE("rainbow Massey table with three colors") {
  auto f = rainbowOf(
      "ring: QQ[x11,x12,x21,x22,x31,x32]\ncolors: x11,x12 | x21,x22 | x31,x32\n"
      "x11*x21*x31, x11*x21*x32, x11*x22*x32, x12*x22*x32\n");
  KoszulHomology h(QuotientAlgebra::create(f.ideal));
  REQUIRE(hasLinearResolution(f.ideal));
  auto rm = rainbowMasseyTable(h, f.ideal, f.rs, 3);
  for (const auto& s : rm.findings) MESSAGE(s);
  CHECK(rm.table.verified);
}

TEST_CASE("Massey table JSON round trip re-verifies") {
  auto f = rainbowOf("ring: QQ[x11,x12,x13,x21,x22,x23]\ncolors: x11,x12,x13 | x21,x22,x23\nx11*x22, x11*x23, x12*x23\n");
  KoszulHomology h(QuotientAlgebra::create(f.ideal));
  auto rm = rainbowMasseyTable(h, f.ideal, f.rs, 3);
  std::string text = masseyTableToJson(rm.table, h);
  auto loaded = masseyTableFromJson(text);
  CHECK(loaded.table.verified);
  CHECK(loaded.table.values.size() == rm.table.values.size());
  CHECK(masseyTableToJson(loaded.table, *loaded.homology) == text);

  // a tampered value must not come back verified
  MasseyTable tampered = rm.table;
  auto& v = tampered.values.at({0, 1});
  REQUIRE_FALSE(v.isZero());
  v = v.scaled(2);
  auto bad = masseyTableFromJson(masseyTableToJson(tampered, h));
  CHECK_FALSE(bad.table.verified);
}
