#include "doctest.h"

#include <algorithm>
#include <random>

#include "golodlab/groebner.hpp"
#include "golodlab/linalg.hpp"
#include "golodlab/text_format.hpp"

using namespace golod;

namespace {

Polynomial P(const std::string& s, const RingPtr& r) { return parsePolynomial(s, r); }

std::vector<std::string> texts(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.toString());
  return out;
}

}  // namespace

TEST_CASE("F_p arithmetic") {
  Field f = Field::prime(7);
  CHECK(f.mul(f.fromInt(3), f.inv(f.fromInt(3))) == 1);
  CHECK(f.fromInt(-1) == 6);
  CHECK(f.normalize(Scalar(1, 2)) == 4);  // 2 * 4 = 8 = 1
  CHECK_THROWS_AS(f.normalize(Scalar(1, 7)), Error);
}

TEST_CASE("polynomial arithmetic and canonical text") {
  auto r = makeRing({"x", "y", "z"});
  auto f = P("x + y", r);
  CHECK((f * f).toString() == "x^2+2*x*y+y^2");
  CHECK((f - f).isZero());
  CHECK(P("2xy - 1/2 z^3", r).toString() == "-1/2*z^3+2*x*y");
  CHECK(P("(x+y)^3", r) == f.pow(3));
  CHECK(P("x*y*z", r).homogeneousDegree() == 3);
  CHECK_FALSE(P("x+y^2", r).isHomogeneous());
  CHECK(P("x+y^2", r).isHomogeneous({2, 1, 1}));
}

TEST_CASE("term orders") {
  auto r = makeRing({"x", "y", "z"});
  Monomial xz2({1, 0, 2}), y3({0, 3, 0});
  CHECK(TermOrder::lex(3).greater(xz2, y3));
  CHECK(TermOrder::grevlex(3).greater(y3, xz2));  // equal degree, smaller z power wins
  CHECK(TermOrder::parse("lex z>y>x", *r).greater(y3, Monomial({5, 0, 0})));
  auto w = TermOrder::parse("weight 1,2,3", *r);
  CHECK(w.greater(xz2, y3));                                    // 7 > 6
  CHECK(w.greater(Monomial({2, 0, 0}), Monomial({0, 1, 0})));   // tie 2 = 2, lex breaks it
  CHECK(TermOrder::parse("lex x>y>z", *r).describe(*r) == "lex x>y>z");
  CHECK_THROWS_AS(TermOrder::parse("lex x>y", *r), Error);
  CHECK_THROWS_AS(TermOrder::parse("degrevlex", *r), Error);
}

TEST_CASE("fixture text round trip") {
  const char* text =
      "ring: F101[a,b,c]\norder: lex a>b>c\ncolors: a,b | c\na^2-3*b*c, a*c+100*b^2, c^5\n";
  auto it = parseIdeal(text);
  CHECK(it.ring->field().characteristic() == 101);
  std::string printed = formatIdeal(it.ring, it.generators, it.order);
  auto again = parseIdeal(printed);
  CHECK(formatIdeal(again.ring, again.generators, again.order) == printed);
  CHECK(texts(again.generators) == texts(it.generators));
  CHECK(again.ring->colors() == it.ring->colors());

  auto inl = parseIdeal("xy,yz");
  CHECK(inl.ring->names() == std::vector<std::string>{"x", "y", "z"});
  CHECK(texts(inl.generators) == std::vector<std::string>{"x*y", "y*z"});
}

TEST_CASE("parse errors carry line and column") {
  try {
    parseIdeal("ring: QQ[x,y]\nx*y,\n  x^^2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(parseIdeal("ring: QQ[x]\nx*q\n"), ParseError);
  CHECK_THROWS_AS(parseIdeal("ring: QQ[x,x]\nx\n"), Error);
}

TEST_CASE("rank and kernel over QQ and F_2") {
  // columns (1,1), (1,-1), (2,0): rank 2 over QQ, 1 over F_2
  std::vector<SparseVec> cols = {{{0, 1}, {1, 1}}, {{0, 1}, {1, -1}}, {{0, 2}}};
  CHECK(rankOf(Field::rationals(), cols) == 2);
  CHECK(kernelOf(Field::rationals(), cols).size() == 1);
  Field f2 = Field::prime(2);
  std::vector<SparseVec> c2 = {{{0, 1}, {1, 1}}, {{0, 1}, {1, 1}}};
  CHECK(rankOf(f2, c2) == 1);
  auto k = kernelOf(Field::rationals(), cols);
  // check the kernel vector: sum_j k_j * col_j = 0
  SparseVec acc;
  for (const auto& [j, c] : k[0]) acc = axpy(Field::rationals(), acc, c, cols[static_cast<std::size_t>(j)]);
  CHECK(acc.empty());
}

TEST_CASE("reduced Groebner basis of a textbook example") {
  // (x^3 - 2xy, x^2 y - 2y^2 + x) has reduced basis {x^2, xy, y^2 - x/2} in grevlex
  auto r = makeRing({"x", "y"});
  auto gb = buchberger({P("x^3-2*x*y", r), P("x^2*y-2*y^2+x", r)}, TermOrder::grevlex(2));
  CHECK(texts(gb.generators()) == std::vector<std::string>{"x^2", "x*y", "y^2-1/2*x"});
  CHECK(isGroebnerBasis(gb.generators(), gb.order()));
}

TEST_CASE("reduced basis ignores generator order; normal form is idempotent") {
  auto r = makeRing({"x", "y", "z"});
  std::vector<Polynomial> gens = {P("x^2-y*z", r), P("x*y-z^2", r), P("y^2-x*z", r), P("x^3+z^3", r)};
  auto order = TermOrder::lex(3);
  auto base = texts(buchberger(gens, order).generators());
  std::mt19937 rng(5);
  for (int k = 0; k < 5; ++k) {
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(texts(buchberger(gens, order).generators()) == base);
  }
  auto gb = buchberger(gens, order);
  auto f = P("x^4*y+z^5-3*x*y*z", r);
  auto nf = gb.normalForm(f);
  CHECK(gb.normalForm(nf) == nf);
  CHECK(gb.contains(f - nf));
}

TEST_CASE("Hilbert function is the same for I and in(I)") {
  auto it = parseIdeal("ring: QQ[x1,x2,x3]\nx1^2, x1*x3, -x1*x2+x3^2, x2*x3, x2^2\n");
  auto order = TermOrder::lex(3);
  auto gb = buchberger(it.generators, order);
  auto byRank = hilbertFunctionByRank(it.generators, 6);
  CHECK(byRank == std::vector<long>{1, 3, 1, 0, 0, 0, 0});
  for (int d = 0; d <= 6; ++d)
    CHECK(static_cast<long>(standardMonomials(gb, d).size()) == byRank[static_cast<std::size_t>(d)]);
  CHECK(hilbertFunction(initialIdeal(it.generators, order), 6) == byRank);
}

TEST_CASE("flat family over a weight vector") {
  auto r = makeRing({"x", "y"});
  std::vector<Polynomial> gens = {P("x^2-y", r)};
  std::vector<int> w = {1, 1};
  auto gb = buchberger(gens, TermOrder::weight(w));
  auto ih = homogenizeIdeal(gb, w);
  REQUIRE(ih.generators.size() == 1);
  CHECK(ih.generators[0].toString() == "x^2-y*t");
  auto zero = specializeT(ih, 0);
  CHECK(texts(zero) == std::vector<std::string>{"x^2"});
  CHECK(sameIdeal(specializeT(ih, 1), gens, gb.order()));
  CHECK(weightInitialForm(P("x^2-y", r), w).toString() == "x^2");
}
