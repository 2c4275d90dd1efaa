#include "doctest.h"

#include "golodlab/determinantal.hpp"
#include "golodlab/text_format.hpp"

using namespace golod;

TEST_CASE("2x2 minor and 1 x m minors") {
  auto x = LadderMatrix::generic(2, 2);
  CHECK(minor(x, {0, 1}).toString() == "-x12*x21+x11*x22");
  auto row = LadderMatrix::generic(1, 3);
  auto m = maximalMinors(row);
  REQUIRE(m.size() == 3);
  CHECK(m[0].toString() == "x11");
  CHECK(m[2].toString() == "x13");
}

TEST_CASE("expansion along any row gives the same determinant") {
  auto x = LadderMatrix::generic(3, 4);
  for (std::vector<int> cols : {std::vector<int>{0, 1, 2}, {0, 2, 3}, {1, 2, 3}}) {
    auto d0 = minor(x, cols, 0);
    CHECK(d0 == minor(x, cols, 1));
    CHECK(d0 == minor(x, cols, 2));
    CHECK(d0.termCount() == 6);
  }
  // hand value of the leading minor of a ladder with a zero corner
  auto l = LadderMatrix::fromMask("110/111");
  CHECK(l.maskText() == "110/111");
  auto ms = maximalMinors(l);
  REQUIRE(ms.size() == 3);
  CHECK(ms[0].toString() == "-x12*x21+x11*x22");
  CHECK(ms[1].toString() == "x11*x23");
  CHECK(ms[2].toString() == "x12*x23");
}

TEST_CASE("ladder validation") {
  CHECK_THROWS_AS(LadderMatrix::fromMask("101/111"), Error);   // gap in a row
  CHECK_THROWS_AS(LadderMatrix::fromMask("011/110"), Error);   // left end moves back
  CHECK_THROWS_AS(LadderMatrix::fromMask("111/000"), Error);   // empty row
  CHECK_THROWS_AS(LadderMatrix::fromMask("11/11/11"), Error);  // more rows than columns
  CHECK_NOTHROW(LadderMatrix::fromMask("1100/1111"));
  CHECK_NOTHROW(LadderMatrix::fromMask("1110/0111"));
}

TEST_CASE("ideal powers") {
  auto r = makeRing({"a", "b"});
  auto a = parsePolynomial("a", r), b = parsePolynomial("b", r);
  auto sq = idealPower({a, b}, 2);
  REQUIRE(sq.size() == 3);
  CHECK(sq[0].toString() == "a^2");
  CHECK(sq[1].toString() == "a*b");
  CHECK(sq[2].toString() == "b^2");
  CHECK(idealPower({a, b}, 3).size() == 4);
  CHECK_THROWS_AS(idealPower({a}, 0), Error);
}

TEST_CASE("sampled orders start with diagonal and grevlex and are distinct") {
  auto x = LadderMatrix::generic(2, 3);
  auto orders = sampleOrders(x, 8, 1);
  REQUIRE(orders.size() >= 8);
  CHECK(orders[0].describe(*x.ring()) == "diagonal 2x3");
  CHECK(orders[1].kind() == TermOrder::Kind::GrevLex);
  for (std::size_t i = 0; i < orders.size(); ++i)
    for (std::size_t j = i + 1; j < orders.size(); ++j)
      CHECK(orders[i].describe(*x.ring()) != orders[j].describe(*x.ring()));
  auto again = sampleOrders(x, 8, 1);
  CHECK(again.size() == orders.size());
  CHECK(again.back().describe(*x.ring()) == orders.back().describe(*x.ring()));
}

TEST_CASE("sparse theorems for a small ladder") {
  auto x = LadderMatrix::fromMask("110/111");
  auto rep = verifySparseTheorems(x, 2, sampleOrders(x, 3, 2));
  CHECK(rep.allPass);
  CHECK(rep.rainbowRows);
  REQUIRE(rep.powers.size() == 2);
  CHECK(rep.powers[1].initialIsPower);
  CHECK(rep.powers[1].linear);
  CHECK_THROWS_AS(verifySparseTheorems(LadderMatrix::generic(2, 6), 1, {}), Error);
}
