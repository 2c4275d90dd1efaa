#include "doctest.h"

#include "golodlab/golod.hpp"
#include "golodlab/text_format.hpp"

using namespace golod;

namespace {

IdealText load(const std::string& text) { return parseIdeal(text); }

TermOrder orderOf(const IdealText& it) {
  return it.order ? TermOrder::parse(*it.order, *it.ring) : TermOrder::grevlex(it.ring->nvars());
}

std::vector<mpz_class> ones(int k) { return std::vector<mpz_class>(static_cast<std::size_t>(k), 1); }

const char* kGorenstein =
    "ring: QQ[x1,x2,x3]\norder: lex x1>x2>x3\nx1^2, x1*x3, -x1*x2+x3^2, x2*x3, x2^2\n";

}  // namespace

TEST_CASE("serre bound and Poincare series of k[x]/(x^2)") {
  auto it = load("ring: QQ[x]\nx^2\n");
  CHECK(serreBound(std::vector<long>{1, 1}, 1, 8) == ones(9));
  auto alg = QuotientAlgebra::create(buchberger(it.generators, TermOrder::grevlex(1)));
  CHECK(poincareCoeffs(alg, 8, 48).coefficients == ones(9));
}

TEST_CASE("serre bound and Poincare series of the polynomial ring") {
  std::vector<mpz_class> binom{1, 3, 3, 1, 0, 0};
  CHECK(serreBound(std::vector<long>{1}, 3, 5) == binom);
  auto alg = QuotientAlgebra::polynomialRing(makeRing({"a", "b", "c"}));
  CHECK(poincareCoeffs(alg, 5, 15).coefficients == binom);
}

TEST_CASE("Poincare cap is reported") {
  auto it = load("ring: QQ[x,y]\nx^3, y^3\n");
  auto alg = QuotientAlgebra::create(buchberger(it.generators, TermOrder::grevlex(2)));
  CHECK_THROWS_AS(poincareCoeffs(alg, 8, 5), Error);
}

TEST_CASE("fiber invariance") {
  auto g = load(kGorenstein);
  auto fib = fiberInvariant(g.generators, orderOf(g));
  CHECK_FALSE(fib.invariant);
  REQUIRE(fib.ideal);
  CHECK(fib.ideal->totals() == std::vector<long>{1, 5, 5, 1});
  auto m = load("ring: QQ[x11,x12,x13,x21,x22,x23]\nx11*x22-x12*x21, x11*x23-x13*x21, x12*x23-x13*x22\n");
  auto fm = fiberInvariant(m.generators, TermOrder::diagonal(6, 2, 3));
  CHECK(fm.invariant);
  CHECK(fm.reason == "linear squarefree initial ideal");
  auto mono = load("xy,yz");
  CHECK(fiberInvariant(mono.generators, orderOf(mono)).reason == "monomial");
}

TEST_CASE("Gorenstein example is not Golod; its initial ideal is Golod up to 8") {
  auto it = load(kGorenstein);
  auto cert = golodCertificate(it.generators, orderOf(it));
  CHECK(cert.verdict == GolodCertificate::Verdict::NotGolod);
  CHECK(cert.rule == "HomologyProduct");
  REQUIRE(cert.witness);
  CHECK(cert.witness->reverified);
  CHECK(reverifyWitness(*cert.witness));

  auto gb = buchberger(it.generators, orderOf(it));
  auto init = golodCertificate(gb.leadingIdeal().toPolynomials(), orderOf(it));
  CHECK(init.verdict == GolodCertificate::Verdict::GolodUpTo);
  CHECK(init.upTo == 8);
  CHECK(init.serre.poincare == init.serre.bound);
}

TEST_CASE("rainbow initial ideal of 2x3 minors") {
  auto it = load("ring: QQ[x11,x12,x13,x21,x22,x23]\nx11*x22, x11*x23, x12*x23\n");
  auto cert = golodCertificate(it.generators, orderOf(it));
  CHECK(cert.verdict == GolodCertificate::Verdict::GolodProven);
  CHECK(cert.rule == "RainbowLinear");
  CHECK(cert.serre.complete);
  CHECK(cert.serre.poincare == cert.serre.bound);
}

TEST_CASE("minors transfer through fiber invariance") {
  auto m = load("ring: QQ[x11,x12,x13,x21,x22,x23]\nx11*x22-x12*x21, x11*x23-x13*x21, x12*x23-x13*x22\n");
  auto cert = golodCertificate(m.generators, TermOrder::diagonal(6, 2, 3));
  CHECK(cert.verdict == GolodCertificate::Verdict::GolodProven);
  CHECK(cert.chain == std::vector<std::string>{"FiberInvariantTransfer", "RainbowLinear"});
}

TEST_CASE("powers and polarization") {
  auto p = load("ring: QQ[x,y]\nx^2, x*y, y^2\n");
  auto c = golodCertificate(p.generators, orderOf(p));
  CHECK(c.verdict == GolodCertificate::Verdict::GolodProven);
  CHECK(c.rule == "MonomialPower");
  auto q = load("ring: QQ[x,y,z]\nx^2, x*y\n");
  auto cq = golodCertificate(q.generators, orderOf(q));
  CHECK(cq.verdict == GolodCertificate::Verdict::GolodProven);
}
