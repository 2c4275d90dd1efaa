#include "doctest.h"

#include "golodlab/koszul.hpp"
#include "golodlab/text_format.hpp"

using namespace golod;

namespace {

MonomialIdeal mono(const std::string& text) {
  auto it = parseIdeal(text);
  return MonomialIdeal::fromPolynomials(it.ring, it.generators);
}

struct Pulled {
  TransferResult pushed;
  TransferResult pulled;
};

// Trivial Massey table on the source pushed along phi, and one on the target
// (built on the image basis) pulled back.
Pulled roundTrip(const MonomialIdeal& source, const MonomialIdeal& target, const VariableIdentification& phi,
                 int pMax) {
  AlgebraPtr sa = QuotientAlgebra::create(source);
  AlgebraPtr ta = QuotientAlgebra::create(target);
  KoszulHomology th(ta);
  KoszulHomology sh(sa, th.grading().pullback(phi));
  KoszulMap map{sa, ta, phi};

  Pulled out;
  auto sbasis = homologyBasisAll(sh);
  auto sbuild = buildTrivialMassey(sh, sbasis, pMax);
  REQUIRE(sbuild.status == MasseyBuild::Status::Complete);
  out.pushed = pushforwardMassey(map, sbuild.table, sh, th);

  auto tbasis = extendImageBasis(map, sbasis, th);
  auto tbuild = buildTrivialMassey(th, tbasis, pMax);
  REQUIRE(tbuild.status == MasseyBuild::Status::Complete);
  out.pulled = pullbackMassey(map, tbuild.table, sbasis, sh, th);
  return out;
}

}  // namespace

TEST_CASE("identity map transfers a table both ways") {
  auto i = mono("xy,yz");
  VariableIdentification id{i.ring(), i.ring(), {0, 1, 2}};
  auto r = roundTrip(i, i, id, 3);
  CHECK(r.pushed.ok);
  CHECK(r.pulled.ok);
  CHECK(r.pushed.table.values.size() == r.pulled.table.values.size());
}

TEST_CASE("depolarization transfers tables of m^2") {
  auto i = mono("ring: QQ[x,y]\nx^2, x*y, y^2\n");
  auto p = polarize(i);
  auto r = roundTrip(p.polarized, i, p.depolarize, 3);
  CHECK(r.pushed.ok);
  CHECK(r.pushed.table.verified);
  CHECK(r.pulled.ok);
  CHECK(r.pulled.table.verified);
  // pulled values map onto the target values
  AlgebraPtr ta = QuotientAlgebra::create(i);
  CHECK_FALSE(r.pulled.table.values.empty());
}

TEST_CASE("a map that is not a quasi-isomorphism is refused") {
  // (x*z, y*z) -> (x*z) after x, y -> x changes the Betti table
  auto s = mono("ring: QQ[x,y,z]\nx*z, y*z\n");
  auto t = mono("ring: QQ[x,z]\nx*z\n");
  VariableIdentification phi{s.ring(), t.ring(), {0, 0, 1}};
  AlgebraPtr sa = QuotientAlgebra::create(s);
  AlgebraPtr ta = QuotientAlgebra::create(t);
  KoszulHomology th(ta);
  KoszulHomology sh(sa, th.grading().pullback(phi));
  auto build = buildTrivialMassey(sh, homologyBasisAll(sh), 2);
  auto res = pushforwardMassey(KoszulMap{sa, ta, phi}, build.table, sh, th);
  CHECK_FALSE(res.ok);
  CHECK_FALSE(res.detail.empty());
}
