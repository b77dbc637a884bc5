#include "common.hpp"

using namespace e2v;
using e2v::testing::el;
using e2v::testing::Gen;
using e2v::testing::preset;

namespace {

NCPoly Q(std::string_view t) { return el("qe2-nonstd", t); }
const HopfStructure& qe2() { return *preset("qe2-nonstd").hopf; }
const AlgebraMorphism& pi() { return *preset("quotient-I").morphism; }

Subalgebra cylinder() {
  Subalgebra b;
  b.name = "cylinder";
  b.ambient = preset("qe2-nonstd").tower;
  b.laurent_base = true;
  b.labels = {"m"};
  b.gens = {Q("vb*nb - v*n")};
  return b;
}

const CheckRecord& find(const std::vector<CheckRecord>& rs, const std::string& id) {
  for (const auto& r : rs)
    if (r.id == id) return r;
  throw std::out_of_range(id);
}

}  // namespace

TEST(Homspace, Membership) {
  auto d = subalgebra_membership(Q("v^2*(vb*nb - v*n)"), cylinder());
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(decomposition_str(*d), "v^2*m");
  EXPECT_FALSE(subalgebra_membership(Q("n"), cylinder()).has_value());
  auto c = subalgebra_membership(Q("omega"), cylinder());
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(decomposition_str(*c), "omega");
  auto m2 = subalgebra_membership(Q("(vb*nb - v*n)^2 - 3*vb"), cylinder());
  ASSERT_TRUE(m2.has_value());
  EXPECT_EQ(decomposition_str(*m2), "-3*v^-1 + m^2");
}

TEST(Homspace, CylinderIsARightCoideal) {
  auto rs = coideal_report(cylinder(), qe2());
  EXPECT_TRUE(find(rs, "coideal.cylinder.v.coproduct").passed());
  const auto& m = find(rs, "coideal.cylinder.m.coproduct");
  EXPECT_TRUE(m.passed());
  EXPECT_EQ(m.rhs, "right legs {-v, v^-1, -v*n + v^-1*nb}");
  for (const auto& r : rs) EXPECT_TRUE(r.passed()) << r.id;
}

TEST(Homspace, SubalgebraOfNIsNotStarInvariant) {
  Subalgebra bn;
  bn.name = "n";
  bn.ambient = preset("fun-e2").tower;
  bn.labels = {"n"};
  bn.gens = {el("fun-e2", "n")};
  auto rs = coideal_report(bn, *preset("fun-e2").hopf);
  EXPECT_TRUE(find(rs, "coideal.n.n.coproduct").passed());
  EXPECT_FALSE(find(rs, "coideal.n.n.star").passed());
}

TEST(Homspace, Quotients) {
  EXPECT_TRUE(quotient_check(pi()).passed());
  EXPECT_TRUE(quotient_check(*preset("quotient-circle").morphism).passed());
  const Preset& line = preset("t-line");
  EXPECT_ANY_THROW(AlgebraMorphism("bad", preset("qe2-nonstd").tower, {line.tower},
                                   {TensorElement::from(el("t-line", "t")), TensorElement::from(el("t-line", "t")),
                                    TensorElement::from(el("t-line", "t"))}));
}

TEST(Homspace, IdealMembership) {
  EXPECT_TRUE(ideal_member(Q("v - 1"), pi()));
  EXPECT_TRUE(ideal_member(Q("v - vb"), pi()));
  EXPECT_FALSE(ideal_member(Q("n"), pi()));
}

TEST(Homspace, IdealIsTwoSided) {
  Gen g(71);
  const TowerPtr& t = preset("qe2-nonstd").tower;
  for (int i = 0; i < 30; ++i) {
    NCPoly x = g.element(t, 2, 2, true), y = g.element(t, 2, 2, true);
    for (const char* gen : {"v - 1", "n - nb"}) EXPECT_TRUE(ideal_member(x * Q(gen) * y, pi())) << x.str() << " " << y.str();
  }
}

TEST(Homspace, HopfStarIdeal) {
  auto rs = hopf_star_ideal_report("I", {{"v-1", Q("v - 1")}, {"n-nb", Q("n - nb")}}, pi(), qe2());
  EXPECT_EQ(rs.size(), 8u);
  for (const auto& r : rs) EXPECT_TRUE(r.passed()) << r.id;
  EXPECT_EQ(qe2().coproduct(Q("n - nb")),
            e2v::testing::tensor2("qe2-nonstd", "vb (x) (n - nb) + (n - nb) (x) 1 + (vb - v) (x) nb"));
  EXPECT_THROW(hopf_star_ideal_report("J", {{"n", Q("n")}}, pi(), qe2()), std::invalid_argument);

  auto rn = hopf_star_ideal_report("N", {{"n", el("fun-e2", "n")}}, *preset("quotient-n").morphism, *preset("fun-e2").hopf);
  EXPECT_TRUE(find(rn, "N.n.coideal").passed());
  EXPECT_FALSE(find(rn, "N.n.star").passed());
}

TEST(Homspace, Coinvariance) {
  for (const char* x : {"v", "vb", "vb*nb - v*n"}) EXPECT_TRUE(coinvariance_check(Q(x), pi(), qe2(), Side::right)) << x;
  EXPECT_FALSE(coinvariance_check(Q("n"), pi(), qe2(), Side::right));
  EXPECT_TRUE(coinvariance_check(Q("v"), pi(), qe2(), Side::left));
  EXPECT_FALSE(coinvariance_check(Q("n"), pi(), qe2(), Side::left));
  // m = vb*nb - v*n keeps t (x) (vb - v) on the left
  EXPECT_FALSE(coinvariance_check(Q("vb*nb - v*n"), pi(), qe2(), Side::left));
  TensorElement l = apply_on_leg(qe2().coproduct(Q("vb*nb - v*n")), 0, pi());
  TensorElement want = TensorElement::product_of({el("t-line", "1"), Q("vb*nb - v*n")}) +
                       TensorElement::product_of({el("t-line", "t"), Q("vb - v")});
  EXPECT_EQ(l, want);
}

TEST(Homspace, CoinvariantBasis) {
  Subalgebra b = cylinder();
  for (int r = -2; r <= 2; ++r)
    for (unsigned s = 0; s <= 2; ++s) {
      NCPoly x = NCPoly::gen(b.ambient, "v", r) * b.gens[0].pow(s);
      EXPECT_TRUE(coinvariance_check(x, pi(), qe2(), Side::right)) << x.str();
    }
}

TEST(Homspace, SigmaList) {
  Subalgebra b;
  b.name = "vbm";
  b.ambient = preset("qe2-nonstd").tower;
  b.labels = {"vb", "m"};
  b.gens = {Q("vb"), Q("vb*nb - v*n")};
  auto sig = sigma_generators(b, qe2(), 3);
  EXPECT_EQ(sig.size(), 6u);
  for (const auto& s : sig) EXPECT_TRUE(ideal_member(s.value, pi())) << s.label;
  EXPECT_EQ(sig[0].label, "(S-e)(vb)");
  EXPECT_EQ(sig[0].value, Q("v - 1"));
  EXPECT_EQ(sig[3].value, Q("n - nb + omega*(vb - v)"));
  EXPECT_THROW(sigma_generators(b, qe2(), 0), std::invalid_argument);
}
