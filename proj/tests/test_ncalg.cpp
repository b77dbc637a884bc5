#include "common.hpp"


using namespace e2v;
using e2v::testing::el;
using e2v::testing::load_json;
using e2v::testing::Gen;
using e2v::testing::preset;

namespace {

NCPoly Q(std::string_view t) { return el("qe2-nonstd", t); }
NCPoly C(std::string_view t) { return el("quantum-cylinder", t); }

std::vector<NCPoly> vm_list(int rmax, int smax) {
  const TowerPtr& t = preset("quantum-cylinder").tower;
  std::vector<NCPoly> r;
  for (int s = 0; s <= smax; ++s)
    for (int e = -rmax; e <= rmax; ++e) r.push_back(NCPoly::gen(t, "v", e) * C("m").pow(static_cast<unsigned>(s)));
  return r;
}

}  // namespace

TEST(Ncalg, TowersLoad) {
  EXPECT_EQ(preset("qe2-nonstd").tower->size(), 3u);
  EXPECT_EQ(preset("quantum-cylinder").tower->size(), 2u);
  EXPECT_TRUE(preset("qe2-nonstd").tower->base_invertible());
  EXPECT_FALSE(preset("quantum-plane").tower->is_commutative());
  EXPECT_TRUE(preset("fun-e2").tower->is_commutative());
}

TEST(Ncalg, ForwardReferenceRejected) {
  Catalog c;
  EXPECT_THROW(load_json(c, "fwd",
                         R"({"name": "fwd", "kind": "algebra", "parameters": [{"name": "omega"}],
                             "tower": [{"gen": "v", "invertible": true},
                                       {"gen": "n", "delta": {"v": "nb"}},
                                       {"gen": "nb"}]})"),
               PresetError);
  EXPECT_THROW(load_json(c, "inv", R"({"name": "inv", "kind": "algebra",
                             "tower": [{"gen": "v", "invertible": true}, {"gen": "n", "invertible": true}]})"),
               PresetError);
}

TEST(Ncalg, NormalForms) {
  // corrected sign of the {n, nb} commutator
  EXPECT_EQ(Q("nb*n"), Q("n*nb + omega*n - omega*nb"));
  EXPECT_EQ(el("qe2-nonstd-printed", "nb*n"), el("qe2-nonstd-printed", "n*nb + omega*nb - omega*n"));
  EXPECT_EQ(C("m*v"), C("v*m + omega*v^2 - omega"));
  EXPECT_EQ(C("v*vb*m"), C("m"));
  EXPECT_EQ(el("quantum-plane", "zb*z"), el("quantum-plane", "q^-1*z*zb"));
}

TEST(Ncalg, Products) {
  EXPECT_EQ(Q("(v + 1)*(v - 1)"), Q("v^2 - 1"));
  EXPECT_EQ(Q("v*n") * Q("vb"), Q("n + omega*vb - omega"));
  EXPECT_EQ(C("m") * C("m"), C("m^2"));
}

TEST(Ncalg, Commutators) {
  EXPECT_EQ(commutator(Q("v"), Q("n")), Q("omega*(1 - v)"));
  EXPECT_EQ(commutator(C("v"), C("m")), C("-omega*(v^2 - 1)"));
  EXPECT_TRUE(commutator(Q("v"), Q("vb")).is_zero());
  // the relation for vb derived from v*vb = 1
  EXPECT_EQ(C("vb*m"), C("m*vb + omega*(1 - vb^2)"));
}

TEST(Ncalg, DiamondCheck) {
  for (const char* id : {"qe2-nonstd", "quantum-cylinder", "quantum-plane"}) {
    auto r = diamond_check(preset(id).tower, 3);
    EXPECT_TRUE(r.passed()) << id << " " << r.witness;
  }
  auto bad = diamond_check(preset("qe2-corrupted").tower, 3);
  EXPECT_FALSE(bad.passed());
  EXPECT_EQ(bad.witness, "nb*n*v");
  EXPECT_FALSE(diamond_check(preset("qe2-nonstd-printed").tower, 3).passed());
  EXPECT_THROW(diamond_check(preset("qe2-nonstd").tower, 2), std::invalid_argument);
}

TEST(Ncalg, SpanSolve) {
  auto basis = vm_list(2, 1);
  auto c = span_solve(C("v*m + omega*v^2 - omega"), basis);
  ASSERT_TRUE(c.has_value());
  std::map<std::string, Scalar> got;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!(*c)[i].is_zero()) got[basis[i].str()] = (*c)[i];
  std::map<std::string, Scalar> want{{"v*m", Scalar(1)}, {"v^2", Scalar::param("omega")}, {"1", -Scalar::param("omega")}};
  EXPECT_EQ(got, want);

  EXPECT_TRUE(linearly_independent(vm_list(3, 3)));
  std::vector<NCPoly> embedded;
  NCPoly m = Q("vb*nb - v*n");
  for (int s = 0; s <= 2; ++s)
    for (int e = -2; e <= 2; ++e) embedded.push_back(NCPoly::gen(preset("qe2-nonstd").tower, "v", e) * m.pow(s));
  EXPECT_FALSE(span_solve(Q("n"), embedded).has_value());
  EXPECT_FALSE(linearly_independent({C("v"), C("2*v")}));
}

TEST(Ncalg, GradedDegree) {
  EXPECT_EQ(graded_degree(C("v^3*m^2"), 1), 2);
  EXPECT_EQ(graded_degree(C("v"), 1), 0);
  EXPECT_THROW(graded_degree(C("0"), 1), std::domain_error);
}

TEST(Ncalg, DegreeAdditivity) {
  Gen g(31);
  const TowerPtr& t = preset("quantum-cylinder").tower;
  for (int i = 0; i < 100; ++i) {
    NCPoly x = g.element(t, 3, 3, true), y = g.element(t, 3, 3, true);
    if (x.is_zero() || y.is_zero()) continue;
    EXPECT_EQ(graded_degree(x * y, 1), graded_degree(x, 1) + graded_degree(y, 1));
  }
}

TEST(Ncalg, AssociativityAndIdempotence) {
  Gen g(32);
  for (const char* id : {"qe2-nonstd", "quantum-cylinder", "quantum-plane", "fun-e2"}) {
    const TowerPtr& t = preset(id).tower;
    for (int i = 0; i < 25; ++i) {
      NCPoly a = g.element(t, 2, 3, true), b = g.element(t, 2, 3, true), c = g.element(t, 1, 2, true);
      EXPECT_EQ((a * b) * c, a * (b * c)) << id;
      NCPoly one = NCPoly::constant(t, Scalar(1));
      EXPECT_EQ(a * one, a);
      EXPECT_EQ(one * a, a);
    }
  }
}

TEST(Ncalg, IndependentNormalMonomials) {
  const TowerPtr& t = preset("qe2-nonstd").tower;
  std::vector<NCPoly> monos;
  for (int a = -1; a <= 1; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) monos.push_back(NCPoly::monomial(t, {a, b, c}));
  EXPECT_TRUE(linearly_independent(monos));
}
