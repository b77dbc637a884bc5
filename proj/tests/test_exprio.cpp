#include "common.hpp"

using namespace e2v;
using e2v::testing::el;
using e2v::testing::Gen;
using e2v::testing::preset;

TEST(Exprio, ParsesSumOfProducts) {
  EXPECT_EQ(parse_expr("vb*nb - v*n")->describe(), "Sum[Product[vb,nb],-Product[v,n]]");
  EXPECT_EQ(parse_expr("v (x) v")->describe(), "TensorProduct[v,v]");
  EXPECT_EQ(parse_expr("-omega*(v^2 - 1)")->describe(), "Sum[-Product[omega,Sum[Power[v,2],-1]]]");
}

TEST(Exprio, SyntaxErrorsCarryOffsets) {
  try {
    parse_expr("v*(n");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset, 4u);
  }
  EXPECT_THROW(parse_expr(""), ParseError);
  EXPECT_THROW(parse_expr("v +"), ParseError);
  EXPECT_THROW(parse_expr("v $ n"), ParseError);
  EXPECT_THROW(parse_expr("v^"), ParseError);
}

TEST(Exprio, ElaboratesInPresets) {
  EXPECT_EQ(el("fun-e2", "v*vb").str(), "1");
  EXPECT_EQ(el("qe2-nonstd", "n*v"), el("qe2-nonstd", "v*n + omega*v - omega"));
  EXPECT_EQ(el("quantum-cylinder", "m^2*m").str(), "m^3");
  EXPECT_EQ(el("fun-e2", "v^-1"), el("fun-e2", "vb"));
  EXPECT_EQ(el("qe2-nonstd", "n/2 + n/2"), el("qe2-nonstd", "n"));
}

TEST(Exprio, ElaborationErrors) {
  EXPECT_THROW(el("fun-e2", "x"), ElaborationError);
  EXPECT_THROW(el("fun-e2", "n^-1"), ElaborationError);
  EXPECT_THROW(el("fun-e2", "n/v"), ElaborationError);
  EXPECT_THROW(el("fun-e2", "v (x) v"), ElaborationError);
}

TEST(Exprio, CanonicalFormat) {
  EXPECT_EQ(el("fun-e2", "v*n").str(), "v*n");
  EXPECT_EQ(el("fun-e2", "v - v").str(), "0");
  EXPECT_EQ(preset("fun-e2").hopf->coproduct(el("fun-e2", "n")).str(), "v^-1 (x) n + n (x) 1");
}

TEST(Exprio, RoundTripOnRandomNormalForms) {
  Gen g(21);
  for (const char* id : {"fun-e2", "qe2-nonstd", "quantum-cylinder", "quantum-plane", "plane-poisson"}) {
    const TowerPtr& t = preset(id).tower;
    for (int i = 0; i < 40; ++i) {
      NCPoly x = g.element(t, 2, 4, true);
      Scalar c(i % 3 + 1);
      for (const auto& [name, _] : t->parameters().rules()) c = c * (Scalar::param(name) + Scalar(i % 2));
      x = x * NCPoly::constant(t, c);
      EXPECT_EQ(parse_element(x.str(), t), x) << id << ": " << x.str();
    }
  }
}

TEST(Exprio, TensorRoundTrip) {
  const auto& h = *preset("qe2-nonstd").hopf;
  for (const char* s : {"v*n", "vb*nb - v*n", "n*nb + omega*v"}) {
    TensorElement d = h.coproduct(el("qe2-nonstd", s));
    EXPECT_EQ(e2v::testing::tensor2("qe2-nonstd", d.str()), d) << d.str();
  }
}
