#pragma once

// Verification suites over the shipped presets.

#include "e2v/catalog.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#ifndef E2V_VERSION
#define E2V_VERSION "0.1.0"
#endif

namespace e2v {

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"jacobi",    "multiplicativity", "covariance", "foliation", "bialgebra",
                                              "hopf-axioms", "relations",      "diamond",    "coideal",   "hopf-ideal",
                                              "closure",   "families",         "all"};
  return names;
}

/// Anchor lookup: exact id, else the longest key that is a dotted prefix of the id.
class AnchorTable {
 public:
  AnchorTable() = default;
  explicit AnchorTable(std::map<std::string, std::string> m) : m_(std::move(m)) {}

  static AnchorTable load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) return {};
    json j = json::parse(in);
    std::map<std::string, std::string> m;
    for (const auto& [k, v] : j.items()) m[k] = v.get<std::string>();
    return AnchorTable(std::move(m));
  }

  std::string lookup(const std::string& id) const {
    std::string key = id;
    while (true) {
      if (auto it = m_.find(key); it != m_.end()) return it->second;
      auto dot = key.rfind('.');
      if (dot == std::string::npos) return {};
      key.resize(dot);
    }
  }

 private:
  std::map<std::string, std::string> m_;
};

namespace detail {

inline CheckRecord with_note(CheckRecord r, std::string note) {
  r.note = std::move(note);
  return r;
}

/// A printed value compared with the engine value: pass when equal, otherwise a
/// discrepancy (the engine value is on the left).
inline CheckRecord printed_vs_engine(std::string id, bool equal, std::string engine, std::string printed, std::string note = {}) {
  CheckRecord r = make_record(std::move(id), equal, std::move(engine), std::move(printed));
  if (!equal) r.status = Status::discrepancy;
  r.note = std::move(note);
  return r;
}

/// A check expected to fail: pass when it does.
inline CheckRecord negative_control(std::string id, const CheckRecord& inner) {
  CheckRecord r = make_record(std::move(id), !inner.passed(), inner.lhs, inner.rhs, inner.witness);
  r.note = inner.passed() ? "negative control unexpectedly passed (" + inner.id + ")"
                          : "negative control: expected failure observed in " + inner.id;
  return r;
}

inline CheckRecord demote_to_discrepancy(CheckRecord r, std::string id, std::string note) {
  r.id = std::move(id);
  if (r.status == Status::fail) r.status = Status::discrepancy;
  r.note = std::move(note);
  return r;
}

inline std::string gauss_vec(const std::vector<GaussRational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

/// Small deterministic generator for the randomized suite checks.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    s_ = s_ * 6364136223846793005ull + 1442695040888963407ull;
    return s_ >> 33;
  }
  int range(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::uint64_t s_;
};

}  // namespace detail

class SuiteRunner {
 public:
  SuiteRunner(Catalog& cat, unsigned degree_bound = 4, AnchorTable anchors = {})
      : c_(cat), degree_(std::max(3u, degree_bound)), anchors_(std::move(anchors)) {}

  CheckReport run(const std::string& suite) {
    static const std::map<std::string, void (SuiteRunner::*)(std::vector<CheckRecord>&)> table{
        {"jacobi", &SuiteRunner::jacobi},         {"multiplicativity", &SuiteRunner::multiplicativity},
        {"covariance", &SuiteRunner::covariance}, {"foliation", &SuiteRunner::foliation},
        {"bialgebra", &SuiteRunner::bialgebra},   {"hopf-axioms", &SuiteRunner::hopf_axioms},
        {"relations", &SuiteRunner::relations},   {"diamond", &SuiteRunner::diamond},
        {"coideal", &SuiteRunner::coideal},       {"hopf-ideal", &SuiteRunner::hopf_ideal},
        {"closure", &SuiteRunner::closure},       {"families", &SuiteRunner::families}};
    CheckReport rep;
    rep.suite = suite;
    rep.tool_version = E2V_VERSION;
    if (suite == "all") {
      for (const auto& [name, fn] : table) guarded(name, fn, rep.records);
    } else {
      auto it = table.find(suite);
      if (it == table.end()) throw std::invalid_argument("unknown suite '" + suite + "'");
      guarded(suite, it->second, rep.records);
    }
    for (auto& r : rep.records)
      if (r.anchor.empty()) r.anchor = anchors_.lookup(r.id);
    rep.sort_records();
    rep.preset_digests = c_.digests();
    return rep;
  }

 private:
  using Records = std::vector<CheckRecord>;

  // a throwing suite yields a failing record instead of aborting the run
  void guarded(const std::string& name, void (SuiteRunner::*fn)(Records&), Records& out) {
    try {
      (this->*fn)(out);
    } catch (const std::exception& e) {
      out.push_back(make_record("error." + name, false, "", "", e.what()));
    }
  }

  NCPoly el(const std::string& preset, std::string_view text) { return c_.element(preset, text); }
  const Preset& P(const std::string& id) { return c_.get(id); }

  CheckRecord equal(std::string id, const NCPoly& got, const NCPoly& want) {
    return make_record(std::move(id), got == want, got.str(), want.str());
  }

  // ---- jacobi -------------------------------------------------------------

  void jacobi(Records& out) {
    out.push_back(P("std-poisson").poisson->jacobi_report());
    out.push_back(P("nonstd-poisson").poisson->jacobi_report());
    out.push_back(detail::demote_to_discrepancy(P("nonstd-poisson-printed").poisson->jacobi_report(),
                                                "printed.jacobi.nonstd",
                                                "printed sign of {n,nb}; the corrected table passes"));
  }

  // ---- multiplicativity ---------------------------------------------------

  CheckRecord multiplicative(const std::string& id) {
    const Preset& p = P(id);
    return poisson_morphism_report("multiplicativity." + id, p.hopf->coproduct_map(), *p.poisson, {&*p.poisson, &*p.poisson});
  }

  void multiplicativity(Records& out) {
    out.push_back(multiplicative("std-poisson"));
    out.push_back(multiplicative("nonstd-poisson"));
    out.push_back(detail::demote_to_discrepancy(multiplicative("std-poisson-printed"), "printed.multiplicativity.std",
                                                "printed coproduct of n, nb; the matrix coproduct passes"));
    out.push_back(detail::demote_to_discrepancy(multiplicative("nonstd-poisson-printed"), "printed.multiplicativity.nonstd",
                                                "printed sign of {n,nb}; the corrected table passes"));
  }

  // ---- covariance ---------------------------------------------------------

  CheckRecord covariant(const std::string& coaction, const std::string& rec_id) {
    const Preset& a = P(coaction);
    const Preset& g = P(a.target_ids[0]);
    const Preset& m = P(a.target_ids[1]);
    return poisson_morphism_report(rec_id, *a.morphism, *P(a.source_id).poisson, {&*g.poisson, &*m.poisson});
  }

  void covariance(Records& out) {
    out.push_back(covariant("coaction-plane", "covariance.plane"));
    out.push_back(covariant("coaction-cylinder", "covariance.cylinder"));
    const Preset& proj = P("projection-plane");
    const Preset& std_ = P("std-poisson");
    PoissonStructure plane0 = P("plane-poisson").poisson->specialize("k", GaussRational(0));
    out.push_back(poisson_morphism_report("covariance.projection.k0", *proj.morphism, plane0, {&*std_.poisson}));
    out.push_back(detail::negative_control(
        "control.projection.k-symbolic",
        poisson_morphism_report("projection.k", *proj.morphism, *P("plane-poisson").poisson, {&*std_.poisson})));

    // cylinder generators v and m are invariant under the R subgroup
    const Preset& ns = P("nonstd-poisson");
    const AlgebraMorphism& r = *P("vanish-R").morphism;
    for (auto [label, text] : {std::pair{"v", "v"}, std::pair{"m", "vb*nb - v*n"}}) {
      NCPoly x = el("nonstd-poisson", text);
      out.push_back(make_record(std::string("covariance.invariant.") + label, coinvariance_check(x, r, *ns.hopf, Side::right),
                                x.str(), "(id (x) pi) Delta x = x (x) 1"));
    }
    {
      NCPoly m = el("nonstd-poisson", "vb*nb - v*n");
      TensorElement l = apply_on_leg(ns.hopf->coproduct(m), 0, r);
      out.push_back(detail::printed_vs_engine("printed.covariance.left-invariant.m", coinvariance_check(m, r, *ns.hopf, Side::left),
                                              l.str(), "1 (x) m", "m is invariant under right translation by R only"));
    }
    NCPoly vm = ns.poisson->bracket(el("nonstd-poisson", "v"), el("nonstd-poisson", "vb*nb - v*n"));
    out.push_back(equal("bracket.nonstd.v-m", vm, el("nonstd-poisson", "omega*(v - 1)^2")));
    NCPoly printed = el("nonstd-poisson", "-omega*(v^2 - 1)");
    out.push_back(detail::printed_vs_engine("printed.bracket.v-m", vm == printed, vm.str(), printed.str(),
                                            "{v, vb*nb - v*n} by the Leibniz rule"));
  }

  // ---- foliation ----------------------------------------------------------

  CheckRecord rank_record(const std::string& id, const std::string& preset, std::vector<std::string> point,
                          std::map<std::string, std::string> params, std::size_t want) {
    std::vector<GaussRational> pt;
    for (const auto& s : point) pt.push_back(parse_constant(s));
    std::map<std::string, GaussRational> pm;
    for (const auto& [k, v] : params) pm[k] = parse_constant(v);
    std::size_t r = P(preset).poisson->rank_at(pt, pm);
    std::string at = detail::gauss_vec(pt);
    for (const auto& [k, v] : params) at += " " + k + "=" + v;
    return make_record(id, r == want, std::to_string(r), std::to_string(want), at);
  }

  void foliation(Records& out) {
    out.push_back(rank_record("rank.std.v1", "std-poisson", {"1", "0", "0"}, {}, 0));
    out.push_back(rank_record("rank.std.vi", "std-poisson", {"i", "0", "0"}, {}, 0));
    out.push_back(rank_record("rank.std.v345", "std-poisson", {"(3+4*i)/5", "0", "0"}, {}, 0));
    out.push_back(rank_record("rank.std.generic", "std-poisson", {"1", "1", "2"}, {}, 2));
    out.push_back(rank_record("rank.nonstd.t0", "nonstd-poisson", {"1", "0", "0"}, {{"omega", "1"}}, 0));
    out.push_back(rank_record("rank.nonstd.t1", "nonstd-poisson", {"1", "1", "1"}, {{"omega", "1"}}, 0));
    out.push_back(rank_record("rank.nonstd.vi", "nonstd-poisson", {"i", "0", "0"}, {{"omega", "1"}}, 2));
    out.push_back(rank_record("rank.cylinder.vi", "cylinder-poisson", {"i", "0"}, {{"omega", "1"}, {"k", "-2"}}, 0));
    out.push_back(rank_record("rank.cylinder.v-i", "cylinder-poisson", {"-i", "0"}, {{"omega", "1"}, {"k", "-2"}}, 0));
    out.push_back(rank_record("rank.cylinder.v1", "cylinder-poisson", {"1", "0"}, {{"omega", "1"}, {"k", "-2"}}, 2));
    out.push_back(rank_record("rank.plane.locus", "plane-poisson", {"1", "1"}, {{"k", "-1"}}, 0));
    out.push_back(rank_record("rank.plane.off-locus", "plane-poisson", {"1", "0"}, {{"k", "-1"}}, 2));

    // Hamiltonian field relations
    const PoissonStructure& sp = *P("std-poisson").poisson;
    const PoissonStructure& np = *P("nonstd-poisson").poisson;
    auto fields = [](const PoissonStructure& p, const std::vector<NCPoly>& c) {
      auto f = p.field_combination(c);
      bool zero = std::all_of(f.begin(), f.end(), [](const NCPoly& x) { return x.is_zero(); });
      std::string s = "(";
      for (std::size_t i = 0; i < f.size(); ++i) s += (i ? ", " : "") + f[i].str();
      return std::pair{zero, s + ")"};
    };
    auto S = [&](std::string_view t) { return el("std-poisson", t); };
    auto N = [&](std::string_view t) { return el("nonstd-poisson", t); };
    // the printed fields of the nonstandard structure are those of the verbatim table
    const PoissonStructure& npp = *P("nonstd-poisson-printed").poisson;
    auto NP = [&](std::string_view t) { return el("nonstd-poisson-printed", t); };
    auto [z1, s1] = fields(npp, {NP("nb - n"), NP("v - v^2"), NP("v - 1")});
    out.push_back(make_record("hamiltonian.nonstd-printed.relation", z1, s1, "(0, 0, 0)"));
    auto [z1c, s1c] = fields(np, {N("nb - n"), N("v - v^2"), N("v - 1")});
    out.push_back(detail::printed_vs_engine("printed.hamiltonian.nonstd", z1c, s1c, "(0, 0, 0)",
                                            "relation holds for the verbatim table, not for the Jacobi-corrected one"));
    auto [z1k, s1k] = fields(np, {N("nb - n"), N("v^2 - v"), N("1 - v")});
    out.push_back(make_record("hamiltonian.nonstd.relation", z1k, s1k, "(0, 0, 0)"));
    auto [z2, s2] = fields(sp, {S("n*nb"), S("-v*nb"), S("v*n")});
    out.push_back(make_record("hamiltonian.std.kernel", z2, s2, "(0, 0, 0)"));
    auto [z3, s3] = fields(sp, {S("v*n*nb"), S("nb"), S("n")});
    out.push_back(detail::printed_vs_engine("printed.hamiltonian.std", z3, s3, "(0, 0, 0)",
                                            "printed coefficients (v*n*nb, nb, n); kernel is (n*nb, -v*nb, v*n)"));
    auto [z4, s4] = fields(sp, {S("1"), S("1"), S("0")});
    out.push_back(detail::negative_control("control.hamiltonian.std", make_record("hamiltonian.std.xv-xn", z4, s4, "(0, 0, 0)")));

    // Poisson subgroups
    out.push_back(poisson_ideal_check("ideal.std.circle", sp, {S("n"), S("nb")}, *P("quotient-circle").morphism));
    out.push_back(poisson_ideal_check("ideal.nonstd.R", np, {N("v - 1"), N("n - nb")}, *P("vanish-R").morphism));
    out.push_back(detail::negative_control(
        "control.ideal.std.R", poisson_ideal_check("ideal.std.R", sp, {S("v - 1"), S("n - nb")}, *P("vanish-R-std").morphism)));

    // degenerate locus of the cylinder family: the printed equation against the printed bracket
    const Preset& cyl = P("cylinder-poisson");
    NCPoly br = cyl.poisson->entry(0, 1);
    NCPoly eq = el("cylinder-poisson", "omega*v^2 + omega + k");
    std::map<std::string, GaussRational> pm{{"omega", GaussRational(1)}, {"k", GaussRational(-2)}};
    GaussRational at_i = eval_at(eq, {GaussRational(0, 1), GaussRational(0)}, pm);
    bool same_locus = span_solve(eq, {br}).has_value();
    out.push_back(detail::printed_vs_engine("printed.locus.cylinder", same_locus, br.str(), eq.str(),
                                            "printed locus equation at omega=1, k=-2, v=i evaluates to " + at_i.str()));
  }

  // ---- bialgebra ----------------------------------------------------------

  static bool lie_matches(const LieAlgebra& g, const std::vector<std::tuple<int, int, std::vector<Scalar>>>& want, std::string& got) {
    bool ok = true;
    got.clear();
    for (const auto& [a, b, v] : want) {
      auto r = g.bracket(g.unit(a), g.unit(b));
      got += (got.empty() ? "" : ", ") + std::string("[") + g.basis[a] + "," + g.basis[b] + "] = " + (r == v ? "" : "!") + g.vec_str(r);
      ok = ok && r == v;
    }
    return ok;
  }

  void bialgebra(Records& out) {
    using V = std::vector<Scalar>;
    const Scalar one(1), zero(0), m1(-1);
    const Preset& e2 = P("e2-lie");
    const Preset& sb = P("std-bialg");
    const Preset& nb = P("nonstd-bialg");
    out.push_back(e2.lie->jacobi_report("lie.e2-lie.jacobi"));
    std::string got;
    bool ok = lie_matches(*e2.lie, {{0, 1, V{zero, m1, zero}}, {0, 2, V{zero, zero, one}}, {1, 2, V{zero, zero, zero}}}, got);
    out.push_back(make_record("lie.e2-lie.brackets", ok, got, "[J,X] = -X, [J,Y] = Y, [X,Y] = 0"));
    ok = lie_matches(*sb.lie, {{0, 1, V{zero, one, zero}}, {0, 2, V{zero, zero, m1}}, {1, 2, V{zero, zero, zero}}}, got);
    out.push_back(make_record("lie.std-bialg.brackets", ok, got, "[J,X] = X, [J,Y] = -Y, [X,Y] = 0"));

    const auto& names = sb.basis.names;
    auto ds = sb.cocommutator;
    bool cs = wedge_is_zero(ds[0]) && ds[1] == wedge_of(3, 0, 1) && ds[2] == wedge_of(3, 0, 2);
    out.push_back(make_record("cocommutator.std", cs,
                              "d(J) = " + wedge_str(ds[0], names) + ", d(X) = " + wedge_str(ds[1], names) +
                                  ", d(Y) = " + wedge_str(ds[2], names),
                              "d(J) = 0, d(X) = J^X, d(Y) = J^Y"));
    for (auto& r : cocycle_cojacobi_report("bialgebra.std", *sb.lie, ds)) out.push_back(r);
    auto dn = nb.cocommutator;
    for (auto& r : cocycle_cojacobi_report("bialgebra.nonstd", *nb.lie, dn)) out.push_back(r);

    auto cbs = coboundary_solve(*sb.lie, ds);
    out.push_back(make_record("coboundary.std.empty", !cbs.consistent, cbs.consistent ? "solvable" : "no solution", "no solution"));
    auto cbn = coboundary_solve(*nb.lie, dn);
    out.push_back(make_record("coboundary.nonstd.nonempty", cbn.consistent,
                              cbn.consistent ? wedge_str(wedge_from_pairs(3, cbn.particular), names) : "no solution",
                              "some r", cbn.consistent ? "dimension " + std::to_string(cbn.dimension()) : ""));
    if (cbn.consistent) {
      bool self = coboundary_of(*nb.lie, wedge_from_pairs(3, cbn.particular)) == dn;
      for (const auto& d : cbn.directions) {
        auto cd = coboundary_of(*nb.lie, wedge_from_pairs(3, d));
        self = self && std::all_of(cd.begin(), cd.end(), wedge_is_zero);
      }
      out.push_back(make_record("coboundary.nonstd.self-consistent", self));
    }
    // basis P1 = X + Y, P2 = X - Y
    const Scalar w = Scalar::param("omega");
    auto apply_spec = [&](Wedge x) {
      for (auto& row : x)
        for (auto& e : row) e = c_.specialization().apply(e);
      return x;
    };
    Wedge j_p2 = apply_spec(wedge_add(wedge_of(3, 0, 1, w), wedge_of(3, 0, 2, w), m1));   // w J^P2
    Wedge j_p1 = apply_spec(wedge_add(wedge_of(3, 0, 1, w), wedge_of(3, 0, 2, w)));       // w J^P1
    Wedge p2_p1 = apply_spec(wedge_of(3, 1, 2, Scalar(2) * w));                            // w P2^P1 = 2w X^Y
    auto r_printed = coboundary_of(*nb.lie, j_p2);
    out.push_back(make_record("coboundary.nonstd.r-printed", r_printed == dn, "ad r for r = omega*J^P2", "engine cocommutator"));
    Wedge d_p1 = wedge_add(dn[1], dn[2]), d_p2 = wedge_add(dn[1], dn[2], m1);
    out.push_back(make_record("cocommutator.nonstd.P1", wedge_is_zero(d_p1), wedge_str(d_p1, names), "0"));
    out.push_back(detail::printed_vs_engine("printed.cocommutator.P2", d_p2 == p2_p1, wedge_str(d_p2, names),
                                            wedge_str(p2_p1, names), "printed omega*P2^P1 with P2^P1 = 2*X^Y"));
    bool jp1 = dn[0] == wedge_add(zero_wedge(3), j_p1, m1);
    out.push_back(make_record("cocommutator.nonstd.J", jp1, wedge_str(dn[0], names), "-omega*J^P1"));
    out.push_back(detail::printed_vs_engine("printed.cocommutator.J", dn[0] == j_p2, wedge_str(dn[0], names),
                                            wedge_str(j_p2, names), "printed omega*J^P2"));

    // stabilizer invariance on the plane (J at the origin) and the cylinder (P1 at v=1, m=0)
    using M = Matrix<Scalar>;
    const Scalar k = c_.specialization().apply(Scalar::param("k"));
    Wedge rho_plane = wedge_of(2, 0, 1, k);
    M rot{{zero, m1}, {one, zero}};
    M push_plane = pushforward("coaction-plane", {"0", "0"}, e2.basis.levels);
    out.push_back(stabilizer_invariance_check("stabilizer.plane.rotation", push_plane, rot, ds[0], rho_plane));
    M a_plane = stabilizer_action("coaction-plane", {"0", "0"}, {Scalar(1), zero, zero});
    out.push_back(stabilizer_invariance_check("stabilizer.plane.derived", push_plane, a_plane, ds[0], rho_plane));
    M push_cyl = pushforward("coaction-cylinder", {"1", "0"}, nb.basis.levels);
    M a_cyl = stabilizer_action("coaction-cylinder", {"1", "0"}, {zero, one, one});
    const Preset& cc = P("cylinder-poisson-covariant");
    // bracket value at (v=1, m=0), parameters kept symbolic
    Scalar rho0 = value_at(cc.poisson->entry(0, 1), {GaussRational(1), GaussRational(0)});
    out.push_back(stabilizer_invariance_check("stabilizer.cylinder.P1", push_cyl, a_cyl, wedge_add(dn[1], dn[2]),
                                              wedge_of(2, 0, 1, rho0)));
    out.push_back(detail::negative_control(
        "control.stabilizer.shear",
        stabilizer_invariance_check("stabilizer.shear", M{{one, zero, zero}, {zero, one, zero}}, M{{zero, one}, {zero, zero}},
                                    wedge_of(3, 0, 1), wedge_of(2, 0, 1, k))));
  }

  /// push[j][a]: component j of the fundamental field of basis element a at the point.
  Matrix<Scalar> pushforward(const std::string& coaction, const std::vector<std::string>& point, const std::vector<std::size_t>& levels) {
    const Preset& a = P(coaction);
    auto id = identity_point(*P(a.target_ids[0]).hopf);
    std::vector<GaussRational> pt;
    for (const auto& s : point) pt.push_back(parse_constant(s));
    Matrix<Scalar> m(pt.size(), std::vector<Scalar>(levels.size()));
    for (std::size_t col = 0; col < levels.size(); ++col) {
      auto v = infinitesimal_action(*a.morphism, levels[col], id);
      for (std::size_t j = 0; j < pt.size(); ++j) m[j][col] = value_at(v[j], pt);
    }
    return m;
  }

  /// Jacobian at the point of the field of the stabilizer generator sum_a coeff_a e_a.
  Matrix<Scalar> stabilizer_action(const std::string& coaction, const std::vector<std::string>& point, const std::vector<Scalar>& coeff) {
    const Preset& a = P(coaction);
    auto id = identity_point(*P(a.target_ids[0]).hopf);
    std::vector<GaussRational> pt;
    for (const auto& s : point) pt.push_back(parse_constant(s));
    const std::size_t n = pt.size();
    std::vector<NCPoly> field(n, NCPoly(a.tower));
    for (std::size_t l = 0; l < coeff.size(); ++l) {
      if (coeff[l].is_zero()) continue;
      auto v = infinitesimal_action(*a.morphism, l, id);
      for (std::size_t j = 0; j < n; ++j) field[j] += coeff[l] * v[j];
    }
    Matrix<Scalar> m(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) m[i][k] = value_at(partial(field[i], k), pt);
    return m;
  }

  /// Generators evaluated at the point, parameters kept symbolic.
  static Scalar value_at(const NCPoly& f, const std::vector<GaussRational>& pt) {
    Scalar s;
    for (const auto& [e, c] : f.terms()) {
      GaussRational m(1);
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int p = 0; p < std::abs(e[i]); ++p) m = e[i] > 0 ? m * pt[i] : m / pt[i];
      s += c * Scalar(m);
    }
    return s;
  }

  // ---- hopf-axioms --------------------------------------------------------

  void hopf_axioms(Records& out) {
    for (const char* id : {"fun-e2", "fun-e2-matrix", "qe2-nonstd"})
      for (auto& r : P(id).hopf->axioms_report()) out.push_back(r);
    const HopfStructure& q = *P("qe2-nonstd").hopf;
    out.push_back(equal("antipode.qe2.S2-n", q.antipode(q.antipode(el("qe2-nonstd", "n"))), el("qe2-nonstd", "n + omega*vb - omega")));
    out.push_back(equal("antipode.qe2.S2-nb", q.antipode(q.antipode(el("qe2-nonstd", "nb"))), el("qe2-nonstd", "nb + omega*v - omega")));
    const HopfStructure& f = *P("fun-e2").hopf;
    out.push_back(equal("star.fun-e2.vn", f.star(el("fun-e2", "v*n")), el("fun-e2", "vb*nb")));
    out.push_back(equal("antipode.fun-e2.n", f.antipode(el("fun-e2", "n")), el("fun-e2", "-v*n")));
    TensorElement dvn = f.coproduct(el("fun-e2", "v*n"));
    TensorElement want = c_.tensor({"fun-e2", "fun-e2"}, "1 (x) v*n + v*n (x) v");
    out.push_back(make_record("coproduct.fun-e2.vn", dvn == want, dvn.str(), want.str()));
    bool bad = false;
    CheckRecord witness;
    for (auto& r : P("fun-e2-bad-antipode").hopf->axioms_report())
      if (!r.passed() && !bad) {
        bad = true;
        witness = r;
      }
    if (!bad) witness = make_record("hopf-axioms.fun-e2-bad-antipode", true);
    out.push_back(detail::negative_control("control.antipode.fun-e2-bad-antipode", witness));
  }

  // ---- relations ----------------------------------------------------------

  void relations(Records& out) {
    for (const char* id : {"fun-e2", "qe2-nonstd"})
      for (auto& r : P(id).hopf->relations_report()) out.push_back(r);
    auto Q = [&](std::string_view t) { return el("qe2-nonstd", t); };
    out.push_back(equal("relation.qe2.v-n", commutator(Q("v"), Q("n")), Q("omega*(1 - v)")));
    out.push_back(equal("relation.qe2.v-nb", commutator(Q("v"), Q("nb")), Q("-omega*(v^2 - v)")));
    NCPoly nn = commutator(Q("n"), Q("nb"));
    out.push_back(equal("relation.qe2.n-nb", nn, Q("omega*(nb - n)")));
    out.push_back(detail::printed_vs_engine("printed.relation.qe2.n-nb", nn == Q("omega*(n - nb)"), nn.str(), Q("omega*(n - nb)").str(),
                                            "printed sign of the {n,nb} commutator"));

    auto C = [&](std::string_view t) { return el("quantum-cylinder", t); };
    out.push_back(equal("relation.cylinder.v-m", C("v*m"), C("m*v - omega*(v^2 - 1)")));
    NCPoly vbm = C("vb*m");
    out.push_back(equal("relation.cylinder.vb-m", vbm, C("m*vb + omega*(1 - vb^2)")));
    NCPoly printed = C("m*vb + omega*(vb - vb^2)");
    out.push_back(detail::printed_vs_engine("printed.relation.cylinder.vb-m", vbm == printed, vbm.str(), printed.str(),
                                            "second relation derived from v*vb = 1 and the first"));
    for (auto& r : P("quantum-cylinder").hopf->relations_report())
      out.push_back(detail::demote_to_discrepancy(r, "printed.star." + r.id.substr(std::string("relations.").size()),
                                                  "m* = -m with omega imaginary; holds for real omega"));
    out.push_back(detail::demote_to_discrepancy(P("embed-cylinder").self_checks.front(), "printed.embedding.cylinder",
                                                "[v, vb*nb - v*n] = omega*(v - 1)^2 in quantum E(2)"));
  }

  // ---- diamond ------------------------------------------------------------

  void diamond(Records& out) {
    for (const char* id : {"qe2-nonstd", "quantum-cylinder", "quantum-plane"}) out.push_back(diamond_check(P(id).tower, degree_));
    out.push_back(detail::negative_control("control.diamond.qe2-corrupted", diamond_check(P("qe2-corrupted").tower, 3)));
    out.push_back(detail::demote_to_discrepancy(diamond_check(P("qe2-nonstd-printed").tower, 3), "printed.diamond.qe2",
                                                "printed level-2 data sigma(n) = n + omega, delta(n) = -omega*n"));
  }

  // ---- coideal ------------------------------------------------------------

  Subalgebra cylinder_in_qe2() {
    Subalgebra b;
    b.name = "cylinder";
    b.ambient = P("qe2-nonstd").tower;
    b.laurent_base = true;
    b.labels = {"m"};
    b.gens = {el("qe2-nonstd", "vb*nb - v*n")};
    return b;
  }

  static std::vector<NCPoly> vm_basis(const TowerPtr& t, const NCPoly& m, int rlo, int rhi, int smax) {
    std::vector<NCPoly> r;
    const std::string& v = t->gen(0).name;
    for (int s = 0; s <= smax; ++s) {
      NCPoly ms = m.pow(static_cast<unsigned>(s));
      for (int e = rlo; e <= rhi; ++e) r.push_back(NCPoly::gen(t, v, e) * ms);
    }
    return r;
  }

  void coideal(Records& out) {
    Subalgebra b = cylinder_in_qe2();
    const HopfStructure& h = *P("qe2-nonstd").hopf;
    for (auto& r : coideal_report(b, h)) out.push_back(r);
    TensorElement dm = h.coproduct(b.gens[0]);
    TensorElement want = c_.tensor({"qe2-nonstd", "qe2-nonstd"}, "1 (x) (vb*nb - v*n) + vb*nb (x) vb - v*n (x) v");
    out.push_back(make_record("coproduct.qe2.m", dm == want, dm.str(), want.str()));

    auto dec = subalgebra_membership(el("qe2-nonstd", "v^2*(vb*nb - v*n)"), b);
    out.push_back(make_record("membership.v2m", dec && decomposition_str(*dec) == "v^2*m", dec ? decomposition_str(*dec) : "none", "v^2*m"));
    auto none = subalgebra_membership(el("qe2-nonstd", "n"), b);
    out.push_back(make_record("membership.n", !none, none ? decomposition_str(*none) : "none", "none"));

    NCPoly ms = h.star(b.gens[0]);
    out.push_back(equal("star.qe2.m", ms, el("qe2-nonstd", "-(vb*nb - v*n) + omega*(v - vb)")));
    NCPoly printed = -b.gens[0];
    out.push_back(detail::printed_vs_engine("printed.star.m", ms == printed, ms.str(), printed.str(), "embedded m = vb*nb - v*n"));

    const TowerPtr& cyl = P("quantum-cylinder").tower;
    NCPoly m = el("quantum-cylinder", "m");
    auto b28 = vm_basis(cyl, m, -3, 3, 3);
    out.push_back(make_record("basis.cylinder.r3-s3", linearly_independent(b28), std::to_string(b28.size()) + " elements", "independent"));
    auto b64 = vm_basis(cyl, m, -4, 3, 7);
    out.push_back(make_record("basis.cylinder.grid64", linearly_independent(b64), std::to_string(b64.size()) + " elements", "independent"));
    auto e28 = vm_basis(b.ambient, b.gens[0], -3, 3, 3);
    out.push_back(make_record("basis.embedded.r3-s3", linearly_independent(e28), std::to_string(e28.size()) + " elements", "independent"));

    detail::Lcg rng(20240917);
    auto random_elem = [&]() {
      NCPoly x(cyl);
      int terms = rng.range(1, 3);
      for (int t = 0; t < terms; ++t)
        x += Scalar(static_cast<long>(rng.range(1, 5))) * NCPoly::gen(cyl, "v", rng.range(-3, 3)) * m.pow(rng.range(0, 3));
      return x;
    };
    bool additive = true;
    std::string bad;
    for (int i = 0; i < 100 && additive; ++i) {
      NCPoly x = random_elem(), y = random_elem();
      if (x.is_zero() || y.is_zero()) continue;
      if (graded_degree(x * y, 1) != graded_degree(x, 1) + graded_degree(y, 1)) {
        additive = false;
        bad = "(" + x.str() + ")*(" + y.str() + ")";
      }
    }
    out.push_back(make_record("degree.cylinder.additive", additive, "deg_m(xy)", "deg_m(x) + deg_m(y)", bad));

    // the subalgebra generated by n is a right coideal but not star-invariant
    Subalgebra bn;
    bn.name = "n";
    bn.ambient = P("fun-e2").tower;
    bn.labels = {"n"};
    bn.gens = {el("fun-e2", "n")};
    auto rn = coideal_report(bn, *P("fun-e2").hopf);
    CheckRecord first = make_record("coideal.n", true);
    for (const auto& r : rn)
      if (!r.passed()) {
        first = r;
        break;
      }
    out.push_back(detail::negative_control("control.coideal.n", first));
  }

  // ---- hopf-ideal ---------------------------------------------------------

  void hopf_ideal(Records& out) {
    const AlgebraMorphism& pi = *P("quotient-I").morphism;
    const HopfStructure& h = *P("qe2-nonstd").hopf;
    auto Q = [&](std::string_view t) { return el("qe2-nonstd", t); };
    out.push_back(detail::with_note(quotient_check(pi), "quotient-I"));
    out.push_back(quotient_check(*P("quotient-circle").morphism));
    for (auto& r : hopf_star_ideal_report("hopf-ideal.I", {{"v-1", Q("v - 1")}, {"n-nb", Q("n - nb")}}, pi, h)) out.push_back(r);
    out.push_back(make_record("ideal.member.v-1", ideal_member(Q("v - 1"), pi)));
    out.push_back(make_record("ideal.member.v-vb", ideal_member(Q("v - vb"), pi)));
    out.push_back(make_record("ideal.member.n", !ideal_member(Q("n"), pi), pi.apply(Q("n")).str(), "nonzero"));

    TensorElement d1 = h.coproduct(Q("v - 1"));
    TensorElement w1 = c_.tensor({"qe2-nonstd", "qe2-nonstd"}, "(v - 1) (x) 1 + v (x) (v - 1)");
    out.push_back(make_record("coproduct.qe2.v-1", d1 == w1, d1.str(), w1.str()));
    TensorElement d2 = h.coproduct(Q("n - nb"));
    TensorElement w2 = c_.tensor({"qe2-nonstd", "qe2-nonstd"}, "vb (x) (n - nb) + (n - nb) (x) 1 + (vb - v) (x) nb");
    out.push_back(make_record("coproduct.qe2.n-nb", d2 == w2, d2.str(), w2.str()));

    NCPoly s1 = h.antipode(Q("v - 1"));
    out.push_back(equal("antipode.qe2.v-1", s1, Q("vb - 1")));
    NCPoly p1 = Q("-vb*(1 - v)");
    out.push_back(detail::printed_vs_engine("printed.antipode.v-1", s1 == p1, s1.str(), p1.str(), "sign only; both lie in I"));
    NCPoly s2 = h.antipode(Q("n - nb"));
    out.push_back(equal("antipode.qe2.n-nb", s2, Q("vb*nb - v*n")));
    NCPoly p2 = Q("vb*(nb - n) - (v - 1)*(vb + 1)*n");
    out.push_back(detail::printed_vs_engine("printed.antipode.n-nb", s2 == p2, s2.str(), p2.str(), "printed expansion of m"));

    auto rn = hopf_star_ideal_report("hopf-ideal.n", {{"n", el("fun-e2", "n")}}, *P("quotient-n").morphism, *P("fun-e2").hopf);
    CheckRecord first = make_record("hopf-ideal.n", true);
    for (const auto& r : rn)
      if (!r.passed()) {
        first = r;
        break;
      }
    out.push_back(detail::negative_control("control.hopf-ideal.n", first));
  }

  // ---- closure ------------------------------------------------------------

  void closure(Records& out) {
    const AlgebraMorphism& pi = *P("quotient-I").morphism;
    const HopfStructure& h = *P("qe2-nonstd").hopf;
    auto Q = [&](std::string_view t) { return el("qe2-nonstd", t); };
    Subalgebra b = cylinder_in_qe2();
    // B is a right coideal, so its elements are the right coinvariants of A -> A/I
    for (auto [label, text] : {std::pair{"v", "v"}, std::pair{"vb", "vb"}, std::pair{"m", "vb*nb - v*n"}})
      out.push_back(make_record(std::string("closure.coinvariant.") + label, coinvariance_check(Q(text), pi, h, Side::right), Q(text).str(),
                                "(id (x) pi) Delta x = x (x) 1"));
    TensorElement lm = apply_on_leg(h.coproduct(Q("vb*nb - v*n")), 0, pi);
    out.push_back(detail::printed_vs_engine("printed.closure.left-coinvariant.m", coinvariance_check(Q("vb*nb - v*n"), pi, h, Side::left),
                                            lm.str(), "1 (x) m", "the left leg keeps t (x) (vb - v)"));
    TensorElement dn = apply_on_leg(h.coproduct(Q("n")), 1, pi);
    out.push_back(make_record("closure.not-coinvariant.n", !coinvariance_check(Q("n"), pi, h, Side::right), dn.str(), "differs from n (x) 1"));

    const int bound = static_cast<int>(degree_ / 2);
    bool all = true;
    std::string bad;
    for (const auto& x : vm_basis(b.ambient, b.gens[0], -bound, bound, bound))
      if (!coinvariance_check(x, pi, h, Side::right)) {
        all = false;
        bad = x.str();
        break;
      }
    out.push_back(make_record("closure.coinvariant.vm-basis", all, "v^r m^s, |r|,s <= " + std::to_string(bound), "coinvariant", bad));
    bool none = true;
    for (const char* t : {"n", "nb", "n^2", "v*nb", "n^2*nb"})
      if (coinvariance_check(Q(t), pi, h, Side::right)) {
        none = false;
        bad = t;
      }
    out.push_back(make_record("closure.not-coinvariant.unbalanced", none, "n, nb, n^2, v*nb, n^2*nb", "not coinvariant", none ? "" : bad));

    auto sig = sigma_generators(b, h, std::max(1, bound));
    std::vector<NCPoly> vals;
    for (const auto& s : sig) {
      vals.push_back(s.value);
      out.push_back(make_record("closure.sigma." + s.label, ideal_member(s.value, pi), s.value.str(), "in I"));
    }
    NCPoly svb = (h.antipode(Q("vb")) - Q("1"));
    out.push_back(equal("closure.S-e.vb", svb, Q("v - 1")));
    NCPoly sm = h.antipode(b.gens[0]) - NCPoly::constant(b.ambient, h.counit(b.gens[0]));
    out.push_back(equal("closure.S-e.m", sm, Q("n - nb + omega*(vb - v)")));
    out.push_back(detail::printed_vs_engine("printed.closure.S-e.m", sm == Q("n - nb"), sm.str(), "n - nb",
                                            "differs by omega*(vb - v), an element of I"));
    for (auto [label, text] : {std::pair{"v-1", "v - 1"}, std::pair{"n-nb", "n - nb"}}) {
      auto c = span_solve(Q(text), vals);
      out.push_back(make_record(std::string("closure.generates.") + label, c.has_value(), Q(text).str(), "span of the Sigma list"));
    }
  }

  // ---- families -----------------------------------------------------------

  void families(Records& out) {
    auto Z = [&](std::string_view t) { return el("plane-poisson", t); };
    const Preset& std_ = P("std-poisson");
    std::vector<NCPoly> pa{Z("z*zb"), Z("z"), Z("zb"), Z("1"), Z("z^2"), Z("zb^2")};
    auto fam = covariant_family_solve(*P("coaction-plane").morphism, *std_.poisson, pa);
    std::string desc = fam.solution.consistent ? fam.particular().str() + " + span{" + join(fam.directions()) + "}" : "empty";
    out.push_back(make_record("family.plane.dimension", fam.solution.consistent && fam.solution.dimension() == 1, desc, "dimension 1"));
    out.push_back(make_record("family.plane.contains", fam.contains(Z("z*zb")) && fam.contains(Z("z*zb + k")), desc, "z*zb, z*zb + k"));
    auto sw = covariant_family_solve(*P("coaction-plane-swapped").morphism, *std_.poisson, pa);
    out.push_back(make_record("family.plane.swapped-empty", !sw.solution.consistent, sw.solution.consistent ? "nonempty" : "empty", "empty"));

    auto Cy = [&](std::string_view t) { return el("cylinder-poisson-covariant", t); };
    const Preset& ns = P("nonstd-poisson");
    std::vector<NCPoly> ca{Cy("v^2"), Cy("v"), Cy("1"), Cy("vb")};
    auto cf = covariant_family_solve(*P("coaction-cylinder").morphism, *ns.poisson, ca);
    std::string cdesc = cf.solution.consistent ? cf.particular().str() + " + span{" + join(cf.directions()) + "}" : "empty";
    out.push_back(make_record("family.cylinder.dimension", cf.solution.consistent && cf.solution.dimension() == 1, cdesc, "dimension 1"));
    out.push_back(make_record("family.cylinder.contains", cf.contains(Cy("omega*(v - 1)^2 + k*v")), cdesc, "omega*(v - 1)^2 + k*v"));
    NCPoly printed = Cy("-omega*(v^2 - 1) + k");
    bool in = cf.contains(printed);
    out.push_back(detail::printed_vs_engine("printed.family.cylinder", in, cdesc, printed.str(), in ? "" : "printed family is not covariant"));
  }

  static std::string join(const std::vector<NCPoly>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x.str();
    return s;
  }

  Catalog& c_;
  unsigned degree_;
  AnchorTable anchors_;
};

}  // namespace e2v
