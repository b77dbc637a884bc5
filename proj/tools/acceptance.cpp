// Acceptance run: one PASS/FAIL line per criterion.
//
// Criteria 5 and 11 are checked literally and fail on the shipped presets (see
// README, "Known failures"). The exit status is 0 when every failing criterion
// is one of those two, so a new regression still turns the run red.

#include "e2v/suites.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>

namespace {

using namespace e2v;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::vector<std::string> details;

  void require(bool cond, const std::string& what) {
    details.push_back(std::string(cond ? "ok: " : "FAILED: ") + what);
    ok = ok && cond;
  }
};

bool all_pass(const std::vector<CheckRecord>& rs, std::string* bad = nullptr) {
  for (const auto& r : rs)
    if (!r.passed()) {
      if (bad) *bad = r.id + " " + r.lhs + " vs " + r.rhs;
      return false;
    }
  return true;
}

bool fields_vanish(const PoissonStructure& p, const std::vector<NCPoly>& c, std::string& shown) {
  auto f = p.field_combination(c);
  shown = "(";
  bool zero = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    shown += (i ? ", " : "") + f[i].str();
    zero = zero && f[i].is_zero();
  }
  shown += ")";
  return zero;
}

std::vector<NCPoly> vm_set(const TowerPtr& t, const NCPoly& m, int rlo, int rhi, int smax) {
  std::vector<NCPoly> r;
  for (int s = 0; s <= smax; ++s)
    for (int e = rlo; e <= rhi; ++e) r.push_back(NCPoly::gen(t, t->gen(0).name, e) * m.pow(static_cast<unsigned>(s)));
  return r;
}

std::string family_str(const CovariantFamily& f) {
  if (!f.solution.consistent) return "empty";
  std::string s = f.particular().str() + " + span{";
  auto d = f.directions();
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? ", " : "") + d[i].str();
  return s + "}";
}

}  // namespace

int main() {
  Catalog cat;
  auto el = [&](const std::string& id, std::string_view t) { return cat.element(id, t); };
  auto P = [&](const std::string& id) -> const Preset& { return cat.get(id); };

  struct Criterion {
    int number;
    std::string title;
    double limit_s;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria;

  criteria.push_back({1, "Jacobi for std-poisson and nonstd-poisson", 1.0, [&] {
                        Outcome o;
                        for (const char* id : {"std-poisson", "nonstd-poisson"}) {
                          auto r = P(id).poisson->jacobi_report();
                          o.require(r.passed(), r.id + (r.passed() ? "" : " witness " + r.witness));
                        }
                        return o;
                      }});

  criteria.push_back({2, "coproduct is a Poisson map for both structures", 2.0, [&] {
                        Outcome o;
                        for (const char* id : {"std-poisson", "nonstd-poisson"}) {
                          const Preset& p = P(id);
                          auto r = poisson_morphism_report(std::string("delta.") + id, p.hopf->coproduct_map(), *p.poisson,
                                                           {&*p.poisson, &*p.poisson});
                          o.require(r.passed(), r.id + (r.passed() ? "" : " at " + r.witness));
                        }
                        return o;
                      }});

  criteria.push_back({3, "plane family is 1-dimensional and contains z*zb and z*zb + k", 2.0, [&] {
                        Outcome o;
                        auto Z = [&](std::string_view t) { return el("plane-poisson", t); };
                        std::vector<NCPoly> ansatz{Z("1"), Z("z"), Z("zb"), Z("z^2"), Z("z*zb"), Z("zb^2")};
                        auto f = covariant_family_solve(*P("coaction-plane").morphism, *P("std-poisson").poisson, ansatz);
                        o.require(f.solution.consistent && f.solution.dimension() == 1, "dimension 1: " + family_str(f));
                        o.require(f.contains(Z("z*zb")), "contains z*zb");
                        o.require(f.contains(Z("z*zb + k")), "contains z*zb + k");
                        return o;
                      }});

  criteria.push_back({4, "cylinder family is 1-dimensional; printed member classified", 2.0, [&] {
                        Outcome o;
                        auto C = [&](std::string_view t) { return el("cylinder-poisson-covariant", t); };
                        std::vector<NCPoly> ansatz{C("vb"), C("1"), C("v"), C("v^2")};
                        auto f = covariant_family_solve(*P("coaction-cylinder").morphism, *P("nonstd-poisson").poisson, ansatz);
                        o.require(f.solution.consistent && f.solution.dimension() == 1, "dimension 1: " + family_str(f));
                        bool in = f.contains(C("-omega*(v^2 - 1) + k"));
                        o.details.push_back(std::string("printed -omega*(v^2 - 1) + k ") +
                                            (in ? "lies in the family (pass)" : "is not in the family (discrepancy)"));
                        return o;
                      }});

  criteria.push_back({5, "Hamiltonian field relations, exactly as printed", 1.0, [&] {
                        Outcome o;
                        std::string s;
                        auto S = [&](std::string_view t) { return el("std-poisson", t); };
                        bool std_ok = fields_vanish(*P("std-poisson").poisson, {S("v*n*nb"), S("nb"), S("n")}, s);
                        o.require(std_ok, "standard: v*n*nb X_v + nb X_n + n X_nb = " + s);
                        auto N = [&](std::string_view t) { return el("nonstd-poisson", t); };
                        bool ns_ok = fields_vanish(*P("nonstd-poisson").poisson, {N("nb - n"), N("v - v^2"), N("v - 1")}, s);
                        o.require(ns_ok, "nonstandard (nonstd-poisson): (v - v^2) X_n + (v - 1) X_nb + (nb - n) X_v = " + s);
                        auto NP = [&](std::string_view t) { return el("nonstd-poisson-printed", t); };
                        bool np_ok = fields_vanish(*P("nonstd-poisson-printed").poisson, {NP("nb - n"), NP("v - v^2"), NP("v - 1")}, s);
                        o.details.push_back(std::string("info: same relation on nonstd-poisson-printed ") + (np_ok ? "holds" : "fails: " + s));
                        return o;
                      }});

  criteria.push_back({6, "exact leaf ranks", 1.0, [&] {
                        Outcome o;
                        auto rank = [&](const std::string& id, std::vector<std::string> pt, std::map<std::string, std::string> pm,
                                        std::size_t want) {
                          std::vector<GaussRational> x;
                          for (const auto& s : pt) x.push_back(parse_constant(s));
                          std::map<std::string, GaussRational> m;
                          for (const auto& [k, v] : pm) m[k] = parse_constant(v);
                          std::size_t r = P(id).poisson->rank_at(x, m);
                          std::string at;
                          for (const auto& s : pt) at += (at.empty() ? "" : ",") + s;
                          o.require(r == want, id + " at (" + at + ") rank " + std::to_string(r) + ", want " + std::to_string(want));
                        };
                        for (const char* v0 : {"1", "i", "(3+4*i)/5"}) rank("std-poisson", {v0, "0", "0"}, {}, 0);
                        for (const char* t : {"0", "1"}) rank("nonstd-poisson", {"1", t, t}, {{"omega", "1"}}, 0);
                        rank("nonstd-poisson", {"i", "0", "0"}, {{"omega", "1"}}, 2);
                        for (const char* v : {"i", "-i"}) rank("cylinder-poisson", {v, "0"}, {{"omega", "1"}, {"k", "-2"}}, 0);
                        rank("cylinder-poisson", {"1", "0"}, {{"omega", "1"}, {"k", "-2"}}, 2);
                        return o;
                      }});

  criteria.push_back({7, "coboundary and cocycle/co-Jacobi for the derived bialgebras", 1.0, [&] {
                        Outcome o;
                        const Preset& sb = P("std-bialg");
                        const Preset& nb = P("nonstd-bialg");
                        o.require(!coboundary_solve(*sb.lie, sb.cocommutator).consistent, "standard cocommutator is not a coboundary");
                        auto cn = coboundary_solve(*nb.lie, nb.cocommutator);
                        o.require(cn.consistent, "nonstandard cocommutator is a coboundary" +
                                                     (cn.consistent ? ", r = " + wedge_str(wedge_from_pairs(3, cn.particular), nb.basis.names)
                                                                    : std::string()));
                        std::string bad;
                        o.require(all_pass(cocycle_cojacobi_report("std", *sb.lie, sb.cocommutator), &bad), "standard cocycle and co-Jacobi " + bad);
                        o.require(all_pass(cocycle_cojacobi_report("nonstd", *nb.lie, nb.cocommutator), &bad),
                                  "nonstandard cocycle and co-Jacobi " + bad);
                        return o;
                      }});

  criteria.push_back({8, "diamond check on the quantum towers; corrupted tower fails", 2.0, [&] {
                        Outcome o;
                        for (const char* id : {"qe2-nonstd", "quantum-cylinder", "quantum-plane"}) {
                          auto r = diamond_check(P(id).tower, 4);
                          o.require(r.passed(), std::string(id) + " " + r.note);
                        }
                        auto bad = diamond_check(P("qe2-corrupted").tower, 3);
                        o.require(!bad.passed() && !bad.witness.empty(), "qe2-corrupted fails with witness " + bad.witness);
                        return o;
                      }});

  criteria.push_back({9, "Hopf axioms and relation compatibility for fun-e2 and qe2-nonstd", 5.0, [&] {
                        Outcome o;
                        for (const char* id : {"fun-e2", "qe2-nonstd"}) {
                          std::string bad;
                          o.require(all_pass(P(id).hopf->axioms_report(), &bad), std::string(id) + " axioms " + bad);
                          o.require(all_pass(P(id).hopf->relations_report(), &bad), std::string(id) + " relations " + bad);
                        }
                        return o;
                      }});

  criteria.push_back({10, "cylinder basis, deg_m additivity, coideal and Delta m", 10.0, [&] {
                        Outcome o;
                        const TowerPtr& cyl = P("quantum-cylinder").tower;
                        NCPoly m = el("quantum-cylinder", "m");
                        auto b28 = vm_set(cyl, m, -3, 3, 3);
                        o.require(linearly_independent(b28), std::to_string(b28.size()) + " elements v^r m^s, |r| <= 3, s <= 3 independent");
                        auto b64 = vm_set(cyl, m, -4, 3, 7);
                        o.require(linearly_independent(b64), std::to_string(b64.size()) + " elements v^r m^s, -4 <= r <= 3, s <= 7 independent");

                        detail::Lcg rng(7);
                        auto random = [&] {
                          NCPoly x(cyl);
                          for (int t = rng.range(1, 3); t > 0; --t)
                            x += Scalar(static_cast<long>(rng.range(-4, 4))) * NCPoly::gen(cyl, "v", rng.range(-2, 2)) * m.pow(rng.range(0, 3));
                          return x;
                        };
                        int pairs = 0;
                        bool additive = true;
                        while (pairs < 100) {
                          NCPoly x = random(), y = random();
                          if (x.is_zero() || y.is_zero()) continue;
                          ++pairs;
                          additive = additive && graded_degree(x * y, 1) == graded_degree(x, 1) + graded_degree(y, 1);
                        }
                        o.require(additive, "deg_m additive on 100 random pairs");

                        Subalgebra b;
                        b.name = "cylinder";
                        b.ambient = P("qe2-nonstd").tower;
                        b.laurent_base = true;
                        b.labels = {"m"};
                        b.gens = {el("qe2-nonstd", "vb*nb - v*n")};
                        const HopfStructure& h = *P("qe2-nonstd").hopf;
                        std::string bad;
                        o.require(all_pass(coideal_report(b, h), &bad), "coideal_report " + bad);
                        TensorElement want = cat.tensor({"qe2-nonstd", "qe2-nonstd"}, "1 (x) (vb*nb - v*n) + vb*nb (x) vb - v*n (x) v");
                        o.require(h.coproduct(b.gens[0]) == want, "Delta m = 1 (x) m + vb*nb (x) vb - v*n (x) v");
                        return o;
                      }});

  criteria.push_back({11, "Hopf-*-ideal I, left coinvariance, Sigma list", 5.0, [&] {
                        Outcome o;
                        const AlgebraMorphism& pi = *P("quotient-I").morphism;
                        const HopfStructure& h = *P("qe2-nonstd").hopf;
                        auto Q = [&](std::string_view t) { return el("qe2-nonstd", t); };
                        std::string bad;
                        o.require(all_pass(hopf_star_ideal_report("I", {{"v-1", Q("v - 1")}, {"n-nb", Q("n - nb")}}, pi, h), &bad),
                                  "Hopf-*-ideal <v - 1, n - nb> " + bad);
                        for (const char* x : {"v", "vb", "vb*nb - v*n"}) {
                          bool left = coinvariance_check(Q(x), pi, h, Side::left);
                          std::string shown = apply_on_leg(h.coproduct(Q(x)), 0, pi).str();
                          o.require(left, std::string("left coinvariant: ") + x + ", (pi (x) id) Delta = " + shown);
                        }
                        o.require(!coinvariance_check(Q("n"), pi, h, Side::left), "n is not left coinvariant");
                        bool right_m = coinvariance_check(Q("vb*nb - v*n"), pi, h, Side::right);
                        o.details.push_back(std::string("info: m is ") + (right_m ? "" : "not ") + "right coinvariant");

                        Subalgebra b;
                        b.name = "sigma";
                        b.ambient = P("qe2-nonstd").tower;
                        b.labels = {"vb", "m"};
                        b.gens = {Q("vb"), Q("vb*nb - v*n")};
                        bool in_i = true;
                        for (const auto& s : sigma_generators(b, h, 4)) in_i = in_i && ideal_member(s.value, pi);
                        o.require(in_i, "Sigma list of {vb, m} lies in I");
                        NCPoly svb = h.antipode(Q("vb")) - NCPoly::constant(b.ambient, h.counit(Q("vb")));
                        o.require(svb == Q("v - 1"), "(S - e1)(vb) = " + svb.str());
                        return o;
                      }});

  AnchorTable anchors = AnchorTable::load(std::filesystem::path(E2V_DATA_DIR) / "anchors.json");
  criteria.push_back({12, "all suite: printed mismatches are discrepancies, exit 0 or 2", 60.0, [&] {
                        Outcome o;
                        Catalog fresh;
                        SuiteRunner runner(fresh, 4, anchors);
                        CheckReport rep = runner.run("all");
                        auto status_of = [&](const std::string& id) -> std::string {
                          for (const auto& r : rep.records)
                            if (r.id == id) return status_str(r.status);
                          return "missing";
                        };
                        for (const char* id : {"printed.bracket.v-m", "printed.relation.cylinder.vb-m"}) {
                          std::string s = status_of(id);
                          o.require(s == "pass" || s == "discrepancy", std::string(id) + " classified " + s);
                        }
                        for (const auto& r : rep.records)
                          if (r.status == Status::fail) o.details.push_back("fail record: " + r.id);
                        o.require(rep.exit_code() == 0 || rep.exit_code() == 2, "exit code " + std::to_string(rep.exit_code()));
                        return o;
                      }});

  criteria.push_back({13, "two runs of the all suite are byte-identical", 60.0, [&] {
                        Outcome o;
                        std::string body[2];
                        for (auto& b : body) {
                          Catalog fresh;
                          SuiteRunner runner(fresh, 4, anchors);
                          b = runner.run("all").to_json().dump(2);
                        }
                        o.require(body[0] == body[1], "identical JSON bodies (" + std::to_string(body[0].size()) + " bytes)");
                        return o;
                      }});

  const std::set<int> known_failures{5, 11};
  bool unexpected = false;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs > c.limit_s) o.require(false, "runtime " + std::to_string(secs) + " s over " + std::to_string(c.limit_s) + " s");
    std::string tag = o.ok ? "PASS" : "FAIL";
    if (!o.ok && known_failures.count(c.number)) tag += " (known)";
    else if (!o.ok) unexpected = true;
    char time[32];
    std::snprintf(time, sizeof time, "%.3f s", secs);
    std::cout << tag << "  " << c.number << ". " << c.title << "  [" << time << "]\n";
    for (const auto& d : o.details) std::cout << "      " << d << "\n";
  }
  return unexpected ? 1 : 0;
}
