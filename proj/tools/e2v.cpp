// Command-line front end: suites, ad-hoc evaluation and preset listing.

#include "e2v/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#ifndef E2V_DATA_DIR
#define E2V_DATA_DIR "data"
#endif

namespace {

using namespace e2v;

constexpr int kUsage = 3;

struct Options {
  std::string format = "text";
  std::string out;
  unsigned degree_bound = 4;
  std::vector<std::string> params;
  std::string file;
  std::string presets;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "a=1,b=2" (possibly repeated) into a map
std::map<std::string, std::string> parse_assignments(const std::vector<std::string>& items) {
  std::map<std::string, std::string> r;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part.empty()) continue;
      auto eq = part.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == part.size())
        throw UsageError("expected name=value, got '" + part + "'");
      r[part.substr(0, eq)] = part.substr(eq + 1);
    }
  }
  return r;
}

void emit(const std::string& text, const Options& o) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f || !(f << text)) throw UsageError("cannot write " + o.out);
}

void emit_result(const Options& o, const std::string& command, const std::string& preset, const std::vector<std::string>& input,
                 const std::string& result) {
  if (o.format == "json") {
    json j{{"command", command}, {"preset", preset}, {"input", input}, {"result", result}, {"tool_version", E2V_VERSION}};
    emit(j.dump(2) + "\n", o);
  } else {
    emit(result + "\n", o);
  }
}

class App {
 public:
  explicit App(const Options& o) : o_(o) {
    std::filesystem::path dir = o.presets.empty() ? Catalog::default_dir() : std::filesystem::path(o.presets);
    cat_ = std::make_unique<Catalog>(dir, parse_assignments(o.params));
    if (!o.file.empty()) file_ = &cat_->load_file(o.file);
  }

  int check(const std::string& suite) {
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
      throw UsageError("unknown suite '" + suite + "'");
    SuiteRunner runner(*cat_, o_.degree_bound, AnchorTable::load(std::filesystem::path(E2V_DATA_DIR) / "anchors.json"));
    CheckReport rep = runner.run(suite);
    if (file_) {
      for (const auto& r : file_->self_checks) rep.records.push_back(r);
      rep.sort_records();
    }
    emit(o_.format == "json" ? rep.to_json().dump(2) + "\n" : rep.to_text(), o_);
    return rep.exit_code();
  }

  int bracket(const std::string& id, const std::string& a, const std::string& b) {
    const Preset& p = preset(id);
    NCPoly x = cat_->element(id, a), y = cat_->element(id, b);
    NCPoly r = p.poisson ? p.poisson->bracket(x, y) : commutator(x, y);
    emit_result(o_, "bracket", id, {a, b}, r.str());
    return 0;
  }

  int normal_form(const std::string& id, const std::string& a) {
    preset(id);
    emit_result(o_, "normal-form", id, {a}, cat_->element(id, a).str());
    return 0;
  }

  int delta(const std::string& id, const std::string& a) {
    emit_result(o_, "delta", id, {a}, hopf(id).coproduct(cat_->element(id, a)).str());
    return 0;
  }

  int antipode(const std::string& id, const std::string& a) {
    emit_result(o_, "antipode", id, {a}, hopf(id).antipode(cat_->element(id, a)).str());
    return 0;
  }

  int rank(const std::string& id, const std::vector<std::string>& at) {
    const Preset& p = preset(id);
    if (!p.poisson) throw UsageError("preset '" + id + "' has no Poisson bracket");
    auto values = parse_assignments(at);
    const auto& t = *p.tower;
    std::vector<GaussRational> pt;
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto it = values.find(t.gen(i).name);
      if (it == values.end()) throw UsageError("--at needs a value for '" + t.gen(i).name + "'");
      pt.push_back(parse_constant(it->second));
      values.erase(it);
    }
    if (!values.empty()) throw UsageError("unknown generator '" + values.begin()->first + "'");
    std::map<std::string, GaussRational> pm;
    for (const auto& [k, v] : parse_assignments(o_.params)) pm[k] = parse_constant(v);
    emit_result(o_, "rank", id, at, std::to_string(p.poisson->rank_at(pt, pm)));
    return 0;
  }

  int solve_family(const std::string& id) {
    const Preset& p = preset(id);
    if (!p.morphism || p.target_ids.size() != 2) throw UsageError("preset '" + id + "' is not a coaction G -> G (x) M");
    const Preset& g = cat_->get(p.target_ids[0]);
    if (!g.poisson) throw UsageError("group preset '" + g.id + "' has no Poisson bracket");
    std::vector<NCPoly> ansatz;
    if (p.source.contains("ansatz")) {
      for (const auto& s : p.source.at("ansatz")) ansatz.push_back(cat_->element(p.source_id, s.get<std::string>()));
    } else {
      ansatz = default_ansatz(p.tower);
    }
    auto fam = covariant_family_solve(*p.morphism, *g.poisson, ansatz);
    std::string r = "empty";
    if (fam.solution.consistent) {
      r = fam.particular().str() + " + span{";
      auto d = fam.directions();
      for (std::size_t i = 0; i < d.size(); ++i) r += (i ? ", " : "") + d[i].str();
      r += "}";
    }
    emit_result(o_, "solve-family", id, {}, r);
    return 0;
  }

  int presets() {
    std::string text;
    json list = json::array();
    for (const auto& id : cat_->ids()) {
      const Preset& p = cat_->get(id);
      list.push_back({{"id", id}, {"kind", p.kind}, {"description", p.description}, {"anchor", p.anchor}, {"digest", p.digest}});
      std::string line = id;
      line.resize(30, ' ');
      std::string kind = p.kind;
      kind.resize(11, ' ');
      text += line + kind + p.description + (p.anchor.empty() ? "" : " [" + p.anchor + "]") + "\n";
    }
    emit(o_.format == "json" ? list.dump(2) + "\n" : text, o_);
    return 0;
  }

 private:
  const Preset& preset(const std::string& id) {
    if (!cat_->contains(id)) throw UsageError("unknown preset '" + id + "'");
    return cat_->get(id);
  }

  const HopfStructure& hopf(const std::string& id) {
    const Preset& p = preset(id);
    if (!p.hopf) throw UsageError("preset '" + id + "' has no Hopf structure");
    return *p.hopf;
  }

  // monomials of total degree at most 2, with the inverse base generator when present
  static std::vector<NCPoly> default_ansatz(const TowerPtr& t) {
    std::vector<NCPoly> r;
    const int lo = t->base_invertible() ? -1 : 0;
    std::function<void(std::size_t, Exponents&, int)> rec = [&](std::size_t i, Exponents& e, int left) {
      if (i == t->size()) {
        r.push_back(NCPoly::monomial(t, e));
        return;
      }
      for (int k = i == 0 ? lo : 0; std::abs(k) <= left; ++k) {
        e[i] = k;
        rec(i + 1, e, left - std::abs(k));
      }
      e[i] = 0;
    };
    Exponents e(t->size(), 0);
    rec(0, e, 2);
    return r;
  }

  const Options& o_;
  std::unique_ptr<Catalog> cat_;
  const Preset* file_ = nullptr;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Exact verification of Poisson and quantum structures on E(2)", "e2v"};
  cli.set_version_flag("--version", E2V_VERSION);
  cli.require_subcommand(1);
  Options o;
  cli.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  cli.add_option("--out", o.out, "Write the output to a file");
  cli.add_option("--degree-bound", o.degree_bound, "Degree bound for word enumerations")->check(CLI::PositiveNumber);
  cli.add_option("--param", o.params, "Parameter values, e.g. omega=1,k=-2");
  cli.add_option("--file", o.file, "Load an external presentation (preset JSON)");
  cli.add_option("--presets", o.presets, "Preset directory");

  std::string suite, id, a, b;
  std::vector<std::string> at;
  auto* check = cli.add_subcommand("check", "Run a verification suite");
  check->add_option("suite", suite, "Suite name")->required();
  auto* bracket = cli.add_subcommand("bracket", "Poisson bracket, or commutator in a noncommutative preset");
  bracket->add_option("preset", id)->required();
  bracket->add_option("a", a)->required();
  bracket->add_option("b", b)->required();
  auto* nf = cli.add_subcommand("normal-form", "Normal form of an element");
  nf->add_option("preset", id)->required();
  nf->add_option("expr", a)->required();
  auto* delta = cli.add_subcommand("delta", "Coproduct of an element");
  delta->add_option("preset", id)->required();
  delta->add_option("expr", a)->required();
  auto* anti = cli.add_subcommand("antipode", "Antipode of an element");
  anti->add_option("preset", id)->required();
  anti->add_option("expr", a)->required();
  auto* rank = cli.add_subcommand("rank", "Rank of the bracket matrix at a point");
  rank->add_option("preset", id)->required();
  rank->add_option("--at", at, "Generator values, e.g. v=i,n=0,nb=0")->required();
  auto* family = cli.add_subcommand("solve-family", "Covariant brackets for a coaction preset");
  family->add_option("preset", id)->required();
  auto* presets = cli.add_subcommand("presets", "List the presets");
  for (auto* sc : {check, bracket, nf, delta, anti, rank, family, presets}) {
    sc->fallthrough();
  }

  try {
    cli.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return cli.exit(e);
  } catch (const CLI::ParseError& e) {
    cli.exit(e);
    return kUsage;
  }

  try {
    App app(o);
    if (*check) return app.check(suite);
    if (*bracket) return app.bracket(id, a, b);
    if (*nf) return app.normal_form(id, a);
    if (*delta) return app.delta(id, a);
    if (*anti) return app.antipode(id, a);
    if (*rank) return app.rank(id, at);
    if (*family) return app.solve_family(id);
    if (*presets) return app.presets();
  } catch (const SelfCheckFailed& e) {
    std::cerr << "e2v: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "e2v: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
