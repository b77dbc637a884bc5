#pragma once

// Preset loader: JSON descriptions of algebras, morphisms and Lie bialgebras.

#include "e2v/expr.hpp"
#include "e2v/homspace.hpp"
#include "e2v/liebialg.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>

#ifndef E2V_PRESET_DIR
#define E2V_PRESET_DIR "presets"
#endif

namespace e2v {

using json = nlohmann::json;

struct UnknownPreset : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct PresetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A strict preset whose structural self-check fails.
struct SelfCheckFailed : PresetError {
  using PresetError::PresetError;
};

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t x) {
  std::ostringstream o;
  o << std::hex;
  o.width(16);
  o.fill('0');
  o << x;
  return o.str();
}

/// A constant such as "-2", "3/4", "i" or "(3+4*i)/5".
inline GaussRational parse_constant(std::string_view text) {
  static const TowerPtr scratch = OreTower::base("constant", {}, {"_", false});
  NCPoly p = parse_element(text, scratch);
  if (!p.is_constant() || !p.constant_value().is_constant())
    throw std::invalid_argument("not a constant: '" + std::string(text) + "'");
  return p.constant_value().constant_value();
}

/// Fixed values for formal parameters, applied to every coefficient after parsing.
struct Specialization {
  std::map<std::string, GaussRational> values;

  bool empty() const { return values.empty(); }
  Scalar apply(Scalar s) const {
    for (const auto& [n, v] : values) s = s.substitute(n, v);
    return s;
  }
  Terms apply(const Terms& t) const {
    if (values.empty()) return t;
    Terms r;
    for (const auto& [e, c] : t) add_term(r, e, apply(c));
    return r;
  }
  NCPoly apply(const NCPoly& x) const { return values.empty() ? x : NCPoly(x.tower(), apply(x.terms())); }
  TensorElement apply(const TensorElement& x) const {
    if (values.empty()) return x;
    TensorElement r(x.legs());
    for (const auto& [k, c] : x.terms()) r.add(k, apply(c));
    return r;
  }
};

struct Preset {
  std::string id;
  std::string kind;  // algebra, morphism, lie, bialgebra
  std::string description;
  std::string anchor;
  bool verbatim = false;
  json source;  // after "extends" resolution
  std::string digest;

  TowerPtr tower;  // the algebra, or the source algebra of a morphism
  std::optional<PoissonStructure> poisson;
  std::optional<HopfStructure> hopf;

  std::string source_id;
  std::vector<std::string> target_ids;
  std::optional<AlgebraMorphism> morphism;

  std::string group_id;
  LieBasis basis;
  std::optional<LieAlgebra> lie;
  std::vector<Wedge> cocommutator;

  std::vector<CheckRecord> self_checks;
};

namespace detail {

inline const json& need(const json& j, const char* key, const std::string& ctx) {
  if (!j.contains(key)) throw PresetError(ctx + ": missing \"" + key + "\"");
  return j.at(key);
}

/// Child fields replace parent fields, except "poisson" (per pair) and "hopf"
/// (per table, per generator).
inline json merge_preset(const json& parent, const json& child) {
  json r = parent;
  for (const auto& [k, v] : child.items()) {
    if (k == "extends") continue;
    if (k == "poisson" && r.contains(k) && v.is_object()) {
      for (const auto& [p, e] : v.items()) r[k][p] = e;
    } else if ((k == "hopf") && r.contains(k) && v.is_object()) {
      for (const auto& [t, m] : v.items())
        for (const auto& [g, e] : m.items()) r[k][t][g] = e;
    } else {
      r[k] = v;
    }
  }
  r.erase("extends");
  return r;
}

}  // namespace detail

class Catalog {
 public:
  explicit Catalog(std::filesystem::path dir = default_dir(), std::map<std::string, std::string> params = {})
      : dir_(std::move(dir)) {
    for (const auto& [n, v] : params) {
      if (n != "omega" && n != "k" && n != "q") throw std::invalid_argument("unknown parameter '" + n + "'");
      spec_.values[n] = parse_constant(v);
    }
    if (!std::filesystem::is_directory(dir_)) throw PresetError("preset directory not found: " + dir_.string());
    for (const auto& e : std::filesystem::directory_iterator(dir_))
      if (e.path().extension() == ".json") files_[e.path().stem().string()] = e.path();
  }

  /// E2V_PRESETS overrides the compiled-in directory.
  static std::filesystem::path default_dir() {
    if (const char* env = std::getenv("E2V_PRESETS"); env && *env) return env;
    return E2V_PRESET_DIR;
  }

  const Specialization& specialization() const { return spec_; }

  std::vector<std::string> ids() const {
    std::vector<std::string> r;
    for (const auto& [k, _] : files_) r.push_back(k);
    return r;
  }

  bool contains(const std::string& id) const { return files_.count(id) || loaded_.count(id); }

  const Preset& get(const std::string& id) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (auto it = loaded_.find(id); it != loaded_.end()) return *it->second;
    if (!files_.count(id)) throw UnknownPreset("unknown preset '" + id + "'");
    if (loading_.count(id)) throw PresetError("preset '" + id + "' depends on itself");
    loading_.insert(id);
    try {
      auto p = build(id, resolve(id));
      loading_.erase(id);
      return *loaded_.emplace(id, std::move(p)).first->second;
    } catch (...) {
      loading_.erase(id);
      throw;
    }
  }

  /// Loads an external description; it may extend or reference shipped presets.
  const Preset& load_file(const std::filesystem::path& path) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    json j = read_json(path);
    std::string id = detail::need(j, "name", path.string()).get<std::string>();
    if (j.contains("extends")) j = detail::merge_preset(resolve(j.at("extends").get<std::string>()), j);
    loaded_.erase(id);
    auto p = build(id, j);
    return *loaded_.emplace(id, std::move(p)).first->second;
  }

  /// Parses an element of a preset's algebra and applies the parameter values.
  NCPoly element(const std::string& id, std::string_view text) { return spec_.apply(parse_element(text, get(id).tower)); }

  TensorElement tensor(const std::vector<std::string>& ids, std::string_view text) {
    std::vector<TowerPtr> legs;
    for (const auto& i : ids) legs.push_back(get(i).tower);
    return spec_.apply(parse_tensor(text, legs));
  }

  std::map<std::string, std::string> digests() const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    std::map<std::string, std::string> r;
    for (const auto& [k, p] : loaded_) r[k] = p->digest;
    return r;
  }

 private:
  static json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw PresetError("cannot read " + path.string());
    try {
      return json::parse(in);
    } catch (const json::parse_error& e) {
      throw PresetError(path.string() + ": " + e.what());
    }
  }

  json resolve(const std::string& id, std::vector<std::string> chain = {}) {
    if (!files_.count(id)) throw UnknownPreset("unknown preset '" + id + "'");
    if (std::find(chain.begin(), chain.end(), id) != chain.end()) throw PresetError("extends cycle through '" + id + "'");
    chain.push_back(id);
    json j = read_json(files_.at(id));
    if (j.value("name", id) != id) throw PresetError(files_.at(id).string() + ": name does not match file name");
    if (j.contains("extends")) j = detail::merge_preset(resolve(j.at("extends").get<std::string>(), chain), j);
    j["name"] = id;
    return j;
  }

  std::unique_ptr<Preset> build(const std::string& id, const json& j) {
    auto p = std::make_unique<Preset>();
    p->id = id;
    p->source = j;
    p->kind = j.value("kind", "algebra");
    p->description = j.value("description", "");
    p->anchor = j.value("anchor", "");
    p->verbatim = j.value("verbatim", false);
    std::string canon = j.dump();
    if (!spec_.empty()) {
      json s;
      for (const auto& [n, v] : spec_.values) s[n] = v.str();
      canon += "|" + s.dump();
    }
    p->digest = hex64(fnv1a(canon));
    try {
      if (p->kind == "algebra")
        build_algebra(*p, j);
      else if (p->kind == "morphism")
        build_morphism(*p, j);
      else if (p->kind == "lie" || p->kind == "bialgebra")
        build_lie(*p, j);
      else
        throw PresetError("unknown kind '" + p->kind + "'");
    } catch (const PresetError&) {
      throw;
    } catch (const std::exception& e) {
      throw PresetError("preset '" + id + "': " + e.what());
    }
    if (!p->verbatim)
      for (const auto& r : p->self_checks)
        if (!r.passed()) throw SelfCheckFailed("preset '" + id + "' fails " + r.id + " (witness " + r.witness + ")");
    return p;
  }

  void build_algebra(Preset& p, const json& j) {
    ParameterSet ps;
    const json params = j.value("parameters", json::array());
    for (const auto& q : params) {
      std::string star = q.value("star", "fixed");
      if (star != "fixed" && star != "negated") throw PresetError(p.id + ": star rule must be fixed or negated");
      ps.declare({q.at("name").get<std::string>(), star == "fixed" ? StarRule::fixed : StarRule::negated});
    }
    const json& tower = detail::need(j, "tower", p.id);
    if (!tower.is_array() || tower.empty()) throw PresetError(p.id + ": tower must be a nonempty array");
    TowerPtr t;
    for (std::size_t l = 0; l < tower.size(); ++l) {
      const json& lv = tower[l];
      Generator g{detail::need(lv, "gen", p.id).get<std::string>(), lv.value("invertible", false)};
      if (l == 0) {
        if (lv.contains("sigma") || lv.contains("delta")) throw PresetError(p.id + ": the base level takes no sigma or delta");
        t = OreTower::base(p.id, ps, g);
        continue;
      }
      std::map<std::size_t, Terms> sigma, delta;
      auto read = [&](const char* key, std::map<std::size_t, Terms>& out) {
        const json m = lv.value(key, json::object());
        for (const auto& [name, expr] : m.items()) {
          auto lvl = t->level_of(name);
          if (!lvl) throw PresetError(p.id + ": " + key + " of '" + g.name + "' refers to '" + name + "', which is not a lower generator");
          out[*lvl] = spec_.apply(parse_element(expr.get<std::string>(), t).terms());
        }
      };
      read("sigma", sigma);
      read("delta", delta);
      t = t->extend(g, sigma, delta);
    }
    p.tower = t;
    if (!t->is_commutative()) p.self_checks.push_back(diamond_check(t, 3));

    if (j.contains("poisson")) {
      std::map<std::pair<std::size_t, std::size_t>, NCPoly> table;
      for (const auto& [key, expr] : j.at("poisson").items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos) throw PresetError(p.id + ": poisson key '" + key + "' must be 'a,b'");
        auto a = t->level_of(key.substr(0, comma)), b = t->level_of(key.substr(comma + 1));
        if (!a || !b) throw PresetError(p.id + ": poisson key '" + key + "' names an unknown generator");
        NCPoly v = spec_.apply(parse_element(expr.get<std::string>(), t));
        if (*a < *b)
          table[{*a, *b}] = v;
        else
          table[{*b, *a}] = -v;
      }
      p.poisson.emplace(p.id, t, table);
      p.self_checks.push_back(p.poisson->jacobi_report());
    }

    json hopf = j.value("hopf", json::object());
    if (j.contains("star")) hopf["star"] = j.at("star");
    if (!hopf.empty()) {
      HopfStructure::Tables tb;
      auto per_gen = [&](const char* key) -> std::optional<std::vector<std::string>> {
        if (!hopf.contains(key)) return std::nullopt;
        std::vector<std::string> r;
        for (std::size_t l = 0; l < t->size(); ++l) {
          const std::string& g = t->gen(l).name;
          if (!hopf.at(key).contains(g)) throw PresetError(p.id + ": hopf." + key + " lacks generator '" + g + "'");
          r.push_back(hopf.at(key).at(g).get<std::string>());
        }
        return r;
      };
      if (auto d = per_gen("delta")) {
        std::vector<TensorElement> v;
        for (const auto& s : *d) v.push_back(spec_.apply(parse_tensor(s, {t, t})));
        tb.delta = v;
      }
      if (auto d = per_gen("counit")) {
        std::vector<Scalar> v;
        for (const auto& s : *d) {
          NCPoly x = spec_.apply(parse_element(s, t));
          if (!x.is_constant()) throw PresetError(p.id + ": counit value '" + s + "' is not a scalar");
          v.push_back(x.constant_value());
        }
        tb.counit = v;
      }
      for (auto [key, slot] : {std::pair{"antipode", &tb.antipode}, std::pair{"star", &tb.star}})
        if (auto d = per_gen(key)) {
          std::vector<NCPoly> v;
          for (const auto& s : *d) v.push_back(spec_.apply(parse_element(s, t)));
          *slot = v;
        }
      p.hopf.emplace(p.id, t, tb);
    }
  }

  void build_morphism(Preset& p, const json& j) {
    p.source_id = detail::need(j, "source", p.id).get<std::string>();
    const json& tg = detail::need(j, "target", p.id);
    if (tg.is_string())
      p.target_ids.push_back(tg.get<std::string>());
    else
      for (const auto& x : tg) p.target_ids.push_back(x.get<std::string>());
    const Preset& src = get(p.source_id);
    std::vector<TowerPtr> legs;
    for (const auto& id : p.target_ids) legs.push_back(get(id).tower);
    p.tower = src.tower;
    const json& img = detail::need(j, "images", p.id);
    std::vector<TensorElement> images;
    for (std::size_t l = 0; l < p.tower->size(); ++l) {
      const std::string& g = p.tower->gen(l).name;
      if (!img.contains(g)) throw PresetError(p.id + ": no image for generator '" + g + "'");
      images.push_back(spec_.apply(parse_tensor(img.at(g).get<std::string>(), legs)));
    }
    p.morphism.emplace(p.id, p.tower, legs, images);
    p.self_checks.push_back(p.morphism->validate());
  }

  void build_lie(Preset& p, const json& j) {
    p.group_id = detail::need(j, "group", p.id).get<std::string>();
    const Preset& g = get(p.group_id);
    if (!g.hopf || !g.hopf->has_coproduct() || !g.hopf->has_counit())
      throw PresetError(p.id + ": group preset '" + p.group_id + "' has no coproduct and counit");
    for (const auto& b : detail::need(j, "basis", p.id)) {
      if (!b.is_array() || b.size() != 2) throw PresetError(p.id + ": basis entries are [name, generator] pairs");
      auto lvl = g.tower->level_of(b[1].get<std::string>());
      if (!lvl) throw PresetError(p.id + ": basis refers to an unknown generator");
      p.basis.names.push_back(b[0].get<std::string>());
      p.basis.levels.push_back(*lvl);
    }
    p.tower = g.tower;
    p.lie = lie_from_group(*g.hopf, p.basis);
    p.self_checks.push_back(p.lie->jacobi_report("lie-jacobi." + p.id));
    if (p.kind == "bialgebra") {
      if (!g.poisson) throw PresetError(p.id + ": group preset '" + p.group_id + "' has no Poisson bracket");
      p.cocommutator = linearize_poisson(*g.poisson, p.basis, identity_point(*g.hopf));
    }
  }

  std::filesystem::path dir_;
  Specialization spec_;
  std::map<std::string, std::filesystem::path> files_;
  std::map<std::string, std::unique_ptr<Preset>> loaded_;
  std::set<std::string> loading_;
  mutable std::recursive_mutex mu_;
};

}  // namespace e2v
