#include "common.hpp"

using namespace e2v;
using e2v::testing::catalog;
using e2v::testing::load_json;

TEST(Catalog, EveryPresetLoads) {
  Catalog& c = catalog();
  EXPECT_GE(c.ids().size(), 15u);
  for (const auto& id : c.ids()) {
    const Preset& p = c.get(id);
    EXPECT_EQ(p.id, id);
    EXPECT_EQ(p.digest.size(), 16u) << id;
    if (p.verbatim) continue;
    for (const auto& r : p.self_checks) EXPECT_TRUE(r.passed()) << id << ": " << r.id << " " << r.witness;
  }
}

TEST(Catalog, IdsAreSortedAndResolve) {
  Catalog& c = catalog();
  auto ids = c.ids();
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  for (const auto& id : ids) EXPECT_TRUE(c.contains(id));
  EXPECT_EQ(&c.get("qe2-nonstd"), &c.get("qe2-nonstd"));
}

TEST(Catalog, UnknownPreset) {
  EXPECT_THROW(catalog().get("no-such-preset"), UnknownPreset);
  EXPECT_FALSE(catalog().contains("no-such-preset"));
}

TEST(Catalog, Contents) {
  const Preset& q = catalog().get("qe2-nonstd");
  EXPECT_EQ(q.kind, "algebra");
  EXPECT_EQ(q.tower->size(), 3u);
  ASSERT_TRUE(q.hopf.has_value());
  EXPECT_EQ(catalog().element("quantum-plane", "zb*z"), catalog().element("quantum-plane", "q^-1*z*zb"));
  std::ifstream in(Catalog::default_dir() / "quantum-cylinder.json");
  const auto raw = nlohmann::json::parse(in);
  EXPECT_EQ(catalog().get("quantum-cylinder").anchor, raw.at("anchor").get<std::string>());
  EXPECT_FALSE(catalog().get("quantum-cylinder").anchor.empty());
  EXPECT_TRUE(catalog().get("qe2-corrupted").verbatim);
  EXPECT_TRUE(catalog().get("quotient-I").morphism.has_value());
  EXPECT_TRUE(catalog().get("e2-lie").lie.has_value());
}

TEST(Catalog, DigestsAreDeterministic) {
  Catalog a, b;
  for (const auto& id : a.ids()) EXPECT_EQ(a.get(id).digest, b.get(id).digest) << id;
  Catalog s(Catalog::default_dir(), {{"omega", "2"}});
  EXPECT_NE(s.get("qe2-nonstd").digest, a.get("qe2-nonstd").digest);
  EXPECT_EQ(a.digests().size(), a.ids().size());
}

TEST(Catalog, ParameterSpecialization) {
  Catalog s(Catalog::default_dir(), {{"omega", "2"}});
  EXPECT_EQ(s.element("qe2-nonstd", "omega*n"), s.element("qe2-nonstd", "2*n"));
  EXPECT_NE(catalog().element("qe2-nonstd", "omega*n"), catalog().element("qe2-nonstd", "2*n"));
  EXPECT_THROW(Catalog(Catalog::default_dir(), {{"zeta", "1"}}), std::invalid_argument);
  EXPECT_THROW(Catalog("/nonexistent/presets"), PresetError);
}

TEST(Catalog, ExtendsMergesParent) {
  Catalog c;
  const Preset& p = load_json(c, "qe2-copy", R"({"name": "qe2-copy", "extends": "qe2-nonstd", "description": "copy"})");
  EXPECT_EQ(p.description, "copy");
  EXPECT_EQ(p.tower->size(), 3u);
  EXPECT_TRUE(p.hopf.has_value());
  EXPECT_EQ(c.get("qe2-corrupted").tower->size(), 3u);
}

TEST(Catalog, BadDescriptions) {
  Catalog c;
  EXPECT_THROW(load_json(c, "bad", R"({"name": "bad", "extends": "no-such-preset"})"), UnknownPreset);
  EXPECT_THROW(load_json(c, "bad", R"({"name": "bad", "kind": "widget"})"), PresetError);
  EXPECT_THROW(load_json(c, "bad", R"({"name": "bad", "tower": [{"gen": "v"}, {"gen": "w", "invertible": true}]})"),
               PresetError);
  EXPECT_THROW(load_json(c, "bad", "{ not json"), PresetError);
}

TEST(Catalog, StrictLoadRejectsFailingSelfChecks) {
  Catalog c;
  // the corrupted tower without its verbatim flag
  EXPECT_THROW(load_json(c, "corrupt", R"({"name": "corrupt", "extends": "qe2-corrupted", "verbatim": false})"),
               SelfCheckFailed);
}

TEST(Catalog, ExtendsCycle) {
  auto dir = std::filesystem::temp_directory_path() / ("e2v-cycle-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "a.json") << R"({"name": "a", "extends": "b"})";
  std::ofstream(dir / "b.json") << R"({"name": "b", "extends": "a"})";
  std::ofstream(dir / "c.json") << R"({"name": "c", "extends": "c"})";
  std::ofstream(dir / "d.json") << R"({"name": "wrong"})";
  {
    Catalog c(dir);
    EXPECT_THROW(c.get("a"), PresetError);
    EXPECT_THROW(c.get("c"), PresetError);
    EXPECT_THROW(c.get("d"), PresetError);
  }
  std::filesystem::remove_all(dir);
}
