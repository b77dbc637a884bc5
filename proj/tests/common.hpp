#pragma once

#include "e2v/suites.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <unistd.h>

namespace e2v::testing {

/// Shipped presets, loaded once per test binary.
inline Catalog& catalog() {
  static Catalog c;
  return c;
}

inline NCPoly el(const std::string& preset, std::string_view text) { return catalog().element(preset, text); }
inline const Preset& preset(const std::string& id) { return catalog().get(id); }

inline TensorElement tensor2(const std::string& preset, std::string_view text) {
  return catalog().tensor({preset, preset}, text);
}

/// Loads a one-off description into the given catalog.
inline const Preset& load_json(Catalog& c, const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / (name + "-" + std::to_string(::getpid()) + ".json");
  std::ofstream(path) << body;
  struct Cleanup {
    std::filesystem::path p;
    ~Cleanup() { std::filesystem::remove(p); }
  } cleanup{path};
  return c.load_file(path);
}

/// Random elements with small integer coefficients over the given monomials.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  int range(int lo, int hi) { return rng_.range(lo, hi); }

  NCPoly element(const TowerPtr& t, int max_abs_exp, int max_terms, bool allow_negative_base) {
    NCPoly x(t);
    for (int k = range(1, max_terms); k > 0; --k) {
      Exponents e(t->size(), 0);
      for (std::size_t l = 0; l < t->size(); ++l) {
        int lo = (l == 0 && allow_negative_base && t->base_invertible()) ? -max_abs_exp : 0;
        e[l] = range(lo, max_abs_exp);
      }
      x += NCPoly::monomial(t, e, Scalar(static_cast<long>(range(-3, 3))));
    }
    return x;
  }

  Scalar scalar(const std::vector<std::string>& params) {
    Poly p;
    for (int k = range(1, 3); k > 0; --k) {
      Poly m = GaussRational(mpq_class(range(-4, 4)), mpq_class(range(-2, 2)));
      for (const auto& n : params) m *= Poly::var(n, static_cast<unsigned>(range(0, 2)));
      p += m;
    }
    return Scalar(p);
  }

 private:
  detail::Lcg rng_;
};

}  // namespace e2v::testing
