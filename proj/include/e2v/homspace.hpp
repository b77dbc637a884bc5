#pragma once

// Quantum homogeneous spaces: coideal subalgebras, quotient maps, Hopf-*-ideals
// and coinvariants.

#include "e2v/hopf.hpp"

#include <optional>
#include <string>
#include <vector>

namespace e2v {

/// Subalgebra generated by a list of elements, optionally together with the
/// powers of the ambient invertible base generator (both signs).
struct Subalgebra {
  std::string name;
  TowerPtr ambient;
  bool laurent_base = false;
  std::vector<std::string> labels;
  std::vector<NCPoly> gens;
  int extra_power = 0;  // widens the bound on the number of generator factors

  /// The generating elements, with the base and its inverse first when present.
  std::vector<std::pair<std::string, NCPoly>> all_generators() const {
    std::vector<std::pair<std::string, NCPoly>> r;
    if (laurent_base) {
      const std::string& v = ambient->gen(0).name;
      r.emplace_back(v, NCPoly::gen(ambient, v));
      r.emplace_back(v + "^-1", NCPoly::gen(ambient, v, -1));
    }
    for (std::size_t i = 0; i < gens.size(); ++i) r.emplace_back(labels[i], gens[i]);
    return r;
  }
};

namespace detail {

inline int nonbase_degree(const Exponents& e, bool skip_base) {
  int d = 0;
  for (std::size_t l = skip_base ? 1 : 0; l < e.size(); ++l) d += std::abs(e[l]);
  return d;
}

inline int max_base_power(const NCPoly& x) {
  int m = 0;
  for (const auto& [e, _] : x.terms()) m = std::max(m, std::abs(e[0]));
  return m;
}

}  // namespace detail

struct Candidate {
  std::string label;
  NCPoly value;
};

/// Products base^r * g_1^{s_1} ... g_k^{s_k} that can reach x. A generator of
/// non-base degree d contributes d to every monomial of its leading part, so the
/// number of factors is bounded by the non-base degree of x; the base power is
/// bounded by the base powers of x and of the generators used.
inline std::vector<Candidate> subalgebra_candidates(const NCPoly& x, const Subalgebra& b) {
  const bool skip = b.laurent_base;
  int dx = 0;
  for (const auto& [e, _] : x.terms()) dx = std::max(dx, detail::nonbase_degree(e, skip));
  std::vector<int> mindeg, maxv;
  for (const auto& g : b.gens) {
    int m = -1;
    for (const auto& [e, _] : g.terms()) {
      int d = detail::nonbase_degree(e, skip);
      m = m < 0 ? d : std::min(m, d);
    }
    mindeg.push_back(std::max(m, 0));
    maxv.push_back(skip ? detail::max_base_power(g) : 0);
  }
  const int smax = dx + b.extra_power;
  std::vector<Candidate> out;
  std::vector<int> s(b.gens.size(), 0);
  // enumerate exponent vectors with sum_i s_i * max(mindeg_i, 1) <= smax
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int budget) {
    if (i == s.size()) {
      NCPoly prod = NCPoly::constant(b.ambient, Scalar(1));
      std::string label;
      int vb = skip ? detail::max_base_power(x) : 0;
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j] == 0) continue;
        prod = prod * b.gens[j].pow(s[j]);
        if (!label.empty()) label += "*";
        label += b.labels[j] + (s[j] > 1 ? "^" + std::to_string(s[j]) : "");
        vb += s[j] * maxv[j];
      }
      if (!skip) {
        out.push_back({label.empty() ? "1" : label, prod});
        return;
      }
      const std::string& v = b.ambient->gen(0).name;
      for (int r = -vb; r <= vb; ++r) {
        std::string l = r == 0 ? "" : (r == 1 ? v : v + "^" + std::to_string(r));
        if (!label.empty()) l += (l.empty() ? "" : "*") + label;
        out.push_back({l.empty() ? "1" : l, NCPoly::gen(b.ambient, v, r) * prod});
      }
      return;
    }
    const int w = std::max(mindeg[i], 1);
    for (int k = 0; k * w <= budget; ++k) {
      s[i] = k;
      rec(i + 1, budget - k * w);
    }
    s[i] = 0;
  };
  rec(0, smax);
  return out;
}

/// Nonzero coefficients of x over the candidate products, or none when x is not
/// reachable within the bound.
inline std::optional<std::vector<std::pair<std::string, Scalar>>> subalgebra_membership(const NCPoly& x, const Subalgebra& b) {
  if (!x.is_zero() && !same_tower(x.tower(), b.ambient)) throw std::invalid_argument("element is not in the ambient algebra");
  if (x.is_zero()) return std::vector<std::pair<std::string, Scalar>>{};
  auto cands = subalgebra_candidates(x, b);
  std::vector<NCPoly> vals;
  for (const auto& c : cands) vals.push_back(c.value);
  auto sol = span_solve(x, vals);
  if (!sol) return std::nullopt;
  std::vector<std::pair<std::string, Scalar>> r;
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (!(*sol)[i].is_zero()) r.emplace_back(cands[i].label, (*sol)[i]);
  return r;
}

inline std::string decomposition_str(const std::vector<std::pair<std::string, Scalar>>& d) {
  std::vector<std::pair<Scalar, std::string>> ts;
  for (const auto& [l, c] : d) ts.emplace_back(c, l == "1" ? "" : l);
  return ts.empty() ? "0" : detail::join_terms(ts);
}

/// Right coideal (Delta b in A (x) B, grouped by left-leg monomial) and star
/// invariance, per generator.
inline std::vector<CheckRecord> coideal_report(const Subalgebra& b, const HopfStructure& h) {
  std::vector<CheckRecord> out;
  const std::string p = "coideal." + b.name + ".";
  for (const auto& [label, g] : b.all_generators()) {
    TensorElement d = h.coproduct(g);
    std::map<Exponents, Terms, MonoOrder> groups;
    for (const auto& [k, c] : d.terms()) add_term(groups[k[0]], k[1], c);
    std::string bad;
    std::vector<std::string> legs;
    for (const auto& [left, right] : groups) {
      NCPoly r(b.ambient, right);
      legs.push_back(r.str());
      if (!subalgebra_membership(r, b)) {
        bad = detail::mono_text(*b.ambient, left) + " (x) " + r.str();
        break;
      }
    }
    std::string joined;
    for (const auto& l : legs) joined += (joined.empty() ? "" : ", ") + l;
    out.push_back(make_record(p + label + ".coproduct", bad.empty(), d.str(), "right legs {" + joined + "}", bad));
    if (h.has_star()) {
      NCPoly s = h.star(g);
      auto dec = subalgebra_membership(s, b);
      out.push_back(make_record(p + label + ".star", dec.has_value(), s.str(), dec ? decomposition_str(*dec) : "not in " + b.name,
                                dec ? "" : label + "* = " + s.str()));
    }
  }
  return out;
}

/// Relations of the source hold after substitution (the map is well defined).
inline CheckRecord quotient_check(const AlgebraMorphism& pi) {
  if (pi.target().size() != 1) throw std::invalid_argument(pi.name() + ": a quotient map has one target algebra");
  return pi.validate();
}

inline bool ideal_member(const NCPoly& x, const AlgebraMorphism& pi) { return pi.apply(x).is_zero(); }

/// Applies a one-target morphism to one leg of a tensor.
inline TensorElement apply_on_leg(const TensorElement& x, std::size_t leg, const AlgebraMorphism& f) {
  return map_leg(x, leg, [&](const Exponents& e) { return f.apply_monomial(e); }, f.target());
}

inline std::vector<CheckRecord> hopf_star_ideal_report(const std::string& id, const std::vector<std::pair<std::string, NCPoly>>& gens,
                                                       const AlgebraMorphism& pi, const HopfStructure& h) {
  std::vector<CheckRecord> out;
  for (const auto& [label, g] : gens) {
    if (!ideal_member(g, pi)) throw std::invalid_argument(id + ": quotient map does not kill " + g.str());
    const std::string p = id + "." + label + ".";
    TensorElement d = h.coproduct(g);
    TensorElement dd = apply_on_leg(apply_on_leg(d, 0, pi), 1, pi);
    out.push_back(make_record(p + "coideal", dd.is_zero(), dd.str(), "0", dd.is_zero() ? "" : "Delta(" + g.str() + ") = " + d.str()));
    Scalar e = h.counit(g);
    out.push_back(make_record(p + "counit", e.is_zero(), e.str(), "0", e.is_zero() ? "" : g.str()));
    NCPoly s = h.antipode(g);
    TensorElement ps = pi.apply(s);
    out.push_back(make_record(p + "antipode", ps.is_zero(), ps.str(), "0", ps.is_zero() ? "" : "S = " + s.str()));
    if (h.has_star()) {
      NCPoly st = h.star(g);
      TensorElement pst = pi.apply(st);
      out.push_back(make_record(p + "star", pst.is_zero(), pst.str(), "0", pst.is_zero() ? "" : "star = " + st.str()));
    }
  }
  return out;
}

enum class Side { left, right };

/// left: (pi (x) id) Delta x = 1 (x) x; right: (id (x) pi) Delta x = x (x) 1.
inline bool coinvariance_check(const NCPoly& x, const AlgebraMorphism& pi, const HopfStructure& h, Side side) {
  TensorElement d = h.coproduct(x);
  const TowerPtr& q = pi.target()[0];
  if (side == Side::left) {
    TensorElement l = apply_on_leg(d, 0, pi);
    return l == TensorElement::product_of({NCPoly::constant(q, Scalar(1)), x});
  }
  TensorElement r = apply_on_leg(d, 1, pi);
  return r == TensorElement::product_of({x, NCPoly::constant(q, Scalar(1))});
}

struct SigmaElement {
  std::string label;  // e.g. "(S^2-e)(m)"
  NCPoly value;
};

/// (S^n - e 1)(b) for every generator b and 1 <= n <= max_power.
inline std::vector<SigmaElement> sigma_generators(const Subalgebra& b, const HopfStructure& h, int max_power) {
  if (max_power < 1) throw std::invalid_argument("max_power must be at least 1");
  std::vector<SigmaElement> out;
  for (const auto& [label, g] : b.all_generators()) {
    NCPoly e = NCPoly::constant(b.ambient, h.counit(g));
    NCPoly s = g;
    for (int n = 1; n <= max_power; ++n) {
      s = h.antipode(s);
      std::string l = "(S" + (n > 1 ? "^" + std::to_string(n) : std::string()) + "-e)(" + label + ")";
      out.push_back({l, s - e});
    }
  }
  return out;
}

}  // namespace e2v
