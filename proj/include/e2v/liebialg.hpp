#pragma once

// Lie bialgebras obtained by differentiating group data at the identity.

#include "e2v/hopf.hpp"
#include "e2v/poisson.hpp"

#include <string>
#include <vector>

namespace e2v {

/// Antisymmetric coefficient matrix w^{ij} of sum_{i<j} w^{ij} e_i ^ e_j.
using Wedge = Matrix<Scalar>;

inline Wedge zero_wedge(std::size_t n) { return Wedge(n, std::vector<Scalar>(n)); }

inline Wedge wedge_of(std::size_t n, std::size_t i, std::size_t j, const Scalar& c = Scalar(1)) {
  Wedge w = zero_wedge(n);
  w[i][j] += c;
  w[j][i] -= c;
  return w;
}

inline Wedge wedge_add(const Wedge& a, const Wedge& b, const Scalar& s = Scalar(1)) {
  Wedge r = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r[i][j] += s * b[i][j];
  return r;
}

inline bool wedge_is_zero(const Wedge& w) {
  for (const auto& row : w)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

inline std::string wedge_str(const Wedge& w, const std::vector<std::string>& names) {
  std::vector<std::pair<Scalar, std::string>> ts;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (!w[i][j].is_zero()) ts.emplace_back(w[i][j], names[i] + "^" + names[j]);
  return detail::join_terms(ts);
}

struct LieAlgebra {
  std::vector<std::string> basis;
  std::vector<std::vector<std::vector<Scalar>>> c;  // c[a][b][k]: coefficient of e_k in [e_a, e_b]

  std::size_t dim() const { return basis.size(); }

  static LieAlgebra abelian(std::vector<std::string> names) {
    LieAlgebra g;
    g.basis = std::move(names);
    const std::size_t n = g.basis.size();
    g.c.assign(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n)));
    return g;
  }

  std::vector<Scalar> bracket(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
    std::vector<Scalar> r(dim());
    for (std::size_t a = 0; a < dim(); ++a) {
      if (x[a].is_zero()) continue;
      for (std::size_t b = 0; b < dim(); ++b) {
        if (y[b].is_zero()) continue;
        for (std::size_t k = 0; k < dim(); ++k)
          if (!c[a][b][k].is_zero()) r[k] += x[a] * y[b] * c[a][b][k];
      }
    }
    return r;
  }

  std::vector<Scalar> unit(std::size_t a) const {
    std::vector<Scalar> v(dim());
    v[a] = Scalar(1);
    return v;
  }

  std::string vec_str(const std::vector<Scalar>& v) const {
    std::vector<std::pair<Scalar, std::string>> ts;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) ts.emplace_back(v[k], basis[k]);
    return detail::join_terms(ts);
  }

  /// ad_x extended to wedges as a derivation.
  Wedge ad(const std::vector<Scalar>& x, const Wedge& w) const {
    const std::size_t n = dim();
    Wedge r = zero_wedge(n);
    std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n));  // m[i][a] = [x, e_a]^i
    for (std::size_t a = 0; a < n; ++a) {
      auto col = bracket(x, unit(a));
      for (std::size_t i = 0; i < n; ++i) m[i][a] = col[i];
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Scalar s;
        for (std::size_t a = 0; a < n; ++a) {
          if (!m[i][a].is_zero() && !w[a][j].is_zero()) s += m[i][a] * w[a][j];
          if (!m[j][a].is_zero() && !w[i][a].is_zero()) s += m[j][a] * w[i][a];
        }
        r[i][j] = s;
      }
    return r;
  }

  CheckRecord jacobi_report(const std::string& id) const {
    for (std::size_t a = 0; a < dim(); ++a)
      for (std::size_t b = a + 1; b < dim(); ++b)
        for (std::size_t k = b + 1; k < dim(); ++k) {
          auto x = unit(a), y = unit(b), z = unit(k);
          auto s = bracket(x, bracket(y, z));
          auto t = bracket(y, bracket(z, x));
          auto u = bracket(z, bracket(x, y));
          for (std::size_t i = 0; i < dim(); ++i) s[i] += t[i] + u[i];
          bool zero = true;
          for (const auto& v : s) zero = zero && v.is_zero();
          if (!zero) return make_record(id, false, vec_str(s), "0", basis[a] + "," + basis[b] + "," + basis[k]);
        }
    return make_record(id, true);
  }
};

/// Basis element name paired with the coordinate generator it differentiates.
struct LieBasis {
  std::vector<std::string> names;
  std::vector<std::size_t> levels;
};

/// The identity of the group: generator values from the counit.
inline std::vector<GaussRational> identity_point(const HopfStructure& h) {
  const auto& a = h.algebra();
  std::vector<GaussRational> p;
  for (std::size_t i = 0; i < a->size(); ++i) {
    Scalar e = h.counit(NCPoly::monomial(a, a->letter_exponents(i, 1)));
    if (!e.is_constant()) throw std::invalid_argument("counit value depends on parameters");
    p.push_back(e.constant_value());
  }
  return p;
}

/// Structure constants from the second-order part of the coproduct:
/// [e_a, e_b]^k = B^k(a,b) - B^k(b,a), B^k(a,b) = sum c d_a(leg1)(e) d_b(leg2)(e).
inline LieAlgebra lie_from_group(const HopfStructure& h, const LieBasis& basis) {
  const auto& a = h.algebra();
  if (!a->is_commutative()) throw std::invalid_argument("tangent algebra needs a commutative coordinate algebra");
  auto id = identity_point(h);
  const std::size_t n = basis.levels.size();
  LieAlgebra g = LieAlgebra::abelian(basis.names);
  const std::map<std::string, GaussRational> none;
  for (std::size_t k = 0; k < n; ++k) {
    NCPoly xk = NCPoly::monomial(a, a->letter_exponents(basis.levels[k], 1));
    TensorElement d = h.coproduct(xk);
    std::vector<std::vector<Scalar>> first(2, std::vector<Scalar>(n));
    std::vector<std::vector<Scalar>> b(n, std::vector<Scalar>(n));
    for (const auto& [key, c] : d.terms()) {
      NCPoly l = NCPoly::monomial(a, key[0]), r = NCPoly::monomial(a, key[1]);
      GaussRational l0 = eval_at(l, id, none), r0 = eval_at(r, id, none);
      std::vector<GaussRational> dl, dr;
      for (std::size_t i = 0; i < n; ++i) {
        dl.push_back(eval_at(partial(l, basis.levels[i]), id, none));
        dr.push_back(eval_at(partial(r, basis.levels[i]), id, none));
      }
      for (std::size_t i = 0; i < n; ++i) {
        first[0][i] += c * Scalar(dl[i] * r0);
        first[1][i] += c * Scalar(l0 * dr[i]);
        for (std::size_t j = 0; j < n; ++j) b[i][j] += c * Scalar(dl[i] * dr[j]);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      Scalar expect = i == k ? Scalar(1) : Scalar(0);
      if (!(first[0][i] == expect) || !(first[1][i] == expect))
        throw std::invalid_argument("coproduct is not a group law at the identity (coordinate " + basis.names[k] + ")");
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g.c[i][j][k] = b[i][j] - b[j][i];
  }
  return g;
}

/// delta(e_k)^{ij} = d_k {x_i, x_j} at the identity.
inline std::vector<Wedge> linearize_poisson(const PoissonStructure& p, const LieBasis& basis,
                                            const std::vector<GaussRational>& identity) {
  const std::size_t n = basis.levels.size();
  std::vector<Wedge> d(n, zero_wedge(n));
  const auto& a = p.algebra();
  const std::map<std::string, GaussRational> none;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      NCPoly b = p.bracket(NCPoly::monomial(a, a->letter_exponents(basis.levels[i], 1)),
                           NCPoly::monomial(a, a->letter_exponents(basis.levels[j], 1)));
      for (std::size_t k = 0; k < n; ++k) {
        NCPoly dk = partial(b, basis.levels[k]);
        // coefficients may carry parameters: evaluate generators only
        Scalar v;
        for (const auto& [e, c] : dk.terms()) {
          GaussRational m(1);
          for (std::size_t l = 0; l < e.size(); ++l) {
            if (e[l] == 0) continue;
            GaussRational x = identity.at(l), pw(1);
            for (int s = 0; s < std::abs(e[l]); ++s) pw *= x;
            m *= e[l] < 0 ? GaussRational(1) / pw : pw;
          }
          v += c * Scalar(m);
        }
        d[k][i][j] = v;
      }
    }
  return d;
}

/// delta([x,y]) = ad_x delta(y) - ad_y delta(x), and Jacobi for the dual bracket.
inline std::vector<CheckRecord> cocycle_cojacobi_report(const std::string& id, const LieAlgebra& g,
                                                        const std::vector<Wedge>& delta) {
  std::vector<CheckRecord> out;
  const std::size_t n = g.dim();
  auto delta_of = [&](const std::vector<Scalar>& x) {
    Wedge w = zero_wedge(n);
    for (std::size_t k = 0; k < n; ++k)
      if (!x[k].is_zero()) w = wedge_add(w, delta[k], x[k]);
    return w;
  };
  CheckRecord cocycle = make_record(id + ".cocycle", true);
  for (std::size_t a = 0; a < n && cocycle.passed(); ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Wedge l = delta_of(g.bracket(g.unit(a), g.unit(b)));
      Wedge r = wedge_add(g.ad(g.unit(a), delta[b]), g.ad(g.unit(b), delta[a]), Scalar(-1));
      if (l != r) {
        cocycle = make_record(id + ".cocycle", false, wedge_str(l, g.basis), wedge_str(r, g.basis),
                              g.basis[a] + "," + g.basis[b]);
        break;
      }
    }
  out.push_back(cocycle);
  LieAlgebra dual = LieAlgebra::abelian(g.basis);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) dual.c[i][j][k] = delta[k][i][j];
  CheckRecord cj = dual.jacobi_report(id + ".cojacobi");
  out.push_back(cj);
  return out;
}

/// All r with ad_x r = delta(x) for every basis element.
inline AffineSolution<Scalar> coboundary_solve(const LieAlgebra& g, const std::vector<Wedge>& delta) {
  const std::size_t n = g.dim();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  Matrix<Scalar> a;
  std::vector<Scalar> b;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Wedge> cols;
    for (const auto& [i, j] : pairs) cols.push_back(g.ad(g.unit(x), wedge_of(n, i, j)));
    for (const auto& [i, j] : pairs) {
      std::vector<Scalar> row;
      for (const auto& c : cols) row.push_back(c[i][j]);
      a.push_back(std::move(row));
      b.push_back(delta[x][i][j]);
    }
  }
  return solve_affine(a, b, pairs.size());
}

inline Wedge wedge_from_pairs(std::size_t n, const std::vector<Scalar>& coeffs) {
  Wedge w = zero_wedge(n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      w[i][j] = coeffs[k];
      w[j][i] = -coeffs[k];
    }
  return w;
}

/// Cocommutator x -> ad_x r.
inline std::vector<Wedge> coboundary_of(const LieAlgebra& g, const Wedge& r) {
  std::vector<Wedge> d;
  for (std::size_t x = 0; x < g.dim(); ++x) d.push_back(g.ad(g.unit(x), r));
  return d;
}

/// (A.rho)^{ij} = A^i_k rho^{kj} + A^j_k rho^{ik}
inline Wedge act_on_bivector(const Matrix<Scalar>& a, const Wedge& rho) {
  const std::size_t n = rho.size();
  Wedge r = zero_wedge(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) r[i][j] += a[i][k] * rho[k][j] + a[j][k] * rho[i][k];
  return r;
}

/// push (x) push applied to a wedge of the Lie algebra; push is dim T x dim g.
inline Wedge push_wedge(const Matrix<Scalar>& push, const Wedge& w) {
  const std::size_t m = push.size();
  const std::size_t n = w.size();
  Wedge r = zero_wedge(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (!w[a][b].is_zero()) r[i][j] += push[i][a] * push[j][b] * w[a][b];
  return r;
}

/// push_*(delta_stab) + A.rho = 0
inline CheckRecord stabilizer_invariance_check(const std::string& id, const Matrix<Scalar>& push, const Matrix<Scalar>& action,
                                               const Wedge& delta_stab, const Wedge& rho) {
  const std::size_t m = rho.size();
  if (action.size() != m || push.size() != m) throw std::invalid_argument(id + ": dimension mismatch");
  for (const auto& row : action)
    if (row.size() != m) throw std::invalid_argument(id + ": dimension mismatch");
  for (const auto& row : push)
    if (row.size() != delta_stab.size()) throw std::invalid_argument(id + ": dimension mismatch");
  Wedge s = wedge_add(push_wedge(push, delta_stab), act_on_bivector(action, rho));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("d" + std::to_string(i + 1));
  return make_record(id, wedge_is_zero(s), wedge_str(s, names), "0", wedge_is_zero(s) ? "" : wedge_str(s, names));
}

/// Fundamental vector field of basis element a on M from a coaction M -> G (x) M:
/// component j is sum c d_a(leg1)(e) leg2 over the terms of the image of y_j.
inline std::vector<NCPoly> infinitesimal_action(const AlgebraMorphism& coaction, std::size_t level_a,
                                                const std::vector<GaussRational>& identity) {
  const auto& m = coaction.source();
  const auto& gt = coaction.target()[0];
  const std::map<std::string, GaussRational> none;
  std::vector<NCPoly> v;
  for (std::size_t j = 0; j < m->size(); ++j) {
    const TensorElement& img = coaction.image(j);
    NCPoly comp(m);
    for (const auto& [k, c] : img.terms()) {
      GaussRational d = eval_at(partial(NCPoly::monomial(gt, k[0]), level_a), identity, none);
      if (!d.is_zero()) comp += (c * Scalar(d)) * NCPoly::monomial(m, k[1]);
    }
    v.push_back(comp);
  }
  return v;
}

}  // namespace e2v
