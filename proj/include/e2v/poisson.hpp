#pragma once

// Poisson brackets on commutative presented algebras.

#include "e2v/morphism.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace e2v {

struct PoleAtGenerator : std::domain_error {
  using std::domain_error::domain_error;
};

/// Partial derivative of an element of a commutative algebra along a generator.
inline NCPoly partial(const NCPoly& f, std::size_t level) {
  NCPoly r(f.tower());
  Terms t;
  for (const auto& [e, c] : f.terms()) {
    if (e[level] == 0) continue;
    Exponents d = e;
    d[level] -= 1;
    add_term(t, d, c * Scalar(static_cast<long>(e[level])));
  }
  return NCPoly(f.tower(), std::move(t));
}

/// Value of an element of a commutative algebra at a point.
inline GaussRational eval_at(const NCPoly& f, const std::vector<GaussRational>& point,
                             const std::map<std::string, GaussRational>& params) {
  GaussRational r;
  for (const auto& [e, c] : f.terms()) {
    GaussRational m = c.eval(params);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      const GaussRational& x = point.at(i);
      if (e[i] < 0 && x.is_zero())
        throw PoleAtGenerator("invertible generator '" + f.tower()->gen(i).name + "' evaluated at 0");
      GaussRational p(1);
      for (int k = 0; k < std::abs(e[i]); ++k) p *= x;
      m *= e[i] < 0 ? GaussRational(1) / p : p;
    }
    r += m;
  }
  return r;
}

/// Substitutes a parameter value in every coefficient.
inline NCPoly substitute(const NCPoly& f, const std::string& param, const GaussRational& value) {
  Terms t;
  for (const auto& [e, c] : f.terms()) add_term(t, e, c.substitute(param, value));
  return NCPoly(f.tower(), std::move(t));
}

class PoissonStructure {
 public:
  PoissonStructure() = default;
  /// table[{i, j}] = {x_i, x_j} for i < j; missing entries are zero.
  PoissonStructure(std::string name, TowerPtr a, const std::map<std::pair<std::size_t, std::size_t>, NCPoly>& table)
      : name_(std::move(name)), a_(std::move(a)) {
    if (!a_->is_commutative()) throw std::invalid_argument(name_ + ": Poisson brackets need a commutative algebra");
    const std::size_t n = a_->size();
    t_.assign(n, std::vector<NCPoly>(n, NCPoly(a_)));
    for (const auto& [ij, v] : table) {
      auto [i, j] = ij;
      if (i == j) {
        if (!v.is_zero()) throw std::invalid_argument(name_ + ": {g,g} must vanish");
        continue;
      }
      t_[i][j] = v;
      t_[j][i] = -v;
    }
  }

  const std::string& name() const { return name_; }
  const TowerPtr& algebra() const { return a_; }
  const NCPoly& entry(std::size_t i, std::size_t j) const { return t_.at(i).at(j); }

  /// {f, g} = sum_{i,j} d_i f d_j g {x_i, x_j}
  NCPoly bracket(const NCPoly& f, const NCPoly& g) const {
    NCPoly r(a_);
    const std::size_t n = a_->size();
    std::vector<NCPoly> df, dg;
    for (std::size_t i = 0; i < n; ++i) {
      df.push_back(partial(f, i));
      dg.push_back(partial(g, i));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (t_[i][j].is_zero()) continue;
        NCPoly c = df[i] * dg[j] - df[j] * dg[i];
        if (!c.is_zero()) r += c * t_[i][j];
      }
    return r;
  }

  NCPoly gen(std::size_t i) const { return NCPoly::monomial(a_, a_->letter_exponents(i, 1)); }

  PoissonStructure specialize(const std::string& param, const GaussRational& value) const {
    PoissonStructure p = *this;
    for (auto& row : p.t_)
      for (auto& x : row) x = substitute(x, param, value);
    return p;
  }

  /// Cyclic sums over generator triples.
  CheckRecord jacobi_report() const {
    const std::size_t n = a_->size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          NCPoly x = gen(i), y = gen(j), z = gen(k);
          NCPoly s = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
          if (!s.is_zero()) {
            std::string w = "(" + a_->gen(i).name + "," + a_->gen(j).name + "," + a_->gen(k).name + ")";
            return make_record("jacobi." + name_, false, s.str(), "0", w);
          }
        }
    return make_record("jacobi." + name_, true, "0", "0");
  }

  /// Exact rank of the bracket matrix at a point.
  std::size_t rank_at(const std::vector<GaussRational>& point, const std::map<std::string, GaussRational>& params) const {
    const std::size_t n = a_->size();
    if (point.size() != n) throw std::invalid_argument("point needs one value per generator");
    if (a_->base_invertible() && point[0].is_zero())
      throw PoleAtGenerator("invertible generator '" + a_->gen(0).name + "' assigned 0");
    Matrix<GaussRational> m(n, std::vector<GaussRational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = eval_at(t_[i][j], point, params);
    return rank(m);
  }

  /// Hamiltonian field of generator i: component j is {x_i, x_j}.
  std::vector<NCPoly> hamiltonian(std::size_t i) const { return t_.at(i); }

  /// sum_i c_i X_{x_i}, component by component.
  std::vector<NCPoly> field_combination(const std::vector<NCPoly>& coeffs) const {
    const std::size_t n = a_->size();
    std::vector<NCPoly> r(n, NCPoly(a_));
    for (std::size_t i = 0; i < coeffs.size() && i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!coeffs[i].is_zero() && !t_[i][j].is_zero()) r[j] += coeffs[i] * t_[i][j];
    return r;
  }

 private:
  std::string name_;
  TowerPtr a_;
  std::vector<std::vector<NCPoly>> t_;
};

/// Product Poisson structure on a tensor product of commutative algebras:
/// {(x)a_i, (x)b_i} = sum_k (prod_{i != k} a_i b_i) (x) {a_k, b_k}.
inline TensorElement tensor_bracket(const TensorElement& x, const TensorElement& y,
                                    const std::vector<const PoissonStructure*>& legs) {
  TensorElement r(x.legs());
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      for (std::size_t k = 0; k < kx.size(); ++k) {
        const auto& tw = x.legs()[k];
        NCPoly b = legs[k]->bracket(NCPoly::monomial(tw, kx[k]), NCPoly::monomial(tw, ky[k]));
        if (b.is_zero()) continue;
        for (const auto& [e, c] : b.terms()) {
          TensorKey key;
          for (std::size_t i = 0; i < kx.size(); ++i) {
            if (i == k) {
              key.push_back(e);
            } else {
              Exponents s = kx[i];
              for (std::size_t l = 0; l < s.size(); ++l) s[l] += ky[i][l];
              key.push_back(std::move(s));
            }
          }
          r.add(key, cx * cy * c);
        }
      }
    }
  return r;
}

/// phi({x_i, x_j}) = {phi x_i, phi x_j} on all generator pairs of the source.
inline CheckRecord poisson_morphism_report(const std::string& id, const AlgebraMorphism& phi, const PoissonStructure& src,
                                           const std::vector<const PoissonStructure*>& tgt) {
  const auto& a = src.algebra();
  for (std::size_t i = 0; i < a->size(); ++i)
    for (std::size_t j = i + 1; j < a->size(); ++j) {
      TensorElement l = phi.apply(src.bracket(src.gen(i), src.gen(j)));
      TensorElement r = tensor_bracket(phi.image(i), phi.image(j), tgt);
      if (!(l == r))
        return make_record(id, false, l.str(), r.str(), "{" + a->gen(i).name + "," + a->gen(j).name + "}");
    }
  return make_record(id, true);
}

/// Affine family of brackets {a, b} = sum c_i ansatz_i on a two-generator algebra
/// making the coaction a Poisson map.
struct CovariantFamily {
  AffineSolution<Scalar> solution;
  std::vector<NCPoly> ansatz;

  NCPoly member(const std::vector<Scalar>& coeffs) const {
    NCPoly r(ansatz.empty() ? TowerPtr() : ansatz.front().tower());
    for (std::size_t i = 0; i < ansatz.size(); ++i) r += coeffs[i] * ansatz[i];
    return r;
  }
  NCPoly particular() const { return member(solution.particular); }
  std::vector<NCPoly> directions() const {
    std::vector<NCPoly> r;
    for (const auto& d : solution.directions) r.push_back(member(d));
    return r;
  }
  /// Whether a bracket value lies in the family.
  bool contains(const NCPoly& value) const {
    if (!solution.consistent) return false;
    NCPoly diff = value - particular();
    if (diff.is_zero()) return true;
    return span_solve(diff, directions()).has_value();
  }
};

inline CovariantFamily covariant_family_solve(const AlgebraMorphism& coaction, const PoissonStructure& group,
                                              const std::vector<NCPoly>& ansatz) {
  if (ansatz.empty()) throw std::invalid_argument("empty ansatz");
  const auto& m = coaction.source();
  if (m->size() != 2 || !m->is_commutative())
    throw std::invalid_argument("covariant family solve needs a commutative two-generator algebra");
  if (coaction.target().size() != 2 || !same_tower(coaction.target()[1], m))
    throw std::invalid_argument("coaction must map into G (x) M");
  // zero-bracket structure on M; the unknown part is linear in the ansatz coefficients
  PoissonStructure zero("zero", m, {});
  TensorElement aa = coaction.image(0), bb = coaction.image(1);
  TensorElement r0 = tensor_bracket(aa, bb, {&group, &zero});
  std::vector<TensorElement> cols;
  for (const auto& mu : ansatz) {
    PoissonStructure unit("ansatz", m, {{{0, 1}, mu}});
    TensorElement ri = tensor_bracket(aa, bb, {&zero, &unit});
    cols.push_back(coaction.apply(mu) - ri);
  }
  std::map<TensorKey, std::size_t, TensorOrder> rows;
  for (const auto& c : cols)
    for (const auto& [k, _] : c.terms()) rows.emplace(k, rows.size());
  for (const auto& [k, _] : r0.terms()) rows.emplace(k, rows.size());
  Matrix<Scalar> a(rows.size(), std::vector<Scalar>(cols.size()));
  std::vector<Scalar> b(rows.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [k, c] : cols[j].terms()) a[rows.at(k)][j] = c;
  for (const auto& [k, c] : r0.terms()) b[rows.at(k)] = c;
  return {solve_affine(a, b, cols.size()), ansatz};
}

/// vanish({g, a}) = 0 for every ideal generator g and algebra generator a.
inline CheckRecord poisson_ideal_check(const std::string& id, const PoissonStructure& p, const std::vector<NCPoly>& ideal,
                                       const AlgebraMorphism& vanish) {
  for (const auto& g : ideal)
    if (!vanish.apply(g).is_zero()) throw std::invalid_argument(id + ": restriction does not kill " + g.str());
  for (const auto& g : ideal)
    for (std::size_t i = 0; i < p.algebra()->size(); ++i) {
      NCPoly b = p.bracket(g, p.gen(i));
      TensorElement v = vanish.apply(b);
      if (!v.is_zero()) return make_record(id, false, v.str(), "0", "{" + g.str() + "," + p.algebra()->gen(i).name + "} = " + b.str());
    }
  return make_record(id, true);
}

}  // namespace e2v
