#pragma once

// Normal-form elements of an Ore tower and the operations on them.

#include "e2v/linsolve.hpp"
#include "e2v/report.hpp"
#include "e2v/tower.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace e2v {

/// True when both pointers denote the same algebra.
inline bool same_tower(const TowerPtr& a, const TowerPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

namespace detail {

inline std::string mono_text(const OreTower& t, const Exponents& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += t.gen(i).name;
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

/// Joins signed (coefficient, monomial text) pairs; empty monomial text is the unit.
inline std::string join_terms(const std::vector<std::pair<Scalar, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, m] : terms) {
    bool neg = c.display_sign() < 0;
    Scalar a = neg ? -c : c;
    std::string body;
    if (m.empty()) {
      bool bare = a.is_atomic() || (terms.size() == 1 && !neg && a.is_polynomial());
      body = bare ? a.str() : "(" + a.str() + ")";
    } else if (a.is_one()) {
      body = m;
    } else {
      body = (a.is_atomic() ? a.str() : "(" + a.str() + ")") + "*" + m;
    }
    if (first)
      out = neg ? "-" + body : body;
    else
      out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace detail

class NCPoly {
 public:
  NCPoly() = default;
  explicit NCPoly(TowerPtr t) : tower_(std::move(t)) {}
  NCPoly(TowerPtr t, Terms terms) : tower_(std::move(t)), terms_(std::move(terms)) {}

  static NCPoly constant(TowerPtr t, const Scalar& c) {
    NCPoly p(t);
    add_term(p.terms_, t->unit(), c);
    return p;
  }
  static NCPoly monomial(TowerPtr t, Exponents e, const Scalar& c = Scalar(1)) {
    NCPoly p(t);
    add_term(p.terms_, e, c);
    return p;
  }
  static NCPoly gen(TowerPtr t, const std::string& name, int power = 1) {
    auto l = t->level_of(name);
    if (!l) throw std::invalid_argument("unknown generator '" + name + "'");
    if (power < 0 && !(*l == 0 && t->base_invertible()))
      throw std::invalid_argument("negative power of non-invertible generator '" + name + "'");
    return monomial(t, t->letter_exponents(*l, power));
  }

  const TowerPtr& tower() const { return tower_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && abs_degree(terms_.begin()->first) == 0);
  }
  Scalar constant_value() const {
    if (!is_constant()) throw std::logic_error("element is not a constant");
    return terms_.empty() ? Scalar() : terms_.begin()->second;
  }
  /// Coefficient of a monomial (zero when absent).
  Scalar coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar() : it->second;
  }

  NCPoly operator-() const { return NCPoly(tower_, scaled_terms(terms_, Scalar(-1))); }
  NCPoly& operator+=(const NCPoly& o) {
    adopt(o);
    add_terms(terms_, o.terms_);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    adopt(o);
    add_terms(terms_, o.terms_, Scalar(-1));
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r(a.tower_ ? a.tower_ : b.tower_);
    r.adopt(b);
    if (a.is_zero() || b.is_zero()) return r;
    r.terms_ = r.tower_->mul(a.terms_, b.terms_);
    return r;
  }
  friend NCPoly operator*(const Scalar& s, const NCPoly& p) { return NCPoly(p.tower_, scaled_terms(p.terms_, s)); }
  NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }

  NCPoly pow(unsigned e) const {
    NCPoly r = constant(tower_, Scalar(1));
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    if (a.terms_ != b.terms_) return false;
    return a.is_zero() || !a.tower_ || !b.tower_ || same_tower(a.tower_, b.tower_);
  }

  /// Canonical text in the expression grammar.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Scalar, std::string>> ts;
    for (const auto& [e, c] : terms_) ts.emplace_back(c, detail::mono_text(*tower_, e));
    return detail::join_terms(ts);
  }

 private:
  void adopt(const NCPoly& o) {
    if (!tower_) {
      tower_ = o.tower_;
      return;
    }
    if (o.tower_ && !o.is_zero() && !same_tower(tower_, o.tower_))
      throw std::invalid_argument("elements of different algebras combined");
  }

  TowerPtr tower_;
  Terms terms_;
};

inline NCPoly commutator(const NCPoly& p, const NCPoly& q) { return p * q - q * p; }

/// Maximal exponent of the generator at `level` over the support.
inline int graded_degree(const NCPoly& x, std::size_t level) {
  if (x.is_zero()) throw std::domain_error("degree of the zero element is undefined");
  int d = 0;
  bool first = true;
  for (const auto& [e, _] : x.terms()) {
    if (first || e.at(level) > d) d = e.at(level);
    first = false;
  }
  return d;
}

/// Product of a word of letters, folded from the left or from the right.
inline NCPoly word_product(const TowerPtr& t, const std::vector<Letter>& w, bool from_left) {
  std::vector<NCPoly> fs;
  for (const auto& l : w) fs.push_back(NCPoly::monomial(t, t->letter_exponents(l.level, l.power)));
  NCPoly acc = NCPoly::constant(t, Scalar(1));
  if (from_left) {
    for (const auto& f : fs) acc = acc * f;
  } else {
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) acc = *it * acc;
  }
  return acc;
}

inline std::string word_str(const OreTower& t, const std::vector<Letter>& w) {
  std::string s;
  for (const auto& l : w) s += (s.empty() ? "" : "*") + t.letter_str(l);
  return s;
}

/// Confluence guard: every word of the given length over the generators (and the
/// inverse of an invertible base) has the same normal form under left and right folding.
inline CheckRecord diamond_check(const TowerPtr& t, unsigned degree = 3) {
  if (degree < 3) throw std::invalid_argument("diamond check needs degree >= 3");
  auto letters = t->letters();
  std::vector<std::size_t> idx(degree, 0);
  std::size_t words = 0;
  while (true) {
    std::vector<Letter> w;
    for (auto i : idx) w.push_back(letters[i]);
    ++words;
    NCPoly l = word_product(t, w, true);
    NCPoly r = word_product(t, w, false);
    if (!(l == r)) {
      auto rec = make_record("diamond." + t->name(), false, l.str(), r.str(), word_str(*t, w));
      return rec;
    }
    std::size_t k = 0;
    while (k < degree && ++idx[k] == letters.size()) idx[k++] = 0;
    if (k == degree) break;
  }
  auto rec = make_record("diamond." + t->name(), true);
  rec.note = std::to_string(words) + " words of length " + std::to_string(degree);
  return rec;
}

/// Linear system "sum c_i basis_i = x" in monomial coordinates.
inline AffineSolution<Scalar> span_system(const NCPoly& x, const std::vector<NCPoly>& basis) {
  std::map<Exponents, std::size_t, MonoOrder> rows;
  auto row_of = [&](const Exponents& e) {
    auto [it, _] = rows.emplace(e, rows.size());
    return it->second;
  };
  for (const auto& b : basis)
    for (const auto& [e, _] : b.terms()) row_of(e);
  for (const auto& [e, _] : x.terms()) row_of(e);
  Matrix<Scalar> a(rows.size(), std::vector<Scalar>(basis.size()));
  std::vector<Scalar> rhs(rows.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [e, c] : basis[j].terms()) a[rows.at(e)][j] = c;
  for (const auto& [e, c] : x.terms()) rhs[rows.at(e)] = c;
  return solve_affine(a, rhs, basis.size());
}

/// Coefficients expressing x in the span of basis, or none.
inline std::optional<std::vector<Scalar>> span_solve(const NCPoly& x, const std::vector<NCPoly>& basis) {
  auto sol = span_system(x, basis);
  if (!sol.consistent) return std::nullopt;
  return sol.particular;
}

inline bool linearly_independent(const std::vector<NCPoly>& basis) {
  if (basis.empty()) return true;
  auto sol = span_system(NCPoly(basis.front().tower()), basis);
  return sol.consistent && sol.dimension() == 0;
}

}  // namespace e2v
