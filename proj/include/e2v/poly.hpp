#pragma once

// Commutative multivariate polynomials over the Gaussian rationals, in named
// formal parameters. This is the coefficient ring underneath Scalar; it
// provides exact division and a recursive primitive-PRS gcd so that
// fractions can be kept reduced.

#include "e2v/gauss.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace e2v {

struct UnboundParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Power product of parameters, sorted by name, no zero exponents.
using PMono = std::vector<std::pair<std::string, unsigned>>;

inline unsigned total_degree(const PMono& m) {
  unsigned d = 0;
  for (const auto& [_, e] : m) d += e;
  return d;
}

/// Graded lexicographic order, largest first; names earlier in the alphabet are
/// the more significant variables.
struct PMonoOrder {
  bool operator()(const PMono& a, const PMono& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size()) return true;
      if (i == a.size()) return false;
      if (a[i].first != b[j].first) return a[i].first < b[j].first;
      if (a[i].second != b[j].second) return a[i].second > b[j].second;
      ++i;
      ++j;
    }
    return false;
  }
};

inline PMono mono_mul(const PMono& a, const PMono& b) {
  PMono r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

/// a / b if b divides a.
inline std::optional<PMono> mono_div(const PMono& a, const PMono& b) {
  PMono r;
  std::size_t i = 0;
  for (const auto& [name, e] : b) {
    while (i < a.size() && a[i].first < name) r.push_back(a[i++]);
    if (i == a.size() || a[i].first != name || a[i].second < e) return std::nullopt;
    if (a[i].second > e) r.emplace_back(name, a[i].second - e);
    ++i;
  }
  while (i < a.size()) r.push_back(a[i++]);
  return r;
}

inline unsigned mono_degree_in(const PMono& m, const std::string& var) {
  for (const auto& [name, e] : m)
    if (name == var) return e;
  return 0;
}

class Poly {
 public:
  using Terms = std::map<PMono, GaussRational, PMonoOrder>;

  Poly() = default;
  Poly(const GaussRational& c) {  // NOLINT: constants embed implicitly
    if (!c.is_zero()) terms_.emplace(PMono{}, c);
  }
  Poly(long c) : Poly(GaussRational(c)) {}  // NOLINT

  static Poly var(const std::string& name, unsigned e = 1) {
    Poly p;
    p.terms_.emplace(e == 0 ? PMono{} : PMono{{name, e}}, GaussRational(1));
    return p;
  }
  static Poly term(PMono m, GaussRational c) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  bool is_one() const { return is_constant() && !is_zero() && terms_.begin()->second.is_one(); }
  GaussRational constant_value() const {
    auto it = terms_.find(PMono{});
    return it == terms_.end() ? GaussRational() : it->second;
  }

  const PMono& leading_mono() const { return terms_.begin()->first; }
  const GaussRational& leading_coeff() const { return terms_.begin()->second; }

  std::set<std::string> vars() const {
    std::set<std::string> s;
    for (const auto& [m, _] : terms_)
      for (const auto& [name, e] : m) s.insert(name);
    return s;
  }
  unsigned degree_in(const std::string& var) const {
    unsigned d = 0;
    for (const auto& [m, _] : terms_) d = std::max(d, mono_degree_in(m, var));
    return d;
  }

  void add_term(const PMono& m, const GaussRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
    return r;
  }
  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const GaussRational& c) const {
    if (c.is_zero()) return {};
    Poly r;
    for (const auto& [m, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, x * c);
    return r;
  }

  Poly pow(unsigned e) const {
    Poly r(1), b = *this;
    while (e) {
      if (e & 1u) r *= b;
      e >>= 1u;
      if (e) b *= b;
    }
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Divide so that the leading coefficient becomes 1.
  Poly monic() const {
    if (is_zero()) return {};
    return scaled(GaussRational(1) / leading_coeff());
  }

  GaussRational eval(const std::map<std::string, GaussRational>& at) const {
    GaussRational s;
    for (const auto& [m, c] : terms_) {
      GaussRational t = c;
      for (const auto& [name, e] : m) {
        auto it = at.find(name);
        if (it == at.end()) throw UnboundParameter("no value for parameter '" + name + "'");
        for (unsigned k = 0; k < e; ++k) t *= it->second;
      }
      s += t;
    }
    return s;
  }

  /// Replace one parameter by a value; other parameters stay formal.
  Poly substitute(const std::string& var, const GaussRational& value) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
      PMono rest;
      GaussRational t = c;
      for (const auto& [name, e] : m) {
        if (name == var) {
          for (unsigned k = 0; k < e; ++k) t *= value;
        } else {
          rest.emplace_back(name, e);
        }
      }
      r.add_term(rest, t);
    }
    return r;
  }

  /// Complex conjugation of coefficients; parameters listed in `negated` map x -> -x.
  Poly conj(const std::set<std::string>& negated) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
      GaussRational t = c.conj();
      unsigned odd = 0;
      for (const auto& [name, e] : m)
        if (negated.count(name)) odd += e;
      if (odd % 2) t = -t;
      r.add_term(m, t);
    }
    return r;
  }

  /// Coefficients with respect to `var`: p = sum_k coeff[k] * var^k.
  std::map<unsigned, Poly> coefficients_in(const std::string& var) const {
    std::map<unsigned, Poly> out;
    for (const auto& [m, c] : terms_) {
      PMono rest;
      unsigned k = 0;
      for (const auto& [name, e] : m) {
        if (name == var)
          k = e;
        else
          rest.emplace_back(name, e);
      }
      out[k].add_term(rest, c);
    }
    return out;
  }

  std::string str() const;

 private:
  Terms terms_;
};

inline std::string mono_str(const PMono& m) {
  std::string s;
  for (const auto& [name, e] : m) {
    if (!s.empty()) s += "*";
    s += name;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

inline std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    GaussRational a = c;
    bool neg = a.display_sign() < 0;
    if (neg) a = -a;
    std::string coeff;
    if (m.empty()) {
      coeff = a.str();
    } else if (a.is_one()) {
      coeff = mono_str(m);
    } else {
      coeff = a.str() + "*" + mono_str(m);
    }
    if (first) {
      s = neg ? "-" + coeff : coeff;
    } else {
      s += neg ? " - " : " + ";
      s += coeff;
    }
    first = false;
  }
  return s;
}

/// Exact division; nullopt when b does not divide a.
inline std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DegenerateScalar("polynomial division by zero");
  Poly q, r = a;
  const PMono& lb = b.leading_mono();
  const GaussRational& cb = b.leading_coeff();
  while (!r.is_zero()) {
    auto t = mono_div(r.leading_mono(), lb);
    if (!t) return std::nullopt;
    Poly step = Poly::term(*t, r.leading_coeff() / cb);
    q += step;
    r -= step * b;
  }
  return q;
}

namespace detail {

using Univariate = std::map<unsigned, Poly>;  // degree -> coefficient (nonzero)

inline Poly from_univariate(const Univariate& u, const std::string& var) {
  Poly r;
  for (const auto& [k, c] : u) r += c * Poly::var(var, k);
  return r;
}

inline unsigned udeg(const Univariate& u) { return u.empty() ? 0 : u.rbegin()->first; }

}  // namespace detail

Poly gcd(const Poly& a, const Poly& b);

namespace detail {

inline Poly content(const Univariate& u) {
  Poly g;
  for (const auto& [k, c] : u) {
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

inline Univariate divide_coeffs(const Univariate& u, const Poly& c) {
  Univariate r;
  for (const auto& [k, x] : u) r[k] = *divide_exact(x, c);
  return r;
}

/// Pseudo-remainder of a by b (lazy: the scaling power of lc(b) is not tracked).
inline Univariate prem(Univariate a, const Univariate& b) {
  const unsigned m = udeg(b);
  const Poly& lb = b.rbegin()->second;
  while (!a.empty() && udeg(a) >= m) {
    unsigned d = udeg(a) - m;
    Poly la = a.rbegin()->second;
    Univariate next;
    for (const auto& [k, c] : a) next[k] += lb * c;
    for (const auto& [k, c] : b) next[k + d] -= la * c;
    for (auto it = next.begin(); it != next.end();) it = it->second.is_zero() ? next.erase(it) : std::next(it);
    a = std::move(next);
  }
  return a;
}

}  // namespace detail

/// Monic greatest common divisor; gcd(0, 0) = 0.
inline Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a == b) return a.monic();

  auto va = a.vars(), vb = b.vars();
  std::string x;
  for (const auto& n : va)
    if (x.empty() || n < x) x = n;
  for (const auto& n : vb)
    if (x.empty() || n < x) x = n;

  auto ua = a.coefficients_in(x), ub = b.coefficients_in(x);
  if (detail::udeg(ua) == 0) return gcd(a, detail::content(ub));
  if (detail::udeg(ub) == 0) return gcd(detail::content(ua), b);

  Poly ca = detail::content(ua), cb = detail::content(ub);
  Poly c = gcd(ca, cb);
  detail::Univariate pa = detail::divide_coeffs(ua, ca), pb = detail::divide_coeffs(ub, cb);
  if (detail::udeg(pa) < detail::udeg(pb)) std::swap(pa, pb);
  while (!pb.empty()) {
    detail::Univariate r = detail::prem(pa, pb);
    pa = std::move(pb);
    if (r.empty()) {
      pb.clear();
    } else if (detail::udeg(r) == 0) {
      // constant remainder in x: the primitive parts are coprime
      return c.monic();
    } else {
      pb = detail::divide_coeffs(r, detail::content(r));
    }
  }
  return (c * detail::from_univariate(pa, x)).monic();
}

}  // namespace e2v
