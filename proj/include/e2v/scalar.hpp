#pragma once

// Scalar: element of Q(i)(p_1, ..., p_r), the field of rational functions in
// the declared formal parameters. Stored as a reduced fraction with a monic
// denominator, so structural equality is field equality.

#include "e2v/poly.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace e2v {

struct PoleAtPoint : std::domain_error {
  using std::domain_error::domain_error;
};

/// How the star involution acts on a parameter: p* = p or p* = -p.
enum class StarRule { fixed, negated };

struct Parameter {
  std::string name;
  StarRule star = StarRule::fixed;
};

/// Declared parameters of a presentation, keyed by name.
class ParameterSet {
 public:
  ParameterSet() = default;
  ParameterSet(std::initializer_list<Parameter> ps) {
    for (const auto& p : ps) declare(p);
  }

  void declare(const Parameter& p) {
    auto [it, inserted] = rules_.emplace(p.name, p.star);
    if (!inserted && it->second != p.star)
      throw std::invalid_argument("parameter '" + p.name + "' redeclared with a different star rule");
  }
  bool contains(const std::string& name) const { return rules_.count(name) != 0; }
  StarRule rule(const std::string& name) const {
    auto it = rules_.find(name);
    if (it == rules_.end()) throw UnboundParameter("undeclared parameter '" + name + "'");
    return it->second;
  }
  std::set<std::string> negated() const {
    std::set<std::string> s;
    for (const auto& [n, r] : rules_)
      if (r == StarRule::negated) s.insert(n);
    return s;
  }
  const std::map<std::string, StarRule>& rules() const { return rules_; }

  void merge(const ParameterSet& o) {
    for (const auto& [n, r] : o.rules_) declare({n, r});
  }

  friend bool operator==(const ParameterSet&, const ParameterSet&) = default;

 private:
  std::map<std::string, StarRule> rules_;
};

class Scalar {
 public:
  Scalar() : num_(), den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}                   // NOLINT
  Scalar(const GaussRational& c) : num_(c), den_(1) {}   // NOLINT
  Scalar(Poly p) : num_(std::move(p)), den_(1) {}        // NOLINT
  Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static Scalar param(const std::string& name) { return Scalar(Poly::var(name)); }
  static Scalar i() { return Scalar(GaussRational::i()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_one(); }
  GaussRational constant_value() const {
    if (!is_constant()) throw std::logic_error("scalar is not constant");
    return num_.constant_value();
  }
  std::set<std::string> parameters() const {
    auto s = num_.vars();
    auto d = den_.vars();
    s.insert(d.begin(), d.end());
    return s;
  }

  Scalar operator-() const { return raw(-num_, den_); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.den_.is_one() && b.den_.is_one()) return raw(a.num_ + b.num_, a.den_);
    if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return raw(a.num_ * b.num_, a.den_);
    // cross-cancel before multiplying
    Poly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    Poly an = *divide_exact(a.num_, g1), bd = *divide_exact(b.den_, g1);
    Poly bn = *divide_exact(b.num_, g2), ad = *divide_exact(a.den_, g2);
    return Scalar(an * bn, ad * bd);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw DegenerateScalar("scalar division by zero");
    return a * raw_inverse(b);
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const {
    if (is_zero()) throw DegenerateScalar("inverse of zero scalar");
    return raw_inverse(*this);
  }

  Scalar pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    return raw(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
  }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// i -> -i and each parameter per its declared star rule.
  Scalar conj(const ParameterSet& params) const {
    for (const auto& p : parameters()) params.rule(p);  // reject undeclared parameters
    auto neg = params.negated();
    return Scalar(num_.conj(neg), den_.conj(neg));
  }

  GaussRational eval(const std::map<std::string, GaussRational>& at) const {
    GaussRational d = den_.eval(at);
    GaussRational n = num_.eval(at);
    if (d.is_zero()) throw PoleAtPoint("denominator vanishes at the evaluation point");
    return n / d;
  }

  Scalar substitute(const std::string& var, const GaussRational& value) const {
    Poly d = den_.substitute(var, value);
    if (d.is_zero()) throw PoleAtPoint("denominator vanishes after substituting '" + var + "'");
    return Scalar(num_.substitute(var, value), d);
  }

  /// Sign used when printing sums: the display sign of the leading numerator coefficient.
  int display_sign() const { return is_zero() ? 0 : num_.leading_coeff().display_sign(); }

  /// True when the printed form is a single factor (no '+'/'-' inside).
  bool is_atomic() const {
    if (!den_.is_one()) return false;
    if (num_.terms().size() != 1) return false;
    const auto& c = num_.leading_coeff();
    return c.is_real() || sgn(c.re()) == 0;
  }

  std::string str() const {
    if (den_.is_one()) return num_.str();
    auto wrap = [](const Poly& p) {
      bool single = p.terms().size() == 1 && p.leading_coeff().display_sign() > 0 &&
                    (p.leading_coeff().is_real() || sgn(p.leading_coeff().re()) == 0);
      return single ? p.str() : "(" + p.str() + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
  }

 private:
  static Scalar raw(Poly n, Poly d) {
    Scalar s;
    s.num_ = std::move(n);
    s.den_ = std::move(d);
    if (s.num_.is_zero()) s.den_ = Poly(1);
    return s;
  }
  static Scalar raw_inverse(const Scalar& a) { return Scalar(a.den_, a.num_); }

  void normalize() {
    if (den_.is_zero()) throw DegenerateScalar("zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(1);
      return;
    }
    if (!den_.is_constant()) {
      Poly g = gcd(num_, den_);
      if (!g.is_one()) {
        num_ = *divide_exact(num_, g);
        den_ = *divide_exact(den_, g);
      }
    }
    GaussRational lc = den_.leading_coeff();
    if (!lc.is_one()) {
      GaussRational inv = GaussRational(1) / lc;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  Poly num_;
  Poly den_;
};

}  // namespace e2v
