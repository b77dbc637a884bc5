#pragma once

// Iterated Ore extensions over a (possibly Laurent) one-generator base.
//
// Level t > 0 adds a generator x_t with x_t * y = sigma_t(y) x_t + delta_t(y)
// for every y of lower level. Only the base generator x_0 may be invertible.
// Elements are kept in the normal order x_0^e0 x_1^e1 ... x_{N-1}^e(N-1).

#include "e2v/scalar.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace e2v {

/// Exponent sequence indexed by level.
using Exponents = std::vector<int>;

inline int abs_degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += std::abs(x);
  return d;
}

/// Leading monomial first: larger sum of |exponents|, then lexicographic by level
/// with the larger exponent first.
struct MonoOrder {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = abs_degree(a), db = abs_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return a.size() < b.size();
  }
};

using Terms = std::map<Exponents, Scalar, MonoOrder>;

inline void add_term(Terms& t, const Exponents& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) t.erase(it);
}

inline void add_terms(Terms& t, const Terms& o, const Scalar& scale = Scalar(1)) {
  if (scale.is_one()) {
    for (const auto& [e, c] : o) add_term(t, e, c);
  } else {
    for (const auto& [e, c] : o) add_term(t, e, c * scale);
  }
}

inline Terms scaled_terms(const Terms& t, const Scalar& s) {
  Terms r;
  if (s.is_zero()) return r;
  for (const auto& [e, c] : t) r.emplace(e, c * s);
  return r;
}

struct TowerError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Generator {
  std::string name;
  bool invertible = false;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// One letter of a word: a generator to the power +1 or -1.
struct Letter {
  std::size_t level = 0;
  int power = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Derived rewrite rule x_hi * y = rhs, where y is x_lo or x_0^-1.
struct Relation {
  Letter hi;
  Letter lo;
  Terms rhs;
};

class OreTower;
using TowerPtr = std::shared_ptr<const OreTower>;

class OreTower : public std::enable_shared_from_this<OreTower> {
 public:
  struct Level {
    Generator gen;
    std::vector<Terms> sigma;  // images of lower generators
    std::vector<Terms> delta;
    Terms sigma_inv0;          // sigma(x_0^-1), when x_0 is invertible
    Terms delta_inv0;
  };

  /// Tower with only the base generator.
  static std::shared_ptr<OreTower> base(std::string name, ParameterSet params, Generator g0) {
    auto t = std::shared_ptr<OreTower>(new OreTower());
    t->name_ = std::move(name);
    t->params_ = std::move(params);
    t->levels_.push_back(Level{std::move(g0), {}, {}, {}, {}});
    t->check_name(t->levels_[0].gen.name, 0);
    return t;
  }

  /// New tower with one more level on top. Unlisted sigma images default to the
  /// identity and unlisted delta images to zero. Terms are over this tower.
  std::shared_ptr<OreTower> extend(Generator g, const std::map<std::size_t, Terms>& sigma,
                                   const std::map<std::size_t, Terms>& delta) const {
    if (g.invertible) throw TowerError("generator '" + g.name + "': only the base generator may be invertible");
    const std::size_t t = levels_.size();
    auto r = std::shared_ptr<OreTower>(new OreTower());
    r->name_ = name_;
    r->params_ = params_;
    for (const auto& lv : levels_) r->levels_.push_back(pad_level(lv, t + 1));
    r->check_name(g.name, t);
    Level lv{g, {}, {}, {}, {}};
    for (const auto& [j, _] : sigma)
      if (j >= t) throw TowerError("sigma of '" + g.name + "' given on a non-lower generator");
    for (const auto& [j, _] : delta)
      if (j >= t) throw TowerError("delta of '" + g.name + "' given on a non-lower generator");
    for (std::size_t j = 0; j < t; ++j) {
      Terms s, d;
      if (auto it = sigma.find(j); it != sigma.end()) {
        check_support(it->second, t, g.name, "sigma");
        s = pad_terms(it->second, t + 1);
      } else {
        Exponents e(t + 1, 0);
        e[j] = 1;
        s.emplace(std::move(e), Scalar(1));
      }
      if (auto it = delta.find(j); it != delta.end()) {
        check_support(it->second, t, g.name, "delta");
        d = pad_terms(it->second, t + 1);
      }
      lv.sigma.push_back(std::move(s));
      lv.delta.push_back(std::move(d));
    }
    if (levels_[0].gen.invertible) {
      const Terms& s0 = lv.sigma[0];
      bool ok = s0.size() == 1;
      if (ok)
        for (std::size_t i = 1; i < t + 1; ++i) ok = ok && s0.begin()->first[i] == 0;
      if (!ok)
        throw TowerError("sigma of '" + g.name + "' maps invertible '" + levels_[0].gen.name +
                         "' to a non-invertible element");
      Exponents e = s0.begin()->first;
      for (auto& x : e) x = -x;
      lv.sigma_inv0.emplace(e, s0.begin()->second.inverse());
    }
    r->levels_.push_back(std::move(lv));
    if (levels_[0].gen.invertible) {
      // delta(x^-1) = -sigma(x)^-1 delta(x) x^-1
      Level& top = r->levels_.back();
      Terms xinv;
      xinv.emplace(r->letter_exponents(0, -1), Scalar(1));  // r now has t + 1 levels
      Terms d = r->mul(r->mul(top.sigma_inv0, top.delta[0]), xinv);
      top.delta_inv0 = scaled_terms(d, Scalar(-1));
    }
    return r;
  }

  const std::string& name() const { return name_; }
  const ParameterSet& parameters() const { return params_; }
  std::size_t size() const { return levels_.size(); }
  const Generator& gen(std::size_t level) const { return levels_.at(level).gen; }
  const Level& level(std::size_t l) const { return levels_.at(l); }
  bool base_invertible() const { return levels_[0].gen.invertible; }

  std::optional<std::size_t> level_of(const std::string& name) const {
    for (std::size_t i = 0; i < levels_.size(); ++i)
      if (levels_[i].gen.name == name) return i;
    return std::nullopt;
  }

  Exponents unit() const { return Exponents(levels_.size(), 0); }
  Exponents letter_exponents(std::size_t level, int power) const {
    Exponents e = unit();
    e.at(level) = power;
    return e;
  }

  /// Generators and the inverse of the base generator when it is invertible.
  std::vector<Letter> letters() const {
    std::vector<Letter> r;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      r.push_back({i, 1});
      if (i == 0 && base_invertible()) r.push_back({0, -1});
    }
    return r;
  }

  std::string letter_str(const Letter& l) const {
    return l.power == 1 ? gen(l.level).name : gen(l.level).name + "^" + std::to_string(l.power);
  }

  bool is_commutative() const {
    for (std::size_t t = 1; t < levels_.size(); ++t)
      for (std::size_t j = 0; j < t; ++j) {
        const Terms& s = levels_[t].sigma[j];
        if (!levels_[t].delta[j].empty()) return false;
        if (s.size() != 1 || s.begin()->first != letter_exponents(j, 1) || !s.begin()->second.is_one())
          return false;
      }
    return true;
  }

  std::vector<Relation> relations() const {
    std::vector<Relation> r;
    for (std::size_t t = 1; t < levels_.size(); ++t) {
      for (std::size_t j = 0; j < t; ++j) {
        Terms rhs = mul(levels_[t].sigma[j], single(letter_exponents(t, 1)));
        add_terms(rhs, levels_[t].delta[j]);
        r.push_back({{t, 1}, {j, 1}, std::move(rhs)});
        if (j == 0 && base_invertible()) {
          Terms rinv = mul(levels_[t].sigma_inv0, single(letter_exponents(t, 1)));
          add_terms(rinv, levels_[t].delta_inv0);
          r.push_back({{t, 1}, {0, -1}, std::move(rinv)});
        }
      }
    }
    return r;
  }

  /// Structural equality (same generators, parameters and twist data).
  bool same_as(const OreTower& o) const {
    if (this == &o) return true;
    if (levels_.size() != o.levels_.size() || !(params_ == o.params_)) return false;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      const Level& a = levels_[i];
      const Level& b = o.levels_[i];
      if (!(a.gen == b.gen) || a.sigma != b.sigma || a.delta != b.delta) return false;
    }
    return true;
  }

  Terms single(const Exponents& e, const Scalar& c = Scalar(1)) const {
    Terms t;
    add_term(t, e, c);
    return t;
  }

  Terms mul(const Terms& p, const Terms& q) const {
    Terms r;
    for (const auto& [a, ca] : p)
      for (const auto& [b, cb] : q) add_terms(r, mul_mono(a, b), ca * cb);
    return r;
  }

  Terms mul_mono(const Exponents& m, const Exponents& n) const {
    int tm = top(m), tn = top(n);
    if (tm < 0) return single(n);
    if (tn < 0) return single(m);
    if (tm <= bottom(n)) {
      Exponents e = m;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += n[i];
      return single(e);
    }
    auto key = std::make_pair(m, n);
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = mul_cache_.find(key); it != mul_cache_.end()) return it->second;
    }
    const auto t = static_cast<std::size_t>(std::max(tm, tn));
    Exponents a = m, b = n;
    const int ea = a[t], eb = b[t];
    a[t] = 0;
    b[t] = 0;
    Terms r;
    if (ea == 0) {
      for (const auto& [e, c] : mul_mono(a, b)) {
        Exponents f = e;
        f[t] = eb;
        add_term(r, f, c);
      }
    } else {
      const auto& parts = left_power(t, ea, b);
      Terms lhs = single(a);
      for (std::size_t j = 0; j < parts.size(); ++j) {
        if (parts[j].empty()) continue;
        for (const auto& [e, c] : mul(lhs, parts[j])) {
          Exponents f = e;
          f[t] = static_cast<int>(j) + eb;
          add_term(r, f, c);
        }
      }
    }
    std::lock_guard<std::mutex> lock(mu_);
    return mul_cache_.emplace(std::move(key), std::move(r)).first->second;
  }

  /// sigma_t applied to an element of lower level.
  Terms sigma_apply(std::size_t t, const Terms& x) const {
    Terms r;
    for (const auto& [e, c] : x) add_terms(r, sigma_mono(t, e), c);
    return r;
  }
  Terms delta_apply(std::size_t t, const Terms& x) const {
    Terms r;
    for (const auto& [e, c] : x) add_terms(r, delta_mono(t, e), c);
    return r;
  }

 private:
  OreTower() = default;

  static int top(const Exponents& e) {
    for (int i = static_cast<int>(e.size()) - 1; i >= 0; --i)
      if (e[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
  }
  static int bottom(const Exponents& e) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) return static_cast<int>(i);
    return static_cast<int>(e.size());
  }

  void check_name(const std::string& n, std::size_t upto) const {
    if (n.empty() || n == "i") throw TowerError("invalid generator name '" + n + "'");
    if (params_.contains(n)) throw TowerError("generator '" + n + "' clashes with a parameter");
    for (std::size_t i = 0; i < upto; ++i)
      if (levels_[i].gen.name == n) throw TowerError("duplicate generator '" + n + "'");
  }

  void check_support(const Terms& x, std::size_t t, const std::string& g, const char* what) const {
    for (const auto& [e, _] : x) {
      if (e.size() != t) throw TowerError(std::string(what) + " image for '" + g + "' has the wrong arity");
      for (std::size_t i = 0; i < e.size(); ++i)
        if (i > 0 && e[i] < 0) throw TowerError(std::string(what) + " image for '" + g + "' has a negative power");
    }
  }

  static Terms pad_terms(const Terms& x, std::size_t n) {
    Terms r;
    for (const auto& [e, c] : x) {
      Exponents f = e;
      f.resize(n, 0);
      r.emplace(std::move(f), c);
    }
    return r;
  }
  static Level pad_level(const Level& lv, std::size_t n) {
    Level r{lv.gen, {}, {}, pad_terms(lv.sigma_inv0, n), pad_terms(lv.delta_inv0, n)};
    for (const auto& s : lv.sigma) r.sigma.push_back(pad_terms(s, n));
    for (const auto& d : lv.delta) r.delta.push_back(pad_terms(d, n));
    return r;
  }

  // Splits a nonunit monomial into its lowest letter and the remainder.
  std::pair<Letter, Exponents> split_first(const Exponents& y) const {
    auto i = static_cast<std::size_t>(bottom(y));
    Exponents rest = y;
    int p = y[i] > 0 ? 1 : -1;
    rest[i] -= p;
    return {{i, p}, rest};
  }

  const Terms& sigma_letter(std::size_t t, const Letter& l) const {
    return l.power == 1 ? levels_[t].sigma[l.level] : levels_[t].sigma_inv0;
  }
  const Terms& delta_letter(std::size_t t, const Letter& l) const {
    return l.power == 1 ? levels_[t].delta[l.level] : levels_[t].delta_inv0;
  }

  Terms sigma_mono(std::size_t t, const Exponents& y) const {
    if (top(y) < 0) return single(y);
    auto key = std::make_pair(t, y);
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = sigma_cache_.find(key); it != sigma_cache_.end()) return it->second;
    }
    auto [l, rest] = split_first(y);
    Terms r = mul(sigma_letter(t, l), sigma_mono(t, rest));
    std::lock_guard<std::mutex> lock(mu_);
    return sigma_cache_.emplace(std::move(key), std::move(r)).first->second;
  }

  // Twisted Leibniz rule: delta(l * R) = sigma(l) delta(R) + delta(l) R.
  Terms delta_mono(std::size_t t, const Exponents& y) const {
    if (top(y) < 0) return {};
    auto key = std::make_pair(t, y);
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = delta_cache_.find(key); it != delta_cache_.end()) return it->second;
    }
    auto [l, rest] = split_first(y);
    Terms r = mul(sigma_letter(t, l), delta_mono(t, rest));
    add_terms(r, mul(delta_letter(t, l), single(rest)));
    std::lock_guard<std::mutex> lock(mu_);
    return delta_cache_.emplace(std::move(key), std::move(r)).first->second;
  }

  // x_t^a * b = sum_j parts[j] x_t^j with parts[j] of lower level.
  const std::vector<Terms>& left_power(std::size_t t, int a, const Exponents& b) const {
    auto key = std::make_tuple(t, a, b);
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = power_cache_.find(key); it != power_cache_.end()) return it->second;
    }
    std::vector<Terms> r;
    if (a == 0) {
      r.push_back(single(b));
    } else {
      const auto& prev = left_power(t, a - 1, b);
      r.resize(prev.size() + 1);
      for (std::size_t j = 0; j < prev.size(); ++j) {
        if (prev[j].empty()) continue;
        add_terms(r[j + 1], sigma_apply(t, prev[j]));
        add_terms(r[j], delta_apply(t, prev[j]));
      }
    }
    std::lock_guard<std::mutex> lock(mu_);
    return power_cache_.emplace(std::move(key), std::move(r)).first->second;
  }

  std::string name_;
  ParameterSet params_;
  std::vector<Level> levels_;

  mutable std::mutex mu_;
  mutable std::map<std::pair<Exponents, Exponents>, Terms> mul_cache_;
  mutable std::map<std::pair<std::size_t, Exponents>, Terms> sigma_cache_;
  mutable std::map<std::pair<std::size_t, Exponents>, Terms> delta_cache_;
  mutable std::map<std::tuple<std::size_t, int, Exponents>, std::vector<Terms>> power_cache_;
};

}  // namespace e2v
