#pragma once

// Elements of A_1 (x) ... (x) A_k with each leg in normal form.

#include "e2v/ncpoly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace e2v {

using TensorKey = std::vector<Exponents>;

/// Larger total degree first, then leg by leg in the monomial order.
struct TensorOrder {
  bool operator()(const TensorKey& a, const TensorKey& b) const {
    int da = 0, db = 0;
    for (const auto& e : a) da += abs_degree(e);
    for (const auto& e : b) db += abs_degree(e);
    if (da != db) return da > db;
    MonoOrder m;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
      if (m(a[i], b[i])) return true;
      if (m(b[i], a[i])) return false;
    }
    return a.size() < b.size();
  }
};

using TensorTerms = std::map<TensorKey, Scalar, TensorOrder>;

class TensorElement {
 public:
  TensorElement() = default;
  explicit TensorElement(std::vector<TowerPtr> legs) : legs_(std::move(legs)) {}

  static TensorElement from(const NCPoly& p) {
    TensorElement t({p.tower()});
    for (const auto& [e, c] : p.terms()) t.add({e}, c);
    return t;
  }
  static TensorElement unit(std::vector<TowerPtr> legs, const Scalar& c = Scalar(1)) {
    TensorElement t(legs);
    TensorKey k;
    for (const auto& l : t.legs_) k.push_back(l->unit());
    t.add(k, c);
    return t;
  }
  /// a_1 (x) ... (x) a_k
  static TensorElement product_of(const std::vector<NCPoly>& parts) {
    std::vector<TowerPtr> legs;
    for (const auto& p : parts) legs.push_back(p.tower());
    TensorElement t = unit(legs);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      TensorElement next(legs);
      for (const auto& [k, c] : t.terms_)
        for (const auto& [e, d] : parts[i].terms()) {
          TensorKey kk = k;
          kk[i] = e;
          next.add(kk, c * d);
        }
      t = std::move(next);
    }
    return t;
  }

  std::size_t arity() const { return legs_.size(); }
  const std::vector<TowerPtr>& legs() const { return legs_; }
  const TensorTerms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const TensorKey& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  /// The single leg as an algebra element (arity 1 only).
  NCPoly as_poly() const {
    if (arity() != 1) throw std::logic_error("tensor of arity " + std::to_string(arity()) + " is not an element");
    Terms t;
    for (const auto& [k, c] : terms_) add_term(t, k[0], c);
    return NCPoly(legs_[0], std::move(t));
  }

  TensorElement operator-() const {
    TensorElement r(legs_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }
  TensorElement& operator+=(const TensorElement& o) {
    check(o);
    if (legs_.empty()) legs_ = o.legs_;
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  TensorElement& operator-=(const TensorElement& o) {
    check(o);
    if (legs_.empty()) legs_ = o.legs_;
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(const Scalar& s, const TensorElement& t) {
    TensorElement r(t.legs_);
    if (s.is_zero()) return r;
    for (const auto& [k, c] : t.terms_) r.terms_.emplace(k, c * s);
    return r;
  }

  /// Legwise product.
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b) {
    a.check(b);
    TensorElement r(a.legs_.empty() ? b.legs_ : a.legs_);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        std::vector<std::pair<TensorKey, Scalar>> acc{{TensorKey{}, ca * cb}};
        for (std::size_t i = 0; i < ka.size(); ++i) {
          Terms leg = r.legs_[i]->mul_mono(ka[i], kb[i]);
          std::vector<std::pair<TensorKey, Scalar>> next;
          next.reserve(acc.size() * leg.size());
          for (const auto& [k, c] : acc)
            for (const auto& [e, d] : leg) {
              TensorKey kk = k;
              kk.push_back(e);
              next.emplace_back(std::move(kk), c * d);
            }
          acc = std::move(next);
        }
        for (const auto& [k, c] : acc) r.add(k, c);
      }
    return r;
  }

  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    if (a.terms_ != b.terms_) return false;
    if (a.is_zero()) return true;
    if (a.legs_.size() != b.legs_.size()) return false;
    for (std::size_t i = 0; i < a.legs_.size(); ++i)
      if (!same_tower(a.legs_[i], b.legs_[i])) return false;
    return true;
  }

  /// Canonical text: legs joined by " (x) ".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Scalar, std::string>> ts;
    for (const auto& [k, c] : terms_) {
      std::string s;
      for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) s += " (x) ";
        std::string m = detail::mono_text(*legs_[i], k[i]);
        s += m.empty() ? "1" : m;
      }
      ts.emplace_back(c, s);
    }
    if (arity() == 1) {
      // unit monomial prints as the bare coefficient
      for (auto& [c, s] : ts)
        if (s == "1") s.clear();
    }
    return detail::join_terms(ts);
  }

 private:
  void check(const TensorElement& o) const {
    if (legs_.empty() || o.legs_.empty()) return;
    if (legs_.size() != o.legs_.size()) throw std::invalid_argument("tensor arity mismatch");
    for (std::size_t i = 0; i < legs_.size(); ++i)
      if (!same_tower(legs_[i], o.legs_[i])) throw std::invalid_argument("tensor legs in different algebras");
  }

  std::vector<TowerPtr> legs_;
  TensorTerms terms_;
};

}  // namespace e2v
