#pragma once

// Extension of generator images to whole algebras, and algebra morphisms into
// (tensor products of) presented algebras.

#include "e2v/tensor.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace e2v {

/// Extends images of generators multiplicatively (or antimultiplicatively) to
/// monomials, with image(x_0^-1) supplied for an invertible base. Powers and
/// monomial images are memoized.
template <class T>
class Extender {
 public:
  using Mul = std::function<T(const T&, const T&)>;

  Extender() = default;
  Extender(TowerPtr src, std::vector<T> images, std::optional<T> inv0, T one, Mul mul, bool reversed)
      : src_(std::move(src)),
        images_(std::move(images)),
        inv0_(std::move(inv0)),
        one_(std::move(one)),
        mul_(std::move(mul)),
        reversed_(reversed),
        cache_(std::make_shared<Cache>()) {}

  const T& image(std::size_t level) const { return images_.at(level); }
  const std::optional<T>& inverse_image() const { return inv0_; }
  const T& one() const { return one_; }
  T mul(const T& a, const T& b) const { return mul_(a, b); }
  bool reversed() const { return reversed_; }

  /// Image of a single letter.
  const T& letter(const Letter& l) const {
    if (l.power == 1) return images_.at(l.level);
    if (l.level != 0 || !inv0_) throw std::logic_error("no image for inverse letter");
    return *inv0_;
  }

  T monomial(const Exponents& e) const {
    {
      std::lock_guard<std::mutex> lock(cache_->mu);
      if (auto it = cache_->mono.find(e); it != cache_->mono.end()) return it->second;
    }
    T r = one_;
    const std::size_t n = e.size();
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t i = reversed_ ? n - 1 - k : k;
      if (e[i] == 0) continue;
      r = mul_(r, power(i, e[i]));
    }
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->mono.emplace(e, std::move(r)).first->second;
  }

 private:
  T power(std::size_t level, int p) const {
    auto key = std::make_pair(level, p);
    {
      std::lock_guard<std::mutex> lock(cache_->mu);
      if (auto it = cache_->pow.find(key); it != cache_->pow.end()) return it->second;
    }
    T r = one_;
    const T& base = letter({level, p > 0 ? 1 : -1});
    for (int k = 0; k < std::abs(p); ++k) r = mul_(r, base);
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->pow.emplace(key, std::move(r)).first->second;
  }

  struct Cache {
    std::mutex mu;
    std::map<Exponents, T> mono;
    std::map<std::pair<std::size_t, int>, T> pow;
  };

  TowerPtr src_;
  std::vector<T> images_;
  std::optional<T> inv0_;
  T one_;
  Mul mul_;
  bool reversed_ = false;
  std::shared_ptr<Cache> cache_;
};

/// Inverse of a single-term tensor whose legs are powers of invertible base generators.
inline std::optional<TensorElement> invert_monomial(const TensorElement& x) {
  if (x.terms().size() != 1) return std::nullopt;
  const auto& [k, c] = *x.terms().begin();
  TensorKey inv;
  for (std::size_t i = 0; i < k.size(); ++i) {
    Exponents e = k[i];
    for (std::size_t l = 0; l < e.size(); ++l) {
      if (e[l] == 0) continue;
      if (l != 0 || !x.legs()[i]->base_invertible()) return std::nullopt;
      e[l] = -e[l];
    }
    inv.push_back(std::move(e));
  }
  TensorElement r(x.legs());
  r.add(inv, c.inverse());
  return r;
}

/// Algebra morphism source -> target_1 (x) ... (x) target_k given on generators.
class AlgebraMorphism {
 public:
  AlgebraMorphism() = default;
  AlgebraMorphism(std::string name, TowerPtr source, std::vector<TowerPtr> target, std::vector<TensorElement> images)
      : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)) {
    if (images.size() != source_->size()) throw std::invalid_argument(name_ + ": one image per generator required");
    for (std::size_t i = 0; i < images.size(); ++i)
      if (images[i].arity() != target_.size())
        throw std::invalid_argument(name_ + ": image of '" + source_->gen(i).name + "' has the wrong arity");
    std::optional<TensorElement> inv;
    if (source_->base_invertible()) {
      inv = invert_monomial(images[0]);
      if (!inv)
        throw std::invalid_argument(name_ + ": invertible generator '" + source_->gen(0).name +
                                    "' must map to an invertible monomial, got " + images[0].str());
    }
    auto legs = target_;
    ext_ = Extender<TensorElement>(source_, std::move(images), std::move(inv), TensorElement::unit(legs),
                                   [](const TensorElement& a, const TensorElement& b) { return a * b; }, false);
  }

  const std::string& name() const { return name_; }
  const TowerPtr& source() const { return source_; }
  const std::vector<TowerPtr>& target() const { return target_; }
  const TensorElement& image(std::size_t level) const { return ext_.image(level); }

  TensorElement apply(const NCPoly& x) const {
    check_source(x);
    TensorElement r(target_);
    for (const auto& [e, c] : x.terms()) r += c * ext_.monomial(e);
    return r;
  }
  TensorElement apply_monomial(const Exponents& e) const { return ext_.monomial(e); }

  /// Every derived rewrite rule of the source maps to an identity in the target.
  CheckRecord validate() const {
    for (const auto& rel : source_->relations()) {
      TensorElement lhs = ext_.letter(rel.hi) * ext_.letter(rel.lo);
      TensorElement rhs = apply(NCPoly(source_, rel.rhs));
      if (!(lhs == rhs)) {
        auto r = make_record("morphism." + name_, false, lhs.str(), rhs.str(), relation_str(*source_, rel));
        return r;
      }
    }
    return make_record("morphism." + name_, true);
  }

 private:
  void check_source(const NCPoly& x) const {
    if (x.tower() && !x.is_zero() && !same_tower(x.tower(), source_))
      throw std::invalid_argument(name_ + ": argument is not in the source algebra");
  }

 public:
  static std::string relation_str(const OreTower& t, const Relation& rel) {
    return t.letter_str(rel.hi) + "*" + t.letter_str(rel.lo) + " = " + NCPoly(t.shared_from_this(), rel.rhs).str();
  }

 private:
  std::string name_;
  TowerPtr source_;
  std::vector<TowerPtr> target_;
  Extender<TensorElement> ext_;
};

/// Applies f to leg `leg` of every term; f maps a monomial of that leg to a tensor
/// (arity 0 for scalars) that replaces the leg in place.
inline TensorElement map_leg(const TensorElement& x, std::size_t leg,
                             const std::function<TensorElement(const Exponents&)>& f,
                             const std::vector<TowerPtr>& replacement_legs) {
  std::vector<TowerPtr> legs;
  for (std::size_t i = 0; i < x.arity(); ++i) {
    if (i == leg)
      legs.insert(legs.end(), replacement_legs.begin(), replacement_legs.end());
    else
      legs.push_back(x.legs()[i]);
  }
  TensorElement r(legs);
  for (const auto& [k, c] : x.terms()) {
    TensorElement img = f(k[leg]);
    for (const auto& [ki, ci] : img.terms()) {
      TensorKey kk;
      for (std::size_t i = 0; i < k.size(); ++i) {
        if (i == leg)
          kk.insert(kk.end(), ki.begin(), ki.end());
        else
          kk.push_back(k[i]);
      }
      r.add(kk, c * ci);
    }
  }
  return r;
}

/// Multiplies the legs of a tensor whose legs all live in one algebra.
inline NCPoly multiply_legs(const TensorElement& x) {
  if (x.arity() == 0) throw std::invalid_argument("nothing to multiply");
  const TowerPtr& t = x.legs()[0];
  NCPoly r(t);
  for (const auto& [k, c] : x.terms()) {
    Terms acc = t->single(k[0], c);
    for (std::size_t i = 1; i < k.size(); ++i) acc = t->mul(acc, t->single(k[i]));
    r += NCPoly(t, std::move(acc));
  }
  return r;
}

}  // namespace e2v
