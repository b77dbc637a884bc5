#pragma once

// Coproduct, counit, antipode and star on a presented algebra, and the axiom checks.

#include "e2v/morphism.hpp"

#include <optional>
#include <string>
#include <vector>

namespace e2v {

class HopfStructure {
 public:
  struct Tables {
    std::optional<std::vector<TensorElement>> delta;  // per generator, arity 2
    std::optional<std::vector<Scalar>> counit;
    std::optional<std::vector<NCPoly>> antipode;
    std::optional<std::vector<NCPoly>> star;
  };

  HopfStructure() = default;
  HopfStructure(std::string name, TowerPtr a, Tables tables) : name_(std::move(name)), a_(std::move(a)) {
    const bool inv = a_->base_invertible();
    if (tables.delta) delta_.emplace(name_ + ".delta", a_, std::vector<TowerPtr>{a_, a_}, *tables.delta);
    if (tables.counit) {
      std::optional<Scalar> ci;
      if (inv) {
        if ((*tables.counit)[0].is_zero()) throw std::invalid_argument(name_ + ": counit of an invertible generator is zero");
        ci = (*tables.counit)[0].inverse();
      }
      counit_ = Extender<Scalar>(a_, *tables.counit, ci, Scalar(1),
                                 [](const Scalar& x, const Scalar& y) { return x * y; }, false);
    }
    auto poly_mul = [](const NCPoly& x, const NCPoly& y) { return x * y; };
    auto inverse_of = [&](const NCPoly& p, const char* what) -> std::optional<NCPoly> {
      if (!inv) return std::nullopt;
      auto r = invert_monomial(TensorElement::from(p));
      if (!r) throw std::invalid_argument(name_ + ": " + what + " of an invertible generator is not invertible");
      return r->as_poly();
    };
    if (tables.antipode) {
      auto i0 = inverse_of((*tables.antipode)[0], "antipode");
      antipode_ = Extender<NCPoly>(a_, *tables.antipode, i0, NCPoly::constant(a_, Scalar(1)), poly_mul, true);
    }
    if (tables.star) {
      auto i0 = inverse_of((*tables.star)[0], "star");
      star_ = Extender<NCPoly>(a_, *tables.star, i0, NCPoly::constant(a_, Scalar(1)), poly_mul, true);
    }
  }

  const std::string& name() const { return name_; }
  const TowerPtr& algebra() const { return a_; }
  bool has_coproduct() const { return delta_.has_value(); }
  bool has_counit() const { return counit_.has_value(); }
  bool has_antipode() const { return antipode_.has_value(); }
  bool has_star() const { return star_.has_value(); }
  const AlgebraMorphism& coproduct_map() const { return need(delta_, "coproduct"); }

  TensorElement coproduct(const NCPoly& x) const { return need(delta_, "coproduct").apply(x); }

  Scalar counit(const NCPoly& x) const {
    const auto& e = need(counit_, "counit");
    Scalar r;
    for (const auto& [m, c] : x.terms()) r += c * e.monomial(m);
    return r;
  }

  NCPoly antipode(const NCPoly& x) const {
    const auto& s = need(antipode_, "antipode");
    NCPoly r(a_);
    for (const auto& [m, c] : x.terms()) r += c * s.monomial(m);
    return r;
  }

  /// Antilinear, antimultiplicative.
  NCPoly star(const NCPoly& x) const {
    const auto& s = need(star_, "star");
    NCPoly r(a_);
    for (const auto& [m, c] : x.terms()) r += c.conj(a_->parameters()) * s.monomial(m);
    return r;
  }

  /// Applies the coproduct to one leg of a tensor (the leg must live in this algebra).
  TensorElement coproduct_on_leg(const TensorElement& x, std::size_t leg) const {
    const auto& d = need(delta_, "coproduct");
    return map_leg(x, leg, [&](const Exponents& e) { return d.apply_monomial(e); }, {a_, a_});
  }
  TensorElement counit_on_leg(const TensorElement& x, std::size_t leg) const {
    const auto& e = need(counit_, "counit");
    return map_leg(x, leg, [&](const Exponents& m) { return TensorElement::unit({}, e.monomial(m)); }, {});
  }
  TensorElement antipode_on_leg(const TensorElement& x, std::size_t leg) const {
    const auto& s = need(antipode_, "antipode");
    return map_leg(x, leg, [&](const Exponents& m) { return TensorElement::from(s.monomial(m)); }, {a_});
  }
  TensorElement star_on_tensor(const TensorElement& x) const {
    const auto& s = need(star_, "star");
    TensorElement r(x.legs());
    for (const auto& [k, c] : x.terms()) {
      std::vector<NCPoly> parts;
      for (const auto& e : k) parts.push_back(s.monomial(e));
      r += c.conj(a_->parameters()) * TensorElement::product_of(parts);
    }
    return r;
  }

  /// Coassociativity, counit, antipode, star compatibility and star involution on
  /// every generator (and the inverse of an invertible base).
  std::vector<CheckRecord> axioms_report() const {
    std::vector<CheckRecord> out;
    const std::string p = "hopf-axioms." + name_ + ".";
    for (const auto& l : a_->letters()) {
      NCPoly x = NCPoly::monomial(a_, a_->letter_exponents(l.level, l.power));
      std::string g = a_->letter_str(l);
      std::string gid = l.power == 1 ? g : a_->gen(l.level).name + "-inv";
      if (delta_) {
        TensorElement d = coproduct(x);
        TensorElement left = coproduct_on_leg(d, 0), right = coproduct_on_leg(d, 1);
        out.push_back(make_record(p + "coassoc." + gid, left == right, left.str(), right.str(), g));
        if (counit_) {
          TensorElement x1 = TensorElement::from(x);
          TensorElement el = counit_on_leg(d, 0), er = counit_on_leg(d, 1);
          bool ok = el == x1 && er == x1;
          out.push_back(make_record(p + "counit." + gid, ok, el.str(), er.str(), ok ? "" : g));
          if (antipode_) {
            NCPoly eps = NCPoly::constant(a_, counit(x));
            NCPoly sl = multiply_legs(antipode_on_leg(d, 0));
            NCPoly sr = multiply_legs(antipode_on_leg(d, 1));
            bool ok2 = sl == eps && sr == eps;
            out.push_back(make_record(p + "antipode." + gid, ok2, sl.str(), sr.str(), ok2 ? "" : g + " (expected " + eps.str() + ")"));
          }
        }
        if (star_) {
          TensorElement a = coproduct(star(x));
          TensorElement b = star_on_tensor(d);
          out.push_back(make_record(p + "star-coproduct." + gid, a == b, a.str(), b.str(), a == b ? "" : g));
        }
      }
      if (star_) {
        NCPoly xx = star(star(x));
        out.push_back(make_record(p + "star-involution." + gid, xx == x, xx.str(), x.str(), xx == x ? "" : g));
      }
    }
    return out;
  }

  /// Every derived rewrite rule x_hi * y = rhs is respected by the structure maps.
  std::vector<CheckRecord> relations_report() const {
    std::vector<CheckRecord> out;
    const std::string p = "relations." + name_ + ".";
    auto rels = a_->relations();
    for (const auto& rel : rels) {
      std::string rid = a_->gen(rel.hi.level).name + "." + a_->gen(rel.lo.level).name + (rel.lo.power < 0 ? "-inv" : "");
      std::string w = AlgebraMorphism::relation_str(*a_, rel);
      NCPoly rhs(a_, rel.rhs);
      if (delta_) {
        const auto& d = *delta_;
        TensorElement l = d.apply_monomial(a_->letter_exponents(rel.hi.level, 1)) *
                          d.apply_monomial(a_->letter_exponents(rel.lo.level, rel.lo.power));
        TensorElement r = d.apply(rhs);
        out.push_back(make_record(p + "coproduct." + rid, l == r, l.str(), r.str(), l == r ? "" : w));
      }
      if (counit_) {
        Scalar l = counit_->letter(rel.hi) * counit_->letter(rel.lo);
        Scalar r = counit(rhs);
        out.push_back(make_record(p + "counit." + rid, l == r, l.str(), r.str(), l == r ? "" : w));
      }
      if (antipode_) {
        NCPoly l = antipode_->letter(rel.lo) * antipode_->letter(rel.hi);
        NCPoly r = antipode(rhs);
        out.push_back(make_record(p + "antipode." + rid, l == r, l.str(), r.str(), l == r ? "" : w));
      }
      if (star_) {
        NCPoly l = star_->letter(rel.lo) * star_->letter(rel.hi);
        NCPoly r = star(rhs);
        out.push_back(make_record(p + "star." + rid, l == r, l.str(), r.str(), l == r ? "" : w));
      }
    }
    return out;
  }

 private:
  template <class X>
  const X& need(const std::optional<X>& x, const char* what) const {
    if (!x) throw std::logic_error(name_ + ": no " + std::string(what) + " table");
    return *x;
  }

  std::string name_;
  TowerPtr a_;
  std::optional<AlgebraMorphism> delta_;
  std::optional<Extender<Scalar>> counit_;
  std::optional<Extender<NCPoly>> antipode_;
  std::optional<Extender<NCPoly>> star_;
};

}  // namespace e2v
