#pragma once

// Textual expressions:
//
//   expr   := ['-'] tterm (('+'|'-') tterm)*
//   tterm  := term ('(x)' term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' ['-'] int)?
//   atom   := ident | int | 'i' | '(' expr ')'
//
// A negative exponent needs a symbol base; '/' needs a nonzero constant divisor.

#include "e2v/tensor.hpp"

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace e2v {

struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(std::size_t off, const std::string& msg)
      : std::runtime_error("syntax error at offset " + std::to_string(off) + ": " + msg), offset(off) {}
};

struct ElaborationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Ast {
  enum class Kind { sum, product, power, tensor, symbol, literal, imag };
  Kind kind;
  std::size_t offset = 0;
  std::string text;                        // symbol name or integer digits
  int exponent = 1;                        // power
  std::vector<std::shared_ptr<Ast>> kids;
  std::vector<bool> flags;                 // sum: negated child; product: divided child

  /// Structural rendering, e.g. Sum[Product[vb,nb],-Product[v,n]].
  std::string describe() const {
    auto list = [&](const char* head, const char* neg) {
      std::string s = std::string(head) + "[";
      for (std::size_t i = 0; i < kids.size(); ++i) {
        if (i) s += ",";
        if (!flags.empty() && flags[i]) s += neg;
        s += kids[i]->describe();
      }
      return s + "]";
    };
    switch (kind) {
      case Kind::sum: return list("Sum", "-");
      case Kind::product: return list("Product", "/");
      case Kind::tensor: return list("TensorProduct", "");
      case Kind::power: return "Power[" + kids[0]->describe() + "," + std::to_string(exponent) + "]";
      case Kind::symbol:
      case Kind::literal: return text;
      case Kind::imag: return "i";
    }
    return "?";
  }
};

using AstPtr = std::shared_ptr<Ast>;

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  AstPtr parse() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(pos_, "empty expression");
    AstPtr e = expr();
    skip();
    if (pos_ < s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_tensor() const { return s_.substr(pos_, 3) == "(x)"; }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c && !(c == '(' && at_tensor());
  }

  AstPtr node(Ast::Kind k, std::size_t off) {
    auto a = std::make_shared<Ast>();
    a->kind = k;
    a->offset = off;
    return a;
  }

  AstPtr expr() {
    skip();
    auto sum = node(Ast::Kind::sum, pos_);
    bool neg = false;
    if (peek('-')) {
      ++pos_;
      neg = true;
    }
    sum->kids.push_back(tterm());
    sum->flags.push_back(neg);
    while (true) {
      if (peek('+')) {
        ++pos_;
        neg = false;
      } else if (peek('-')) {
        ++pos_;
        neg = true;
      } else {
        break;
      }
      sum->kids.push_back(tterm());
      sum->flags.push_back(neg);
    }
    if (sum->kids.size() == 1 && !sum->flags[0]) return sum->kids[0];
    return sum;
  }

  AstPtr tterm() {
    skip();
    auto t = node(Ast::Kind::tensor, pos_);
    t->kids.push_back(term());
    while (true) {
      skip();
      if (!at_tensor()) break;
      pos_ += 3;
      t->kids.push_back(term());
    }
    if (t->kids.size() == 1) return t->kids[0];
    return t;
  }

  AstPtr term() {
    skip();
    auto p = node(Ast::Kind::product, pos_);
    p->kids.push_back(factor());
    p->flags.push_back(false);
    while (true) {
      bool div;
      if (peek('*'))
        div = false;
      else if (peek('/'))
        div = true;
      else
        break;
      ++pos_;
      p->kids.push_back(factor());
      p->flags.push_back(div);
    }
    if (p->kids.size() == 1) return p->kids[0];
    return p;
  }

  AstPtr factor() {
    skip();
    std::size_t off = pos_;
    AstPtr a = atom();
    if (!peek('^')) return a;
    ++pos_;
    skip();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    skip();
    std::size_t ioff = pos_;
    std::string digits;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
    if (digits.empty()) throw ParseError(ioff, "expected an integer exponent");
    if (digits.size() > 6) throw ParseError(ioff, "exponent too large");
    if (neg && a->kind != Ast::Kind::symbol) throw ParseError(ioff, "negative exponent needs a symbol base");
    auto p = node(Ast::Kind::power, off);
    p->exponent = std::stoi(digits) * (neg ? -1 : 1);
    p->kids.push_back(a);
    return p;
  }

  AstPtr atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(pos_, "unexpected end of input");
    char c = s_[pos_];
    std::size_t off = pos_;
    if (c == '(' && !at_tensor()) {
      ++pos_;
      AstPtr e = expr();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') throw ParseError(pos_, "expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto a = node(Ast::Kind::literal, off);
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) a->text += s_[pos_++];
      return a;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        id += s_[pos_++];
      if (id == "i") return node(Ast::Kind::imag, off);
      auto a = node(Ast::Kind::symbol, off);
      a->text = id;
      return a;
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline AstPtr parse_expr(std::string_view text) { return detail::Parser(text).parse(); }

namespace detail {

inline std::string at(const Ast& a) { return " (offset " + std::to_string(a.offset) + ")"; }

class Elaborator {
 public:
  explicit Elaborator(std::vector<TowerPtr> legs) : legs_(std::move(legs)) {
    for (const auto& l : legs_) params_.merge(l->parameters());
  }

  TensorElement top(const Ast& a) {
    if (legs_.size() == 1) return TensorElement::from(leg(a, 0));
    return tensor(a);
  }

 private:
  bool scalar_only(const Ast& a) const {
    switch (a.kind) {
      case Ast::Kind::literal:
      case Ast::Kind::imag: return true;
      case Ast::Kind::symbol: return params_.contains(a.text);
      case Ast::Kind::tensor: return false;
      default:
        for (const auto& k : a.kids)
          if (!scalar_only(*k)) return false;
        return true;
    }
  }

  Scalar scalar(const Ast& a) {
    switch (a.kind) {
      case Ast::Kind::literal: return Scalar(GaussRational(mpq_class(a.text)));
      case Ast::Kind::imag: return Scalar::i();
      case Ast::Kind::symbol:
        if (!params_.contains(a.text)) throw ElaborationError("unknown symbol '" + a.text + "'" + at(a));
        return Scalar::param(a.text);
      case Ast::Kind::sum: {
        Scalar s;
        for (std::size_t i = 0; i < a.kids.size(); ++i) s += a.flags[i] ? -scalar(*a.kids[i]) : scalar(*a.kids[i]);
        return s;
      }
      case Ast::Kind::product: {
        Scalar s(1);
        for (std::size_t i = 0; i < a.kids.size(); ++i) {
          Scalar f = scalar(*a.kids[i]);
          if (a.flags[i]) {
            if (f.is_zero()) throw ElaborationError("division by zero" + at(*a.kids[i]));
            s /= f;
          } else {
            s *= f;
          }
        }
        return s;
      }
      case Ast::Kind::power: {
        Scalar b = scalar(*a.kids[0]);
        if (a.exponent < 0 && b.is_zero()) throw ElaborationError("negative power of zero" + at(a));
        return b.pow(a.exponent);
      }
      case Ast::Kind::tensor: break;
    }
    throw ElaborationError("tensor where a scalar was expected" + at(a));
  }

  NCPoly leg(const Ast& a, std::size_t i) {
    const TowerPtr& t = legs_[i];
    switch (a.kind) {
      case Ast::Kind::literal:
      case Ast::Kind::imag: return NCPoly::constant(t, scalar(a));
      case Ast::Kind::symbol: return symbol(a, t, 1);
      case Ast::Kind::sum: {
        NCPoly s(t);
        for (std::size_t k = 0; k < a.kids.size(); ++k) {
          if (a.flags[k])
            s -= leg(*a.kids[k], i);
          else
            s += leg(*a.kids[k], i);
        }
        return s;
      }
      case Ast::Kind::product: {
        NCPoly p = NCPoly::constant(t, Scalar(1));
        for (std::size_t k = 0; k < a.kids.size(); ++k) {
          NCPoly f = leg(*a.kids[k], i);
          if (a.flags[k]) {
            if (!f.is_constant() || f.is_zero())
              throw ElaborationError("divisor must be a nonzero scalar" + at(*a.kids[k]));
            p = f.constant_value().inverse() * p;
          } else {
            p = p * f;
          }
        }
        return p;
      }
      case Ast::Kind::power: {
        const Ast& b = *a.kids[0];
        if (b.kind == Ast::Kind::symbol) return symbol(b, t, a.exponent);
        if (a.exponent < 0) throw ElaborationError("negative power of a compound base" + at(a));
        return leg(b, i).pow(static_cast<unsigned>(a.exponent));
      }
      case Ast::Kind::tensor: break;
    }
    throw ElaborationError("tensor product inside a tensor leg" + at(a));
  }

  NCPoly symbol(const Ast& a, const TowerPtr& t, int e) {
    const std::string& n = a.text;
    if (auto l = t->level_of(n)) {
      if (e < 0 && !(*l == 0 && t->base_invertible()))
        throw ElaborationError("negative power of non-invertible generator '" + n + "'" + at(a));
      return NCPoly::monomial(t, t->letter_exponents(*l, e));
    }
    // barred alias of the invertible base: vb = v^-1
    if (n.size() > 1 && n.back() == 'b' && t->base_invertible() && t->gen(0).name == n.substr(0, n.size() - 1))
      return NCPoly::monomial(t, t->letter_exponents(0, -e));
    if (params_.contains(n)) return NCPoly::constant(t, Scalar::param(n).pow(e));
    throw ElaborationError("unknown symbol '" + n + "'" + at(a));
  }

  TensorElement tensor(const Ast& a) {
    const std::size_t k = legs_.size();
    if (scalar_only(a)) return TensorElement::unit(legs_, scalar(a));
    switch (a.kind) {
      case Ast::Kind::tensor: {
        if (a.kids.size() != k)
          throw ElaborationError("expected " + std::to_string(k) + " tensor legs, found " +
                                 std::to_string(a.kids.size()) + at(a));
        std::vector<NCPoly> parts;
        for (std::size_t i = 0; i < k; ++i) parts.push_back(leg(*a.kids[i], i));
        return TensorElement::product_of(parts);
      }
      case Ast::Kind::sum: {
        TensorElement s(legs_);
        for (std::size_t i = 0; i < a.kids.size(); ++i) {
          if (a.flags[i])
            s -= tensor(*a.kids[i]);
          else
            s += tensor(*a.kids[i]);
        }
        return s;
      }
      case Ast::Kind::product: {
        TensorElement p = TensorElement::unit(legs_);
        for (std::size_t i = 0; i < a.kids.size(); ++i) {
          if (a.flags[i]) {
            if (!scalar_only(*a.kids[i])) throw ElaborationError("divisor must be a nonzero scalar" + at(*a.kids[i]));
            Scalar d = scalar(*a.kids[i]);
            if (d.is_zero()) throw ElaborationError("division by zero" + at(*a.kids[i]));
            p = d.inverse() * p;
          } else {
            p = p * tensor(*a.kids[i]);
          }
        }
        return p;
      }
      case Ast::Kind::power: {
        if (a.exponent < 0) throw ElaborationError("negative power of a tensor" + at(a));
        TensorElement b = tensor(*a.kids[0]);
        TensorElement p = TensorElement::unit(legs_);
        for (int j = 0; j < a.exponent; ++j) p = p * b;
        return p;
      }
      default: break;
    }
    throw ElaborationError("expected a tensor with " + std::to_string(k) + " legs" + at(a));
  }

  std::vector<TowerPtr> legs_;
  ParameterSet params_;
};

}  // namespace detail

/// Elaborates into the tensor product of the given algebras (one leg: an element).
inline TensorElement elaborate_expr(const Ast& ast, const std::vector<TowerPtr>& legs) {
  if (legs.empty()) throw std::invalid_argument("no target algebra");
  return detail::Elaborator(legs).top(ast);
}

inline NCPoly parse_element(std::string_view text, const TowerPtr& t) {
  return elaborate_expr(*parse_expr(text), {t}).as_poly();
}

inline TensorElement parse_tensor(std::string_view text, const std::vector<TowerPtr>& legs) {
  return elaborate_expr(*parse_expr(text), legs);
}

}  // namespace e2v
