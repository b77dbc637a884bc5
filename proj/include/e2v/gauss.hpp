#pragma once

// Gaussian rationals: a + b*i with a, b arbitrary-precision rationals.

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace e2v {

/// Raised when a scalar division by zero is attempted.
struct DegenerateScalar : std::domain_error {
  using std::domain_error::domain_error;
};

class GaussRational {
 public:
  GaussRational() : re_(0), im_(0) {}
  GaussRational(long n) : re_(n), im_(0) {}  // NOLINT: implicit from integers
  GaussRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRational i() { return {0, 1}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRational conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussRational operator-() const { return {-re_, -im_}; }
  GaussRational& operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) {
    if (o.is_zero()) throw DegenerateScalar("division by zero");
    mpq_class n = o.norm();
    GaussRational c = o.conj();
    *this *= c;
    re_ /= n;
    im_ /= n;
    return *this;
  }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Total order (real part, then imaginary part); used only for canonical ordering.
  friend std::strong_ordering operator<=>(const GaussRational& a, const GaussRational& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Sign used for printing: the sign of the real part, or of the imaginary part if purely imaginary.
  int display_sign() const { return sgn(re_) != 0 ? sgn(re_) : sgn(im_); }

  /// Text in the expression grammar: "3", "-3/4", "2*i", "(1+2*i)".
  std::string str() const {
    if (is_zero()) return "0";
    if (sgn(im_) == 0) return re_.get_str();
    auto imag = [](const mpq_class& q) -> std::string {
      if (q == 1) return "i";
      if (q == -1) return "-i";
      return q.get_str() + "*i";
    };
    if (sgn(re_) == 0) return imag(im_);
    std::string s = "(" + re_.get_str();
    std::string t = imag(im_);
    if (t[0] == '-')
      s += t;
    else
      s += "+" + t;
    return s + ")";
  }

 private:
  mpq_class re_;
  mpq_class im_;
};

}  // namespace e2v
