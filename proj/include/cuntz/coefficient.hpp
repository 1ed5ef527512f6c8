#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

namespace cuntz {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact Gaussian rational re + im*i. Both parts are kept in lowest terms by
/// the underlying rational type.
class Coefficient {
public:
  Coefficient() = default;
  Coefficient(long long value) : re_(value) {} // NOLINT(google-explicit-constructor)
  explicit Coefficient(Rational re, Rational im = Rational(0)) : re_(std::move(re)), im_(std::move(im)) {}

  static Coefficient i() { return Coefficient(Rational(0), Rational(1)); }

  const Rational& real() const noexcept { return re_; }
  const Rational& imag() const noexcept { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  bool is_one() const { return im_.is_zero() && re_ == 1; }

  Coefficient conj() const { return Coefficient(re_, -im_); }

  Coefficient operator-() const { return Coefficient(-re_, -im_); }

  Coefficient& operator+=(const Coefficient& other) {
    re_ += other.re_;
    im_ += other.im_;
    return *this;
  }
  Coefficient& operator-=(const Coefficient& other) {
    re_ -= other.re_;
    im_ -= other.im_;
    return *this;
  }
  Coefficient& operator*=(const Coefficient& other) {
    Rational re = re_ * other.re_ - im_ * other.im_;
    Rational im = re_ * other.im_ + im_ * other.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }

  friend bool operator==(const Coefficient& a, const Coefficient& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }

  /// Renders in the expression syntax: "3/2", "-i", "2i", "(1-3/2i)".
  std::string to_string() const {
    if (im_.is_zero())
      return re_.str();
    std::string imag_part;
    if (im_ == 1)
      imag_part = "i";
    else if (im_ == -1)
      imag_part = "-i";
    else
      imag_part = im_.str() + "i";
    if (re_.is_zero())
      return imag_part;
    std::string out = "(" + re_.str();
    if (im_ > 0)
      out += "+";
    return out + imag_part + ")";
  }

private:
  Rational re_{0};
  Rational im_{0};
};

} // namespace cuntz
