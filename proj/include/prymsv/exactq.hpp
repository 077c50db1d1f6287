/// @file exactq.hpp
/// @brief Exact rationals and arithmetic in Q(sqrt D).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "prymsv/error.hpp"

namespace prymsv {

using Integer = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Accepts "p", "p/q" and a leading sign; the result is normalized.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

std::int64_t isqrt(std::int64_t n);
bool is_perfect_square(std::int64_t n);

/// Discriminant of a real quadratic order: D > 0 and D = 0,1 (mod 4).
class Discriminant {
 public:
  explicit Discriminant(std::int64_t D);

  std::int64_t value() const noexcept { return D_; }
  bool is_square() const noexcept { return square_; }
  int mod8() const noexcept { return static_cast<int>(D_ % 8); }

  friend bool operator==(const Discriminant& x, const Discriminant& y) {
    return x.D_ == y.D_;
  }

 private:
  std::int64_t D_;
  bool square_;
};

/// p + q*sqrt(D); sqrt(D) stays formal even when D is a perfect square.
class QuadNum {
 public:
  explicit QuadNum(Discriminant D) : p_(0), q_(0), D_(D) {}
  QuadNum(Rational p, Rational q, Discriminant D)
      : p_(std::move(p)), q_(std::move(q)), D_(D) {}

  const Rational& p() const noexcept { return p_; }
  const Rational& q() const noexcept { return q_; }
  const Discriminant& disc() const noexcept { return D_; }

  bool is_zero() const { return p_ == 0 && q_ == 0; }
  QuadNum conj() const { return QuadNum(p_, -q_, D_); }
  Rational norm() const;
  QuadNum inverse() const;

  QuadNum& operator+=(const QuadNum& y);
  QuadNum& operator-=(const QuadNum& y);
  QuadNum& operator*=(const QuadNum& y);
  QuadNum& operator*=(const Rational& s);

  friend QuadNum operator+(QuadNum x, const QuadNum& y) { return x += y; }
  friend QuadNum operator-(QuadNum x, const QuadNum& y) { return x -= y; }
  friend QuadNum operator*(QuadNum x, const QuadNum& y) { return x *= y; }
  friend QuadNum operator*(QuadNum x, const Rational& s) { return x *= s; }
  friend QuadNum operator*(const Rational& s, QuadNum x) { return x *= s; }
  friend QuadNum operator/(const QuadNum& x, const QuadNum& y) {
    return x * y.inverse();
  }
  QuadNum operator-() const { return QuadNum(-p_, -q_, D_); }

  /// Componentwise; throws MismatchedField on different discriminants.
  friend bool operator==(const QuadNum& x, const QuadNum& y);

 private:
  Rational p_;
  Rational q_;
  Discriminant D_;
};

QuadNum quad_add(const QuadNum& x, const QuadNum& y);
QuadNum quad_mul(const QuadNum& x, const QuadNum& y);
QuadNum quad_neg(const QuadNum& x);

QuadNum quad_from(const Rational& p, Discriminant D);

/// (e + sqrt D)/2
QuadNum lambda_of(Discriminant D, std::int64_t e);

/// Exact sign of p + q*sqrt(D).
int quad_sign(const QuadNum& x);

double to_double(const QuadNum& x);

/// "p/q+r/s*sqrtD"
std::string to_string(const QuadNum& x);

/// re + i*im with both parts in Q(sqrt D).
class QuadComplex {
 public:
  explicit QuadComplex(Discriminant D) : re_(D), im_(D) {}
  QuadComplex(QuadNum re, QuadNum im);

  const QuadNum& re() const noexcept { return re_; }
  const QuadNum& im() const noexcept { return im_; }

  QuadComplex& operator+=(const QuadComplex& y);
  QuadComplex& operator-=(const QuadComplex& y);
  QuadComplex& operator*=(const QuadComplex& y);
  QuadComplex& operator*=(const QuadNum& s);

  friend QuadComplex operator+(QuadComplex x, const QuadComplex& y) { return x += y; }
  friend QuadComplex operator-(QuadComplex x, const QuadComplex& y) { return x -= y; }
  friend QuadComplex operator*(QuadComplex x, const QuadComplex& y) { return x *= y; }
  friend QuadComplex operator*(QuadComplex x, const QuadNum& s) { return x *= s; }
  friend QuadComplex operator*(const QuadNum& s, QuadComplex x) { return x *= s; }

  friend bool operator==(const QuadComplex& x, const QuadComplex& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }

 private:
  QuadNum re_;
  QuadNum im_;
};

std::string to_string(const QuadComplex& z);

}  // namespace prymsv
