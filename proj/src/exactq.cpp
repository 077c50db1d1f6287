#include "prymsv/exactq.hpp"

#include <cctype>
#include <cmath>

namespace prymsv {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!is_digits(s))
    fail(ErrorCode::ParseError, "not a rational: '" + std::string(whole) + "'");
  Integer v{std::string(s)};
  return neg ? Integer(-v) : v;
}

void require_same(const Discriminant& x, const Discriminant& y) {
  if (!(x == y))
    fail(ErrorCode::MismatchedField,
         "discriminants differ: " + std::to_string(x.value()) + " vs " +
             std::to_string(y.value()));
}

}  // namespace

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  return Rational(Integer(num), Integer(den));
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!is_digits(den_text))
    fail(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  Integer den(std::string{den_text});
  if (den == 0)
    fail(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  Integer num = boost::multiprecision::numerator(r);
  Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "isqrt of negative number");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_perfect_square(std::int64_t n) {
  if (n < 0) return false;
  std::int64_t r = isqrt(n);
  return r * r == n;
}

Discriminant::Discriminant(std::int64_t D) : D_(D), square_(false) {
  if (D <= 0 || (D % 4 != 0 && D % 4 != 1))
    fail(ErrorCode::InvalidDiscriminant,
         "not a discriminant: " + std::to_string(D));
  square_ = is_perfect_square(D);
}

Rational QuadNum::norm() const { return p_ * p_ - q_ * q_ * D_.value(); }

QuadNum QuadNum::inverse() const {
  Rational n = norm();
  if (n == 0) fail(ErrorCode::InvalidArgument, "inverse of a zero divisor");
  return QuadNum(p_ / n, -q_ / n, D_);
}

QuadNum& QuadNum::operator+=(const QuadNum& y) {
  require_same(D_, y.D_);
  p_ += y.p_;
  q_ += y.q_;
  return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& y) {
  require_same(D_, y.D_);
  p_ -= y.p_;
  q_ -= y.q_;
  return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& y) {
  require_same(D_, y.D_);
  Rational p = p_ * y.p_ + q_ * y.q_ * D_.value();
  Rational q = p_ * y.q_ + q_ * y.p_;
  p_ = std::move(p);
  q_ = std::move(q);
  return *this;
}

QuadNum& QuadNum::operator*=(const Rational& s) {
  p_ *= s;
  q_ *= s;
  return *this;
}

bool operator==(const QuadNum& x, const QuadNum& y) {
  require_same(x.D_, y.D_);
  return x.p_ == y.p_ && x.q_ == y.q_;
}

QuadNum quad_add(const QuadNum& x, const QuadNum& y) { return x + y; }
QuadNum quad_mul(const QuadNum& x, const QuadNum& y) { return x * y; }
QuadNum quad_neg(const QuadNum& x) { return -x; }

QuadNum quad_from(const Rational& p, Discriminant D) { return QuadNum(p, 0, D); }

QuadNum lambda_of(Discriminant D, std::int64_t e) {
  return QuadNum(make_rational(e, 2), make_rational(1, 2), D);
}

int quad_sign(const QuadNum& x) {
  int sp = x.p().sign();
  int sq = x.q().sign();
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // opposite signs: compare p^2 with q^2 D
  Rational lhs = x.p() * x.p();
  Rational rhs = x.q() * x.q() * x.disc().value();
  if (lhs == rhs) return 0;
  return lhs > rhs ? sp : sq;
}

double to_double(const QuadNum& x) {
  return to_double(x.p()) +
         to_double(x.q()) * std::sqrt(static_cast<double>(x.disc().value()));
}

std::string to_string(const QuadNum& x) {
  return to_string(x.p()) + "+" + to_string(x.q()) + "*sqrt" +
         std::to_string(x.disc().value());
}

QuadComplex::QuadComplex(QuadNum re, QuadNum im)
    : re_(std::move(re)), im_(std::move(im)) {
  require_same(re_.disc(), im_.disc());
}

QuadComplex& QuadComplex::operator+=(const QuadComplex& y) {
  re_ += y.re_;
  im_ += y.im_;
  return *this;
}

QuadComplex& QuadComplex::operator-=(const QuadComplex& y) {
  re_ -= y.re_;
  im_ -= y.im_;
  return *this;
}

QuadComplex& QuadComplex::operator*=(const QuadComplex& y) {
  QuadNum re = re_ * y.re_ - im_ * y.im_;
  QuadNum im = re_ * y.im_ + im_ * y.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

QuadComplex& QuadComplex::operator*=(const QuadNum& s) {
  re_ *= s;
  im_ *= s;
  return *this;
}

std::string to_string(const QuadComplex& z) {
  return "(" + to_string(z.re()) + ")+i*(" + to_string(z.im()) + ")";
}

}  // namespace prymsv
