#include "prymsv/modforms.hpp"

#include <algorithm>

#include "json.hpp"
#include "prymsv/euler.hpp"

namespace prymsv {

namespace {

void require_S_domain(std::int64_t D) {
  Discriminant disc(D);
  if (disc.mod8() != 1)
    fail(ErrorCode::UnsupportedResidue, "S_D needs D = 1 (mod 8), got " + std::to_string(D));
  if (disc.is_square())
    fail(ErrorCode::SquareDiscriminant, "square discriminant " + std::to_string(D));
}

template <class F>
Rational signed_sum(std::int64_t D, F&& weight) {
  std::int64_t total = 0;
  for (std::int64_t e = 1; e * e < D; e += 2) total += psi(e) * e * weight(e);
  return Rational(total);
}

nlohmann::ordered_json violations_json(const std::vector<Violation>& vs) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : vs) arr.push_back({{"n", v.n}, {"detail", v.detail}});
  return arr;
}

}  // namespace

QSeries::QSeries(std::int64_t N) : N_(N) {
  if (N < 0) fail(ErrorCode::InvalidArgument, "truncation must be non-negative");
}

Rational QSeries::coeff(std::int64_t n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? Rational(0) : it->second;
}

void QSeries::set(std::int64_t n, const Rational& c) {
  if (n < 0 || n > N_) fail(ErrorCode::InvalidArgument, "exponent outside truncation");
  if (c == 0)
    terms_.erase(n);
  else
    terms_[n] = c;
}

void QSeries::add(std::int64_t n, const Rational& c) { set(n, coeff(n) + c); }

QSeries operator*(const QSeries& x, const QSeries& y) {
  QSeries out(std::min(x.N_, y.N_));
  for (const auto& [i, a] : x.terms_) {
    if (i > out.N_) break;
    for (const auto& [j, b] : y.terms_) {
      if (i + j > out.N_) break;
      out.add(i + j, a * b);
    }
  }
  return out;
}

QSeries operator+(const QSeries& x, const QSeries& y) {
  QSeries out(std::min(x.N_, y.N_));
  for (const auto* s : {&x, &y})
    for (const auto& [n, c] : s->terms_)
      if (n <= out.N_) out.add(n, c);
  return out;
}

int psi(std::int64_t n) {
  std::int64_t r = ((n % 4) + 4) % 4;
  if (r == 1) return 1;
  if (r == 3) return -1;
  return 0;
}

QSeries theta_psi(std::int64_t N) {
  QSeries s(N);
  for (std::int64_t k = 1; k * k <= N; k += 2) s.set(k * k, Rational(psi(k) * k));
  return s;
}

QSeries theta_prime_scaled(std::int64_t N) {
  QSeries s(N);
  for (std::int64_t k = 1; k * k <= N; k += 2)
    s.set(k * k, make_rational(psi(k) * k * k * k, 24));
  return s;
}

QSeries g2_8(std::int64_t N) {
  QSeries s(N);
  s.set(0, make_rational(-1, 24));
  for (std::int64_t k = 1; 8 * k <= N; ++k) s.set(8 * k, Rational(sigma1(k)));
  return s;
}

QSeries f_coeffs(std::int64_t N) { return g2_8(N) * theta_psi(N) + theta_prime_scaled(N); }

Rational c_n_closed(std::int64_t n) {
  if (n <= 0 || n % 8 != 1) return Rational(0);
  Rational total(0);
  std::int64_t r = isqrt(n);
  for (std::int64_t e = 1; e * e < n; e += 2)
    total += psi(e) * e * sigma1((n - e * e) / 8);
  if (r * r == n) total += make_rational(psi(r) * (r * r * r - r), 24);
  return total;
}

VanishingReport verify_vanishing(std::int64_t N) {
  if (N < 1) fail(ErrorCode::InvalidArgument, "N must be at least 1");
  VanishingReport rep;
  rep.N = N;
  QSeries f = f_coeffs(N);
  for (std::int64_t n = 0; n <= N; ++n) {
    Rational c = f.coeff(n);
    Rational closed = c_n_closed(n);
    if (c != 0 || closed != c)
      rep.violations.push_back(
          {n, "coefficient " + to_string(c) + ", closed form " + to_string(closed)});
  }
  return rep;
}

Rational S_D(std::int64_t D) {
  require_S_domain(D);
  return signed_sum(D, [D](std::int64_t e) { return m_D(D, e); });
}

Rational S_D_sigma(std::int64_t D) {
  require_S_domain(D);
  return signed_sum(D, [D](std::int64_t e) { return sigma1((D - e * e) / 8); });
}

RecursionReport verify_S_recursion(std::int64_t D) {
  require_S_domain(D);
  RecursionReport rep;
  rep.D = D;
  rep.lhs = 0;
  for (std::int64_t r = 1; r * r <= D; ++r)
    if (D % (r * r) == 0) rep.lhs += psi(r) * r * S_D(D / (r * r));
  rep.rhs = S_D_sigma(D);
  return rep;
}

IdentityReport verify_identity(std::int64_t dmax) {
  IdentityReport rep;
  rep.dmax = dmax;
  for (std::int64_t D = 17; D <= dmax; D += 8) {
    if (is_perfect_square(D)) continue;
    ++rep.checked;
    Rational s = S_D(D);
    if (s != 0) rep.violations.push_back({D, "S_D = " + to_string(s)});
    Rational sig = S_D_sigma(D);
    if (sig != 0) rep.violations.push_back({D, "sigma_1 sum = " + to_string(sig)});
    auto rec = verify_S_recursion(D);
    if (!rec.ok())
      rep.violations.push_back(
          {D, "recursion " + to_string(rec.lhs) + " != " + to_string(rec.rhs)});
    if (is_12_primitive(D) && s != sig)
      rep.violations.push_back({D, "primitive shortcut mismatch"});
  }
  return rep;
}

std::string to_json(const VanishingReport& r) {
  nlohmann::ordered_json j;
  j["N"] = r.N;
  j["violations"] = violations_json(r.violations);
  return j.dump();
}

std::string to_json(const IdentityReport& r) {
  nlohmann::ordered_json j;
  j["dmax"] = r.dmax;
  j["checked"] = r.checked;
  j["violations"] = violations_json(r.violations);
  return j.dump();
}

}  // namespace prymsv
