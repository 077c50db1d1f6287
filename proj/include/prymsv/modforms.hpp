/// @file modforms.hpp
/// @brief Exact q-expansions around the weight 5/2 vanishing identity.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "prymsv/exactq.hpp"

namespace prymsv {

/// Truncated q-series with sparse exact coefficients.
class QSeries {
 public:
  explicit QSeries(std::int64_t N);

  std::int64_t truncation() const noexcept { return N_; }
  Rational coeff(std::int64_t n) const;
  void set(std::int64_t n, const Rational& c);
  void add(std::int64_t n, const Rational& c);
  const std::map<std::int64_t, Rational>& terms() const noexcept { return terms_; }

  /// Cauchy product truncated at min of the two truncations.
  friend QSeries operator*(const QSeries& x, const QSeries& y);
  friend QSeries operator+(const QSeries& x, const QSeries& y);

 private:
  std::int64_t N_;
  std::map<std::int64_t, Rational> terms_;
};

/// Dirichlet character of conductor 4.
int psi(std::int64_t n);

QSeries theta_psi(std::int64_t N);
/// (1/(48 pi i)) theta_psi'; coefficient psi(s) s^3/24 at n = s^2.
QSeries theta_prime_scaled(std::int64_t N);
/// G_2(8z) = -1/24 + sum sigma_1(k) q^{8k}.
QSeries g2_8(std::int64_t N);

QSeries f_coeffs(std::int64_t N);

Rational c_n_closed(std::int64_t n);

struct Violation {
  std::int64_t n = 0;
  std::string detail;
};

struct VanishingReport {
  std::int64_t N = 0;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

VanishingReport verify_vanishing(std::int64_t N);

/// sum over odd 0 < e < sqrt D of (-1)^((e-1)/2) e m_D(e).
Rational S_D(std::int64_t D);
/// The same sum with sigma_1((D-e^2)/8) in place of m_D(e).
Rational S_D_sigma(std::int64_t D);

struct RecursionReport {
  std::int64_t D = 0;
  Rational lhs;
  Rational rhs;
  bool ok() const { return lhs == rhs; }
};

/// sum_{r^2 | D} (-1)^((r-1)/2) r S_{D/r^2} against S_D_sigma(D).
RecursionReport verify_S_recursion(std::int64_t D);

struct IdentityReport {
  std::int64_t dmax = 0;
  std::int64_t checked = 0;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Every non-square D = 1 (mod 8) with D <= dmax.
IdentityReport verify_identity(std::int64_t dmax);

std::string to_json(const VanishingReport& r);
std::string to_json(const IdentityReport& r);

}  // namespace prymsv
