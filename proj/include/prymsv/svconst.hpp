/// @file svconst.hpp
/// @brief b_D, volumes and Siegel-Veech constants.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prymsv/euler.hpp"

namespace prymsv {

enum class Component { Whole, Plus, Minus };

const char* component_name(Component c) noexcept;

struct SVResult {
  std::int64_t D = 0;
  Component component = Component::Whole;
  std::optional<int> b_D;
  Rational volume_pi2;  ///< mu = volume_pi2 * pi^2
  Rational c1, c2, c3;
};

int b_D(std::int64_t D);

/// Coefficient of pi^2, evaluated verbatim (negative for negative inputs).
Rational volume(std::int64_t D, const EulerTable& table);
Rational volume_pm(std::int64_t D, const EulerTable& table);

Rational abs_volume(const Rational& v);

/// mu(X_D) = 24 mu(P Omega E_D(2,2)^odd).
Rational volume_XD(const Rational& v);

/// One result for 4 | D, two (plus, minus) for D = 1 (mod 8).
std::vector<SVResult> sv_constants(std::int64_t D, const EulerTable& table);

/// Constants from explicit Euler characteristics.
/// For 4 | D chi2_sum is chi(W_D(2)) + b_D chi(W_{D/4}(2)); otherwise chi(W_D(2)).
struct SVTriple {
  Rational c1, c2, c3;
};
SVTriple sv_from_chi(bool odd, const Rational& chi4, const Rational& chi2_sum,
                     const Rational& chi03);

std::string to_json(const SVResult& r);

enum class ConjectureStatus { Holds, Fails, Skipped };

struct ConjectureRow {
  std::int64_t D = 0;
  ConjectureStatus status = ConjectureStatus::Skipped;
  std::string reason;
  std::optional<SVTriple> constants;
};

struct ConjectureReport {
  std::vector<ConjectureRow> rows;
  int holds = 0;
  int fails = 0;
  int skipped = 0;
};

/// Every D = 0,1 (mod 4) in [5, dmax].
ConjectureReport check_conjecture(std::int64_t dmin, std::int64_t dmax,
                                  const EulerTable& table);

const Rational& conjectured_c1();
const Rational& conjectured_c2();
const Rational& conjectured_c3();

}  // namespace prymsv
