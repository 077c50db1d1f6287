/// @file euler.hpp
/// @brief Divisor sums, torus projection degrees and Euler characteristics.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prymsv/exactq.hpp"

namespace prymsv {

std::int64_t sigma1(std::int64_t n);

/// Index of Gamma_0(m) in SL(2,Z).
std::int64_t c_index(std::int64_t m);

/// Number of points of P^1(Z/m), by enumeration.
std::int64_t p1_count(std::int64_t m);

/// n = f^2 * q with q squarefree.
std::pair<std::int64_t, std::int64_t> squarefree_decompose(std::int64_t n);

std::int64_t m_D(std::int64_t D, std::int64_t e);
std::int64_t m_D_bruteforce(std::int64_t D, std::int64_t e);

/// No factorization D = f^2 D' with f > 1 and D' = 0,1,4 (mod 8).
bool is_12_primitive(std::int64_t D);

Rational chi_W03(std::int64_t D);
Rational chi_W03_pm(std::int64_t D);

enum class Stratum { W4, W2, W03 };

const char* stratum_name(Stratum s) noexcept;

struct EulerRow {
  std::optional<Rational> chi_w4;
  std::optional<Rational> chi_w2;
  std::optional<Rational> chi_w03;
};

class EulerTable {
 public:
  static EulerTable builtin();

  /// Inserts or replaces a row; every present value must be negative.
  void set(std::int64_t D, EulerRow row);
  bool contains(std::int64_t D) const { return rows_.count(D) != 0; }
  const std::map<std::int64_t, EulerRow>& rows() const noexcept { return rows_; }

  /// Throws MissingTableEntry when the row or the value is absent.
  Rational lookup(std::int64_t D, Stratum s) const;
  std::optional<Rational> find(std::int64_t D, Stratum s) const;

 private:
  std::map<std::int64_t, EulerRow> rows_;
};

/// Parses "D,chi_w4,chi_w2,chi_w03" rows; "-" marks an absent entry.
/// Rows are merged over the built-in table; overrides are reported on warn.
EulerTable load_table(const std::string& path, std::ostream& warn);
EulerTable parse_table(std::istream& in, std::ostream& warn,
                       EulerTable base = EulerTable::builtin());

Rational lookup_chi(const EulerTable& table, std::int64_t D, Stratum s);

struct ChiRow {
  std::int64_t D = 0;
  Rational computed;
  std::optional<Rational> table;
  std::optional<bool> match;
};

/// Every non-square D in [dmin, dmax] with D > 4 and D = 0,1,4 (mod 8).
std::vector<ChiRow> chi_report(std::int64_t dmin, std::int64_t dmax, const EulerTable& table);

}  // namespace prymsv
