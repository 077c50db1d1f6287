#include "prymsv/svconst.hpp"

#include "json.hpp"

namespace prymsv {

namespace {

void require_volume_domain(std::int64_t D) {
  Discriminant disc(D);
  if (disc.is_square())
    fail(ErrorCode::SquareDiscriminant, "square discriminant " + std::to_string(D));
  if (D <= 4) fail(ErrorCode::InvalidDiscriminant, "discriminant must exceed 4");
}

Rational chi2_sum(std::int64_t D, const EulerTable& table) {
  Rational s = table.lookup(D, Stratum::W2);
  int b = b_D(D);
  if (b != 0) s += b * table.lookup(D / 4, Stratum::W2);
  return s;
}

}  // namespace

const char* component_name(Component c) noexcept {
  switch (c) {
    case Component::Whole: return "whole";
    case Component::Plus: return "plus";
    case Component::Minus: return "minus";
  }
  return "?";
}

int b_D(std::int64_t D) {
  if (D % 4 != 0) fail(ErrorCode::NotDivisibleBy4, "b_D needs 4 | D, got " + std::to_string(D));
  std::int64_t q = D / 4;
  if (q % 4 == 2 || q % 4 == 3) return 0;
  if (q % 4 == 0) return 4;
  return q % 8 == 1 ? 3 : 5;
}

Rational volume(std::int64_t D, const EulerTable& table) {
  require_volume_domain(D);
  if (D % 4 != 0) fail(ErrorCode::UnsupportedResidue, "volume needs D = 0,4 (mod 8)");
  return (chi2_sum(D, table) + 9 * chi_W03(D)) / 36;
}

Rational volume_pm(std::int64_t D, const EulerTable& table) {
  require_volume_domain(D);
  if (D % 8 != 1) fail(ErrorCode::UnsupportedResidue, "volume_pm needs D = 1 (mod 8)");
  return (2 * table.lookup(D, Stratum::W2) + 9 * chi_W03(D)) / 72;
}

Rational abs_volume(const Rational& v) { return v < 0 ? Rational(-v) : v; }

Rational volume_XD(const Rational& v) { return 24 * v; }

SVTriple sv_from_chi(bool odd, const Rational& chi4, const Rational& chi2s,
                     const Rational& chi03) {
  Rational two = odd ? Rational(2 * chi2s) : chi2s;
  Rational delta = two + 9 * chi03;
  if (delta == 0) fail(ErrorCode::Internal, "vanishing denominator in Siegel-Veech formula");
  return {15 * chi4 / delta, 9 * two / delta, 3 * chi03 / delta};
}

std::vector<SVResult> sv_constants(std::int64_t D, const EulerTable& table) {
  Discriminant disc(D);
  if (D <= 9 || disc.is_square() || disc.mod8() == 5)
    fail(ErrorCode::OutsideTheoremHypotheses,
         "D = " + std::to_string(D) + " is outside D > 9, non-square, D = 0,1,4 (mod 8)");
  Rational chi4 = table.lookup(D, Stratum::W4);
  Rational chi03 = chi_W03(D);
  std::vector<SVResult> out;
  if (D % 4 == 0) {
    SVTriple c = sv_from_chi(false, chi4, chi2_sum(D, table), chi03);
    out.push_back({D, Component::Whole, b_D(D), volume(D, table), c.c1, c.c2, c.c3});
  } else {
    SVTriple c = sv_from_chi(true, chi4, table.lookup(D, Stratum::W2), chi03);
    Rational v = volume_pm(D, table);
    for (Component comp : {Component::Plus, Component::Minus})
      out.push_back({D, comp, std::nullopt, v, c.c1, c.c2, c.c3});
  }
  for (const auto& r : out)
    if (r.c1 <= 0 || r.c2 <= 0 || r.c3 <= 0)
      fail(ErrorCode::Internal, "non-positive Siegel-Veech constant at D = " + std::to_string(D));
  return out;
}

std::string to_json(const SVResult& r) {
  nlohmann::ordered_json j;
  j["D"] = r.D;
  j["component"] = component_name(r.component);
  j["c1"] = to_string(r.c1);
  j["c2"] = to_string(r.c2);
  j["c3"] = to_string(r.c3);
  j["volume_pi2"] = to_string(r.volume_pi2);
  j["volume_pi2_abs"] = to_string(abs_volume(r.volume_pi2));
  j["b_D"] = r.b_D ? nlohmann::ordered_json(*r.b_D) : nlohmann::ordered_json(nullptr);
  return j.dump();
}

const Rational& conjectured_c1() {
  static const Rational v = make_rational(25, 9);
  return v;
}

const Rational& conjectured_c2() {
  static const Rational v = make_rational(3);
  return v;
}

const Rational& conjectured_c3() {
  static const Rational v = make_rational(2, 9);
  return v;
}

ConjectureReport check_conjecture(std::int64_t dmin, std::int64_t dmax,
                                  const EulerTable& table) {
  ConjectureReport rep;
  for (std::int64_t D = std::max<std::int64_t>(dmin, 5); D <= dmax; ++D) {
    if (D % 4 != 0 && D % 4 != 1) continue;
    ConjectureRow row;
    row.D = D;
    try {
      auto results = sv_constants(D, table);
      const auto& r = results.front();
      row.constants = SVTriple{r.c1, r.c2, r.c3};
      bool ok = true;
      for (const auto& x : results)
        ok = ok && x.c1 == conjectured_c1() && x.c2 == conjectured_c2() &&
             x.c3 == conjectured_c3();
      row.status = ok ? ConjectureStatus::Holds : ConjectureStatus::Fails;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::OutsideTheoremHypotheses &&
          err.code() != ErrorCode::MissingTableEntry)
        throw;
      row.status = ConjectureStatus::Skipped;
      row.reason = error_name(err.code());
    }
    switch (row.status) {
      case ConjectureStatus::Holds: ++rep.holds; break;
      case ConjectureStatus::Fails: ++rep.fails; break;
      case ConjectureStatus::Skipped: ++rep.skipped; break;
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace prymsv
