/// @file eigencheck.hpp
/// @brief Real multiplication checks for the prototype families.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "prymsv/exactq.hpp"
#include "prymsv/prototypes.hpp"

namespace prymsv {

using Mat4 = std::array<std::array<std::int64_t, 4>, 4>;

/// T together with the symplectic form it should be self-adjoint for.
struct EndoMatrix {
  Mat4 T{};
  Mat4 J{};
};

Mat4 identity4();
Mat4 mat_mul(const Mat4& x, const Mat4& y);
Mat4 transpose(const Mat4& x);

/// Intersection form with <a1,b1> = p and <a2,b2> = q.
Mat4 pairing_form(std::int64_t p, std::int64_t q);

/// (e Id, 2B; B*, 0) with B = (a b; c d).
EndoMatrix build_T(std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t e,
                   std::int64_t c = 0);

/// Splitting-prototype generators for the parity cases 1..3 (b = 0).
EndoMatrix build_split_T(const SplitProto& p, int split_case);

bool verify_selfadjoint(const Mat4& T, const Mat4& J);

/// T^2 == alpha T + beta Id.
bool satisfies_quadratic(const Mat4& T, std::int64_t alpha, std::int64_t beta);

struct PeriodVector {
  std::array<QuadComplex, 4> v;
  std::array<std::int64_t, 2> pairing{};
};

/// Row vector times matrix equals mu times the row vector.
bool eigen_relation(const std::array<QuadComplex, 4>& v, const Mat4& T, const QuadNum& mu);

struct Check {
  std::string name;
  bool pass = false;
};

struct CheckReport {
  std::vector<Check> checks;
  bool passed() const;
};

PeriodVector cyl_IA_periods(const CylProto& p);

enum class DiagramCase { IA, IB, IIA, IIB };

const char* diagram_name(DiagramCase c) noexcept;

/// The two length/height ratios of a stable diagram, a/lambda and d/lambda.
struct DiagramRatios {
  QuadNum length;
  QuadNum height;
};

DiagramRatios diagram_ratios(const CylProto& p, DiagramCase c);

CheckReport verify_cyl_IA(const CylProto& p);
CheckReport verify_cyl_IA(const CylProto& p, const Mat4& T);

CheckReport verify_triple(const TripleProto& p);
CheckReport verify_triple(const TripleProto& p, const Mat4& T);

/// Period vector v with v T = 2 lambda' v for the given case.
PeriodVector split_period_vector(const SplitProto& p, int split_case);
/// The case 1 vector (2l', 2il', a, id), kept as a negative control.
PeriodVector split_doubled_vector_case1(const SplitProto& p);

CheckReport verify_split_endo(const SplitProto& p, int split_case);
CheckReport verify_split_endo(const SplitProto& p, int split_case, const Mat4& T);

struct EigenRow {
  std::int64_t D = 0;
  ProtoKind kind = ProtoKind::Cyl;
  std::int64_t a = 0, b = 0, d = 0, e = 0;
  std::string check;
  bool pass = false;
};

/// All checks for every prototype with 5 <= D <= dmax; split prototypes with b != 0
/// are not covered by the parity cases and are left out.
std::vector<EigenRow> verify_eigen(std::int64_t dmax);

}  // namespace prymsv
