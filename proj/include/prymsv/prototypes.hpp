/// @file prototypes.hpp
/// @brief Cylinder, triple-of-tori and splitting prototypes.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prymsv/exactq.hpp"

namespace prymsv {

enum class ProtoKind { Cyl, Triple, Split };

const char* kind_name(ProtoKind kind) noexcept;
ProtoKind parse_kind(const std::string& name);

/// Integer quadruple (a,b,d,e) together with the discriminant it defines.
/// For splitting prototypes D holds D' = e^2 + 4ad.
template <ProtoKind K>
struct Prototype {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t d = 0;
  std::int64_t e = 0;
  std::int64_t D = 0;

  static constexpr ProtoKind kind = K;

  friend bool operator==(const Prototype&, const Prototype&) = default;
};

using CylProto = Prototype<ProtoKind::Cyl>;
using TripleProto = Prototype<ProtoKind::Triple>;
using SplitProto = Prototype<ProtoKind::Split>;

/// Checks every constraint of the family, including the discriminant relation.
bool is_valid(const CylProto& p);
bool is_valid(const TripleProto& p);
bool is_valid(const SplitProto& p);

/// Builds the prototype and computes D; throws InvalidPrototype.
CylProto make_cyl(std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t e);
TripleProto make_triple(std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t e);
SplitProto make_split(std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t e);

/// Sorted by (e, a, d, b).
std::vector<CylProto> enumerate_cyl(std::int64_t D);
std::vector<TripleProto> enumerate_triple(std::int64_t D);
std::vector<TripleProto> enumerate_triple_e(std::int64_t D, std::int64_t e);
std::vector<SplitProto> enumerate_split(std::int64_t Dprime);
std::vector<SplitProto> reduced_split(std::int64_t Dprime);

enum class Sign { Plus, Minus, None };

const char* sign_name(Sign s) noexcept;

struct OrbitClass {
  std::int64_t e = 0;
  std::int64_t l = 0;
  std::int64_t m = 0;
  std::int64_t D = 0;
  Sign sign = Sign::None;

  friend bool operator==(const OrbitClass&, const OrbitClass&) = default;
  friend auto operator<=>(const OrbitClass&, const OrbitClass&) = default;
};

OrbitClass orbit_of(const TripleProto& p);

enum class SplitTarget { SameD, FourD };

/// Parity rule w_i, i in 1..5; requires b = 0.
SplitTarget classify_split(const SplitProto& p, int i);

enum class DegreeCase {
  Fprime,   ///< 4 | D, witness in P_D(2), counts SameD
  Fsecond,  ///< 4 | D, witnesses in P_{D/4}(2), counts FourD
  Fodd      ///< D = 1 (mod 8), witnesses in P_D(2), counts SameD
};

/// Witness prototypes used for the degree count of a case.
std::vector<SplitProto> degree_witnesses(DegreeCase c, std::int64_t D);

/// Degree of the forgetful map divided by 4!, read off the parity rules.
int split_degree_counts(DegreeCase c, std::int64_t D);

template <ProtoKind K>
std::string to_csv_row(const Prototype<K>& p) {
  return std::to_string(p.D) + "," + kind_name(K) + "," + std::to_string(p.a) +
         "," + std::to_string(p.b) + "," + std::to_string(p.d) + "," +
         std::to_string(p.e);
}

}  // namespace prymsv
