#include "prymsv/prototypes.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace prymsv {

namespace {

std::int64_t gcd4(std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t e) {
  return std::gcd(std::gcd(a, b), std::gcd(d, e));
}

template <ProtoKind K>
void sort_protos(std::vector<Prototype<K>>& v) {
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    return std::tie(x.e, x.a, x.d, x.b) < std::tie(y.e, y.a, y.d, y.b);
  });
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> lo, hi;
  for (std::int64_t k = 1; k * k <= n; ++k) {
    if (n % k) continue;
    lo.push_back(k);
    if (k * k != n) hi.push_back(n / k);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

// Calls f(e, n) for e^2 < D with D - e^2 = 0 (mod step) and n = (D - e^2)/step.
template <class F>
void for_each_e(std::int64_t D, std::int64_t step, F&& f) {
  std::int64_t r = isqrt(D - 1);
  for (std::int64_t e = -r; e <= r; ++e) {
    std::int64_t rest = D - e * e;
    if (rest > 0 && rest % step == 0) f(e, rest / step);
  }
}

template <ProtoKind K>
Prototype<K> build(std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t e,
                   std::int64_t mult) {
  Prototype<K> p{a, b, d, e, e * e + mult * a * d};
  if (!is_valid(p))
    fail(ErrorCode::InvalidPrototype,
         std::string("invalid ") + kind_name(K) + " prototype (" + std::to_string(a) +
             "," + std::to_string(b) + "," + std::to_string(d) + "," +
             std::to_string(e) + ")");
  return p;
}

}  // namespace

const char* kind_name(ProtoKind kind) noexcept {
  switch (kind) {
    case ProtoKind::Cyl: return "cyl";
    case ProtoKind::Triple: return "triple";
    case ProtoKind::Split: return "split";
  }
  return "?";
}

ProtoKind parse_kind(const std::string& name) {
  if (name == "cyl") return ProtoKind::Cyl;
  if (name == "triple") return ProtoKind::Triple;
  if (name == "split") return ProtoKind::Split;
  fail(ErrorCode::InvalidArgument, "unknown prototype kind '" + name + "'");
}

const char* sign_name(Sign s) noexcept {
  switch (s) {
    case Sign::Plus: return "+";
    case Sign::Minus: return "-";
    case Sign::None: return "none";
  }
  return "?";
}

bool is_valid(const CylProto& p) {
  return p.a > 0 && p.d > 0 && p.b >= 0 && p.b < std::gcd(p.a, p.d) &&
         p.D == p.e * p.e + 8 * p.a * p.d && gcd4(p.a, p.b, p.d, p.e) == 1;
}

bool is_valid(const TripleProto& p) {
  return p.a > 0 && p.d > 0 && p.b >= 0 && p.b < p.a &&
         p.D == p.e * p.e + 8 * p.a * p.d && gcd4(p.a, p.b, p.d, p.e) == 1;
}

bool is_valid(const SplitProto& p) {
  return p.a > 0 && p.d > 0 && p.b >= 0 && p.b < std::gcd(p.a, p.d) &&
         p.a > p.d + p.e && p.D == p.e * p.e + 4 * p.a * p.d &&
         gcd4(p.a, p.b, p.d, p.e) == 1;
}

CylProto make_cyl(std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t e) {
  return build<ProtoKind::Cyl>(a, b, d, e, 8);
}

TripleProto make_triple(std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t e) {
  return build<ProtoKind::Triple>(a, b, d, e, 8);
}

SplitProto make_split(std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t e) {
  return build<ProtoKind::Split>(a, b, d, e, 4);
}

std::vector<CylProto> enumerate_cyl(std::int64_t D) {
  Discriminant disc(D);
  std::vector<CylProto> out;
  if (disc.mod8() == 5) return out;
  for_each_e(D, 8, [&](std::int64_t e, std::int64_t n) {
    for (std::int64_t a : divisors(n)) {
      std::int64_t d = n / a;
      for (std::int64_t b = 0; b < std::gcd(a, d); ++b)
        if (gcd4(a, b, d, e) == 1) out.push_back({a, b, d, e, D});
    }
  });
  sort_protos(out);
  return out;
}

namespace {

void check_triple_D(std::int64_t D) {
  Discriminant disc(D);
  if (disc.mod8() == 5)
    fail(ErrorCode::UnsupportedResidue,
         "no triples of tori for D = 5 (mod 8): " + std::to_string(D));
  if (D <= 4)
    fail(ErrorCode::InvalidDiscriminant, "discriminant must exceed 4: " + std::to_string(D));
}

void append_triples(std::int64_t D, std::int64_t e, std::int64_t n,
                    std::vector<TripleProto>& out) {
  for (std::int64_t a : divisors(n)) {
    std::int64_t d = n / a;
    for (std::int64_t b = 0; b < a; ++b)
      if (gcd4(a, b, d, e) == 1) out.push_back({a, b, d, e, D});
  }
}

}  // namespace

std::vector<TripleProto> enumerate_triple(std::int64_t D) {
  check_triple_D(D);
  std::vector<TripleProto> out;
  for_each_e(D, 8, [&](std::int64_t e, std::int64_t n) { append_triples(D, e, n, out); });
  sort_protos(out);
  return out;
}

std::vector<TripleProto> enumerate_triple_e(std::int64_t D, std::int64_t e) {
  check_triple_D(D);
  std::vector<TripleProto> out;
  if (e * e >= D || (D - e * e) % 8 != 0) return out;
  append_triples(D, e, (D - e * e) / 8, out);
  sort_protos(out);
  return out;
}

std::vector<SplitProto> enumerate_split(std::int64_t Dprime) {
  Discriminant disc(Dprime);
  if (Dprime <= 4)
    fail(ErrorCode::InvalidDiscriminant,
         "discriminant must exceed 4: " + std::to_string(Dprime));
  std::vector<SplitProto> out;
  for_each_e(Dprime, 4, [&](std::int64_t e, std::int64_t n) {
    for (std::int64_t a : divisors(n)) {
      std::int64_t d = n / a;
      if (a <= d + e) continue;
      for (std::int64_t b = 0; b < std::gcd(a, d); ++b)
        if (gcd4(a, b, d, e) == 1) out.push_back({a, b, d, e, Dprime});
    }
  });
  sort_protos(out);
  return out;
}

std::vector<SplitProto> reduced_split(std::int64_t Dprime) {
  auto all = enumerate_split(Dprime);
  std::vector<SplitProto> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out),
               [](const SplitProto& p) { return p.d == 1 && p.b == 0; });
  return out;
}

OrbitClass orbit_of(const TripleProto& p) {
  if (!is_valid(p)) fail(ErrorCode::InvalidPrototype, "invalid triple prototype");
  OrbitClass c;
  c.e = p.e;
  c.l = std::gcd(std::gcd(p.a, p.b), p.d);
  c.m = p.a * p.d / (c.l * c.l);
  c.D = p.D;
  if (p.D % 8 == 1) {
    std::int64_t r = ((p.e % 4) + 4) % 4;
    c.sign = r == 1 ? Sign::Plus : Sign::Minus;
  }
  return c;
}

SplitTarget classify_split(const SplitProto& p, int i) {
  if (p.b != 0)
    fail(ErrorCode::BRequired, "parity rules are stated for b = 0 only");
  auto even = [](std::int64_t x) { return x % 2 == 0; };
  bool same = false;
  switch (i) {
    case 1: same = even(p.a); break;
    case 2: same = even(p.a) && even(p.d); break;
    case 3: same = even(p.d) && even(p.e); break;
    case 4: same = even(p.a - p.e) && even(p.d); break;
    case 5: same = even(p.a - p.d - p.e); break;
    default: fail(ErrorCode::InvalidArgument, "case index must be in 1..5");
  }
  return same ? SplitTarget::SameD : SplitTarget::FourD;
}

std::vector<SplitProto> degree_witnesses(DegreeCase c, std::int64_t D) {
  Discriminant disc(D);
  if (D <= 4) fail(ErrorCode::InvalidDiscriminant, "discriminant must exceed 4");
  std::vector<std::tuple<std::int64_t, std::int64_t>> cand;  // (a, e), b = 0, d = 1
  switch (c) {
    case DegreeCase::Fprime: {
      if (D % 4 != 0) fail(ErrorCode::NotDivisibleBy4, "case requires 4 | D");
      cand.emplace_back(D / 4, 0);
      break;
    }
    case DegreeCase::Fsecond: {
      if (D % 4 != 0) fail(ErrorCode::NotDivisibleBy4, "case requires 4 | D");
      std::int64_t q = D / 4;
      if (q % 4 == 0) {
        cand.emplace_back(q / 4, 0);
      } else if (q % 8 == 1) {
        cand.emplace_back((q - 1) / 4, -1);
        cand.emplace_back((q - 1) / 4, 1);
      } else if (q % 8 == 5) {
        cand.emplace_back((q - 1) / 4, 1);
      }
      break;
    }
    case DegreeCase::Fodd: {
      if (D % 8 != 1) fail(ErrorCode::UnsupportedResidue, "case requires D = 1 (mod 8)");
      cand.emplace_back((D - 1) / 4, -1);
      cand.emplace_back((D - 1) / 4, 1);
      break;
    }
  }
  std::vector<SplitProto> out;
  for (auto [a, e] : cand) {
    SplitProto p{a, 0, 1, e, e * e + 4 * a};
    if (is_valid(p)) out.push_back(p);
  }
  if (out.empty() && !cand.empty())
    fail(ErrorCode::InvalidArgument,
         "no valid witness prototype for D = " + std::to_string(D));
  return out;
}

int split_degree_counts(DegreeCase c, std::int64_t D) {
  auto witnesses = degree_witnesses(c, D);
  SplitTarget counted = c == DegreeCase::Fsecond ? SplitTarget::FourD : SplitTarget::SameD;
  std::optional<int> result;
  for (const auto& p : witnesses) {
    int n = 0;
    for (int i = 1; i <= 5; ++i)
      if (classify_split(p, i) == counted) ++n;
    if (result && *result != n)
      fail(ErrorCode::Internal, "witness prototypes disagree for D = " + std::to_string(D));
    result = n;
  }
  return result.value_or(0);
}

}  // namespace prymsv
