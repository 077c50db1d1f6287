#include "doctest.h"
#include "prymsv/eigencheck.hpp"
#include "test_util.hpp"

using namespace prymsv;
using prymsv::testing::code_of;

namespace {

QuadNum n(std::int64_t v, std::int64_t D) { return quad_from(Rational(v), Discriminant(D)); }

bool passes(const CheckReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c.pass;
  FAIL("missing check " << name);
  return false;
}

// Every single-entry change of T by +1 or -1 must break a check.
template <class Verify>
void perturbations_fail(const Mat4& T, Verify verify) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int delta : {-1, 1}) {
        Mat4 P = T;
        P[i][j] += delta;
        CAPTURE(i);
        CAPTURE(j);
        CHECK_FALSE(verify(P).passed());
      }
}

}  // namespace

TEST_CASE("matrix helpers") {
  Mat4 I = identity4();
  EndoMatrix m = build_T(1, 0, 1, 0);
  CHECK(mat_mul(I, m.T) == m.T);
  CHECK(transpose(transpose(m.T)) == m.T);
  Mat4 J = pairing_form(1, 2);
  CHECK(transpose(J)[0][1] == -1);
  CHECK(J[2][3] == 2);
  // e = 0 and B = Id
  Mat4 expected = {{{0, 0, 2, 0}, {0, 0, 0, 2}, {1, 0, 0, 0}, {0, 1, 0, 0}}};
  CHECK(m.T == expected);
}

TEST_CASE("B* blocks and the quadratic relation") {
  EndoMatrix m = build_T(3, 5, 7, 1, 2);
  // lower-left block is (d -b; -c a)
  CHECK(m.T[2][0] == 7);
  CHECK(m.T[2][1] == -5);
  CHECK(m.T[3][0] == -2);
  CHECK(m.T[3][1] == 3);
  CHECK(satisfies_quadratic(m.T, 1, 2 * (3 * 7 - 5 * 2)));
  CHECK(verify_selfadjoint(m.T, pairing_form(1, 2)));
  CHECK(satisfies_quadratic(build_T(2, 0, 1, 1).T, 1, 4));
}

TEST_CASE("self-adjointness") {
  for (std::int64_t a = 1; a <= 4; ++a)
    for (std::int64_t b = -2; b <= 2; ++b)
      for (std::int64_t c = -2; c <= 2; ++c)
        for (std::int64_t e = -3; e <= 3; ++e)
          CHECK(verify_selfadjoint(build_T(a, b, 2, e, c).T, pairing_form(1, 2)));
  Mat4 T = build_T(1, 0, 1, 0).T;
  T[0][1] += 1;
  CHECK_FALSE(verify_selfadjoint(T, pairing_form(1, 2)));
  EndoMatrix s = build_split_T(make_split(4, 0, 1, -1), 1);
  CHECK(s.J == pairing_form(2, 1));
  CHECK(verify_selfadjoint(s.T, s.J));
  CHECK_FALSE(verify_selfadjoint(s.T, pairing_form(1, 2)));
}

TEST_CASE("cylinder prototypes, case I.A") {
  auto p = make_cyl(1, 0, 1, 0);
  auto rep = verify_cyl_IA(p);
  CHECK(rep.passed());
  PeriodVector pv = cyl_IA_periods(p);
  QuadNum sqrt2(0, make_rational(1, 2), Discriminant(8));
  CHECK(pv.v[2].re() == sqrt2);
  CHECK(pv.v[3].im() == sqrt2);
  CHECK(pv.pairing == std::array<std::int64_t, 2>{1, 2});
  CHECK(verify_cyl_IA(make_cyl(2, 0, 1, 1)).passed());
  auto ratios = diagram_ratios(make_cyl(2, 0, 1, 1), DiagramCase::IIB);
  QuadNum lam = lambda_of(Discriminant(17), 1);
  CHECK(ratios.length * lam == n(2, 17));
  CHECK(ratios.height * lam == n(1, 17));
  for (auto c : {DiagramCase::IA, DiagramCase::IB, DiagramCase::IIA, DiagramCase::IIB})
    CHECK(diagram_ratios(make_cyl(1, 0, 2, -1), c).length * lambda_of(Discriminant(17), -1) ==
          n(1, 17));
  CHECK(code_of([] { verify_cyl_IA(CylProto{1, 0, 1, 1, 8}); }) == ErrorCode::InvalidPrototype);
}

TEST_CASE("triple of tori prototypes") {
  auto p = make_triple(1, 0, 1, 0);
  auto rep = verify_triple(p);
  CHECK(rep.passed());
  // area ratio 1/2 at D = 8
  QuadNum lam = lambda_of(Discriminant(8), 0);
  QuadNum l2 = lam * lam;
  CHECK(l2 * (l2 + n(2, 8)).inverse() == QuadNum(make_rational(1, 2), 0, Discriminant(8)));
  auto q = make_triple(2, 1, 1, 1);
  CHECK(verify_triple(q).passed());
  QuadNum sqrt17(0, 1, Discriminant(17));
  QuadNum lam17 = lambda_of(Discriminant(17), 1);
  QuadNum area = lam17 * lam17 * (lam17 * lam17 + n(4, 17)).inverse();
  CHECK(area == (n(1, 17) + sqrt17) * (n(2, 17) * sqrt17).inverse());
  CHECK(passes(verify_triple(make_triple(1, 0, 2, 1)), "index"));
}

TEST_CASE("splitting prototypes") {
  auto p = make_split(4, 0, 1, -1);
  CHECK(satisfies_quadratic(build_split_T(p, 1).T, -2, 16));
  for (int k = 1; k <= 3; ++k) {
    CAPTURE(k);
    CHECK(verify_split_endo(p, k).passed());
  }
  PeriodVector v = split_period_vector(p, 1);
  Discriminant D(17);
  QuadNum lam = lambda_of(D, -1);
  CHECK(v.v[0] == QuadComplex(n(2, 17) * lam, QuadNum(D)));
  CHECK(v.v[1] == QuadComplex(QuadNum(D), lam));
  CHECK(v.v[2] == QuadComplex(n(4, 17), QuadNum(D)));
  CHECK(v.v[3] == QuadComplex(QuadNum(D), n(1, 17)));
  CHECK(code_of([] { verify_split_endo(make_split(4, 1, 2, 1), 1); }) == ErrorCode::BRequired);
  CHECK(code_of([&] { verify_split_endo(p, 4); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("the doubled case 1 vector is not an eigenvector") {
  for (std::int64_t D = 8; D <= 200; ++D) {
    if (D % 4 > 1) continue;
    for (const auto& p : enumerate_split(D)) {
      if (p.b != 0) continue;
      CAPTURE(D);
      Discriminant disc(D);
      QuadNum mu = n(2, D) * lambda_of(disc, p.e);
      Mat4 T = build_split_T(p, 1).T;
      PeriodVector doubled = split_doubled_vector_case1(p);
      CHECK_FALSE(eigen_relation(doubled.v, T, mu));
      // second component is off by exactly i * 2ad
      QuadComplex s(disc);
      for (int i = 0; i < 4; ++i) s += doubled.v[i] * n(T[i][1], D);
      QuadComplex gap = doubled.v[1] * mu - s;
      CHECK(gap == QuadComplex(QuadNum(disc), n(2 * p.a * p.d, D)));
      CHECK(eigen_relation(split_period_vector(p, 1).v, T, mu));
    }
  }
}

TEST_CASE("single-entry perturbations are detected") {
  auto cyl = make_cyl(2, 0, 1, 1);
  perturbations_fail(build_T(2, 0, 1, 1).T, [&](const Mat4& T) { return verify_cyl_IA(cyl, T); });
  auto tri = make_triple(2, 1, 1, 1);
  perturbations_fail(build_T(2, 1, 1, 1).T, [&](const Mat4& T) { return verify_triple(tri, T); });
  auto sp = make_split(4, 0, 1, -1);
  for (int k = 1; k <= 3; ++k)
    perturbations_fail(build_split_T(sp, k).T,
                       [&](const Mat4& T) { return verify_split_endo(sp, k, T); });
}

TEST_CASE("every prototype up to D = 120") {
  auto rows = verify_eigen(120);
  CHECK(rows.size() > 1000);
  bool split_seen = false;
  for (const auto& r : rows) {
    CAPTURE(r.D);
    CAPTURE(r.check);
    CHECK(r.pass);
    if (r.kind == ProtoKind::Split) {
      split_seen = true;
      CHECK(r.b == 0);
      CHECK(r.check[0] == 'w');
    }
  }
  CHECK(split_seen);
}
