#include "prymsv/eigencheck.hpp"

#include <algorithm>

namespace prymsv {

namespace {

QuadNum num(std::int64_t v, const Discriminant& D) { return quad_from(Rational(v), D); }

QuadComplex cplx(const QuadNum& re, const QuadNum& im) { return QuadComplex(re, im); }

QuadComplex real(const QuadNum& re) { return QuadComplex(re, QuadNum(re.disc())); }

QuadComplex imag(const QuadNum& im) { return QuadComplex(QuadNum(im.disc()), im); }

void require_b_zero(const SplitProto& p) {
  if (p.b != 0) fail(ErrorCode::BRequired, "splitting endomorphisms need b = 0");
}

void require_case(int split_case) {
  if (split_case < 1 || split_case > 3)
    fail(ErrorCode::InvalidArgument, "splitting case must be 1, 2 or 3");
}

// lambda is the positive root of X^2 - alpha X - beta.
bool positive_root(const QuadNum& lambda, std::int64_t alpha, std::int64_t beta) {
  const Discriminant& D = lambda.disc();
  QuadNum poly = lambda * lambda - num(alpha, D) * lambda - num(beta, D);
  return quad_sign(lambda) == 1 && poly.is_zero();
}

template <class P>
void require_valid(const P& p) {
  if (!is_valid(p))
    fail(ErrorCode::InvalidPrototype,
         std::string("invalid ") + kind_name(P::kind) + " prototype");
}

}  // namespace

Mat4 identity4() {
  Mat4 m{};
  for (int i = 0; i < 4; ++i) m[i][i] = 1;
  return m;
}

Mat4 mat_mul(const Mat4& x, const Mat4& y) {
  Mat4 m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) m[i][j] += x[i][k] * y[k][j];
  return m;
}

Mat4 transpose(const Mat4& x) {
  Mat4 m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = x[j][i];
  return m;
}

Mat4 pairing_form(std::int64_t p, std::int64_t q) {
  Mat4 J{};
  J[0][1] = p;
  J[1][0] = -p;
  J[2][3] = q;
  J[3][2] = -q;
  return J;
}

EndoMatrix build_T(std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t e,
                   std::int64_t c) {
  EndoMatrix m;
  m.T = {{{e, 0, 2 * a, 2 * b}, {0, e, 2 * c, 2 * d}, {d, -b, 0, 0}, {-c, a, 0, 0}}};
  m.J = pairing_form(1, 2);
  return m;
}

EndoMatrix build_split_T(const SplitProto& p, int split_case) {
  require_b_zero(p);
  require_case(split_case);
  const std::int64_t a = p.a, d = p.d, e = p.e;
  EndoMatrix m;
  switch (split_case) {
    case 1:
      m.T = {{{2 * e, 0, a, 0}, {0, 2 * e, 0, 2 * d}, {4 * d, 0, 0, 0}, {0, 2 * a, 0, 0}}};
      m.J = pairing_form(2, 1);
      break;
    case 2:
      m.T = {{{2 * e, 0, a, -d}, {0, 2 * e, 0, 2 * d}, {4 * d, 2 * d, 0, 0}, {0, 2 * a, 0, 0}}};
      m.J = pairing_form(2, 1);
      break;
    default:
      m.T = {{{2 * e, 0, 4 * a, 2 * e}, {0, 2 * e, 0, 2 * d}, {d, -e, 0, 0}, {0, 2 * a, 0, 0}}};
      m.J = pairing_form(1, 2);
      break;
  }
  return m;
}

bool verify_selfadjoint(const Mat4& T, const Mat4& J) {
  return mat_mul(transpose(T), J) == mat_mul(J, T);
}

bool satisfies_quadratic(const Mat4& T, std::int64_t alpha, std::int64_t beta) {
  Mat4 sq = mat_mul(T, T);
  Mat4 rhs{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rhs[i][j] = alpha * T[i][j] + (i == j ? beta : 0);
  return sq == rhs;
}

bool eigen_relation(const std::array<QuadComplex, 4>& v, const Mat4& T, const QuadNum& mu) {
  const Discriminant& D = mu.disc();
  for (int j = 0; j < 4; ++j) {
    QuadComplex s(D);
    for (int i = 0; i < 4; ++i) s += v[i] * num(T[i][j], D);
    if (!(s == v[j] * mu)) return false;
  }
  return true;
}

bool CheckReport::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

PeriodVector cyl_IA_periods(const CylProto& p) {
  require_valid(p);
  Discriminant D(p.D);
  QuadNum inv = lambda_of(D, p.e).inverse();
  PeriodVector pv{{real(num(1, D)), imag(num(1, D)), real(num(2 * p.a, D) * inv),
                   cplx(num(2 * p.b, D) * inv, num(2 * p.d, D) * inv)},
                  {1, 2}};
  return pv;
}

const char* diagram_name(DiagramCase c) noexcept {
  switch (c) {
    case DiagramCase::IA: return "I.A";
    case DiagramCase::IB: return "I.B";
    case DiagramCase::IIA: return "II.A";
    case DiagramCase::IIB: return "II.B";
  }
  return "?";
}

DiagramRatios diagram_ratios(const CylProto& p, DiagramCase) {
  require_valid(p);
  Discriminant D(p.D);
  QuadNum inv = lambda_of(D, p.e).inverse();
  return {num(p.a, D) * inv, num(p.d, D) * inv};
}

CheckReport verify_cyl_IA(const CylProto& p) { return verify_cyl_IA(p, build_T(p.a, p.b, p.d, p.e).T); }

CheckReport verify_cyl_IA(const CylProto& p, const Mat4& T) {
  require_valid(p);
  Discriminant D(p.D);
  QuadNum lambda = lambda_of(D, p.e);
  PeriodVector pv = cyl_IA_periods(p);
  DiagramRatios r = diagram_ratios(p, DiagramCase::IA);
  // l1 = w(a1), 2 l3 = w(a2), h1 + h2 = Im w(b1), 2 (h2 + h3) = Im w(b2)
  Rational half = make_rational(1, 2);
  QuadNum l_ratio = pv.v[2].re() * half / pv.v[0].re();
  QuadNum h_ratio = pv.v[3].im() * half / pv.v[1].im();
  CheckReport rep;
  rep.checks.push_back({"lambda_root", positive_root(lambda, p.e, 2 * p.a * p.d)});
  rep.checks.push_back({"selfadjoint", verify_selfadjoint(T, pairing_form(1, 2))});
  rep.checks.push_back({"quadratic", satisfies_quadratic(T, p.e, 2 * p.a * p.d)});
  rep.checks.push_back({"eigen_relation", eigen_relation(pv.v, T, lambda)});
  rep.checks.push_back({"length_ratio", l_ratio == r.length});
  rep.checks.push_back({"height_ratio", h_ratio == r.height});
  return rep;
}

CheckReport verify_triple(const TripleProto& p) {
  return verify_triple(p, build_T(p.a, p.b, p.d, p.e).T);
}

CheckReport verify_triple(const TripleProto& p, const Mat4& T) {
  require_valid(p);
  Discriminant D(p.D);
  QuadNum lambda = lambda_of(D, p.e);
  QuadNum lambda2 = lambda * lambda;
  QuadNum sqrtD(0, 1, D);
  QuadNum area = lambda2 * (lambda2 + num(2 * p.a * p.d, D)).inverse();
  QuadNum expected = (num(p.e, D) + sqrtD) * (num(2, D) * sqrtD).inverse();
  // covolume of a Z + (b + i d) Z against (D - e^2)/8
  std::int64_t covolume = p.a * p.d;
  CheckReport rep;
  rep.checks.push_back({"lambda_root", positive_root(lambda, p.e, 2 * p.a * p.d)});
  rep.checks.push_back({"selfadjoint", verify_selfadjoint(T, pairing_form(1, 2))});
  rep.checks.push_back({"quadratic", satisfies_quadratic(T, p.e, 2 * p.a * p.d)});
  rep.checks.push_back({"index", covolume * 8 == p.D - p.e * p.e});
  rep.checks.push_back({"area_ratio", area == expected});
  return rep;
}

PeriodVector split_period_vector(const SplitProto& p, int split_case) {
  require_valid(p);
  require_b_zero(p);
  require_case(split_case);
  Discriminant D(p.D);
  QuadNum l = lambda_of(D, p.e);
  QuadNum a = num(p.a, D), d = num(p.d, D), two = num(2, D);
  switch (split_case) {
    case 1: return {{real(two * l), imag(l), real(a), imag(d)}, {2, 1}};
    case 2: return {{real(two * l), cplx(l, l), real(a), imag(d)}, {2, 1}};
    default: return {{real(l), cplx(a, l), real(two * a), cplx(l, d)}, {1, 2}};
  }
}

PeriodVector split_doubled_vector_case1(const SplitProto& p) {
  require_valid(p);
  require_b_zero(p);
  Discriminant D(p.D);
  QuadNum l = lambda_of(D, p.e);
  QuadNum two = num(2, D);
  return {{real(two * l), imag(two * l), real(num(p.a, D)), imag(num(p.d, D))}, {2, 1}};
}

CheckReport verify_split_endo(const SplitProto& p, int split_case) {
  return verify_split_endo(p, split_case, build_split_T(p, split_case).T);
}

CheckReport verify_split_endo(const SplitProto& p, int split_case, const Mat4& T) {
  require_valid(p);
  EndoMatrix ref = build_split_T(p, split_case);
  Discriminant D(p.D);
  QuadNum l = lambda_of(D, p.e);
  PeriodVector pv = split_period_vector(p, split_case);
  CheckReport rep;
  rep.checks.push_back({"lambda_root", positive_root(l, p.e, p.a * p.d)});
  rep.checks.push_back({"quadratic", satisfies_quadratic(T, 2 * p.e, 4 * p.a * p.d)});
  rep.checks.push_back({"selfadjoint", verify_selfadjoint(T, ref.J)});
  rep.checks.push_back({"eigen_relation", eigen_relation(pv.v, T, num(2, D) * l)});
  return rep;
}

std::vector<EigenRow> verify_eigen(std::int64_t dmax) {
  std::vector<EigenRow> rows;
  auto emit = [&rows](const auto& p, const CheckReport& rep, const std::string& prefix) {
    for (const auto& c : rep.checks)
      rows.push_back({p.D, std::decay_t<decltype(p)>::kind, p.a, p.b, p.d, p.e,
                      prefix + c.name, c.pass});
  };
  for (std::int64_t D = 5; D <= dmax; ++D) {
    if (D % 4 != 0 && D % 4 != 1) continue;
    if (D % 8 != 5) {
      for (const auto& p : enumerate_cyl(D)) emit(p, verify_cyl_IA(p), "");
      for (const auto& p : enumerate_triple(D)) emit(p, verify_triple(p), "");
    }
    for (const auto& p : enumerate_split(D)) {
      if (p.b != 0) continue;
      for (int k = 1; k <= 3; ++k)
        emit(p, verify_split_endo(p, k), "w" + std::to_string(k) + ":");
    }
  }
  return rows;
}

}  // namespace prymsv
