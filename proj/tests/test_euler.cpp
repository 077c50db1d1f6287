#include <sstream>

#include "doctest.h"
#include "prymsv/euler.hpp"
#include "test_util.hpp"

using namespace prymsv;
using prymsv::testing::code_of;

namespace {

Rational r(const char* s) { return parse_rational(s); }

bool admissible(std::int64_t D) {
  return (D % 8 == 0 || D % 8 == 1 || D % 8 == 4) && !is_perfect_square(D);
}

}  // namespace

TEST_CASE("divisor sums") {
  CHECK(sigma1(1) == 1);
  CHECK(sigma1(2) == 3);
  CHECK(sigma1(4) == 7);
  CHECK(sigma1(12) == 28);
  CHECK(code_of([] { sigma1(0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("index of Gamma_0(m)") {
  CHECK(c_index(1) == 1);
  CHECK(c_index(4) == 6);
  CHECK(c_index(6) == 12);
  CHECK(p1_count(1) == 1);
  CHECK(p1_count(4) == 6);
  CHECK(p1_count(12) == 24);
  for (std::int64_t m = 1; m <= 200; ++m) {
    CAPTURE(m);
    CHECK(c_index(m) == p1_count(m));
  }
}

TEST_CASE("squarefree decomposition") {
  CHECK(squarefree_decompose(4) == std::pair<std::int64_t, std::int64_t>{2, 1});
  CHECK(squarefree_decompose(12) == std::pair<std::int64_t, std::int64_t>{2, 3});
  CHECK(squarefree_decompose(5) == std::pair<std::int64_t, std::int64_t>{1, 5});
  CHECK(squarefree_decompose(1) == std::pair<std::int64_t, std::int64_t>{1, 1});
  for (std::int64_t n = 1; n <= 3000; ++n) {
    auto [f, q] = squarefree_decompose(n);
    CHECK(f * f * q == n);
    for (std::int64_t p = 2; p * p <= q; ++p) CHECK(q % (p * p) != 0);
  }
}

TEST_CASE("torus projection degrees") {
  CHECK(m_D(17, 1) == 3);
  CHECK(m_D(48, 4) == 6);
  CHECK(m_D(33, 1) == 7);
  CHECK(m_D_bruteforce(17, 1) == 3);
  CHECK(m_D_bruteforce(8, 0) == 1);
  CHECK(m_D_bruteforce(41, 3) == 7);
  CHECK(m_D(32, 0) == c_index(4));
  CHECK(code_of([] { m_D(17, 2); }) == ErrorCode::ResidueMismatch);
  CHECK(code_of([] { m_D(17, 5); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { m_D(49, 1); }) == ErrorCode::SquareDiscriminant);
  CHECK(code_of([] { m_D(19, 1); }) == ErrorCode::InvalidDiscriminant);
  CHECK(code_of([] { m_D_bruteforce(17, 2); }) == ErrorCode::ResidueMismatch);
}

TEST_CASE("closed form agrees with enumeration") {
  for (std::int64_t D = 8; D <= 1500; ++D) {
    if (!admissible(D)) continue;
    for (std::int64_t e = -isqrt(D); e * e < D; ++e) {
      if ((D - e * e) % 8) continue;
      CAPTURE(D);
      CAPTURE(e);
      std::int64_t m = m_D(D, e);
      CHECK(m == m_D_bruteforce(D, e));
      CHECK(m == m_D(D, -e));
      if (is_12_primitive(D)) CHECK(m == sigma1((D - e * e) / 8));
    }
  }
}

TEST_CASE("(1,2)-primitivity") {
  CHECK(is_12_primitive(17));
  CHECK(is_12_primitive(8));
  CHECK_FALSE(is_12_primitive(32));   // 4 * 8
  CHECK_FALSE(is_12_primitive(33 * 9));
  CHECK(is_12_primitive(12));         // 12 / 4 = 3
  CHECK_FALSE(is_12_primitive(68));   // 68 / 4 = 17
}

TEST_CASE("Euler characteristics of W_D(0^3)") {
  CHECK(chi_W03(17) == r("-4/3"));
  CHECK(chi_W03(33) == r("-4"));
  CHECK(chi_W03(44) == r("-7/3"));
  CHECK(chi_W03(8) == r("-1/6"));
  CHECK(chi_W03_pm(17) == r("-2/3"));
  auto table = EulerTable::builtin();
  for (std::int64_t D : {8, 12, 17, 20, 24, 28, 32, 33, 40, 41, 44, 48}) {
    CAPTURE(D);
    CHECK(chi_W03(D) == table.lookup(D, Stratum::W03));
  }
  CHECK(code_of([] { chi_W03(13); }) == ErrorCode::UnsupportedResidue);
  CHECK(code_of([] { chi_W03(16); }) == ErrorCode::SquareDiscriminant);
  CHECK(code_of([] { chi_W03(4); }) == ErrorCode::SquareDiscriminant);
  CHECK(code_of([] { chi_W03(10); }) == ErrorCode::InvalidDiscriminant);
  CHECK(code_of([] { chi_W03_pm(24); }) == ErrorCode::UnsupportedResidue);
}

TEST_CASE("built-in table") {
  auto t = EulerTable::builtin();
  CHECK(t.lookup(5, Stratum::W2) == r("-3/10"));
  CHECK(t.lookup(12, Stratum::W4) == r("-5/6"));
  CHECK(code_of([&] { t.lookup(21, Stratum::W4); }) == ErrorCode::MissingTableEntry);
  CHECK(code_of([&] { t.lookup(9, Stratum::W2); }) == ErrorCode::MissingTableEntry);
  CHECK(lookup_chi(t, 48, Stratum::W2) == r("-12"));
  CHECK(t.rows().size() == 18);
  for (const auto& [D, row] : t.rows())
    for (const auto* v : {&row.chi_w4, &row.chi_w2, &row.chi_w03})
      if (*v) CHECK(**v < 0);
  CHECK(code_of([&] { t.set(100, {std::nullopt, r("1/2"), std::nullopt}); }) ==
        ErrorCode::ParseError);
}

TEST_CASE("table files") {
  std::ostringstream warn;
  std::istringstream in(
      "D,chi_w4,chi_w2,chi_w03\n"
      "# comment\n"
      "\n"
      "52, -, -21/2, -\n"
      "8,-12/5,-3/4,-1/5\n");
  auto t = parse_table(in, warn);
  CHECK(t.lookup(52, Stratum::W2) == r("-21/2"));
  CHECK_FALSE(t.find(52, Stratum::W4));
  CHECK(t.lookup(8, Stratum::W03) == r("-1/5"));
  CHECK(t.lookup(17, Stratum::W2) == r("-3"));
  CHECK(warn.str().find("D = 8") != std::string::npos);
  CHECK(warn.str().find("D = 52") == std::string::npos);

  auto bad = [](const char* text) {
    std::ostringstream w;
    std::istringstream s(text);
    return code_of([&] { parse_table(s, w); });
  };
  CHECK(bad("52,-,x,-\n") == ErrorCode::ParseError);
  CHECK(bad("52,-,-1\n") == ErrorCode::ParseError);
  CHECK(bad("51,-,-1,-\n") == ErrorCode::ParseError);
  CHECK(bad("52,-,3/2,-\n") == ErrorCode::ParseError);
  CHECK(bad("5.5,-,-1,-\n") == ErrorCode::ParseError);
  std::ostringstream w;
  CHECK(code_of([&] { load_table("/nonexistent/table.csv", w); }) == ErrorCode::IoError);
}

TEST_CASE("chi report") {
  auto rows = chi_report(8, 48, EulerTable::builtin());
  REQUIRE(rows.size() == 12);
  for (const auto& row : rows) {
    REQUIRE(row.match);
    CHECK(*row.match);
  }
  auto more = chi_report(49, 60, EulerTable::builtin());
  for (const auto& row : more) CHECK_FALSE(row.match);
}
