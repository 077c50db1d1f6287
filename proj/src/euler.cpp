#include "prymsv/euler.hpp"

#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "prymsv/prototypes.hpp"

namespace prymsv {

namespace {

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) fail(ErrorCode::InvalidArgument, std::string(what) + " requires n >= 1");
}

void check_chi_domain(std::int64_t D) {
  Discriminant disc(D);
  if (disc.mod8() == 5)
    fail(ErrorCode::UnsupportedResidue,
         "W_D(0^3) is empty for D = 5 (mod 8): " + std::to_string(D));
  if (disc.is_square())
    fail(ErrorCode::SquareDiscriminant, "square discriminant " + std::to_string(D));
  if (D <= 4) fail(ErrorCode::InvalidDiscriminant, "discriminant must exceed 4");
}

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::int64_t sigma1(std::int64_t n) {
  require_positive(n, "sigma1");
  std::int64_t s = 0;
  for (std::int64_t k = 1; k * k <= n; ++k) {
    if (n % k) continue;
    s += k;
    if (k * k != n) s += n / k;
  }
  return s;
}

std::int64_t c_index(std::int64_t m) {
  require_positive(m, "c_index");
  std::int64_t c = m;
  for (std::int64_t p : prime_factors(m)) c = c / p * (p + 1);
  return c;
}

std::int64_t p1_count(std::int64_t m) {
  require_positive(m, "p1_count");
  if (m == 1) return 1;
  std::int64_t primitive = 0;
  for (std::int64_t c = 0; c < m; ++c)
    for (std::int64_t d = 0; d < m; ++d)
      if (std::gcd(std::gcd(c, d), m) == 1) ++primitive;
  std::int64_t units = 0;
  for (std::int64_t u = 1; u < m; ++u)
    if (std::gcd(u, m) == 1) ++units;
  return primitive / units;
}

std::pair<std::int64_t, std::int64_t> squarefree_decompose(std::int64_t n) {
  require_positive(n, "squarefree_decompose");
  std::int64_t f = 1, q = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    for (int i = 0; i < k / 2; ++i) f *= p;
    if (k % 2) q *= p;
  }
  q *= n;
  return {f, q};
}

std::int64_t m_D(std::int64_t D, std::int64_t e) {
  Discriminant disc(D);
  if (disc.is_square())
    fail(ErrorCode::SquareDiscriminant, "square discriminant " + std::to_string(D));
  if (e * e >= D) fail(ErrorCode::InvalidArgument, "m_D requires e^2 < D");
  if ((D - e * e) % 8 != 0)
    fail(ErrorCode::ResidueMismatch, "e^2 != D (mod 8) for D = " + std::to_string(D) +
                                         ", e = " + std::to_string(e));
  std::int64_t n = (D - e * e) / 8;
  auto [f, q] = squarefree_decompose(n);
  std::int64_t total = 0;
  for (std::int64_t r = 1; r <= f; ++r)
    if (f % r == 0 && std::gcd(r, e) == 1) total += c_index(n / (r * r));
  return total;
}

std::int64_t m_D_bruteforce(std::int64_t D, std::int64_t e) {
  Discriminant disc(D);
  if (disc.is_square())
    fail(ErrorCode::SquareDiscriminant, "square discriminant " + std::to_string(D));
  if (e * e >= D) fail(ErrorCode::InvalidArgument, "m_D requires e^2 < D");
  if ((D - e * e) % 8 != 0)
    fail(ErrorCode::ResidueMismatch, "e^2 != D (mod 8)");
  return static_cast<std::int64_t>(enumerate_triple_e(D, e).size());
}

bool is_12_primitive(std::int64_t D) {
  for (std::int64_t f = 2; f * f <= D; ++f) {
    if (D % (f * f)) continue;
    std::int64_t r = (D / (f * f)) % 8;
    if (r == 0 || r == 1 || r == 4) return false;
  }
  return true;
}

Rational chi_W03(std::int64_t D) {
  check_chi_domain(D);
  std::int64_t sum = 0;
  std::int64_t r = isqrt(D - 1);
  for (std::int64_t e = -r; e <= r; ++e)
    if ((D - e * e) % 8 == 0) sum += m_D(D, e);
  return make_rational(-sum, 6);
}

Rational chi_W03_pm(std::int64_t D) {
  check_chi_domain(D);
  if (D % 8 != 1)
    fail(ErrorCode::UnsupportedResidue, "spin components need D = 1 (mod 8)");
  return chi_W03(D) / 2;
}

const char* stratum_name(Stratum s) noexcept {
  switch (s) {
    case Stratum::W4: return "W(4)";
    case Stratum::W2: return "W(2)";
    case Stratum::W03: return "W(0^3)";
  }
  return "?";
}

EulerTable EulerTable::builtin() {
  struct Entry {
    std::int64_t D;
    const char* w4;
    const char* w2;
    const char* w03;
  };
  static const Entry entries[] = {
      {5, nullptr, "-3/10", nullptr},  {8, "-12/5", "-3/4", "-1/6"},
      {12, "-5/6", "-3/2", "-1/3"},    {13, nullptr, "-3/2", nullptr},
      {17, "-10/3", "-3", "-4/3"},     {20, "-5/2", "-3", "-1"},
      {21, nullptr, "-3", nullptr},    {24, "-5/2", "-9/2", "-1"},
      {28, "-10/3", "-6", "-4/3"},     {29, nullptr, "-9/2", nullptr},
      {32, "-5", "-6", "-2"},          {33, "-10", "-9", "-4"},
      {37, nullptr, "-15/6", nullptr}, {40, "-35/6", "-21/2", "-7/3"},
      {41, "-40/3", "-12", "-16/3"},   {44, "-35/6", "-21/2", "-7/3"},
      {45, nullptr, "-6", nullptr},    {48, "-10", "-12", "-4"},
  };
  auto opt = [](const char* s) -> std::optional<Rational> {
    if (!s) return std::nullopt;
    return parse_rational(s);
  };
  EulerTable t;
  for (const auto& e : entries) t.set(e.D, {opt(e.w4), opt(e.w2), opt(e.w03)});
  return t;
}

void EulerTable::set(std::int64_t D, EulerRow row) {
  for (const auto* v : {&row.chi_w4, &row.chi_w2, &row.chi_w03})
    if (*v && **v >= 0)
      fail(ErrorCode::ParseError, "Euler characteristic must be negative for D = " +
                                      std::to_string(D) + ": " + to_string(**v));
  rows_[D] = std::move(row);
}

std::optional<Rational> EulerTable::find(std::int64_t D, Stratum s) const {
  auto it = rows_.find(D);
  if (it == rows_.end()) return std::nullopt;
  switch (s) {
    case Stratum::W4: return it->second.chi_w4;
    case Stratum::W2: return it->second.chi_w2;
    case Stratum::W03: return it->second.chi_w03;
  }
  return std::nullopt;
}

Rational EulerTable::lookup(std::int64_t D, Stratum s) const {
  auto v = find(D, s);
  if (!v)
    fail(ErrorCode::MissingTableEntry, std::string("no table entry for chi(") +
                                           stratum_name(s) + ") at D = " + std::to_string(D));
  return *v;
}

Rational lookup_chi(const EulerTable& table, std::int64_t D, Stratum s) {
  return table.lookup(D, s);
}

EulerTable parse_table(std::istream& in, std::ostream& warn, EulerTable base) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("D,", 0) == 0 || line.rfind("D ,", 0) == 0) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (fields.size() != 4)
      fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected 4 fields");
    std::int64_t D = 0;
    try {
      Rational dval = parse_rational(fields[0]);
      if (boost::multiprecision::denominator(dval) != 1) throw Error(ErrorCode::ParseError, "");
      D = boost::multiprecision::numerator(dval).convert_to<std::int64_t>();
      Discriminant check(D);
    } catch (const Error&) {
      fail(ErrorCode::ParseError,
           "line " + std::to_string(lineno) + ": bad discriminant '" + fields[0] + "'");
    }
    auto value = [&](const std::string& s) -> std::optional<Rational> {
      if (s == "-") return std::nullopt;
      try {
        return parse_rational(s);
      } catch (const Error& err) {
        fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + err.what());
      }
    };
    EulerRow row{value(fields[1]), value(fields[2]), value(fields[3])};
    if (base.contains(D))
      warn << "warning: table row for D = " << D << " overrides the built-in values\n";
    try {
      base.set(D, std::move(row));
    } catch (const Error& err) {
      fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + err.what());
    }
  }
  return base;
}

EulerTable load_table(const std::string& path, std::ostream& warn) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open table file '" + path + "'");
  return parse_table(in, warn);
}

std::vector<ChiRow> chi_report(std::int64_t dmin, std::int64_t dmax, const EulerTable& table) {
  std::vector<ChiRow> rows;
  for (std::int64_t D = std::max<std::int64_t>(dmin, 5); D <= dmax; ++D) {
    std::int64_t r = D % 8;
    if ((r != 0 && r != 1 && r != 4) || is_perfect_square(D)) continue;
    ChiRow row;
    row.D = D;
    row.computed = chi_W03(D);
    row.table = table.find(D, Stratum::W03);
    if (row.table) row.match = *row.table == row.computed;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace prymsv
