// Command-line front end. Talks to the library only through prymsv.h.

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prymsv/prymsv.h"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct TableDeleter {
  void operator()(prymsv_table* t) const { prymsv_table_free(t); }
};
using TablePtr = std::unique_ptr<prymsv_table, TableDeleter>;

struct SurfaceDeleter {
  void operator()(prymsv_surface* s) const { prymsv_surface_free(s); }
};
using SurfacePtr = std::unique_ptr<prymsv_surface, SurfaceDeleter>;

int report_error(prymsv_status st) {
  std::cerr << "error: " << prymsv_status_name(st) << ": " << prymsv_last_error() << "\n";
  return st == PRYMSV_ERR_INTERNAL || st == PRYMSV_ERR_AMBIGUOUS_GROUPING ? kFailure : kUsage;
}

int usage(const std::string& msg) {
  std::cerr << "usage error: " << msg << "\n";
  return kUsage;
}

// Prints and frees a library-owned string.
void emit(char* s) {
  std::fputs(s, stdout);
  prymsv_string_free(s);
}

std::optional<int> open_table(const std::string& path, TablePtr& out) {
  prymsv_table* t = nullptr;
  prymsv_status st = path.empty() ? prymsv_table_builtin(&t) : prymsv_table_load(path.c_str(), &t);
  if (st != PRYMSV_OK) return report_error(st);
  out.reset(t);
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prym eigenform Siegel-Veech toolkit"};
  app.require_subcommand(1);

  long long dmin = 0, dmax = 0, D = 0, nmax = 0;
  std::string table_path, kind;
  bool json_array = false;
  std::vector<long long> proto;
  std::vector<double> slit;
  double radius = 0;
  std::optional<double> tol;

  auto* chi = app.add_subcommand("chi", "Euler characteristics of W_D(0^3) as CSV");
  chi->add_option("--dmin", dmin, "smallest discriminant")->required();
  chi->add_option("--dmax", dmax, "largest discriminant")->required();
  chi->add_option("--table", table_path, "Euler characteristic table (CSV)");

  auto* sv = app.add_subcommand("sv", "Siegel-Veech constants as JSON");
  sv->add_option("--d", D, "discriminant")->required();
  sv->add_option("--table", table_path, "Euler characteristic table (CSV)");
  sv->add_flag("--json", json_array, "print a single JSON array instead of JSON lines");

  auto* verify = app.add_subcommand("verify", "exact verifications");
  verify->require_subcommand(1);
  auto* modular = verify->add_subcommand("modular", "vanishing of the q-expansion");
  modular->add_option("--nmax", nmax, "truncation order")->required();
  auto* identity = verify->add_subcommand("identity", "S_D vanishing and recursion");
  identity->add_option("--dmax", dmax, "largest discriminant")->required();
  auto* eigen = verify->add_subcommand("eigen", "real multiplication checks as CSV");
  eigen->add_option("--dmax", dmax, "largest discriminant")->required();

  auto* protos = app.add_subcommand("protos", "prototype enumeration as CSV");
  protos->add_option("--d", D, "discriminant")->required();
  protos->add_option("--kind", kind, "cyl, triple or split")
      ->required()
      ->check(CLI::IsMember({"cyl", "triple", "split"}));

  auto* count = app.add_subcommand("count", "saddle connection counts on a slit-tori surface");
  count->add_option("--d", D, "discriminant")->required();
  count->add_option("--proto", proto, "a,b,d,e")->required()->delimiter(',')->expected(4);
  count->add_option("--slit", slit, "re,im (default: generic direction)")
      ->delimiter(',')
      ->expected(2);
  count->add_option("--radius", radius, "search radius")->required();
  count->add_option("--tol", tol, "holonomy grouping tolerance (default 1e-9 * R)");

  auto* conjecture = app.add_subcommand("conjecture", "check (25/9, 3, 2/9) over a range");
  conjecture->add_option("--dmax", dmax, "largest discriminant")->required();
  conjecture->add_option("--table", table_path, "Euler characteristic table (CSV)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  char* out = nullptr;
  int ok = 0;
  prymsv_status st = PRYMSV_OK;

  if (chi->parsed()) {
    if (dmin > dmax) return usage("--dmin must not exceed --dmax");
    TablePtr table;
    if (auto rc = open_table(table_path, table)) return *rc;
    st = prymsv_chi_report_csv(table.get(), dmin, dmax, &out, &ok);
    if (st != PRYMSV_OK) return report_error(st);
    emit(out);
    return ok ? kOk : kFailure;
  }

  if (sv->parsed()) {
    if (D <= 0) return usage("--d must be positive");
    TablePtr table;
    if (auto rc = open_table(table_path, table)) return *rc;
    st = prymsv_sv_json(table.get(), D, json_array ? 1 : 0, &out);
    if (st != PRYMSV_OK) return report_error(st);
    emit(out);
    return kOk;
  }

  if (modular->parsed()) {
    if (nmax < 1) return usage("--nmax must be at least 1");
    st = prymsv_verify_modular_json(nmax, &out, &ok);
  } else if (identity->parsed()) {
    if (dmax < 1) return usage("--dmax must be at least 1");
    st = prymsv_verify_identity_json(dmax, &out, &ok);
  } else if (eigen->parsed()) {
    if (dmax < 1) return usage("--dmax must be at least 1");
    st = prymsv_verify_eigen_csv(dmax, &out, &ok);
  }
  if (verify->parsed()) {
    if (st != PRYMSV_OK) return report_error(st);
    emit(out);
    return ok ? kOk : kFailure;
  }

  if (protos->parsed()) {
    if (D <= 0) return usage("--d must be positive");
    st = prymsv_protos_csv(D, kind.c_str(), &out);
    if (st != PRYMSV_OK) return report_error(st);
    emit(out);
    return kOk;
  }

  if (count->parsed()) {
    if (D <= 0) return usage("--d must be positive");
    if (!(radius > 0)) return usage("--radius must be positive");
    if (tol && !(*tol >= 0)) return usage("--tol must be non-negative");
    prymsv_surface* raw = nullptr;
    st = prymsv_surface_new(D, proto[0], proto[1], proto[2], proto[3],
                            slit.empty() ? nullptr : slit.data(), &raw);
    if (st != PRYMSV_OK) return report_error(st);
    SurfacePtr surface(raw);
    st = prymsv_surface_count_json(surface.get(), radius, tol.value_or(-1), &out);
    if (st != PRYMSV_OK) return report_error(st);
    emit(out);
    return kOk;
  }

  if (conjecture->parsed()) {
    if (dmax < 5) return usage("--dmax must be at least 5");
    TablePtr table;
    if (auto rc = open_table(table_path, table)) return *rc;
    long long counts[3] = {0, 0, 0};
    st = prymsv_conjecture_csv(table.get(), dmax, &out, counts);
    if (st != PRYMSV_OK) return report_error(st);
    emit(out);
    std::cerr << "holds " << counts[0] << ", fails " << counts[1] << ", skipped " << counts[2]
              << "\n";
    return counts[1] == 0 ? kOk : kFailure;
  }

  return usage("no subcommand");
}
