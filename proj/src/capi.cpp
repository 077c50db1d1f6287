#include "prymsv/prymsv.h"

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <sstream>
#include <string>

#include "prymsv/eigencheck.hpp"
#include "prymsv/euler.hpp"
#include "prymsv/flatcount.hpp"
#include "prymsv/modforms.hpp"
#include "prymsv/prototypes.hpp"
#include "prymsv/svconst.hpp"

struct prymsv_table {
  prymsv::EulerTable table;
};

struct prymsv_surface {
  prymsv::FlatSurface surface;
};

namespace {

thread_local std::string last_error;

prymsv_status to_status(prymsv::ErrorCode code) {
  return static_cast<prymsv_status>(static_cast<int>(code));
}

template <class F>
prymsv_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return PRYMSV_OK;
  } catch (const prymsv::Error& err) {
    last_error = err.what();
    return to_status(err.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PRYMSV_ERR_INTERNAL;
  } catch (const std::exception& err) {
    last_error = err.what();
    return PRYMSV_ERR_INTERNAL;
  }
}

void require(bool cond, const char* what) {
  if (!cond) prymsv::fail(prymsv::ErrorCode::InvalidArgument, what);
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

prymsv::Stratum to_stratum(prymsv_stratum s) {
  switch (s) {
    case PRYMSV_W4: return prymsv::Stratum::W4;
    case PRYMSV_W2: return prymsv::Stratum::W2;
    case PRYMSV_W03: return prymsv::Stratum::W03;
  }
  prymsv::fail(prymsv::ErrorCode::InvalidArgument, "unknown stratum");
}

const char* status_word(prymsv::ConjectureStatus s) {
  switch (s) {
    case prymsv::ConjectureStatus::Holds: return "holds";
    case prymsv::ConjectureStatus::Fails: return "fails";
    case prymsv::ConjectureStatus::Skipped: return "skipped";
  }
  return "?";
}

}  // namespace

extern "C" {

const char* prymsv_version(void) { return "0.1.0"; }

const char* prymsv_status_name(prymsv_status status) {
  if (status == PRYMSV_OK) return "Ok";
  return prymsv::error_name(static_cast<prymsv::ErrorCode>(static_cast<int>(status)));
}

const char* prymsv_last_error(void) { return last_error.c_str(); }

void prymsv_string_free(char* s) { std::free(s); }

prymsv_status prymsv_table_builtin(prymsv_table** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = new prymsv_table{prymsv::EulerTable::builtin()};
  });
}

prymsv_status prymsv_table_load(const char* path, prymsv_table** out) {
  return guarded([&] {
    require(out != nullptr && path != nullptr, "null argument");
    *out = new prymsv_table{prymsv::load_table(path, std::cerr)};
  });
}

void prymsv_table_free(prymsv_table* table) { delete table; }

prymsv_status prymsv_table_lookup(const prymsv_table* table, long long D,
                                  prymsv_stratum stratum, char** out) {
  return guarded([&] {
    require(table != nullptr && out != nullptr, "null argument");
    *out = dup(prymsv::to_string(table->table.lookup(D, to_stratum(stratum))));
  });
}

prymsv_status prymsv_chi_w03(long long D, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = dup(prymsv::to_string(prymsv::chi_W03(D)));
  });
}

prymsv_status prymsv_m_D(long long D, long long e, long long* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = prymsv::m_D(D, e);
  });
}

prymsv_status prymsv_b_D(long long D, int* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = prymsv::b_D(D);
  });
}

prymsv_status prymsv_chi_report_csv(const prymsv_table* table, long long dmin, long long dmax,
                                    char** out, int* all_match) {
  return guarded([&] {
    require(table != nullptr && out != nullptr, "null argument");
    std::ostringstream os;
    os << "D,chi_w03_computed,chi_w03_table,match\n";
    bool ok = true;
    for (const auto& row : prymsv::chi_report(dmin, dmax, table->table)) {
      os << row.D << "," << prymsv::to_string(row.computed) << ","
         << (row.table ? prymsv::to_string(*row.table) : "-") << ","
         << (row.match ? (*row.match ? "true" : "false") : "-") << "\n";
      if (row.match && !*row.match) ok = false;
    }
    *out = dup(os.str());
    if (all_match) *all_match = ok ? 1 : 0;
  });
}

prymsv_status prymsv_sv_json(const prymsv_table* table, long long D, int as_array, char** out) {
  return guarded([&] {
    require(table != nullptr && out != nullptr, "null argument");
    auto results = prymsv::sv_constants(D, table->table);
    std::string s;
    if (as_array) {
      s = "[";
      for (std::size_t i = 0; i < results.size(); ++i)
        s += (i ? "," : "") + prymsv::to_json(results[i]);
      s += "]\n";
    } else {
      for (const auto& r : results) s += prymsv::to_json(r) + "\n";
    }
    *out = dup(s);
  });
}

prymsv_status prymsv_conjecture_csv(const prymsv_table* table, long long dmax, char** out,
                                    long long counts[3]) {
  return guarded([&] {
    require(table != nullptr && out != nullptr, "null argument");
    auto rep = prymsv::check_conjecture(5, dmax, table->table);
    std::ostringstream os;
    os << "D,status,c1,c2,c3,reason\n";
    for (const auto& row : rep.rows) {
      os << row.D << "," << status_word(row.status) << ",";
      if (row.constants)
        os << prymsv::to_string(row.constants->c1) << "," << prymsv::to_string(row.constants->c2)
           << "," << prymsv::to_string(row.constants->c3);
      else
        os << "-,-,-";
      os << "," << (row.reason.empty() ? "-" : row.reason) << "\n";
    }
    *out = dup(os.str());
    if (counts) {
      counts[0] = rep.holds;
      counts[1] = rep.fails;
      counts[2] = rep.skipped;
    }
  });
}

prymsv_status prymsv_verify_modular_json(long long nmax, char** out, int* ok) {
  return guarded([&] {
    require(out != nullptr, "null output");
    auto rep = prymsv::verify_vanishing(nmax);
    *out = dup(prymsv::to_json(rep) + "\n");
    if (ok) *ok = rep.ok() ? 1 : 0;
  });
}

prymsv_status prymsv_verify_identity_json(long long dmax, char** out, int* ok) {
  return guarded([&] {
    require(out != nullptr, "null output");
    auto rep = prymsv::verify_identity(dmax);
    *out = dup(prymsv::to_json(rep) + "\n");
    if (ok) *ok = rep.ok() ? 1 : 0;
  });
}

prymsv_status prymsv_verify_eigen_csv(long long dmax, char** out, int* ok) {
  return guarded([&] {
    require(out != nullptr, "null output");
    std::ostringstream os;
    os << "D,kind,a,b,d,e,check,pass\n";
    bool all = true;
    for (const auto& r : prymsv::verify_eigen(dmax)) {
      os << r.D << "," << prymsv::kind_name(r.kind) << "," << r.a << "," << r.b << "," << r.d
         << "," << r.e << "," << r.check << "," << (r.pass ? "true" : "false") << "\n";
      all = all && r.pass;
    }
    *out = dup(os.str());
    if (ok) *ok = all ? 1 : 0;
  });
}

prymsv_status prymsv_protos_csv(long long D, const char* kind, char** out) {
  return guarded([&] {
    require(out != nullptr && kind != nullptr, "null argument");
    std::string s = "D,kind,a,b,d,e\n";
    switch (prymsv::parse_kind(kind)) {
      case prymsv::ProtoKind::Cyl:
        for (const auto& p : prymsv::enumerate_cyl(D)) s += prymsv::to_csv_row(p) + "\n";
        break;
      case prymsv::ProtoKind::Triple:
        for (const auto& p : prymsv::enumerate_triple(D)) s += prymsv::to_csv_row(p) + "\n";
        break;
      case prymsv::ProtoKind::Split:
        for (const auto& p : prymsv::enumerate_split(D)) s += prymsv::to_csv_row(p) + "\n";
        break;
    }
    *out = dup(s);
  });
}

prymsv_status prymsv_surface_new(long long D, long long a, long long b, long long d, long long e,
                                 const double* slit, prymsv_surface** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    prymsv::TripleProto p{a, b, d, e, e * e + 8 * a * d};
    if (p.D != D || !prymsv::is_valid(p))
      prymsv::fail(prymsv::ErrorCode::InvalidPrototype,
                   "not a triple-of-tori prototype of discriminant " + std::to_string(D));
    prymsv::Vec2 t = slit ? prymsv::Vec2{slit[0], slit[1]} : prymsv::default_slit(p);
    *out = new prymsv_surface{prymsv::build_slit_triple(p, t)};
  });
}

void prymsv_surface_free(prymsv_surface* surface) { delete surface; }

prymsv_status prymsv_surface_area(const prymsv_surface* surface, double* out) {
  return guarded([&] {
    require(surface != nullptr && out != nullptr, "null argument");
    *out = surface->surface.area;
  });
}

prymsv_status prymsv_surface_num_triangles(const prymsv_surface* surface, int* out) {
  return guarded([&] {
    require(surface != nullptr && out != nullptr, "null argument");
    *out = surface->surface.num_triangles();
  });
}

prymsv_status prymsv_surface_count_json(const prymsv_surface* surface, double R, double tol,
                                        char** out) {
  return guarded([&] {
    require(surface != nullptr && out != nullptr, "null argument");
    require(R > 0, "radius must be positive");
    double t = tol < 0 ? 1e-9 * R : tol;
    prymsv::FlatSurface s = surface->surface;
    prymsv::make_delaunay(s);
    *out = dup(prymsv::to_json(prymsv::estimate_sv(s, R, t)) + "\n");
  });
}

}  // extern "C"
