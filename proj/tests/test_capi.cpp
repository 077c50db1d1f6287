#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "prymsv/prymsv.h"

namespace {

// Takes ownership of a library string.
std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  prymsv_string_free(s);
  return out;
}

struct Table {
  prymsv_table* t = nullptr;
  Table() { REQUIRE(prymsv_table_builtin(&t) == PRYMSV_OK); }
  ~Table() { prymsv_table_free(t); }
};

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(prymsv_version()) == "0.1.0");
  CHECK(std::string(prymsv_status_name(PRYMSV_OK)) == "Ok");
  CHECK(std::string(prymsv_status_name(PRYMSV_ERR_SQUARE_DISCRIMINANT)) ==
        "SquareDiscriminant");
  CHECK(std::string(prymsv_status_name(PRYMSV_ERR_INTERNAL)) == "Internal");
}

TEST_CASE("exact quantities") {
  char* out = nullptr;
  REQUIRE(prymsv_chi_w03(17, &out) == PRYMSV_OK);
  CHECK(take(out) == "-4/3");
  CHECK(prymsv_chi_w03(16, &out) == PRYMSV_ERR_SQUARE_DISCRIMINANT);
  CHECK(std::string(prymsv_last_error()).find("16") != std::string::npos);
  CHECK(prymsv_chi_w03(13, &out) == PRYMSV_ERR_UNSUPPORTED_RESIDUE);
  CHECK(prymsv_chi_w03(17, nullptr) == PRYMSV_ERR_INVALID_ARGUMENT);
  long long m = 0;
  REQUIRE(prymsv_m_D(33, 1, &m) == PRYMSV_OK);
  CHECK(m == 7);
  CHECK(prymsv_m_D(33, 2, &m) == PRYMSV_ERR_RESIDUE_MISMATCH);
  int b = 0;
  REQUIRE(prymsv_b_D(20, &b) == PRYMSV_OK);
  CHECK(b == 5);
  CHECK(prymsv_b_D(17, &b) == PRYMSV_ERR_NOT_DIVISIBLE_BY_4);
  REQUIRE(prymsv_chi_w03(8, &out) == PRYMSV_OK);
  CHECK(take(out) == "-1/6");
  CHECK(std::string(prymsv_last_error()).empty());
}

TEST_CASE("tables") {
  Table t;
  char* out = nullptr;
  REQUIRE(prymsv_table_lookup(t.t, 12, PRYMSV_W4, &out) == PRYMSV_OK);
  CHECK(take(out) == "-5/6");
  CHECK(prymsv_table_lookup(t.t, 21, PRYMSV_W4, &out) == PRYMSV_ERR_MISSING_TABLE_ENTRY);
  prymsv_table* loaded = nullptr;
  CHECK(prymsv_table_load("/nonexistent.csv", &loaded) == PRYMSV_ERR_IO);
  CHECK(loaded == nullptr);

  std::string path = "capi_table_test.csv";
  {
    std::ofstream f(path);
    f << "D,chi_w4,chi_w2,chi_w03\n52,-,-21/2,-\n";
  }
  REQUIRE(prymsv_table_load(path.c_str(), &loaded) == PRYMSV_OK);
  REQUIRE(prymsv_table_lookup(loaded, 52, PRYMSV_W2, &out) == PRYMSV_OK);
  CHECK(take(out) == "-21/2");
  prymsv_table_free(loaded);
  {
    std::ofstream f(path);
    f << "52,-,oops,-\n";
  }
  CHECK(prymsv_table_load(path.c_str(), &loaded) == PRYMSV_ERR_PARSE);
  std::remove(path.c_str());
}

TEST_CASE("reports") {
  Table t;
  char* out = nullptr;
  int ok = 0;
  REQUIRE(prymsv_chi_report_csv(t.t, 8, 48, &out, &ok) == PRYMSV_OK);
  std::string csv = take(out);
  CHECK(ok == 1);
  CHECK(csv.rfind("D,chi_w03_computed,chi_w03_table,match\n", 0) == 0);
  CHECK(csv.find("17,-4/3,-4/3,true\n") != std::string::npos);

  REQUIRE(prymsv_sv_json(t.t, 17, 1, &out) == PRYMSV_OK);
  auto arr = nlohmann::json::parse(take(out));
  REQUIRE(arr.size() == 2);
  CHECK(arr[0]["c1"] == "25/9");
  CHECK(arr[1]["component"] == "minus");
  REQUIRE(prymsv_sv_json(t.t, 48, 0, &out) == PRYMSV_OK);
  auto line = nlohmann::json::parse(take(out));
  CHECK(line["b_D"] == 4);
  CHECK(prymsv_sv_json(t.t, 8, 0, &out) == PRYMSV_ERR_OUTSIDE_HYPOTHESES);

  long long counts[3] = {0, 0, 0};
  REQUIRE(prymsv_conjecture_csv(t.t, 50, &out, counts) == PRYMSV_OK);
  take(out);
  CHECK(counts[0] == 11);
  CHECK(counts[1] == 0);

  REQUIRE(prymsv_verify_modular_json(200, &out, &ok) == PRYMSV_OK);
  CHECK(take(out) == "{\"N\":200,\"violations\":[]}\n");
  CHECK(ok == 1);
  REQUIRE(prymsv_verify_identity_json(500, &out, &ok) == PRYMSV_OK);
  take(out);
  CHECK(ok == 1);
  REQUIRE(prymsv_verify_eigen_csv(40, &out, &ok) == PRYMSV_OK);
  CHECK(take(out).rfind("D,kind,a,b,d,e,check,pass\n", 0) == 0);
  CHECK(ok == 1);

  REQUIRE(prymsv_protos_csv(8, "split", &out) == PRYMSV_OK);
  CHECK(take(out) == "D,kind,a,b,d,e\n8,split,1,0,1,-2\n8,split,2,0,1,0\n");
  CHECK(prymsv_protos_csv(8, "bogus", &out) == PRYMSV_ERR_INVALID_ARGUMENT);
  CHECK(prymsv_protos_csv(13, "triple", &out) == PRYMSV_ERR_UNSUPPORTED_RESIDUE);
}

TEST_CASE("surfaces") {
  prymsv_surface* s = nullptr;
  double slit[2] = {0.11, 0.073};
  CHECK(prymsv_surface_new(8, 1, 0, 1, 1, slit, &s) == PRYMSV_ERR_INVALID_PROTOTYPE);
  CHECK(prymsv_surface_new(12, 1, 0, 1, 0, slit, &s) == PRYMSV_ERR_INVALID_PROTOTYPE);
  double long_slit[2] = {0.6, 0.01};
  CHECK(prymsv_surface_new(8, 1, 0, 1, 0, long_slit, &s) == PRYMSV_ERR_SLIT_TOO_LONG);
  double flat[2] = {0.1, 0.0};
  CHECK(prymsv_surface_new(8, 1, 0, 1, 0, flat, &s) == PRYMSV_ERR_DEGENERATE_DIRECTION);
  REQUIRE(prymsv_surface_new(8, 1, 0, 1, 0, slit, &s) == PRYMSV_OK);
  double area = 0;
  REQUIRE(prymsv_surface_area(s, &area) == PRYMSV_OK);
  CHECK(area == doctest::Approx(4.0));
  int tris = 0;
  REQUIRE(prymsv_surface_num_triangles(s, &tris) == PRYMSV_OK);
  CHECK(tris == 12);
  char* out = nullptr;
  REQUIRE(prymsv_surface_count_json(s, 0.14, -1, &out) == PRYMSV_OK);
  auto j = nlohmann::json::parse(take(out));
  CHECK(j["families"]["3"] == 1);
  CHECK(j["families"]["1"] == 0);
  CHECK(prymsv_surface_count_json(s, 0, -1, &out) == PRYMSV_ERR_INVALID_ARGUMENT);
  prymsv_surface_free(s);

  REQUIRE(prymsv_surface_new(8, 1, 0, 1, 0, nullptr, &s) == PRYMSV_OK);
  REQUIRE(prymsv_surface_count_json(s, 5, -1, &out) == PRYMSV_OK);
  auto k = nlohmann::json::parse(take(out));
  CHECK(k["R"] == 5.0);
  CHECK(k["area"].get<double>() == doctest::Approx(4.0));
  prymsv_surface_free(s);
  prymsv_surface_free(nullptr);
  prymsv_table_free(nullptr);
}
