#include "chartab/chartab.h"

#include <doctest.h>

#include <string>

namespace {

std::string fixture(const std::string& rel) { return std::string(CHARTAB_FIXTURE_DIR) + "/" + rel; }

// Takes ownership of a string returned through the C API.
std::string take(char* s)
{
  std::string out = s ? s : "";
  chartab_string_free(s);
  return out;
}

chartab_group* load(const std::string& name)
{
  chartab_group* g = nullptr;
  REQUIRE(chartab_group_load(fixture(name + ".gens").c_str(), &g) == CHARTAB_OK);
  return g;
}

} // namespace

TEST_CASE("status names and null handling")
{
  CHECK(std::string(chartab_status_name(CHARTAB_OK)) == "ok");
  CHECK(std::string(chartab_status_name(CHARTAB_E_VERIFY)) == "verification failed");
  chartab_group* g = nullptr;
  CHECK(chartab_group_load(nullptr, &g) == CHARTAB_E_ARGUMENT);
  CHECK(std::string(chartab_last_error()) == "null argument");
  CHECK(chartab_group_order(nullptr) == 0);
  CHECK(chartab_table_size(nullptr) == 0);
  CHECK(chartab_table_divergences(nullptr, nullptr, -1) == 0);
  chartab_group_free(nullptr);
  chartab_table_free(nullptr);
  chartab_string_free(nullptr);
}

TEST_CASE("group loading errors")
{
  chartab_group* g = nullptr;
  CHECK(chartab_group_load(fixture("missing.gens").c_str(), &g) == CHARTAB_E_IO);
  CHECK(g == nullptr);
  CHECK(chartab_group_from_text("degree: 4\n(1,7)\n", &g) == CHARTAB_E_PARSE);
  CHECK(std::string(chartab_last_error()).find("line 2") != std::string::npos);
  REQUIRE(chartab_group_from_text("degree: 4\n(1,2)(3,4)\n(1,3)(2,4)\n", &g) == CHARTAB_OK);
  CHECK(chartab_group_order(g) == 4);
  char* detail = nullptr;
  CHECK(chartab_group_check_sharp(g, 1, &detail) == CHARTAB_OK);
  take(detail);
  CHECK(chartab_group_check_sharp(g, 2, &detail) == CHARTAB_E_VERIFY);
  take(detail);
  chartab_group_free(g);
}

TEST_CASE("classes")
{
  chartab_group* g = load("g11");
  CHECK(chartab_group_degree(g) == 11);
  CHECK(chartab_group_order(g) == 7920);
  CHECK(chartab_group_class_count(g) == 10);
  char* out = nullptr;
  REQUIRE(chartab_group_render_classes(g, "g11", CHARTAB_FORMAT_TEXT, &out) == CHARTAB_OK);
  CHECK(take(out).rfind("g11: degree 11, order 7920, 10 classes", 0) == 0);
  char* diff = nullptr;
  CHECK(chartab_group_compare_classes(g, fixture("golden/g11.json").c_str(), &diff) == CHARTAB_OK);
  take(diff);
  CHECK(chartab_group_compare_classes(g, fixture("golden/g10.json").c_str(), &diff) == CHARTAB_E_VERIFY);
  CHECK_FALSE(take(diff).empty());
  CHECK(chartab_group_sylow(g, 7, 1, CHARTAB_FORMAT_TEXT, &out) == CHARTAB_E_ARGUMENT);
  chartab_group_free(g);
}

TEST_CASE("derive, render and compare")
{
  chartab_group* g = load("g10");
  chartab_table* t = nullptr;
  char* log = nullptr;
  REQUIRE(chartab_derive(g, "g10", fixture("golden/steps.json").c_str(), &t, &log) == CHARTAB_OK);
  CHECK(log == nullptr);
  CHECK(chartab_table_size(t) == 8);

  char* out = nullptr;
  REQUIRE(chartab_table_render(t, CHARTAB_FORMAT_CSV, &out) == CHARTAB_OK);
  CHECK(take(out).rfind("name,1^10,", 0) == 0);
  REQUIRE(chartab_table_log(t, CHARTAB_FORMAT_TEXT, &out) == CHARTAB_OK);
  CHECK(take(out).find("STEP 1: ") != std::string::npos);
  CHECK(chartab_table_log(t, CHARTAB_FORMAT_CSV, &out) == CHARTAB_E_ARGUMENT);

  char* report = nullptr;
  CHECK(chartab_table_check(t, &report) == CHARTAB_OK);
  CHECK_FALSE(take(report).empty());
  REQUIRE(chartab_table_structure(t, CHARTAB_FORMAT_JSON, &out) == CHARTAB_OK);
  CHECK(take(out).find("\"index2_kernel\": 360") != std::string::npos);
  CHECK(chartab_table_structure(t, CHARTAB_FORMAT_CSV, &out) == CHARTAB_E_ARGUMENT);

  char* diff = nullptr;
  CHECK(chartab_table_compare_golden(t, fixture("golden/g10.json").c_str(), &diff) == CHARTAB_OK);
  take(diff);
  CHECK(chartab_table_divergences(t, "inner_product", -1) == 0);
  chartab_table_free(t);
  chartab_group_free(g);
}

TEST_CASE("G12 divergence counts through the C API")
{
  chartab_group* g = load("g12");
  chartab_table* t = nullptr;
  REQUIRE(chartab_derive(g, "g12", fixture("golden/steps.json").c_str(), &t, nullptr) == CHARTAB_OK);
  CHECK(chartab_table_divergences(t, nullptr, 1) == 2);
  CHECK(chartab_table_divergences(t, "inner_product", 0) == 4);
  char* diff = nullptr;
  CHECK(chartab_table_compare_golden(t, fixture("golden/g12.json").c_str(), &diff) == CHARTAB_E_VERIFY);
  CHECK(take(diff).find("chi_8 at 4^2") != std::string::npos);
  chartab_table_free(t);
  chartab_group_free(g);
}

TEST_CASE("derivation failures")
{
  chartab_group* g = load("g10");
  chartab_table* t = nullptr;
  char* log = nullptr;
  CHECK(chartab_derive(g, "g13", nullptr, &t, &log) == CHARTAB_E_ARGUMENT);
  CHECK(chartab_derive(g, "g11", nullptr, &t, &log) == CHARTAB_E_VERIFY);
  CHECK(t == nullptr);
  CHECK(std::string(chartab_last_error()).find("g9:") != std::string::npos);
  take(log);
  CHECK(chartab_derive(g, "g10", fixture("missing.json").c_str(), &t, nullptr) == CHARTAB_E_IO);
  chartab_group_free(g);
}

TEST_CASE("Murnaghan-Nakayama values")
{
  long v = 0;
  REQUIRE(chartab_mn_value("9,3", "2,2,2,2,1,1,1,1", &v) == CHARTAB_OK);
  CHECK(v == 10);
  CHECK(chartab_mn_value("3,2", "4", &v) == CHARTAB_E_ARGUMENT);
  CHECK(chartab_mn_value("3,,2", "5", &v) == CHARTAB_E_PARSE);
  CHECK(chartab_mn_value(nullptr, "5", &v) == CHARTAB_E_ARGUMENT);
}
