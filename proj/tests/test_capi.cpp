#include <doctest.h>

#include <json.hpp>
#include <string>

#include "bk/bk.h"

using json = nlohmann::json;

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out = s;
  bk_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("algebra handle lifecycle") {
  bk_algebra* a = nullptr;
  REQUIRE(bk_algebra_new("**", &a) == BK_OK);
  size_t n = 0;
  CHECK(bk_algebra_dimension(a, &n) == BK_OK);
  CHECK(n == 2);

  char* out = nullptr;
  REQUIRE(bk_algebra_basis(a, BK_FORMAT_JSON, &out) == BK_OK);
  json basis = json::parse(take(out));
  REQUIRE(basis["basis"].size() == 2);
  CHECK(basis["basis"][0]["degree"] == 2);
  CHECK(basis["basis"][1]["degree"] == 0);

  REQUIRE(bk_algebra_poincare(a, &out) == BK_OK);
  CHECK(take(out) == "1 + q^2");

  REQUIRE(bk_algebra_mult(a, "0", "0", 0, BK_FORMAT_JSON, &out) == BK_OK);
  CHECK(json::parse(take(out))["terms"].empty());
  REQUIRE(bk_algebra_mult(a, "1", "0", 0, BK_FORMAT_ASCII, &out) == BK_OK);
  CHECK(take(out) == "[v^|^v|v^]\n");

  REQUIRE(bk_algebra_table(a, 0, BK_FORMAT_JSON, &out) == BK_OK);
  CHECK(json::parse(take(out))["products"].size() == 3);
  REQUIRE(bk_algebra_idempotents(a, BK_FORMAT_JSON, &out) == BK_OK);
  CHECK(json::parse(take(out))["idempotents"].size() == 1);
  bk_algebra_free(a);
  bk_algebra_free(nullptr);
}

TEST_CASE("errors are reported through status and message") {
  bk_algebra* a = nullptr;
  CHECK(bk_algebra_new("*", &a) == BK_ERR_PARSE);
  CHECK(a == nullptr);
  CHECK(std::string(bk_last_error()).size() > 0);
  CHECK(bk_algebra_new(nullptr, &a) == BK_ERR_NULL);
  CHECK(bk_algebra_new("**", nullptr) == BK_ERR_NULL);
  REQUIRE(bk_algebra_new("**", &a) == BK_OK);
  CHECK(std::string(bk_last_error()).empty());
  char* out = nullptr;
  CHECK(bk_algebra_mult(a, "7", "0", 0, BK_FORMAT_JSON, &out) == BK_ERR_DOMAIN);
  CHECK(out == nullptr);
  CHECK(bk_algebra_mult(a, "{", "0", 0, BK_FORMAT_JSON, &out) == BK_ERR_PARSE);
  CHECK(bk_algebra_basis(nullptr, BK_FORMAT_JSON, &out) == BK_ERR_NULL);
  bk_algebra_free(a);
  bk_bimodule* m = nullptr;
  CHECK(bk_bimodule_new("**ox;+a_i@1", &m) == BK_ERR_PARSE);
  CHECK(m == nullptr);
}

TEST_CASE("bimodule handle") {
  bk_bimodule* m = nullptr;
  REQUIRE(bk_bimodule_new("**ox;+a_i@2", &m) == BK_OK);
  size_t n = 0;
  CHECK(bk_bimodule_dimension(m, &n) == BK_OK);
  CHECK(n == 6);
  char* out = nullptr;
  REQUIRE(bk_bimodule_basis(m, BK_FORMAT_JSON, &out) == BK_OK);
  json j = json::parse(take(out));
  CHECK(j["basis"].size() == 6);
  CHECK(j["graded_dimension"] == "q^-2 + q^-1 + 2 + q + q^2");
  REQUIRE(bk_bimodule_act(m, nullptr, "0", nullptr, BK_FORMAT_JSON, &out) == BK_OK);
  CHECK(json::parse(take(out))["terms"].size() == 1);
  CHECK(bk_bimodule_act(m, nullptr, nullptr, nullptr, BK_FORMAT_JSON, &out) == BK_ERR_NULL);
  bk_bimodule_free(m);
}

TEST_CASE("generator words, ipe and verification") {
  char* out = nullptr;
  REQUIRE(bk_howe("**ox", "F2", BK_FORMAT_JSON, &out) == BK_OK);
  CHECK(take(out) == "null\n");
  REQUIRE(bk_howe("**ox", "E2", BK_FORMAT_JSON, &out) == BK_OK);
  CHECK(json::parse(take(out))["layers"].size() == 1);

  REQUIRE(bk_ipe_check("vv^^", "vv^^", BK_FORMAT_JSON, &out) == BK_OK);
  CHECK(json::parse(take(out)).dump().find("\"ipe\":2") != std::string::npos);

  bk_verify_options opt;
  bk_verify_options_default(&opt);
  CHECK(opt.max_stars == 6);
  CHECK(opt.max_crosses == 1);
  opt.max_stars = 4;
  opt.samples = 100;
  REQUIRE(bk_verify("assoc grading", &opt, BK_FORMAT_JSON, &out) == BK_OK);
  json r = json::parse(take(out));
  CHECK(r["pass"] == true);
  CHECK(r["suites"].size() == 2);
  CHECK(bk_verify("nope", &opt, BK_FORMAT_JSON, &out) == BK_ERR_PARSE);
  CHECK(std::string(bk_verify_suites()).find("assoc") != std::string::npos);
}
