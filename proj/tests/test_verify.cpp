#include <doctest.h>

#include <string>

#include "bk/errors.hpp"
#include "bk/verify.hpp"

using namespace bk;

TEST_CASE("small blocks") {
  auto bs = small_blocks(4, 1);
  REQUIRE_FALSE(bs.empty());
  CHECK(bs.front() == Block());
  // 0, 2 or 4 stars, then no cross or one cross in any of the n + 1 slots.
  CHECK(bs.size() == (1 + 1) + (1 + 3) + (1 + 5));
  for (const auto& b : bs) {
    CHECK(b.balanced());
    CHECK(b.count('o') == 0);
    CHECK(b.crosses() <= 1);
    CHECK(static_cast<int>(b.stars().size()) <= 4);
  }
}

TEST_CASE("every suite passes on a small range and is deterministic") {
  VerifyOptions opt;
  opt.max_stars = 4;
  opt.max_crosses = 1;
  opt.samples = 200;
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    SuiteReport r = run_suite(name, opt);
    CHECK(r.ok());
    CHECK(r.checks > 0);
    CHECK(r.name == name);
    CHECK(report_json(run_suite(name, opt)) == report_json(r));
    CHECK(report_ascii(r).find(name) != std::string::npos);
  }
}

TEST_CASE("parallel runs agree with serial runs") {
  VerifyOptions opt;
  opt.max_stars = 4;
  opt.samples = 300;
  VerifyOptions par = opt;
  par.jobs = 3;
  for (const char* name : {"assoc", "order", "signs"}) CHECK(report_json(run_suite(name, par)) == report_json(run_suite(name, opt)));
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_suite("nope", VerifyOptions{}), DomainError); }
