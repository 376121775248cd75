// Acceptance checks. With no argument every criterion runs; with a number
// only that one. Prints one PASS/FAIL line per criterion and exits nonzero
// if any of them failed.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bk/bimodules.hpp"
#include "bk/io.hpp"
#include "bk/verify.hpp"
#include "bk/web.hpp"

using namespace bk;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Result {
  bool pass = true;
  std::string detail;
  void expect(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "MISMATCH ") + what;
  }
};

std::string str(const SuiteReport& r) {
  std::ostringstream s;
  s << r.name << " " << r.checks << " checks, " << r.failures << " failures";
  return s.str();
}

Result suites(const std::vector<std::string>& names, const VerifyOptions& opt, double budget = 0) {
  Result res;
  for (const auto& n : names) {
    auto t0 = Clock::now();
    SuiteReport r = run_suite(n, opt);
    double dt = seconds_since(t0);
    std::ostringstream s;
    s << str(r) << " in " << dt << " s";
    res.expect(r.ok() && r.checks > 0, s.str());
    if (budget > 0) res.expect(dt < budget, "runtime under " + std::to_string(static_cast<int>(budget)) + " s");
    for (const auto& c : r.counterexamples) res.detail += "; counterexample " + c.dump();
  }
  return res;
}

Result merge_table() {
  Result res;
  auto t0 = Clock::now();
  Algebra alg(Block(0, "**"));
  int e = alg.index_of(Weight(0, "v^"), Weight(0, "v^"), Weight(0, "v^"));
  int x = alg.index_of(Weight(0, "v^"), Weight(0, "^v"), Weight(0, "v^"));
  Vec ee = alg.mult(e, e), ex = alg.mult(e, x), xe = alg.mult(x, e), xx = alg.mult(x, x);
  double dt = seconds_since(t0);
  res.expect(ee == Vec{{e, 1}}, "e*e = e");
  res.expect(ex == Vec{{x, 1}}, "e*X = X");
  res.expect(xe == Vec{{x, 1}}, "X*e = X");
  res.expect(xx.empty(), "X*X = 0");
  res.expect(dt < 1e-3, "runtime " + std::to_string(dt * 1e3) + " ms < 1 ms");
  return res;
}

Result bimodule_fixture() {
  Result res;
  Bimodule m(parse_matching("**ox;+a_i@2"));
  std::vector<int> deg;
  for (int k = 0; k < static_cast<int>(m.dimension()); ++k) deg.push_back(m.element(k).degree);
  std::sort(deg.begin(), deg.end());
  std::string ds;
  for (int d : deg) ds += (ds.empty() ? "" : ",") + std::to_string(d);
  res.expect(m.dimension() == 6, "dimension " + std::to_string(m.dimension()));
  res.expect(deg == std::vector<int>{-2, -1, 0, 0, 1, 2}, "degrees {" + ds + "}");
  return res;
}

int circle_distance(const Weight& l, const Weight& m, int x) {
  CircleDiagram sh = stack(canonical_cup(l), canonical_cap(m));
  return component_distance(sh, sh.component_of(x));
}

Result ipe_fixtures() {
  Result res;
  Weight nested(0, "vv^^");
  int n_ipe = ipe(nested, nested, 0), n_minus = ipe_minus_nested(nested, nested, 0);
  res.expect(n_ipe == 2, "nested pair ipe " + std::to_string(n_ipe) + " (want 2)");
  res.expect(n_minus == 1, "nested pair ipe_minus_nested " + std::to_string(n_minus) + " (want 1)");

  Weight hl(0, "v^v^"), hm(0, "vv^^");
  int hd = circle_distance(hl, hm, 0), hi = ipe(hl, hm, 0);
  res.expect(hd == 6, "H-shape d " + std::to_string(hd) + " (want 6)");
  res.expect(hi == 2, "H-shape ipe " + std::to_string(hi) + " (want 2)");

  Weight cl(0, "v^v^v^"), cm(0, "vv^v^^");
  int cd = circle_distance(cl, cm, 0), ci = ipe(cl, cm, 0);
  res.expect(cd == 10, "C-shape d " + std::to_string(cd) + " (want 10)");
  res.expect(ci == 1, "C-shape ipe " + std::to_string(ci) + " (want 1)");
  res.detail += "; closed formula gives H " + std::to_string(ipe_formula(hd, {})) + ", C " + std::to_string(ipe_formula(cd, {}));
  return res;
}

Result foam_constants() {
  Result res;
  res.expect(foam_degree(1, 1, 2) == 2, "dotted cup 2");
  res.expect(foam_degree(1, 0, 4) == 1, "saddle 1");
  res.expect(foam_degree(1, 0, 0) == -1, "cup/cap -1");
  res.expect(shift_d(LabelVector(0, {1, 1})) == 1, "shift_d(1,1) = 1");
  res.expect(eval_dotted_sphere(1, 0) == 1 && eval_dotted_sphere(0, 1) == -1 && eval_dotted_sphere(2, 0) == 0, "dotted spheres 1, -1, 0");
  return res;
}

VerifyOptions defaults() {
  VerifyOptions opt;
  opt.max_stars = 6;
  opt.max_crosses = 1;
  return opt;
}

Result run(int k) {
  VerifyOptions opt = defaults();
  switch (k) {
    case 1:
      return merge_table();
    case 2:
      return bimodule_fixture();
    case 3:
      return ipe_fixtures();
    case 4:
      return foam_constants();
    case 5:
      return suites({"assoc"}, opt, 60);
    case 6:
      opt.samples = 10000;
      return suites({"order"}, opt);
    case 7:
      return suites({"grading", "ipe"}, opt);
    case 8:
      return suites({"signs"}, opt);
    case 9:
      opt.max_stars = 4;
      return suites({"bimodule", "empty"}, opt);
    case 10:
      return suites({"degree"}, opt);
    default:
      std::fprintf(stderr, "unknown criterion %d\n", k);
      std::exit(2);
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  if (argc > 1)
    which.push_back(std::atoi(argv[1]));
  else
    for (int k = 1; k <= 10; ++k) which.push_back(k);
  bool all = true;
  for (int k : which) {
    Result r;
    try {
      r = run(k);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    all = all && r.pass;
    std::printf("%s %d: %s\n", r.pass ? "PASS" : "FAIL", k, r.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
