#include <doctest.h>

#include <random>
#include <string>

#include "bk/algebra.hpp"
#include "bk/errors.hpp"
#include "oracles.hpp"

using namespace bk;

namespace {

// "lambda|nu|mu" over the block window starting at 0.
int at(const Algebra& alg, const std::string& s) {
  auto p1 = s.find('|'), p2 = s.rfind('|');
  int k = alg.index_of(Weight(0, s.substr(0, p1)), Weight(0, s.substr(p1 + 1, p2 - p1 - 1)), Weight(0, s.substr(p2 + 1)));
  REQUIRE(k >= 0);
  return k;
}

Vec term(const Algebra& alg, const std::string& s, Coeff c) { return {{at(alg, s), c}}; }

int degree_of(const Algebra& alg, int k) { return alg.element(k).degree; }

}  // namespace

TEST_CASE("vector helpers") {
  Vec a{{0, 1}, {2, 3}}, b{{0, -1}, {1, 4}};
  CHECK(add(a, b) == Vec{{1, 4}, {2, 3}});
  CHECK(add(a, b, 2) == Vec{{0, -1}, {1, 8}, {2, 3}});
  CHECK(reduce(Vec{{0, -1}, {1, 3}, {2, 7}}, 3) == Vec{{0, 2}, {2, 1}});
  CHECK(reduce(a, 0) == a);
}

TEST_CASE("basis counts against the circle oracle") {
  for (const char* seq : {"", "**", "****", "*x*", "**x**", "******", "x**x**"}) {
    CAPTURE(seq);
    Algebra alg(Block(0, seq));
    auto ws = oracle::fillings(seq, true);
    std::size_t want = 0;
    for (const auto& l : ws)
      for (const auto& m : ws) want += std::size_t{1} << oracle::circles(l, m);
    CHECK(alg.dimension() == want);
    CHECK(alg.weights().size() == ws.size());
  }
  CHECK(Algebra(Block()).dimension() == 1);
  CHECK(Algebra(Block(0, "**")).dimension() == 2);
  CHECK(Algebra(Block(0, "****")).dimension() == 12);
}

TEST_CASE("basis order and degrees on two stars") {
  Algebra alg(Block(0, "**"));
  REQUIRE(alg.dimension() == 2);
  CHECK(alg.element(0).nu == Weight(0, "^v"));
  CHECK(alg.element(0).degree == 2);
  CHECK(alg.element(1).nu == Weight(0, "v^"));
  CHECK(alg.element(1).degree == 0);
  CHECK(alg.poincare().str() == "1 + q^2");
  CHECK(Algebra(Block()).poincare().str() == "1");
  CHECK(Algebra(Block(0, "****")).poincare().str() == "2 + 2q + 4q^2 + 2q^3 + 2q^4");
}

TEST_CASE("two stars give the dual numbers") {
  Algebra alg(Block(0, "**"));
  int one = at(alg, "v^|v^|v^"), x = at(alg, "v^|^v|v^");
  CHECK(alg.mult(one, one) == Vec{{one, 1}});
  CHECK(alg.mult(one, x) == Vec{{x, 1}});
  CHECK(alg.mult(x, one) == Vec{{x, 1}});
  CHECK(alg.mult(x, x).empty());
  CHECK(alg.unit() == Vec{{one, 1}});
}

TEST_CASE("products with idempotents") {
  Algebra alg(Block(0, "****"));
  auto a = at(alg, "v^v^|v^v^|vv^^");
  auto b = at(alg, "vv^^|vv^^|vv^^");
  CHECK(alg.mult(a, b) == term(alg, "v^v^|v^v^|vv^^", 1));
  auto c = at(alg, "vv^^|v^v^|v^v^");
  CHECK(alg.mult(b, c) == term(alg, "vv^^|v^v^|v^v^", 1));
}

TEST_CASE("frozen products on four stars") {
  Algebra alg(Block(0, "****"));
  CHECK(alg.mult(at(alg, "v^v^|v^v^|vv^^"), at(alg, "vv^^|v^v^|v^v^")) ==
        add(term(alg, "v^v^|^vv^|v^v^", -1), term(alg, "v^v^|v^^v|v^v^", -1)));
  CHECK(alg.mult(at(alg, "v^v^|^v^v|vv^^"), at(alg, "vv^^|v^v^|v^v^")) == term(alg, "v^v^|^v^v|v^v^", -1));
  CHECK(alg.mult(at(alg, "vv^^|v^v^|v^v^"), at(alg, "v^v^|v^v^|vv^^")) ==
        add(term(alg, "vv^^|^v^v|vv^^", -1), term(alg, "vv^^|v^v^|vv^^", 1)));
  CHECK(alg.mult(at(alg, "vv^^|^v^v|v^v^"), at(alg, "v^v^|v^v^|vv^^")) == term(alg, "vv^^|^^vv|vv^^", 1));
  // Mismatched middle weights multiply to zero.
  CHECK(alg.mult(at(alg, "v^v^|v^v^|v^v^"), at(alg, "vv^^|vv^^|vv^^")).empty());
}

TEST_CASE("nested merge with sign -1 on six stars") {
  Algebra alg(Block(0, "******"));
  int nested_events = 0, minus = 0;
  auto obs = [&](const StepEvent& e) {
    CHECK((e.sign == 0 || e.sign == ((e.arc_exponent % 2 == 0) ? 1 : -1)));
    if (!e.step->nested || e.kind != SurgeryCase::MergeBothAnticlockwise) return;
    ++nested_events;
    int d = e.step->inner_length, s = e.step->saddle;
    REQUIRE((d - 2) % 4 == 0);
    int want = -(((d - 2) / 4) % 2 ? -1 : 1) * (s % 2 ? -1 : 1);
    CHECK(e.sign == want);
    minus += e.sign == -1 && d == 6;
  };
  CHECK(alg.mult(at(alg, "v^vv^^|v^vv^^|vv^v^^"), at(alg, "vv^v^^|vv^v^^|vvv^^^"), obs) ==
        term(alg, "v^vv^^|v^v^v^|vvv^^^", -1));
  CHECK(alg.mult(at(alg, "vv^^v^|vv^^v^|vv^v^^"), at(alg, "vv^v^^|vv^v^^|vvv^^^"), obs) ==
        term(alg, "vv^^v^|v^v^v^|vvv^^^", -1));
  CHECK(nested_events > 0);
  CHECK(minus >= 2);
}

TEST_CASE("structural properties on small blocks") {
  for (const char* seq : {"**", "****", "*x*", "**x**"}) {
    CAPTURE(seq);
    Algebra alg(Block(0, seq));
    int n = static_cast<int>(alg.dimension());
    Vec unit = alg.unit();
    for (int x = 0; x < n; ++x) {
      Vec vx{{x, 1}};
      CHECK(alg.mult(unit, vx) == vx);
      CHECK(alg.mult(vx, unit) == vx);
      for (int y = 0; y < n; ++y) {
        Vec xy = alg.mult(x, y);
        for (auto [k, c] : xy) CHECK(degree_of(alg, k) == degree_of(alg, x) + degree_of(alg, y));
        if (alg.mu_of(x) != alg.lambda_of(y)) CHECK(xy.empty());
        for (int z = 0; z < n; ++z) CHECK(alg.mult(xy, Vec{{z, 1}}) == alg.mult(vx, alg.mult(y, z)));
      }
    }
  }
}

TEST_CASE("surgery order does not change products") {
  Algebra alg(Block(0, "******"));
  std::mt19937_64 rng(7);
  int n = static_cast<int>(alg.dimension());
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int t = 0; t < 300; ++t) {
    int x = pick(rng), y = pick(rng);
    if (alg.mu_of(x) != alg.lambda_of(y)) continue;
    auto plan = alg.make_plan(alg.lambda_of(x), alg.mu_of(x), alg.mu_of(y), random_order(rng));
    CHECK(alg.mult(x, y, plan) == alg.mult(x, y));
  }
}

TEST_CASE("idempotents and modular products") {
  Algebra alg(Block(0, "****"));
  Vec sum;
  for (int l = 0; l < static_cast<int>(alg.weights().size()); ++l) {
    Vec e = alg.idempotent(l);
    CHECK(alg.mult(e, e) == e);
    sum = add(sum, e);
  }
  CHECK(sum == alg.unit());
  Vec x = term(alg, "v^v^|v^v^|vv^^", 1), y = term(alg, "vv^^|v^v^|v^v^", 1);
  CHECK(alg.mult(x, y, 3) == reduce(alg.mult(x, y), 3));
  CHECK(alg.mult(x, y, 3) == add(term(alg, "v^v^|^vv^|v^v^", 2), term(alg, "v^v^|v^^v|v^v^", 2)));
}
