#include <doctest.h>

#include <string>
#include <vector>

#include "bk/arc_diagrams.hpp"
#include "bk/errors.hpp"
#include "oracles.hpp"

using namespace bk;

namespace {

const std::vector<std::string> kBlocks = {"**", "****", "*x*", "**x**", "******", "*o**x*", "x**x", "********"};

std::vector<std::string> all_sign_words(const std::string& seq) {
  std::vector<std::string> out;
  std::vector<int> stars;
  for (int i = 0; i < static_cast<int>(seq.size()); ++i)
    if (seq[static_cast<std::size_t>(i)] == '*') stars.push_back(i);
  for (int m = 0; m < (1 << stars.size()); ++m) {
    std::string w = seq;
    for (std::size_t k = 0; k < stars.size(); ++k) w[static_cast<std::size_t>(stars[k])] = ((m >> k) & 1) ? '^' : 'v';
    out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("canonical cup diagram matches the stack oracle, balanced or not") {
  for (const auto& seq : kBlocks)
    for (const auto& w : all_sign_words(seq)) {
      CAPTURE(w);
      std::vector<int> rays;
      auto want = oracle::cups(w, &rays);
      CupDiagram c = canonical_cup(Weight(0, w));
      REQUIRE(c.cups.size() == want.size());
      for (std::size_t k = 0; k < want.size(); ++k) {
        CHECK(c.cups[k].a == want[k].first);
        CHECK(c.cups[k].b == want[k].second);
      }
      CHECK(c.rays == rays);
      CapDiagram d = canonical_cap(Weight(0, w));
      CHECK(d.caps == c.cups);
      CHECK(reflect(c) == d);
      CHECK(reflect(d) == c);
      if (rays.empty()) CHECK(cup_weight(c) == Weight(0, w));
    }
}

TEST_CASE("make_cup_diagram rejects bad arcs") {
  Block b(0, "****");
  CHECK_NOTHROW(make_cup_diagram(b, {{0, 3}, {1, 2}}, {}));
  CHECK_THROWS_AS(make_cup_diagram(b, {{0, 2}, {1, 3}}, {}), DomainError);
  CHECK_THROWS_AS(make_cup_diagram(b, {{0, 3}}, {1, 2}), DomainError);
  CHECK_THROWS_AS(make_cup_diagram(b, {{0, 1}}, {}), DomainError);
  CHECK_THROWS_AS(make_cup_diagram(Block(0, "*x*"), {{0, 1}}, {2}), DomainError);
}

TEST_CASE("stacking: circles, lines and nesting") {
  auto one = stack(canonical_cup(Weight(0, "v^")), canonical_cap(Weight(0, "v^")));
  CHECK(one.circle_count() == 1);
  CHECK(one.line_count() == 0);

  auto nested = stack(canonical_cup(Weight(0, "vv^^")), canonical_cap(Weight(0, "vv^^")));
  REQUIRE(nested.circle_count() == 2);
  int inner = nested.component_of(1), outer = nested.component_of(0);
  CHECK(nested.inside(inner, outer));
  CHECK_FALSE(nested.inside(outer, inner));
  CHECK(nested.parent[static_cast<std::size_t>(inner)] == outer);
  CHECK(nested.parent[static_cast<std::size_t>(outer)] == -1);
  CHECK(nested.children(outer) == std::vector<int>{inner});

  auto lines = stack(canonical_cup(Weight(0, "^v")), canonical_cap(Weight(0, "^v")));
  CHECK(lines.circle_count() == 0);
  CHECK(lines.line_count() == 2);

  auto side = stack(canonical_cup(Weight(0, "v^v^")), canonical_cap(Weight(0, "v^v^")));
  CHECK(side.circle_count() == 2);
  CHECK_FALSE(side.inside(0, 1));
  CHECK_FALSE(side.inside(1, 0));

  CHECK_THROWS_AS(stack(canonical_cup(Weight(0, "v^")), canonical_cap(Weight(0, "vx^"))), DomainError);
}

TEST_CASE("circle counts, orientations and degrees against oracles") {
  for (const auto& seq : kBlocks) {
    auto ws = oracle::fillings(seq, true);
    for (const auto& l : ws)
      for (const auto& m : ws) {
        CAPTURE(l);
        CAPTURE(m);
        auto shape = stack(canonical_cup(Weight(0, l)), canonical_cap(Weight(0, m)));
        int n = oracle::circles(l, m);
        CHECK(shape.circle_count() == n);
        auto ors = orientations(shape);
        CHECK(ors.size() == (std::size_t{1} << n));
        for (const auto& o : ors) {
          std::string nu = o.nu.ascii(0, static_cast<int>(seq.size()) - 1);
          CHECK(is_oriented(shape, o.nu));
          CHECK(degree(o) == oracle::degree(l, nu, m));
          CHECK(degree(o) == degree_by_circles(o));
        }
        for (int k = 0; k < static_cast<int>(shape.components.size()); ++k) {
          int d = 0;
          for (const auto& a : shape.components[static_cast<std::size_t>(k)].cups) d += oracle::pos(seq, a.b) - oracle::pos(seq, a.a);
          for (const auto& a : shape.components[static_cast<std::size_t>(k)].caps) d += oracle::pos(seq, a.b) - oracle::pos(seq, a.a);
          CHECK(component_distance(shape, k) == d);
          CHECK(d % 4 == 2);
        }
      }
  }
}

TEST_CASE("orient_component puts the requested label on the rightmost vertex") {
  auto shape = stack(canonical_cup(Weight(0, "vv^^")), canonical_cap(Weight(0, "v^v^")));
  REQUIRE(shape.circle_count() == 1);
  Weight w = orient_component(shape, Weight(0, "vv^^"), 0, CircleState::Anticlockwise);
  CHECK(w == Weight(0, "v^v^"));
  Weight c = orient_component(shape, Weight(0, "vv^^"), 0, CircleState::Clockwise);
  CHECK(c == Weight(0, "^v^v"));
  CHECK(is_oriented(shape, c));
}
