#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "bk/bimodules.hpp"
#include "bk/errors.hpp"
#include "bk/io.hpp"

using namespace bk;

namespace {

std::vector<int> degrees(const Bimodule& m) {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(m.dimension()); ++k) out.push_back(m.element(k).degree);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("move kinds") {
  for (auto k : {MoveKind::PlusAlpha, MoveKind::MinusAlpha, MoveKind::PlusTwoAlpha, MoveKind::MinusTwoAlpha})
    CHECK(parse_move_kind(move_kind_name(k)) == k);
  CHECK(move_kind_name(MoveKind::PlusTwoAlpha) == "+2a_i");
  CHECK_THROWS_AS(parse_move_kind("+3a_i"), ParseError);
}

TEST_CASE("fitting single matchings") {
  Block b(0, "**ox");
  auto cup = fit_matching(b, MoveKind::PlusAlpha, 2);
  REQUIRE(cup);
  CHECK(cup->picture == Picture::Cup);
  CHECK(cup->target == Block(0, "****"));
  auto ray = fit_matching(b, MoveKind::MinusAlpha, 1);
  REQUIRE(ray);
  CHECK(ray->picture == Picture::RayRight);
  CHECK(ray->target == Block(0, "*o*x"));
  auto cap = fit_matching(b, MoveKind::PlusAlpha, 0);
  REQUIRE(cap);
  CHECK(cap->picture == Picture::Cap);
  CHECK(cap->target == Block(0, "xoox"));
  auto up = fit_matching(b, MoveKind::MinusAlpha, 3);
  REQUIRE(up);
  CHECK(up->picture == Picture::Cup);
  CHECK(up->target == Block(0, "**o**"));
  CHECK_FALSE(fit_matching(b, MoveKind::PlusAlpha, 1));
  auto empty = fit_matching(Block(0, "xo"), MoveKind::MinusTwoAlpha, 0);
  REQUIRE(empty);
  CHECK(empty->picture == Picture::Empty);
  CHECK(empty->target == Block(1, "x"));
  CHECK_THROWS_AS(make_matching(b, Block(0, "**xo"), MoveKind::PlusAlpha, 2), DomainError);
}

TEST_CASE("composition checks that layers chain") {
  auto a = *fit_matching(Block(0, "**ox"), MoveKind::PlusAlpha, 2);
  auto b = *fit_matching(Block(0, "****"), MoveKind::MinusAlpha, 2);
  auto t = compose({a, b});
  CHECK(t.blocks.size() == 3);
  CHECK(t.blocks.back() == Block(0, "**ox"));
  CHECK_THROWS_AS(compose({a, a}), DomainError);
  CHECK(identity_matching(Block(0, "**")).layers.empty());
}

TEST_CASE("bimodule of a single cup matching") {
  Bimodule m(parse_matching("**ox;+a_i@2"));
  CHECK(m.bottom().block() == Block(0, "**ox"));
  CHECK(m.top().block() == Block(0, "****"));
  CHECK(m.dimension() == 6);
  CHECK(m.shift() == 0);
  CHECK(degrees(m) == std::vector<int>{-2, -1, 0, 0, 1, 2});
  CHECK(m.graded_dimension().str() == "q^-2 + q^-1 + 2 + q + q^2");
}

TEST_CASE("downward reduction against hand tracing") {
  // Top caps traced down through the cup layer: the cap closing onto the
  // layer cup disappears, leaving the cap (0, 1) over the bottom line.
  Bimodule m(parse_matching("**ox;+a_i@2"));
  for (int u = 0; u < static_cast<int>(m.top().weights().size()); ++u) {
    CapDiagram d = m.downward_reduction(u);
    CHECK(d.block == Block(0, "**ox"));
    CHECK(d.caps == std::vector<Arc>{{0, 1}});
    CHECK(d.rays.empty());
    for (int l = 0; l < static_cast<int>(m.bottom().weights().size()); ++l) CHECK(m.downward_reduction_with_bottom(l, u) == d);
  }
  CupDiagram up = m.upward_reduction(0);
  CHECK(up.block == Block(0, "****"));
  CHECK(up.cups == std::vector<Arc>{{0, 1}, {2, 3}});
}

TEST_CASE("actions: unit, degree additivity and associativity") {
  for (const char* lit : {"**ox;+a_i@2", "**ox;+a_i@2;-a_i@2", "**ox;-a_i@1", "**ox;+a_i@0"}) {
    CAPTURE(lit);
    Bimodule m(parse_matching(lit));
    const Algebra& a = m.bottom();
    const Algebra& b = m.top();
    for (int k = 0; k < static_cast<int>(m.dimension()); ++k) {
      Vec vk{{k, 1}};
      CHECK(m.act_left(a.unit(), vk) == vk);
      CHECK(m.act_right(vk, b.unit()) == vk);
      for (int x = 0; x < static_cast<int>(a.dimension()); ++x) {
        Vec xm = m.act_left(x, k);
        for (auto [j, c] : xm) CHECK(m.element(j).degree == m.element(k).degree + a.element(x).degree);
        for (int y = 0; y < static_cast<int>(b.dimension()); ++y)
          CHECK(m.act_right(xm, Vec{{y, 1}}) == m.act_left(Vec{{x, 1}}, m.act_right(k, y)));
      }
    }
  }
}

TEST_CASE("left action is compatible with the algebra product") {
  Bimodule m(parse_matching("**ox;+a_i@2"));
  const Algebra& a = m.bottom();
  for (int k = 0; k < static_cast<int>(m.dimension()); ++k)
    for (int x = 0; x < static_cast<int>(a.dimension()); ++x)
      for (int y = 0; y < static_cast<int>(a.dimension()); ++y)
        CHECK(m.act_left(a.mult(x, y), Vec{{k, 1}}) == m.act_left(Vec{{x, 1}}, m.act_left(y, k)));
}

TEST_CASE("identity matchings shift the algebra grading by the cup count") {
  for (const char* seq : {"**", "****", "*x*"}) {
    Block blk(0, seq);
    Bimodule m(identity_matching(blk));
    Algebra alg(blk);
    CHECK(m.dimension() == alg.dimension());
    int cups = static_cast<int>(alg.cup_diagrams().front().cups.size());
    CHECK(m.graded_dimension() * Laurent::monomial(cups) == alg.poincare());
  }
}

TEST_CASE("empty moves") {
  Bimodule m(parse_matching("xo;-2a_i@0"));
  CHECK(m.shift() == 1);
  CHECK(m.dimension() == 1);
  CHECK(m.graded_dimension().str() == "1");
  auto c = m.circles(0, 0);
  REQUIRE(c.size() == 1);
  CHECK(m.internal(c[0]));
}

TEST_CASE("generator words") {
  Block b(0, "**ox");
  auto e2 = howe_cm(b, "E2");
  REQUIRE(e2);
  CHECK(*e2 == parse_matching("**ox;+a_i@2"));
  CHECK_FALSE(howe_cm(b, "F2"));
  CHECK_FALSE(howe_cm(b, "E2^(3)"));
  auto one = howe_cm(b, "1");
  REQUIRE(one);
  CHECK(*one == identity_matching(b));
  auto f1 = howe_cm(b, "F1");
  REQUIRE(f1);
  CHECK(f1->layers.front().kind == MoveKind::MinusAlpha);
  CHECK(f1->blocks.back() == Block(0, "*o*x"));
  auto fe = howe_cm(b, "F2 E2");
  REQUIRE(fe);
  CHECK(fe->layers.size() == 2);
  CHECK(fe->blocks.back() == b);
  CHECK_THROWS(howe_cm(b, "G2"));
}
