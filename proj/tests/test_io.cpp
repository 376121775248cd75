#include <doctest.h>

#include <string>

#include "bk/errors.hpp"
#include "bk/io.hpp"

using namespace bk;

TEST_CASE("weight and block literals") {
  CHECK(parse_weight("v^") == Weight(0, "v^"));
  CHECK(parse_weight("-2:v^") == Weight(-2, "v^"));
  CHECK(parse_weight(R"({"window": [3, 4], "entries": "^v"})") == Weight(3, "^v"));
  CHECK(parse_block("**ox") == Block(0, "**ox"));
  CHECK(parse_block("1:*x*") == Block(1, "*x*"));
  CHECK(parse_block("") == Block());
  CHECK_THROWS_AS(parse_weight("v*"), ParseError);
  CHECK_THROWS_AS(parse_block("*"), ParseError);
  CHECK_THROWS_AS(parse_block("a:**"), ParseError);
  CHECK_THROWS_AS(parse_weight(R"({"window": [0, 3], "entries": "v^"})"), ParseError);
  CHECK_THROWS_AS(parse_weight("{\"window\": "), ParseError);
}

TEST_CASE("JSON round trips") {
  Weight w(-1, "vx^o^v");
  CHECK(weight_from_json(to_json(w)) == w);
  Block b(2, "**ox");
  CHECK(block_from_json(to_json(b)) == b);
  Block u(0, "*o*", 2, 0);
  CHECK(block_from_json(to_json(u)) == u);
  LabelVector k(1, {1, 0, 2});
  CHECK(label_vector_from_json(to_json(k)) == k);
  CupDiagram c = canonical_cup(Weight(0, "vv^^^v"));
  CHECK(cup_diagram_from_json(to_json(c)) == c);
  CapDiagram d = canonical_cap(Weight(0, "v^x"));
  CHECK(cap_diagram_from_json(to_json(d)) == d);
  auto t = parse_matching("**ox;+a_i@2;-a_i@2");
  CHECK(composite_from_json(to_json(t)) == t);
  CHECK(matching_from_json(to_json(t.layers[0])) == t.layers[0]);
  auto web = web_of_weight(Weight(0, "vv^v^^"));
  CHECK(web_from_json(to_json(web)) == web);
  CHECK(to_json(w)["entries"] == "vx^o^v");
  CHECK(to_json(w)["window"] == json::array({-1, 4}));
}

TEST_CASE("matching literals") {
  auto t = parse_matching("**ox;+a_i@2");
  REQUIRE(t.layers.size() == 1);
  CHECK(t.layers[0].kind == MoveKind::PlusAlpha);
  CHECK(t.layers[0].i == 2);
  CHECK(t.blocks == std::vector<Block>{Block(0, "**ox"), Block(0, "****")});
  CHECK(parse_matching("**") == identity_matching(Block(0, "**")));
  CHECK(parse_matching(to_json(t).dump()) == t);
  CHECK(parse_matching(to_json(t.layers[0]).dump()) == t);
  CHECK_THROWS_AS(parse_matching("**ox;+a_i@1"), ParseError);
  CHECK_THROWS_AS(parse_matching("**ox;+b_i@2"), ParseError);
  CHECK_THROWS_AS(parse_matching("**ox;+a_i@z"), ParseError);
}

TEST_CASE("algebra elements") {
  Algebra alg(Block(0, "****"));
  Vec v{{0, 3}, {5, -1}};
  json j = element_json(alg, v);
  CHECK(element_from_json(alg, j) == v);
  CHECK(element_from_json(alg, json::parse(j.dump())) == v);
  json one = basis_element_json(alg, 0);
  CHECK(one["degree"] == alg.element(0).degree);
  CHECK(element_ascii(alg, {}) == "0");
  Algebra two(Block(0, "**"));
  CHECK(element_ascii(two, two.unit()) == "[v^|v^|v^]");
  CHECK(element_ascii(two, Vec{{0, -1}, {1, 2}}) == "-[v^|^v|v^] + 2 [v^|v^|v^]");
  json bad = j;
  bad["terms"][0]["nu"] = to_json(Weight(0, "vvvv"));
  CHECK_THROWS_AS(element_from_json(alg, bad), ParseError);
}

TEST_CASE("bimodule elements") {
  Bimodule m(parse_matching("**ox;+a_i@2"));
  Vec v{{1, 2}, {4, -1}};
  CHECK(bimodule_element_from_json(m, bimodule_element_json(m, v)) == v);
  json s = stretched_json(m, 0);
  CHECK(s.contains("lines"));
  CHECK(s["lines"].size() == static_cast<std::size_t>(m.line_count()));
  CHECK(s["degree"] == m.element(0).degree);
}

TEST_CASE("ASCII renderings") {
  CHECK(render(canonical_cup(Weight(0, "v^^v"))) == "****\n()||\n");
  Algebra two(Block(0, "**"));
  CHECK(render(two.shape(0, 0), two.element(1).nu) == "()\nv^\n()\n");
  CHECK(render(web_of_weight(Weight(0, "v^"))) == "||   F0\n: \n");
}
