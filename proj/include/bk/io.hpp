#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bk/algebra.hpp"
#include "bk/bimodules.hpp"
#include "bk/web.hpp"

namespace bk {

using json = nlohmann::json;

// Weights and blocks accept either JSON ({"window": [a, b], "entries": "v^"})
// or an ASCII literal "v^", optionally prefixed by its first position as in
// "-2:v^". Throws ParseError.
Weight parse_weight(const std::string& text);
Block parse_block(const std::string& text);

json to_json(const Weight& w);
json to_json(const Block& b);
json to_json(const LabelVector& k);
json to_json(const CupDiagram& c);
json to_json(const CapDiagram& d);
json to_json(const Matching& m);
json to_json(const CompositeMatching& t);
json to_json(const WebSlices& w);

Weight weight_from_json(const json& j);
Block block_from_json(const json& j);
LabelVector label_vector_from_json(const json& j);
CupDiagram cup_diagram_from_json(const json& j);
CapDiagram cap_diagram_from_json(const json& j);
Matching matching_from_json(const json& j);
CompositeMatching composite_from_json(const json& j);
WebSlices web_from_json(const json& j);

// A composite matching as JSON (one layer object or an array of layers) or
// as ASCII "SOURCE;TYPE@i;TYPE@i..." with TYPE one of +a_i, -a_i, +2a_i, -2a_i,
// e.g. "**ox;+a_i@2". An ASCII literal without layers is the identity.
CompositeMatching parse_matching(const std::string& text);

// {"lambda": .., "nu": .., "mu": .., "degree": n} for one basis vector.
json basis_element_json(const Algebra& alg, int index);
// {"block": .., "terms": [{"lambda", "nu", "mu", "coeff"}]}.
json element_json(const Algebra& alg, const Vec& v);
// Inverse of element_json; every term must be a basis vector of alg.
Vec element_from_json(const Algebra& alg, const json& j);

json stretched_json(const Bimodule& m, int index);
json bimodule_element_json(const Bimodule& m, const Vec& v);
Vec bimodule_element_from_json(const Bimodule& m, const json& j);

// "2 [v^v^|v^^v|vv^^]" style one-line term listing, "0" for the zero vector.
std::string element_ascii(const Algebra& alg, const Vec& v);

// Three rows over the support window: caps, the weight, cups. Arc endpoints
// are drawn as '(' and ')', rays as '|'.
std::string render(const CupDiagram& c);
std::string render(const CircleDiagram& shape, const Weight& nu);
// One row per slice, top slice first: label 1 drawn as '|', label 2 as ':'.
std::string render(const WebSlices& w);

}  // namespace bk
