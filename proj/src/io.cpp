#include "bk/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "bk/errors.hpp"

namespace bk {

namespace {

bool looks_like_json(const std::string& s) {
  auto p = s.find_first_not_of(" \t\r\n");
  return p != std::string::npos && (s[p] == '{' || s[p] == '[');
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ParseError("expected an integer, got '" + std::string(s) + "'");
  return v;
}

// "v^" or "-2:v^" -> (first, entries).
std::pair<int, std::string> split_ascii(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) return {0, text};
  return {parse_int(std::string_view(text).substr(0, colon)), text.substr(colon + 1)};
}

// JSON access with ParseError instead of json exceptions.
template <class F>
auto guarded(F f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON value: ") + e.what());
  }
}

std::pair<int, std::string> window_entries(const json& j) {
  return guarded([&] {
    const auto& w = j.at("window");
    int a = w.at(0).get<int>(), b = w.at(1).get<int>();
    std::string e = j.at("entries").get<std::string>();
    if (static_cast<int>(e.size()) != b - a + 1) throw ParseError("entries do not fill the declared window");
    return std::make_pair(a, e);
  });
}

json window_json(int a, int b, const std::string& entries) { return json{{"window", {a, b}}, {"entries", entries}}; }

json seq_json(const SymbolSequence& s) {
  if (s.empty()) return window_json(0, -1, "");
  return window_json(s.first(), s.last(), s.ascii());
}

json arcs_json(const std::vector<Arc>& arcs) {
  json out = json::array();
  for (const Arc& a : arcs) out.push_back({a.a, a.b});
  return out;
}

std::vector<Arc> arcs_from(const json& j) {
  std::vector<Arc> out;
  for (const auto& p : j) out.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
  return out;
}

}  // namespace

Weight parse_weight(const std::string& text) {
  if (looks_like_json(text)) return weight_from_json(parse_json(text));
  auto [first, entries] = split_ascii(text);
  return Weight(first, entries);
}

Block parse_block(const std::string& text) {
  if (looks_like_json(text)) return block_from_json(parse_json(text));
  auto [first, entries] = split_ascii(text);
  try {
    return Block(first, entries);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

json to_json(const Weight& w) { return seq_json(w); }

json to_json(const Block& b) {
  json j = seq_json(b);
  if (!b.balanced()) {
    j["up"] = b.up_count();
    j["down"] = b.down_count();
  }
  return j;
}

json to_json(const LabelVector& k) {
  if (k.empty()) return window_json(0, -1, "");
  return window_json(k.first(), k.last(), k.str());
}

json to_json(const CupDiagram& c) { return json{{"block", to_json(c.block)}, {"cups", arcs_json(c.cups)}, {"rays", c.rays}}; }

json to_json(const CapDiagram& d) { return json{{"block", to_json(d.block)}, {"caps", arcs_json(d.caps)}, {"rays", d.rays}}; }

json to_json(const Matching& m) {
  return json{{"type", move_kind_name(m.kind)}, {"i", m.i}, {"source", to_json(m.source)}, {"target", to_json(m.target)}};
}

json to_json(const CompositeMatching& t) {
  json layers = json::array();
  for (const Matching& m : t.layers) layers.push_back(to_json(m));
  return json{{"blocks", [&] {
                 json bs = json::array();
                 for (const Block& b : t.blocks) bs.push_back(to_json(b));
                 return bs;
               }()},
              {"layers", layers}};
}

json to_json(const WebSlices& w) {
  json moves = json::array();
  for (const FMove& m : w.moves) moves.push_back({{"i", m.i}, {"r", m.r}});
  return json{{"base", to_json(w.base)}, {"moves", moves}};
}

Weight weight_from_json(const json& j) {
  auto [a, e] = window_entries(j);
  return Weight(a, e);
}

Block block_from_json(const json& j) {
  auto [a, e] = window_entries(j);
  try {
    if (j.contains("up") || j.contains("down"))
      return guarded([&] { return Block(a, e, j.at("up").get<int>(), j.at("down").get<int>()); });
    return Block(a, e);
  } catch (const DomainError& ex) {
    throw ParseError(ex.what());
  }
}

LabelVector label_vector_from_json(const json& j) {
  auto [a, e] = window_entries(j);
  std::vector<int> labels;
  for (char c : e) {
    if (c < '0' || c > '2') throw ParseError("label vector entries must be 0, 1 or 2");
    labels.push_back(c - '0');
  }
  return LabelVector(a, labels);
}

CupDiagram cup_diagram_from_json(const json& j) {
  return guarded([&] {
    try {
      return make_cup_diagram(block_from_json(j.at("block")), arcs_from(j.at("cups")), j.at("rays").get<std::vector<int>>());
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  });
}

CapDiagram cap_diagram_from_json(const json& j) {
  return guarded([&] {
    try {
      return reflect(make_cup_diagram(block_from_json(j.at("block")), arcs_from(j.at("caps")), j.at("rays").get<std::vector<int>>()));
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  });
}

Matching matching_from_json(const json& j) {
  return guarded([&] {
    Block source = block_from_json(j.at("source"));
    MoveKind kind = parse_move_kind(j.at("type").get<std::string>());
    int i = j.at("i").get<int>();
    try {
      if (j.contains("target")) return make_matching(source, block_from_json(j.at("target")), kind, i);
      auto m = fit_matching(source, kind, i);
      if (!m) throw ParseError("no local picture of type " + move_kind_name(kind) + " fits at position " + std::to_string(i));
      return *m;
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  });
}

CompositeMatching composite_from_json(const json& j) {
  return guarded([&] {
    std::vector<Matching> layers;
    if (j.is_array()) {
      for (const auto& l : j) layers.push_back(matching_from_json(l));
    } else if (j.contains("layers")) {
      for (const auto& l : j.at("layers")) layers.push_back(matching_from_json(l));
      if (layers.empty()) return identity_matching(block_from_json(j.at("blocks").at(0)));
    } else {
      layers.push_back(matching_from_json(j));
    }
    if (layers.empty()) throw ParseError("a composite matching needs at least one layer");
    try {
      return compose(layers);
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  });
}

WebSlices web_from_json(const json& j) {
  return guarded([&] {
    WebSlices w;
    w.base = label_vector_from_json(j.at("base"));
    for (const auto& m : j.at("moves")) w.moves.push_back({m.at("i").get<int>(), m.at("r").get<int>()});
    return w;
  });
}

CompositeMatching parse_matching(const std::string& text) {
  if (looks_like_json(text)) return composite_from_json(parse_json(text));
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ';');) parts.push_back(p);
  if (parts.empty()) throw ParseError("empty matching literal");
  Block current = parse_block(parts[0]);
  if (parts.size() == 1) return identity_matching(current);
  std::vector<Matching> layers;
  for (std::size_t k = 1; k < parts.size(); ++k) {
    auto at = parts[k].find('@');
    if (at == std::string::npos) throw ParseError("matching layer '" + parts[k] + "' must look like TYPE@i");
    MoveKind kind = parse_move_kind(parts[k].substr(0, at));
    int i = parse_int(std::string_view(parts[k]).substr(at + 1));
    auto m = fit_matching(current, kind, i);
    if (!m) throw ParseError("no local picture of type " + parts[k].substr(0, at) + " fits at position " + std::to_string(i));
    layers.push_back(*m);
    current = m->target;
  }
  return compose(layers);
}

json basis_element_json(const Algebra& alg, int index) {
  const BasisElement& e = alg.element(index);
  return json{{"lambda", to_json(e.lambda)}, {"nu", to_json(e.nu)}, {"mu", to_json(e.mu)}, {"degree", e.degree}};
}

json element_json(const Algebra& alg, const Vec& v) {
  json terms = json::array();
  for (auto [k, c] : v) {
    const BasisElement& e = alg.element(k);
    terms.push_back({{"lambda", to_json(e.lambda)}, {"nu", to_json(e.nu)}, {"mu", to_json(e.mu)}, {"coeff", c}});
  }
  return json{{"block", to_json(alg.block())}, {"terms", terms}};
}

Vec element_from_json(const Algebra& alg, const json& j) {
  return guarded([&] {
    if (j.contains("block") && !(block_from_json(j.at("block")) == alg.block()))
      throw ParseError("element lives over a different block");
    Vec v;
    for (const auto& t : j.at("terms")) {
      int k = alg.index_of(weight_from_json(t.at("lambda")), weight_from_json(t.at("nu")), weight_from_json(t.at("mu")));
      if (k < 0) throw ParseError("term is not a basis vector of the algebra");
      v = add(v, Vec{{k, t.at("coeff").get<Coeff>()}});
    }
    return v;
  });
}

json stretched_json(const Bimodule& m, int index) {
  const StretchedDiagram& s = m.element(index);
  json lines = json::array();
  for (int l = 0; l < m.line_count(); ++l) lines.push_back(to_json(m.line_weight(index, l)));
  return json{{"lambda", to_json(m.bottom().weights()[static_cast<std::size_t>(s.lambda)])},
              {"mu", to_json(m.top().weights()[static_cast<std::size_t>(s.mu)])},
              {"lines", lines},
              {"degree", s.degree}};
}

json bimodule_element_json(const Bimodule& m, const Vec& v) {
  json terms = json::array();
  for (auto [k, c] : v) {
    json t = stretched_json(m, k);
    t.erase("degree");
    t["coeff"] = c;
    terms.push_back(t);
  }
  return json{{"matching", to_json(m.matching())}, {"terms", terms}};
}

Vec bimodule_element_from_json(const Bimodule& m, const json& j) {
  return guarded([&] {
    Vec v;
    for (const auto& t : j.at("terms")) {
      int lambda = m.bottom().weight_index(weight_from_json(t.at("lambda")));
      int mu = m.top().weight_index(weight_from_json(t.at("mu")));
      const auto& lines = t.at("lines");
      if (lambda < 0 || mu < 0 || static_cast<int>(lines.size()) != m.line_count()) throw ParseError("term does not fit the bimodule");
      std::vector<Weight> ws;
      for (const auto& l : lines) ws.push_back(weight_from_json(l));
      std::uint64_t labels = 0;
      const auto& nodes = m.nodes();
      for (std::size_t n = 0; n < nodes.size(); ++n)
        if (ws[static_cast<std::size_t>(nodes[n].line)].at(nodes[n].x) == kUp) labels |= std::uint64_t{1} << n;
      int k = m.index_of(lambda, mu, labels);
      if (k < 0) throw ParseError("term is not a basis vector of the bimodule");
      v = add(v, Vec{{k, t.at("coeff").get<Coeff>()}});
    }
    return v;
  });
}

std::string element_ascii(const Algebra& alg, const Vec& v) {
  if (v.empty()) return "0";
  const Block& b = alg.block();
  int lo = b.empty() ? 0 : b.first(), hi = b.empty() ? -1 : b.last();
  std::string out;
  for (auto [k, c] : v) {
    const BasisElement& e = alg.element(k);
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Coeff a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a) + " ";
    out += "[" + e.lambda.ascii(lo, hi) + "|" + e.nu.ascii(lo, hi) + "|" + e.mu.ascii(lo, hi) + "]";
  }
  return out;
}

namespace {

std::string arc_row(const Block& b, int lo, int hi, const std::vector<Arc>& arcs, const std::vector<int>& rays) {
  std::string row(static_cast<std::size_t>(hi - lo + 1), ' ');
  for (int x = lo; x <= hi; ++x)
    if (b.at(x) != kStar) row[static_cast<std::size_t>(x - lo)] = b.at(x) == kCross ? 'x' : '.';
  for (const Arc& a : arcs) {
    row[static_cast<std::size_t>(a.a - lo)] = '(';
    row[static_cast<std::size_t>(a.b - lo)] = ')';
  }
  for (int r : rays) row[static_cast<std::size_t>(r - lo)] = '|';
  return row;
}

}  // namespace

std::string render(const CupDiagram& c) {
  if (c.block.empty()) return "\n";
  int lo = c.block.first(), hi = c.block.last();
  return c.block.ascii(lo, hi) + "\n" + arc_row(c.block, lo, hi, c.cups, c.rays) + "\n";
}

std::string render(const CircleDiagram& shape, const Weight& nu) {
  const Block& b = shape.block();
  if (b.empty()) return "\n\n\n";
  int lo = b.first(), hi = b.last();
  return arc_row(b, lo, hi, shape.top.caps, shape.top.rays) + "\n" + nu.ascii(lo, hi) + "\n" +
         arc_row(b, lo, hi, shape.bottom.cups, shape.bottom.rays) + "\n";
}

std::string render(const WebSlices& w) {
  std::vector<LabelVector> states{w.base};
  for (const FMove& m : w.moves) states.push_back(apply_move(states.back(), m));
  int lo = 0, hi = -1;
  for (const LabelVector& k : states) {
    if (k.empty()) continue;
    if (hi < lo) lo = k.first(), hi = k.last();
    lo = std::min(lo, k.first());
    hi = std::max(hi, k.last());
  }
  std::string out;
  for (std::size_t s = states.size(); s-- > 0;) {
    for (int x = lo; x <= hi; ++x) out += states[s].at(x) == 0 ? ' ' : states[s].at(x) == 1 ? '|' : ':';
    if (s > 0) {
      const FMove& m = w.moves[s - 1];
      out += "   F" + std::to_string(m.i) + (m.r == 2 ? "^(2)" : "");
    }
    out += "\n";
  }
  return out;
}

}  // namespace bk
