#include "bk/bimodules.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "bk/errors.hpp"

namespace bk {

std::string move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::PlusAlpha: return "+a_i";
    case MoveKind::MinusAlpha: return "-a_i";
    case MoveKind::PlusTwoAlpha: return "+2a_i";
    case MoveKind::MinusTwoAlpha: return "-2a_i";
  }
  return "";
}

MoveKind parse_move_kind(const std::string& s) {
  for (MoveKind k : {MoveKind::PlusAlpha, MoveKind::MinusAlpha, MoveKind::PlusTwoAlpha, MoveKind::MinusTwoAlpha})
    if (move_kind_name(k) == s) return k;
  throw ParseError("unknown matching type '" + s + "'");
}

namespace {

struct LocalPicture {
  MoveKind kind;
  const char* before;
  const char* after;
  Picture picture;
};

constexpr LocalPicture kPictures[] = {
    {MoveKind::PlusAlpha, "o*", "*o", Picture::RayLeft},
    {MoveKind::PlusAlpha, "*x", "x*", Picture::RayRight},
    {MoveKind::PlusAlpha, "ox", "**", Picture::Cup},
    {MoveKind::PlusAlpha, "**", "xo", Picture::Cap},
    {MoveKind::MinusAlpha, "*o", "o*", Picture::RayRight},
    {MoveKind::MinusAlpha, "x*", "*x", Picture::RayLeft},
    {MoveKind::MinusAlpha, "xo", "**", Picture::Cup},
    {MoveKind::MinusAlpha, "**", "ox", Picture::Cap},
    {MoveKind::PlusTwoAlpha, "ox", "xo", Picture::Empty},
    {MoveKind::MinusTwoAlpha, "xo", "ox", Picture::Empty},
};

Block replace_pair(const Block& b, int i, const char* pair) {
  int lo = b.empty() ? i : std::min(b.first(), i);
  int hi = b.empty() ? i + 1 : std::max(b.last(), i + 1);
  std::string s = b.ascii(lo, hi);
  s[static_cast<std::size_t>(i - lo)] = pair[0];
  s[static_cast<std::size_t>(i + 1 - lo)] = pair[1];
  return Block(lo, s);
}

}  // namespace

std::optional<Matching> fit_matching(const Block& source, MoveKind kind, int i) {
  char a = source.at(i), b = source.at(i + 1);
  for (const LocalPicture& p : kPictures) {
    if (p.kind != kind || p.before[0] != a || p.before[1] != b) continue;
    return Matching{source, replace_pair(source, i, p.after), kind, i, p.picture};
  }
  return std::nullopt;
}

Matching make_matching(const Block& source, const Block& target, MoveKind kind, int i) {
  auto m = fit_matching(source, kind, i);
  if (!m) throw DomainError("no local picture of type " + move_kind_name(kind) + " fits at position " + std::to_string(i));
  if (!(m->target == target)) throw DomainError("matching target does not agree with the local picture at position " + std::to_string(i));
  return *m;
}

CompositeMatching compose(std::vector<Matching> layers) {
  if (layers.empty()) throw DomainError("a composite matching needs at least one layer or an explicit block");
  CompositeMatching t;
  for (std::size_t k = 0; k < layers.size(); ++k) {
    if (k > 0 && !(layers[k - 1].target == layers[k].source)) throw DomainError("matching layers do not compose at layer " + std::to_string(k));
    t.blocks.push_back(layers[k].source);
  }
  t.blocks.push_back(layers.back().target);
  t.layers = std::move(layers);
  return t;
}

CompositeMatching identity_matching(const Block& b) { return CompositeMatching{{b}, {}}; }

Bimodule::Bimodule(CompositeMatching t) : t_(std::move(t)) {
  if (t_.blocks.size() != t_.layers.size() + 1) throw DomainError("composite matching has inconsistent block count");
  for (std::size_t k = 0; k < t_.layers.size(); ++k) {
    const Matching& m = t_.layers[k];
    if (!(m.source == t_.blocks[k]) || !(m.target == t_.blocks[k + 1])) throw DomainError("matching layers do not compose");
  }
  bottom_ = std::make_shared<Algebra>(t_.blocks.front());
  top_ = t_.blocks.size() == 1 ? bottom_ : std::make_shared<Algebra>(t_.blocks.back());

  lines_.push_back(t_.blocks.front());
  auto add_layer = [&](const Block& lower, const Block& upper, int i, Picture pic) {
    Layer layer;
    for (int x : lower.stars()) {
      if (x == i || x == i + 1) continue;
      layer.strands.emplace_back(x, x);
    }
    switch (pic) {
      case Picture::RayLeft: layer.strands.emplace_back(i + 1, i); break;
      case Picture::RayRight: layer.strands.emplace_back(i, i + 1); break;
      case Picture::Cup: layer.cups.push_back({i, i + 1}); break;
      case Picture::Cap: layer.caps.push_back({i, i + 1}); break;
      case Picture::Empty: invariant_failed("empty move must be expanded before building a layer");
    }
    layers_.push_back(layer);
    lines_.push_back(upper);
  };
  for (const Matching& m : t_.layers) {
    if (m.picture != Picture::Empty) {
      add_layer(m.source, m.target, m.i, m.picture);
      continue;
    }
    Block middle = replace_pair(m.source, m.i, "**");
    add_layer(m.source, middle, m.i, Picture::Cup);
    empty_sites_.emplace_back(static_cast<int>(lines_.size()) - 1, m.i);
    add_layer(middle, m.target, m.i, Picture::Cap);
    ++shift_;
  }
  for (int line = 0; line < static_cast<int>(lines_.size()); ++line)
    for (int x : lines_[static_cast<std::size_t>(line)].stars()) nodes_.push_back({x, line});
  if (nodes_.size() > 64) throw DomainError("stretched diagram has more than 64 vertices");

  std::size_t nb = bottom_->weights().size(), nt = top_->weights().size();
  for (std::size_t l = 0; l < nb; ++l) {
    for (std::size_t u = 0; u < nt; ++u) {
      StackedDiagram g = geometry(static_cast<int>(l), static_cast<int>(u));
      int c = g.component_count();
      if (c > 30) throw DomainError("stretched diagram has too many circles to enumerate");
      // Label parity of every node relative to the rightmost node of its circle.
      std::vector<int> rel(nodes_.size(), -1);
      for (int k = 0; k < c; ++k) {
        check_invariant(g.closed(k), "stretched diagram component is not closed");
        int r = g.rightmost(k);
        rel[static_cast<std::size_t>(r)] = 0;
        std::vector<int> todo{r};
        while (!todo.empty()) {
          int n = todo.back();
          todo.pop_back();
          for (int e : g.incident(n)) {
            const auto& ed = g.edges()[static_cast<std::size_t>(e)];
            int o = ed.u == n ? ed.v : ed.u;
            bool arc = g.nodes()[static_cast<std::size_t>(o)].line == g.nodes()[static_cast<std::size_t>(n)].line;
            int want = rel[static_cast<std::size_t>(n)] ^ (arc ? 1 : 0);
            if (rel[static_cast<std::size_t>(o)] < 0) {
              rel[static_cast<std::size_t>(o)] = want;
              todo.push_back(o);
            } else {
              check_invariant(rel[static_cast<std::size_t>(o)] == want, "inconsistent orientation labels around a circle");
            }
          }
        }
      }
      std::vector<bool> internal_comp(static_cast<std::size_t>(c), false);
      for (auto [line, i] : empty_sites_) internal_comp[static_cast<std::size_t>(g.component(node(i, line)))] = true;
      std::vector<StretchedDiagram> found;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
        bool ok = true;
        int deg = shift_;
        for (int k = 0; k < c; ++k) {
          bool cw = (mask >> k) & 1;
          if (cw && internal_comp[static_cast<std::size_t>(k)]) ok = false;
          deg += cw ? 1 : -1;
        }
        if (!ok) continue;
        std::uint64_t labels = 0;
        for (std::size_t n = 0; n < nodes_.size(); ++n) {
          bool cw = (mask >> g.component(static_cast<int>(n))) & 1;
          int up = (cw ? 0 : 1) ^ rel[n];
          if (up) labels |= std::uint64_t{1} << n;
        }
        found.push_back({static_cast<int>(l), static_cast<int>(u), labels, deg});
      }
      std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.labels > b.labels; });
      for (const auto& s : found) {
        index_[{s.lambda, s.mu, s.labels}] = static_cast<int>(basis_.size());
        basis_.push_back(s);
      }
    }
  }
  for (std::size_t u = 0; u < nt; ++u) down_.push_back(reduce_to(0, geometry(-1, static_cast<int>(u))));
  for (std::size_t l = 0; l < nb; ++l) up_.push_back(reduce_to(line_count() - 1, geometry(static_cast<int>(l), -1)));
}

int Bimodule::node(int x, int line) const {
  for (std::size_t k = 0; k < nodes_.size(); ++k)
    if (nodes_[k].x == x && nodes_[k].line == line) return static_cast<int>(k);
  return -1;
}

StackedDiagram Bimodule::geometry(int lambda, int mu) const {
  StackedDiagram g;
  for (const Node& n : nodes_) g.add_node(n.x, n.line);
  int top = line_count() - 1;
  auto arc = [&](const Arc& a, int line, int band) {
    g.add_edge(node(a.a, line), node(a.b, line), band, distance(lines_[static_cast<std::size_t>(line)], a.a, a.b));
  };
  if (lambda >= 0)
    for (const Arc& a : bottom_->cup_diagrams()[static_cast<std::size_t>(lambda)].cups) arc(a, 0, -1);
  for (int k = 0; k < static_cast<int>(layers_.size()); ++k) {
    const Layer& layer = layers_[static_cast<std::size_t>(k)];
    for (auto [lo, hi] : layer.strands) g.add_edge(node(lo, k), node(hi, k + 1), k, 0);
    for (const Arc& a : layer.caps) arc(a, k, k);
    for (const Arc& a : layer.cups) arc(a, k + 1, k);
  }
  if (mu >= 0)
    for (const Arc& a : top_->cup_diagrams()[static_cast<std::size_t>(mu)].cups) arc(a, top, top);
  g.compute();
  return g;
}

Reduction Bimodule::reduce_to(int line, const StackedDiagram& g) const {
  Reduction r;
  r.anchor.assign(nodes_.size(), -1);
  r.flip.assign(nodes_.size(), false);
  for (std::size_t s = 0; s < nodes_.size(); ++s) {
    if (nodes_[s].line != line || r.anchor[s] >= 0) continue;
    check_invariant(g.degree(static_cast<int>(s)) == 1, "boundary vertex of a reduction is not a free end");
    int n = static_cast<int>(s), prev = -1;
    bool flip = false;
    r.anchor[s] = n;
    while (true) {
      int e = -1;
      for (int f : g.incident(n))
        if (f != prev) e = f;
      if (e < 0) break;
      const auto& ed = g.edges()[static_cast<std::size_t>(e)];
      int o = ed.u == n ? ed.v : ed.u;
      if (g.nodes()[static_cast<std::size_t>(o)].line == g.nodes()[static_cast<std::size_t>(n)].line) flip = !flip;
      prev = e;
      n = o;
      if (nodes_[static_cast<std::size_t>(n)].line == line && g.degree(n) == 1) break;
      r.anchor[static_cast<std::size_t>(n)] = static_cast<int>(s);
      r.flip[static_cast<std::size_t>(n)] = flip;
    }
    check_invariant(nodes_[static_cast<std::size_t>(n)].line == line && n != static_cast<int>(s), "reduction path does not return to the boundary line");
    check_invariant(flip, "reduction arc joins equal labels");
    r.anchor[static_cast<std::size_t>(n)] = n;
    int a = std::min(nodes_[s].x, nodes_[static_cast<std::size_t>(n)].x), b = std::max(nodes_[s].x, nodes_[static_cast<std::size_t>(n)].x);
    r.arcs.push_back({a, b});
  }
  std::sort(r.arcs.begin(), r.arcs.end());
  return r;
}

CapDiagram Bimodule::downward_reduction(int mu) const {
  return reflect(make_cup_diagram(lines_.front(), down_[static_cast<std::size_t>(mu)].arcs, {}));
}

CupDiagram Bimodule::upward_reduction(int lambda) const {
  return make_cup_diagram(lines_.back(), up_[static_cast<std::size_t>(lambda)].arcs, {});
}

CapDiagram Bimodule::downward_reduction_with_bottom(int lambda, int mu) const {
  StackedDiagram g = geometry(lambda, mu);
  for (std::size_t e = 0; e < g.edges().size(); ++e)
    if (g.edges()[e].band == -1) g.remove_edge(static_cast<int>(e));
  g.compute();
  return reflect(make_cup_diagram(lines_.front(), reduce_to(0, g).arcs, {}));
}

int Bimodule::index_of(int lambda, int mu, std::uint64_t labels) const {
  auto it = index_.find({lambda, mu, labels});
  return it == index_.end() ? -1 : it->second;
}

Weight Bimodule::line_weight(int k, int line) const {
  const Block& b = lines_[static_cast<std::size_t>(line)];
  std::string s = b.ascii();
  std::uint64_t labels = basis_[static_cast<std::size_t>(k)].labels;
  for (std::size_t n = 0; n < nodes_.size(); ++n)
    if (nodes_[n].line == line) s[static_cast<std::size_t>(nodes_[n].x - b.first())] = (labels >> n) & 1 ? kUp : kDown;
  return Weight(b.first(), s);
}

Laurent Bimodule::graded_dimension() const {
  Laurent p;
  for (const auto& s : basis_) p += Laurent::monomial(s.degree);
  return p;
}

std::vector<std::vector<int>> Bimodule::circles(int lambda, int mu) const {
  StackedDiagram g = geometry(lambda, mu);
  std::vector<std::vector<int>> out;
  for (int k = 0; k < g.component_count(); ++k) out.push_back(g.members(k));
  return out;
}

bool Bimodule::internal(const std::vector<int>& circle) const {
  for (auto [line, i] : empty_sites_)
    if (std::find(circle.begin(), circle.end(), node(i, line)) != circle.end()) return true;
  return false;
}

namespace {

std::uint64_t lift(std::uint64_t labels, const Reduction& r, const std::vector<Bimodule::Node>& nodes, int line, const Weight& nu) {
  std::uint64_t out = labels;
  auto set = [&](std::size_t n, bool up) {
    if (up) out |= std::uint64_t{1} << n;
    else out &= ~(std::uint64_t{1} << n);
  };
  for (std::size_t n = 0; n < nodes.size(); ++n)
    if (nodes[n].line == line) set(n, nu.at(nodes[n].x) == kUp);
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    int a = r.anchor[n];
    if (a < 0 || nodes[n].line == line) continue;
    bool up = nu.at(nodes[static_cast<std::size_t>(a)].x) == kUp;
    set(n, up != r.flip[n]);
  }
  return out;
}

}  // namespace

Vec Bimodule::act_left(int a, int m) const {
  const StretchedDiagram& e = basis_[static_cast<std::size_t>(m)];
  const Algebra& A = *bottom_;
  if (A.mu_of(a) != e.lambda) return {};
  const Reduction& r = down_[static_cast<std::size_t>(e.mu)];
  Weight eta = cup_weight(make_cup_diagram(lines_.front(), r.arcs, {}));
  int reduced = A.index_of(A.weights()[static_cast<std::size_t>(e.lambda)], line_weight(m, 0), eta);
  check_invariant(reduced >= 0, "downward reduction of a basis element is not an algebra basis element");
  std::map<int, Coeff> acc;
  for (auto [k, c] : A.mult(a, reduced)) {
    std::uint64_t labels = lift(e.labels, r, nodes_, 0, A.element(k).nu);
    int idx = index_of(A.lambda_of(a), e.mu, labels);
    check_invariant(idx >= 0, "lifted orientation is not a basis element");
    acc[idx] += c;
  }
  Vec out;
  for (auto [k, c] : acc)
    if (c) out.emplace_back(k, c);
  return out;
}

Vec Bimodule::act_right(int m, int b) const {
  const StretchedDiagram& e = basis_[static_cast<std::size_t>(m)];
  const Algebra& T = *top_;
  if (T.lambda_of(b) != e.mu) return {};
  int top = line_count() - 1;
  const Reduction& r = up_[static_cast<std::size_t>(e.lambda)];
  Weight lam = cup_weight(make_cup_diagram(lines_.back(), r.arcs, {}));
  int reduced = T.index_of(lam, line_weight(m, top), T.weights()[static_cast<std::size_t>(e.mu)]);
  check_invariant(reduced >= 0, "upward reduction of a basis element is not an algebra basis element");
  std::map<int, Coeff> acc;
  for (auto [k, c] : T.mult(reduced, b)) {
    std::uint64_t labels = lift(e.labels, r, nodes_, top, T.element(k).nu);
    int idx = index_of(e.lambda, T.mu_of(b), labels);
    check_invariant(idx >= 0, "lifted orientation is not a basis element");
    acc[idx] += c;
  }
  Vec out;
  for (auto [k, c] : acc)
    if (c) out.emplace_back(k, c);
  return out;
}

Vec Bimodule::act_left(const Vec& a, const Vec& m) const {
  Vec out;
  for (auto [i, x] : a)
    for (auto [j, y] : m) out = add(out, act_left(i, j), x * y);
  return out;
}

Vec Bimodule::act_right(const Vec& m, const Vec& b) const {
  Vec out;
  for (auto [i, x] : m)
    for (auto [j, y] : b) out = add(out, act_right(i, j), x * y);
  return out;
}

std::optional<CompositeMatching> howe_cm(const Block& start, const std::string& word) {
  std::istringstream in(word);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  std::vector<Matching> layers;
  Block current = start;
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
    const std::string& tok = *it;
    if (tok == "1" || tok.rfind("1_", 0) == 0) continue;
    if (tok.empty() || (tok[0] != 'E' && tok[0] != 'F')) throw ParseError("unknown generator '" + tok + "'");
    bool raise = tok[0] == 'E';
    std::size_t pos = 1;
    if (pos < tok.size() && tok[pos] == '_') ++pos;
    std::size_t end = pos;
    if (end < tok.size() && tok[end] == '-') ++end;
    while (end < tok.size() && std::isdigit(static_cast<unsigned char>(tok[end]))) ++end;
    if (end == pos || (end == pos + 1 && tok[pos] == '-')) throw ParseError("generator '" + tok + "' lacks an index");
    int i = std::stoi(tok.substr(pos, end - pos));
    int r = 1;
    if (end < tok.size()) {
      std::string rest = tok.substr(end);
      if (rest.size() < 2 || rest[0] != '^') throw ParseError("malformed divided power in '" + tok + "'");
      rest = rest.substr(1);
      if (rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
      if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("malformed divided power in '" + tok + "'");
      r = std::stoi(rest);
    }
    if (r == 0) continue;
    if (r > 2) return std::nullopt;
    MoveKind kind = raise ? (r == 1 ? MoveKind::PlusAlpha : MoveKind::PlusTwoAlpha) : (r == 1 ? MoveKind::MinusAlpha : MoveKind::MinusTwoAlpha);
    auto m = fit_matching(current, kind, i);
    if (!m) return std::nullopt;
    current = m->target;
    layers.push_back(*m);
  }
  if (layers.empty()) return identity_matching(start);
  return compose(std::move(layers));
}

}  // namespace bk
