#include "bk/arc_diagrams.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bk/errors.hpp"

namespace bk {

namespace {

void validate_arcs(const Block& block, std::vector<Arc>& arcs, std::vector<int>& rays, const char* what) {
  std::sort(arcs.begin(), arcs.end());
  std::sort(rays.begin(), rays.end());
  std::vector<int> ends;
  for (const Arc& x : arcs) {
    if (x.a >= x.b) throw DomainError(std::string(what) + " with left endpoint not smaller than right endpoint");
    ends.push_back(x.a);
    ends.push_back(x.b);
  }
  ends.insert(ends.end(), rays.begin(), rays.end());
  std::sort(ends.begin(), ends.end());
  if (ends != block.stars()) throw DomainError(std::string(what) + " endpoints do not match the stars of the block");
  for (const Arc& x : arcs) {
    for (const Arc& y : arcs)
      if (x.a < y.a && y.a < x.b && x.b < y.b) throw DomainError(std::string(what) + "s cross");
    for (int r : rays)
      if (x.a < r && r < x.b) throw DomainError(std::string("ray under a ") + what);
  }
}

std::map<int, int> partner_map(const std::vector<Arc>& arcs) {
  std::map<int, int> m;
  for (const Arc& x : arcs) {
    m[x.a] = x.b;
    m[x.b] = x.a;
  }
  return m;
}

}  // namespace

CupDiagram make_cup_diagram(const Block& block, std::vector<Arc> cups, std::vector<int> rays) {
  validate_arcs(block, cups, rays, "cup");
  return CupDiagram{block, std::move(cups), std::move(rays)};
}

CupDiagram canonical_cup(const Weight& w) {
  CupDiagram c;
  c.block = block_of(w);
  std::vector<int> open;
  if (!w.empty()) {
    for (int i = w.first(); i <= w.last(); ++i) {
      char s = w.at(i);
      if (s == kDown) {
        open.push_back(i);
      } else if (s == kUp) {
        if (open.empty()) {
          c.rays.push_back(i);
        } else {
          c.cups.push_back({open.back(), i});
          open.pop_back();
        }
      }
    }
  }
  c.rays.insert(c.rays.end(), open.begin(), open.end());
  std::sort(c.cups.begin(), c.cups.end());
  std::sort(c.rays.begin(), c.rays.end());
  return c;
}

CapDiagram canonical_cap(const Weight& w) { return reflect(canonical_cup(w)); }

CapDiagram reflect(const CupDiagram& c) { return CapDiagram{c.block, c.cups, c.rays}; }
CupDiagram reflect(const CapDiagram& d) { return CupDiagram{d.block, d.caps, d.rays}; }

Weight cup_weight(const CupDiagram& c) {
  if (!c.rays.empty()) throw DomainError("cup diagram with rays has no cups-only weight");
  std::string s = c.block.ascii();
  for (const Arc& x : c.cups) {
    s[static_cast<std::size_t>(x.a - c.block.first())] = kDown;
    s[static_cast<std::size_t>(x.b - c.block.first())] = kUp;
  }
  return Weight(c.block.first(), s);
}

int CircleDiagram::component_of(int vertex) const {
  for (std::size_t k = 0; k < components.size(); ++k) {
    const auto& v = components[k].vertices;
    if (std::binary_search(v.begin(), v.end(), vertex)) return static_cast<int>(k);
  }
  throw DomainError("vertex " + std::to_string(vertex) + " is not a star of the diagram");
}

int CircleDiagram::circle_count() const {
  return static_cast<int>(std::count_if(components.begin(), components.end(), [](const Component& c) { return c.circle; }));
}

int CircleDiagram::line_count() const { return static_cast<int>(components.size()) - circle_count(); }

bool CircleDiagram::inside(int inner, int outer) const {
  for (int k = parent[static_cast<std::size_t>(inner)]; k >= 0; k = parent[static_cast<std::size_t>(k)])
    if (k == outer) return true;
  return false;
}

std::vector<int> CircleDiagram::children(int k) const {
  std::vector<int> out;
  for (std::size_t j = 0; j < parent.size(); ++j)
    if (parent[j] == k) out.push_back(static_cast<int>(j));
  return out;
}

std::vector<int> CircleDiagram::descendants(int k) const {
  std::vector<int> out;
  for (std::size_t j = 0; j < parent.size(); ++j)
    if (inside(static_cast<int>(j), k)) out.push_back(static_cast<int>(j));
  return out;
}

CircleDiagram stack(const CupDiagram& c, const CapDiagram& d) {
  if (!(c.block == d.block)) throw DomainError("cannot stack diagrams over different blocks");
  CircleDiagram out{c, d, {}, {}};
  std::vector<int> stars = c.block.stars();
  std::map<int, int> index;
  for (std::size_t k = 0; k < stars.size(); ++k) index[stars[k]] = static_cast<int>(k);
  std::vector<int> root(stars.size());
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[static_cast<std::size_t>(x)] != x) x = root[static_cast<std::size_t>(x)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
    return x;
  };
  auto join = [&](const Arc& x) { root[static_cast<std::size_t>(find(index[x.a]))] = find(index[x.b]); };
  for (const Arc& x : c.cups) join(x);
  for (const Arc& x : d.caps) join(x);

  std::map<int, int> comp_of_root;
  for (std::size_t k = 0; k < stars.size(); ++k) {
    int r = find(static_cast<int>(k));
    auto [it, fresh] = comp_of_root.try_emplace(r, static_cast<int>(out.components.size()));
    if (fresh) out.components.emplace_back();
    out.components[static_cast<std::size_t>(it->second)].vertices.push_back(stars[k]);
  }
  for (const Arc& x : c.cups) out.components[static_cast<std::size_t>(comp_of_root[find(index[x.a])])].cups.push_back(x);
  for (const Arc& x : d.caps) out.components[static_cast<std::size_t>(comp_of_root[find(index[x.a])])].caps.push_back(x);
  for (int r : c.rays) out.components[static_cast<std::size_t>(comp_of_root[find(index[r])])].circle = false;
  for (int r : d.rays) out.components[static_cast<std::size_t>(comp_of_root[find(index[r])])].circle = false;

  // Containment: cast a ray upwards just right of the rightmost vertex of A
  // and count crossings with caps of B.
  std::size_t n = out.components.size();
  std::vector<std::vector<bool>> in(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    if (!out.components[a].circle) continue;
    int x = out.components[a].rightmost();
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !out.components[b].circle) continue;
      int crossings = 0;
      for (const Arc& cap : out.components[b].caps)
        if (cap.a <= x && x < cap.b) ++crossings;
      in[a][b] = crossings % 2 == 1;
    }
  }
  out.parent.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    int best = -1;
    int best_depth = -1;
    for (std::size_t b = 0; b < n; ++b) {
      if (!in[a][b]) continue;
      int depth = 0;
      for (std::size_t z = 0; z < n; ++z) depth += in[b][z] ? 1 : 0;
      if (depth > best_depth) best = static_cast<int>(b), best_depth = depth;
    }
    out.parent[a] = best;
  }
  return out;
}

namespace {

bool oriented_arcs(const Block& block, const std::vector<Arc>& arcs, const std::vector<int>& rays, const Weight& w) {
  if (!(block_of(w) == block)) return false;
  for (const Arc& x : arcs) {
    char l = w.at(x.a), r = w.at(x.b);
    if (!((l == kDown && r == kUp) || (l == kUp && r == kDown))) return false;
  }
  // No down-ray left of an up-ray.
  bool seen_down = false;
  for (int r : rays) {
    if (w.at(r) == kDown) seen_down = true;
    if (w.at(r) == kUp && seen_down) return false;
  }
  return true;
}

}  // namespace

bool is_oriented(const CupDiagram& c, const Weight& w) { return oriented_arcs(c.block, c.cups, c.rays, w); }
bool is_oriented(const CapDiagram& d, const Weight& w) { return oriented_arcs(d.block, d.caps, d.rays, w); }
bool is_oriented(const CircleDiagram& shape, const Weight& w) { return is_oriented(shape.bottom, w) && is_oriented(shape.top, w); }

CircleState OrientedCircleDiagram::state(int k) const {
  const Component& c = shape.components[static_cast<std::size_t>(k)];
  if (!c.circle) throw DomainError("orientation state requested for a line");
  return nu.at(c.rightmost()) == kUp ? CircleState::Anticlockwise : CircleState::Clockwise;
}

Weight orient_component(const CircleDiagram& shape, const Weight& w, int k, CircleState s) {
  const Component& c = shape.components[static_cast<std::size_t>(k)];
  std::map<int, int> below = partner_map(c.cups);
  std::map<int, int> above = partner_map(c.caps);
  Weight out = w;
  std::map<int, char> label;
  std::vector<int> todo{c.rightmost()};
  label[c.rightmost()] = s == CircleState::Anticlockwise ? kUp : kDown;
  while (!todo.empty()) {
    int v = todo.back();
    todo.pop_back();
    char opposite = label[v] == kUp ? kDown : kUp;
    for (auto* m : {&below, &above}) {
      auto it = m->find(v);
      if (it == m->end()) continue;
      auto [jt, fresh] = label.try_emplace(it->second, opposite);
      if (fresh) todo.push_back(it->second);
      else if (jt->second != opposite) invariant_failed("inconsistent labels around a component");
    }
  }
  for (auto [v, l] : label) out = out.with(v, l);
  return out;
}

std::vector<OrientedCircleDiagram> orientations(const CircleDiagram& shape) {
  std::size_t n = shape.components.size();
  std::vector<OrientedCircleDiagram> out;
  std::string seq = shape.block().ascii();
  for (char& c : seq)
    if (c == kStar) c = kDown;
  Weight base(shape.block().first(), seq);
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    Weight w = base;
    for (std::size_t k = 0; k < n; ++k)
      w = orient_component(shape, w, static_cast<int>(k), (mask >> k) & 1 ? CircleState::Clockwise : CircleState::Anticlockwise);
    if (is_oriented(shape, w)) out.push_back({shape, w});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.nu < y.nu; });
  return out;
}

int degree(const OrientedCircleDiagram& x) {
  int d = 0;
  for (const Arc& a : x.shape.bottom.cups) d += x.nu.at(a.b) == kDown ? 1 : 0;
  for (const Arc& a : x.shape.top.caps) d += x.nu.at(a.b) == kDown ? 1 : 0;
  return d;
}

int degree_by_circles(const OrientedCircleDiagram& x) {
  int d = 0;
  for (std::size_t k = 0; k < x.shape.components.size(); ++k) {
    const Component& c = x.shape.components[k];
    if (!c.circle) continue;
    int cups = static_cast<int>(c.cups.size());
    d += x.state(static_cast<int>(k)) == CircleState::Clockwise ? cups + 1 : cups - 1;
  }
  return d;
}

int component_distance(const CircleDiagram& shape, int k) {
  const Component& c = shape.components[static_cast<std::size_t>(k)];
  int d = 0;
  for (const Arc& x : c.cups) d += distance(shape.block(), x.a, x.b);
  for (const Arc& x : c.caps) d += distance(shape.block(), x.a, x.b);
  return d;
}

int path_distance(const CircleDiagram& shape, int k, int from, int to, int* other) {
  const Component& c = shape.components[static_cast<std::size_t>(k)];
  if (!c.circle) throw DomainError("path distance requested on a line");
  std::map<int, int> below = partner_map(c.cups);
  std::map<int, int> above = partner_map(c.caps);
  int total = component_distance(shape, k);
  int arcs = static_cast<int>(c.cups.size() + c.caps.size());
  int d = 0, steps = 0, v = from;
  bool down = true;
  while (v != to) {
    int w = down ? below.at(v) : above.at(v);
    d += distance(shape.block(), v, w);
    v = w;
    down = !down;
    ++steps;
    if (steps > arcs) throw DomainError("vertex is not on the given circle");
  }
  int chosen = 2 * steps <= arcs ? d : total - d;
  if (other) *other = total - chosen;
  return chosen;
}

}  // namespace bk
