#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bk/blocks.hpp"

namespace bk {

struct Arc {
  int a = 0;  // left endpoint
  int b = 0;  // right endpoint
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct CupDiagram {
  Block block;
  std::vector<Arc> cups;  // sorted
  std::vector<int> rays;  // sorted
  friend bool operator==(const CupDiagram&, const CupDiagram&) = default;
};

struct CapDiagram {
  Block block;
  std::vector<Arc> caps;
  std::vector<int> rays;
  friend bool operator==(const CapDiagram&, const CapDiagram&) = default;
};

// Validates arcs against the block (endpoints exactly the stars, no crossings,
// no ray under a cup) and sorts them. Throws DomainError.
CupDiagram make_cup_diagram(const Block& block, std::vector<Arc> cups, std::vector<int> rays);

CupDiagram canonical_cup(const Weight& w);
CapDiagram canonical_cap(const Weight& w);
CapDiagram reflect(const CupDiagram& c);
CupDiagram reflect(const CapDiagram& d);

// Weight lambda with canonical_cup(lambda) == c; requires c to have no rays.
Weight cup_weight(const CupDiagram& c);

struct Component {
  std::vector<int> vertices;  // ascending
  std::vector<Arc> cups;
  std::vector<Arc> caps;
  bool circle = true;
  int rightmost() const { return vertices.back(); }
};

struct CircleDiagram {
  CupDiagram bottom;
  CapDiagram top;
  std::vector<Component> components;
  // parent[k] is the innermost circle strictly containing circle k, or -1.
  std::vector<int> parent;

  const Block& block() const { return bottom.block; }
  int component_of(int vertex) const;
  int circle_count() const;
  int line_count() const;
  bool inside(int inner, int outer) const;
  std::vector<int> children(int k) const;
  std::vector<int> descendants(int k) const;
};

// Throws DomainError on a block mismatch.
CircleDiagram stack(const CupDiagram& c, const CapDiagram& d);

bool is_oriented(const CupDiagram& c, const Weight& w);
bool is_oriented(const CapDiagram& d, const Weight& w);
bool is_oriented(const CircleDiagram& shape, const Weight& w);

enum class CircleState { Anticlockwise, Clockwise };

struct OrientedCircleDiagram {
  CircleDiagram shape;
  Weight nu;
  CircleState state(int k) const;
};

// Labels every vertex of component k so that arcs join opposite symbols and
// the rightmost vertex gets '^' (anticlockwise) or 'v' (clockwise).
Weight orient_component(const CircleDiagram& shape, const Weight& w, int k, CircleState s);

std::vector<OrientedCircleDiagram> orientations(const CircleDiagram& shape);

// Clockwise cups plus clockwise caps.
int degree(const OrientedCircleDiagram& x);
// Sum over circles of (#cups + 1) for clockwise, (#cups - 1) for anticlockwise.
int degree_by_circles(const OrientedCircleDiagram& x);

// Sum of arc distances of component k.
int component_distance(const CircleDiagram& shape, int k);
// Distance along circle k between two of its vertices through fewer arcs;
// `other` receives the distance of the complementary path when given.
int path_distance(const CircleDiagram& shape, int k, int from, int to, int* other = nullptr);

}  // namespace bk
