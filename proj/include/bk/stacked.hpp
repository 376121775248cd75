#pragma once

#include <vector>

namespace bk {

// Planar diagram drawn on horizontal lines 0..top. Vertices are (x, line)
// nodes; every edge lives in a band: band -1 lies below line 0, band k lies
// between lines k and k+1, and band `top` lies above the top line. Within a
// band an edge is either an arc returning to the same line or a strand
// joining line k to line k+1, possibly slanted.
class StackedDiagram {
 public:
  struct Node {
    int x;
    int line;
  };
  struct Edge {
    int u, v;
    int band;
    int lo, hi;  // horizontal extent
    int length;  // arc distance; 0 for strands
    bool alive = true;
  };

  int add_node(int x, int line);
  // Returns the node at (x, line) or -1.
  int node(int x, int line) const;
  int add_edge(int u, int v, int band, int length);
  void remove_edge(int e);
  // Alive edge joining u and v inside `band`, or -1.
  int find_edge(int u, int v, int band) const;

  // Recomputes connected components; call after editing.
  void compute();

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int component_count() const { return static_cast<int>(members_.size()); }
  int component(int node) const { return comp_[static_cast<std::size_t>(node)]; }
  const std::vector<int>& members(int comp) const { return members_[static_cast<std::size_t>(comp)]; }
  std::vector<int> edges_of(int comp) const;
  // A component is closed when every node on it has two incident edges.
  bool closed(int comp) const;
  // Node of maximal x, lowest line on ties.
  int rightmost(int comp) const;
  int length(int comp) const;
  // Whether closed component a lies inside closed component b.
  bool inside(int a, int b) const;
  // Innermost containing closed component, or -1.
  int parent(int comp) const;
  std::vector<int> children(int comp) const;
  // Length of the path between two nodes of a closed component through fewer
  // edges; `other` receives the length of the complementary path.
  int path_length(int from, int to, int* other = nullptr) const;
  int degree(int node) const { return static_cast<int>(incident_[static_cast<std::size_t>(node)].size()); }
  const std::vector<int>& incident(int node) const { return incident_[static_cast<std::size_t>(node)]; }

 private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> comp_;
  std::vector<std::vector<int>> members_;
};

}  // namespace bk
