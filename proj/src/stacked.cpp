#include "bk/stacked.hpp"

#include <algorithm>

#include "bk/errors.hpp"

namespace bk {

int StackedDiagram::add_node(int x, int line) {
  nodes_.push_back({x, line});
  incident_.emplace_back();
  return static_cast<int>(nodes_.size()) - 1;
}

int StackedDiagram::node(int x, int line) const {
  for (std::size_t k = 0; k < nodes_.size(); ++k)
    if (nodes_[k].x == x && nodes_[k].line == line) return static_cast<int>(k);
  return -1;
}

int StackedDiagram::add_edge(int u, int v, int band, int length) {
  int lo = std::min(nodes_[static_cast<std::size_t>(u)].x, nodes_[static_cast<std::size_t>(v)].x);
  int hi = std::max(nodes_[static_cast<std::size_t>(u)].x, nodes_[static_cast<std::size_t>(v)].x);
  edges_.push_back({u, v, band, lo, hi, length, true});
  int e = static_cast<int>(edges_.size()) - 1;
  incident_[static_cast<std::size_t>(u)].push_back(e);
  incident_[static_cast<std::size_t>(v)].push_back(e);
  return e;
}

void StackedDiagram::remove_edge(int e) {
  Edge& x = edges_[static_cast<std::size_t>(e)];
  x.alive = false;
  for (int n : {x.u, x.v}) {
    auto& inc = incident_[static_cast<std::size_t>(n)];
    inc.erase(std::remove(inc.begin(), inc.end(), e), inc.end());
  }
}

int StackedDiagram::find_edge(int u, int v, int band) const {
  for (int e : incident_[static_cast<std::size_t>(u)]) {
    const Edge& x = edges_[static_cast<std::size_t>(e)];
    if (x.band == band && ((x.u == u && x.v == v) || (x.u == v && x.v == u))) return e;
  }
  return -1;
}

void StackedDiagram::compute() {
  comp_.assign(nodes_.size(), -1);
  members_.clear();
  for (std::size_t s = 0; s < nodes_.size(); ++s) {
    if (comp_[s] >= 0) continue;
    int c = static_cast<int>(members_.size());
    members_.emplace_back();
    std::vector<int> todo{static_cast<int>(s)};
    comp_[s] = c;
    while (!todo.empty()) {
      int n = todo.back();
      todo.pop_back();
      members_.back().push_back(n);
      for (int e : incident_[static_cast<std::size_t>(n)]) {
        const Edge& x = edges_[static_cast<std::size_t>(e)];
        int m = x.u == n ? x.v : x.u;
        if (comp_[static_cast<std::size_t>(m)] < 0) {
          comp_[static_cast<std::size_t>(m)] = c;
          todo.push_back(m);
        }
      }
    }
    std::sort(members_.back().begin(), members_.back().end());
  }
}

std::vector<int> StackedDiagram::edges_of(int comp) const {
  std::vector<int> out;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].alive && comp_[static_cast<std::size_t>(edges_[e].u)] == comp) out.push_back(static_cast<int>(e));
  return out;
}

bool StackedDiagram::closed(int comp) const {
  for (int n : members(comp))
    if (degree(n) != 2) return false;
  return true;
}

int StackedDiagram::rightmost(int comp) const {
  int best = -1;
  for (int n : members(comp)) {
    if (best < 0) {
      best = n;
      continue;
    }
    const Node& a = nodes_[static_cast<std::size_t>(n)];
    const Node& b = nodes_[static_cast<std::size_t>(best)];
    if (a.x > b.x || (a.x == b.x && a.line < b.line)) best = n;
  }
  return best;
}

int StackedDiagram::length(int comp) const {
  int d = 0;
  for (int e : edges_of(comp)) d += edges_[static_cast<std::size_t>(e)].length;
  return d;
}

bool StackedDiagram::inside(int a, int b) const {
  if (a == b) return false;
  const Node& start = nodes_[static_cast<std::size_t>(members(a).front())];
  // Vertical ray from (start.x + epsilon, start.line) upwards.
  int crossings = 0;
  for (const Edge& e : edges_) {
    if (!e.alive || comp_[static_cast<std::size_t>(e.u)] != b) continue;
    if (e.band >= start.line && e.lo <= start.x && start.x < e.hi) ++crossings;
  }
  return crossings % 2 == 1;
}

int StackedDiagram::parent(int comp) const {
  int best = -1, best_depth = -1;
  for (int b = 0; b < component_count(); ++b) {
    if (!closed(b) || !inside(comp, b)) continue;
    int depth = 0;
    for (int z = 0; z < component_count(); ++z)
      if (closed(z) && inside(b, z)) ++depth;
    if (depth > best_depth) best = b, best_depth = depth;
  }
  return best;
}

std::vector<int> StackedDiagram::children(int comp) const {
  std::vector<int> out;
  for (int k = 0; k < component_count(); ++k)
    if (k != comp && closed(k) && parent(k) == comp) out.push_back(k);
  return out;
}

int StackedDiagram::path_length(int from, int to, int* other) const {
  int c = component(from);
  if (component(to) != c || !closed(c)) throw DomainError("path requested between nodes not on a common circle");
  int total = length(c);
  int edges = static_cast<int>(edges_of(c).size());
  int d = 0, steps = 0, n = from, prev_edge = -1;
  while (n != to) {
    int e = incident_[static_cast<std::size_t>(n)][0];
    if (e == prev_edge) e = incident_[static_cast<std::size_t>(n)][1];
    const Edge& x = edges_[static_cast<std::size_t>(e)];
    d += x.length;
    n = x.u == n ? x.v : x.u;
    prev_edge = e;
    if (++steps > edges) invariant_failed("path traversal did not terminate");
  }
  int chosen = 2 * steps <= edges ? d : total - d;
  if (other) *other = total - chosen;
  return chosen;
}

}  // namespace bk
