#pragma once

#include <string>
#include <vector>

#include "bk/algebra.hpp"
#include "bk/laurent.hpp"

namespace bk {

class LabelVector {
 public:
  LabelVector() = default;
  LabelVector(int first, std::vector<int> labels);

  int at(int i) const;
  void set(int i, int label);
  bool empty() const { return labels_.empty(); }
  int first() const { return first_; }
  int last() const { return first_ + static_cast<int>(labels_.size()) - 1; }
  int sum() const;
  bool balanced() const;
  // Digits over [a, b], e.g. "2200".
  std::string str(int a, int b) const;
  std::string str() const;

  friend bool operator==(const LabelVector&, const LabelVector&) = default;

 private:
  void trim();
  int first_ = 0;
  std::vector<int> labels_;
};

// 'o' -> 0, '*' -> 1, 'x' -> 2.
LabelVector label_vector(const Block& b);

struct FMove {
  int i;
  int r;
  friend bool operator==(const FMove&, const FMove&) = default;
};

struct WebSlices {
  LabelVector base;
  std::vector<FMove> moves;
  friend bool operator==(const WebSlices&, const WebSlices&) = default;
};

// (k_i, k_{i+1}) -> (k_i - r, k_{i+1} + r); throws DomainError when illegal.
LabelVector apply_move(const LabelVector& k, FMove m);
LabelVector top_boundary(const WebSlices& w);

// Greedy right-to-left F-generated web of a cups-only weight. With
// left_first, left endpoints moving left are shifted before the right
// endpoint moves; the result differs only by distant commutations.
WebSlices web_of_weight(const Weight& w, bool left_first = false);
// Bubbles distant commuting moves into a canonical order.
WebSlices commutation_normal_form(WebSlices w);
CupDiagram topological_reduction(const WebSlices& w, const Block& top);

// Planar closed web w(lambda) followed by the mirror image of w(mu).
class StackedWeb {
 public:
  StackedWeb(const Weight& lambda, const Weight& mu);

  struct Segment {
    int x0, y0, x1, y1;  // coordinates scaled by 4; slices are 4 units tall
    int label;
  };
  const std::vector<Segment>& segments() const { return segs_; }
  int circle_count() const { return static_cast<int>(circles_.size()); }
  int phantom_edge_count() const { return static_cast<int>(phantoms_.size()); }
  // Web circle through the middle-line vertex at position x.
  int circle_at(int x) const;
  // Middle-line vertices of a web circle, ascending.
  const std::vector<int>& vertices(int circle) const { return circle_vertices_[static_cast<std::size_t>(circle)]; }
  bool inside(int a, int b) const;
  int parent(int circle) const;
  std::vector<int> children(int circle) const;
  // Phantom edges inside the circle but outside every circle nested in it.
  int ipe(int circle) const;
  int middle_height() const { return middle_; }

 private:
  bool point_inside(int px, int py, int circle) const;

  std::vector<Segment> segs_;
  std::vector<std::vector<int>> circles_;   // segment ids of ordinary circles
  std::vector<std::vector<int>> phantoms_;  // segment ids of phantom edges
  std::vector<std::vector<int>> circle_vertices_;
  int middle_ = 0;
};

// ipe of the circle of lambda mu* through vertex x, computed on the web.
int ipe(const Weight& lambda, const Weight& mu, int x);
// ipe of the same circle after deleting every circle nested inside it.
int ipe_minus_nested(const Weight& lambda, const Weight& mu, int x);
// Weights of the diagram with all circles nested inside the circle through
// x removed, preserving the positions of the remaining vertices.
std::pair<Weight, Weight> remove_nested(const Weight& lambda, const Weight& mu, int x);

// (d_out + sum d_nested - 2 + 2 * #nested) / 4; throws InvariantViolation
// when not integral.
int ipe_formula(int d_out, const std::vector<int>& nested_lengths);

// Sign exponent of a surgery step rebuilt from internal phantom edge counts
// and saddle width; agrees mod 2 with arc_exponent.
int web_exponent(const SurgeryStep& s, SurgeryCase kind, int variant);

// Degree of a foam from the Euler characteristic of its topological
// reduction, its dots and its vertical boundary components.
double foam_degree(int chi, int dots, int vbound);
int shift_d(const LabelVector& k);
int eval_dotted_sphere(int a, int b);
Laurent eval_closed_web_q(int circles);

// Degree of a basis element recomputed from its web circles: each circle
// contributes its number of cups, plus one with a dot, minus one without.
int web_degree(const Algebra& alg, int index);

}  // namespace bk
