#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <random>
#include <utility>
#include <vector>

#include "bk/arc_diagrams.hpp"
#include "bk/laurent.hpp"
#include "bk/stacked.hpp"

namespace bk {

using Coeff = std::int64_t;
// Sparse vector over basis indices: sorted by index, no zero coefficients.
using Vec = std::vector<std::pair<int, Coeff>>;

Vec add(const Vec& a, const Vec& b, Coeff scale = 1);
// Reduces coefficients into [0, p) and drops zeros; p == 0 leaves a unchanged.
Vec reduce(Vec a, std::int64_t p);

enum class SurgeryCase { MergeBothAnticlockwise, MergeMixed, MergeBothClockwise, SplitAnticlockwise, SplitClockwise };

// Orientation-independent data of one surgery. Components are indices into
// the stacked diagram before ("pre") or after ("post") the surgery.
struct SurgeryStep {
  Arc pair;
  int saddle = 0;
  bool split = false;
  bool nested = false;

  int cap_side = -1;  // merge: pre component through (i, line 0)
  int cup_side = -1;  // merge: pre component through (i, line 1)
  int merged = -1;    // merge: post component
  int whole = -1;     // split: pre component
  int part_i = -1;    // split: post component through the vertical at i
  int part_j = -1;
  std::vector<int> carry;  // pre -> post for components not involved, else -1
  int pre_count = 0;
  int post_count = 0;

  // Path distances, through fewer arcs and through the complementary path.
  int dot_cap_side = 0, dot_cap_side_alt = 0;  // merge: t(cap side) to t(merged)
  int dot_cup_side = 0, dot_cup_side_alt = 0;
  int dot_whole = 0, dot_whole_alt = 0;  // split: t(whole) to t(part_j), in whole
  int ndot_i = 0, ndot_i_alt = 0;        // split: i to t(part_i)
  int ndot_j = 0, ndot_j_alt = 0;
  int inner_length = 0;  // d(C_in) for nested steps
  bool inner_is_cap_side = false;

  // Positions p(.) of the relevant rightmost vertices and surgery endpoints.
  int p_cap_side = 0, p_cup_side = 0, p_merged = 0;
  int p_whole = 0, p_part_i = 0, p_part_j = 0, p_i = 0, p_j = 0;
  // The circle whose internal phantom edges enter the sign: the outer circle
  // for nested steps, the split circle otherwise. Lengths of its direct
  // children include the inner circle for nested steps.
  int outer_length = 0;
  std::vector<int> outer_children;
};

// A step applied to one orientation, as seen by an observer. `variant`
// distinguishes which circle is clockwise: for a mixed merge 0 means the cap
// side, for an anticlockwise split 0 means the copy with part_i clockwise.
struct StepEvent {
  const SurgeryStep* step;
  SurgeryCase kind;
  int variant;
  int sign;          // 0 for the vanishing merge
  int arc_exponent;  // sign == (-1)^arc_exponent when sign != 0
};
using StepObserver = std::function<void(const StepEvent&)>;

int arc_exponent(const SurgeryStep& s, SurgeryCase kind, int variant);

class Algebra;

// The stacked diagram D_l of a product (lambda mu*)(mu eta*) together with
// its remaining middle cup-cap pairs.
class SurgeryState {
 public:
  SurgeryState(const Algebra& alg, int lambda, int mu, int eta);

  const StackedDiagram& diagram() const { return d_; }
  const std::vector<Arc>& remaining() const { return remaining_; }
  // Remaining pairs not nested inside another remaining pair, ascending.
  std::vector<Arc> available() const;
  bool done() const { return remaining_.empty(); }
  SurgeryStep step(const Arc& pair);

 private:
  const Block* block_;
  StackedDiagram d_;
  std::vector<Arc> remaining_;
};

struct MultPlan {
  int lambda = 0, mu = 0, eta = 0;
  int initial_count = 0;
  std::vector<int> bottom_circle_comp;  // circle of lambda mu* -> D_0 component
  std::vector<int> top_circle_comp;     // circle of mu eta* -> D_0 component
  std::vector<SurgeryStep> steps;
  std::vector<int> final_circle;  // D_r component -> circle of lambda eta*
};

struct BasisElement {
  Weight lambda;
  Weight nu;
  Weight mu;
  int degree = 0;
};

// Surgery order: given the available pairs, returns the index to perform.
using OrderChooser = std::function<std::size_t(const std::vector<Arc>&)>;

class Algebra {
 public:
  explicit Algebra(Block block);

  const Block& block() const { return block_; }
  // Cups-only weights in lexicographic order.
  const std::vector<Weight>& weights() const { return weights_; }
  const std::vector<CupDiagram>& cup_diagrams() const { return cups_; }
  int weight_index(const Weight& w) const;

  std::size_t dimension() const { return elements_.size(); }
  const BasisElement& element(int index) const { return elements_[static_cast<std::size_t>(index)]; }
  OrientedCircleDiagram diagram(int index) const;
  int index_of(const Weight& lambda, const Weight& nu, const Weight& mu) const;
  int lambda_of(int index) const { return keys_[static_cast<std::size_t>(index)].lambda; }
  int mu_of(int index) const { return keys_[static_cast<std::size_t>(index)].mu; }
  std::uint64_t mask_of(int index) const { return keys_[static_cast<std::size_t>(index)].mask; }
  const CircleDiagram& shape(int lambda, int mu) const;
  int index_of_mask(int lambda, int mu, std::uint64_t mask) const;

  // Leftmost-order plan, cached.
  const MultPlan& plan(int lambda, int mu, int eta) const;
  MultPlan make_plan(int lambda, int mu, int eta, const OrderChooser& choose) const;

  Vec mult(int x, int y, const StepObserver& observer = nullptr) const;
  Vec mult(int x, int y, const MultPlan& plan, const StepObserver& observer = nullptr) const;
  Vec mult(const Vec& x, const Vec& y, std::int64_t modulus = 0) const;

  Vec idempotent(int lambda) const;
  Vec unit() const;
  Laurent poincare() const;
  Vec degree_part(const Vec& x, int degree) const;

 private:
  struct Key {
    int lambda, mu;
    std::uint64_t mask;
  };
  struct Pair {
    CircleDiagram shape;
    std::vector<int> index_of_mask;
  };

  Block block_;
  std::vector<Weight> weights_;
  std::vector<CupDiagram> cups_;
  std::vector<Pair> pairs_;  // lambda * |weights| + mu
  std::vector<BasisElement> elements_;
  std::vector<Key> keys_;
  mutable std::vector<std::unique_ptr<MultPlan>> plans_;
  mutable std::unique_ptr<std::once_flag[]> plan_once_;
};

OrderChooser leftmost_order();
// Uniformly random among the available pairs.
OrderChooser random_order(std::mt19937_64& rng);

}  // namespace bk
