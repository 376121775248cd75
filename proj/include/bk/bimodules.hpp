#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "bk/algebra.hpp"

namespace bk {

enum class MoveKind { PlusAlpha, MinusAlpha, PlusTwoAlpha, MinusTwoAlpha };

std::string move_kind_name(MoveKind k);  // "+a_i", "-a_i", "+2a_i", "-2a_i"
MoveKind parse_move_kind(const std::string& s);

// Local picture of a single admissible matching at (i, i+1). RayRight means
// the star moves from i to i+1 going up.
enum class Picture { RayLeft, RayRight, Cup, Cap, Empty };

struct Matching {
  Block source;
  Block target;
  MoveKind kind = MoveKind::PlusAlpha;
  int i = 0;
  Picture picture = Picture::Empty;
  friend bool operator==(const Matching& a, const Matching& b) {
    return a.source == b.source && a.target == b.target && a.kind == b.kind && a.i == b.i;
  }
};

// The unique matching of the given kind at (i, i+1) out of `source`, if the
// local symbols fit one of the pictures.
std::optional<Matching> fit_matching(const Block& source, MoveKind kind, int i);
// Validates a fully specified matching. Throws DomainError.
Matching make_matching(const Block& source, const Block& target, MoveKind kind, int i);

struct CompositeMatching {
  std::vector<Block> blocks;  // blocks[k] is the source of layers[k]
  std::vector<Matching> layers;
  friend bool operator==(const CompositeMatching&, const CompositeMatching&) = default;
};

// Throws DomainError when consecutive layers do not compose.
CompositeMatching compose(std::vector<Matching> layers);
CompositeMatching identity_matching(const Block& b);

struct StretchedDiagram {
  int lambda = 0;            // index into the bottom algebra's weights
  int mu = 0;                // index into the top algebra's weights
  std::uint64_t labels = 0;  // bit per node of the stretched geometry, set for '^'
  int degree = 0;
};

// Cap diagram over the bottom line (or cup diagram over the top line) with
// the component correspondence used to lift orientations.
struct Reduction {
  std::vector<Arc> arcs;
  // For each node of the stretched geometry: the boundary node it is joined
  // to, or -1, and whether its label is opposite to that node's label.
  std::vector<int> anchor;
  std::vector<bool> flip;
};

class Bimodule {
 public:
  explicit Bimodule(CompositeMatching t);

  const CompositeMatching& matching() const { return t_; }
  const Algebra& bottom() const { return *bottom_; }
  const Algebra& top() const { return *top_; }
  int shift() const { return shift_; }
  int line_count() const { return static_cast<int>(lines_.size()); }
  // Blocks of the stretched geometry, empty moves expanded.
  const std::vector<Block>& lines() const { return lines_; }
  struct Node {
    int x;
    int line;
  };
  const std::vector<Node>& nodes() const { return nodes_; }
  int node(int x, int line) const;

  std::size_t dimension() const { return basis_.size(); }
  const StretchedDiagram& element(int k) const { return basis_[static_cast<std::size_t>(k)]; }
  int index_of(int lambda, int mu, std::uint64_t labels) const;
  // Orientation weight on one line of a basis element.
  Weight line_weight(int k, int line) const;
  Laurent graded_dimension() const;
  // Node sets of the circles of the stretched diagram (lambda, mu).
  std::vector<std::vector<int>> circles(int lambda, int mu) const;
  // Whether a circle is one of those produced by substituting an empty move.
  bool internal(const std::vector<int>& circle) const;

  const Reduction& downward(int mu) const { return down_[static_cast<std::size_t>(mu)]; }
  const Reduction& upward(int lambda) const { return up_[static_cast<std::size_t>(lambda)]; }
  CapDiagram downward_reduction(int mu) const;
  CupDiagram upward_reduction(int lambda) const;
  // Downward reduction recomputed from the full diagram with bottom cups of
  // `lambda` present; equals downward_reduction(mu) by construction.
  CapDiagram downward_reduction_with_bottom(int lambda, int mu) const;

  Vec act_left(int a, int m) const;
  Vec act_right(int m, int b) const;
  Vec act_left(const Vec& a, const Vec& m) const;
  Vec act_right(const Vec& m, const Vec& b) const;

 private:
  StackedDiagram geometry(int lambda, int mu) const;  // -1 omits that boundary
  Reduction reduce_to(int line, const StackedDiagram& g) const;

  CompositeMatching t_;
  std::shared_ptr<Algebra> bottom_, top_;
  int shift_ = 0;
  std::vector<Block> lines_;
  struct Layer {
    std::vector<std::pair<int, int>> strands;  // (x on lower line, x on upper line)
    std::vector<Arc> caps;                      // on the lower line
    std::vector<Arc> cups;                      // on the upper line
  };
  std::vector<Layer> layers_;
  std::vector<std::pair<int, int>> empty_sites_;  // (line, i) of substituted circles
  std::vector<Node> nodes_;
  std::vector<StretchedDiagram> basis_;
  std::map<std::tuple<int, int, std::uint64_t>, int> index_;
  std::vector<Reduction> down_, up_;
};

// Generator word such as "E2 F1^(2) 1", applied right to left starting from
// `start`. Returns nullopt when the word acts as zero.
std::optional<CompositeMatching> howe_cm(const Block& start, const std::string& word);

}  // namespace bk
