#include "bk/algebra.hpp"

#include <algorithm>
#include <map>

#include "bk/errors.hpp"

namespace bk {

Vec add(const Vec& a, const Vec& b, Coeff scale) {
  Vec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      if (Coeff c = scale * b[j].second) out.emplace_back(b[j].first, c);
      ++j;
    } else {
      if (Coeff c = a[i].second + scale * b[j].second) out.emplace_back(a[i].first, c);
      ++i, ++j;
    }
  }
  return out;
}

Vec reduce(Vec a, std::int64_t p) {
  if (p == 0) return a;
  Vec out;
  for (auto [k, c] : a) {
    Coeff r = ((c % p) + p) % p;
    if (r) out.emplace_back(k, r);
  }
  return out;
}

namespace {

int quarter(int d) {
  if ((d - 2) % 4 != 0)
    invariant_failed("circle distance " + std::to_string(d) + " is not congruent to 2 mod 4; topological exponent is not integral");
  return (d - 2) / 4;
}

}  // namespace

int arc_exponent(const SurgeryStep& s, SurgeryCase kind, int variant) {
  switch (kind) {
    case SurgeryCase::MergeBothAnticlockwise:
      return s.nested ? 1 + quarter(s.inner_length) + s.saddle : 0;
    case SurgeryCase::MergeMixed:
      return (variant == 0 ? s.dot_cap_side : s.dot_cup_side) + (s.nested ? 1 + quarter(s.inner_length) + s.saddle : 0);
    case SurgeryCase::MergeBothClockwise:
      return 0;
    case SurgeryCase::SplitAnticlockwise: {
      int x = s.nested ? quarter(s.inner_length) : s.saddle;
      return variant == 0 ? s.ndot_i + x : 1 + s.ndot_j + x;
    }
    case SurgeryCase::SplitClockwise: {
      int x = s.nested ? quarter(s.inner_length) : s.saddle;
      return s.dot_whole + s.ndot_i + x;
    }
  }
  return 0;
}

namespace {

int star_rank(const std::vector<int>& stars, int x) {
  auto it = std::lower_bound(stars.begin(), stars.end(), x);
  if (it == stars.end() || *it != x) invariant_failed("vertex is not a star");
  return static_cast<int>(it - stars.begin());
}

}  // namespace

SurgeryState::SurgeryState(const Algebra& alg, int lambda, int mu, int eta) : block_(&alg.block()) {
  std::vector<int> stars = alg.block().stars();
  int n = static_cast<int>(stars.size());
  for (int line = 0; line < 2; ++line)
    for (int x : stars) d_.add_node(x, line);
  auto node = [&](int x, int line) { return line * n + star_rank(stars, x); };
  auto arc = [&](const Arc& a, int line, int band) { d_.add_edge(node(a.a, line), node(a.b, line), band, distance(*block_, a.a, a.b)); };
  const auto& cups = alg.cup_diagrams();
  for (const Arc& a : cups[static_cast<std::size_t>(lambda)].cups) arc(a, 0, -1);
  for (const Arc& a : cups[static_cast<std::size_t>(mu)].cups) arc(a, 0, 0);
  for (const Arc& a : cups[static_cast<std::size_t>(mu)].cups) arc(a, 1, 0);
  for (const Arc& a : cups[static_cast<std::size_t>(eta)].cups) arc(a, 1, 1);
  d_.compute();
  remaining_ = cups[static_cast<std::size_t>(mu)].cups;
}

std::vector<Arc> SurgeryState::available() const {
  std::vector<Arc> out;
  for (const Arc& p : remaining_) {
    bool covered = std::any_of(remaining_.begin(), remaining_.end(), [&](const Arc& q) { return q.a < p.a && p.b < q.b; });
    if (!covered) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SurgeryStep SurgeryState::step(const Arc& pair) {
  auto it = std::find(remaining_.begin(), remaining_.end(), pair);
  if (it == remaining_.end()) throw DomainError("surgery pair is not a remaining middle cup-cap pair");
  const Block& b = *block_;
  StackedDiagram pre = d_;
  int i0 = d_.node(pair.a, 0), i1 = d_.node(pair.a, 1), j0 = d_.node(pair.b, 0), j1 = d_.node(pair.b, 1);
  auto px = [&](const StackedDiagram& g, int node) { return position(b, g.nodes()[static_cast<std::size_t>(node)].x); };
  auto children_lengths = [](const StackedDiagram& g, int c) {
    std::vector<int> out;
    for (int k : g.children(c)) out.push_back(g.length(k));
    return out;
  };

  SurgeryStep s;
  s.pair = pair;
  s.saddle = saddle_width(b, pair.a, pair.b);
  s.pre_count = pre.component_count();
  s.p_i = position(b, pair.a);
  s.p_j = position(b, pair.b);
  int cap = pre.component(i0), cup = pre.component(i1);
  s.split = cap == cup;
  if (!s.split) {
    s.cap_side = cap;
    s.cup_side = cup;
    bool cap_in = pre.inside(cap, cup), cup_in = pre.inside(cup, cap);
    check_invariant(!(cap_in && cup_in), "two circles contain each other");
    s.nested = cap_in || cup_in;
    if (s.nested) {
      int inner = cap_in ? cap : cup, outer = cap_in ? cup : cap;
      s.inner_is_cap_side = cap_in;
      s.inner_length = pre.length(inner);
      s.outer_length = pre.length(outer);
      s.outer_children = children_lengths(pre, outer);
    }
    s.p_cap_side = px(pre, pre.rightmost(cap));
    s.p_cup_side = px(pre, pre.rightmost(cup));
  } else {
    s.whole = cap;
    s.p_whole = px(pre, pre.rightmost(cap));
  }

  d_.remove_edge(d_.find_edge(i0, j0, 0));
  d_.remove_edge(d_.find_edge(i1, j1, 0));
  d_.add_edge(i0, i1, 0, 0);
  d_.add_edge(j0, j1, 0, 0);
  d_.compute();
  remaining_.erase(it);
  s.post_count = d_.component_count();

  if (!s.split) {
    s.merged = d_.component(i0);
    int t = d_.rightmost(s.merged);
    s.p_merged = px(d_, t);
    s.dot_cap_side = d_.path_length(pre.rightmost(cap), t, &s.dot_cap_side_alt);
    s.dot_cup_side = d_.path_length(pre.rightmost(cup), t, &s.dot_cup_side_alt);
  } else {
    s.part_i = d_.component(i0);
    s.part_j = d_.component(j0);
    check_invariant(s.part_i != s.part_j, "split surgery did not separate the circle");
    bool i_in = d_.inside(s.part_i, s.part_j), j_in = d_.inside(s.part_j, s.part_i);
    check_invariant(!(i_in && j_in), "two circles contain each other");
    s.nested = i_in || j_in;
    int ti = d_.rightmost(s.part_i), tj = d_.rightmost(s.part_j);
    s.p_part_i = px(d_, ti);
    s.p_part_j = px(d_, tj);
    s.ndot_i = d_.path_length(i0, ti, &s.ndot_i_alt);
    s.ndot_j = d_.path_length(j0, tj, &s.ndot_j_alt);
    s.dot_whole = pre.path_length(pre.rightmost(cap), tj, &s.dot_whole_alt);
    if (s.nested) {
      int inner = i_in ? s.part_i : s.part_j, outer = i_in ? s.part_j : s.part_i;
      s.inner_length = d_.length(inner);
      s.outer_length = d_.length(outer);
      s.outer_children = children_lengths(d_, outer);
    } else {
      s.outer_length = pre.length(cap);
      s.outer_children = children_lengths(pre, cap);
    }
  }

  s.carry.assign(static_cast<std::size_t>(s.pre_count), -1);
  for (int k = 0; k < s.pre_count; ++k) {
    if (k == cap || k == cup) continue;
    s.carry[static_cast<std::size_t>(k)] = d_.component(pre.members(k).front());
  }
  return s;
}

Algebra::Algebra(Block block) : block_(std::move(block)) {
  if (!block_.balanced()) throw DomainError("the algebra is only defined over balanced blocks");
  weights_ = members(block_, true);
  for (const Weight& w : weights_) cups_.push_back(canonical_cup(w));
  std::size_t m = weights_.size();
  pairs_.resize(m * m);
  for (std::size_t l = 0; l < m; ++l) {
    for (std::size_t u = 0; u < m; ++u) {
      Pair& p = pairs_[l * m + u];
      p.shape = stack(cups_[l], reflect(cups_[u]));
      std::size_t c = p.shape.components.size();
      Weight base = weights_[l];
      std::vector<std::pair<Weight, std::uint64_t>> oriented;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
        Weight w = base;
        for (std::size_t k = 0; k < c; ++k)
          w = orient_component(p.shape, w, static_cast<int>(k), (mask >> k) & 1 ? CircleState::Clockwise : CircleState::Anticlockwise);
        oriented.emplace_back(w, mask);
      }
      std::sort(oriented.begin(), oriented.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      p.index_of_mask.assign(oriented.size(), -1);
      for (auto& [w, mask] : oriented) {
        p.index_of_mask[mask] = static_cast<int>(elements_.size());
        OrientedCircleDiagram d{p.shape, w};
        elements_.push_back({weights_[l], w, weights_[u], degree(d)});
        keys_.push_back({static_cast<int>(l), static_cast<int>(u), mask});
      }
    }
  }
  plans_.resize(m * m * m);
  plan_once_ = std::make_unique<std::once_flag[]>(m * m * m);
}

int Algebra::weight_index(const Weight& w) const {
  auto it = std::lower_bound(weights_.begin(), weights_.end(), w);
  if (it == weights_.end() || !(*it == w)) return -1;
  return static_cast<int>(it - weights_.begin());
}

const CircleDiagram& Algebra::shape(int lambda, int mu) const {
  return pairs_[static_cast<std::size_t>(lambda) * weights_.size() + static_cast<std::size_t>(mu)].shape;
}

int Algebra::index_of_mask(int lambda, int mu, std::uint64_t mask) const {
  return pairs_[static_cast<std::size_t>(lambda) * weights_.size() + static_cast<std::size_t>(mu)].index_of_mask[mask];
}

OrientedCircleDiagram Algebra::diagram(int index) const {
  const Key& k = keys_[static_cast<std::size_t>(index)];
  return {shape(k.lambda, k.mu), elements_[static_cast<std::size_t>(index)].nu};
}

int Algebra::index_of(const Weight& lambda, const Weight& nu, const Weight& mu) const {
  int l = weight_index(lambda), u = weight_index(mu);
  if (l < 0 || u < 0) return -1;
  const CircleDiagram& sh = shape(l, u);
  if (!is_oriented(sh, nu)) return -1;
  OrientedCircleDiagram d{sh, nu};
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < sh.components.size(); ++k)
    if (d.state(static_cast<int>(k)) == CircleState::Clockwise) mask |= std::uint64_t{1} << k;
  return index_of_mask(l, u, mask);
}

MultPlan Algebra::make_plan(int lambda, int mu, int eta, const OrderChooser& choose) const {
  MultPlan plan;
  plan.lambda = lambda;
  plan.mu = mu;
  plan.eta = eta;
  SurgeryState st(*this, lambda, mu, eta);
  const StackedDiagram& d = st.diagram();
  plan.initial_count = d.component_count();
  std::vector<int> seen(static_cast<std::size_t>(plan.initial_count), 0);
  for (const Component& c : shape(lambda, mu).components) {
    int comp = d.component(d.node(c.vertices.front(), 0));
    plan.bottom_circle_comp.push_back(comp);
    ++seen[static_cast<std::size_t>(comp)];
  }
  for (const Component& c : shape(mu, eta).components) {
    int comp = d.component(d.node(c.vertices.front(), 1));
    plan.top_circle_comp.push_back(comp);
    ++seen[static_cast<std::size_t>(comp)];
  }
  check_invariant(std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; }), "initial stacked diagram does not split into the circles of its halves");
  while (!st.done()) {
    std::vector<Arc> av = st.available();
    std::size_t pick = choose(av);
    check_invariant(pick < av.size(), "surgery order chose an unavailable pair");
    plan.steps.push_back(st.step(av[pick]));
  }
  plan.final_circle.assign(static_cast<std::size_t>(d.component_count()), -1);
  const CircleDiagram& fin = shape(lambda, eta);
  for (std::size_t k = 0; k < fin.components.size(); ++k) {
    int comp = d.component(d.node(fin.components[k].vertices.front(), 0));
    check_invariant(plan.final_circle[static_cast<std::size_t>(comp)] == -1, "final diagram circles are not in bijection with the result shape");
    plan.final_circle[static_cast<std::size_t>(comp)] = static_cast<int>(k);
  }
  check_invariant(d.component_count() == static_cast<int>(fin.components.size()), "final diagram has the wrong number of circles");
  return plan;
}

const MultPlan& Algebra::plan(int lambda, int mu, int eta) const {
  std::size_t m = weights_.size();
  std::size_t slot = (static_cast<std::size_t>(lambda) * m + static_cast<std::size_t>(mu)) * m + static_cast<std::size_t>(eta);
  std::call_once(plan_once_[slot], [&] { plans_[slot] = std::make_unique<MultPlan>(make_plan(lambda, mu, eta, leftmost_order())); });
  return *plans_[slot];
}

Vec Algebra::mult(int x, int y, const StepObserver& observer) const {
  const Key& kx = keys_[static_cast<std::size_t>(x)];
  const Key& ky = keys_[static_cast<std::size_t>(y)];
  if (kx.mu != ky.lambda) return {};
  return mult(x, y, plan(kx.lambda, kx.mu, ky.mu), observer);
}

Vec Algebra::mult(int x, int y, const MultPlan& plan, const StepObserver& observer) const {
  const Key& kx = keys_[static_cast<std::size_t>(x)];
  const Key& ky = keys_[static_cast<std::size_t>(y)];
  if (kx.mu != ky.lambda) return {};
  check_invariant(plan.lambda == kx.lambda && plan.mu == kx.mu && plan.eta == ky.mu, "plan does not match the factors");

  auto bit = [](std::uint64_t m, int k) { return static_cast<int>((m >> k) & 1); };
  std::uint64_t start = 0;
  for (std::size_t k = 0; k < plan.bottom_circle_comp.size(); ++k)
    if (bit(kx.mask, static_cast<int>(k))) start |= std::uint64_t{1} << plan.bottom_circle_comp[k];
  for (std::size_t k = 0; k < plan.top_circle_comp.size(); ++k)
    if (bit(ky.mask, static_cast<int>(k))) start |= std::uint64_t{1} << plan.top_circle_comp[k];

  std::vector<std::pair<std::uint64_t, Coeff>> terms{{start, 1}}, next;
  for (const SurgeryStep& s : plan.steps) {
    next.clear();
    auto emit = [&](std::uint64_t mask, Coeff c, SurgeryCase kind, int variant) {
      int e = arc_exponent(s, kind, variant);
      int sign = e % 2 == 0 ? 1 : -1;
      if (observer) observer({&s, kind, variant, sign, e});
      next.emplace_back(mask, sign * c);
    };
    for (auto [mask, c] : terms) {
      std::uint64_t carried = 0;
      for (int k = 0; k < s.pre_count; ++k)
        if (s.carry[static_cast<std::size_t>(k)] >= 0 && bit(mask, k)) carried |= std::uint64_t{1} << s.carry[static_cast<std::size_t>(k)];
      if (!s.split) {
        int a = bit(mask, s.cap_side), b = bit(mask, s.cup_side);
        std::uint64_t cw = std::uint64_t{1} << s.merged;
        if (a == 0 && b == 0) {
          emit(carried, c, SurgeryCase::MergeBothAnticlockwise, 0);
        } else if (a != b) {
          emit(carried | cw, c, SurgeryCase::MergeMixed, a == 1 ? 0 : 1);
        } else if (observer) {
          observer({&s, SurgeryCase::MergeBothClockwise, 0, 0, 0});
        }
      } else {
        std::uint64_t ci = std::uint64_t{1} << s.part_i, cj = std::uint64_t{1} << s.part_j;
        if (bit(mask, s.whole) == 0) {
          emit(carried | ci, c, SurgeryCase::SplitAnticlockwise, 0);
          emit(carried | cj, c, SurgeryCase::SplitAnticlockwise, 1);
        } else {
          emit(carried | ci | cj, c, SurgeryCase::SplitClockwise, 0);
        }
      }
    }
    std::swap(terms, next);
  }

  std::map<int, Coeff> acc;
  for (auto [mask, c] : terms) {
    std::uint64_t circles = 0;
    for (std::size_t k = 0; k < plan.final_circle.size(); ++k)
      if (bit(mask, static_cast<int>(k))) circles |= std::uint64_t{1} << plan.final_circle[k];
    acc[index_of_mask(kx.lambda, ky.mu, circles)] += c;
  }
  Vec out;
  for (auto [k, c] : acc)
    if (c) out.emplace_back(k, c);
  return out;
}

Vec Algebra::mult(const Vec& x, const Vec& y, std::int64_t modulus) const {
  std::map<int, Coeff> acc;
  for (auto [i, a] : x)
    for (auto [j, b] : y)
      for (auto [k, c] : mult(i, j)) acc[k] += a * b * c;
  Vec out;
  for (auto [k, c] : acc)
    if (c) out.emplace_back(k, c);
  return reduce(std::move(out), modulus);
}

Vec Algebra::idempotent(int lambda) const { return {{index_of_mask(lambda, lambda, 0), 1}}; }

Vec Algebra::unit() const {
  Vec out;
  for (std::size_t l = 0; l < weights_.size(); ++l) out = add(out, idempotent(static_cast<int>(l)));
  return out;
}

Laurent Algebra::poincare() const {
  Laurent p;
  for (const BasisElement& e : elements_) p += Laurent::monomial(e.degree);
  return p;
}

Vec Algebra::degree_part(const Vec& x, int degree) const {
  Vec out;
  for (auto [k, c] : x)
    if (elements_[static_cast<std::size_t>(k)].degree == degree) out.emplace_back(k, c);
  return out;
}

OrderChooser leftmost_order() {
  return [](const std::vector<Arc>&) { return std::size_t{0}; };
}

OrderChooser random_order(std::mt19937_64& rng) {
  return [&rng](const std::vector<Arc>& av) { return std::uniform_int_distribution<std::size_t>(0, av.size() - 1)(rng); };
}

}  // namespace bk
