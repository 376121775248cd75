#include "bk/web.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bk/errors.hpp"

namespace bk {

LabelVector::LabelVector(int first, std::vector<int> labels) : first_(first), labels_(std::move(labels)) {
  for (int l : labels_)
    if (l < 0 || l > 2) throw DomainError("labels must lie in {0, 1, 2}");
  trim();
}

void LabelVector::trim() {
  auto lo = std::find_if(labels_.begin(), labels_.end(), [](int l) { return l != 0; });
  if (lo == labels_.end()) {
    labels_.clear();
    first_ = 0;
    return;
  }
  auto hi = std::find_if(labels_.rbegin(), labels_.rend(), [](int l) { return l != 0; }).base();
  first_ += static_cast<int>(lo - labels_.begin());
  labels_ = std::vector<int>(lo, hi);
}

int LabelVector::at(int i) const {
  if (labels_.empty() || i < first_ || i > last()) return 0;
  return labels_[static_cast<std::size_t>(i - first_)];
}

void LabelVector::set(int i, int label) {
  if (label < 0 || label > 2) throw DomainError("labels must lie in {0, 1, 2}");
  int lo = labels_.empty() ? i : std::min(first_, i);
  int hi = labels_.empty() ? i : std::max(last(), i);
  std::vector<int> v;
  for (int p = lo; p <= hi; ++p) v.push_back(p == i ? label : at(p));
  first_ = lo;
  labels_ = std::move(v);
  trim();
}

int LabelVector::sum() const { return std::accumulate(labels_.begin(), labels_.end(), 0); }

bool LabelVector::balanced() const { return std::count(labels_.begin(), labels_.end(), 1) % 2 == 0; }

std::string LabelVector::str(int a, int b) const {
  std::string s;
  for (int p = a; p <= b; ++p) s.push_back(static_cast<char>('0' + at(p)));
  return s;
}

std::string LabelVector::str() const { return empty() ? "" : str(first_, last()); }

LabelVector label_vector(const Block& b) {
  std::vector<int> v;
  for (char c : b.ascii()) v.push_back(c == kStar ? 1 : c == kCross ? 2 : 0);
  return LabelVector(b.first(), v);
}

LabelVector apply_move(const LabelVector& k, FMove m) {
  if (m.r < 1 || m.r > 2) throw DomainError("F-move power must be 1 or 2");
  int a = k.at(m.i) - m.r, b = k.at(m.i + 1) + m.r;
  if (a < 0 || b > 2) throw DomainError("F-move at " + std::to_string(m.i) + " is illegal for the running labels");
  LabelVector out = k;
  out.set(m.i, a);
  out.set(m.i + 1, b);
  return out;
}

LabelVector top_boundary(const WebSlices& w) {
  LabelVector k = w.base;
  for (FMove m : w.moves) k = apply_move(k, m);
  return k;
}

WebSlices web_of_weight(const Weight& w, bool left_first) {
  CupDiagram cups = canonical_cup(w);
  if (!cups.rays.empty()) throw DomainError("webs are only built for weights whose cup diagram has no rays");
  LabelVector target = label_vector(cups.block);
  WebSlices out;
  if (target.empty()) return out;
  int ell = target.sum() / 2;
  int b0 = target.first();
  std::vector<int> base(static_cast<std::size_t>(ell), 2);
  out.base = LabelVector(b0, base);

  struct Item {
    int key;
    bool cup;
    Arc arc;
  };
  std::vector<Item> items;
  for (const Arc& a : cups.cups) items.push_back({a.b, true, a});
  for (int x : cups.block.positions_of(kCross)) items.push_back({x, false, {x, x}});
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.key > b.key; });

  LabelVector cur = out.base;
  std::vector<int> twos;
  for (int p = b0; p < b0 + ell; ++p) twos.push_back(p);
  auto move = [&](int i, int r) {
    cur = apply_move(cur, {i, r});
    out.moves.push_back({i, r});
  };
  // Moves the 2 at q right to t. A star in the way is pushed one step left
  // and steps back as soon as the 2 has moved on.
  auto move_two = [&](int q, int t) {
    std::vector<int> displaced;
    for (int p = q; p < t; ++p) {
      int next = cur.at(p + 1);
      if (next == 0) {
        move(p, 2);
        while (!displaced.empty() && cur.at(displaced.back() + 1) == 0) {
          move(displaced.back(), 1);
          displaced.pop_back();
        }
      } else if (next == 1) {
        move(p, 1);
        displaced.push_back(p);
      } else {
        invariant_failed("phantom strand blocked by another phantom strand");
      }
    }
    if (!displaced.empty()) invariant_failed("a displaced strand could not return");
  };
  for (const Item& it : items) {
    if (twos.empty()) invariant_failed("web construction ran out of phantom strands");
    std::sort(twos.begin(), twos.end());
    int q = twos.back();
    twos.pop_back();
    if (!it.cup) {
      move_two(q, it.key);
      continue;
    }
    int a = it.arc.a, b = it.arc.b;
    if (a > q) {
      // Get inside every enclosing cup whose left end lies between q and a.
      int blocked = -1;
      for (int p = q + 1; p < a; ++p)
        if (cur.at(p) != 0) blocked = p;
      if (blocked >= 0) {
        move_two(q, blocked + 1);
        q = blocked + 1;
      }
    }
    move(q, 1);
    auto shift_left_over_twos = [&] {
      for (int p = q; p > a; --p) {
        move(p - 1, 1);
        std::replace(twos.begin(), twos.end(), p - 1, p);
      }
    };
    if (left_first && a < q) shift_left_over_twos();
    for (int p = q + 1; p < b; ++p) move(p, 1);
    if (!left_first && a < q) shift_left_over_twos();
    for (int p = q; p < a; ++p) move(p, 1);
  }
  if (!(cur == target)) invariant_failed("web construction did not reach the block's label vector");
  return out;
}

WebSlices commutation_normal_form(WebSlices w) {
  std::size_t n = w.moves.size();
  std::vector<int> level(n, 0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < k; ++j)
      if (std::abs(w.moves[j].i - w.moves[k].i) <= 1) level[k] = std::max(level[k], level[j] + 1);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (level[a] != level[b]) return level[a] < level[b];
    return w.moves[a].i < w.moves[b].i;
  });
  std::vector<FMove> moves;
  for (std::size_t k : order) moves.push_back(w.moves[k]);
  w.moves = std::move(moves);
  return w;
}

namespace {

struct Transition {
  int i;
  int a, b;    // labels at (i, i+1) before
  int a2, b2;  // after
};

struct Planar {
  std::vector<StackedWeb::Segment> segs;
  std::vector<std::vector<int>> ordinary;  // components of 1-labeled segments
  std::vector<std::vector<int>> phantom;   // phantom edges
  std::map<std::pair<int, int>, std::vector<int>> at;
  int height = 0;
};

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[static_cast<std::size_t>(x)] != x) x = p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
    return x;
  }
  void join(int a, int b) { p[static_cast<std::size_t>(find(a))] = find(b); }
};

std::vector<std::vector<int>> groups(UnionFind& uf, const std::vector<int>& members) {
  std::map<int, std::vector<int>> g;
  for (int s : members) g[uf.find(s)].push_back(s);
  std::vector<std::vector<int>> out;
  for (auto& [r, v] : g) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

Planar build(const LabelVector& base, const std::vector<Transition>& ts) {
  Planar pl;
  std::vector<LabelVector> states{base};
  for (const Transition& t : ts) {
    LabelVector k = states.back();
    if (k.at(t.i) != t.a || k.at(t.i + 1) != t.b) invariant_failed("web transition does not match the running labels");
    k.set(t.i, t.a2);
    k.set(t.i + 1, t.b2);
    states.push_back(k);
  }
  int lo = 0, hi = -1;
  bool any = false;
  for (const LabelVector& k : states) {
    if (k.empty()) continue;
    lo = any ? std::min(lo, k.first()) : k.first();
    hi = any ? std::max(hi, k.last()) : k.last();
    any = true;
  }
  auto add = [&](int x0, int y0, int x1, int y1, int label) {
    if (label == 0) return;
    pl.segs.push_back({x0, y0, x1, y1, label});
    int id = static_cast<int>(pl.segs.size()) - 1;
    pl.at[{x0, y0}].push_back(id);
    pl.at[{x1, y1}].push_back(id);
  };
  for (std::size_t t = 0; t < ts.size(); ++t) {
    const Transition& tr = ts[t];
    int y0 = 4 * static_cast<int>(t), ym = y0 + 2, y1 = y0 + 4;
    const LabelVector& k = states[t];
    for (int p = lo; p <= hi; ++p) {
      if (p == tr.i || p == tr.i + 1) continue;
      add(4 * p, y0, 4 * p, y1, k.at(p));
    }
    add(4 * tr.i, y0, 4 * tr.i, ym, tr.a);
    add(4 * tr.i, ym, 4 * tr.i, y1, tr.a2);
    add(4 * tr.i + 4, y0, 4 * tr.i + 4, ym, tr.b);
    add(4 * tr.i + 4, ym, 4 * tr.i + 4, y1, tr.b2);
    add(4 * tr.i, ym, 4 * tr.i + 4, ym, std::abs(tr.a - tr.a2));
  }
  pl.height = 4 * static_cast<int>(ts.size());

  UnionFind ord(pl.segs.size()), ph(pl.segs.size());
  for (auto& [pt, ids] : pl.at) {
    std::vector<int> ones, twos;
    for (int s : ids) (pl.segs[static_cast<std::size_t>(s)].label == 1 ? ones : twos).push_back(s);
    bool boundary = pt.second == 0 || pt.second == pl.height;
    if (ones.size() == 2) ord.join(ones[0], ones[1]);
    else if (!ones.empty() && !(boundary && ones.size() == 1)) invariant_failed("ordinary edges do not pair up at a web vertex");
    if (ones.empty() && twos.size() == 2) ph.join(twos[0], twos[1]);
    else if (ones.empty() && twos.size() > 2) invariant_failed("more than two phantom edges meet at a bend");
  }
  std::vector<int> one_ids, two_ids;
  for (std::size_t s = 0; s < pl.segs.size(); ++s) (pl.segs[s].label == 1 ? one_ids : two_ids).push_back(static_cast<int>(s));
  pl.ordinary = groups(ord, one_ids);
  pl.phantom = groups(ph, two_ids);
  return pl;
}

std::vector<Transition> forward(const WebSlices& w) {
  std::vector<Transition> ts;
  LabelVector k = w.base;
  for (FMove m : w.moves) {
    LabelVector n = apply_move(k, m);
    ts.push_back({m.i, k.at(m.i), k.at(m.i + 1), n.at(m.i), n.at(m.i + 1)});
    k = n;
  }
  return ts;
}

}  // namespace

CupDiagram topological_reduction(const WebSlices& w, const Block& top) {
  if (!(label_vector(top) == top_boundary(w))) throw DomainError("web top boundary does not match the block");
  Planar pl = build(w.base, forward(w));
  std::vector<Arc> arcs;
  for (const auto& comp : pl.ordinary) {
    std::vector<int> ends;
    for (int s : comp) {
      const auto& g = pl.segs[static_cast<std::size_t>(s)];
      for (auto [x, y] : {std::pair{g.x0, g.y0}, std::pair{g.x1, g.y1}})
        if (y == pl.height && pl.at[{x, y}].size() == 1) ends.push_back(x / 4);
    }
    std::sort(ends.begin(), ends.end());
    if (ends.size() != 2) invariant_failed("an ordinary strand of a web does not end twice on the top boundary");
    arcs.push_back({ends[0], ends[1]});
  }
  return make_cup_diagram(top, arcs, {});
}

StackedWeb::StackedWeb(const Weight& lambda, const Weight& mu) {
  if (!(block_of(lambda) == block_of(mu))) throw DomainError("stacked web needs weights from one block");
  WebSlices wl = web_of_weight(lambda), wm = web_of_weight(mu);
  if (!(wl.base == wm.base)) invariant_failed("webs of one block start from different boundaries");
  std::vector<Transition> ts = forward(wl);
  std::vector<Transition> back = forward(wm);
  for (auto it = back.rbegin(); it != back.rend(); ++it) ts.push_back({it->i, it->a2, it->b2, it->a, it->b});
  middle_ = 4 * static_cast<int>(wl.moves.size());
  Planar pl = build(wl.base, ts);
  segs_ = std::move(pl.segs);
  circles_ = std::move(pl.ordinary);
  phantoms_ = std::move(pl.phantom);
  for (const auto& c : circles_) {
    std::vector<int> v;
    for (int s : c) {
      const Segment& g = segs_[static_cast<std::size_t>(s)];
      if (g.x0 == g.x1 && std::min(g.y0, g.y1) == middle_) v.push_back(g.x0 / 4);
    }
    std::sort(v.begin(), v.end());
    if (v.empty()) invariant_failed("web circle misses the middle line");
    circle_vertices_.push_back(v);
  }
}

int StackedWeb::circle_at(int x) const {
  for (std::size_t k = 0; k < circle_vertices_.size(); ++k)
    if (std::binary_search(circle_vertices_[k].begin(), circle_vertices_[k].end(), x)) return static_cast<int>(k);
  throw DomainError("no web circle passes through vertex " + std::to_string(x));
}

bool StackedWeb::point_inside(int px, int py, int circle) const {
  int crossings = 0;
  for (int s : circles_[static_cast<std::size_t>(circle)]) {
    const Segment& g = segs_[static_cast<std::size_t>(s)];
    if (g.x0 != g.x1 || g.x0 <= px) continue;
    if (std::min(g.y0, g.y1) < py && py < std::max(g.y0, g.y1)) ++crossings;
  }
  return crossings % 2 == 1;
}

namespace {

// A point in the interior of a vertical segment of the group, at odd height so
// that no horizontal edge or vertex lies on the scan line.
std::pair<int, int> sample_point(const std::vector<StackedWeb::Segment>& segs, const std::vector<int>& group) {
  for (int s : group) {
    const auto& g = segs[static_cast<std::size_t>(s)];
    if (g.x0 == g.x1) return {g.x0, std::min(g.y0, g.y1) + 1};
  }
  invariant_failed("web edge without a vertical piece");
}

}  // namespace

bool StackedWeb::inside(int a, int b) const {
  if (a == b) return false;
  auto [x, y] = sample_point(segs_, circles_[static_cast<std::size_t>(a)]);
  return point_inside(x, y, b);
}

int StackedWeb::parent(int circle) const {
  int best = -1, best_depth = -1;
  for (int b = 0; b < circle_count(); ++b) {
    if (!inside(circle, b)) continue;
    int depth = 0;
    for (int z = 0; z < circle_count(); ++z) depth += inside(b, z) ? 1 : 0;
    if (depth > best_depth) best = b, best_depth = depth;
  }
  return best;
}

std::vector<int> StackedWeb::children(int circle) const {
  std::vector<int> out;
  for (int k = 0; k < circle_count(); ++k)
    if (parent(k) == circle) out.push_back(k);
  return out;
}

int StackedWeb::ipe(int circle) const {
  std::vector<int> kids = children(circle);
  int count = 0;
  for (const auto& e : phantoms_) {
    auto [x, y] = sample_point(segs_, e);
    if (!point_inside(x, y, circle)) continue;
    if (std::any_of(kids.begin(), kids.end(), [&](int k) { return point_inside(x, y, k); })) continue;
    ++count;
  }
  return count;
}

int ipe(const Weight& lambda, const Weight& mu, int x) {
  StackedWeb w(lambda, mu);
  return w.ipe(w.circle_at(x));
}

std::pair<Weight, Weight> remove_nested(const Weight& lambda, const Weight& mu, int x) {
  CircleDiagram shape = stack(canonical_cup(lambda), canonical_cap(mu));
  int k = shape.component_of(x);
  std::vector<int> removed;
  for (int d : shape.descendants(k))
    for (int v : shape.components[static_cast<std::size_t>(d)].vertices) removed.push_back(v);
  std::sort(removed.begin(), removed.end());
  std::vector<int> kept;
  for (int v : shape.block().stars())
    if (!std::binary_search(removed.begin(), removed.end(), v)) kept.push_back(v);
  Weight l = lambda, m = mu;
  std::size_t r = 0;
  while (r < removed.size()) {
    std::size_t s = r;
    auto next_kept = std::upper_bound(kept.begin(), kept.end(), removed[r]);
    int bound = next_kept == kept.end() ? removed.back() + 1 : *next_kept;
    while (s < removed.size() && removed[s] < bound) ++s;
    if ((s - r) % 2 != 0) invariant_failed("nested circles leave an odd run of vertices between kept vertices");
    for (std::size_t t = r; t < s; t += 2) {
      l = l.with(removed[t], kCross).with(removed[t + 1], kEmpty);
      m = m.with(removed[t], kCross).with(removed[t + 1], kEmpty);
    }
    r = s;
  }
  return {l, m};
}

int ipe_minus_nested(const Weight& lambda, const Weight& mu, int x) {
  auto [l, m] = remove_nested(lambda, mu, x);
  return ipe(l, m, x);
}

int ipe_formula(int d_out, const std::vector<int>& nested_lengths) {
  int num = d_out - 2 + 2 * static_cast<int>(nested_lengths.size());
  for (int d : nested_lengths) num += d;
  if (num % 4 != 0) invariant_failed("internal phantom edge formula is not integral");
  return num / 4;
}

int web_exponent(const SurgeryStep& s, SurgeryCase kind, int variant) {
  auto without_inner = [&] {
    std::vector<int> v = s.outer_children;
    auto it = std::find(v.begin(), v.end(), s.inner_length);
    if (it == v.end()) invariant_failed("inner circle is not a child of the outer circle");
    v.erase(it);
    return v;
  };
  auto nested_merge = [&] { return ipe_formula(s.outer_length, s.outer_children) - s.saddle + ipe_formula(s.outer_length, without_inner()); };
  auto split_part = [&] {
    if (s.nested) return ipe_formula(s.outer_length, s.outer_children) - 1 + ipe_formula(s.outer_length, without_inner());
    int whole = ipe_formula(s.outer_length, s.outer_children);
    return 2 * (whole - s.saddle) + s.saddle;
  };
  switch (kind) {
    case SurgeryCase::MergeBothAnticlockwise:
      return s.nested ? nested_merge() : 0;
    case SurgeryCase::MergeMixed: {
      int dot = s.p_merged - (variant == 0 ? s.p_cap_side : s.p_cup_side);
      return dot + (s.nested ? nested_merge() : 0);
    }
    case SurgeryCase::MergeBothClockwise:
      return 0;
    case SurgeryCase::SplitAnticlockwise:
      return variant == 0 ? (s.p_part_i - s.p_i) + split_part() : 1 + (s.p_part_j - s.p_j) + split_part();
    case SurgeryCase::SplitClockwise:
      return (s.p_part_j - s.p_whole) + (s.p_part_i - s.p_i) + split_part();
  }
  return 0;
}

double foam_degree(int chi, int dots, int vbound) { return -chi + 2.0 * dots + 0.5 * vbound; }

int shift_d(const LabelVector& k) {
  int ell = k.sum() / 2;
  int s = 0;
  if (!k.empty())
    for (int p = k.first(); p <= k.last(); ++p) s += k.at(p) * (k.at(p) - 1);
  return ell - s;
}

int eval_dotted_sphere(int a, int b) {
  if (a == 1 && b == 0) return 1;
  if (a == 0 && b == 1) return -1;
  return 0;
}

Laurent eval_closed_web_q(int circles) {
  Laurent p = Laurent::monomial(0);
  Laurent loop = Laurent::monomial(1) + Laurent::monomial(-1);
  for (int k = 0; k < circles; ++k) p = p * loop;
  return p;
}

int web_degree(const Algebra& alg, int index) {
  const BasisElement& e = alg.element(index);
  StackedWeb w(e.lambda, e.mu);
  int d = 0;
  for (int c = 0; c < w.circle_count(); ++c) {
    const auto& v = w.vertices(c);
    bool dot = e.nu.at(v.back()) == kDown;
    d += static_cast<int>(v.size()) / 2 + (dot ? 1 : -1);
  }
  return d;
}

}  // namespace bk
