#include "bk/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <thread>

#include "bk/errors.hpp"

namespace bk {

namespace {

// Collects checks of one work item; merged in item order afterwards.
struct Tally {
  long long checks = 0;
  long long failures = 0;
  std::vector<json> examples;
  std::size_t cap = 5;

  void check(bool ok, const std::function<json()>& describe) {
    ++checks;
    if (ok) return;
    ++failures;
    if (examples.size() < cap) examples.push_back(describe());
  }
  void error(const std::string& what, json context) {
    ++checks;
    ++failures;
    context["error"] = what;
    if (examples.size() < cap) examples.push_back(std::move(context));
  }
};

void parallel_for(int n, int jobs, const std::function<void(int)>& f) {
  if (jobs <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min(jobs, n); ++t)
    pool.emplace_back([&] {
      for (int i; (i = next++) < n;) f(i);
    });
  for (auto& t : pool) t.join();
}

// Runs `body` once per item in parallel; an exception inside an item counts
// as one failed check of that item.
SuiteReport run_items(const std::string& name, const VerifyOptions& opt, int n, const std::function<json(int)>& context,
                      const std::function<void(int, Tally&)>& body) {
  std::vector<Tally> tallies(static_cast<std::size_t>(n));
  parallel_for(n, opt.jobs, [&](int i) {
    Tally& t = tallies[static_cast<std::size_t>(i)];
    t.cap = opt.max_counterexamples;
    try {
      body(i, t);
    } catch (const std::exception& e) {
      t.error(e.what(), context(i));
    }
  });
  SuiteReport r;
  r.name = name;
  for (auto& t : tallies) {
    r.checks += t.checks;
    r.failures += t.failures;
    for (auto& e : t.examples)
      if (r.counterexamples.size() < opt.max_counterexamples) r.counterexamples.push_back(std::move(e));
  }
  return r;
}

json block_context(const Block& b) { return json{{"block", to_json(b)}}; }

json vec_pair(const Algebra& A, const Vec& lhs, const Vec& rhs) { return json{{"lhs", element_json(A, lhs)}, {"rhs", element_json(A, rhs)}}; }

std::vector<std::shared_ptr<const Algebra>> algebras(const std::vector<Block>& blocks, int jobs) {
  std::vector<std::shared_ptr<const Algebra>> out(blocks.size());
  parallel_for(static_cast<int>(blocks.size()), jobs, [&](int i) { out[static_cast<std::size_t>(i)] = std::make_shared<Algebra>(blocks[static_cast<std::size_t>(i)]); });
  return out;
}

// Basis products of all compatible pairs, indexed [x][y].
std::vector<std::vector<Vec>> product_table(const Algebra& A) {
  int n = static_cast<int>(A.dimension());
  std::vector<std::vector<Vec>> t(static_cast<std::size_t>(n), std::vector<Vec>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (A.mu_of(x) == A.lambda_of(y)) t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = A.mult(x, y);
  return t;
}

SuiteReport suite_merge(const VerifyOptions& opt) {
  return run_items("merge", opt, 1, [](int) { return json::object(); }, [](int, Tally& t) {
    Algebra A(Block(0, "**"));
    Weight w(0, "v^");
    int e = A.index_of(w, Weight(0, "v^"), w);
    int X = A.index_of(w, Weight(0, "^v"), w);
    auto expect = [&](int a, int b, Vec want, const char* label) {
      Vec got = A.mult(a, b);
      t.check(got == want, [&] { return json{{"product", label}, {"got", element_json(A, got)}, {"want", element_json(A, want)}}; });
    };
    expect(e, e, {{e, 1}}, "e*e");
    expect(e, X, {{X, 1}}, "e*X");
    expect(X, e, {{X, 1}}, "X*e");
    expect(X, X, {}, "X*X");
  });
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

SuiteReport suite_blocks(const VerifyOptions& opt) {
  auto blocks = small_blocks(opt.max_stars, std::max(opt.max_crosses, 2));
  return run_items("blocks", opt, static_cast<int>(blocks.size()), [&](int i) { return block_context(blocks[static_cast<std::size_t>(i)]); },
                   [&](int i, Tally& t) {
                     const Block& b = blocks[static_cast<std::size_t>(i)];
                     int n = static_cast<int>(b.stars().size());
                     auto all = members(b, false);
                     auto cups = members(b, true);
                     t.check(static_cast<long long>(all.size()) == binomial(n, n / 2), [&] { return json{{"block", to_json(b)}, {"members", all.size()}}; });
                     t.check(static_cast<long long>(cups.size()) == binomial(n, n / 2) / (n / 2 + 1),
                             [&] { return json{{"block", to_json(b)}, {"cups_only", cups.size()}}; });
                     for (const Weight& w : all) {
                       t.check(block_of(w) == b, [&] { return json{{"block", to_json(b)}, {"weight", to_json(w)}}; });
                       CupDiagram c = canonical_cup(w);
                       t.check(reflect(reflect(c)) == c, [&] { return json{{"weight", to_json(w)}, {"failed", "reflect twice"}}; });
                       for (const Arc& a : c.cups) t.check(distance(b, a.a, a.b) % 2 == 1, [&] { return json{{"weight", to_json(w)}, {"cup", {a.a, a.b}}}; });
                     }
                   });
}

SuiteReport suite_assoc(const VerifyOptions& opt) {
  auto blocks = small_blocks(opt.max_stars, opt.max_crosses);
  auto algs = algebras(blocks, opt.jobs);
  return run_items("assoc", opt, static_cast<int>(blocks.size()), [&](int i) { return block_context(blocks[static_cast<std::size_t>(i)]); },
                   [&](int i, Tally& t) {
                     const Algebra& A = *algs[static_cast<std::size_t>(i)];
                     auto P = product_table(A);
                     int n = static_cast<int>(A.dimension());
                     auto times = [&](const Vec& v, int z, bool left) {
                       std::map<int, Coeff> acc;
                       for (auto [k, c] : v)
                         for (auto [m, d] : left ? P[static_cast<std::size_t>(k)][static_cast<std::size_t>(z)] : P[static_cast<std::size_t>(z)][static_cast<std::size_t>(k)])
                           acc[m] += c * d;
                       Vec out;
                       for (auto [k, c] : acc)
                         if (c) out.emplace_back(k, c);
                       return reduce(out, opt.modulus);
                     };
                     for (int x = 0; x < n; ++x)
                       for (int y = 0; y < n; ++y) {
                         if (A.mu_of(x) != A.lambda_of(y)) continue;
                         const Vec& xy = P[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
                         for (int z = 0; z < n; ++z) {
                           if (A.mu_of(y) != A.lambda_of(z)) continue;
                           Vec lhs = times(xy, z, true);
                           Vec rhs = times(P[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)], x, false);
                           t.check(lhs == rhs, [&] {
                             json j = vec_pair(A, lhs, rhs);
                             j["f"] = basis_element_json(A, x);
                             j["g"] = basis_element_json(A, y);
                             j["h"] = basis_element_json(A, z);
                             return j;
                           });
                         }
                       }
                   });
}

SuiteReport suite_signs(const VerifyOptions& opt) {
  auto blocks = small_blocks(opt.max_stars, opt.max_crosses);
  auto algs = algebras(blocks, opt.jobs);
  return run_items("signs", opt, static_cast<int>(blocks.size()), [&](int i) { return block_context(blocks[static_cast<std::size_t>(i)]); },
                   [&](int i, Tally& t) {
                     const Algebra& A = *algs[static_cast<std::size_t>(i)];
                     int n = static_cast<int>(A.dimension());
                     for (int x = 0; x < n; ++x)
                       for (int y = 0; y < n; ++y) {
                         if (A.mu_of(x) != A.lambda_of(y)) continue;
                         auto describe = [&](const StepEvent& ev, const char* what) {
                           return json{{"f", basis_element_json(A, x)},
                                       {"g", basis_element_json(A, y)},
                                       {"pair", {ev.step->pair.a, ev.step->pair.b}},
                                       {"case", static_cast<int>(ev.kind)},
                                       {"variant", ev.variant},
                                       {"failed", what}};
                         };
                         A.mult(x, y, [&](const StepEvent& ev) {
                           if (ev.sign == 0) return;
                           const SurgeryStep& s = *ev.step;
                           int web = web_exponent(s, ev.kind, ev.variant);
                           t.check((ev.arc_exponent - web) % 2 == 0, [&] { return describe(ev, "arc and web exponents differ mod 2"); });
                           t.check(ev.sign == (ev.arc_exponent % 2 == 0 ? 1 : -1), [&] { return describe(ev, "sign does not match its exponent"); });
                           bool paths = (s.dot_cap_side - s.dot_cap_side_alt) % 2 == 0 && (s.dot_cup_side - s.dot_cup_side_alt) % 2 == 0 &&
                                        (s.dot_whole - s.dot_whole_alt) % 2 == 0 && (s.ndot_i - s.ndot_i_alt) % 2 == 0 &&
                                        (s.ndot_j - s.ndot_j_alt) % 2 == 0;
                           t.check(paths, [&] { return describe(ev, "the two circle paths have different distance parity"); });
                         });
                       }
                   });
}

SuiteReport suite_order(const VerifyOptions& opt) {
  auto blocks = small_blocks(opt.max_stars, opt.max_crosses);
  auto algs = algebras(blocks, opt.jobs);
  // Only pairs whose middle diagram has two or more cups admit a choice.
  struct Candidate {
    int block, x, y;
  };
  std::vector<Candidate> pool;
  for (std::size_t b = 0; b < algs.size(); ++b) {
    const Algebra& A = *algs[b];
    int n = static_cast<int>(A.dimension());
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (A.mu_of(x) == A.lambda_of(y) && A.cup_diagrams()[static_cast<std::size_t>(A.mu_of(x))].cups.size() >= 2)
          pool.push_back({static_cast<int>(b), x, y});
  }
  struct Instance {
    Candidate c;
    MultPlan plan;
  };
  std::vector<Instance> instances;
  std::mt19937_64 rng(opt.seed);
  if (!pool.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (long long s = 0; s < opt.samples; ++s) {
      Candidate c = pool[pick(rng)];
      const Algebra& A = *algs[static_cast<std::size_t>(c.block)];
      instances.push_back({c, A.make_plan(A.lambda_of(c.x), A.mu_of(c.x), A.mu_of(c.y), random_order(rng))});
    }
  }
  return run_items("order", opt, static_cast<int>(instances.size()),
                   [&](int i) { return block_context(blocks[static_cast<std::size_t>(instances[static_cast<std::size_t>(i)].c.block)]); },
                   [&](int i, Tally& t) {
                     const Instance& in = instances[static_cast<std::size_t>(i)];
                     const Algebra& A = *algs[static_cast<std::size_t>(in.c.block)];
                     Vec want = A.mult(in.c.x, in.c.y);
                     Vec got = A.mult(in.c.x, in.c.y, in.plan);
                     t.check(got == want, [&] {
                       json order = json::array();
                       for (const SurgeryStep& s : in.plan.steps) order.push_back({s.pair.a, s.pair.b});
                       json j = vec_pair(A, got, want);
                       j["f"] = basis_element_json(A, in.c.x);
                       j["g"] = basis_element_json(A, in.c.y);
                       j["order"] = order;
                       return j;
                     });
                   });
}

SuiteReport suite_grading(const VerifyOptions& opt) {
  auto blocks = small_blocks(opt.max_stars, opt.max_crosses);
  auto algs = algebras(blocks, opt.jobs);
  return run_items("grading", opt, static_cast<int>(blocks.size()), [&](int i) { return block_context(blocks[static_cast<std::size_t>(i)]); },
                   [&](int i, Tally& t) {
                     const Algebra& A = *algs[static_cast<std::size_t>(i)];
                     int n = static_cast<int>(A.dimension());
                     for (int x = 0; x < n; ++x)
                       for (int y = 0; y < n; ++y) {
                         if (A.mu_of(x) != A.lambda_of(y)) continue;
                         int want = A.element(x).degree + A.element(y).degree;
                         for (auto [k, c] : A.mult(x, y))
                           t.check(A.element(k).degree == want, [&] {
                             return json{{"f", basis_element_json(A, x)}, {"g", basis_element_json(A, y)}, {"term", basis_element_json(A, k)}};
                           });
                       }
                     int w = static_cast<int>(A.weights().size());
                     for (int l = 0; l < w; ++l)
                       for (int u = 0; u < w; ++u) {
                         const CircleDiagram& sh = A.shape(l, u);
                         for (std::size_t k = 0; k < sh.components.size(); ++k) {
                           int d = component_distance(sh, static_cast<int>(k));
                           t.check(d % 4 == 2, [&] {
                             return json{{"lambda", to_json(A.weights()[static_cast<std::size_t>(l)])},
                                         {"mu", to_json(A.weights()[static_cast<std::size_t>(u)])},
                                         {"circle", sh.components[k].vertices},
                                         {"distance", d}};
                           });
                         }
                       }
                   });
}

SuiteReport suite_ipe(const VerifyOptions& opt) {
  auto blocks = small_blocks(opt.max_stars, opt.max_crosses);
  return run_items("ipe", opt, static_cast<int>(blocks.size()), [&](int i) { return block_context(blocks[static_cast<std::size_t>(i)]); },
                   [&](int i, Tally& t) {
                     const Block& b = blocks[static_cast<std::size_t>(i)];
                     auto ws = members(b, true);
                     for (const Weight& l : ws) {
                       CupDiagram red = topological_reduction(web_of_weight(l), b);
                       t.check(red == canonical_cup(l), [&] { return json{{"weight", to_json(l)}, {"reduction", to_json(red)}}; });
                       for (const Weight& m : ws) {
                         CircleDiagram sh = stack(canonical_cup(l), canonical_cap(m));
                         StackedWeb W(l, m);
                         for (std::size_t k = 0; k < sh.components.size(); ++k) {
                           int x = sh.components[k].vertices.front();
                           int d = component_distance(sh, static_cast<int>(k));
                           std::vector<int> nested;
                           for (int c : sh.children(static_cast<int>(k))) nested.push_back(component_distance(sh, c));
                           int geometric = W.ipe(W.circle_at(x));
                           int formula = ipe_formula(d, nested);
                           int minus = ipe_minus_nested(l, m, x);
                           auto describe = [&](const char* what) {
                             return json{{"lambda", to_json(l)}, {"mu", to_json(m)}, {"circle", sh.components[k].vertices},
                                         {"ipe", geometric}, {"formula", formula}, {"ipe_minus_nested", minus}, {"failed", what}};
                           };
                           t.check(geometric == formula, [&] { return describe("ipe"); });
                           t.check(4 * minus == d - 2, [&] { return describe("ipe after removing nested circles"); });
                         }
                       }
                     }
                   });
}

SuiteReport suite_degree(const VerifyOptions& opt) {
  auto blocks = small_blocks(opt.max_stars, opt.max_crosses);
  auto algs = algebras(blocks, opt.jobs);
  return run_items("degree", opt, static_cast<int>(blocks.size()), [&](int i) { return block_context(blocks[static_cast<std::size_t>(i)]); },
                   [&](int i, Tally& t) {
                     const Algebra& A = *algs[static_cast<std::size_t>(i)];
                     int n = static_cast<int>(A.dimension());
                     for (int x = 0; x < n; ++x) {
                       OrientedCircleDiagram D = A.diagram(x);
                       int deg = degree(D);
                       auto describe = [&](const char* what) { return json{{"element", basis_element_json(A, x)}, {"failed", what}}; };
                       t.check(deg == A.element(x).degree, [&] { return describe("stored degree"); });
                       t.check(deg == degree_by_circles(D), [&] { return describe("degree by circles"); });
                       t.check(web_degree(A, x) == deg, [&] { return describe("degree on the web side"); });
                       std::uint64_t mask = A.mask_of(x);
                       for (std::size_t k = 0; k < D.shape.components.size(); ++k) {
                         if ((mask >> k) & 1) continue;
                         int flipped = A.index_of_mask(A.lambda_of(x), A.mu_of(x), mask | (std::uint64_t{1} << k));
                         t.check(degree(A.diagram(flipped)) == deg + 2, [&] { return describe("flipping an anticlockwise circle"); });
                       }
                     }
                     for (int l = 0; l < static_cast<int>(A.weights().size()); ++l) {
                       int e = A.index_of_mask(l, l, 0);
                       t.check(A.element(e).nu == A.weights()[static_cast<std::size_t>(l)] && A.element(e).degree == 0,
                               [&] { return json{{"element", basis_element_json(A, e)}, {"failed", "canonical orientation is not of degree 0"}}; });
                     }
                   });
}

SuiteReport suite_unit(const VerifyOptions& opt) {
  auto blocks = small_blocks(opt.max_stars, opt.max_crosses);
  auto algs = algebras(blocks, opt.jobs);
  return run_items("unit", opt, static_cast<int>(blocks.size()), [&](int i) { return block_context(blocks[static_cast<std::size_t>(i)]); },
                   [&](int i, Tally& t) {
                     const Algebra& A = *algs[static_cast<std::size_t>(i)];
                     int n = static_cast<int>(A.dimension());
                     int w = static_cast<int>(A.weights().size());
                     Vec one = A.unit();
                     for (int x = 0; x < n; ++x) {
                       Vec vx{{x, 1}};
                       t.check(A.mult(one, vx) == vx && A.mult(vx, one) == vx, [&] { return json{{"element", basis_element_json(A, x)}, {"failed", "unit"}}; });
                       for (int l = 0; l < w; ++l) {
                         Vec e = A.idempotent(l);
                         Vec left = A.mult(e, vx), right = A.mult(vx, e);
                         t.check(left == (A.lambda_of(x) == l ? vx : Vec{}) && right == (A.mu_of(x) == l ? vx : Vec{}), [&] {
                           return json{{"element", basis_element_json(A, x)}, {"idempotent", to_json(A.weights()[static_cast<std::size_t>(l)])}};
                         });
                       }
                     }
                     std::vector<int> count(static_cast<std::size_t>(w * w));
                     for (int x = 0; x < n; ++x) ++count[static_cast<std::size_t>(A.lambda_of(x) * w + A.mu_of(x))];
                     for (int l = 0; l < w; ++l)
                       for (int u = 0; u < w; ++u)
                         t.check(count[static_cast<std::size_t>(l * w + u)] == count[static_cast<std::size_t>(u * w + l)], [&] {
                           return json{{"lambda", to_json(A.weights()[static_cast<std::size_t>(l)])}, {"mu", to_json(A.weights()[static_cast<std::size_t>(u)])}};
                         });
                   });
}

// Source blocks over a window of four positions, with every line of the
// composite matching carrying at most four stars.
std::vector<CompositeMatching> small_matchings(int max_layers) {
  std::vector<CompositeMatching> out;
  const int width = 4;
  const char syms[] = {'o', '*', 'x'};
  std::vector<Block> sources;
  for (int code = 0; code < 81; ++code) {
    std::string s;
    for (int k = 0, c = code; k < width; ++k, c /= 3) s += syms[c % 3];
    if (std::count(s.begin(), s.end(), '*') % 2 == 0) sources.emplace_back(0, s);
  }
  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
  const MoveKind kinds[] = {MoveKind::PlusAlpha, MoveKind::MinusAlpha, MoveKind::PlusTwoAlpha, MoveKind::MinusTwoAlpha};
  std::function<void(std::vector<Matching>&, const Block&)> grow = [&](std::vector<Matching>& layers, const Block& cur) {
    if (!layers.empty()) out.push_back(compose(layers));
    if (static_cast<int>(layers.size()) == max_layers) return;
    for (MoveKind k : kinds)
      for (int i = 0; i + 1 < width; ++i) {
        auto m = fit_matching(cur, k, i);
        if (!m || m->target.count(kStar) > 4) continue;
        layers.push_back(*m);
        grow(layers, m->target);
        layers.pop_back();
      }
  };
  for (const Block& b : sources) {
    if (b.count(kStar) > 4) continue;
    std::vector<Matching> layers;
    grow(layers, b);
  }
  return out;
}

SuiteReport suite_bimodule(const VerifyOptions& opt) {
  auto ts = small_matchings(2);
  return run_items("bimodule", opt, static_cast<int>(ts.size()), [&](int i) { return json{{"matching", to_json(ts[static_cast<std::size_t>(i)])}}; },
                   [&](int i, Tally& t) {
                     Bimodule M(ts[static_cast<std::size_t>(i)]);
                     const Algebra& A = M.bottom();
                     const Algebra& B = M.top();
                     int na = static_cast<int>(A.dimension()), nb = static_cast<int>(B.dimension()), nm = static_cast<int>(M.dimension());
                     auto describe = [&](const char* what, int a, int m, int b) {
                       json j{{"matching", to_json(M.matching())}, {"failed", what}, {"m", stretched_json(M, m)}};
                       if (a >= 0) j["a"] = basis_element_json(A, a);
                       if (b >= 0) j["b"] = basis_element_json(B, b);
                       return j;
                     };
                     Vec oneA = A.unit(), oneB = B.unit();
                     for (int m = 0; m < nm; ++m) {
                       Vec vm{{m, 1}};
                       t.check(M.act_left(oneA, vm) == vm && M.act_right(vm, oneB) == vm, [&] { return describe("unit action", -1, m, -1); });
                       int dm = M.element(m).degree;
                       for (int a = 0; a < na; ++a) {
                         if (A.mu_of(a) != M.element(m).lambda) continue;
                         Vec am = M.act_left(a, m);
                         for (auto [k, c] : am)
                           t.check(M.element(k).degree == dm + A.element(a).degree, [&] { return describe("left action degree", a, m, -1); });
                         for (int b = 0; b < nb; ++b) {
                           if (B.lambda_of(b) != M.element(m).mu) continue;
                           Vec lhs = M.act_right(am, Vec{{b, 1}});
                           Vec rhs = M.act_left(Vec{{a, 1}}, M.act_right(m, b));
                           t.check(lhs == rhs, [&] {
                             json j = describe("(a m) b = a (m b)", a, m, b);
                             j["lhs"] = bimodule_element_json(M, lhs);
                             j["rhs"] = bimodule_element_json(M, rhs);
                             return j;
                           });
                         }
                       }
                       for (int b = 0; b < nb; ++b) {
                         if (B.lambda_of(b) != M.element(m).mu) continue;
                         for (auto [k, c] : M.act_right(m, b))
                           t.check(M.element(k).degree == dm + B.element(b).degree, [&] { return describe("right action degree", -1, m, b); });
                       }
                     }
                     int wl = static_cast<int>(A.weights().size()), wu = static_cast<int>(B.weights().size());
                     for (int l = 0; l < wl; ++l)
                       for (int u = 0; u < wu; ++u)
                         t.check(M.downward_reduction_with_bottom(l, u) == M.downward_reduction(u), [&] {
                           return json{{"matching", to_json(M.matching())}, {"failed", "downward reduction depends on the bottom"}, {"lambda", l}, {"mu", u}};
                         });
                   });
}

SuiteReport suite_empty(const VerifyOptions& opt) {
  struct Site {
    Block block;
    int i;
    bool plus;
  };
  std::vector<Site> sites;
  for (auto& t : small_matchings(1)) {
    const Matching& m = t.layers.front();
    if (m.kind == MoveKind::PlusTwoAlpha || m.kind == MoveKind::MinusTwoAlpha) sites.push_back({m.source, m.i, m.kind == MoveKind::PlusTwoAlpha});
  }
  return run_items("empty", opt, static_cast<int>(sites.size()),
                   [&](int i) { return json{{"block", to_json(sites[static_cast<std::size_t>(i)].block)}, {"i", sites[static_cast<std::size_t>(i)].i}}; },
                   [&](int i, Tally& t) {
                     const Site& s = sites[static_cast<std::size_t>(i)];
                     MoveKind two = s.plus ? MoveKind::PlusTwoAlpha : MoveKind::MinusTwoAlpha;
                     MoveKind one = s.plus ? MoveKind::PlusAlpha : MoveKind::MinusAlpha;
                     Bimodule N(compose({*fit_matching(s.block, two, s.i)}));
                     Matching cup = *fit_matching(s.block, one, s.i);
                     Bimodule M(compose({cup, *fit_matching(cup.target, one, s.i)}));
                     json where{{"block", to_json(s.block)}, {"i", s.i}, {"type", move_kind_name(two)}};
                     auto describe = [&](const char* what) {
                       json j = where;
                       j["failed"] = what;
                       return j;
                     };
                     Laurent q = Laurent::monomial(1) + Laurent::monomial(-1);
                     t.check(M.graded_dimension() == q * N.graded_dimension(), [&] {
                       json j = describe("graded dimension");
                       j["two_layer"] = M.graded_dimension().str();
                       j["empty_move"] = N.graded_dimension().str();
                       return j;
                     });
                     // Node n of N sits at the same point of the plane as node map[n] of M.
                     std::vector<int> map;
                     for (const auto& nd : N.nodes()) map.push_back(M.node(nd.x, nd.line));
                     auto transport = [&](std::uint64_t labels) {
                       std::uint64_t out = 0;
                       for (std::size_t n = 0; n < map.size(); ++n)
                         if ((labels >> n) & 1) out |= std::uint64_t{1} << map[n];
                       return out;
                     };
                     int nn = static_cast<int>(N.dimension());
                     // phi[0]: internal circle anticlockwise (shift -1), phi[1]: clockwise (+1).
                     std::vector<int> phi[2];
                     std::vector<bool> hit(M.dimension());
                     for (int k = 0; k < nn; ++k) {
                       const StretchedDiagram& e = N.element(k);
                       std::uint64_t flip = 0;
                       for (const auto& c : N.circles(e.lambda, e.mu))
                         if (N.internal(c))
                           for (int node : c) flip |= std::uint64_t{1} << node;
                       for (int side = 0; side < 2; ++side) {
                         int idx = M.index_of(e.lambda, e.mu, transport(side ? e.labels ^ flip : e.labels));
                         phi[side].push_back(idx);
                         bool ok = idx >= 0 && !hit[static_cast<std::size_t>(idx)] && M.element(idx).degree == e.degree + (side ? 1 : -1);
                         if (ok) hit[static_cast<std::size_t>(idx)] = true;
                         t.check(ok, [&] {
                           json j = describe("no matching basis vector in the two-layer module");
                           j["element"] = stretched_json(N, k);
                           return j;
                         });
                       }
                     }
                     t.check(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }), [&] { return describe("two-layer basis not covered"); });
                     if (t.failures) return;
                     auto image = [&](const Vec& v, int side) {
                       Vec out;
                       for (auto [k, c] : v) out.emplace_back(phi[side][static_cast<std::size_t>(k)], c);
                       std::sort(out.begin(), out.end());
                       return out;
                     };
                     const Algebra& A = N.bottom();
                     const Algebra& B = N.top();
                     for (int k = 0; k < nn; ++k)
                       for (int side = 0; side < 2; ++side) {
                         int mk = phi[side][static_cast<std::size_t>(k)];
                         for (int a = 0; a < static_cast<int>(A.dimension()); ++a)
                           t.check(M.act_left(a, mk) == image(N.act_left(a, k), side), [&] {
                             json j = describe("left action matrix");
                             j["a"] = basis_element_json(A, a);
                             j["element"] = stretched_json(N, k);
                             return j;
                           });
                         for (int b = 0; b < static_cast<int>(B.dimension()); ++b)
                           t.check(M.act_right(mk, b) == image(N.act_right(k, b), side), [&] {
                             json j = describe("right action matrix");
                             j["b"] = basis_element_json(B, b);
                             j["element"] = stretched_json(N, k);
                             return j;
                           });
                       }
                   });
}

SuiteReport suite_web(const VerifyOptions& opt) {
  auto blocks = small_blocks(opt.max_stars, opt.max_crosses);
  return run_items("web", opt, static_cast<int>(blocks.size()), [&](int i) { return block_context(blocks[static_cast<std::size_t>(i)]); },
                   [&](int i, Tally& t) {
                     const Block& b = blocks[static_cast<std::size_t>(i)];
                     for (const Weight& w : members(b, true)) {
                       WebSlices s = web_of_weight(w);
                       t.check(top_boundary(s) == label_vector(b), [&] { return json{{"weight", to_json(w)}, {"web", to_json(s)}, {"failed", "top boundary"}}; });
                       WebSlices alt = web_of_weight(w, true);
                       t.check(commutation_normal_form(s) == commutation_normal_form(alt), [&] {
                         return json{{"weight", to_json(w)}, {"web", to_json(s)}, {"alternative", to_json(alt)}, {"failed", "normal forms differ"}};
                       });
                     }
                   });
}

}  // namespace

std::vector<Block> small_blocks(int max_stars, int max_crosses) {
  std::vector<Block> out{Block()};
  for (int len = 1; len <= max_stars + max_crosses; ++len) {
    std::vector<Block> level;
    for (int code = 0; code < (1 << len); ++code) {
      std::string s;
      for (int k = len - 1; k >= 0; --k) s += (code >> k) & 1 ? 'x' : '*';
      int stars = static_cast<int>(std::count(s.begin(), s.end(), '*'));
      int crosses = len - stars;
      if (stars % 2 || stars > max_stars || crosses > max_crosses) continue;
      level.emplace_back(0, s);
    }
    std::sort(level.begin(), level.end(), [](const Block& a, const Block& b) { return a.ascii() < b.ascii(); });
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"merge", "blocks", "assoc", "signs", "order", "grading", "ipe", "degree", "unit", "bimodule", "empty", "web"};
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opt) {
  if (name == "merge") return suite_merge(opt);
  if (name == "blocks") return suite_blocks(opt);
  if (name == "assoc") return suite_assoc(opt);
  if (name == "signs") return suite_signs(opt);
  if (name == "order") return suite_order(opt);
  if (name == "grading") return suite_grading(opt);
  if (name == "ipe") return suite_ipe(opt);
  if (name == "degree") return suite_degree(opt);
  if (name == "unit") return suite_unit(opt);
  if (name == "bimodule") return suite_bimodule(opt);
  if (name == "empty") return suite_empty(opt);
  if (name == "web") return suite_web(opt);
  throw DomainError("unknown verification suite '" + name + "'");
}

json report_json(const SuiteReport& r) {
  return json{{"suite", r.name}, {"checks", r.checks}, {"failures", r.failures}, {"pass", r.ok()}, {"counterexamples", r.counterexamples}};
}

std::string report_ascii(const SuiteReport& r) {
  std::ostringstream out;
  out << r.name << ": " << (r.ok() ? "PASS" : "FAIL") << " checks=" << r.checks << " failures=" << r.failures << "\n";
  for (const json& c : r.counterexamples) out << "  counterexample: " << c.dump() << "\n";
  return out.str();
}

}  // namespace bk
