#include "bk/bk.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <sstream>

#include "bk/errors.hpp"
#include "bk/verify.hpp"

struct bk_algebra {
  explicit bk_algebra(bk::Block b) : alg(std::move(b)) {}
  bk::Algebra alg;
};

struct bk_bimodule {
  explicit bk_bimodule(bk::CompositeMatching t) : mod(std::move(t)) {}
  bk::Bimodule mod;
};

namespace {

thread_local std::string last_error;

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
bk_status guard(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const bk::ParseError& e) {
    last_error = e.what();
    return BK_ERR_PARSE;
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return BK_ERR_PARSE;
  } catch (const bk::DomainError& e) {
    last_error = e.what();
    return BK_ERR_DOMAIN;
  } catch (const bk::InvariantViolation& e) {
    last_error = e.what();
    return BK_ERR_INVARIANT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return BK_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return BK_ERR_INTERNAL;
  }
}

bk_status null_arg(const char* what) {
  last_error = std::string(what) + " must not be NULL";
  return BK_ERR_NULL;
}

bool is_index(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return false;
  return std::all_of(s.begin() + static_cast<long>(b), s.begin() + static_cast<long>(e) + 1, [](char c) { return c >= '0' && c <= '9'; });
}

int parse_index(const std::string& s, std::size_t dim) {
  long long k = std::stoll(s);
  if (k < 0 || static_cast<std::size_t>(k) >= dim) throw bk::DomainError("basis index " + s + " out of range (dimension " + std::to_string(dim) + ")");
  return static_cast<int>(k);
}

bk::json parse_json_text(const std::string& s) {
  try {
    return bk::json::parse(s);
  } catch (const bk::json::exception& e) {
    throw bk::ParseError(std::string("invalid JSON: ") + e.what());
  }
}

bk::Vec algebra_arg(const bk::Algebra& A, const std::string& s) {
  if (is_index(s)) return {{parse_index(s, A.dimension()), 1}};
  return bk::element_from_json(A, parse_json_text(s));
}

bk::Vec module_arg(const bk::Bimodule& M, const std::string& s) {
  if (is_index(s)) return {{parse_index(s, M.dimension()), 1}};
  return bk::bimodule_element_from_json(M, parse_json_text(s));
}

std::string indent(const std::string& text, const std::string& pad) {
  std::string out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out += pad + line + "\n";
  return out;
}

// Compact cell for the ASCII table over basis vectors b0, b1, ...:
// "b3", "-b3", "2b3", "b3-b4", ".".
std::string cell(const bk::Vec& v) {
  if (v.empty()) return ".";
  std::string out;
  for (auto [k, c] : v) {
    if (c < 0) out += "-";
    else if (!out.empty()) out += "+";
    bk::Coeff a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a);
    out += "b" + std::to_string(k);
  }
  return out;
}

std::string module_ascii(const bk::Bimodule& M, const bk::Vec& v) {
  if (v.empty()) return "0\n";
  std::string out;
  for (auto [k, c] : v) {
    out += (c < 0 ? "-" : "+") + std::to_string(c < 0 ? -c : c) + " ";
    for (int l = 0; l < M.line_count(); ++l) {
      const bk::Block& b = M.lines()[static_cast<std::size_t>(l)];
      out += (l ? "|" : "") + (b.empty() ? std::string() : M.line_weight(k, l).ascii(b.first(), b.last()));
    }
    out += "\n";
  }
  return out;
}

std::string matching_ascii(const bk::CompositeMatching& t) {
  std::string out;
  if (t.layers.empty()) return "identity on " + t.blocks.front().ascii() + "\n";
  for (const bk::Matching& m : t.layers)
    out += m.source.ascii() + " -> " + m.target.ascii() + "  " + bk::move_kind_name(m.kind) + "@" + std::to_string(m.i) + "\n";
  return out;
}

std::string dump(const bk::json& j) { return j.dump(2) + "\n"; }

}  // namespace

extern "C" {

const char* bk_last_error(void) { return last_error.c_str(); }

void bk_string_free(char* s) { std::free(s); }

bk_status bk_algebra_new(const char* block, bk_algebra** out) {
  if (!block) return null_arg("block");
  if (!out) return null_arg("out");
  return guard([&] {
    *out = new bk_algebra(bk::parse_block(block));
    return BK_OK;
  });
}

void bk_algebra_free(bk_algebra* a) { delete a; }

bk_status bk_algebra_dimension(const bk_algebra* a, size_t* out) {
  if (!a) return null_arg("algebra");
  if (!out) return null_arg("out");
  *out = a->alg.dimension();
  return BK_OK;
}

bk_status bk_algebra_basis(const bk_algebra* a, bk_format fmt, char** out) {
  if (!a) return null_arg("algebra");
  if (!out) return null_arg("out");
  return guard([&] {
    const bk::Algebra& A = a->alg;
    int n = static_cast<int>(A.dimension());
    if (fmt == BK_FORMAT_JSON) {
      bk::json basis = bk::json::array();
      for (int k = 0; k < n; ++k) basis.push_back(bk::basis_element_json(A, k));
      *out = copy_out(dump({{"block", bk::to_json(A.block())}, {"dimension", n}, {"basis", basis}}));
    } else {
      std::string s = "block " + A.block().ascii() + ", dimension " + std::to_string(n) + "\n";
      for (int k = 0; k < n; ++k) {
        s += std::to_string(k) + ": " + bk::element_ascii(A, {{k, 1}}) + "  degree " + std::to_string(A.element(k).degree) + "\n";
        bk::OrientedCircleDiagram d = A.diagram(k);
        s += indent(bk::render(d.shape, d.nu), "    ");
      }
      *out = copy_out(s);
    }
    return BK_OK;
  });
}

bk_status bk_algebra_mult(const bk_algebra* a, const char* x, const char* y, int64_t modulus, bk_format fmt, char** out) {
  if (!a) return null_arg("algebra");
  if (!x || !y) return null_arg("factor");
  if (!out) return null_arg("out");
  return guard([&] {
    const bk::Algebra& A = a->alg;
    bk::Vec v = A.mult(algebra_arg(A, x), algebra_arg(A, y), modulus);
    *out = copy_out(fmt == BK_FORMAT_JSON ? dump(bk::element_json(A, v)) : bk::element_ascii(A, v) + "\n");
    return BK_OK;
  });
}

bk_status bk_algebra_table(const bk_algebra* a, int64_t modulus, bk_format fmt, char** out) {
  if (!a) return null_arg("algebra");
  if (!out) return null_arg("out");
  return guard([&] {
    const bk::Algebra& A = a->alg;
    int n = static_cast<int>(A.dimension());
    std::vector<std::vector<bk::Vec>> t(static_cast<std::size_t>(n), std::vector<bk::Vec>(static_cast<std::size_t>(n)));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = bk::reduce(A.mult(x, y), modulus);
    if (fmt == BK_FORMAT_JSON) {
      bk::json basis = bk::json::array(), products = bk::json::array();
      for (int k = 0; k < n; ++k) basis.push_back(bk::basis_element_json(A, k));
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          const bk::Vec& v = t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
          if (v.empty()) continue;
          bk::json terms = bk::json::array();
          for (auto [k, c] : v) terms.push_back({k, c});
          products.push_back({{"x", x}, {"y", y}, {"terms", terms}});
        }
      *out = copy_out(dump({{"block", bk::to_json(A.block())}, {"modulus", modulus}, {"basis", basis}, {"products", products}}));
    } else {
      std::size_t w = std::to_string(n).size() + 1;
      for (auto& row : t)
        for (auto& v : row) w = std::max(w, cell(v).size());
      auto pad = [&](const std::string& s) { return std::string(w - s.size(), ' ') + s; };
      std::string s = pad("*") + " |";
      for (int y = 0; y < n; ++y) s += " " + pad("b" + std::to_string(y));
      s += "\n" + std::string(w + 2 + static_cast<std::size_t>(n) * (w + 1), '-') + "\n";
      for (int x = 0; x < n; ++x) {
        s += pad("b" + std::to_string(x)) + " |";
        for (int y = 0; y < n; ++y) s += " " + pad(cell(t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]));
        s += "\n";
      }
      *out = copy_out(s);
    }
    return BK_OK;
  });
}

bk_status bk_algebra_poincare(const bk_algebra* a, char** out) {
  if (!a) return null_arg("algebra");
  if (!out) return null_arg("out");
  return guard([&] {
    *out = copy_out(a->alg.poincare().str());
    return BK_OK;
  });
}

bk_status bk_algebra_idempotents(const bk_algebra* a, bk_format fmt, char** out) {
  if (!a) return null_arg("algebra");
  if (!out) return null_arg("out");
  return guard([&] {
    const bk::Algebra& A = a->alg;
    int w = static_cast<int>(A.weights().size());
    if (fmt == BK_FORMAT_JSON) {
      bk::json list = bk::json::array();
      for (int l = 0; l < w; ++l) list.push_back(bk::basis_element_json(A, A.idempotent(l).front().first));
      *out = copy_out(dump({{"block", bk::to_json(A.block())}, {"idempotents", list}}));
    } else {
      std::string s;
      for (int l = 0; l < w; ++l) {
        int k = A.idempotent(l).front().first;
        s += std::to_string(k) + ": " + bk::element_ascii(A, {{k, 1}}) + "\n";
      }
      *out = copy_out(s);
    }
    return BK_OK;
  });
}

bk_status bk_bimodule_new(const char* matching, bk_bimodule** out) {
  if (!matching) return null_arg("matching");
  if (!out) return null_arg("out");
  return guard([&] {
    *out = new bk_bimodule(bk::parse_matching(matching));
    return BK_OK;
  });
}

void bk_bimodule_free(bk_bimodule* m) { delete m; }

bk_status bk_bimodule_dimension(const bk_bimodule* m, size_t* out) {
  if (!m) return null_arg("bimodule");
  if (!out) return null_arg("out");
  *out = m->mod.dimension();
  return BK_OK;
}

bk_status bk_bimodule_basis(const bk_bimodule* m, bk_format fmt, char** out) {
  if (!m) return null_arg("bimodule");
  if (!out) return null_arg("out");
  return guard([&] {
    const bk::Bimodule& M = m->mod;
    int n = static_cast<int>(M.dimension());
    if (fmt == BK_FORMAT_JSON) {
      bk::json basis = bk::json::array();
      for (int k = 0; k < n; ++k) basis.push_back(bk::stretched_json(M, k));
      *out = copy_out(dump({{"matching", bk::to_json(M.matching())},
                            {"dimension", n},
                            {"shift", M.shift()},
                            {"graded_dimension", M.graded_dimension().str()},
                            {"basis", basis}}));
    } else {
      std::string s = matching_ascii(M.matching());
      s += "dimension " + std::to_string(n) + ", graded dimension " + M.graded_dimension().str() + "\n";
      for (int k = 0; k < n; ++k) {
        std::string row = module_ascii(M, {{k, 1}});
        s += std::to_string(k) + ": " + row.substr(3, row.size() - 4) + "  degree " + std::to_string(M.element(k).degree) + "\n";
      }
      *out = copy_out(s);
    }
    return BK_OK;
  });
}

bk_status bk_bimodule_act(const bk_bimodule* m, const char* a, const char* elem, const char* b, bk_format fmt, char** out) {
  if (!m) return null_arg("bimodule");
  if (!elem) return null_arg("element");
  if (!out) return null_arg("out");
  return guard([&] {
    const bk::Bimodule& M = m->mod;
    bk::Vec v = module_arg(M, elem);
    if (a) v = M.act_left(algebra_arg(M.bottom(), a), v);
    if (b) v = M.act_right(v, algebra_arg(M.top(), b));
    *out = copy_out(fmt == BK_FORMAT_JSON ? dump(bk::bimodule_element_json(M, v)) : module_ascii(M, v));
    return BK_OK;
  });
}

bk_status bk_howe(const char* block, const char* word, bk_format fmt, char** out) {
  if (!block || !word) return null_arg("argument");
  if (!out) return null_arg("out");
  return guard([&] {
    auto t = bk::howe_cm(bk::parse_block(block), word);
    if (fmt == BK_FORMAT_JSON) *out = copy_out(t ? dump(bk::to_json(*t)) : "null\n");
    else *out = copy_out(t ? matching_ascii(*t) : "0\n");
    return BK_OK;
  });
}

bk_status bk_ipe_check(const char* lambda, const char* mu, bk_format fmt, char** out) {
  if (!lambda || !mu) return null_arg("weight");
  if (!out) return null_arg("out");
  return guard([&] {
    bk::Weight l = bk::parse_weight(lambda), u = bk::parse_weight(mu);
    if (!(bk::block_of(l) == bk::block_of(u))) throw bk::DomainError("weights lie in different blocks");
    bk::CupDiagram cl = bk::canonical_cup(l), cu = bk::canonical_cup(u);
    if (!cl.rays.empty() || !cu.rays.empty()) throw bk::DomainError("weights must have cup diagrams without rays");
    bk::CircleDiagram sh = bk::stack(cl, bk::reflect(cu));
    bk::StackedWeb W(l, u);
    bool all_ok = true;
    bk::json circles = bk::json::array();
    std::string text = "lambda " + l.ascii() + ", mu " + u.ascii() + "\n";
    text += "w(lambda):\n" + indent(bk::render(bk::web_of_weight(l)), "    ");
    text += "w(mu):\n" + indent(bk::render(bk::web_of_weight(u)), "    ");
    for (std::size_t k = 0; k < sh.components.size(); ++k) {
      const auto& c = sh.components[k];
      int d = bk::component_distance(sh, static_cast<int>(k));
      std::vector<int> nested;
      for (int ch : sh.children(static_cast<int>(k))) nested.push_back(bk::component_distance(sh, ch));
      int geometric = W.ipe(W.circle_at(c.vertices.front()));
      int formula = bk::ipe_formula(d, nested);
      int minus = bk::ipe_minus_nested(l, u, c.vertices.front());
      int minus_formula = bk::ipe_formula(d, {});
      bool ok = geometric == formula && minus == minus_formula;
      all_ok = all_ok && ok;
      circles.push_back({{"vertices", c.vertices},
                         {"distance", d},
                         {"nested_distances", nested},
                         {"ipe", geometric},
                         {"ipe_formula", formula},
                         {"ipe_minus_nested", minus},
                         {"ipe_minus_nested_formula", minus_formula},
                         {"ok", ok}});
      std::ostringstream line;
      line << "circle at";
      for (int v : c.vertices) line << " " << v;
      line << ": d=" << d << " nested=" << nested.size() << " ipe=" << geometric << " (formula " << formula << ")"
           << " ipe_minus_nested=" << minus << " (formula " << minus_formula << ") " << (ok ? "ok" : "MISMATCH") << "\n";
      text += line.str();
    }
    if (fmt == BK_FORMAT_JSON)
      *out = copy_out(dump({{"lambda", bk::to_json(l)},
                            {"mu", bk::to_json(u)},
                            {"web_lambda", bk::to_json(bk::web_of_weight(l))},
                            {"web_mu", bk::to_json(bk::web_of_weight(u))},
                            {"circles", circles},
                            {"ok", all_ok}}));
    else *out = copy_out(text);
    if (!all_ok) last_error = "internal phantom edge count disagrees with the formula";
    return all_ok ? BK_OK : BK_ERR_VERIFY;
  });
}

void bk_verify_options_default(bk_verify_options* opt) {
  if (!opt) return;
  bk::VerifyOptions d;
  opt->max_stars = d.max_stars;
  opt->max_crosses = d.max_crosses;
  opt->seed = d.seed;
  opt->jobs = d.jobs;
  opt->samples = d.samples;
  opt->modulus = d.modulus;
}

const char* bk_verify_suites(void) {
  static const std::string names = [] {
    std::string s;
    for (const auto& n : bk::suite_names()) s += (s.empty() ? "" : " ") + n;
    return s;
  }();
  return names.c_str();
}

bk_status bk_verify(const char* suites, const bk_verify_options* opt, bk_format fmt, char** out) {
  if (!out) return null_arg("out");
  return guard([&] {
    bk::VerifyOptions o;
    if (opt) {
      o.max_stars = opt->max_stars;
      o.max_crosses = opt->max_crosses;
      o.seed = opt->seed;
      o.jobs = std::max(1, opt->jobs);
      o.samples = opt->samples;
      o.modulus = opt->modulus;
    }
    std::vector<std::string> names;
    std::istringstream in(suites ? suites : "");
    for (std::string s; in >> s;) names.push_back(s);
    if (names.empty()) names = bk::suite_names();
    for (const auto& n : names)
      if (std::find(bk::suite_names().begin(), bk::suite_names().end(), n) == bk::suite_names().end())
        throw bk::ParseError("unknown verification suite '" + n + "'");
    bool pass = true;
    bk::json reports = bk::json::array();
    std::string text;
    for (const auto& n : names) {
      bk::SuiteReport r = bk::run_suite(n, o);
      pass = pass && r.ok();
      reports.push_back(bk::report_json(r));
      text += bk::report_ascii(r);
    }
    *out = copy_out(fmt == BK_FORMAT_JSON ? dump({{"pass", pass}, {"suites", reports}}) : text);
    if (!pass) last_error = "verification failed";
    return pass ? BK_OK : BK_ERR_VERIFY;
  });
}

}  // extern "C"
