#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "bk/bk.h"

namespace {

int exit_code(bk_status s) {
  switch (s) {
    case BK_OK:
      return 0;
    case BK_ERR_PARSE:
    case BK_ERR_DOMAIN:
    case BK_ERR_NULL:
      return 2;
    case BK_ERR_INVARIANT:
      return 3;
    case BK_ERR_VERIFY:
      return 4;
    default:
      return 1;
  }
}

// Prints the output (if any) and the error message, returns the exit code.
int finish(bk_status s, char* out) {
  if (out) {
    std::fputs(out, stdout);
    bk_string_free(out);
  }
  if (s != BK_OK) std::cerr << "error: " << bk_last_error() << "\n";
  return exit_code(s);
}

struct AlgebraHandle {
  bk_algebra* a = nullptr;
  ~AlgebraHandle() { bk_algebra_free(a); }
};

struct BimoduleHandle {
  bk_bimodule* m = nullptr;
  ~BimoduleHandle() { bk_bimodule_free(m); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blanchet-Khovanov algebras: bases, signed surgery multiplication, bimodules, verification"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "ascii";
  std::string block, matching;
  std::vector<std::string> weights;
  long long modulus = 0;
  bk_verify_options vopt;
  bk_verify_options_default(&vopt);
  std::string x, y, left, right, elem;
  std::vector<std::string> words, suites;

  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "ascii"}));
  app.add_option("--mod", modulus, "Reduce coefficients modulo a prime p")->check(CLI::NonNegativeNumber);

  auto block_opt = [&](CLI::App* sub) { sub->add_option("--block", block, "Block sequence, e.g. \"**ox\" or JSON")->required(); };

  auto* basis = app.add_subcommand("basis", "List the basis of the algebra of a block");
  block_opt(basis);
  auto* mult = app.add_subcommand("mult", "Multiply two elements (basis indices or element JSON)");
  block_opt(mult);
  mult->add_option("x", x)->required();
  mult->add_option("y", y)->required();
  auto* table = app.add_subcommand("table", "Full multiplication table");
  block_opt(table);
  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial");
  block_opt(poincare);
  auto* idem = app.add_subcommand("idempotents", "Primitive idempotents");
  block_opt(idem);

  auto* bbasis = app.add_subcommand("bimodule-basis", "Basis of the bimodule of a composite matching");
  bbasis->add_option("--matching", matching, "Composite matching, JSON or \"**ox;+a_i@2\"")->required();
  auto* act = app.add_subcommand("act", "Act on a bimodule element from the left and/or right");
  act->add_option("--matching", matching)->required();
  act->add_option("--left", left, "Algebra element acting from the left");
  act->add_option("--right", right, "Algebra element acting from the right");
  act->add_option("element", elem, "Bimodule basis index or element JSON")->required();

  auto* howe = app.add_subcommand("howe", "Composite matching of a generator word, applied right to left");
  block_opt(howe);
  howe->add_option("word", words, "Generators such as F1 E2^(2) 1")->required();

  auto* ipe = app.add_subcommand("ipe-check", "Internal phantom edges of lambda mu* against the closed formulas");
  ipe->add_option("--weight", weights, "lambda, and optionally mu (defaults to lambda)")->required()->expected(1, 2);

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suites", suites, std::string("Suites to run (default all): ") + bk_verify_suites());
  verify->add_option("--max-stars", vopt.max_stars)->check(CLI::Range(0, 12));
  verify->add_option("--max-crosses", vopt.max_crosses)->check(CLI::Range(0, 6));
  verify->add_option("--seed", vopt.seed);
  verify->add_option("--jobs", vopt.jobs)->check(CLI::PositiveNumber);
  verify->add_option("--samples", vopt.samples, "Random instances for the order suite")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  bk_format fmt = format == "json" ? BK_FORMAT_JSON : BK_FORMAT_ASCII;
  char* out = nullptr;

  if (basis->parsed() || mult->parsed() || table->parsed() || poincare->parsed() || idem->parsed()) {
    AlgebraHandle h;
    if (bk_status s = bk_algebra_new(block.c_str(), &h.a); s != BK_OK) return finish(s, nullptr);
    bk_status s = BK_OK;
    if (basis->parsed()) s = bk_algebra_basis(h.a, fmt, &out);
    else if (mult->parsed()) s = bk_algebra_mult(h.a, x.c_str(), y.c_str(), modulus, fmt, &out);
    else if (table->parsed()) s = bk_algebra_table(h.a, modulus, fmt, &out);
    else if (poincare->parsed()) {
      if ((s = bk_algebra_poincare(h.a, &out)) == BK_OK) {
        std::string p = out;
        bk_string_free(out);
        out = nullptr;
        p = fmt == BK_FORMAT_JSON ? "{\"poincare\": \"" + p + "\"}\n" : p + "\n";
        std::fputs(p.c_str(), stdout);
      }
    } else s = bk_algebra_idempotents(h.a, fmt, &out);
    return finish(s, out);
  }

  if (bbasis->parsed() || act->parsed()) {
    BimoduleHandle h;
    if (bk_status s = bk_bimodule_new(matching.c_str(), &h.m); s != BK_OK) return finish(s, nullptr);
    bk_status s = bbasis->parsed() ? bk_bimodule_basis(h.m, fmt, &out)
                                   : bk_bimodule_act(h.m, act->count("--left") ? left.c_str() : nullptr, elem.c_str(),
                                                     act->count("--right") ? right.c_str() : nullptr, fmt, &out);
    return finish(s, out);
  }

  if (howe->parsed()) {
    std::string word;
    for (const auto& w : words) word += (word.empty() ? "" : " ") + w;
    bk_status s = bk_howe(block.c_str(), word.c_str(), fmt, &out);
    return finish(s, out);
  }

  if (ipe->parsed()) {
    const std::string& lambda = weights.front();
    const std::string& mu = weights.size() > 1 ? weights[1] : weights.front();
    bk_status s = bk_ipe_check(lambda.c_str(), mu.c_str(), fmt, &out);
    return finish(s, out);
  }

  std::string names;
  for (const auto& s : suites) names += (names.empty() ? "" : " ") + s;
  vopt.modulus = modulus;
  bk_status s = bk_verify(names.c_str(), &vopt, fmt, &out);
  return finish(s, out);
}
