#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bk/io.hpp"

namespace bk {

struct VerifyOptions {
  int max_stars = 6;
  int max_crosses = 1;
  std::uint64_t seed = 1;
  int jobs = 1;
  long long samples = 10000;  // random instances for the order suite
  std::int64_t modulus = 0;   // coefficients mod p in the assoc suite
  std::size_t max_counterexamples = 5;
};

struct SuiteReport {
  std::string name;
  long long checks = 0;
  long long failures = 0;
  std::vector<json> counterexamples;  // at most max_counterexamples, in check order
  bool ok() const { return failures == 0; }
};

// Balanced blocks over {*, x} within the caps, empty block first, then by
// length and lexicographically. Empty positions never change the algebra,
// so they are left out.
std::vector<Block> small_blocks(int max_stars, int max_crosses);

const std::vector<std::string>& suite_names();
// Throws DomainError for an unknown suite name.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt);

json report_json(const SuiteReport& r);
std::string report_ascii(const SuiteReport& r);

}  // namespace bk
