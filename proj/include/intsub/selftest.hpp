#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "intsub/complex.hpp"
#include "intsub/vectors.hpp"

namespace intsub {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestOptions {
  int max_d = 8;
  std::uint64_t seed = 0;
};

// Full cross-validation battery; one result per suite, deterministic for a
// given (max_d, seed).
std::vector<SuiteResult> run_selftest(const SelftestOptions& opts);

// Seeded generators shared by the selftest battery and the test suites.
SimplicialComplex random_complex(std::mt19937_64& rng, int max_vertices,
                                 int max_dim);
HVector random_nonneg_h(std::mt19937_64& rng, int d);
HVector random_reciprocal_nonneg_h(std::mt19937_64& rng, int d);

}  // namespace intsub
