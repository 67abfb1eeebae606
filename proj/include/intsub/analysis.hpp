#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "intsub/polynomial.hpp"
#include "intsub/vectors.hpp"

namespace intsub {

// p / gcd(p, p'), normalized to primitive integer coefficients with
// positive leading coefficient.
Poly square_free_part(const Poly& p);

// Number of distinct real roots of a square-free polynomial, by Sturm's
// theorem (sign variations at -inf minus +inf).
long count_real_roots(const Poly& p);

// True iff every complex root of p is real, multiplicities included.
// Constants count as real-rooted; the zero polynomial throws.
bool is_real_rooted(const Poly& p);

// Literal coefficient-sequence tests on indices 0..deg.
bool is_log_concave(const Poly& p);
bool is_unimodal(const Poly& p);

enum class CharneyDavis {
  Holds,
  HoldsTriviallyRootAtMinusOne,
  Fails,
  NotApplicable,
};

std::string to_string(CharneyDavis s);

// Evaluates (-1)^{floor(d/2)} h(-1) >= 0 for a non-negative reciprocal h;
// anything else is NotApplicable.
CharneyDavis charney_davis_check(const HVector& h);

struct CompatibilityReport {
  bool violation_found = false;
  // Set when a violation was found: the offending combination.
  Poly counterexample;
  std::string description;
};

// Randomized falsification probe for compatibility: draws `trials` seeded
// non-negative coefficient vectors (uniform over 0..9, plus the unit
// vectors and all-ones), asserts real-rootedness of each combination and of
// each ordered pairwise t*f_i + c*f_j with i < j (the shifted condition is
// directional).  Never claims compatibility.
CompatibilityReport compatibility_probe(const std::vector<Poly>& polys,
                                        int trials, std::uint64_t seed);

}  // namespace intsub
