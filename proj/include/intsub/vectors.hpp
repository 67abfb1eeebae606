#pragma once

#include <vector>

#include "intsub/complex.hpp"
#include "intsub/polynomial.hpp"
#include "intsub/types.hpp"

namespace intsub {

// (f_{-1}, f_0, ..., f_{d-1}); counts[0] is always the empty face count 1.
struct FVector {
  std::vector<Int> counts;
  int d() const { return static_cast<int>(counts.size()) - 1; }
  bool operator==(const FVector& o) const { return counts == o.counts; }
};

// (h_0, ..., h_d).
struct HVector {
  std::vector<Int> values;
  int d() const { return static_cast<int>(values.size()) - 1; }
  bool operator==(const HVector& o) const { return values == o.values; }
};

FVector f_vector(const SimplicialComplex& K);

// h_k = sum_{i=0..k} (-1)^{k-i} C(d-i, k-i) f_{i-1}
HVector h_from_f(const FVector& f);

// Exact inverse of h_from_f.
FVector f_from_h(const HVector& h);

// sum_i h_i t^i
Poly h_polynomial(const HVector& h);

// sum_{i>=0} (-1)^i f_i  (the empty face is not counted)
Int euler_characteristic(const FVector& f);

bool is_reciprocal(const HVector& h);

}  // namespace intsub
