#include "intsub/vectors.hpp"

#include <algorithm>

namespace intsub {

FVector f_vector(const SimplicialComplex& K) {
  const int d = K.dim() + 1;
  FVector f;
  f.counts.assign(d + 1, Int(0));
  for (const Face& face : K.faces()) f.counts[face.size()] += 1;
  return f;
}

HVector h_from_f(const FVector& f) {
  const int d = f.d();
  HVector h;
  h.values.assign(d + 1, Int(0));
  for (int k = 0; k <= d; ++k) {
    Int acc = 0;
    for (int i = 0; i <= k; ++i) {
      Int term = binomial(d - i, k - i) * f.counts[i];
      if ((k - i) % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    h.values[k] = acc;
  }
  return h;
}

FVector f_from_h(const HVector& h) {
  const int d = h.d();
  FVector f;
  f.counts.assign(d + 1, Int(0));
  for (int k = 0; k <= d; ++k) {
    Int acc = 0;
    for (int i = 0; i <= k; ++i) acc += binomial(d - i, k - i) * h.values[i];
    f.counts[k] = acc;
  }
  return f;
}

Poly h_polynomial(const HVector& h) { return Poly(h.values); }

Int euler_characteristic(const FVector& f) {
  Int chi = 0;
  for (size_t j = 1; j < f.counts.size(); ++j) {
    if ((j - 1) % 2 == 0)
      chi += f.counts[j];
    else
      chi -= f.counts[j];
  }
  return chi;
}

bool is_reciprocal(const HVector& h) {
  const int d = h.d();
  for (int i = 0; 2 * i <= d; ++i)
    if (h.values[i] != h.values[d - i]) return false;
  return true;
}

}  // namespace intsub
