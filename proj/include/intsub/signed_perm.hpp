#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "intsub/polynomial.hpp"

namespace intsub {

// Element of the hyperoctahedral group B_d in window notation: nonzero
// integers whose absolute values are a permutation of 1..d.
struct SignedPermutation {
  std::vector<int> window;
  int d() const { return static_cast<int>(window.size()); }
  bool operator==(const SignedPermutation& o) const {
    return window == o.window;
  }
};

// Type-B descent number with the sigma_0 = 0 convention.
int descent_count_B(const SignedPermutation& sigma);

// Type-A descent number (positions 1..d-1 only).
int descent_count_A(const std::vector<int>& window);

// Visits each element of B_d once, optionally restricted to a fixed first
// letter and/or a fixed sign of the last letter.  Order is lexicographic on
// the window under the natural integer order (-d < ... < -1 < 1 < ... < d).
void for_each_signed_perm(int d, std::optional<int> first,
                          std::optional<int> last_sign,
                          const std::function<void(const SignedPermutation&)>& fn);

std::vector<SignedPermutation> enumerate_B(int d, std::optional<int> first = {},
                                           std::optional<int> last_sign = {});

enum class EulerianKind { A, B, BPlus, BMinus, T };
enum class EulerianMethod { Enumerate, Recurrence, E2 };

struct EulerianPolynomial {
  EulerianKind kind;
  int d;
  int j;
  Poly coeffs;
};

// Descent generating polynomial over {sigma in B_d : sigma_1 = j,
// sigma_d > 0}.  The recurrence route uses the insertion recurrences with
// base cases B+_{1,1} = 1, B+_{1,-1} = 0; the E2 route is valid for j >= 1
// only and throws UnsupportedMethod otherwise.
EulerianPolynomial bplus_poly(int d, int j,
                              EulerianMethod method = EulerianMethod::Recurrence);

// Degree-d reversal of bplus_poly(d, -j).
EulerianPolynomial bminus_poly(int d, int j);

// bplus + bminus.
EulerianPolynomial b_poly(int d, int j);

// Type-A j-Eulerian polynomial, 1 <= j <= d.  The recurrence route is only
// licensed for j < d and throws UnsupportedMethod at j = d.
EulerianPolynomial a_poly(int d, int j,
                          EulerianMethod method = EulerianMethod::Enumerate);

// T_{d,j}(t) = B+_{d,j}(t^2) + (1/t) B-_{d,j}(t^2).
EulerianPolynomial t_poly(int d, int j);

// Keeps every r-th coefficient: coefficient k of the result is coefficient
// r*k of p.
Poly e_r(const Poly& p, int r);

}  // namespace intsub
