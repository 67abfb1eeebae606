#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace intsub {

// All combinatorial counts are exact; f-vectors of iterated subdivisions
// grow like (2^{d-1} d!)^n, so machine words are never enough.
using Int = mpz_class;
using Rat = mpq_class;

struct MalformedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ArithmeticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedMethod : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
  NumericError(const std::string& what, int iteration)
      : std::runtime_error(what), iteration(iteration) {}
  int iteration;
};

inline Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int ipow(long base, unsigned long e) { return ipow(Int(base), e); }

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace intsub
