#pragma once

#include <string>
#include <vector>

#include "intsub/types.hpp"

namespace intsub {

// Dense univariate polynomial with exact rational coefficients.
// The coefficient sequence never has a trailing zero; the zero polynomial
// has an empty coefficient vector and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  explicit Poly(std::vector<Int> coeffs);

  static Poly constant(const Rat& c);
  // c * t^k
  static Poly monomial(const Rat& c, int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rat coeff(int k) const;
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat leading() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly scaled(const Rat& s) const;
  Poly derivative() const;
  Rat eval(const Rat& x) const;

  // Degree-n reversal: coefficient k of the result is coefficient n-k of
  // this polynomial.  Requires n >= degree().
  Poly reversed(int n) const;

  // Substitution t -> t^2.
  Poly compose_t_squared() const;

  // Exact division by t; throws ArithmeticError on a nonzero constant term.
  Poly divided_by_t() const;

  // Quotient and remainder over the rationals (exact).
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

  // Monic-free gcd: primitive integer coefficients, positive leading.
  static Poly gcd(Poly a, Poly b);

  // Scales to primitive integer coefficients with positive leading
  // coefficient (identity on the zero polynomial).
  Poly primitive_part() const;

  bool integer_coefficients() const;

  // "c0 + c1*t + ..." with zero terms omitted.
  std::string pretty() const;

 private:
  void trim();
  std::vector<Rat> c_;
};

}  // namespace intsub
