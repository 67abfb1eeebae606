#pragma once

#include <complex>
#include <string>
#include <vector>

#include "intsub/matrices.hpp"
#include "intsub/polynomial.hpp"
#include "intsub/vectors.hpp"

namespace intsub {

// Fraction-free (Bareiss) determinant.
Int det_bareiss(const IntMatrix& m);

// Exact rank over the rationals.
int rank_exact(const IntMatrix& m);

// Basis of the rational kernel of (m - lambda*I), reduced echelon form.
std::vector<std::vector<Rat>> eigen_kernel(const IntMatrix& m, const Int& lambda);

// (1, 1, 2*2!, 2^2*3!, ..., 2^{d-1}*d!)
std::vector<Int> expected_spectrum(int d);

struct SpectrumReport {
  int d = 0;
  std::vector<Int> expected;
  std::vector<bool> verified;  // det(M - lambda I) == 0, per eigenvalue
  int multiplicity_of_one = 0;  // geometric multiplicity of eigenvalue 1
  bool all_verified() const;
};

SpectrumReport verify_spectrum(char kind /* 'F' or 'R' */, int d);

// Exact kernel checks from the eigenvector lemma: for each eigenvalue
// 2^i (i+1)! of R_d the kernel is one-dimensional with vanishing first and
// last coordinates, the top eigenvector of R_d has strictly positive
// interior entries, and every eigenvector of F_d for an eigenvalue != 1 is
// annihilated by the Euler-characteristic functional
// v -> sum_i (-1)^i v_i.
bool eigenvector_structure_check(int d);

// n-fold f_interval.
FVector iterate_f(FVector f, int n);

// sum_j f_{j-1} t^j
Poly f_polynomial(const FVector& f);

struct RootTrajectoryStep {
  int n = 0;
  std::vector<std::complex<double>> roots;
  double hausdorff_from_prev = 0.0;  // 0 for the first step
};

struct RootTrajectory {
  int d = 0;
  std::vector<RootTrajectoryStep> steps;
  bool converged = false;
  std::string to_json() const;
};

// Numeric roots of a polynomial with exact coefficients, via the companion
// matrix of the monic rescaling.
std::vector<std::complex<double>> numeric_roots(const Poly& p);

double hausdorff_distance(const std::vector<std::complex<double>>& a,
                          const std::vector<std::complex<double>>& b);

RootTrajectory limit_convergence_report(const FVector& f, int iters, double tol);

}  // namespace intsub
