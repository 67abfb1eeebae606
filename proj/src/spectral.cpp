#include "intsub/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "intsub/interval.hpp"

namespace intsub {

Int det_bareiss(const IntMatrix& m) {
  const int n = m.size();
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);

  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

namespace {

// Reduced row echelon form over the rationals; returns pivot columns.
std::vector<int> rref(std::vector<std::vector<Rat>>& a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[r], a[pr]);
    Rat inv = Rat(1) / a[r][c];
    for (int j = 0; j < cols; ++j) a[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat factor = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] -= factor * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Rat>> to_rat(const IntMatrix& m, const Int& shift) {
  const int n = m.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a[i][j] = Rat(m.at(i, j));
      if (i == j) a[i][j] -= Rat(shift);
    }
  return a;
}

IntMatrix build(char kind, int d) {
  return kind == 'F' ? f_matrix(d) : r_matrix(d);
}

}  // namespace

int rank_exact(const IntMatrix& m) {
  auto a = to_rat(m, Int(0));
  return static_cast<int>(rref(a).size());
}

std::vector<std::vector<Rat>> eigen_kernel(const IntMatrix& m,
                                           const Int& lambda) {
  auto a = to_rat(m, lambda);
  const int n = m.size();
  std::vector<int> pivots = rref(a);
  std::vector<char> is_pivot(n, 0);
  for (int c : pivots) is_pivot[c] = 1;

  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(n, Rat(0));
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Int> expected_spectrum(int d) {
  std::vector<Int> s;
  s.push_back(1);
  if (d >= 1) s.push_back(1);
  for (int i = 1; i <= d - 1; ++i) s.push_back(ipow(2, i) * factorial(i + 1));
  return s;
}

bool SpectrumReport::all_verified() const {
  return std::all_of(verified.begin(), verified.end(), [](bool b) { return b; });
}

SpectrumReport verify_spectrum(char kind, int d) {
  SpectrumReport report;
  report.d = d;
  report.expected = expected_spectrum(d);
  IntMatrix m = build(kind, d);
  for (const Int& lambda : report.expected) {
    IntMatrix shifted = m;
    for (int i = 0; i < m.size(); ++i) shifted.at(i, i) -= lambda;
    report.verified.push_back(det_bareiss(shifted) == 0);
  }
  IntMatrix minus_one = m;
  for (int i = 0; i < m.size(); ++i) minus_one.at(i, i) -= 1;
  report.multiplicity_of_one = m.size() - rank_exact(minus_one);
  return report;
}

bool eigenvector_structure_check(int d) {
  if (d < 1) return false;  // d = 1 passes vacuously: no eigenvalues != 1
  const IntMatrix R = r_matrix(d);
  const IntMatrix F = f_matrix(d);
  const Int top = ipow(2, d - 1) * factorial(d);

  for (int i = 1; i <= d - 1; ++i) {
    const Int lambda = ipow(2, i) * factorial(i + 1);

    auto rk = eigen_kernel(R, lambda);
    if (rk.size() != 1) return false;
    const auto& w = rk[0];
    if (w.front() != 0 || w.back() != 0) return false;
    if (lambda == top) {
      // Normalize so the first nonzero entry is positive, then every
      // interior entry must be strictly positive.
      Rat scale(1);
      for (const Rat& x : w)
        if (x != 0) {
          scale = x > 0 ? Rat(1) : Rat(-1);
          break;
        }
      for (int k = 1; k <= d - 1; ++k)
        if (w[k] * scale <= 0) return false;
    }

    auto fk = eigen_kernel(F, lambda);
    if (fk.size() != 1) return false;
    // Orthogonality with the Euler-characteristic functional: the
    // alternating coordinate sum vanishes for every eigenvalue != 1.
    Rat alt(0);
    for (int k = 0; k < static_cast<int>(fk[0].size()); ++k) {
      if (k % 2 == 0)
        alt += fk[0][k];
      else
        alt -= fk[0][k];
    }
    if (alt != 0) return false;
  }
  return true;
}

FVector iterate_f(FVector f, int n) {
  for (int i = 0; i < n; ++i) f = f_interval(f);
  return f;
}

Poly f_polynomial(const FVector& f) { return Poly(f.counts); }

std::vector<std::complex<double>> numeric_roots(const Poly& p) {
  const int n = p.degree();
  if (n <= 0) return {};
  const Rat lead = p.leading();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) {
    Rat c = p.coeff(i) / lead;
    const double v = c.get_d();
    if (!std::isfinite(v))
      throw NumericError("coefficient ratio exceeds double range", 0);
    companion(i, n - 1) = -v;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
  std::vector<std::complex<double>> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = solver.eigenvalues()(i);
  std::sort(roots.begin(), roots.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  for (const auto& z : roots)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw NumericError("non-finite root", 0);
  return roots;
}

double hausdorff_distance(const std::vector<std::complex<double>>& a,
                          const std::vector<std::complex<double>>& b) {
  auto directed = [](const auto& from, const auto& to) {
    double worst = 0.0;
    for (const auto& z : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& w : to) best = std::min(best, std::abs(z - w));
      worst = std::max(worst, best);
    }
    return worst;
  };
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty())
    return std::numeric_limits<double>::infinity();
  return std::max(directed(a, b), directed(b, a));
}

RootTrajectory limit_convergence_report(const FVector& f, int iters,
                                        double tol) {
  if (iters < 2) throw MalformedInput("limit_convergence_report: iters >= 2");
  RootTrajectory traj;
  traj.d = f.d();
  FVector current = f;
  for (int n = 1; n <= iters; ++n) {
    current = f_interval(current);
    RootTrajectoryStep step;
    step.n = n;
    try {
      step.roots = numeric_roots(f_polynomial(current));
    } catch (NumericError& e) {
      throw NumericError(e.what(), n);
    }
    if (!traj.steps.empty())
      step.hausdorff_from_prev =
          hausdorff_distance(traj.steps.back().roots, step.roots);
    traj.steps.push_back(std::move(step));
  }
  traj.converged = traj.steps.back().hausdorff_from_prev < tol ||
                   traj.steps.back().roots.size() <= 1;
  return traj;
}

std::string RootTrajectory::to_json() const {
  std::ostringstream out;
  out.precision(17);
  out << "{\"d\": " << d << ", \"iterations\": [";
  for (size_t i = 0; i < steps.size(); ++i) {
    if (i) out << ", ";
    out << "{\"n\": " << steps[i].n << ", \"roots\": [";
    for (size_t k = 0; k < steps[i].roots.size(); ++k) {
      if (k) out << ", ";
      out << "[" << steps[i].roots[k].real() << ", " << steps[i].roots[k].imag()
          << "]";
    }
    out << "], \"hausdorffFromPrev\": " << steps[i].hausdorff_from_prev << "}";
  }
  out << "]}";
  return out.str();
}

}  // namespace intsub
