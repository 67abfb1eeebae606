#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "intsub/interval.hpp"
#include "intsub/spectral.hpp"

using namespace intsub;

namespace {

FVector fv(std::vector<long> v) {
  FVector f;
  for (long x : v) f.counts.emplace_back(x);
  return f;
}

IntMatrix shifted(IntMatrix m, const Int& lambda) {
  for (int i = 0; i < m.size(); ++i) m.at(i, i) -= lambda;
  return m;
}

}  // namespace

TEST_CASE("determinant and rank") {
  IntMatrix m(1);
  m.at(0, 0) = 2;
  m.at(0, 1) = 7;
  m.at(1, 0) = 1;
  m.at(1, 1) = 5;
  CHECK(det_bareiss(m) == 3);
  CHECK(rank_exact(m) == 2);

  IntMatrix singular(1);
  singular.at(0, 0) = 1;
  singular.at(0, 1) = 2;
  singular.at(1, 0) = 2;
  singular.at(1, 1) = 4;
  CHECK(det_bareiss(singular) == 0);
  CHECK(rank_exact(singular) == 1);
  CHECK(rank_exact(IntMatrix(2)) == 0);

  SUBCASE("row swaps keep the sign") {
    IntMatrix p(1);
    p.at(0, 1) = 1;
    p.at(1, 0) = 1;
    CHECK(det_bareiss(p) == -1);
  }
  SUBCASE("product of the spectrum") {
    CHECK(det_bareiss(f_matrix(3)) == 1 * 1 * 4 * 24);
    CHECK(det_bareiss(r_matrix(3)) == 1 * 1 * 4 * 24);
  }
}

TEST_CASE("expected spectrum") {
  CHECK(expected_spectrum(1) == std::vector<Int>{Int(1), Int(1)});
  CHECK(expected_spectrum(4) ==
        std::vector<Int>{Int(1), Int(1), Int(4), Int(24), Int(192)});
}

TEST_CASE("spectrum verification") {
  for (char kind : {'F', 'R'}) {
    SpectrumReport rep = verify_spectrum(kind, 4);
    CAPTURE(kind);
    CHECK(rep.all_verified());
    CHECK(rep.expected.size() == 5);
    CHECK(rep.multiplicity_of_one == 2);
  }
  SpectrumReport tiny = verify_spectrum('F', 1);
  CHECK(tiny.all_verified());
  CHECK(tiny.multiplicity_of_one == 2);

  SUBCASE("non-eigenvalues have nonzero determinant") {
    for (Int mu : {Int(3), Int(5), Int(100)}) {
      CHECK(det_bareiss(shifted(f_matrix(4), mu)) != 0);
      CHECK(det_bareiss(shifted(r_matrix(4), mu)) != 0);
    }
  }
  SUBCASE("eigenvalue 1 has a d-1 dimensional complement") {
    for (int d = 1; d <= 5; ++d) {
      CHECK(rank_exact(shifted(f_matrix(d), Int(1))) == d - 1);
      CHECK(rank_exact(shifted(r_matrix(d), Int(1))) == d - 1);
    }
  }
}

TEST_CASE("eigenvector structure") {
  for (int d = 1; d <= 6; ++d) {
    CAPTURE(d);
    CHECK(eigenvector_structure_check(d));
  }
  SUBCASE("kernel basis for the small case") {
    auto basis = eigen_kernel(r_matrix(2), Int(4));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] == 0);
    CHECK(basis[0][2] == 0);
    CHECK(basis[0][1] != 0);
  }
}

TEST_CASE("iterated transform") {
  FVector f = fv({1, 3, 3, 1});
  CHECK(iterate_f(f, 0) == f);
  CHECK(iterate_f(f, 1) == fv({1, 19, 42, 24}));
  CHECK(iterate_f(f, 2) == f_interval(f_interval(f)));

  SUBCASE("facet growth locks onto the top eigenvalue") {
    FVector g = iterate_f(f, 6);
    FVector gn = f_interval(g);
    // Top-dimensional count multiplies by exactly 2^{d-1} d! in the limit;
    // for the 2-simplex that ratio is 24 already after a few rounds.
    CHECK(gn.counts[3] / g.counts[3] == 24);
  }
}

TEST_CASE("f polynomial") {
  CHECK(f_polynomial(fv({1, 3, 3, 1})) ==
        Poly(std::vector<Int>{Int(1), Int(3), Int(3), Int(1)}));
  CHECK(f_polynomial(fv({1})).degree() == 0);
}

TEST_CASE("numeric roots and Hausdorff distance") {
  auto roots = numeric_roots(Poly(std::vector<Int>{Int(2), Int(3), Int(1)}));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].real() == doctest::Approx(-2.0));
  CHECK(roots[1].real() == doctest::Approx(-1.0));

  std::vector<std::complex<double>> a = {{0, 0}, {1, 0}};
  std::vector<std::complex<double>> b = {{0, 0}, {1, 1}};
  CHECK(hausdorff_distance(a, b) == doctest::Approx(1.0));
  CHECK(hausdorff_distance(a, a) == doctest::Approx(0.0));
}

TEST_CASE("limit of the root trajectory") {
  SUBCASE("a single vertex is stationary") {
    RootTrajectory t = limit_convergence_report(fv({1, 1}), 3, 1e-9);
    CHECK(t.converged);
  }
  SUBCASE("2-simplex converges to the dimension-determined roots") {
    RootTrajectory t = limit_convergence_report(fv({1, 3, 3, 1}), 12, 1e-6);
    REQUIRE(t.steps.size() >= 2);
    CHECK(t.converged);
    // Limit roots for d = 2: {0, -1, -1/2}.
    auto last = t.steps.back().roots;
    REQUIRE(last.size() == 3);
    CHECK(std::abs(last[0] - std::complex<double>(-1.0, 0.0)) < 1e-4);
    CHECK(std::abs(last[1] - std::complex<double>(-0.5, 0.0)) < 1e-4);
    CHECK(std::abs(last[2]) < 1e-4);
    CHECK(t.to_json().find("\"iterations\"") != std::string::npos);
  }
}
