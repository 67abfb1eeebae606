#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "intsub/analysis.hpp"
#include "intsub/signed_perm.hpp"

using namespace intsub;

namespace {

Poly ip(std::vector<long> coeffs) {
  return Poly(std::vector<Int>(coeffs.begin(), coeffs.end()));
}

HVector hv(std::vector<long> v) {
  HVector h;
  for (long x : v) h.values.emplace_back(x);
  return h;
}

// Random product of linear factors (c + t) with small non-negative c, the
// canonical family of real-rooted polynomials.
Poly random_linear_product(std::mt19937_64& rng, int max_factors) {
  std::uniform_int_distribution<int> nf(1, max_factors);
  std::uniform_int_distribution<long> cc(0, 5);
  Poly p = ip({1});
  const int n = nf(rng);
  for (int i = 0; i < n; ++i) p = p * ip({cc(rng), 1});
  return p;
}

}  // namespace

TEST_CASE("polynomial operations") {
  CHECK(ip({1, 16, 7}).reversed(4) == ip({0, 0, 7, 16, 1}));
  CHECK(ip({1, 2, 1}).derivative() == ip({2, 2}));
  CHECK(ip({1, 1}).eval(Rat(-1)) == 0);
  CHECK(ip({0, 0, 3, 6}).divided_by_t() == ip({0, 3, 6}));
  CHECK_THROWS_AS(ip({1, 2}).divided_by_t(), ArithmeticError);
  CHECK(ip({1, 2, 1}).compose_t_squared() == ip({1, 0, 2, 0, 1}));
}

TEST_CASE("square-free part") {
  CHECK(square_free_part(ip({0, 1, 2, 1})) == ip({0, 1, 1}));  // t(t+1)^2
  CHECK(square_free_part(ip({1, 2, 1})) == ip({1, 1}));
  CHECK(square_free_part(ip({1, 1})) == ip({1, 1}));
  CHECK(square_free_part(ip({5})) == ip({1}));
  // Rational input is scaled to primitive integer coefficients.
  CHECK(square_free_part(ip({2, 4, 2})) == ip({1, 1}));
}

TEST_CASE("Sturm root counting") {
  CHECK(count_real_roots(ip({1, 16, 7})) == 2);
  CHECK(count_real_roots(ip({1, 0, 1})) == 0);
  CHECK(count_real_roots(ip({-2, 0, 1})) == 2);
  CHECK(count_real_roots(ip({0, 1})) == 1);
  CHECK(count_real_roots(ip({1, 1, 1})) == 0);
  CHECK(count_real_roots(ip({-6, 11, -6, 1})) == 3);  // (t-1)(t-2)(t-3)
}

TEST_CASE("real-rootedness") {
  CHECK(is_real_rooted(ip({1, 2, 1})));
  CHECK(is_real_rooted(ip({0, 0, 1})));
  CHECK(is_real_rooted(ip({1})));
  CHECK_FALSE(is_real_rooted(ip({1, 0, 1})));
  CHECK_FALSE(is_real_rooted(ip({1, 1, 1})));
  CHECK(is_real_rooted(ip({1, 16, 7})));
  CHECK_THROWS_AS(is_real_rooted(Poly()), ArithmeticError);

  SUBCASE("oracle: products of linear factors") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
      Poly p = random_linear_product(rng, 6);
      CAPTURE(p.pretty());
      CHECK(is_real_rooted(p));
      CHECK_FALSE(is_real_rooted(p * ip({1, 0, 1})));
    }
  }
}

TEST_CASE("log-concavity and unimodality") {
  CHECK(is_log_concave(ip({1, 3, 3, 1})));
  CHECK(is_log_concave(ip({1, 16, 7})));
  CHECK_FALSE(is_log_concave(ip({1, 1, 2})));
  CHECK(is_unimodal(ip({1, 1, 2})));
  CHECK(is_unimodal(ip({1, 5, 5, 1})));
  CHECK_FALSE(is_unimodal(ip({1, 0, 1})));
  CHECK(is_unimodal(ip({2})));
  // Internal zero breaks log-concavity of a positive flank.
  CHECK_FALSE(is_log_concave(ip({1, 0, 1})));
}

TEST_CASE("Charney-Davis statuses") {
  CHECK(charney_davis_check(hv({1, 10, 1})) == CharneyDavis::Holds);
  CHECK(charney_davis_check(hv({1, 1})) ==
        CharneyDavis::HoldsTriviallyRootAtMinusOne);
  CHECK(charney_davis_check(hv({1, 1, 1, -3, 1})) ==
        CharneyDavis::NotApplicable);
  CHECK(charney_davis_check(hv({1, 0, 1})) == CharneyDavis::Fails);
  CHECK(to_string(CharneyDavis::Holds) == "holds");
  CHECK(to_string(CharneyDavis::NotApplicable) == "not_applicable");
}

TEST_CASE("compatibility probe") {
  std::vector<Poly> family;
  for (int j = 1; j <= 4; ++j) family.push_back(bplus_poly(4, j).coeffs);
  CHECK_FALSE(compatibility_probe(family, 50, 17).violation_found);

  SUBCASE("detects a planted failure") {
    std::vector<Poly> bad = {ip({1, 2, 1}), ip({1, 0, 1})};
    CompatibilityReport rep = compatibility_probe(bad, 10, 17);
    CHECK(rep.violation_found);
    CHECK_FALSE(rep.description.empty());
  }
  SUBCASE("rejects degenerate input") {
    CHECK_THROWS_AS(compatibility_probe({}, 5, 1), MalformedInput);
    CHECK_THROWS_AS(compatibility_probe({Poly()}, 5, 1), MalformedInput);
  }
}

TEST_CASE("E_r preserves real-rootedness on the tested family") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    Poly p = random_linear_product(rng, 6);
    for (int r = 2; r <= 3; ++r) {
      Poly er = e_r(p, r);
      if (!er.is_zero()) {
        CAPTURE(p.pretty());
        CAPTURE(r);
        CHECK(is_real_rooted(er));
      }
    }
  }
}
