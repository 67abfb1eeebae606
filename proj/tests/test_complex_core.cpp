#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "intsub/selftest.hpp"
#include "intsub/vectors.hpp"

using namespace intsub;

namespace {

FVector fv(std::vector<long> v) {
  FVector f;
  for (long x : v) f.counts.emplace_back(x);
  return f;
}

HVector hv(std::vector<long> v) {
  HVector h;
  for (long x : v) h.values.emplace_back(x);
  return h;
}

}  // namespace

TEST_CASE("parsing facet lists") {
  auto K = SimplicialComplex::parse("1 2 3");
  CHECK(K.dim() == 2);
  CHECK(K.facets().size() == 1);
  CHECK(K.faces().size() == 8);

  auto two_edges = SimplicialComplex::parse("1 2\n2 3");
  CHECK(two_edges.facets().size() == 2);
  CHECK(two_edges.faces().size() == 6);  // 5 nonempty faces plus the empty one

  auto nonpure = SimplicialComplex::parse("1 2 3 4\n1 2 5\n3 4 5");
  CHECK(nonpure.faces().size() == 23);
  CHECK(nonpure.dim() == 3);

  SUBCASE("comments and blank lines") {
    auto K2 = SimplicialComplex::parse("# header\n\n1 2 3  # facet\n");
    CHECK(K2 == K);
  }
  SUBCASE("redundant faces absorbed") {
    auto K2 = SimplicialComplex::parse("1 2 3\n1 2\n3\n");
    CHECK(K2 == K);
    CHECK(K2.facets().size() == 1);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(SimplicialComplex::parse(""), MalformedInput);
    CHECK_THROWS_AS(SimplicialComplex::parse("# only a comment\n"),
                    MalformedInput);
    CHECK_THROWS_AS(SimplicialComplex::parse("1 x 3"), MalformedInput);
    CHECK_THROWS_AS(SimplicialComplex::parse("0 1"), MalformedInput);
    CHECK_THROWS_AS(SimplicialComplex::parse("-2 1"), MalformedInput);
  }
}

TEST_CASE("serialization round trip") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 30; ++i) {
    auto K = random_complex(rng, 7, 4);
    CHECK(SimplicialComplex::parse(K.serialize()) == K);
  }
}

TEST_CASE("f-vector") {
  CHECK(f_vector(SimplicialComplex::parse("1 2 3")) == fv({1, 3, 3, 1}));
  CHECK(f_vector(SimplicialComplex::parse("1 2 3 4\n1 2 5\n3 4 5")) ==
        fv({1, 5, 10, 6, 1}));
  CHECK(f_vector(SimplicialComplex::from_facets({})) == fv({1}));
}

TEST_CASE("h transform examples") {
  CHECK(h_from_f(fv({1, 5, 10, 6, 1})) == hv({1, 1, 1, -3, 1}));
  CHECK(h_from_f(fv({1, 3, 3, 1})) == hv({1, 0, 0, 0}));
  CHECK(h_from_f(fv({1})) == hv({1}));
  CHECK(f_from_h(hv({1, 1, 1, -3, 1})) == fv({1, 5, 10, 6, 1}));
  CHECK(f_from_h(hv({1, 0, 0, 0})) == fv({1, 3, 3, 1}));
  CHECK(f_from_h(hv({1})) == fv({1}));
}

TEST_CASE("f/h round trip on random complexes") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    FVector f = f_vector(random_complex(rng, 7, 5));
    HVector h = h_from_f(f);
    CHECK(h.values[0] == 1);
    CHECK(f_from_h(h) == f);
  }
}

TEST_CASE("h polynomial") {
  CHECK(h_polynomial(hv({1, 1, 1, -3, 1})).pretty() ==
        "1 + t + t^2 - 3*t^3 + t^4");
  CHECK(h_polynomial(hv({1})).pretty() == "1");
  CHECK(h_polynomial(hv({1, 16, 7, 0})).degree() == 2);
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(fv({1, 3, 3, 1})) == 1);
  CHECK(euler_characteristic(fv({1, 12, 12})) == 0);
  CHECK(euler_characteristic(fv({1, 19, 42, 24})) == 1);
}

TEST_CASE("reciprocity flag") {
  CHECK(is_reciprocal(hv({1, 1, 1})));
  CHECK_FALSE(is_reciprocal(hv({1, 1, 1, -3, 1})));
  CHECK_FALSE(is_reciprocal(hv({1, 88, 110, -8, 1})));
}
