#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "intsub/interval.hpp"
#include "intsub/matrices.hpp"
#include "intsub/selftest.hpp"

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

TEST_CASE("f matrix") {
  IntMatrix F2 = f_matrix(2);
  const long rows[3][3] = {{1, 0, 0}, {0, 1, 3}, {0, 0, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(F2.at(i, j) == rows[i][j]);

  SUBCASE("diagonal") {
    IntMatrix F4 = f_matrix(4);
    const long diag[5] = {1, 1, 4, 24, 192};
    for (int i = 0; i < 5; ++i) CHECK(F4.at(i, i) == diag[i]);
  }
  SUBCASE("action matches the closed form") {
    IntMatrix F3 = f_matrix(3);
    auto out = F3.apply({Int(1), Int(3), Int(3), Int(1)});
    CHECK(out == std::vector<Int>{Int(1), Int(19), Int(42), Int(24)});
    CHECK(F2.apply({Int(1), Int(3), Int(3)}) ==
          std::vector<Int>{Int(1), Int(12), Int(12)});
  }
  SUBCASE("nested embedding") {
    for (int d = 1; d <= 6; ++d) {
      IntMatrix big = f_matrix(d + 1);
      IntMatrix small = f_matrix(d);
      for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) CHECK(big.at(i, j) == small.at(i, j));
    }
  }
  SUBCASE("entry recurrence") {
    for (int d = 2; d <= 10; ++d)
      for (int r = 1; r <= d - 1; ++r)
        for (int l = 1; l <= d; ++l) {
          Int lhs = 0;
          for (int i = 1; i <= l; ++i)
            lhs += ipow(2, i) * binomial(l, i) * f_matrix_entry(r, l - i);
          CHECK(lhs == f_matrix_entry(r + 1, l));
        }
  }
}

TEST_CASE("h matrices") {
  IntMatrix H1 = h_matrix(1);
  CHECK(H1.at(0, 0) == 1);
  CHECK(H1.at(0, 1) == 0);
  CHECK(H1.at(1, 0) == -1);
  CHECK(H1.at(1, 1) == 1);

  SUBCASE("inverse pair") {
    for (int d = 0; d <= 10; ++d)
      CHECK(h_matrix(d) * h_matrix_inverse(d) == IntMatrix::identity(d));
  }
  SUBCASE("matrix action matches the defining sums") {
    auto v = h_matrix(4).apply({Int(1), Int(5), Int(10), Int(6), Int(1)});
    CHECK(v == std::vector<Int>{Int(1), Int(1), Int(1), Int(-3), Int(1)});
  }
}

TEST_CASE("r matrix") {
  SUBCASE("d=2 by hand") {
    IntMatrix R2 = r_matrix(2);
    const long rows[3][3] = {{1, 0, 0}, {3, 4, 3}, {0, 0, 1}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(R2.at(i, j) == rows[i][j]);
  }
  SUBCASE("dual characterization") {
    for (int d = 0; d <= 7; ++d)
      CHECK(r_matrix(d, RMethod::Eulerian) == r_matrix(d, RMethod::Algebraic));
  }
  SUBCASE("column sums of R4") {
    IntMatrix R4 = r_matrix(4);
    for (int s = 0; s <= 4; ++s) {
      Int sum = 0;
      for (int r = 0; r <= 4; ++r) sum += R4.at(r, s);
      CHECK(sum == 192);
    }
  }
  SUBCASE("unit boundary rows") {
    for (int d = 1; d <= 6; ++d) {
      IntMatrix R = r_matrix(d);
      for (int j = 0; j <= d; ++j) {
        CHECK(R.at(0, j) == (j == 0 ? 1 : 0));
        CHECK(R.at(d, j) == (j == d ? 1 : 0));
      }
    }
  }
}

TEST_CASE("h transform of the subdivision") {
  CHECK(h_interval(hv({1, 1, 1, -3, 1})) == hv({1, 88, 110, -8, 1}));
  CHECK(h_interval(hv({1, 0, 0, 0})) == hv({1, 16, 7, 0}));
  CHECK(h_interval(hv({1, 1, 1})) == hv({1, 10, 1}));
}

TEST_CASE("commuting square") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> entry(0, 30);
  std::uniform_int_distribution<int> dd(0, 8);
  for (int trial = 0; trial < 40; ++trial) {
    FVector f;
    f.counts.emplace_back(1);
    const int d = dd(rng);
    for (int i = 0; i < d; ++i) f.counts.emplace_back(entry(rng));
    CHECK(h_from_f(f_interval(f)) == h_interval(h_from_f(f)));
  }
}

TEST_CASE("monotonicity on non-negative h") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> dd(1, 8);
    HVector h = random_nonneg_h(rng, dd(rng));
    HVector hi = h_interval(h);
    for (int r = 0; r <= h.d(); ++r) CHECK(hi.values[r] >= h.values[r]);
  }
  SUBCASE("fails without non-negativity") {
    HVector bad = hv({1, 1, 1, -3, 1});
    CHECK(h_interval(bad).values[3] < bad.values[3]);
  }
}

TEST_CASE("reciprocity preservation") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> dd(1, 8);
    HVector h = random_reciprocal_nonneg_h(rng, dd(rng));
    CHECK(is_reciprocal(h_interval(h)));
  }
}

TEST_CASE("serialization formats") {
  CHECK(f_matrix(1).to_tsv() == "1\t0\n0\t1\n");
  CHECK(f_matrix(1).to_json() == "{\"dim\": 1, \"rows\": [[1, 0], [0, 1]]}");
}
