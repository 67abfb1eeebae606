#include "intsub/selftest.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "intsub/analysis.hpp"
#include "intsub/interval.hpp"
#include "intsub/matrices.hpp"
#include "intsub/signed_perm.hpp"
#include "intsub/spectral.hpp"

namespace intsub {

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

std::string vec_str(const std::vector<Int>& v) {
  std::ostringstream out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ' ';
    out << v[i].get_str();
  }
  return out.str();
}

struct Check {
  bool ok = true;
  std::string detail;
  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
  void expect(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
  SuiteResult result(const std::string& name) const {
    return {name, ok, ok ? "ok" : detail};
  }
};

SuiteResult suite_2simplex() {
  Check c;
  auto f = fv({1, 3, 3, 1});
  auto expected = fv({1, 19, 42, 24});
  c.expect(f_interval(f) == expected, "closed form on the 2-simplex");
  auto K = SimplicialComplex::parse("1 2 3\n");
  auto [intK, labeling] = interval_complex(K);
  c.expect(f_vector(intK) == expected,
           "constructive subdivision of the 2-simplex, got " +
               vec_str(f_vector(intK).counts));
  c.expect(labeling.by_label.size() == 19, "vertex count of the subdivision");
  return c.result("f-transform-2simplex");
}

SuiteResult suite_nonpure_example() {
  Check c;
  c.expect(f_interval(fv({1, 5, 10, 6, 1})) == fv({1, 92, 380, 480, 192}),
           "f-transform of <1234,125,345>");
  c.expect(h_interval(hv({1, 1, 1, -3, 1})) == hv({1, 88, 110, -8, 1}),
           "h-transform of (1,1,1,-3,1)");
  return c.result("fh-transform-nonpure-complex");
}

SuiteResult suite_r4() {
  Check c;
  const long rows[5][5] = {{1, 0, 0, 0, 0},
                           {61, 46, 32, 22, 15},
                           {115, 124, 128, 124, 115},
                           {15, 22, 32, 46, 61},
                           {0, 0, 0, 0, 1}};
  for (RMethod method : {RMethod::Eulerian, RMethod::Algebraic}) {
    IntMatrix R = r_matrix(4, method);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        c.expect(R.at(i, j) == rows[i][j],
                 "R_4 entry (" + std::to_string(i) + "," + std::to_string(j) +
                     ")");
  }
  return c.result("r4-matrix-both-routes");
}

SuiteResult suite_bplus_d4() {
  Check c;
  const std::vector<std::vector<long>> expected = {
      {1, 16, 7}, {0, 14, 10}, {0, 10, 14}, {0, 7, 16, 1}};
  for (int j = 1; j <= 4; ++j) {
    Poly want(std::vector<Int>(expected[j - 1].begin(), expected[j - 1].end()));
    for (auto method : {EulerianMethod::Enumerate, EulerianMethod::Recurrence,
                        EulerianMethod::E2}) {
      c.expect(bplus_poly(4, j, method).coeffs == want,
               "B+_{4," + std::to_string(j) + "}");
    }
  }
  return c.result("bplus-d4-table");
}

SuiteResult suite_oracle_equivalence(std::uint64_t seed) {
  Check c;
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 50 && c.ok; ++trial) {
    SimplicialComplex K = random_complex(rng, 6, 4);
    FVector f = f_vector(K);
    FVector closed = f_interval(f);
    FVector stirling = f_interval_stirling(f);
    FVector constructive = f_vector(interval_complex(K).first);
    c.expect(closed == stirling,
             "closed vs Stirling form, trial " + std::to_string(trial));
    c.expect(closed == constructive,
             "closed form vs constructive subdivision, trial " +
                 std::to_string(trial) + " on " + K.serialize());
  }
  return c.result("subdivision-oracle-equivalence");
}

SuiteResult suite_euler_characteristic(std::uint64_t seed) {
  Check c;
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 50; ++trial) {
    SimplicialComplex K = random_complex(rng, 6, 4);
    FVector f = f_vector(K);
    c.expect(euler_characteristic(f_interval(f)) == euler_characteristic(f),
             "Euler characteristic changed, trial " + std::to_string(trial));
  }
  return c.result("euler-characteristic-preservation");
}

SuiteResult suite_eulerian_cross_validation(int max_d) {
  Check c;
  // Enumeration vs recurrence, one sweep of B_d per d.
  for (int d = 1; d <= std::min(7, max_d); ++d) {
    std::map<std::pair<int, bool>, std::vector<Int>> buckets;
    for_each_signed_perm(d, {}, {}, [&](const SignedPermutation& s) {
      auto& counts = buckets[{s.window.front(), s.window.back() > 0}];
      if (counts.empty()) counts.assign(d + 1, Int(0));
      counts[descent_count_B(s)] += 1;
    });
    for (int j = -d; j <= d; ++j) {
      if (j == 0) continue;
      auto plus_it = buckets.find({j, true});
      Poly plus = plus_it == buckets.end() ? Poly() : Poly(plus_it->second);
      auto minus_it = buckets.find({j, false});
      Poly minus = minus_it == buckets.end() ? Poly() : Poly(minus_it->second);
      c.expect(bplus_poly(d, j).coeffs == plus,
               "B+ recurrence vs enumeration at d=" + std::to_string(d) +
                   " j=" + std::to_string(j));
      c.expect(bminus_poly(d, j).coeffs == minus,
               "B- reversal vs enumeration at d=" + std::to_string(d) +
                   " j=" + std::to_string(j));
    }
  }
  // Row sums and the coefficient symmetry.
  for (int d = 2; d <= max_d; ++d) {
    const Int row_sum = ipow(2, d - 2) * factorial(d - 1);
    for (int s = 1; s <= d; ++s) {
      Poly p = bplus_poly(d, s).coeffs;
      Rat total(0);
      for (const Rat& x : p.coeffs()) total += x;
      c.expect(total == Rat(row_sum),
               "row sum at d=" + std::to_string(d) + " s=" + std::to_string(s));
      Poly q = bplus_poly(d, d - s + 1).coeffs;
      for (int r = 0; r <= d - 1; ++r)
        c.expect(p.coeff(r) == q.coeff(d - r - 1),
                 "symmetry at d=" + std::to_string(d) + " s=" +
                     std::to_string(s) + " r=" + std::to_string(r));
    }
  }
  return c.result("eulerian-cross-validation");
}

SuiteResult suite_identity_battery(int max_d) {
  Check c;
  const Poly t = Poly::monomial(Rat(1), 1);
  const Poly one = Poly::constant(Rat(1));
  const Poly one_plus_t = one + t;
  for (int d = 2; d <= max_d; ++d) {
    for (int j = 1; j <= d - 1; ++j) {
      const std::string at = " at d=" + std::to_string(d) + " j=" +
                             std::to_string(j);
      Poly a_prev = a_poly(d - 1, j).coeffs;
      Poly a_want = (one + t.scaled(Rat(d - 2))) * a_prev +
                    t * (one - t) * a_prev.derivative();
      c.expect(a_poly(d, j).coeffs == a_want, "type-A recurrence" + at);

      Poly bp_prev = bplus_poly(d - 1, j).coeffs;
      Poly bm_prev = bminus_poly(d - 1, j).coeffs;
      Poly b_prev = b_poly(d - 1, j).coeffs;
      Poly bp_want = t.scaled(Rat(2 * (d - 2))) * bp_prev +
                     t.scaled(Rat(2)) * (one - t) * bp_prev.derivative() +
                     b_prev;
      c.expect(bplus_poly(d, j).coeffs == bp_want, "B+ recurrence" + at);
      Poly bm_want = t.scaled(Rat(2 * (d - 2))) * bm_prev +
                     t.scaled(Rat(2)) * (one - t) * bm_prev.derivative() +
                     t * b_prev;
      c.expect(bminus_poly(d, j).coeffs == bm_want, "B- recurrence" + at);

      Poly t_prev = t_poly(d - 1, j).coeffs;
      // T_d = [1 + t + 2(d-2)t^2] T_{d-1} + t(1-t^2) T'_{d-1}.
      Poly t_want = (one + t + (t * t).scaled(Rat(2 * (d - 2)))) * t_prev +
                    t * (one - t * t) * t_prev.derivative();
      c.expect(t_poly(d, j).coeffs == t_want, "T recurrence" + at);
    }
    for (int j = 1; j <= d; ++j) {
      const std::string at = " at d=" + std::to_string(d) + " j=" +
                             std::to_string(j);
      Poly prod = a_poly(d, j).coeffs;
      for (int i = 0; i < d - 1; ++i) prod = prod * one_plus_t;
      c.expect(prod == t_poly(d, j).coeffs,
               "(1+t)^{d-1} A = T identity" + at);
      c.expect(bplus_poly(d, j, EulerianMethod::E2).coeffs ==
                   bplus_poly(d, j).coeffs,
               "E2 route" + at);
      c.expect(e_r(t * prod, 2) == bminus_poly(d, j).coeffs,
               "E2 route for B-" + at);
    }
  }
  return c.result("eulerian-identity-battery");
}

SuiteResult suite_real_rootedness(int max_d, std::uint64_t seed) {
  Check c;
  std::mt19937_64 rng(seed);
  for (int d = 2; d <= std::min(8, max_d); ++d) {
    for (int trial = 0; trial < 200 && c.ok; ++trial) {
      HVector h = random_nonneg_h(rng, d);
      Poly p = h_polynomial(h_interval(h));
      const std::string at = " at d=" + std::to_string(d) + " trial " +
                             std::to_string(trial) + ", h = " +
                             vec_str(h.values);
      c.expect(is_real_rooted(p), "real-rootedness" + at);
      c.expect(is_log_concave(p), "log-concavity" + at);
      c.expect(is_unimodal(p), "unimodality" + at);
    }
  }
  return c.result("subdivision-real-rootedness");
}

SuiteResult suite_charney_davis(int max_d, std::uint64_t seed) {
  Check c;
  std::mt19937_64 rng(seed);
  for (int d = 2; d <= std::min(8, max_d); ++d) {
    for (int trial = 0; trial < 100 && c.ok; ++trial) {
      HVector h = random_reciprocal_nonneg_h(rng, d);
      CharneyDavis status = charney_davis_check(h_interval(h));
      c.expect(status == CharneyDavis::Holds ||
                   status == CharneyDavis::HoldsTriviallyRootAtMinusOne,
               "Charney-Davis " + to_string(status) + " at d=" +
                   std::to_string(d) + ", h = " + vec_str(h.values));
    }
  }
  HVector hollow = h_interval(hv({1, 1, 1}));
  c.expect(hollow == hv({1, 10, 1}), "h-transform of (1,1,1)");
  Rat value = -h_polynomial(hollow).eval(Rat(-1));  // (-1)^{floor(2/2)}
  c.expect(value == 8, "Charney-Davis value of the subdivided boundary triangle");
  c.expect(charney_davis_check(hollow) == CharneyDavis::Holds,
           "Charney-Davis status of (1,10,1)");
  return c.result("charney-davis");
}

SuiteResult suite_spectral(int max_d) {
  Check c;
  for (int d = 1; d <= std::min(6, max_d); ++d) {
    for (char kind : {'F', 'R'}) {
      SpectrumReport rep = verify_spectrum(kind, d);
      c.expect(rep.all_verified(), std::string(1, kind) +
                                       " spectrum at d=" + std::to_string(d));
      c.expect(rep.multiplicity_of_one == 2,
               std::string(1, kind) + " eigenvalue-1 multiplicity at d=" +
                   std::to_string(d));
    }
    // Non-eigenvalues must give nonzero determinants.
    for (long mu : {3, 5, 100}) {
      IntMatrix m = f_matrix(d);
      for (int i = 0; i <= d; ++i) m.at(i, i) -= mu;
      c.expect(det_bareiss(m) != 0,
               "det(F - " + std::to_string(mu) + "I) at d=" + std::to_string(d));
    }
    if (d >= 2)
      c.expect(eigenvector_structure_check(d),
               "eigenvector structure at d=" + std::to_string(d));
  }
  return c.result("spectral-claims");
}

SuiteResult suite_reciprocity_monotonicity(int max_d, std::uint64_t seed) {
  Check c;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-9, 9);
  for (int d = 2; d <= std::min(8, max_d); ++d) {
    for (int trial = 0; trial < 50; ++trial) {
      // Reciprocity is preserved for arbitrary (also signed) palindromes.
      HVector h;
      h.values.assign(d + 1, Int(0));
      for (int i = 0; 2 * i <= d; ++i) {
        Int v(entry(rng));
        h.values[i] = v;
        h.values[d - i] = v;
      }
      c.expect(is_reciprocal(h_interval(h)),
               "reciprocity lost at d=" + std::to_string(d) + ", h = " +
                   vec_str(h.values));

      HVector hp = random_nonneg_h(rng, d);
      HVector hi = h_interval(hp);
      for (int r = 0; r <= d; ++r)
        c.expect(hi.values[r] >= hp.values[r],
                 "monotonicity failed at d=" + std::to_string(d) + " r=" +
                     std::to_string(r));
    }
  }
  // The non-negativity hypothesis is essential: (1,1,1,-3,1) loses it at r=3.
  HVector bad = hv({1, 1, 1, -3, 1});
  HVector bad_int = h_interval(bad);
  c.expect(bad_int.values[3] < bad.values[3],
           "expected monotonicity violation at r=3");
  return c.result("reciprocity-and-monotonicity");
}

SuiteResult suite_limit_roots() {
  Check c;
  auto K1 = SimplicialComplex::parse("1 2 3\n");
  auto K2 = SimplicialComplex::parse("1 2 3\n1 3 4\n");
  RootTrajectory t1 = limit_convergence_report(f_vector(K1), 12, 1e-6);
  RootTrajectory t2 = limit_convergence_report(f_vector(K2), 12, 1e-6);
  c.expect(t1.converged, "trajectory of the 2-simplex");
  c.expect(t2.converged, "trajectory of the two-triangle complex");
  double mutual =
      hausdorff_distance(t1.steps.back().roots, t2.steps.back().roots);
  c.expect(mutual < 1e-6,
           "limit root sets differ by " + std::to_string(mutual));
  return c.result("limit-root-convergence");
}

}  // namespace

SimplicialComplex random_complex(std::mt19937_64& rng, int max_vertices,
                                 int max_dim) {
  std::uniform_int_distribution<int> nv_dist(1, max_vertices);
  const int nv = nv_dist(rng);
  std::uniform_int_distribution<int> nf_dist(1, 6);
  const int nf = nf_dist(rng);
  std::uniform_int_distribution<int> size_dist(1,
                                               std::min(nv, max_dim + 1));
  std::vector<Face> facets;
  for (int i = 0; i < nf; ++i) {
    const int size = size_dist(rng);
    std::vector<int> labels(nv);
    for (int v = 0; v < nv; ++v) labels[v] = v + 1;
    std::shuffle(labels.begin(), labels.end(), rng);
    Face f(labels.begin(), labels.begin() + size);
    std::sort(f.begin(), f.end());
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

HVector random_nonneg_h(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<long> entry(0, 9);
  HVector h;
  h.values.assign(d + 1, Int(0));
  h.values[0] = 1;
  for (int i = 1; i <= d; ++i) h.values[i] = entry(rng);
  return h;
}

HVector random_reciprocal_nonneg_h(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<long> entry(0, 9);
  HVector h;
  h.values.assign(d + 1, Int(0));
  h.values[0] = 1;
  h.values[d] = 1;
  for (int i = 1; 2 * i <= d; ++i) {
    Int v(entry(rng));
    h.values[i] = v;
    h.values[d - i] = v;
  }
  return h;
}

std::vector<SuiteResult> run_selftest(const SelftestOptions& opts) {
  std::vector<SuiteResult> results;
  results.push_back(suite_2simplex());
  results.push_back(suite_nonpure_example());
  results.push_back(suite_r4());
  results.push_back(suite_bplus_d4());
  results.push_back(suite_oracle_equivalence(opts.seed));
  results.push_back(suite_eulerian_cross_validation(opts.max_d));
  results.push_back(suite_identity_battery(opts.max_d));
  results.push_back(suite_real_rootedness(opts.max_d, opts.seed + 1));
  results.push_back(suite_charney_davis(opts.max_d, opts.seed + 2));
  results.push_back(suite_spectral(opts.max_d));
  results.push_back(suite_reciprocity_monotonicity(opts.max_d, opts.seed + 3));
  results.push_back(suite_limit_roots());
  results.push_back(suite_euler_characteristic(opts.seed));
  return results;
}

}  // namespace intsub
