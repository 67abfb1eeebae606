#include "intsub/analysis.hpp"

#include <random>

namespace intsub {

Poly square_free_part(const Poly& p) {
  if (p.is_zero()) throw ArithmeticError("square_free_part of zero");
  if (p.degree() == 0) return Poly::constant(Rat(1));
  Poly g = Poly::gcd(p, p.derivative());
  return Poly::divmod(p, g).first.primitive_part();
}

namespace {

int sign(const Rat& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

// Sign at +infinity is the sign of the leading coefficient; at -infinity it
// flips with odd degree.
long variations_at_infinity(const std::vector<Poly>& chain, int dir) {
  long v = 0;
  int prev = 0;
  for (const Poly& p : chain) {
    if (p.is_zero()) continue;
    int s = sign(p.leading());
    if (dir < 0 && p.degree() % 2 == 1) s = -s;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

long count_real_roots(const Poly& p) {
  if (p.is_zero()) throw ArithmeticError("count_real_roots of zero");
  if (p.degree() == 0) return 0;
  std::vector<Poly> chain{p, p.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    Poly r = -Poly::divmod(chain[chain.size() - 2], chain.back()).second;
    // Scaling by a positive rational keeps coefficient growth in check and
    // does not affect sign variations.
    chain.push_back(r.is_zero() ? r : r.primitive_part().scaled(
                                          r.leading() > 0 ? Rat(1) : Rat(-1)));
  }
  if (chain.back().is_zero()) chain.pop_back();
  return variations_at_infinity(chain, -1) - variations_at_infinity(chain, +1);
}

bool is_real_rooted(const Poly& p) {
  if (p.is_zero()) throw ArithmeticError("is_real_rooted of zero");
  Poly q = p;
  // Roots at the origin are real; strip them.
  while (!q.is_zero() && q.coeff(0) == 0) q = q.divided_by_t();
  while (q.degree() > 0) {
    Poly s = square_free_part(q);
    if (count_real_roots(s) != s.degree()) return false;
    q = Poly::gcd(q, q.derivative());
  }
  return true;
}

bool is_log_concave(const Poly& p) {
  const int d = p.degree();
  for (int i = 1; i <= d - 1; ++i)
    if (p.coeff(i) * p.coeff(i) < p.coeff(i - 1) * p.coeff(i + 1)) return false;
  return true;
}

bool is_unimodal(const Poly& p) {
  const int d = p.degree();
  int i = 0;
  while (i < d && p.coeff(i) <= p.coeff(i + 1)) ++i;
  while (i < d && p.coeff(i) >= p.coeff(i + 1)) ++i;
  return i == d;
}

std::string to_string(CharneyDavis s) {
  switch (s) {
    case CharneyDavis::Holds:
      return "holds";
    case CharneyDavis::HoldsTriviallyRootAtMinusOne:
      return "holds_trivially_root_at_minus_one";
    case CharneyDavis::Fails:
      return "fails";
    case CharneyDavis::NotApplicable:
      return "not_applicable";
  }
  return "unknown";
}

CharneyDavis charney_davis_check(const HVector& h) {
  for (const Int& v : h.values)
    if (v < 0) return CharneyDavis::NotApplicable;
  if (!is_reciprocal(h)) return CharneyDavis::NotApplicable;
  const int d = h.d();
  Rat value = h_polynomial(h).eval(Rat(-1));
  if (value == 0) return CharneyDavis::HoldsTriviallyRootAtMinusOne;
  if ((d / 2) % 2 == 1) value = -value;
  return value > 0 ? CharneyDavis::Holds : CharneyDavis::Fails;
}

CompatibilityReport compatibility_probe(const std::vector<Poly>& polys,
                                        int trials, std::uint64_t seed) {
  CompatibilityReport report;
  if (polys.empty()) throw MalformedInput("compatibility_probe: empty input");
  for (const Poly& p : polys)
    if (p.is_zero())
      throw MalformedInput("compatibility_probe: zero polynomial in input");

  const size_t n = polys.size();
  auto check = [&](const Poly& combo, const std::string& what) {
    if (combo.is_zero() || is_real_rooted(combo)) return true;
    report.violation_found = true;
    report.counterexample = combo;
    report.description = what;
    return false;
  };

  // Forced coefficient vectors: units and all-ones.
  for (size_t i = 0; i < n; ++i)
    if (!check(polys[i], "unit vector e_" + std::to_string(i))) return report;
  {
    Poly sum;
    for (const Poly& p : polys) sum = sum + p;
    if (!check(sum, "all-ones combination")) return report;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(0, 9);
  for (int trial = 0; trial < trials; ++trial) {
    Poly combo;
    for (const Poly& p : polys) combo = combo + p.scaled(Rat(coeff(rng)));
    if (!check(combo, "random combination, trial " + std::to_string(trial)))
      return report;
  }

  // Pairwise t*f_i + c*f_j probes, for i < j only: the shifted condition is
  // directional and depends on the ordering of the family.
  const Poly t = Poly::monomial(Rat(1), 1);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      for (int c : {1, 2, 5}) {
        Poly combo = t * polys[i] + polys[j].scaled(Rat(c));
        if (!check(combo, "t*f_" + std::to_string(i) + " + " +
                              std::to_string(c) + "*f_" + std::to_string(j)))
          return report;
      }
    }

  report.description = "no violation found";
  return report;
}

}  // namespace intsub
