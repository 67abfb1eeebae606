#include "intsub/signed_perm.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "intsub/types.hpp"

namespace intsub {

int descent_count_B(const SignedPermutation& sigma) {
  int des = 0;
  int prev = 0;  // sigma_0 = 0
  for (int v : sigma.window) {
    if (prev > v) ++des;
    prev = v;
  }
  return des;
}

int descent_count_A(const std::vector<int>& window) {
  int des = 0;
  for (size_t i = 1; i < window.size(); ++i)
    if (window[i - 1] > window[i]) ++des;
  return des;
}

void for_each_signed_perm(
    int d, std::optional<int> first, std::optional<int> last_sign,
    const std::function<void(const SignedPermutation&)>& fn) {
  SignedPermutation sigma;
  sigma.window.reserve(d);
  std::vector<char> used(d + 1, 0);
  // Candidate values in natural order: -d, ..., -1, 1, ..., d.
  std::vector<int> values;
  for (int v = -d; v <= d; ++v)
    if (v != 0) values.push_back(v);

  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == d) {
      fn(sigma);
      return;
    }
    for (int v : values) {
      const int a = std::abs(v);
      if (used[a]) continue;
      if (pos == 0 && first && v != *first) continue;
      if (pos == d - 1 && last_sign && v * *last_sign < 0) continue;
      used[a] = 1;
      sigma.window.push_back(v);
      self(self, pos + 1);
      sigma.window.pop_back();
      used[a] = 0;
    }
  };
  rec(rec, 0);
}

std::vector<SignedPermutation> enumerate_B(int d, std::optional<int> first,
                                           std::optional<int> last_sign) {
  std::vector<SignedPermutation> out;
  for_each_signed_perm(d, first, last_sign,
                       [&](const SignedPermutation& s) { out.push_back(s); });
  return out;
}

namespace {

Poly bplus_enumerate(int d, int j) {
  std::vector<Int> counts(d + 1, Int(0));
  for_each_signed_perm(d, j, +1, [&](const SignedPermutation& s) {
    counts[descent_count_B(s)] += 1;
  });
  return Poly(counts);
}

// Memoized insertion recurrence for B+_{d,j}, j in {-d..-1, 1..d}.
class BPlusTable {
 public:
  Poly get(int d, int j) {
    {
      std::shared_lock lock(mu_);
      if (auto it = memo_.find({d, j}); it != memo_.end()) return it->second;
    }
    Poly p = compute(d, j);
    std::unique_lock lock(mu_);
    return memo_.emplace(std::pair{d, j}, std::move(p)).first->second;
  }

 private:
  Poly compute(int d, int j) {
    if (d == 1) return j == 1 ? Poly::constant(Rat(1)) : Poly();
    const int s = std::abs(j);
    Poly acc;
    if (j > 0) {
      // B+_{d,s} = t * sum_{j<s} B+_{d-1,j} + sum_{j>=s} B+_{d-1,j}
      //            + sum_j B+_{d-1,-j}
      Poly low, high, neg;
      for (int i = 1; i <= s - 1; ++i) low = low + get(d - 1, i);
      for (int i = s; i <= d - 1; ++i) high = high + get(d - 1, i);
      for (int i = 1; i <= d - 1; ++i) neg = neg + get(d - 1, -i);
      acc = Poly::monomial(Rat(1), 1) * low + high + neg;
    } else {
      // B+_{d,-s} = t * [sum_j B+_{d-1,j} + sum_{j>=s} B+_{d-1,-j}]
      //             + sum_{j<s} B+_{d-1,-j}
      Poly pos, negh, negl;
      for (int i = 1; i <= d - 1; ++i) pos = pos + get(d - 1, i);
      for (int i = s; i <= d - 1; ++i) negh = negh + get(d - 1, -i);
      for (int i = 1; i <= s - 1; ++i) negl = negl + get(d - 1, -i);
      acc = Poly::monomial(Rat(1), 1) * (pos + negh) + negl;
    }
    return acc;
  }

  std::shared_mutex mu_;
  std::map<std::pair<int, int>, Poly> memo_;
};

BPlusTable& bplus_table() {
  static BPlusTable t;
  return t;
}

Poly a_enumerate(int d, int j) {
  std::vector<int> rest;
  for (int v = 1; v <= d; ++v)
    if (v != j) rest.push_back(v);
  std::vector<Int> counts(d, Int(0));
  std::vector<int> window(d);
  window[0] = j;
  do {
    std::copy(rest.begin(), rest.end(), window.begin() + 1);
    counts[descent_count_A(window)] += 1;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return Poly(counts);
}

Poly a_recurrence(int d, int j) {
  if (d == j) return a_enumerate(d, j);  // base of the licensed range
  Poly prev = a_recurrence(d - 1, j);
  return prev.scaled(Rat(1)) + prev.scaled(Rat(d - 2)) * Poly::monomial(Rat(1), 1) +
         Poly::monomial(Rat(1), 1) * (Poly::constant(Rat(1)) - Poly::monomial(Rat(1), 1)) *
             prev.derivative();
}

}  // namespace

EulerianPolynomial bplus_poly(int d, int j, EulerianMethod method) {
  if (d < 1 || j == 0 || std::abs(j) > d)
    throw UnsupportedMethod("bplus_poly: need 1 <= |j| <= d");
  Poly p;
  switch (method) {
    case EulerianMethod::Enumerate:
      p = bplus_enumerate(d, j);
      break;
    case EulerianMethod::Recurrence:
      p = bplus_table().get(d, j);
      break;
    case EulerianMethod::E2: {
      if (j < 0)
        throw UnsupportedMethod("bplus_poly: E2 path requires j >= 1");
      Poly a = a_poly(d, j).coeffs;
      Poly one_plus_t(std::vector<Rat>{Rat(1), Rat(1)});
      Poly prod = a;
      for (int i = 0; i < d - 1; ++i) prod = prod * one_plus_t;
      p = e_r(prod, 2);
      break;
    }
  }
  return {EulerianKind::BPlus, d, j, std::move(p)};
}

EulerianPolynomial bminus_poly(int d, int j) {
  if (d < 1 || j == 0 || std::abs(j) > d)
    throw UnsupportedMethod("bminus_poly: need 1 <= |j| <= d");
  Poly p = bplus_poly(d, -j).coeffs.reversed(d);
  return {EulerianKind::BMinus, d, j, std::move(p)};
}

EulerianPolynomial b_poly(int d, int j) {
  Poly p = bplus_poly(d, j).coeffs + bminus_poly(d, j).coeffs;
  return {EulerianKind::B, d, j, std::move(p)};
}

EulerianPolynomial a_poly(int d, int j, EulerianMethod method) {
  if (d < 1 || j < 1 || j > d)
    throw UnsupportedMethod("a_poly: need 1 <= j <= d");
  Poly p;
  switch (method) {
    case EulerianMethod::Enumerate:
      p = a_enumerate(d, j);
      break;
    case EulerianMethod::Recurrence:
      if (j == d)
        throw UnsupportedMethod("a_poly: recurrence not licensed at j = d");
      p = a_recurrence(d, j);
      break;
    default:
      throw UnsupportedMethod("a_poly: unsupported method");
  }
  return {EulerianKind::A, d, j, std::move(p)};
}

EulerianPolynomial t_poly(int d, int j) {
  if (d < 1 || j < 1 || j > d)
    throw UnsupportedMethod("t_poly: need 1 <= j <= d");
  Poly plus = bplus_poly(d, j).coeffs.compose_t_squared();
  Poly minus = bminus_poly(d, j).coeffs.compose_t_squared().divided_by_t();
  return {EulerianKind::T, d, j, plus + minus};
}

Poly e_r(const Poly& p, int r) {
  if (r < 1) throw UnsupportedMethod("e_r: r must be positive");
  std::vector<Rat> out;
  for (int k = 0; r * k <= p.degree(); ++k) out.push_back(p.coeff(r * k));
  return Poly(std::move(out));
}

}  // namespace intsub
