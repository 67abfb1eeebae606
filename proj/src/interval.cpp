#include "intsub/interval.hpp"

#include <algorithm>
#include <sstream>

namespace intsub {

bool interval_leq(const Interval& a, const Interval& b) {
  return is_subset(b.lower, a.lower) && is_subset(a.upper, b.upper);
}

namespace {

std::string face_str(const Face& f) {
  std::ostringstream out;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) out << ' ';
    out << f[i];
  }
  return out.str();
}

}  // namespace

std::string IntervalLabeling::sidecar() const {
  std::ostringstream out;
  for (size_t i = 0; i < by_label.size(); ++i)
    out << (i + 1) << '\t' << face_str(by_label[i].lower) << '\t'
        << face_str(by_label[i].upper) << '\n';
  return out.str();
}

std::vector<Interval> enumerate_intervals(const SimplicialComplex& K) {
  std::vector<Interval> out;
  for (const Face& upper : K.faces()) {
    const int n = static_cast<int>(upper.size());
    if (n == 0) continue;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      Face lower;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) lower.push_back(upper[i]);
      out.push_back({std::move(lower), upper});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<SimplicialComplex, IntervalLabeling> interval_complex(
    const SimplicialComplex& K) {
  IntervalLabeling labeling;
  labeling.by_label = enumerate_intervals(K);
  const auto& iv = labeling.by_label;
  const int m = static_cast<int>(iv.size());
  if (m == 0)
    return {SimplicialComplex::from_facets({}), std::move(labeling)};

  // Strict order and its cover (Hasse) relation; chains are enumerated by
  // depth-first extension along covers, which reaches exactly the maximal
  // chains when started at minimal intervals.
  std::vector<std::vector<char>> less(m, std::vector<char>(m, 0));
  std::vector<std::vector<int>> above(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && interval_leq(iv[i], iv[j])) {
        less[i][j] = 1;
        above[i].push_back(j);
      }

  std::vector<std::vector<int>> covers(m);
  std::vector<char> minimal(m, 1);
  for (int i = 0; i < m; ++i)
    for (int j : above[i]) {
      minimal[j] = 0;
      bool cover = true;
      for (int k : above[i])
        if (less[k][j]) {
          cover = false;
          break;
        }
      if (cover) covers[i].push_back(j);
    }

  std::vector<Face> maximal_chains;
  Face chain;  // labels are 1-based indices into iv
  auto dfs = [&](auto&& self, int v) -> void {
    chain.push_back(v + 1);
    if (covers[v].empty())
      maximal_chains.push_back(chain);
    else
      for (int w : covers[v]) self(self, w);
    chain.pop_back();
  };
  for (int i = 0; i < m; ++i)
    if (minimal[i]) dfs(dfs, i);

  return {SimplicialComplex::from_facets(std::move(maximal_chains)),
          std::move(labeling)};
}

Int chain_count_Q(long k, long alpha) {
  Int acc = 0;
  for (long i = 0; i <= k; ++i) {
    Int term = binomial(k, i) * ipow(1 + 2 * (k - i), alpha);
    if (i % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

FVector f_interval(const FVector& f) {
  const int d = f.d();
  FVector out;
  out.counts.assign(d + 1, Int(0));
  out.counts[0] = 1;
  for (int k = 0; k <= d - 1; ++k) {
    Int acc = 0;
    for (int l = 0; l <= d; ++l) {
      if (f.counts[l] == 0) continue;
      Int coeff = 0;
      for (int i = 0; i <= k; ++i) {
        Int term = binomial(k, i) *
                   (ipow(2 + 2 * k - 2 * i, l) - ipow(1 + 2 * k - 2 * i, l));
        if (i % 2 == 0)
          coeff += term;
        else
          coeff -= term;
      }
      acc += coeff * f.counts[l];
    }
    out.counts[k + 1] = acc;
  }
  return out;
}

FVector f_interval_stirling(const FVector& f) {
  const int d = f.d();
  // S(j,k) by the standard recurrence.
  std::vector<std::vector<Int>> S(d + 1, std::vector<Int>(d + 1, Int(0)));
  S[0][0] = 1;
  for (int j = 1; j <= d; ++j)
    for (int k = 1; k <= j; ++k)
      S[j][k] = Int(k) * S[j - 1][k] + S[j - 1][k - 1];

  FVector out;
  out.counts.assign(d + 1, Int(0));
  out.counts[0] = 1;
  for (int k = 0; k <= d - 1; ++k) {
    const Int kfact = factorial(k);
    Int acc = 0;
    for (int l = 0; l <= d; ++l) {
      if (f.counts[l] == 0) continue;
      Int coeff = 0;
      for (int j = 0; j <= l; ++j)
        coeff += binomial(l, j) * kfact * S[j][k] * (ipow(2, l) - ipow(2, j));
      acc += coeff * f.counts[l];
    }
    out.counts[k + 1] = acc;
  }
  return out;
}

}  // namespace intsub
