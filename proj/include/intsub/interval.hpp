#pragma once

#include <string>
#include <utility>
#include <vector>

#include "intsub/complex.hpp"
#include "intsub/vectors.hpp"

namespace intsub {

// A pair of faces with nonempty lower end, lower subseteq upper.  These are
// the vertices of the interval subdivision.
struct Interval {
  Face lower;
  Face upper;
  bool operator==(const Interval& o) const {
    return lower == o.lower && upper == o.upper;
  }
  bool operator<(const Interval& o) const {
    return lower != o.lower ? lower < o.lower : upper < o.upper;
  }
};

// [A,B] <= [A',B']  iff  A' subseteq A subseteq B subseteq B'.
bool interval_leq(const Interval& a, const Interval& b);

// Maps fresh vertex labels 1..m back to intervals; label i corresponds to
// by_label[i-1].  Labels are assigned in lexicographic (lower, upper) order,
// so the labeling is deterministic for a given complex.
struct IntervalLabeling {
  std::vector<Interval> by_label;
  // "label<TAB>lowerFace<TAB>upperFace" lines.
  std::string sidecar() const;
};

// All intervals of K in lexicographic order.
std::vector<Interval> enumerate_intervals(const SimplicialComplex& K);

// Order complex of the interval poset: the constructive Int(K).
std::pair<SimplicialComplex, IntervalLabeling> interval_complex(
    const SimplicialComplex& K);

// Number of strict chains of length k terminating at a fixed interval [A,B]
// with |B \ A| = alpha:  sum_{i=0..k} (-1)^i C(k,i) (1+2(k-i))^alpha.
Int chain_count_Q(long k, long alpha);

// f-vector of Int(Delta) from the f-vector of Delta, closed form.
FVector f_interval(const FVector& f);

// Same contract, computed through Stirling numbers of the second kind.
FVector f_interval_stirling(const FVector& f);

}  // namespace intsub
