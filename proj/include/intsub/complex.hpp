#pragma once

#include <set>
#include <string>
#include <vector>

#include "intsub/types.hpp"

namespace intsub {

// A face is a strictly increasing sequence of positive vertex labels.
// The empty vector is the empty face (dimension -1).
using Face = std::vector<int>;

bool is_subset(const Face& a, const Face& b);
Face face_union(const Face& a, const Face& b);

// Finite abstract simplicial complex, stored by its facets together with
// the materialized downward closure.  Immutable after construction.
class SimplicialComplex {
 public:
  // Builds the complex generated by `generators`; non-maximal generators
  // are absorbed silently.
  static SimplicialComplex from_facets(std::vector<Face> generators);

  // Facet file format: one facet per line, whitespace-separated positive
  // integers; '#' starts a comment; blank lines ignored.
  static SimplicialComplex parse(const std::string& text);

  std::string serialize() const;

  const std::vector<Face>& facets() const { return facets_; }
  const std::set<Face>& faces() const { return faces_; }

  // d - 1, where d is the largest facet cardinality.  The complex {emptyset}
  // has dim() == -1.
  int dim() const;

  bool contains(const Face& f) const { return faces_.count(f) != 0; }

  bool operator==(const SimplicialComplex& o) const {
    return faces_ == o.faces_;
  }

 private:
  SimplicialComplex() = default;
  std::vector<Face> facets_;  // sorted lexicographically
  std::set<Face> faces_;      // includes the empty face
};

}  // namespace intsub
