#pragma once

#include <string>
#include <vector>

#include "intsub/types.hpp"
#include "intsub/vectors.hpp"

namespace intsub {

// Dense (d+1) x (d+1) exact integer matrix; vectors are columns and
// matrices act on the left.
class IntMatrix {
 public:
  explicit IntMatrix(int d)
      : d_(d), a_(d + 1, std::vector<Int>(d + 1, Int(0))) {}

  int dim() const { return d_; }
  int size() const { return d_ + 1; }
  Int& at(int i, int j) { return a_[i][j]; }
  const Int& at(int i, int j) const { return a_[i][j]; }

  std::vector<Int> apply(const std::vector<Int>& v) const;
  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const { return a_ == o.a_; }

  static IntMatrix identity(int d);

  std::string to_tsv() const;
  std::string to_json() const;

 private:
  int d_;
  std::vector<std::vector<Int>> a_;
};

// Entry b_{k,l} of the f-vector transformation matrix.
Int f_matrix_entry(long k, long l);

IntMatrix f_matrix(int d);
IntMatrix h_matrix(int d);
IntMatrix h_matrix_inverse(int d);

enum class RMethod { Eulerian, Algebraic };

// h-vector transformation matrix; entry (r,s) = B+(d+1, s+1, r).
IntMatrix r_matrix(int d, RMethod method = RMethod::Eulerian);

// R_d * h
HVector h_interval(const HVector& h);

}  // namespace intsub
