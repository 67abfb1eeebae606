#include "intsub/matrices.hpp"

#include <sstream>

#include "intsub/signed_perm.hpp"

namespace intsub {

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  std::vector<Int> out(size(), Int(0));
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) out[i] += a_[i][j] * v[j];
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix r(d_);
  for (int i = 0; i < size(); ++i)
    for (int k = 0; k < size(); ++k) {
      if (a_[i][k] == 0) continue;
      for (int j = 0; j < size(); ++j) r.a_[i][j] += a_[i][k] * o.a_[k][j];
    }
  return r;
}

IntMatrix IntMatrix::identity(int d) {
  IntMatrix r(d);
  for (int i = 0; i <= d; ++i) r.at(i, i) = 1;
  return r;
}

std::string IntMatrix::to_tsv() const {
  std::ostringstream out;
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      if (j) out << '\t';
      out << a_[i][j].get_str();
    }
    out << '\n';
  }
  return out.str();
}

std::string IntMatrix::to_json() const {
  std::ostringstream out;
  out << "{\"dim\": " << d_ << ", \"rows\": [";
  for (int i = 0; i < size(); ++i) {
    if (i) out << ", ";
    out << "[";
    for (int j = 0; j < size(); ++j) {
      if (j) out << ", ";
      out << a_[i][j].get_str();
    }
    out << "]";
  }
  out << "]}";
  return out.str();
}

Int f_matrix_entry(long k, long l) {
  if (k == 0) return l == 0 ? 1 : 0;
  Int acc = 0;
  for (long j = 0; j <= k - 1; ++j) {
    Int term =
        binomial(k - 1, j) * (ipow(2 * k - 2 * j, l) - ipow(2 * k - 2 * j - 1, l));
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

IntMatrix f_matrix(int d) {
  IntMatrix m(d);
  for (int k = 0; k <= d; ++k)
    for (int l = 0; l <= d; ++l) m.at(k, l) = f_matrix_entry(k, l);
  return m;
}

IntMatrix h_matrix(int d) {
  IntMatrix m(d);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= i; ++j) {
      Int e = binomial(d - j, i - j);
      m.at(i, j) = ((i + j) % 2 == 0) ? e : -e;
    }
  return m;
}

IntMatrix h_matrix_inverse(int d) {
  IntMatrix m(d);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= i; ++j) m.at(i, j) = binomial(d - j, i - j);
  return m;
}

IntMatrix r_matrix(int d, RMethod method) {
  if (method == RMethod::Algebraic)
    return h_matrix(d) * f_matrix(d) * h_matrix_inverse(d);
  IntMatrix m(d);
  for (int s = 0; s <= d; ++s) {
    Poly col = bplus_poly(d + 1, s + 1).coeffs;
    for (int r = 0; r <= d; ++r) m.at(r, s) = col.coeff(r).get_num();
  }
  return m;
}

HVector h_interval(const HVector& h) {
  return {r_matrix(h.d()).apply(h.values)};
}

}  // namespace intsub
