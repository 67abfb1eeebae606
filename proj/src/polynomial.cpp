#include "intsub/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace intsub {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::vector<Int> coeffs) {
  c_.reserve(coeffs.size());
  for (const Int& v : coeffs) c_.emplace_back(v);
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  for (Rat& x : c_) x.canonicalize();
}

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, int k) {
  std::vector<Rat> v(k + 1, Rat(0));
  v[k] = c;
  return Poly(std::move(v));
}

Rat Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
  return c_[k];
}

Rat Poly::leading() const { return c_.empty() ? Rat(0) : c_.back(); }

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<Rat> r(c_);
  for (Rat& x : r) x = -x;
  return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

Poly Poly::scaled(const Rat& s) const {
  std::vector<Rat> r(c_);
  for (Rat& x : r) x *= s;
  return Poly(std::move(r));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(i);
  return Poly(std::move(r));
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::reversed(int n) const {
  if (n < degree())
    throw ArithmeticError("reversal degree below polynomial degree");
  std::vector<Rat> r(n + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[n - i] = c_[i];
  return Poly(std::move(r));
}

Poly Poly::compose_t_squared() const {
  if (is_zero()) return Poly();
  std::vector<Rat> r(2 * c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[2 * i] = c_[i];
  return Poly(std::move(r));
}

Poly Poly::divided_by_t() const {
  if (is_zero()) return Poly();
  if (c_[0] != 0)
    throw ArithmeticError("division by t with nonzero constant term");
  return Poly(std::vector<Rat>(c_.begin() + 1, c_.end()));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  std::vector<Rat> rem(a.c_);
  const int db = b.degree();
  std::vector<Rat> quot(std::max<int>(a.degree() - db + 1, 0), Rat(0));
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    if (rem[i] == 0) continue;
    Rat q = rem[i] / b.c_[db];
    quot[i - db] = q;
    for (int k = 0; k <= db; ++k) rem[i - db + k] -= q * b.c_[k];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::primitive_part() const {
  if (is_zero()) return Poly();
  // Clear denominators, divide by integer content, force positive leading.
  Int lcm_den(1);
  for (const Rat& x : c_)
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
            x.get_den().get_mpz_t());
  std::vector<Int> z;
  z.reserve(c_.size());
  for (const Rat& x : c_) {
    Rat v = x * Rat(lcm_den);
    v.canonicalize();
    z.push_back(v.get_num());
  }
  Int g(0);
  for (const Int& v : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (z.back() < 0) g = -g;
  std::vector<Rat> r;
  r.reserve(z.size());
  for (const Int& v : z) r.emplace_back(Rat(v) / Rat(g));
  return Poly(std::move(r));
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.primitive_part();
}

bool Poly::integer_coefficients() const {
  for (const Rat& x : c_)
    if (x.get_den() != 1) return false;
  return true;
}

std::string Poly::pretty() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rat v = c_[i];
    if (first) {
      if (v < 0) {
        out << "-";
        v = -v;
      }
    } else {
      out << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    const bool unit = (v == 1) && i > 0;
    if (!unit) out << v.get_str();
    if (i > 0) {
      if (!unit) out << "*";
      out << "t";
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

}  // namespace intsub
