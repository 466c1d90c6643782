#include "sl2aut/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "sl2aut/errors.hpp"

namespace sl2aut {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::x_pow_minus_one(int64_t n) {
  std::vector<BigInt> c(static_cast<size_t>(n) + 1, 0);
  c[0] = -1;
  c.back() = 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::constant(BigInt c) { return IntPolynomial({std::move(c)}); }

const BigInt& IntPolynomial::coeff(int64_t i) const {
  static const BigInt kZero = 0;
  if (i < 0 || i >= static_cast<int64_t>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

const BigInt& IntPolynomial::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return c_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<BigInt> c(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<BigInt> c(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> c(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<BigInt> rem = c_;
  int64_t dd = divisor.degree();
  int64_t qd = degree() - dd;
  if (qd < 0) {
    if (is_zero()) return {};
    throw InvariantViolation("divide_exact: divisor degree exceeds dividend degree");
  }
  std::vector<BigInt> q(static_cast<size_t>(qd) + 1, 0);
  for (int64_t i = qd; i >= 0; --i) {
    BigInt& top = rem[static_cast<size_t>(i + dd)];
    if (top % divisor.leading() != 0)
      throw InvariantViolation("divide_exact: non-integral quotient");
    BigInt f = top / divisor.leading();
    q[static_cast<size_t>(i)] = f;
    if (f != 0)
      for (int64_t j = 0; j <= dd; ++j) rem[static_cast<size_t>(i + j)] -= f * divisor.coeff(j);
  }
  for (const BigInt& r : rem)
    if (r != 0) throw InvariantViolation("divide_exact: nonzero remainder");
  return IntPolynomial(std::move(q));
}

BigRat IntPolynomial::eval(const BigRat& x) const {
  BigRat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigRat(*it);
  return acc;
}

std::string IntPolynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int64_t i = degree(); i >= 0; --i) {
    const BigInt& a = coeff(i);
    if (a == 0) continue;
    BigInt mag = abs(a);
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    bool unit = mag == 1;
    if (i == 0) {
      os << mag;
    } else {
      if (!unit) os << mag << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

IntPolynomial cyclotomic_poly(int64_t l) {
  if (l < 1) throw DomainError("cyclotomic_poly: l must be positive");
  IntPolynomial num = IntPolynomial::constant(1);
  IntPolynomial den = IntPolynomial::constant(1);
  for (int64_t d : divisors(l)) {
    int mu = moebius(l / d);
    if (mu == 1) num = num * IntPolynomial::x_pow_minus_one(d);
    if (mu == -1) den = den * IntPolynomial::x_pow_minus_one(d);
  }
  IntPolynomial phi = num.divide_exact(den);
  if (phi.degree() != euler_phi(l) || !phi.is_monic())
    throw InvariantViolation("cyclotomic_poly: bad degree or leading coefficient");
  return phi;
}

IntPolynomial real_cyclotomic_minpoly(int64_t l) {
  if (l < 3) throw DomainError("real_cyclotomic_minpoly: requires l >= 3");
  IntPolynomial phi = cyclotomic_poly(l);
  int64_t n = phi.degree();
  int64_t h = n / 2;
  // Phi_l is palindromic for l >= 3, so Phi_l(z)/z^h is an integer
  // combination of z^j + z^-j; substitute the Chebyshev-like basis
  // C_0 = 2, C_1 = y, C_j = y*C_{j-1} - C_{j-2} (the trace-power recurrence).
  for (int64_t i = 0; i <= n; ++i)
    if (phi.coeff(i) != phi.coeff(n - i))
      throw InvariantViolation("real_cyclotomic_minpoly: Phi_l not palindromic");
  IntPolynomial prev = IntPolynomial::constant(2);
  IntPolynomial cur({0, 1});
  const IntPolynomial y({0, 1});
  IntPolynomial acc = IntPolynomial::constant(phi.coeff(h));
  for (int64_t j = 1; j <= h; ++j) {
    acc = acc + IntPolynomial::constant(phi.coeff(h - j)) * cur;
    IntPolynomial next = y * cur - prev;
    prev = cur;
    cur = next;
  }
  if (acc.degree() != h || !acc.is_monic())
    throw InvariantViolation("real_cyclotomic_minpoly: bad degree or leading coefficient");
  return acc;
}

}  // namespace sl2aut
