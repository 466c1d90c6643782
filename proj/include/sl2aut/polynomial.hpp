#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sl2aut/numtheory.hpp"

namespace sl2aut {

/// Dense univariate polynomial over Z, coefficients stored lowest degree
/// first with no trailing zeros. The zero polynomial has an empty
/// coefficient vector and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial x_pow_minus_one(int64_t n);  // x^n - 1
  static IntPolynomial constant(BigInt c);

  int64_t degree() const { return static_cast<int64_t>(c_.size()) - 1; }
  const BigInt& coeff(int64_t i) const;  // 0 outside stored range
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& leading() const;
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  IntPolynomial operator+(const IntPolynomial&) const;
  IntPolynomial operator-(const IntPolynomial&) const;
  IntPolynomial operator*(const IntPolynomial&) const;
  bool operator==(const IntPolynomial&) const = default;

  /// Exact division; throws InvariantViolation if the remainder is nonzero
  /// or a non-integer quotient coefficient would be needed.
  IntPolynomial divide_exact(const IntPolynomial& divisor) const;

  BigRat eval(const BigRat& x) const;

  /// Human form, highest degree first: "x^2 - 3", "2", "0".
  std::string str(const std::string& var = "x") const;

 private:
  std::vector<BigInt> c_;
  void trim();
};

/// Cyclotomic polynomial Phi_l, computed as
/// prod_{d | l} (x^d - 1)^{moebius(l/d)} via one exact division.
IntPolynomial cyclotomic_poly(int64_t l);

/// Minimal polynomial Psi_l of 2cos(2*pi/l) over Q, for l >= 3:
/// the unique monic integer polynomial with Phi_l(z) = z^{phi(l)/2} Psi_l(z + 1/z).
/// Degree phi(l)/2.
IntPolynomial real_cyclotomic_minpoly(int64_t l);

}  // namespace sl2aut
