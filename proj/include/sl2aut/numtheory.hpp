#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sl2aut {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Trial-division factorization, ascending primes. factorize(1) == {}.
/// Inputs are desk scale (class parameters, traces, group orders); nothing
/// here is meant for cryptographic sizes.
std::vector<std::pair<BigInt, int>> factorize(BigInt n);

bool is_prime(const BigInt& n);

int64_t euler_phi(int64_t n);

/// Moebius function.
int moebius(int64_t n);

/// All positive divisors, ascending.
std::vector<int64_t> divisors(int64_t n);

/// Signed squarefree part: n = squarefree_part(n) * s^2 with s > 0.
/// squarefree_part(-8) == -2, squarefree_part(12) == 3.
BigInt squarefree_part(const BigInt& n);

bool is_perfect_square(const BigInt& n);

/// Exact integer square root; n must be a perfect square.
BigInt isqrt_exact(const BigInt& n);

int64_t mod_pow(int64_t base, int64_t exp, int64_t m);

/// Inverse of a mod p, p prime, a not divisible by p.
int64_t mod_inv(int64_t a, int64_t p);

}  // namespace sl2aut
