#include "sl2aut/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

#include "sl2aut/errors.hpp"

namespace sl2aut {

std::vector<std::pair<BigInt, int>> factorize(BigInt n) {
  if (n <= 0) throw DomainError("factorize: argument must be positive");
  std::vector<std::pair<BigInt, int>> out;
  auto strip = [&](const BigInt& d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  };
  strip(2);
  strip(3);
  // wheel over 6k +- 1
  for (BigInt d = 5; d * d <= n;) {
    strip(d);
    strip(d + 2);
    d += 6;
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f[0].second == 1;
}

int64_t euler_phi(int64_t n) {
  if (n <= 0) throw DomainError("euler_phi: argument must be positive");
  int64_t result = n;
  for (const auto& [p, e] : factorize(BigInt(n))) {
    auto pi = static_cast<int64_t>(p);
    result -= result / pi;
  }
  return result;
}

int moebius(int64_t n) {
  if (n <= 0) throw DomainError("moebius: argument must be positive");
  auto f = factorize(BigInt(n));
  for (const auto& [p, e] : f)
    if (e > 1) return 0;
  return f.size() % 2 == 0 ? 1 : -1;
}

std::vector<int64_t> divisors(int64_t n) {
  if (n <= 0) throw DomainError("divisors: argument must be positive");
  std::vector<int64_t> out{1};
  for (const auto& [p, e] : factorize(BigInt(n))) {
    auto pi = static_cast<int64_t>(p);
    size_t base = out.size();
    int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= pi;
      for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt squarefree_part(const BigInt& n) {
  if (n == 0) throw DomainError("squarefree_part: argument must be nonzero");
  BigInt sf = n < 0 ? -1 : 1;
  for (const auto& [p, e] : factorize(abs(n)))
    if (e % 2 != 0) sf *= p;
  return sf;
}

bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  BigInt r = sqrt(n);
  return r * r == n;
}

BigInt isqrt_exact(const BigInt& n) {
  BigInt r = sqrt(n);
  if (r * r != n) throw DomainError("isqrt_exact: not a perfect square");
  return r;
}

int64_t mod_pow(int64_t base, int64_t exp, int64_t m) {
  if (exp < 0) throw DomainError("mod_pow: negative exponent");
  int64_t b = base % m;
  if (b < 0) b += m;
  int64_t acc = 1 % m;
  while (exp > 0) {
    if (exp & 1) acc = acc * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return acc;
}

int64_t mod_inv(int64_t a, int64_t p) {
  int64_t r0 = p, r1 = a % p;
  if (r1 < 0) r1 += p;
  if (r1 == 0) throw DomainError("mod_inv: zero is not invertible");
  int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (r0 != 1) throw DomainError("mod_inv: argument shares a factor with the modulus");
  return t0 < 0 ? t0 + p : t0;
}

}  // namespace sl2aut
