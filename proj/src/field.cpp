#include "sl2aut/field.hpp"

#include <charconv>

#include "sl2aut/errors.hpp"

namespace sl2aut {

FieldDescriptor FieldDescriptor::rationals() {
  return FieldDescriptor{FieldKind::Rationals, 0, 1};
}

FieldDescriptor FieldDescriptor::reals() {
  return FieldDescriptor{FieldKind::RealsSymbolic, 0, 1};
}

FieldDescriptor FieldDescriptor::alg_closed() {
  return FieldDescriptor{FieldKind::AlgClosedSymbolic, 0, 1};
}

FieldDescriptor FieldDescriptor::finite(std::int64_t p, std::int64_t r) {
  if (p < 3 || p % 2 == 0 || !is_prime(BigInt(p)))
    throw ParseError("finite field: p must be an odd prime, got " +
                     std::to_string(p));
  if (r < 1) throw ParseError("finite field: r must be >= 1");
  return FieldDescriptor{FieldKind::FiniteField, p, r};
}

BigInt FieldDescriptor::q() const {
  if (kind != FieldKind::FiniteField)
    throw DomainError("q(): not a finite field");
  BigInt out = 1;
  for (std::int64_t i = 0; i < r; ++i) out *= p;
  return out;
}

std::string FieldDescriptor::str() const {
  switch (kind) {
    case FieldKind::Rationals:
      return "Q";
    case FieldKind::RealsSymbolic:
      return "R";
    case FieldKind::AlgClosedSymbolic:
      return "Qbar";
    case FieldKind::FiniteField:
      if (r == 1) return "Fq:" + std::to_string(p);
      return "Fq:" + std::to_string(p) + "^" + std::to_string(r);
  }
  throw InvariantViolation("FieldDescriptor: bad kind");
}

namespace {

std::int64_t parse_i64(std::string_view s, const char* what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(std::string("bad ") + what + ": '" + std::string(s) +
                     "'");
  return v;
}

}  // namespace

FieldDescriptor field_parse(const std::string& s) {
  if (s == "Q") return FieldDescriptor::rationals();
  if (s == "R") return FieldDescriptor::reals();
  if (s == "Qbar") return FieldDescriptor::alg_closed();
  if (s.rfind("Fq:", 0) == 0) {
    std::string_view rest(s);
    rest.remove_prefix(3);
    auto caret = rest.find('^');
    if (caret == std::string_view::npos)
      return FieldDescriptor::finite(parse_i64(rest, "prime"), 1);
    std::int64_t p = parse_i64(rest.substr(0, caret), "prime");
    std::int64_t r = parse_i64(rest.substr(caret + 1), "extension degree");
    return FieldDescriptor::finite(p, r);
  }
  throw ParseError("unknown field spec '" + s +
                   "' (expected Q, R, Qbar, Fq:<p>, or Fq:<p>^<r>)");
}

}  // namespace sl2aut

// --- field contexts ------------------------------------------------------

#include <limits>
#include <numeric>

#include "sl2aut/contexts.hpp"

namespace sl2aut {

namespace {

std::int64_t to_i64(const BigInt& n) { return static_cast<std::int64_t>(n); }

/// Multiplicative order of x in a group of order n, given n's factorization.
template <class Elem>
std::int64_t order_in_group(const Elem& x, const Elem& one, std::int64_t n,
                            const std::vector<std::pair<BigInt, int>>& nf) {
  if (!(x.pow(n) == one))
    throw InvariantViolation("mult_order: x^|G| != 1");
  std::int64_t ord = n;
  for (const auto& [bf, e] : nf) {
    std::int64_t f = to_i64(bf);
    for (int i = 0; i < e; ++i) {
      if (ord % f == 0 && x.pow(ord / f) == one)
        ord /= f;
      else
        break;
    }
  }
  return ord;
}

/// Least (by `less`) element of multiplicative order exactly l: take any
/// generator g, then minimize over the primitive powers of g^(n/l).
template <class Elem, class Less>
Elem least_root_of_unity(const Elem& g, const Elem& /*one*/, std::int64_t n,
                         std::int64_t l, Less less) {
  Elem zeta = g.pow(n / l);
  Elem best = zeta;
  Elem cur = zeta;
  for (std::int64_t j = 2; j <= l; ++j) {
    cur = cur * zeta;
    if (std::gcd(j, l) == 1 && less(cur, best)) best = cur;
  }
  return best;
}

}  // namespace

// RationalCtx

bool RationalCtx::is_square(const Elem& x) const {
  if (x == 0) return true;
  if (x < 0) return false;
  return is_perfect_square(numerator(x)) && is_perfect_square(denominator(x));
}

RationalCtx::Elem RationalCtx::sqrt_canonical(const Elem& x) const {
  if (!is_square(x))
    throw DomainError("sqrt_canonical: " + elem_str(x) +
                      " is not a square in Q");
  if (x == 0) return BigRat(0);
  return BigRat(isqrt_exact(numerator(x)), isqrt_exact(denominator(x)));
}

RationalCtx::Elem RationalCtx::square_class(const Elem& x) const {
  if (x == 0) throw DomainError("square_class: zero input");
  // n/d and n*d differ by the square d^2
  return BigRat(squarefree_part(numerator(x) * denominator(x)));
}

RationalCtx::Elem RationalCtx::root_of_unity(std::int64_t l) const {
  if (l == 1) return BigRat(1);
  if (l == 2) return BigRat(-1);
  throw NoSuchRootError("Q has no primitive root of unity of order " +
                        std::to_string(l));
}

std::int64_t RationalCtx::mult_order(const Elem& x) const {
  if (x == 1) return 1;
  if (x == -1) return 2;
  if (x == 0) throw DomainError("mult_order: zero input");
  throw DomainError("mult_order: " + elem_str(x) +
                    " has infinite multiplicative order");
}

// PrimeFieldCtx

PrimeFieldCtx::PrimeFieldCtx(std::int64_t p_) : p(p_), ns(0) {
  if (p < 3 || p % 2 == 0 || !is_prime(BigInt(p)))
    throw DomainError("PrimeFieldCtx: p must be an odd prime, got " +
                      std::to_string(p));
  if (p > 2147483647)
    throw DomainError("PrimeFieldCtx: p too large for exact int64 products");
  for (std::int64_t c = 2; c < p; ++c) {
    if (mod_pow(c, (p - 1) / 2, p) != 1) {
      ns = c;
      break;
    }
  }
}

PrimeFieldCtx::Elem PrimeFieldCtx::from_rational(const BigRat& q) const {
  BigInt den = denominator(q) % p;
  if (den == 0)
    throw DomainError("F_" + std::to_string(p) +
                      ": denominator divisible by p");
  Fp n(to_i64(numerator(q) % p), p);
  Fp d(to_i64(den), p);
  return n / d;
}

bool PrimeFieldCtx::is_square(const Elem& x) const {
  if (x.is_zero()) return true;
  return mod_pow(x.value(), (p - 1) / 2, p) == 1;
}

PrimeFieldCtx::Elem PrimeFieldCtx::sqrt_canonical(const Elem& x) const {
  if (x.is_zero()) return zero();
  for (std::int64_t s = 1; s <= (p - 1) / 2; ++s)
    if (s * s % p == x.value()) return Fp(s, p);
  throw DomainError("sqrt_canonical: " + elem_str(x) +
                    " is not a square in F_" + std::to_string(p));
}

PrimeFieldCtx::Elem PrimeFieldCtx::square_class(const Elem& x) const {
  if (x.is_zero()) throw DomainError("square_class: zero input");
  return is_square(x) ? one() : nonsquare_rep();
}

std::int64_t PrimeFieldCtx::order_cap() const {
  BigInt c = 2 * BigInt(p) * (BigInt(p) * p - 1);
  BigInt lim = std::numeric_limits<std::int64_t>::max();
  return c > lim ? std::numeric_limits<std::int64_t>::max() : to_i64(c);
}

PrimeFieldCtx::Elem PrimeFieldCtx::root_of_unity(std::int64_t l) const {
  if (l < 1) throw DomainError("root_of_unity: l must be >= 1");
  std::int64_t n = p - 1;
  if (n % l != 0)
    throw NoSuchRootError("F_" + std::to_string(p) +
                          " has no primitive root of unity of order " +
                          std::to_string(l) + " (l does not divide q-1)");
  auto nf = factorize(BigInt(n));
  Fp g = zero();
  for (std::int64_t c = 1; c < p; ++c) {
    Fp cand(c, p);
    bool prim = true;
    for (const auto& [bf, e] : nf) {
      (void)e;
      if (cand.pow(n / to_i64(bf)) == one()) {
        prim = false;
        break;
      }
    }
    if (prim) {
      g = cand;
      break;
    }
  }
  return least_root_of_unity(g, one(), n, l,
                             [this](const Fp& a, const Fp& b) {
                               return less(a, b);
                             });
}

std::int64_t PrimeFieldCtx::mult_order(const Elem& x) const {
  if (x.is_zero()) throw DomainError("mult_order: zero input");
  return order_in_group(x, one(), p - 1, factorize(BigInt(p - 1)));
}

QuadFieldCtx PrimeFieldCtx::extension() const { return QuadFieldCtx(p); }

// QuadFieldCtx

QuadFieldCtx::QuadFieldCtx(std::int64_t p_) : p(p_), ns1(0) {
  PrimeFieldCtx base(p);
  ns1 = base.ns;
}

QuadFieldCtx::Elem QuadFieldCtx::from_rational(const BigRat& q) const {
  PrimeFieldCtx base(p);
  return Elem::embed(base.from_rational(q), Fp(ns1, p));
}

bool QuadFieldCtx::is_square(const Elem& x) const {
  if (x.is_zero()) return true;
  std::int64_t n = p * p - 1;
  return x.pow(n / 2) == one();
}

QuadFieldCtx::Elem QuadFieldCtx::sqrt_canonical(const Elem& x) const {
  if (x.is_zero()) return zero();
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < p; ++b) {
      Elem s = make(a, b);
      if (s * s == x) return s;
    }
  throw DomainError("sqrt_canonical: " + elem_str(x) +
                    " is not a square in F_" + std::to_string(p) + "^2");
}

QuadFieldCtx::Elem QuadFieldCtx::square_class(const Elem& x) const {
  if (x.is_zero()) throw DomainError("square_class: zero input");
  return is_square(x) ? one() : nonsquare_rep();
}

QuadFieldCtx::Elem QuadFieldCtx::ns2() const {
  if (!ns2_cache_) {
    for (std::int64_t a = 0; a < p && !ns2_cache_; ++a)
      for (std::int64_t b = 0; b < p; ++b) {
        if (a == 0 && b == 0) continue;
        Elem x = make(a, b);
        if (!is_square(x)) {
          ns2_cache_ = std::make_shared<const Elem>(x);
          break;
        }
      }
    if (!ns2_cache_)
      throw InvariantViolation("ns2: no non-square found in F_p^2");
  }
  return *ns2_cache_;
}

bool QuadFieldCtx::is_positive(const Elem& x) const {
  std::int64_t v = x.a().is_zero() ? x.b().value() : x.a().value();
  return v >= 1 && v <= (p - 1) / 2;
}

bool QuadFieldCtx::less(const Elem& x, const Elem& y) const {
  if (x.a().value() != y.a().value()) return x.a().value() < y.a().value();
  return x.b().value() < y.b().value();
}

std::int64_t QuadFieldCtx::order_cap() const {
  BigInt c = 2 * BigInt(p) * (BigInt(p) * p - 1);
  BigInt lim = std::numeric_limits<std::int64_t>::max();
  return c > lim ? std::numeric_limits<std::int64_t>::max() : to_i64(c);
}

QuadFieldCtx::Elem QuadFieldCtx::root_of_unity(std::int64_t l) const {
  if (l < 1) throw DomainError("root_of_unity: l must be >= 1");
  std::int64_t n = p * p - 1;
  if (n % l != 0)
    throw NoSuchRootError("F_" + std::to_string(p) +
                          "^2 has no primitive root of unity of order " +
                          std::to_string(l) + " (l does not divide q-1)");
  auto nf = factorize(BigInt(n));
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < p; ++b) {
      if (a == 0 && b == 0) continue;
      Elem cand = make(a, b);
      bool prim = true;
      for (const auto& [bf, e] : nf) {
        (void)e;
        if (cand.pow(n / to_i64(bf)) == one()) {
          prim = false;
          break;
        }
      }
      if (prim)
        return least_root_of_unity(
            cand, one(), n, l,
            [this](const Elem& x, const Elem& y) { return less(x, y); });
    }
  throw InvariantViolation("root_of_unity: no generator found in F_p^2");
}

std::int64_t QuadFieldCtx::mult_order(const Elem& x) const {
  if (x.is_zero()) throw DomainError("mult_order: zero input");
  return order_in_group(x, one(), p * p - 1, factorize(BigInt(p * p - 1)));
}

}  // namespace sl2aut
