#pragma once

#include <cstdint>
#include <string>

#include "sl2aut/errors.hpp"
#include "sl2aut/numtheory.hpp"

namespace sl2aut {

/// Element of F_p, p an odd prime. Value kept reduced to [0, p).
/// Default-constructed elements have modulus 0 and are only placeholders;
/// arithmetic on them throws.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t v, std::int64_t p) : p_(p) {
    if (p < 3) throw DomainError("Fp: modulus must be an odd prime >= 3");
    v_ = v % p;
    if (v_ < 0) v_ += p;
  }

  std::int64_t value() const { return v_; }
  std::int64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    check(a, b);
    return Fp(a.v_ + b.v_, a.p_);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    check(a, b);
    return Fp(a.v_ - b.v_, a.p_);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    check(a, b);
    return Fp(a.v_ * b.v_, a.p_);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }
  Fp operator-() const {
    require_init();
    return Fp(-v_, p_);
  }

  Fp inv() const {
    require_init();
    if (v_ == 0) throw DomainError("Fp: division by zero");
    return Fp(mod_inv(v_, p_), p_);
  }

  Fp pow(std::int64_t e) const {
    require_init();
    if (e < 0) return inv().pow(-e);
    return Fp(mod_pow(v_, e, p_), p_);
  }

  friend bool operator==(const Fp& a, const Fp& b) {
    check(a, b);
    return a.v_ == b.v_;
  }

 private:
  static void check(const Fp& a, const Fp& b) {
    a.require_init();
    b.require_init();
    if (a.p_ != b.p_)
      throw InvariantViolation("Fp: mixed moduli " + std::to_string(a.p_) +
                               " and " + std::to_string(b.p_));
  }
  void require_init() const {
    if (p_ == 0) throw InvariantViolation("Fp: uninitialized element");
  }

  std::int64_t v_ = 0;
  std::int64_t p_ = 0;
};

// --- generic element helpers -------------------------------------------
// Overload set shared by templated matrix code: zero test, model-driven
// construction from small integers, canonical string rendering. The base
// overloads must precede QuadExt so its member templates can see them.

inline bool elem_is_zero(const BigRat& x) { return x == 0; }
inline bool elem_is_zero(const Fp& x) { return x.is_zero(); }

/// Builds n in the same field as `model` (the model supplies modulus /
/// radicand context; its value is ignored).
inline BigRat elem_from_int(const BigRat&, std::int64_t n) {
  return BigRat(n);
}
inline Fp elem_from_int(const Fp& model, std::int64_t n) {
  return Fp(n, model.modulus());
}

inline std::string elem_str(const BigRat& x) { return x.str(); }
inline std::string elem_str(const Fp& x) { return std::to_string(x.value()); }

/// a + b*sqrt(alpha) over a base field K, alpha a fixed non-square.
/// All arithmetic requires matching alpha (checked).
template <class K>
class QuadExt {
 public:
  QuadExt(K a, K b, K alpha)
      : a_(std::move(a)), b_(std::move(b)), alpha_(std::move(alpha)) {}

  const K& a() const { return a_; }
  const K& b() const { return b_; }
  const K& alpha() const { return alpha_; }
  bool is_zero() const { return elem_is_zero(a_) && elem_is_zero(b_); }

  static QuadExt embed(const K& x, const K& alpha) {
    return QuadExt(x, elem_from_int(x, 0), alpha);
  }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    check(x, y);
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, x.alpha_);
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    check(x, y);
    return QuadExt(x.a_ - y.a_, x.b_ - y.b_, x.alpha_);
  }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    check(x, y);
    return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * x.alpha_,
                   x.a_ * y.b_ + x.b_ * y.a_, x.alpha_);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    return x * y.inv();
  }
  QuadExt operator-() const { return QuadExt(-a_, -b_, alpha_); }

  /// Norm a^2 - b^2*alpha is nonzero for nonzero elements because alpha
  /// is a non-square.
  QuadExt inv() const {
    K n = a_ * a_ - b_ * b_ * alpha_;
    if (elem_is_zero(n)) throw DomainError("QuadExt: division by zero");
    return QuadExt(a_ / n, -(b_ / n), alpha_);
  }

  QuadExt pow(std::int64_t e) const {
    if (e < 0) return inv().pow(-e);
    QuadExt base = *this;
    QuadExt acc = embed(elem_from_int(a_, 1), alpha_);
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    check(x, y);
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  static void check(const QuadExt& x, const QuadExt& y) {
    if (!(x.alpha_ == y.alpha_))
      throw DomainError("QuadExt: mixed radicands");
  }

  K a_, b_, alpha_;
};

template <class K>
bool elem_is_zero(const QuadExt<K>& x) {
  return x.is_zero();
}

template <class K>
QuadExt<K> elem_from_int(const QuadExt<K>& model, std::int64_t n) {
  return QuadExt<K>::embed(elem_from_int(model.a(), n), model.alpha());
}

template <class K>
std::string elem_str(const QuadExt<K>& x) {
  std::string rad = "sqrt(" + elem_str(x.alpha()) + ")";
  if (elem_is_zero(x.b())) return elem_str(x.a());
  std::string bs = elem_str(x.b()) + "*" + rad;
  if (elem_is_zero(x.a())) return bs;
  std::string as = elem_str(x.a());
  // "1-1/2*sqrt(2)" reads better than "1+-1/2*sqrt(2)"
  if (bs.front() == '-') return as + "-" + bs.substr(1);
  return as + "+" + bs;
}

}  // namespace sl2aut
