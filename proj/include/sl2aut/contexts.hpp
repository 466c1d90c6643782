#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "sl2aut/elements.hpp"
#include "sl2aut/errors.hpp"
#include "sl2aut/field.hpp"

namespace sl2aut {

// Field contexts bundle one field's exact arithmetic behind a uniform
// API so the classification templates are written once:
//
//   using Elem = ...;
//   descriptor(), zero(), one(), from_int(n), from_rational(q)
//   is_square(x), sqrt_canonical(x), square_class(x)
//   is_positive(x), less(x, y), str(x)
//   order_cap(), root_of_unity(l), mult_order(x)
//
// Canonical orders (used by sqrt_canonical, root_of_unity, sign
// canonicalization): Q by numeric value with "positive" = x > 0;
// F_p by representative value in [0, p) with "positive" = [1, (p-1)/2];
// F_{p^2} lexicographic on (a, b) with "positive" = first nonzero
// coordinate positive in the F_p sense.

struct QuadFieldCtx;

struct RationalCtx {
  using Elem = BigRat;

  FieldDescriptor descriptor() const { return FieldDescriptor::rationals(); }
  Elem zero() const { return BigRat(0); }
  Elem one() const { return BigRat(1); }
  Elem from_int(std::int64_t n) const { return BigRat(n); }
  Elem from_rational(const BigRat& q) const { return q; }

  bool is_square(const Elem& x) const;
  Elem sqrt_canonical(const Elem& x) const;  // the root >= 0
  Elem square_class(const Elem& x) const;    // signed squarefree integer
  bool is_positive(const Elem& x) const { return x > 0; }
  bool less(const Elem& x, const Elem& y) const { return x < y; }
  std::string str(const Elem& x) const { return elem_str(x); }

  // Finite inner order over Q forces the represented trace to have degree
  // <= 2 over Q, so l <= 12 and m <= 12; doubled for safety.
  std::int64_t order_cap() const { return 24; }
  Elem root_of_unity(std::int64_t l) const;  // only l = 1, 2 exist
  std::int64_t mult_order(const Elem& x) const;
};

struct PrimeFieldCtx {
  using Elem = Fp;

  explicit PrimeFieldCtx(std::int64_t p);

  std::int64_t p;
  std::int64_t ns;  // least quadratic non-residue mod p

  FieldDescriptor descriptor() const {
    return FieldDescriptor::finite(p, 1);
  }
  Elem zero() const { return Fp(0, p); }
  Elem one() const { return Fp(1, p); }
  Elem from_int(std::int64_t n) const { return Fp(n, p); }
  Elem from_rational(const BigRat& q) const;

  bool is_square(const Elem& x) const;       // Euler's criterion
  Elem sqrt_canonical(const Elem& x) const;  // root in [0, (p-1)/2]
  Elem square_class(const Elem& x) const;    // 1 or ns
  Elem nonsquare_rep() const { return Fp(ns, p); }
  bool is_positive(const Elem& x) const {
    return x.value() >= 1 && x.value() <= (p - 1) / 2;
  }
  bool less(const Elem& x, const Elem& y) const {
    return x.value() < y.value();
  }
  std::string str(const Elem& x) const { return elem_str(x); }

  BigInt group_units() const { return BigInt(p) - 1; }
  std::int64_t order_cap() const;  // 2p(p^2-1), clamped
  Elem root_of_unity(std::int64_t l) const;
  std::int64_t mult_order(const Elem& x) const;

  /// F_{p^2} = F_p[sqrt(ns)], the field where all eigenvalues of base-F_p
  /// finite-order matrices live.
  QuadFieldCtx extension() const;
};

struct QuadFieldCtx {
  using Elem = QuadExt<Fp>;

  explicit QuadFieldCtx(std::int64_t p);

  std::int64_t p;
  std::int64_t ns1;  // F_{p^2} = F_p[sqrt(ns1)], ns1 the least non-residue

  FieldDescriptor descriptor() const {
    return FieldDescriptor::finite(p, 2);
  }
  Elem make(std::int64_t a, std::int64_t b) const {
    return Elem(Fp(a, p), Fp(b, p), Fp(ns1, p));
  }
  Elem zero() const { return make(0, 0); }
  Elem one() const { return make(1, 0); }
  Elem from_int(std::int64_t n) const { return make(n, 0); }
  Elem from_rational(const BigRat& q) const;

  bool is_square(const Elem& x) const;
  Elem sqrt_canonical(const Elem& x) const;  // lex-least root
  Elem square_class(const Elem& x) const;    // one() or ns2()
  Elem nonsquare_rep() const { return ns2(); }
  /// Lex-least non-square of F_{p^2}; computed on first use.
  Elem ns2() const;
  bool is_positive(const Elem& x) const;
  bool less(const Elem& x, const Elem& y) const;
  std::string str(const Elem& x) const { return elem_str(x); }

  BigInt group_units() const { return BigInt(p) * p - 1; }
  std::int64_t order_cap() const;
  Elem root_of_unity(std::int64_t l) const;
  std::int64_t mult_order(const Elem& x) const;

 private:
  // shared across copies; ns2 does a lex scan of the field once
  mutable std::shared_ptr<const Elem> ns2_cache_;
};

/// Dispatches f over the element-capable context for fd. Throws
/// DomainError for symbolic fields and count-only finite fields.
template <class F>
decltype(auto) with_element_field(const FieldDescriptor& fd, F&& f) {
  switch (fd.kind) {
    case FieldKind::Rationals:
      return f(RationalCtx{});
    case FieldKind::FiniteField:
      if (fd.r == 1) return f(PrimeFieldCtx(fd.p));
      if (fd.r == 2) return f(QuadFieldCtx(fd.p));
      throw DomainError("field " + fd.str() +
                        " supports counting only (no element arithmetic)");
    case FieldKind::RealsSymbolic:
    case FieldKind::AlgClosedSymbolic:
      throw DomainError(
          "field " + fd.str() +
          " is symbolic: element-level operations are not available");
  }
  throw InvariantViolation("with_element_field: bad field kind");
}

}  // namespace sl2aut
