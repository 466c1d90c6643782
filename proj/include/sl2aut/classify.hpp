#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "sl2aut/contexts.hpp"
#include "sl2aut/eigenpair.hpp"
#include "sl2aut/numtheory.hpp"
#include "sl2aut/sl2rep.hpp"

namespace sl2aut {

// --- isomorphy over GL(2,k) ------------------------------------------------

/// Inn_A and Inn_B are GL(2,k)-conjugate iff their entry square classes
/// match and trace(A) = ±trace(B). The central automorphisms (A = ±I,
/// the identity map) are isomorphic only to each other.
template <class Ctx>
bool is_isomorphic(const Sl2Rep<typename Ctx::Elem>& A,
                   const Sl2Rep<typename Ctx::Elem>& B, const Ctx& ctx) {
  if (!inner_order(A, ctx) || !inner_order(B, ctx))
    throw DomainError("is_isomorphic: inputs must have finite inner order");
  bool pa = is_pm_identity(A);
  bool pb = is_pm_identity(B);
  if (pa || pb) return pa && pb;
  if (A.pure != B.pure) return false;
  if (!A.pure && !(A.alpha == B.alpha)) return false;
  auto ta = A.base.trace();
  auto tb = B.base.trace();
  return ta == tb || ta == -tb;
}

namespace detail {

/// Q with Q^{-1} M Q = N for non-scalar 2x2 matrices of equal trace and
/// determinant, by reduction to a shared canonical form.
template <class K>
Mat2<K> conjugate_base(const Mat2<K>& M, const Mat2<K>& N) {
  const K one = elem_from_int(M.e11(), 1);
  const K zero = elem_from_int(M.e11(), 0);
  const Mat2<K> I = Mat2<K>::identity(M.e11());
  if (M == N) return I;
  bool gm = !elem_is_zero(M.e12());
  bool gn = !elem_is_zero(N.e12());
  if (gm && gn) {
    // both reach the companion form [[0,1],[-det, trace]]
    return Mat2<K>::of(M.e12() / N.e12(), zero,
                       (N.e11() - M.e11()) / N.e12(), one);
  }
  if (!gm && !gn) {
    if (M.e11() == M.e22()) {
      // u*I + c*E21 with shared u; rescale the nilpotent part
      if (elem_is_zero(M.e21()) || elem_is_zero(N.e21()))
        throw InvariantViolation("conjugate_base: scalar matrix");
      return Mat2<K>::of(N.e21() / M.e21(), zero, zero, one);
    }
    // distinct diagonal entries: diagonalize both
    auto diagonalizer = [&](const Mat2<K>& X) {
      if (elem_is_zero(X.e21())) return I;
      return Mat2<K>::of((X.e11() - X.e22()) / X.e21(), zero, one, one);
    };
    Mat2<K> QM = diagonalizer(M);
    Mat2<K> QN = diagonalizer(N);
    if (M.e11() == N.e11()) return QM * QN.inverse();
    // same eigenvalues in swapped positions
    Mat2<K> S = Mat2<K>::of(zero, one, -one, zero);
    return QM * S * QN.inverse();
  }
  if (gm && !gn) {
    K n1 = N.e11();
    K n2 = N.e22();
    if (!(n1 == n2)) {
      // columns of QM are eigenvectors of M for n1, n2
      Mat2<K> QM =
          Mat2<K>::of(M.e12(), M.e12(), n1 - M.e11(), n2 - M.e11());
      Mat2<K> QN = elem_is_zero(N.e21())
                       ? I
                       : Mat2<K>::of((n1 - n2) / N.e21(), zero, one, one);
      return QM * QN.inverse();
    }
    // double eigenvalue u: (M - u)^2 = 0 but M != u*I
    if (elem_is_zero(N.e21()))
      throw InvariantViolation("conjugate_base: scalar target");
    K u = n1;
    K a = M.e11() - u, b = M.e12(), c = M.e21(), d = M.e22() - u;
    // P = [v | (M-u)v] sends M to [[u,0],[1,u]]; v = e1 unless e1 is
    // already an eigenvector (then necessarily (M-u)e1 = 0)
    Mat2<K> P = (!elem_is_zero(a) || !elem_is_zero(c))
                    ? Mat2<K>::of(one, a, zero, c)
                    : Mat2<K>::of(zero, b, one, d);
    return P * Mat2<K>::of(N.e21(), zero, zero, one);
  }
  // M lower-triangular, N general: solve the reversed problem
  return conjugate_base(N, M).inverse();
}

template <class K>
K elem_pow_nonneg(const K& z, std::int64_t e) {
  K acc = elem_from_int(z, 1);
  K b = z;
  for (std::int64_t k = e; k > 0; k >>= 1) {
    if (k & 1) acc = acc * b;
    b = b * b;
  }
  return acc;
}

}  // namespace detail

/// Q in GL(2,k) with Q^{-1} A Q = B or -B, verified by multiplication
/// before returning. Tries B first, then -B.
template <class Ctx>
Mat2<typename Ctx::Elem> conjugating_matrix(
    const Sl2Rep<typename Ctx::Elem>& A,
    const Sl2Rep<typename Ctx::Elem>& B, const Ctx& ctx) {
  using K = typename Ctx::Elem;
  if (!is_isomorphic(A, B, ctx))
    throw NotIsomorphicError(
        "conjugating_matrix: automorphisms are not isomorphic");
  if (is_pm_identity(A)) return Mat2<K>::identity(A.base.e11());
  const Mat2<K>& Ma = A.base;
  Mat2<K> target = B.base;
  if (!(target.trace() == Ma.trace())) {
    target = -target;
    if (!(target.trace() == Ma.trace()))
      throw InvariantViolation("conjugating_matrix: no trace match");
  }
  Mat2<K> Q = detail::conjugate_base(Ma, target);
  if (elem_is_zero(Q.det()))
    throw InvariantViolation("conjugating_matrix: singular conjugator");
  if (!(Q.inverse() * Ma * Q == target))
    throw InvariantViolation("conjugating_matrix: verification failed");
  return Q;
}

// --- representatives -------------------------------------------------------

/// Companion-style [[0,1],[-1,t]]: General form with a = 0, b = 1.
template <class Ctx>
Sl2Rep<typename Ctx::Elem> rep_from_pure_trace(const typename Ctx::Elem& t,
                                               const Ctx& ctx) {
  using K = typename Ctx::Elem;
  return make_pure(Mat2<K>::of(ctx.zero(), ctx.one(), -ctx.one(), t), ctx);
}

/// Representative with represented trace t'*sqrt(alpha): General form
/// with a = b = sqrt(alpha) when t' != 0; for t' = 0 (inner order 2)
/// the anti-diagonal [[0, sqrt(a)],[-(1/a)sqrt(a), 0]].
template <class Ctx>
Sl2Rep<typename Ctx::Elem> rep_from_twisted_trace(
    const typename Ctx::Elem& tp, const typename Ctx::Elem& alpha,
    const Ctx& ctx) {
  using K = typename Ctx::Elem;
  const K one = ctx.one();
  if (elem_is_zero(tp))
    return make_twisted(
        Mat2<K>::of(ctx.zero(), one, -(one / alpha), ctx.zero()), alpha,
        ctx);
  K e21 = -((alpha - tp * alpha + one) / alpha);
  return make_twisted(Mat2<K>::of(one, one, e21, tp - one), alpha, ctx);
}

/// The m = 2 class over Q attached to a square class: [[0,1],[-1,0]]
/// for the trivial class, else the sqrt(alpha)-tagged anti-diagonal.
/// alpha_req is canonicalized to its squarefree part.
Sl2Rep<BigRat> rational_square_class_rep(const BigInt& alpha_req,
                                         const RationalCtx& ctx);

/// Realizability of one eigenpair orbit over Q via the minimal
/// polynomial of the canonical member's trace: linear (trace rational)
/// or x^2 - c with c > 0 (trace = t'*sqrt(square_class(c))).
std::optional<Sl2Rep<BigRat>> try_class_rational(const EigenpairOrbit& orbit,
                                                 const RationalCtx& ctx);

/// Realizability of one orbit over F_q per the divisibility clause
/// (even m: 2m | 2(q-1); odd m: m | q-1), with the representative's
/// trace computed exactly from roots of unity (in F_q or F_{q^2}).
template <class Ctx>
std::optional<Sl2Rep<typename Ctx::Elem>> try_class_finite(
    const EigenpairOrbit& orbit, const Ctx& ctx) {
  using K = typename Ctx::Elem;
  const Eigenpair canon = orbit.canonical;
  std::int64_t m = eigenpair_m(canon);
  BigInt q = ctx.descriptor().q();
  if ((q - 1) % m != 0) return std::nullopt;
  if (m % 2 == 1) {
    K zm = ctx.root_of_unity(m);
    if (canon.l == m) {
      K zr = detail::elem_pow_nonneg(zm, canon.r);
      return rep_from_pure_trace(zr + zr.inv(), ctx);
    }
    // canonical is the l = 2m member: its trace is minus the partner's
    K zr = detail::elem_pow_nonneg(zm, orbit.other->r);
    return rep_from_pure_trace(-(zr + zr.inv()), ctx);
  }
  if ((q - 1) % (2 * m) == 0) {
    K z = ctx.root_of_unity(2 * m);
    K zr = detail::elem_pow_nonneg(z, canon.r);
    return rep_from_pure_trace(zr + zr.inv(), ctx);
  }
  // zeta_2m exists only above F_q, so the trace is a sqrt(ns)-multiple
  K alpha = ctx.nonsquare_rep();
  if constexpr (std::is_same_v<Ctx, PrimeFieldCtx>) {
    QuadFieldCtx ext = ctx.extension();
    auto Z = ext.root_of_unity(2 * m);
    auto Zr = detail::elem_pow_nonneg(Z, canon.r);
    auto T = Zr + Zr.inv();
    if (!elem_is_zero(T.a()))
      throw InvariantViolation("try_class_finite: trace not a sqrt multiple");
    return rep_from_twisted_trace(T.b(), alpha, ctx);
  } else {
    // base field F_{p^2}: t'^2 = (zeta_m^r + zeta_m^{-r} + 2)/ns; the
    // choice among ±t' is pinned by the canonical square root
    K zm = ctx.root_of_unity(m);
    K zr = detail::elem_pow_nonneg(zm, canon.r);
    K tsq = (zr + zr.inv() + ctx.from_int(2)) / alpha;
    return rep_from_twisted_trace(ctx.sqrt_canonical(tsq), alpha, ctx);
  }
}

template <class Ctx>
struct TypedClass {
  EigenpairOrbit orbit;
  Sl2Rep<typename Ctx::Elem> rep;
};

template <class Ctx>
void verify_representative(const Sl2Rep<typename Ctx::Elem>& rep,
                           std::int64_t m, int expected_sign,
                           const Ctx& ctx) {
  validate_rep(rep, ctx);
  auto ord = inner_order(rep, ctx);
  if (!ord || ord->m != m || ord->sign != expected_sign)
    throw InvariantViolation("representative: inner order check failed");
}

/// All isomorphy classes of order-m inner automorphisms realizable over
/// the context's field, one per realizable eigenpair orbit; for m = 2
/// over a finite field the two square classes, over Q unbounded
/// (UnboundedResultError; use rational_square_class_rep).
template <class Ctx>
std::vector<TypedClass<Ctx>> realizable_classes_t(std::int64_t m,
                                                  const Ctx& ctx) {
  using K = typename Ctx::Elem;
  if (m < 2) throw DomainError("realizable_classes: m must be >= 2");
  std::vector<TypedClass<Ctx>> out;
  if (m == 2) {
    EigenpairOrbit orbit = eigenpairs_up_to_sign(2).front();
    if constexpr (std::is_same_v<Ctx, RationalCtx>) {
      throw UnboundedResultError(
          "C(2, Q) is infinite (one class per square class); request an "
          "explicit square class");
    } else {
      out.push_back({orbit, rep_from_pure_trace(ctx.zero(), ctx)});
      out.push_back(
          {orbit, rep_from_twisted_trace(ctx.zero(), ctx.nonsquare_rep(),
                                         ctx)});
    }
  } else {
    auto orbits = eigenpairs_up_to_sign(m);
    for (const auto& orbit : orbits) {
      std::optional<Sl2Rep<K>> rep;
      if constexpr (std::is_same_v<Ctx, RationalCtx>)
        rep = try_class_rational(orbit, ctx);
      else
        rep = try_class_finite(orbit, ctx);
      if (rep) out.push_back({orbit, std::move(*rep)});
    }
    if (!out.empty() && out.size() != orbits.size())
      throw InvariantViolation(
          "realizable_classes: realizability must be uniform across "
          "orbits for fixed m");
    for (std::size_t i = 1; i < out.size(); ++i) {
      bool same = out[i].rep.pure == out[0].rep.pure &&
                  (out[0].rep.pure || out[i].rep.alpha == out[0].rep.alpha);
      if (!same)
        throw InvariantViolation(
            "realizable_classes: mixed entry classes for m > 2");
    }
  }
  for (const auto& tc : out)
    verify_representative(tc.rep, m, eigenpair_sign(tc.orbit.canonical),
                          ctx);
  return out;
}

// --- field-descriptor level API --------------------------------------------

/// C(m, k); empty `finite` means infinite (one class per square class).
/// Finite-field counts carry the formula-provenance note verbatim.
struct ClassCount {
  std::optional<BigInt> finite;
  std::string note;
};

ClassCount count_classes(std::int64_t m, const FieldDescriptor& fd);

/// One isomorphy class, rendered: concrete entries over element-capable
/// fields, symbolic trace (2cos(2*pi*r/l)) over R and the closure.
struct ClassRecord {
  std::int64_t m = 0;
  std::int64_t l = 0;
  std::int64_t r = 0;
  std::int64_t index = 0;       // 1-based position in the list
  std::string entry_class;      // "1" or the canonical twist radicand
  std::string trace;
  int sign = 0;                 // A^m = sign * I
  bool symbolic = false;
  std::optional<std::array<std::string, 4>> entries;  // base coefficients
  std::optional<std::string> sqrt_tag;
  std::string literal;          // re-parseable matrix, "" when symbolic
};

std::vector<ClassRecord> realizable_classes(std::int64_t m,
                                            const FieldDescriptor& fd);

/// The (m = 2, Q) class for one square class, for --sqrt requests.
ClassRecord rational_square_class_record(const BigInt& alpha_req);

}  // namespace sl2aut
