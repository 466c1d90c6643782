#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sl2aut/contexts.hpp"
#include "sl2aut/mat2.hpp"

namespace sl2aut {

/// A matrix in SL(2, k[sqrt(alpha)]) whose entries are all in k (pure)
/// or all k-multiples of one sqrt(alpha). Stored as the base matrix of
/// coefficients plus the tag; the represented matrix is base (pure) or
/// sqrt(alpha)*base (twisted).
///
/// Invariants: pure => det(base) = 1; twisted => alpha*det(base) = 1 and
/// alpha is a canonical non-square square-class representative.
template <class K>
struct Sl2Rep {
  Mat2<K> base;
  bool pure;
  K alpha;  // one() when pure

  friend bool operator==(const Sl2Rep& x, const Sl2Rep& y) {
    if (x.pure != y.pure) return false;
    if (!x.pure && !(x.alpha == y.alpha)) return false;
    return x.base == y.base;
  }
};

template <class Ctx>
void validate_rep(const Sl2Rep<typename Ctx::Elem>& A, const Ctx& ctx) {
  if (A.pure) {
    if (!(A.base.det() == ctx.one()))
      throw InvariantViolation("Sl2Rep: pure matrix with det != 1");
    return;
  }
  if (!(A.alpha * A.base.det() == ctx.one()))
    throw InvariantViolation("Sl2Rep: twisted matrix with alpha*det != 1");
  if (ctx.is_square(A.alpha))
    throw InvariantViolation("Sl2Rep: twist radicand is a square");
  if (!(ctx.square_class(A.alpha) == A.alpha))
    throw InvariantViolation("Sl2Rep: twist radicand not canonical");
}

template <class Ctx>
Sl2Rep<typename Ctx::Elem> make_pure(Mat2<typename Ctx::Elem> m,
                                     const Ctx& ctx) {
  Sl2Rep<typename Ctx::Elem> rep{std::move(m), true, ctx.one()};
  validate_rep(rep, ctx);
  return rep;
}

template <class Ctx>
Sl2Rep<typename Ctx::Elem> make_twisted(Mat2<typename Ctx::Elem> base,
                                        typename Ctx::Elem alpha,
                                        const Ctx& ctx) {
  Sl2Rep<typename Ctx::Elem> rep{std::move(base), false, std::move(alpha)};
  validate_rep(rep, ctx);
  return rep;
}

/// The representative of -A (same inner automorphism).
template <class K>
Sl2Rep<K> negated(const Sl2Rep<K>& A) {
  return Sl2Rep<K>{-A.base, A.pure, A.alpha};
}

template <class K>
bool is_pm_identity(const Sl2Rep<K>& A) {
  if (!A.pure) return false;
  Mat2<K> I = Mat2<K>::identity(A.base.e11());
  return A.base == I || A.base == -I;
}

/// Scales B by det(B)^(-1/2), splitting off the square class of the
/// determinant as the tag. Inn_A = Inn_B as maps on SL(2,k).
template <class Ctx>
Sl2Rep<typename Ctx::Elem> normalize(const Mat2<typename Ctx::Elem>& B,
                                     const Ctx& ctx) {
  using K = typename Ctx::Elem;
  K d = B.det();
  if (elem_is_zero(d)) throw DomainError("normalize: singular matrix");
  if (ctx.is_square(d)) {
    K s = ctx.sqrt_canonical(d);
    return make_pure(B.scaled(ctx.one() / s), ctx);
  }
  K alpha = ctx.square_class(d);
  K s = ctx.sqrt_canonical(d / alpha);
  // B = s*sqrt(alpha) * base, so the represented sqrt(alpha)*base has det 1
  return make_twisted(B.scaled(ctx.one() / (s * alpha)), alpha, ctx);
}

/// Product of represented matrices with tag algebra:
/// pure*pure -> pure; pure*twisted -> twisted;
/// twisted*twisted -> pure with base alpha*(b1*b2).
template <class K>
Sl2Rep<K> sl2_mul(const Sl2Rep<K>& x, const Sl2Rep<K>& y) {
  const K one = elem_from_int(x.base.e11(), 1);
  if (!x.pure && !y.pure) {
    if (!(x.alpha == y.alpha))
      throw DomainError("sl2_mul: mixed twist radicands");
    return Sl2Rep<K>{(x.base * y.base).scaled(x.alpha), true, one};
  }
  if (x.pure && y.pure) return Sl2Rep<K>{x.base * y.base, true, one};
  K alpha = x.pure ? y.alpha : x.alpha;
  return Sl2Rep<K>{x.base * y.base, false, alpha};
}

/// m with A^m = sign * I, sign in {+1, -1}.
struct OrderResult {
  std::int64_t m;
  int sign;
  bool operator==(const OrderResult&) const = default;
};

/// Least m <= cap with A^m = I or A^m = -I; nullopt if none (the inner
/// automorphism has order > cap, or infinite order over Q).
template <class Ctx>
std::optional<OrderResult> inner_order(
    const Sl2Rep<typename Ctx::Elem>& A, const Ctx& ctx,
    std::optional<std::int64_t> cap_opt = std::nullopt) {
  using K = typename Ctx::Elem;
  std::int64_t cap = cap_opt.value_or(ctx.order_cap());
  if (cap < 1) throw DomainError("inner_order: cap must be >= 1");
  Mat2<K> I = Mat2<K>::identity(A.base.e11());
  Mat2<K> negI = -I;
  Sl2Rep<K> cur = A;
  for (std::int64_t m = 1; m <= cap; ++m) {
    if (m > 1) cur = sl2_mul(cur, A);
    if (cur.pure) {
      if (cur.base == I) return OrderResult{m, +1};
      if (cur.base == negI) return OrderResult{m, -1};
    }
  }
  return std::nullopt;
}

// --- canonical forms -----------------------------------------------------

/// Base matrix [[a, b], [-(a(t-a)-u)/b ... ]], b != 0; u is the base
/// determinant (1 pure, 1/alpha twisted), t the base trace.
template <class K>
struct GeneralForm {
  K a, b, t;
};

/// Base matrix [[l1, 0], [c, l2]].
template <class K>
struct LowerTriForm {
  K l1, l2, c;
};

template <class K>
using CanonicalForm = std::variant<GeneralForm<K>, LowerTriForm<K>>;

template <class Ctx>
CanonicalForm<typename Ctx::Elem> canonical_form(
    const Sl2Rep<typename Ctx::Elem>& A, const Ctx& ctx) {
  using K = typename Ctx::Elem;
  // the row-2 consistency of the General form is exactly the det invariant
  validate_rep(A, ctx);
  if (!elem_is_zero(A.base.e12()))
    return GeneralForm<K>{A.base.e11(), A.base.e12(), A.base.trace()};
  return LowerTriForm<K>{A.base.e11(), A.base.e22(), A.base.e21()};
}

template <class Ctx>
Sl2Rep<typename Ctx::Elem> reconstruct_canonical(
    const CanonicalForm<typename Ctx::Elem>& form, bool pure,
    const typename Ctx::Elem& alpha, const Ctx& ctx) {
  using K = typename Ctx::Elem;
  K u = pure ? ctx.one() : ctx.one() / alpha;  // base determinant
  Mat2<K> base = std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, GeneralForm<K>>) {
          K e22 = f.t - f.a;
          K e21 = (f.a * e22 - u) / f.b;
          return Mat2<K>::of(f.a, f.b, e21, e22);
        } else {
          return Mat2<K>::of(f.l1, ctx.zero(), f.c, f.l2);
        }
      },
      form);
  return pure ? make_pure(base, ctx) : make_twisted(base, alpha, ctx);
}

// --- trace recurrence ----------------------------------------------------

/// trace(A^r) from t = trace(A) for det-1 A: t_0 = 2, t_1 = t,
/// t_r = t*t_{r-1} - t_{r-2}. Works over any exact element type,
/// including QuadExt, where it exhibits the even/odd membership
/// alternation for twisted traces.
template <class K>
K trace_power(const K& t, std::int64_t r) {
  if (r < 0) throw DomainError("trace_power: r must be >= 0");
  K two = elem_from_int(t, 2);
  if (r == 0) return two;
  K prev = two;
  K cur = t;
  for (std::int64_t i = 2; i <= r; ++i) {
    K next = t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// --- sign canonicalization ----------------------------------------------

/// Among {A, -A} (one inner automorphism), the one whose first nonzero
/// base entry in reading order is positive in the field's documented
/// order. Used for set-keying.
template <class Ctx>
Sl2Rep<typename Ctx::Elem> canonical_signed(
    const Sl2Rep<typename Ctx::Elem>& A, const Ctx& ctx) {
  for (const auto& entry : A.base.e) {
    if (elem_is_zero(entry)) continue;
    return ctx.is_positive(entry) ? A : negated(A);
  }
  throw DomainError("canonical_signed: zero matrix");
}

// --- rendering -----------------------------------------------------------

namespace detail {
inline bool needs_parens(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] == '+' || s[i] == '-') return true;
  return false;
}
}  // namespace detail

/// "c*sqrt(alpha)" with parentheses when the coefficient is composite.
template <class K>
std::string twisted_term_str(const K& coeff, const K& alpha) {
  std::string cs = elem_str(coeff);
  std::string rs = "sqrt(" + elem_str(alpha) + ")";
  if (detail::needs_parens(cs)) return "(" + cs + ")*" + rs;
  return cs + "*" + rs;
}

/// Trace of the represented matrix as a string: base trace (pure) or
/// coefficient*sqrt(alpha) (twisted).
template <class K>
std::string rep_trace_str(const Sl2Rep<K>& A) {
  K t = A.base.trace();
  if (A.pure) return elem_str(t);
  if (elem_is_zero(t)) return elem_str(t);
  return twisted_term_str(t, A.alpha);
}

/// The four base coefficients, rendered.
template <class K>
std::array<std::string, 4> rep_entry_strings(const Sl2Rep<K>& A) {
  return {elem_str(A.base.e11()), elem_str(A.base.e12()),
          elem_str(A.base.e21()), elem_str(A.base.e22())};
}

/// Re-parseable literal of the represented matrix:
/// "e11,e12;e21,e22" with twisted entries rendered as c*sqrt(alpha).
template <class K>
std::string rep_literal(const Sl2Rep<K>& A) {
  auto entry = [&](const K& c) -> std::string {
    if (A.pure || elem_is_zero(c)) return elem_str(c);
    return twisted_term_str(c, A.alpha);
  };
  return entry(A.base.e11()) + "," + entry(A.base.e12()) + ";" +
         entry(A.base.e21()) + "," + entry(A.base.e22());
}

template <class K>
std::string mat_literal(const Mat2<K>& M) {
  return elem_str(M.e11()) + "," + elem_str(M.e12()) + ";" +
         elem_str(M.e21()) + "," + elem_str(M.e22());
}

// --- parsing -------------------------------------------------------------

namespace detail {

inline BigRat parse_rational_literal(const std::string& s) {
  auto bad = [&] {
    return ParseError("bad matrix entry coefficient '" + s + "'");
  };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto check_int = [&](const std::string& t) {
    if (t.empty()) throw bad();
    std::size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) throw bad();
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') throw bad();
  };
  check_int(num);
  check_int(den);
  BigInt d(den);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  return BigRat(BigInt(num), d);
}

struct ParsedEntry {
  BigRat coeff;
  std::optional<std::int64_t> radicand;
};

inline ParsedEntry parse_entry(std::string s) {
  auto sq = s.find("sqrt(");
  if (sq == std::string::npos) return {parse_rational_literal(s), {}};
  if (s.back() != ')')
    throw ParseError("bad matrix entry '" + s + "': missing ')'");
  std::string rad = s.substr(sq + 5, s.size() - sq - 6);
  std::string pre = s.substr(0, sq);
  BigRat coeff;
  if (pre.empty())
    coeff = 1;
  else if (pre == "-")
    coeff = -1;
  else if (pre.back() == '*')
    coeff = parse_rational_literal(pre.substr(0, pre.size() - 1));
  else
    throw ParseError("bad matrix entry '" + s +
                     "': expected c*sqrt(a) or sqrt(a)");
  BigRat r = parse_rational_literal(rad);
  if (denominator(r) != 1)
    throw ParseError("radicand must be an integer in '" + s + "'");
  BigInt n = numerator(r);
  if (n == 0) throw ParseError("sqrt(0) in matrix entry '" + s + "'");
  if (abs(n) > BigInt(std::numeric_limits<std::int64_t>::max()))
    throw ParseError("radicand out of range in '" + s + "'");
  return {coeff, static_cast<std::int64_t>(n)};
}

}  // namespace detail

/// Parses "e11,e12;e21,e22" over the context's field. Entries are "n",
/// "n/m", or "n/m*sqrt(a)" (also bare "sqrt(a)"); all nonzero entries
/// must land in one square class after canonicalizing each radicand.
/// Pure matrices with det != 1 are normalized (Inn is unchanged);
/// twisted inputs must represent determinant exactly 1.
template <class Ctx>
Sl2Rep<typename Ctx::Elem> parse_rep(const std::string& input,
                                     const Ctx& ctx) {
  using K = typename Ctx::Elem;
  std::string s;
  for (char c : input)
    if (c != ' ' && c != '\t') s += c;
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  std::size_t semis = 0;
  for (char c : s)
    if (c == ';') ++semis;
  if (parts.size() != 4 || semis != 1 || s.find(';') < s.find(','))
    throw ParseError("bad matrix literal '" + input +
                     "': expected \"e11,e12;e21,e22\"");

  std::array<K, 4> coeffs{ctx.zero(), ctx.zero(), ctx.zero(), ctx.zero()};
  std::optional<K> tag;  // canonical non-square class of nonzero entries
  bool any_pure_nonzero = false;
  for (int i = 0; i < 4; ++i) {
    auto pe = detail::parse_entry(parts[i]);
    K c = ctx.from_rational(pe.coeff);
    bool entry_twisted = false;
    if (pe.radicand) {
      K rad = ctx.from_int(*pe.radicand);
      if (elem_is_zero(rad))
        throw ParseError("radicand is zero in this field: '" + parts[i] +
                         "'");
      if (ctx.is_square(rad)) {
        c = c * ctx.sqrt_canonical(rad);
      } else {
        K cls = ctx.square_class(rad);
        c = c * ctx.sqrt_canonical(rad / cls);
        if (!elem_is_zero(c)) {
          if (tag && !(*tag == cls))
            throw ParseError("matrix entries mix different radicands");
          tag = cls;
          entry_twisted = true;
        }
      }
    }
    if (!elem_is_zero(c) && !entry_twisted) any_pure_nonzero = true;
    coeffs[i] = c;
  }
  if (tag && any_pure_nonzero)
    throw ParseError("matrix entries mix pure and sqrt-tagged values");

  Mat2<K> B = Mat2<K>::of(coeffs[0], coeffs[1], coeffs[2], coeffs[3]);
  if (!tag) return normalize(B, ctx);  // may itself come out twisted
  if (!(*tag * B.det() == ctx.one()))
    throw DomainError(
        "twisted matrix must represent determinant exactly 1 "
        "(alpha * det(base) != 1)");
  return make_twisted(B, *tag, ctx);
}

// --- eigenpairs of concrete matrices --------------------------------------

/// Eigenvalue pair {zeta_l^r, zeta_l^(-r)} of a finite-order represented
/// matrix. r is canonical (gcd(r,l) = 1, r <= l/2) when the eigenvalues
/// lie in a supported field, otherwise unresolved (trace still reported).
struct EigenpairResult {
  std::int64_t l;
  std::optional<std::int64_t> r;
  std::string trace;
  std::int64_t m;
  int sign;
};

namespace detail {

template <class Elem>
std::int64_t dlog(const Elem& zeta, const Elem& lambda, std::int64_t l) {
  Elem cur = zeta;
  for (std::int64_t j = 1; j <= l; ++j) {
    if (cur == lambda) return j;
    cur = cur * zeta;
  }
  throw InvariantViolation("dlog: target not a power of the given root");
}

template <class Ctx>
EigenpairResult pm_identity_eigenpair(const Sl2Rep<typename Ctx::Elem>& A,
                                      const Ctx& /*ctx*/, int sign) {
  // A = I: pair {1, 1}; A = -I: pair {-1, -1}
  std::int64_t l = sign > 0 ? 1 : 2;
  return {l, l == 1 ? 0 : 1, elem_str(A.base.trace()), 1, sign};
}

/// sqrt of an F_p value inside F_{p^2} = F_p[sqrt(ns)] (always exists).
inline QuadExt<Fp> sqrt_in_ext(const Fp& x, const PrimeFieldCtx& ctx,
                               const QuadFieldCtx& ext) {
  if (ctx.is_square(x))
    return QuadExt<Fp>::embed(ctx.sqrt_canonical(x), Fp(ext.ns1, ctx.p));
  Fp u = ctx.sqrt_canonical(x / ctx.nonsquare_rep());
  return ext.make(0, u.value());
}

template <class Ext>
EigenpairResult resolve_in_field(const Ext& fld,
                                 const typename Ext::Elem& lambda,
                                 std::int64_t l, std::string trace,
                                 std::int64_t m, int sign) {
  if (fld.mult_order(lambda) != l)
    throw InvariantViolation(
        "eigenpair_of: eigenvalue order disagrees with inner order");
  auto zeta = fld.root_of_unity(l);
  std::int64_t j = detail::dlog(zeta, lambda, l);
  std::int64_t r = std::min(j, l - j);
  return {l, r, std::move(trace), m, sign};
}

}  // namespace detail

inline EigenpairResult eigenpair_of(const Sl2Rep<BigRat>& A,
                                    const RationalCtx& ctx) {
  auto ord = inner_order(A, ctx);
  if (!ord)
    throw DomainError("eigenpair_of: automorphism is not of finite order");
  auto [m, sign] = *ord;
  if (m == 1) return detail::pm_identity_eigenpair(A, ctx, sign);
  std::int64_t l = sign < 0 ? 2 * m : m;
  BigRat t = A.base.trace();
  if (A.pure) {
    // finite order forces t in {0, 1, -1} here (±2 is ±I, handled above)
    std::int64_t want_l, r;
    if (t == 0) {
      want_l = 4;
      r = 1;
    } else if (t == 1) {
      want_l = 6;
      r = 1;
    } else if (t == -1) {
      want_l = 3;
      r = 1;
    } else {
      throw InvariantViolation("eigenpair_of: unexpected rational trace " +
                               elem_str(t));
    }
    if (want_l != l)
      throw InvariantViolation("eigenpair_of: trace/order mismatch over Q");
    return {l, r, elem_str(t), m, sign};
  }
  // twisted: t' * sqrt(alpha), fixed real embedding sqrt(alpha) > 0
  std::string ts = elem_is_zero(t) ? elem_str(t)
                                   : twisted_term_str(t, A.alpha);
  if (t == 0) {
    if (l != 4)
      throw InvariantViolation("eigenpair_of: trace 0 must mean l = 4");
    return {l, 1, ts, m, sign};
  }
  if (l != 8 && l != 12)
    throw InvariantViolation(
        "eigenpair_of: twisted rational trace with unexpected l");
  BigRat expect = (l == 8) ? BigRat(2) : BigRat(3);
  if (!(t * t * A.alpha == expect))
    throw InvariantViolation("eigenpair_of: trace does not square to " +
                             elem_str(expect));
  // 2cos(2*pi*r/l) > 0 exactly for the smaller exponent of the pair
  std::int64_t r =
      ctx.is_positive(t) ? 1 : (l == 8 ? 3 : 5);
  return {l, r, ts, m, sign};
}

inline EigenpairResult eigenpair_of(const Sl2Rep<Fp>& A,
                                    const PrimeFieldCtx& ctx) {
  auto ord = inner_order(A, ctx);
  if (!ord)
    throw InvariantViolation("eigenpair_of: no finite order in F_p");
  auto [m, sign] = *ord;
  if (m == 1) return detail::pm_identity_eigenpair(A, ctx, sign);
  std::int64_t l = sign < 0 ? 2 * m : m;
  QuadFieldCtx ext = ctx.extension();
  Fp t = A.base.trace();
  if (A.pure) {
    if (t == ctx.from_int(2) || t == ctx.from_int(-2))
      throw DomainError(
          "eigenpair_of: unipotent-type element (trace ±2, A != ±I) has "
          "no m-valid eigenpair");
    Fp disc = t * t - ctx.from_int(4);
    auto sd = detail::sqrt_in_ext(disc, ctx, ext);
    auto lambda =
        (QuadExt<Fp>::embed(t, Fp(ext.ns1, ctx.p)) + sd) / ext.from_int(2);
    return detail::resolve_in_field(ext, lambda, l, elem_str(t), m, sign);
  }
  // twisted: represented trace t'*sqrt(ns); eigenvalues still in F_{p^2}
  Fp tp = t;
  Fp disc = tp * tp * ctx.nonsquare_rep() - ctx.from_int(4);
  auto sd = detail::sqrt_in_ext(disc, ctx, ext);
  auto lambda = (ext.make(0, tp.value()) + sd) / ext.from_int(2);
  std::string ts = elem_is_zero(tp) ? elem_str(tp)
                                    : twisted_term_str(tp, A.alpha);
  return detail::resolve_in_field(ext, lambda, l, std::move(ts), m, sign);
}

inline EigenpairResult eigenpair_of(const Sl2Rep<QuadExt<Fp>>& A,
                                    const QuadFieldCtx& ctx) {
  auto ord = inner_order(A, ctx);
  if (!ord)
    throw InvariantViolation("eigenpair_of: no finite order in F_{p^2}");
  auto [m, sign] = *ord;
  if (m == 1) return detail::pm_identity_eigenpair(A, ctx, sign);
  std::int64_t l = sign < 0 ? 2 * m : m;
  auto t = A.base.trace();
  if (A.pure) {
    if (t == ctx.from_int(2) || t == ctx.from_int(-2))
      throw DomainError(
          "eigenpair_of: unipotent-type element (trace ±2, A != ±I) has "
          "no m-valid eigenpair");
    auto disc = t * t - ctx.from_int(4);
    if (ctx.is_square(disc)) {
      auto lambda = (t + ctx.sqrt_canonical(disc)) / ctx.from_int(2);
      return detail::resolve_in_field(ctx, lambda, l, elem_str(t), m, sign);
    }
    // eigenvalues in F_{p^4}: exponent left unresolved
    return {l, std::nullopt, elem_str(t), m, sign};
  }
  std::string ts = elem_is_zero(t) ? elem_str(t)
                                   : twisted_term_str(t, A.alpha);
  return {l, std::nullopt, std::move(ts), m, sign};
}

}  // namespace sl2aut
