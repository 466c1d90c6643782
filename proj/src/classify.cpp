#include "sl2aut/classify.hpp"

#include "sl2aut/polynomial.hpp"

namespace sl2aut {

std::optional<Sl2Rep<BigRat>> try_class_rational(const EigenpairOrbit& orbit,
                                                 const RationalCtx& ctx) {
  // shape of the trace's minimal polynomial over Q:
  // 0 = unrealizable, 1 = linear (trace rational), 2 = x^2 - c, c > 0
  auto shape = [](std::int64_t l) {
    IntPolynomial psi = real_cyclotomic_minpoly(l);
    if (psi.degree() == 1) return 1;
    if (psi.degree() == 2 && psi.coeff(1) == 0 && psi.coeff(0) < 0) return 2;
    return 0;
  };
  const Eigenpair canon = orbit.canonical;
  int sc = shape(canon.l);
  if (orbit.other) {
    int so = shape(orbit.other->l);
    if ((sc == 0) != (so == 0))
      throw InvariantViolation(
          "try_class_rational: orbit members disagree on realizability");
  }
  if (sc == 0) return std::nullopt;
  IntPolynomial psi = real_cyclotomic_minpoly(canon.l);
  if (sc == 1) return rep_from_pure_trace(BigRat(-psi.coeff(0)), ctx);
  BigInt c = -psi.coeff(0);
  BigRat alpha(squarefree_part(c));
  BigRat s = ctx.sqrt_canonical(BigRat(c) / alpha);
  // the canonical member's trace 2cos(2*pi*r/l) is positive iff 4r < l
  BigRat tp = 4 * canon.r < canon.l ? s : -s;
  return rep_from_twisted_trace(tp, alpha, ctx);
}

Sl2Rep<BigRat> rational_square_class_rep(const BigInt& alpha_req,
                                         const RationalCtx& ctx) {
  if (alpha_req == 0)
    throw DomainError("square class representative must be nonzero");
  BigInt alpha = squarefree_part(alpha_req);
  if (alpha == 1) return rep_from_pure_trace(BigRat(0), ctx);
  return rep_from_twisted_trace(BigRat(0), BigRat(alpha), ctx);
}

namespace {

const char* kFqCountNote = "paper formula; see verify for oracle comparison";

template <class Ctx>
ClassRecord record_of(const TypedClass<Ctx>& tc, std::int64_t m,
                      std::int64_t idx) {
  ClassRecord rec;
  rec.m = m;
  rec.l = tc.orbit.canonical.l;
  rec.r = tc.orbit.canonical.r;
  rec.index = idx;
  rec.entry_class = tc.rep.pure ? "1" : elem_str(tc.rep.alpha);
  rec.trace = rep_trace_str(tc.rep);
  rec.sign = eigenpair_sign(tc.orbit.canonical);
  rec.symbolic = false;
  rec.entries = rep_entry_strings(tc.rep);
  if (!tc.rep.pure) rec.sqrt_tag = elem_str(tc.rep.alpha);
  rec.literal = rep_literal(tc.rep);
  return rec;
}

ClassRecord symbolic_record(std::int64_t m, const EigenpairOrbit& orbit,
                            std::int64_t idx) {
  ClassRecord rec;
  rec.m = m;
  rec.l = orbit.canonical.l;
  rec.r = orbit.canonical.r;
  rec.index = idx;
  rec.entry_class = "1";
  rec.trace = eigenpair_trace_symbol(orbit.canonical);
  rec.sign = eigenpair_sign(orbit.canonical);
  rec.symbolic = true;
  return rec;
}

}  // namespace

ClassCount count_classes(std::int64_t m, const FieldDescriptor& fd) {
  if (m < 2) throw DomainError("count_classes: m must be >= 2");
  switch (fd.kind) {
    case FieldKind::AlgClosedSymbolic:
      return {BigInt(m == 2 ? 1 : euler_phi(m) / 2), ""};
    case FieldKind::RealsSymbolic:
      return {BigInt(m == 2 ? 2 : euler_phi(m) / 2), ""};
    case FieldKind::Rationals:
      if (m == 2) return {std::nullopt, ""};
      return {BigInt(m == 3 || m == 4 || m == 6 ? 1 : 0), ""};
    case FieldKind::FiniteField: {
      if (m == 2) return {BigInt(2), kFqCountNote};
      // even m: 2m | 2(q-1); odd m: m | q-1 -- both are m | q-1
      bool ok = (fd.q() - 1) % m == 0;
      return {BigInt(ok ? euler_phi(m) / 2 : 0), kFqCountNote};
    }
  }
  throw InvariantViolation("count_classes: unknown field kind");
}

std::vector<ClassRecord> realizable_classes(std::int64_t m,
                                            const FieldDescriptor& fd) {
  if (m < 2) throw DomainError("realizable_classes: m must be >= 2");
  std::vector<ClassRecord> out;
  switch (fd.kind) {
    case FieldKind::AlgClosedSymbolic:
    case FieldKind::RealsSymbolic: {
      if (m == 2) {
        RationalCtx qctx;
        EigenpairOrbit orbit = eigenpairs_up_to_sign(2).front();
        auto pure0 = rep_from_pure_trace(BigRat(0), qctx);
        verify_representative(pure0, 2, -1, qctx);
        out.push_back(
            record_of(TypedClass<RationalCtx>{orbit, pure0}, m, 1));
        if (fd.kind == FieldKind::RealsSymbolic) {
          auto tw = rep_from_twisted_trace(BigRat(0), BigRat(-1), qctx);
          verify_representative(tw, 2, -1, qctx);
          out.push_back(
              record_of(TypedClass<RationalCtx>{orbit, tw}, m, 2));
        }
      } else {
        std::int64_t idx = 1;
        for (const auto& orbit : eigenpairs_up_to_sign(m))
          out.push_back(symbolic_record(m, orbit, idx++));
      }
      return out;
    }
    case FieldKind::Rationals: {
      RationalCtx qctx;
      auto classes = realizable_classes_t(m, qctx);
      std::int64_t idx = 1;
      for (const auto& tc : classes) out.push_back(record_of(tc, m, idx++));
      return out;
    }
    case FieldKind::FiniteField: {
      if (fd.count_only())
        throw DomainError("field " + fd.str() +
                          " supports counting only; use count or verify");
      return with_element_field(fd, [&](const auto& ctx) {
        std::vector<ClassRecord> recs;
        auto classes = realizable_classes_t(m, ctx);
        std::int64_t idx = 1;
        for (const auto& tc : classes)
          recs.push_back(record_of(tc, m, idx++));
        return recs;
      });
    }
  }
  throw InvariantViolation("realizable_classes: unknown field kind");
}

ClassRecord rational_square_class_record(const BigInt& alpha_req) {
  RationalCtx ctx;
  auto rep = rational_square_class_rep(alpha_req, ctx);
  verify_representative(rep, 2, -1, ctx);
  EigenpairOrbit orbit = eigenpairs_up_to_sign(2).front();
  return record_of(TypedClass<RationalCtx>{orbit, rep}, 2, 1);
}

}  // namespace sl2aut
