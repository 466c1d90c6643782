#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sl2aut/errors.hpp"

namespace sl2aut {

/// Brute-force ground truth over F_p, p a small odd prime. Matrices are
/// packed into a single code (row-major entries base p), enumeration and
/// orbit computation work on codes, and nothing here depends on the
/// classification theory being checked.

enum class Exec { Serial, Parallel };

/// PureK: all of SL(2,F_p). Twisted: bases M of sqrt(ns)*M with
/// ns*det(M) = 1, i.e. det(M) = ns^{-1}. Both have p(p^2-1) elements.
enum class Domain { Pure, Twisted };

using Code = std::uint32_t;

struct ModCtx {
  std::int64_t p;
  std::int64_t ns;      // least quadratic non-residue
  std::int64_t ns_inv;  // ns^{-1} mod p

  explicit ModCtx(std::int64_t p);
};

Code pack_code(const ModCtx& ctx, std::int64_t a, std::int64_t b,
               std::int64_t c, std::int64_t d);
std::array<std::int64_t, 4> unpack_code(const ModCtx& ctx, Code code);

/// All codes of the domain, ascending. Size is checked to be p(p^2-1).
std::vector<Code> domain_matrices(const ModCtx& ctx, Domain domain);

/// Least m with A^m = ±I for the represented matrix (M itself in the
/// pure domain, sqrt(ns)*M in the twisted one). Always finite.
std::int64_t inner_order_code(const ModCtx& ctx, Domain domain, Code code);

/// Buckets the whole domain by inner order; orders above m_max are
/// discarded. Bucket contents are ascending and identical for both
/// execution policies.
std::map<std::int64_t, std::vector<Code>> enumerate_finite_order(
    const ModCtx& ctx, Domain domain, std::int64_t m_max, Exec exec);

/// Orbits under simultaneous GL(2,F_p)-conjugation and negation of a
/// conjugation-closed code set. Orbits are sorted by least member, each
/// orbit ascending. For p <= 5 the generating-set closure is checked
/// against the full GL action.
struct OrbitPartition {
  std::vector<std::vector<Code>> orbits;
};

OrbitPartition orbit_partition(const ModCtx& ctx, Domain domain,
                               const std::vector<Code>& codes, Exec exec);

/// Independent count of m-valid eigenpairs inside F_{p^2}: walks every
/// unit lambda, finds the least j with lambda^j = ±1 by repeated
/// multiplication, and counts unordered pairs {lambda, lambda^{-1}}
/// with j = m. Requires 2m | p^2 - 1.
std::int64_t verify_eigenpair_count(std::int64_t m, std::int64_t p);

/// All-pairs comparison of is_isomorphic against oracle orbit
/// co-membership, within each entry-class domain (finite-order matrices
/// of every inner order, cross-order pairs included).
struct TraceCriterionReport {
  bool ok = true;
  std::int64_t pairs_checked = 0;
  std::vector<std::pair<Code, Code>> counterexamples;  // first few only
};

TraceCriterionReport verify_trace_criterion(std::int64_t p, Exec exec);

/// Per-m comparison of oracle class counts against the closed-form
/// count. "Semisimple" orbits (trace != ±2, plus the twisted domain)
/// are the formula's subject; trace-±2 non-central orbits are reported
/// in the separate exceptional column.
struct VerifyWitness {
  std::string kind;  // "semisimple" | "exceptional"
  Domain domain;
  Code code;
};

struct VerifyRow {
  std::int64_t m = 0;
  std::int64_t oracle_semisimple = 0;
  std::int64_t oracle_exceptional = 0;
  std::int64_t paper = 0;
  bool agree = true;
  std::vector<VerifyWitness> witnesses;
};

struct VerifyReport {
  std::int64_t p = 0;
  std::int64_t ns = 0;
  std::vector<VerifyRow> rows;  // m = 2 .. m_max
};

VerifyReport verify_report(std::int64_t p, std::int64_t m_max, Exec exec);

}  // namespace sl2aut
