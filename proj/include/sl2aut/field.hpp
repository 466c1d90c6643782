#pragma once

#include <cstdint>
#include <string>

#include "sl2aut/numtheory.hpp"

namespace sl2aut {

/// Which base field k is in play.
///
/// Rationals and FiniteField (r <= 2) carry exact element arithmetic.
/// RealsSymbolic and AlgClosedSymbolic support only m-level queries
/// (counts, eigenpair orbits, symbolic traces); element-level operations
/// reject them. FiniteField with r > 2 is accepted for counting only.
enum class FieldKind {
  Rationals,
  FiniteField,
  RealsSymbolic,
  AlgClosedSymbolic,
};

struct FieldDescriptor {
  FieldKind kind = FieldKind::Rationals;
  std::int64_t p = 0;  // odd prime, FiniteField only
  std::int64_t r = 1;  // extension degree, FiniteField only

  static FieldDescriptor rationals();
  static FieldDescriptor reals();
  static FieldDescriptor alg_closed();
  /// Validates that p is an odd prime and r >= 1. r > 2 descriptors are
  /// count-only.
  static FieldDescriptor finite(std::int64_t p, std::int64_t r);

  bool count_only() const {
    return kind == FieldKind::FiniteField && r > 2;
  }
  /// True when exact element arithmetic is available (Q, F_p, F_{p^2}).
  bool element_capable() const {
    return kind == FieldKind::Rationals ||
           (kind == FieldKind::FiniteField && r <= 2);
  }

  /// Field size p^r. FiniteField only.
  BigInt q() const;

  /// Round-trips through field_parse: "Q", "R", "Qbar", "Fq:7", "Fq:3^2".
  std::string str() const;

  bool operator==(const FieldDescriptor&) const = default;
};

/// Parses a field spec: Q | R | Qbar | Fq:<p> | Fq:<p>^<r>.
/// Throws ParseError on malformed specs, even p, or composite p.
FieldDescriptor field_parse(const std::string& s);

}  // namespace sl2aut
