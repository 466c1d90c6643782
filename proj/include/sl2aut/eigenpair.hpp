#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sl2aut {

/// Unordered pair {zeta_l^r, zeta_l^(-r)} of primitive l-th roots of
/// unity, encoded by gcd(r, l) = 1 and 1 <= r <= l/2. The degenerate
/// pairs {1,1} and {-1,-1} are (1,0) and (2,1).
struct Eigenpair {
  std::int64_t l;
  std::int64_t r;
  auto operator<=>(const Eigenpair&) const = default;
};

/// Inner order of a determinant-1 matrix with this eigenvalue pair:
/// l/2 for even l, l for odd l.
std::int64_t eigenpair_m(const Eigenpair& e);

/// Sign of A^m: -1 when l is even (A^m = -I), +1 when l is odd.
int eigenpair_sign(const Eigenpair& e);

/// Eigenpair of -A: both eigenvalues negated, re-canonicalized.
Eigenpair eigenpair_negate(const Eigenpair& e);

/// All eigenpairs of elements with inner order exactly m >= 2: the
/// (2m, r) pairs for ascending r, then (for odd m) the (m, r) pairs for
/// ascending r. Always has size euler_phi(m).
std::vector<Eigenpair> m_valid_eigenpairs(std::int64_t m);

/// One orbit of the negation action on m-valid eigenpairs. canonical
/// is the member with smaller r (on a tie, the member with l = 2m);
/// other is empty only for the fixed point at m = 2.
struct EigenpairOrbit {
  Eigenpair canonical;
  std::optional<Eigenpair> other;

  bool contains(const Eigenpair& e) const {
    return e == canonical || (other && e == *other);
  }
};

/// Negation orbits in first-seen order of m_valid_eigenpairs(m):
/// one orbit for m = 2, phi(m)/2 orbits for m > 2.
std::vector<EigenpairOrbit> eigenpairs_up_to_sign(std::int64_t m);

/// "2cos(2*pi*r/l)"
std::string eigenpair_trace_symbol(const Eigenpair& e);

}  // namespace sl2aut
