#include "sl2aut/eigenpair.hpp"

#include <algorithm>
#include <numeric>

#include "sl2aut/errors.hpp"
#include "sl2aut/numtheory.hpp"

namespace sl2aut {

std::int64_t eigenpair_m(const Eigenpair& e) {
  return e.l % 2 == 0 ? e.l / 2 : e.l;
}

int eigenpair_sign(const Eigenpair& e) { return e.l % 2 == 0 ? -1 : +1; }

Eigenpair eigenpair_negate(const Eigenpair& e) {
  // -zeta_l^r = zeta_{2l}^{2r+l}; reduce (2r+l)/(2l) and re-canonicalize
  std::int64_t g = std::gcd(2 * e.r + e.l, 2 * e.l);
  std::int64_t lp = 2 * e.l / g;
  if (lp == 1) return {1, 0};
  std::int64_t rp = ((2 * e.r + e.l) / g) % lp;
  return {lp, std::min(rp, lp - rp)};
}

std::vector<Eigenpair> m_valid_eigenpairs(std::int64_t m) {
  if (m < 2) throw DomainError("m_valid_eigenpairs: m must be >= 2");
  std::vector<Eigenpair> out;
  for (std::int64_t r = 1; r <= m; ++r)
    if (std::gcd(r, 2 * m) == 1) out.push_back({2 * m, r});
  if (m % 2 == 1)
    for (std::int64_t r = 1; r <= m / 2; ++r)
      if (std::gcd(r, m) == 1) out.push_back({m, r});
  if (static_cast<std::int64_t>(out.size()) != euler_phi(m))
    throw InvariantViolation("m_valid_eigenpairs: size != phi(m)");
  return out;
}

std::vector<EigenpairOrbit> eigenpairs_up_to_sign(std::int64_t m) {
  std::vector<Eigenpair> valid = m_valid_eigenpairs(m);
  std::vector<EigenpairOrbit> orbits;
  std::vector<bool> seen(valid.size(), false);
  for (std::size_t i = 0; i < valid.size(); ++i) {
    if (seen[i]) continue;
    seen[i] = true;
    Eigenpair e = valid[i];
    Eigenpair ne = eigenpair_negate(e);
    if (ne == e) {
      if (m != 2)
        throw InvariantViolation("eigenpairs_up_to_sign: fixed point at m > 2");
      orbits.push_back({e, std::nullopt});
      continue;
    }
    auto it = std::find(valid.begin(), valid.end(), ne);
    if (it == valid.end())
      throw InvariantViolation(
          "eigenpairs_up_to_sign: negation left the m-valid set");
    seen[it - valid.begin()] = true;
    // canonical member: smaller r; on equal r the l = 2m member
    bool e_canonical = e.r < ne.r || (e.r == ne.r && e.l > ne.l);
    Eigenpair canon = e_canonical ? e : ne;
    Eigenpair other = e_canonical ? ne : e;
    orbits.push_back({canon, other});
  }
  std::size_t expect = m == 2 ? 1 : static_cast<std::size_t>(euler_phi(m) / 2);
  if (orbits.size() != expect)
    throw InvariantViolation("eigenpairs_up_to_sign: wrong orbit count");
  return orbits;
}

std::string eigenpair_trace_symbol(const Eigenpair& e) {
  return "2cos(2*pi*" + std::to_string(e.r) + "/" + std::to_string(e.l) + ")";
}

}  // namespace sl2aut
