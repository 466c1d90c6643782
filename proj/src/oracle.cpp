#include "sl2aut/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "sl2aut/classify.hpp"
#include "sl2aut/contexts.hpp"
#include "sl2aut/numtheory.hpp"

namespace sl2aut {

namespace {

using M4 = std::array<std::int64_t, 4>;

M4 mul(const M4& x, const M4& y, std::int64_t p) {
  return {(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
          (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p};
}

std::int64_t det(const M4& x, std::int64_t p) {
  return ((x[0] * x[3] - x[1] * x[2]) % p + p) % p;
}

M4 neg(const M4& x, std::int64_t p) {
  return {(p - x[0]) % p, (p - x[1]) % p, (p - x[2]) % p, (p - x[3]) % p};
}

M4 scale(const M4& x, std::int64_t s, std::int64_t p) {
  return {x[0] * s % p, x[1] * s % p, x[2] * s % p, x[3] * s % p};
}

M4 inv2(const M4& x, std::int64_t p) {
  std::int64_t d = det(x, p);
  std::int64_t di = mod_inv(d, p);
  return {x[3] * di % p, (p - x[1]) * di % p, (p - x[2]) * di % p,
          x[0] * di % p};
}

bool is_pm_id(const M4& x, std::int64_t p) {
  return (x[0] == 1 && x[3] == 1 && x[1] == 0 && x[2] == 0) ||
         (x[0] == p - 1 && x[3] == p - 1 && x[1] == 0 && x[2] == 0);
}

/// least m with M^m = ±I; the input must have determinant ±1-like
/// finite order (always true in GL over F_p)
std::int64_t pure_inner_order(const M4& m0, std::int64_t p) {
  M4 cur = m0;
  std::int64_t cap = 4 * p * p;  // far above the group exponent
  for (std::int64_t m = 1; m <= cap; ++m) {
    if (m > 1) cur = mul(cur, m0, p);
    if (is_pm_id(cur, p)) return m;
  }
  throw InvariantViolation("pure_inner_order: no power reached ±I");
}

std::int64_t least_primitive_root(std::int64_t p) {
  auto fac = factorize(p - 1);
  for (std::int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (const auto& [q, e] : fac) {
      std::int64_t qi = static_cast<std::int64_t>(q);
      if (mod_pow(g, (p - 1) / qi, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw InvariantViolation("least_primitive_root: none found");
}

struct UnionFind {
  std::vector<std::int32_t> parent;
  std::vector<std::int32_t> size;

  explicit UnionFind(std::size_t n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::int32_t find(std::int32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];  // path halving
      x = parent[x];
    }
    return x;
  }
  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

std::int32_t index_of(const std::vector<Code>& sorted, Code c) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), c);
  if (it == sorted.end() || *it != c)
    throw InvariantViolation("orbit_partition: conjugate left the set");
  return static_cast<std::int32_t>(it - sorted.begin());
}

std::vector<std::vector<Code>> partition_from_uf(
    const std::vector<Code>& codes, UnionFind& uf) {
  std::unordered_map<std::int32_t, std::vector<Code>> groups;
  for (std::size_t i = 0; i < codes.size(); ++i)
    groups[uf.find(static_cast<std::int32_t>(i))].push_back(codes[i]);
  std::vector<std::vector<Code>> orbits;
  orbits.reserve(groups.size());
  for (auto& [root, members] : groups) orbits.push_back(std::move(members));
  for (auto& orbit : orbits) std::sort(orbit.begin(), orbit.end());
  std::sort(orbits.begin(), orbits.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return orbits;
}

Sl2Rep<Fp> rep_of_code(const ModCtx& ctx, Domain domain, Code code,
                       const PrimeFieldCtx& fctx) {
  M4 e = unpack_code(ctx, code);
  Mat2<Fp> base = Mat2<Fp>::of(Fp(e[0], ctx.p), Fp(e[1], ctx.p),
                               Fp(e[2], ctx.p), Fp(e[3], ctx.p));
  if (domain == Domain::Pure) return make_pure(base, fctx);
  return make_twisted(base, fctx.nonsquare_rep(), fctx);
}

}  // namespace

ModCtx::ModCtx(std::int64_t p_) : p(p_) {
  if (p < 3 || p > 31 || !is_prime(p))
    throw DomainError("oracle: p must be an odd prime <= 31");
  ns = 0;
  for (std::int64_t x = 2; x < p; ++x) {
    if (mod_pow(x, (p - 1) / 2, p) == p - 1) {
      ns = x;
      break;
    }
  }
  if (ns == 0) throw InvariantViolation("oracle: no non-residue found");
  ns_inv = mod_inv(ns, p);
}

Code pack_code(const ModCtx& ctx, std::int64_t a, std::int64_t b,
               std::int64_t c, std::int64_t d) {
  std::int64_t p = ctx.p;
  return static_cast<Code>(((a * p + b) * p + c) * p + d);
}

std::array<std::int64_t, 4> unpack_code(const ModCtx& ctx, Code code) {
  std::int64_t p = ctx.p;
  std::int64_t v = code;
  M4 e;
  e[3] = v % p;
  v /= p;
  e[2] = v % p;
  v /= p;
  e[1] = v % p;
  e[0] = v / p;
  return e;
}

std::vector<Code> domain_matrices(const ModCtx& ctx, Domain domain) {
  std::int64_t p = ctx.p;
  std::int64_t want = domain == Domain::Pure ? 1 : ctx.ns_inv;
  std::vector<Code> out;
  out.reserve(static_cast<std::size_t>(p * (p * p - 1)));
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < p; ++b)
      for (std::int64_t c = 0; c < p; ++c)
        for (std::int64_t d = 0; d < p; ++d)
          if (((a * d - b * c) % p + p) % p == want)
            out.push_back(pack_code(ctx, a, b, c, d));
  if (static_cast<std::int64_t>(out.size()) != p * (p * p - 1))
    throw InvariantViolation("domain_matrices: |domain| != p(p^2-1)");
  return out;
}

std::int64_t inner_order_code(const ModCtx& ctx, Domain domain, Code code) {
  M4 m = unpack_code(ctx, code);
  if (domain == Domain::Pure) return pure_inner_order(m, ctx.p);
  // A = sqrt(ns)*M: odd powers are never in F_p, so the inner order is
  // 2i with i the inner order of A^2 = ns*M^2
  M4 sq = scale(mul(m, m, ctx.p), ctx.ns, ctx.p);
  return 2 * pure_inner_order(sq, ctx.p);
}

std::map<std::int64_t, std::vector<Code>> enumerate_finite_order(
    const ModCtx& ctx, Domain domain, std::int64_t m_max, Exec exec) {
  if (m_max < 2) throw DomainError("enumerate_finite_order: m_max must be >= 2");
  std::vector<Code> all = domain_matrices(ctx, domain);
  std::vector<std::int64_t> orders(all.size());
  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(all.size()); ++i)
      orders[i] = inner_order_code(ctx, domain, all[i]);
  } else {
    for (std::size_t i = 0; i < all.size(); ++i)
      orders[i] = inner_order_code(ctx, domain, all[i]);
  }
  std::map<std::int64_t, std::vector<Code>> buckets;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (orders[i] <= m_max) buckets[orders[i]].push_back(all[i]);
  return buckets;  // each bucket ascending: `all` was ascending
}

OrbitPartition orbit_partition(const ModCtx& ctx, Domain domain,
                               const std::vector<Code>& codes, Exec exec) {
  (void)domain;  // conjugation and negation act entry-wise on the base
  std::int64_t p = ctx.p;
  std::vector<Code> sorted = codes;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  UnionFind uf(n);
  if (n == 0) return {};

  const M4 gen[3] = {{1, 1, 0, 1}, {1, 0, 1, 1}, {least_primitive_root(p), 0, 0, 1}};
  M4 gen_inv[3];
  for (int k = 0; k < 3; ++k) gen_inv[k] = inv2(gen[k], p);

  // 4 targets per matrix: three generator conjugates plus the negation
  std::vector<std::int32_t> edge(4 * n);
  auto fill_edges = [&](std::size_t i) {
    M4 m = unpack_code(ctx, sorted[i]);
    for (int k = 0; k < 3; ++k) {
      M4 t = mul(mul(gen_inv[k], m, p), gen[k], p);
      edge[4 * i + k] = index_of(sorted, pack_code(ctx, t[0], t[1], t[2], t[3]));
    }
    M4 nm = neg(m, p);
    edge[4 * i + 3] =
        index_of(sorted, pack_code(ctx, nm[0], nm[1], nm[2], nm[3]));
  };
  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
      fill_edges(i);
  } else {
    for (std::size_t i = 0; i < n; ++i) fill_edges(i);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (int k = 0; k < 4; ++k) uf.unite(static_cast<std::int32_t>(i), edge[4 * i + k]);

  OrbitPartition part{partition_from_uf(sorted, uf)};

  if (p <= 5) {
    // guard the generating-set optimization: redo with every Q in GL
    UnionFind full(n);
    for (std::int64_t a = 0; a < p; ++a)
      for (std::int64_t b = 0; b < p; ++b)
        for (std::int64_t c = 0; c < p; ++c)
          for (std::int64_t d = 0; d < p; ++d) {
            M4 q{a, b, c, d};
            if (det(q, p) == 0) continue;
            M4 qi = inv2(q, p);
            for (std::size_t i = 0; i < n; ++i) {
              M4 m = unpack_code(ctx, sorted[i]);
              M4 t = mul(mul(qi, m, p), q, p);
              full.unite(static_cast<std::int32_t>(i),
                         index_of(sorted, pack_code(ctx, t[0], t[1], t[2], t[3])));
            }
          }
    for (std::size_t i = 0; i < n; ++i) {
      M4 nm = neg(unpack_code(ctx, sorted[i]), p);
      full.unite(static_cast<std::int32_t>(i),
                 index_of(sorted, pack_code(ctx, nm[0], nm[1], nm[2], nm[3])));
    }
    if (partition_from_uf(sorted, full) != part.orbits)
      throw InvariantViolation(
          "orbit_partition: generator closure disagrees with the full "
          "GL action");
  }
  return part;
}

std::int64_t verify_eigenpair_count(std::int64_t m, std::int64_t p) {
  if (m < 2) throw DomainError("verify_eigenpair_count: m must be >= 2");
  QuadFieldCtx ext(p);
  BigInt q2 = ext.descriptor().q();
  if ((q2 - 1) % (2 * m) != 0)
    throw DomainError("verify_eigenpair_count: 2m must divide p^2 - 1");
  auto one = ext.one();
  auto minus_one = -one;
  std::vector<QuadExt<Fp>> keys;
  for (std::int64_t a = 0; a < p; ++a) {
    for (std::int64_t b = 0; b < p; ++b) {
      if (a == 0 && b == 0) continue;
      auto lambda = ext.make(a, b);
      // least j with lambda^j = ±1
      auto cur = lambda;
      std::int64_t j = 1;
      while (!(cur == one) && !(cur == minus_one)) {
        cur = cur * lambda;
        ++j;
      }
      if (j != m) continue;
      auto li = lambda.inv();
      auto key = ext.less(lambda, li) ? lambda : li;
      if (std::find(keys.begin(), keys.end(), key) == keys.end())
        keys.push_back(key);
    }
  }
  return static_cast<std::int64_t>(keys.size());
}

TraceCriterionReport verify_trace_criterion(std::int64_t p, Exec exec) {
  ModCtx ctx(p);
  PrimeFieldCtx fctx(p);
  TraceCriterionReport report;
  for (Domain domain : {Domain::Pure, Domain::Twisted}) {
    // every group element has finite inner order; 2p+2 bounds them all
    std::int64_t m_max = 2 * p + 2;
    auto buckets = enumerate_finite_order(ctx, domain, m_max, exec);
    std::vector<Code> all;
    std::unordered_map<Code, std::int32_t> orbit_id;
    std::int32_t next_id = 0;
    for (const auto& [m, codes] : buckets) {
      auto part = orbit_partition(ctx, domain, codes, exec);
      for (const auto& orbit : part.orbits) {
        for (Code c : orbit) orbit_id[c] = next_id;
        ++next_id;
      }
      all.insert(all.end(), codes.begin(), codes.end());
    }
    if (static_cast<std::int64_t>(all.size()) != p * (p * p - 1))
      throw InvariantViolation("verify_trace_criterion: bucket sizes");
    std::sort(all.begin(), all.end());

    std::vector<Sl2Rep<Fp>> reps;
    reps.reserve(all.size());
    for (Code c : all) reps.push_back(rep_of_code(ctx, domain, c, fctx));

    const std::int64_t n = static_cast<std::int64_t>(all.size());
    std::int64_t pairs = 0;
    std::vector<std::pair<Code, Code>> bad;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : pairs) if (exec == Exec::Parallel)
#endif
    for (std::int64_t i = 0; i < n; ++i) {
      for (std::int64_t j = i + 1; j < n; ++j) {
        bool lib = is_isomorphic(reps[i], reps[j], fctx);
        bool orc = orbit_id.at(all[i]) == orbit_id.at(all[j]);
        if (lib != orc) {
#ifdef _OPENMP
#pragma omp critical
#endif
          if (bad.size() < 16) bad.emplace_back(all[i], all[j]);
        }
        ++pairs;
      }
    }
    report.pairs_checked += pairs;
    report.counterexamples.insert(report.counterexamples.end(), bad.begin(),
                                  bad.end());
  }
  report.ok = report.counterexamples.empty();
  return report;
}

VerifyReport verify_report(std::int64_t p, std::int64_t m_max, Exec exec) {
  if (m_max < 2) throw DomainError("verify_report: m_max must be >= 2");
  ModCtx ctx(p);
  VerifyReport rep;
  rep.p = p;
  rep.ns = ctx.ns;
  auto pure_buckets = enumerate_finite_order(ctx, Domain::Pure, m_max, exec);
  auto tw_buckets = enumerate_finite_order(ctx, Domain::Twisted, m_max, exec);
  FieldDescriptor fd = FieldDescriptor::finite(p, 1);
  for (std::int64_t m = 2; m <= m_max; ++m) {
    VerifyRow row;
    row.m = m;
    std::vector<std::pair<Domain, std::vector<Code>>> semisimple_orbits;
    if (auto it = pure_buckets.find(m); it != pure_buckets.end()) {
      auto part = orbit_partition(ctx, Domain::Pure, it->second, exec);
      for (auto& orbit : part.orbits) {
        M4 e = unpack_code(ctx, orbit.front());
        std::int64_t tr = (e[0] + e[3]) % p;
        bool exceptional = tr == 2 || tr == p - 2;
        if (exceptional)
          ++row.oracle_exceptional;
        else
          semisimple_orbits.emplace_back(Domain::Pure, std::move(orbit));
      }
    }
    if (auto it = tw_buckets.find(m); it != tw_buckets.end()) {
      auto part = orbit_partition(ctx, Domain::Twisted, it->second, exec);
      for (auto& orbit : part.orbits)
        semisimple_orbits.emplace_back(Domain::Twisted, std::move(orbit));
    }
    row.oracle_semisimple = static_cast<std::int64_t>(semisimple_orbits.size());
    auto count = count_classes(m, fd);
    row.paper = static_cast<std::int64_t>(*count.finite);
    row.agree = row.oracle_semisimple == row.paper;
    if (!row.agree)
      for (const auto& [domain, orbit] : semisimple_orbits)
        row.witnesses.push_back({"semisimple", domain, orbit.front()});
    if (row.oracle_exceptional > 0) {
      // canonical unipotent witness, deliberately not the lex-least code
      Code u = pack_code(ctx, 1, 1, 0, 1);
      if (inner_order_code(ctx, Domain::Pure, u) != m)
        throw InvariantViolation(
            "verify_report: exceptional bucket without the unipotent "
            "witness");
      row.witnesses.push_back({"exceptional", Domain::Pure, u});
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace sl2aut
