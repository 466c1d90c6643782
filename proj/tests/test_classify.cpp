#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "sl2aut/classify.hpp"
#include "sl2aut/errors.hpp"
#include "sl2aut/field.hpp"
#include "sl2aut/numtheory.hpp"

using namespace sl2aut;

namespace {

Mat2<BigRat> qmat(long a, long b, long c, long d) {
  return Mat2<BigRat>::of(BigRat(a), BigRat(b), BigRat(c), BigRat(d));
}

Mat2<Fp> fmat(std::int64_t p, long a, long b, long c, long d) {
  return Mat2<Fp>::of(Fp(a, p), Fp(b, p), Fp(c, p), Fp(d, p));
}

}  // namespace

TEST_CASE("m-valid eigenpair lists") {
  CHECK(m_valid_eigenpairs(2) == std::vector<Eigenpair>{{4, 1}});
  CHECK(m_valid_eigenpairs(3) == std::vector<Eigenpair>{{6, 1}, {3, 1}});
  CHECK(m_valid_eigenpairs(4) == std::vector<Eigenpair>{{8, 1}, {8, 3}});
  CHECK(m_valid_eigenpairs(5) ==
        std::vector<Eigenpair>{{10, 1}, {10, 3}, {5, 1}, {5, 2}});
  for (std::int64_t m = 2; m <= 30; ++m) {
    auto v = m_valid_eigenpairs(m);
    CHECK(static_cast<std::int64_t>(v.size()) == euler_phi(m));
    std::set<Eigenpair> seen;
    bool in_odd_block = false;
    std::int64_t prev_r = 0;
    for (const auto& e : v) {
      CHECK(std::gcd(e.r, e.l) == 1);
      CHECK(e.r >= 1);
      CHECK(2 * e.r <= e.l);
      CHECK(eigenpair_m(e) == m);
      CHECK(seen.insert(e).second);
      // (2m, r) ascending first, then for odd m the (m, r) block
      if (e.l == 2 * m) {
        CHECK_FALSE(in_odd_block);
      } else {
        CHECK(e.l == m);
        CHECK(m % 2 == 1);
        if (!in_odd_block) prev_r = 0;
        in_odd_block = true;
      }
      CHECK(e.r > prev_r);
      prev_r = e.r;
    }
  }
  CHECK_THROWS_AS(m_valid_eigenpairs(1), DomainError);
}

TEST_CASE("eigenpair negation") {
  CHECK(eigenpair_negate({4, 1}) == Eigenpair{4, 1});
  CHECK(eigenpair_negate({6, 1}) == Eigenpair{3, 1});
  CHECK(eigenpair_negate({8, 1}) == Eigenpair{8, 3});
  CHECK(eigenpair_negate({12, 1}) == Eigenpair{12, 5});
  CHECK(eigenpair_negate({5, 1}) == Eigenpair{10, 3});
  CHECK(eigenpair_negate({5, 2}) == Eigenpair{10, 1});
  CHECK(eigenpair_negate({1, 0}) == Eigenpair{2, 1});
  CHECK(eigenpair_negate({2, 1}) == Eigenpair{1, 0});
  // involution, and m is preserved
  for (std::int64_t m = 2; m <= 20; ++m)
    for (const auto& e : m_valid_eigenpairs(m)) {
      auto n = eigenpair_negate(e);
      CHECK(eigenpair_m(n) == m);
      CHECK(eigenpair_negate(n) == e);
    }
}

TEST_CASE("negation orbits") {
  auto o2 = eigenpairs_up_to_sign(2);
  REQUIRE(o2.size() == 1);
  CHECK(o2[0].canonical == Eigenpair{4, 1});
  CHECK_FALSE(o2[0].other.has_value());

  auto o3 = eigenpairs_up_to_sign(3);
  REQUIRE(o3.size() == 1);
  CHECK(o3[0].canonical == Eigenpair{6, 1});
  CHECK(o3[0].other == Eigenpair{3, 1});

  auto o4 = eigenpairs_up_to_sign(4);
  REQUIRE(o4.size() == 1);
  CHECK(o4[0].canonical == Eigenpair{8, 1});
  CHECK(o4[0].other == Eigenpair{8, 3});

  auto o5 = eigenpairs_up_to_sign(5);
  REQUIRE(o5.size() == 2);
  CHECK(o5[0].canonical == Eigenpair{10, 1});
  CHECK(o5[0].other == Eigenpair{5, 2});
  CHECK(o5[1].canonical == Eigenpair{5, 1});
  CHECK(o5[1].other == Eigenpair{10, 3});

  for (std::int64_t m = 3; m <= 30; ++m) {
    auto orbits = eigenpairs_up_to_sign(m);
    CHECK(static_cast<std::int64_t>(orbits.size()) == euler_phi(m) / 2);
    // the orbits partition the m-valid pairs
    for (const auto& e : m_valid_eigenpairs(m)) {
      int hits = 0;
      for (const auto& o : orbits) hits += o.contains(e) ? 1 : 0;
      CHECK(hits == 1);
    }
    for (const auto& o : orbits) {
      REQUIRE(o.other.has_value());
      CHECK(eigenpair_negate(o.canonical) == *o.other);
      // canonical member: smaller r; on a tie the l = 2m member
      if (o.canonical.r == o.other->r)
        CHECK(o.canonical.l == 2 * m);
      else
        CHECK(o.canonical.r < o.other->r);
    }
  }
}

TEST_CASE("trace symbols") {
  CHECK(eigenpair_trace_symbol({6, 1}) == "2cos(2*pi*1/6)");
  CHECK(eigenpair_trace_symbol({3, 1}) == "2cos(2*pi*1/3)");
  CHECK(eigenpair_trace_symbol({10, 3}) == "2cos(2*pi*3/10)");
}

TEST_CASE("isomorphy criterion") {
  PrimeFieldCtx F7(7);
  auto D24 = make_pure(fmat(7, 2, 0, 0, 4), F7);
  auto D42 = make_pure(fmat(7, 4, 0, 0, 2), F7);
  auto D53 = make_pure(fmat(7, 5, 0, 0, 3), F7);
  CHECK(is_isomorphic(D24, D42, F7));
  // trace 6 vs trace 8 = 1 = -(6): sign crossing is allowed
  CHECK(is_isomorphic(D24, D53, F7));
  auto C1 = make_pure(fmat(7, 0, 1, 6, 1), F7);  // order 3, A^3 = -I
  CHECK(is_isomorphic(D24, C1, F7));

  // order 2: pure and twisted are distinct classes
  auto P2 = make_pure(fmat(7, 0, 1, 6, 0), F7);
  auto T2 = make_twisted(fmat(7, 0, 1, 2, 0), Fp(3, 7), F7);
  CHECK_FALSE(is_isomorphic(P2, T2, F7));
  CHECK(is_isomorphic(T2, T2, F7));

  // trace mismatch
  auto C0 = make_pure(fmat(7, 0, 1, 6, 0), F7);   // trace 0
  auto C3 = make_pure(fmat(7, 0, 1, 6, 3), F7);   // trace 3
  CHECK_FALSE(is_isomorphic(C0, C3, F7));

  // +-I is isomorphic only to +-I
  auto I = make_pure(fmat(7, 1, 0, 0, 1), F7);
  auto nI = make_pure(fmat(7, 6, 0, 0, 6), F7);
  CHECK(is_isomorphic(I, nI, F7));
  CHECK_FALSE(is_isomorphic(I, P2, F7));
  CHECK_FALSE(is_isomorphic(C1, nI, F7));

  // rational square classes are pairwise distinct
  RationalCtx Q;
  auto R2 = rational_square_class_rep(BigInt(2), Q);
  auto R3 = rational_square_class_rep(BigInt(3), Q);
  CHECK_FALSE(is_isomorphic(R2, R3, Q));

  // non-finite input is rejected
  auto U = make_pure(qmat(1, 1, 0, 1), Q);
  auto J = make_pure(qmat(0, 1, -1, 0), Q);
  CHECK_THROWS_AS(is_isomorphic(U, J, Q), DomainError);
}

TEST_CASE("conjugating matrix goldens") {
  RationalCtx Q;
  auto A = make_pure(qmat(1, 1, -1, 0), Q);
  auto B = make_pure(qmat(0, 1, -1, 1), Q);
  auto Qm = conjugating_matrix(A, B, Q);
  CHECK(Qm == qmat(1, 0, -1, 1));
  CHECK(Qm.inverse() * A.base * Qm == B.base);

  CHECK(conjugating_matrix(A, A, Q) == Mat2<BigRat>::identity(BigRat(0)));

  auto I = make_pure(qmat(1, 0, 0, 1), Q);
  auto nI = make_pure(qmat(-1, 0, 0, -1), Q);
  CHECK(conjugating_matrix(I, nI, Q) == Mat2<BigRat>::identity(BigRat(0)));

  PrimeFieldCtx F7(7);
  auto D = make_pure(fmat(7, 2, 0, 0, 4), F7);
  auto L = make_pure(fmat(7, 2, 0, 1, 4), F7);
  auto Qf = conjugating_matrix(D, L, F7);
  CHECK(Qf.inverse() * D.base * Qf == L.base);

  // trace matched through negation: Q^{-1} A Q = -B
  auto C1 = make_pure(fmat(7, 0, 1, 6, 1), F7);
  auto Qn = conjugating_matrix(C1, D, F7);
  CHECK(Qn.inverse() * C1.base * Qn == -D.base);

  // twisted goldens share a tag
  auto T = make_twisted(fmat(7, 0, 1, 2, 0), Fp(3, 7), F7);
  auto Tc = make_twisted(fmat(7, 1, 1, 1, 6), Fp(3, 7), F7);  // conjugate
  CHECK(Tc.base.trace() == T.base.trace());
  auto Qt = conjugating_matrix(T, Tc, F7);
  CHECK(Qt.inverse() * T.base * Qt == Tc.base);

  CHECK_THROWS_AS(conjugating_matrix(T, D, F7), NotIsomorphicError);
  auto P2 = make_pure(fmat(7, 0, 1, 6, 0), F7);
  CHECK_THROWS_AS(conjugating_matrix(P2, T, F7), NotIsomorphicError);
}

TEST_CASE("conjugating matrix soundness on random finite-field pairs") {
  PrimeFieldCtx F7(7);
  std::vector<Sl2Rep<Fp>> seeds;
  for (long t = 0; t < 7; ++t)
    seeds.push_back(make_pure(fmat(7, 0, 1, 6, t), F7));
  for (auto& tc : realizable_classes_t(2, F7)) seeds.push_back(tc.rep);
  for (auto& tc : realizable_classes_t(6, F7)) seeds.push_back(tc.rep);

  std::mt19937 rng(20260816);
  std::uniform_int_distribution<long> entry(0, 6);
  std::uniform_int_distribution<std::size_t> pick(0, seeds.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& A = seeds[pick(rng)];
    Mat2<Fp> P = fmat(7, 1, 0, 0, 1);
    do {
      P = fmat(7, entry(rng), entry(rng), entry(rng), entry(rng));
    } while (elem_is_zero(P.det()));
    Mat2<Fp> Bb = P.inverse() * A.base * P;
    if (rng() & 1) Bb = -Bb;
    auto B = A.pure ? make_pure(Bb, F7) : make_twisted(Bb, A.alpha, F7);
    REQUIRE(is_isomorphic(A, B, F7));
    auto Qm = conjugating_matrix(A, B, F7);
    bool direct = Qm.inverse() * A.base * Qm == B.base;
    bool negated = Qm.inverse() * A.base * Qm == -B.base;
    CHECK((direct || negated));
  }
}

TEST_CASE("conjugating matrix soundness on random rational pairs") {
  RationalCtx Q;
  std::vector<Sl2Rep<BigRat>> seeds;
  for (long t : {0L, 1L, -1L})
    seeds.push_back(make_pure(qmat(0, 1, -1, t), Q));
  seeds.push_back(rational_square_class_rep(BigInt(2), Q));
  seeds.push_back(rational_square_class_rep(BigInt(-1), Q));
  for (auto& tc : realizable_classes_t(4, Q)) seeds.push_back(tc.rep);
  for (auto& tc : realizable_classes_t(6, Q)) seeds.push_back(tc.rep);

  std::mt19937 rng(4096);
  std::uniform_int_distribution<long> small(-3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, seeds.size() - 1);
  for (int trial = 0; trial < 60; ++trial) {
    const auto& A = seeds[pick(rng)];
    Mat2<BigRat> P = qmat(1, small(rng), 0, 1) * qmat(1, 0, small(rng), 1) *
                     qmat(1, small(rng), 0, 1);
    Mat2<BigRat> Bb = P.inverse() * A.base * P;
    if (rng() & 1) Bb = -Bb;
    auto B = A.pure ? make_pure(Bb, Q) : make_twisted(Bb, A.alpha, Q);
    REQUIRE(is_isomorphic(A, B, Q));
    auto Qm = conjugating_matrix(A, B, Q);
    bool direct = Qm.inverse() * A.base * Qm == B.base;
    bool negated = Qm.inverse() * A.base * Qm == -B.base;
    CHECK((direct || negated));
  }
}

TEST_CASE("rational realizability") {
  RationalCtx Q;
  auto c3 = realizable_classes_t(3, Q);
  REQUIRE(c3.size() == 1);
  CHECK(c3[0].orbit.canonical == Eigenpair{6, 1});
  CHECK(c3[0].rep.pure);
  CHECK(c3[0].rep.base == qmat(0, 1, -1, 1));

  auto c4 = realizable_classes_t(4, Q);
  REQUIRE(c4.size() == 1);
  CHECK_FALSE(c4[0].rep.pure);
  CHECK(c4[0].rep.alpha == 2);
  CHECK(c4[0].rep.base ==
        Mat2<BigRat>::of(BigRat(1), BigRat(1), BigRat(-1, 2), BigRat(0)));

  auto c6 = realizable_classes_t(6, Q);
  REQUIRE(c6.size() == 1);
  CHECK_FALSE(c6[0].rep.pure);
  CHECK(c6[0].rep.alpha == 3);

  CHECK(realizable_classes_t(5, Q).empty());
  CHECK(realizable_classes_t(7, Q).empty());

  std::set<std::int64_t> nonempty;
  for (std::int64_t m = 3; m <= 30; ++m)
    if (!realizable_classes_t(m, Q).empty()) nonempty.insert(m);
  CHECK(nonempty == std::set<std::int64_t>{3, 4, 6});

  CHECK_THROWS_AS(realizable_classes_t(2, Q), UnboundedResultError);
  CHECK_THROWS_AS(realizable_classes_t(1, Q), DomainError);
}

TEST_CASE("finite-field realizability") {
  PrimeFieldCtx F7(7);
  auto c3 = realizable_classes_t(3, F7);
  REQUIRE(c3.size() == 1);
  CHECK(c3[0].rep.base == fmat(7, 0, 1, 6, 1));

  auto c2 = realizable_classes_t(2, F7);
  REQUIRE(c2.size() == 2);
  CHECK(c2[0].rep.pure);
  CHECK(c2[0].rep.base == fmat(7, 0, 1, 6, 0));
  CHECK_FALSE(c2[1].rep.pure);
  CHECK(c2[1].rep.alpha == Fp(3, 7));

  CHECK(realizable_classes_t(4, F7).empty());
  CHECK(realizable_classes_t(5, F7).empty());

  // 12 | 13 - 1 but 24 does not: both classes twisted with tag ns = 2
  PrimeFieldCtx F13(13);
  auto c12 = realizable_classes_t(12, F13);
  REQUIRE(c12.size() == 2);
  for (const auto& tc : c12) {
    CHECK_FALSE(tc.rep.pure);
    CHECK(tc.rep.alpha == Fp(2, 13));
  }

  PrimeFieldCtx F5(5);
  auto c45 = realizable_classes_t(4, F5);
  REQUIRE(c45.size() == 1);
  CHECK_FALSE(c45[0].rep.pure);
  CHECK(c45[0].rep.alpha == Fp(2, 5));

  // odd m: both orbits realize as pure companions, opposite signs
  PrimeFieldCtx F11(11);
  auto c5 = realizable_classes_t(5, F11);
  REQUIRE(c5.size() == 2);
  CHECK(c5[0].orbit.canonical == Eigenpair{10, 1});
  CHECK(eigenpair_sign(c5[0].orbit.canonical) == -1);
  CHECK(c5[1].orbit.canonical == Eigenpair{5, 1});
  CHECK(eigenpair_sign(c5[1].orbit.canonical) == 1);
  for (const auto& tc : c5) CHECK(tc.rep.pure);

  // q = 9: 2m = 8 divides q - 1 for m = 4 (pure) but not for m = 8
  QuadFieldCtx F9(3);
  auto c49 = realizable_classes_t(4, F9);
  REQUIRE(c49.size() == 1);
  CHECK(c49[0].rep.pure);
  auto c89 = realizable_classes_t(8, F9);
  REQUIRE(c89.size() == 2);
  for (const auto& tc : c89) CHECK_FALSE(tc.rep.pure);
}

TEST_CASE("class counts") {
  auto fin = [](const ClassCount& c) {
    REQUIRE(c.finite.has_value());
    return *c.finite;
  };
  const std::string note = "paper formula; see verify for oracle comparison";

  auto Qbar = field_parse("Qbar");
  CHECK(fin(count_classes(2, Qbar)) == 1);
  for (std::int64_t m = 3; m <= 12; ++m)
    CHECK(fin(count_classes(m, Qbar)) == euler_phi(m) / 2);

  auto R = field_parse("R");
  CHECK(fin(count_classes(2, R)) == 2);
  CHECK(fin(count_classes(8, R)) == 2);
  for (std::int64_t m = 3; m <= 12; ++m)
    CHECK(fin(count_classes(m, R)) == euler_phi(m) / 2);

  auto Qf = field_parse("Q");
  CHECK_FALSE(count_classes(2, Qf).finite.has_value());
  CHECK(fin(count_classes(3, Qf)) == 1);
  CHECK(fin(count_classes(4, Qf)) == 1);
  CHECK(fin(count_classes(6, Qf)) == 1);
  CHECK(fin(count_classes(5, Qf)) == 0);
  CHECK(fin(count_classes(12, Qf)) == 0);

  auto F7 = field_parse("Fq:7");
  CHECK(fin(count_classes(2, F7)) == 2);
  CHECK(fin(count_classes(3, F7)) == 1);
  CHECK(fin(count_classes(4, F7)) == 0);
  CHECK(fin(count_classes(6, F7)) == 1);
  CHECK(count_classes(3, F7).note == note);
  CHECK(count_classes(2, F7).note == note);
  CHECK(count_classes(2, Qbar).note.empty());
  CHECK(count_classes(3, Qf).note.empty());

  CHECK(fin(count_classes(12, field_parse("Fq:13"))) == 2);
  CHECK(fin(count_classes(4, field_parse("Fq:3^2"))) == 1);
  // counting works where element arithmetic does not
  auto F125 = field_parse("Fq:5^3");
  CHECK(fin(count_classes(2, F125)) == 2);
  CHECK(fin(count_classes(31, F125)) == euler_phi(31) / 2);  // 31 | 124
  CHECK(fin(count_classes(5, F125)) == 0);

  CHECK_THROWS_AS(count_classes(1, Qf), DomainError);
}

TEST_CASE("counts agree with enumerated records") {
  for (const char* name : {"Q", "R", "Qbar", "Fq:7", "Fq:13", "Fq:3^2"}) {
    auto fd = field_parse(name);
    for (std::int64_t m = 2; m <= 12; ++m) {
      if (fd.kind == FieldKind::Rationals && m == 2) continue;
      auto cc = count_classes(m, fd);
      REQUIRE(cc.finite.has_value());
      auto recs = realizable_classes(m, fd);
      CHECK(BigInt(static_cast<std::int64_t>(recs.size())) == *cc.finite);
      for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(recs[i].m == m);
        CHECK(recs[i].index == static_cast<std::int64_t>(i) + 1);
      }
    }
  }
}

TEST_CASE("class records") {
  auto r3 = realizable_classes(3, field_parse("Q"));
  REQUIRE(r3.size() == 1);
  CHECK(r3[0].l == 6);
  CHECK(r3[0].r == 1);
  CHECK(r3[0].entry_class == "1");
  CHECK(r3[0].trace == "1");
  CHECK(r3[0].sign == -1);
  CHECK_FALSE(r3[0].symbolic);
  CHECK(r3[0].literal == "0,1;-1,1");
  REQUIRE(r3[0].entries.has_value());
  CHECK(*r3[0].entries ==
        std::array<std::string, 4>{"0", "1", "-1", "1"});
  CHECK_FALSE(r3[0].sqrt_tag.has_value());

  auto r4 = realizable_classes(4, field_parse("Q"));
  REQUIRE(r4.size() == 1);
  CHECK(r4[0].entry_class == "2");
  CHECK(r4[0].trace == "1*sqrt(2)");
  CHECK(r4[0].literal == "1*sqrt(2),1*sqrt(2);-1/2*sqrt(2),0");
  CHECK(*r4[0].entries ==
        std::array<std::string, 4>{"1", "1", "-1/2", "0"});
  CHECK(r4[0].sqrt_tag == "2");

  auto r6 = realizable_classes(6, field_parse("Q"));
  REQUIRE(r6.size() == 1);
  CHECK(r6[0].literal == "1*sqrt(3),1*sqrt(3);-1/3*sqrt(3),0");

  // symbolic fields: m = 2 is concrete, m > 2 is trace-only
  auto s2 = realizable_classes(2, field_parse("Qbar"));
  REQUIRE(s2.size() == 1);
  CHECK(s2[0].literal == "0,1;-1,0");
  auto s2r = realizable_classes(2, field_parse("R"));
  REQUIRE(s2r.size() == 2);
  CHECK(s2r[0].literal == "0,1;-1,0");
  CHECK(s2r[1].entry_class == "-1");
  CHECK(s2r[1].literal == "0,1*sqrt(-1);1*sqrt(-1),0");
  auto s3 = realizable_classes(3, field_parse("R"));
  REQUIRE(s3.size() == 1);
  CHECK(s3[0].symbolic);
  CHECK(s3[0].trace == "2cos(2*pi*1/6)");
  CHECK(s3[0].literal.empty());
  CHECK_FALSE(s3[0].entries.has_value());

  auto f3 = realizable_classes(3, field_parse("Fq:7"));
  REQUIRE(f3.size() == 1);
  CHECK(f3[0].literal == "0,1;6,1");
  auto f6 = realizable_classes(6, field_parse("Fq:7"));
  REQUIRE(f6.size() == 1);
  CHECK(f6[0].sqrt_tag == "3");
  CHECK(f6[0].trace == "6*sqrt(3)");
  CHECK(*f6[0].entries == std::array<std::string, 4>{"1", "1", "0", "5"});

  CHECK_THROWS_AS(realizable_classes(2, field_parse("Fq:5^3")), DomainError);
  CHECK_THROWS_AS(realizable_classes(2, field_parse("Q")),
                  UnboundedResultError);
}

TEST_CASE("rational square classes for m = 2") {
  RationalCtx Q;
  const long alphas[] = {-1, 2, 3, 5, 7, 11};
  std::vector<Sl2Rep<BigRat>> reps;
  for (long a : alphas) reps.push_back(rational_square_class_rep(BigInt(a), Q));
  for (const auto& rep : reps) {
    auto ord = inner_order(rep, Q);
    REQUIRE(ord.has_value());
    CHECK(ord->m == 2);
    CHECK(ord->sign == -1);
    auto sq = sl2_mul(rep, rep);
    CHECK(sq.pure);
    CHECK(sq.base == qmat(-1, 0, 0, -1));
  }
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      CHECK_FALSE(is_isomorphic(reps[i], reps[j], Q));

  // the request is canonicalized to its squarefree part
  auto triv = rational_square_class_rep(BigInt(1), Q);
  CHECK(triv.pure);
  CHECK(triv.base == qmat(0, 1, -1, 0));
  CHECK(rational_square_class_rep(BigInt(4), Q) == triv);
  CHECK(rational_square_class_rep(BigInt(8), Q) ==
        rational_square_class_rep(BigInt(2), Q));
  CHECK(rational_square_class_rep(BigInt(-4), Q) ==
        rational_square_class_rep(BigInt(-1), Q));
  CHECK(rational_square_class_rep(BigInt(12), Q) ==
        rational_square_class_rep(BigInt(3), Q));
  CHECK_THROWS_AS(rational_square_class_rep(BigInt(0), Q), DomainError);

  auto rec = rational_square_class_record(BigInt(5));
  CHECK(rec.m == 2);
  CHECK(rec.l == 4);
  CHECK(rec.r == 1);
  CHECK(rec.sign == -1);
  CHECK(rec.entry_class == "5");
  CHECK(rec.literal == "0,1*sqrt(5);-1/5*sqrt(5),0");
}
