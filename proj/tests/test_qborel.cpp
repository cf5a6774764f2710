#include <doctest.h>

#include "support.hpp"

using namespace qborel;
using namespace testsupport;

TEST_CASE("q_closure on small posets") {
  Ring r = ring_of("abc");
  Poset vee = vee_poset();
  CHECK(q_closure(vee, {mono(r, "ab")}) == ideal_of(r, {"a*b", "a^2"}));

  Ring rxyz = ring_of("xyz");
  Poset y1 = Poset::y_poset(1);
  CHECK(q_closure(y1, {mono(rxyz, "yz")}) ==
        ideal_of(rxyz, {"y*z", "x*y", "x*z", "x^2"}));

  Poset anti = Poset::antichain(3);
  Monomial m = mono(r, "a2b");
  CHECK(q_closure(anti, {m}) == MonomialIdeal::make(3, {m}));
}

TEST_CASE("q_closure node limit") {
  Poset chain = Poset::chain(6);
  Monomial top = Monomial::var(6, 5, 6);
  CHECK_THROWS_AS(q_closure(chain, {top}, 10), LimitError);
}

TEST_CASE("is_q_borel") {
  Ring r = ring_of("abc");
  CHECK(is_q_borel(Poset::chain(3), ideal_of(r, {"a^2", "a*b", "b^2"})));
  Ring r2 = ring_of("ab");
  CHECK_FALSE(is_q_borel(Poset::chain(2), ideal_of(r2, {"b"})));
  CHECK(is_q_borel(vee_poset(), ideal_of(r, {"a*b", "a^2"})));
}

TEST_CASE("checking moves on minimal generators decides stability") {
  // the generator-only scan must agree with moving every monomial of the
  // ideal up to a degree bound
  std::mt19937_64 rng(37);
  for (int round = 0; round < 40; ++round) {
    int n = 2 + static_cast<int>(rng() % 3);
    Poset q = random_poset(rng, n);
    std::vector<Monomial> gens;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 3); ++i)
      gens.push_back(random_monomial(rng, n, 3));
    MonomialIdeal ideal = MonomialIdeal::make(n, gens);
    bool full_scan = true;
    for (Exponent d = 0; d <= ideal.max_gen_degree() + 2 && full_scan; ++d)
      for_each_monomial_of_degree(n, d, [&](const Monomial& m) {
        if (!ideal.contains(m)) return;
        for (int j = 0; j < n && full_scan; ++j) {
          if (m[j] <= 0) continue;
          for (int i = 0; i < j; ++i)
            if (q.less(i, j) && !ideal.contains(m.swap_var(j, i)))
              full_scan = false;
        }
      });
    CHECK(is_q_borel(q, ideal) == full_scan);
  }
}

TEST_CASE("closures are stable and equigenerated from one generator") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 50; ++round) {
    int n = 2 + static_cast<int>(rng() % 4);
    Poset q = random_poset(rng, n);
    Monomial m = random_monomial(rng, n, 4);
    MonomialIdeal closure = q_closure(q, {m});
    CHECK(is_q_borel(q, closure));
    CHECK(closure.is_equigenerated());
    CHECK(closure.max_gen_degree() == m.degree());
  }
}

TEST_CASE("refining the poset enlarges the closure") {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 40; ++round) {
    int n = 2 + static_cast<int>(rng() % 4);
    Poset coarse = random_poset(rng, n, 25);
    // refine by adding the chain relations on top
    std::vector<std::pair<int, int>> rel = coarse.covers();
    for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
    Poset fine = Poset::build(n, rel);
    CHECK(fine.refines(coarse));
    Monomial m = random_monomial(rng, n, 4);
    CHECK(q_closure(fine, {m}).contains_ideal(q_closure(coarse, {m})));
  }
}

TEST_CASE("max_stabilizing_poset") {
  // symmetric powers stabilize under the full chain
  Ring r3 = ring_of("abc");
  MonomialIdeal md = power(ideal_of(r3, {"a", "b", "c"}), 2);
  CHECK(max_stabilizing_poset(md) == Poset::chain(3));

  Ring rxyz = ring_of("xyz");
  MonomialIdeal qyz = ideal_of(rxyz, {"y*z", "x*y", "x*z", "x^2"});
  CHECK(max_stabilizing_poset(qyz) == Poset::y_poset(1));

  Ring r2 = ring_of("ab");
  CHECK(max_stabilizing_poset(ideal_of(r2, {"a*b^2"})) == Poset::antichain(2));
}

TEST_CASE("min_q_generators") {
  Ring r2 = ring_of("ab");
  Poset chain2 = Poset::chain(2);
  MonomialIdeal borel = ideal_of(r2, {"a^2", "a*b", "b^2"});
  CHECK(min_q_generators(chain2, borel) ==
        std::vector<Monomial>{mono(r2, "b^2")});

  Ring r3 = ring_of("abc");
  CHECK(min_q_generators(vee_poset(), ideal_of(r3, {"a*b", "a^2"})) ==
        std::vector<Monomial>{mono(r3, "a*b")});

  MonomialIdeal any = ideal_of(r3, {"a^2", "b*c"});
  CHECK(min_q_generators(Poset::antichain(3), any) == any.gens());

  CHECK_THROWS_AS(min_q_generators(chain2, ideal_of(r2, {"b"})), MathError);
}

TEST_CASE("principal_factorization") {
  Ring r6 = ring_of("abcdef");
  Poset q6 = example_poset6();
  Monomial def = mono(r6, "d*e*f");
  PrimeFactorization f = principal_factorization(q6, def);
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors.at(MonomialPrime(6, 0b001001)) == 1);
  CHECK(f.factors.at(MonomialPrime(6, 0b010110)) == 1);
  CHECK(f.factors.at(MonomialPrime(6, 0b101101)) == 1);
  CHECK(expand_factorization(6, f) == q_closure(q6, {def}));

  Ring r3 = ring_of("abc");
  Poset chain3 = Poset::chain(3);
  PrimeFactorization g = principal_factorization(chain3, mono(r3, "c^2"));
  REQUIRE(g.factors.size() == 1);
  CHECK(g.factors.at(MonomialPrime(3, 0b111)) == 2);

  PrimeFactorization h =
      principal_factorization(Poset::antichain(2), mono(ring_of("ab"), "a2b"));
  CHECK(h.factors.at(MonomialPrime(2, 0b01)) == 2);
  CHECK(h.factors.at(MonomialPrime(2, 0b10)) == 1);
}

TEST_CASE("factorization product equals closure on random principals") {
  std::mt19937_64 rng(47);
  for (int round = 0; round < 40; ++round) {
    int n = 2 + static_cast<int>(rng() % 3);
    Poset q = random_poset(rng, n);
    Monomial m = random_monomial(rng, n, 4);
    CHECK(expand_factorization(n, principal_factorization(q, m)) ==
          q_closure(q, {m}));
  }
}

TEST_CASE("principal_membership by matching") {
  Ring rxyz = ring_of("xyz");
  Poset y1 = Poset::y_poset(1);
  CHECK(principal_membership(y1, mono(rxyz, "yz"), mono(rxyz, "x^2")));
  CHECK_FALSE(principal_membership(y1, mono(rxyz, "yz"), mono(rxyz, "y^2")));
  CHECK(principal_membership(y1, mono(rxyz, "yz"), mono(rxyz, "yz")));
}

TEST_CASE("membership agrees with closure expansion exhaustively") {
  std::mt19937_64 rng(53);
  for (int n = 2; n <= 4; ++n) {
    for (const Poset& q : all_naturally_labeled_posets(n)) {
      for (int trial = 0; trial < 2; ++trial) {
        Monomial m = random_monomial(rng, n, 3);
        MonomialIdeal closure = q_closure(q, {m});
        for (Exponent d = 0; d <= m.degree() + 2; ++d)
          for_each_monomial_of_degree(n, d, [&](const Monomial& cand) {
            CHECK(principal_membership(q, m, cand) == closure.contains(cand));
          });
      }
    }
  }
}

TEST_CASE("witness_ideal pins the poset") {
  Ring r2 = ring_of("ab");
  CHECK(witness_ideal(Poset::antichain(2)) == ideal_of(r2, {"a^2*b", "a*b^2"}));
  CHECK(witness_ideal(Poset::chain(2)) == ideal_of(r2, {"a^2", "a*b"}));
  CHECK(witness_ideal(Poset::chain(1)) == ideal_of(ring_of("a"), {"a"}));
  for (int n = 1; n <= 3; ++n)
    for (const Poset& q : all_naturally_labeled_posets(n))
      CHECK(max_stabilizing_poset(witness_ideal(q)) == q);
}

TEST_CASE("is_polymatroidal") {
  Ring r2 = ring_of("ab");
  CHECK(is_polymatroidal(ideal_of(r2, {"a*b", "a^2"})));
  CHECK_FALSE(is_polymatroidal(ideal_of(r2, {"a^2", "b^2"})));
  CHECK(is_polymatroidal(ideal_of(r2, {"a^2*b"})));
  CHECK_FALSE(is_polymatroidal(ideal_of(r2, {"a", "b^2"})));  // mixed degrees
}

TEST_CASE("principal closures are polymatroidal") {
  std::mt19937_64 rng(59);
  for (int round = 0; round < 40; ++round) {
    int n = 2 + static_cast<int>(rng() % 3);
    Poset q = random_poset(rng, n);
    CHECK(is_polymatroidal(q_closure(q, {random_monomial(rng, n, 4)})));
  }
}

TEST_CASE("intersections distribute over generating sets") {
  // the intersection of two closures is the sum of the pairwise
  // intersections of their principal parts
  std::mt19937_64 rng(131);
  for (int round = 0; round < 25; ++round) {
    int n = 2 + static_cast<int>(rng() % 3);
    Poset q = random_poset(rng, n);
    std::vector<Monomial> xs, ys;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 2); ++i)
      xs.push_back(random_monomial(rng, n, 3));
    for (int i = 0; i < 1 + static_cast<int>(rng() % 2); ++i)
      ys.push_back(random_monomial(rng, n, 3));
    MonomialIdeal direct = intersect(q_closure(q, xs), q_closure(q, ys));
    std::vector<Monomial> pieces;
    for (const Monomial& x : xs)
      for (const Monomial& y : ys) {
        QBorelIdeal meet = intersect_principal(q, x, y);
        for (const Monomial& g : meet.expansion.gens()) pieces.push_back(g);
      }
    CHECK(MonomialIdeal::make(n, pieces) == direct);
  }
}

TEST_CASE("intersection of principal closures is Q-Borel (worked example)") {
  Ring r = ring_of("abc");
  Poset vee = vee_poset();
  for (Exponent k = 1; k <= 3; ++k) {
    Monomial akb = Monomial::var(3, 0, k) * mono(r, "b");
    Monomial akc = Monomial::var(3, 0, k) * mono(r, "c");
    QBorelIdeal meet = intersect_principal(vee, akb, akc);
    std::vector<Monomial> expected = {
        Monomial::var(3, 0, k + 1),                           // a^{k+1}
        Monomial::var(3, 0, k) * mono(r, "b") * mono(r, "c")  // a^k b c
    };
    std::sort(expected.begin(), expected.end());
    CHECK(meet.q_generators == expected);
  }
}
