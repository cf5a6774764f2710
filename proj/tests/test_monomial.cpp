#include <doctest.h>

#include "support.hpp"

using namespace qborel;
using namespace testsupport;

TEST_CASE("minimalize removes divisible generators") {
  Ring r = ring_of("ab");
  CHECK(ideal_of(r, {"a^2", "a^2*b", "a*b"}) == ideal_of(r, {"a^2", "a*b"}));
  CHECK(ideal_of(r, {}) == MonomialIdeal::zero(2));
  CHECK(ideal_of(r, {"a", "b", "a*b"}) == ideal_of(r, {"a", "b"}));
  CHECK(minimalize({}).empty());
}

TEST_CASE("minimalize is idempotent and order-insensitive") {
  Ring r = ring_of("abc");
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    std::vector<Monomial> gens;
    int k = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < k; ++i) gens.push_back(random_monomial(rng, 3, 4));
    std::vector<Monomial> once = minimalize(gens);
    CHECK(minimalize(once) == once);
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(minimalize(gens) == once);
  }
}

TEST_CASE("product and power") {
  Ring r = ring_of("ab");
  MonomialIdeal a = ideal_of(r, {"a"});
  MonomialIdeal ab = ideal_of(r, {"a", "b"});
  CHECK(product(a, ab) == ideal_of(r, {"a^2", "a*b"}));
  CHECK(power(ab, 2) == ideal_of(r, {"a^2", "a*b", "b^2"}));
  CHECK(power(ab, 0) == MonomialIdeal::unit_ideal(2));
}

TEST_CASE("triple product of primes matches brute-force expansion") {
  Ring r = ring_of("abcdef");
  MonomialIdeal p1 = ideal_of(r, {"a", "d"});
  MonomialIdeal p2 = ideal_of(r, {"b", "c", "e"});
  MonomialIdeal p3 = ideal_of(r, {"a", "c", "d", "f"});
  MonomialIdeal via_op = product(product(p1, p2), p3);
  // oracle: expand all triples directly, then minimalize
  std::vector<Monomial> triples;
  for (const Monomial& x : p1.gens())
    for (const Monomial& y : p2.gens())
      for (const Monomial& z : p3.gens()) triples.push_back(x * y * z);
  MonomialIdeal via_brute = MonomialIdeal::make(6, triples);
  CHECK(via_op == via_brute);
  CHECK(via_op.gens().size() == 21);
}

TEST_CASE("intersection") {
  Ring r = ring_of("ab");
  CHECK(intersect(ideal_of(r, {"a"}), ideal_of(r, {"b"})) ==
        ideal_of(r, {"a*b"}));
  Ring ray = ring_of("ay");
  MonomialIdeal lhs = ideal_of(ray, {"a^2", "y"});
  MonomialIdeal rhs = ideal_of(ray, {"a", "y^2"});
  MonomialIdeal meet = intersect(lhs, rhs);
  // oracle: enumerate membership in both sides up to degree 2
  std::vector<Monomial> collected;
  for (Exponent d = 0; d <= 2; ++d)
    for_each_monomial_of_degree(2, d, [&](const Monomial& m) {
      if (lhs.contains(m) && rhs.contains(m)) collected.push_back(m);
    });
  CHECK(meet == MonomialIdeal::make(2, collected));
  CHECK(meet == ideal_of(ray, {"a^2", "a*y", "y^2"}));
  CHECK(intersect(lhs, lhs) == lhs);
}

TEST_CASE("intersection and product are contained in both factors") {
  Ring r = ring_of("abc");
  std::mt19937_64 rng(11);
  for (int round = 0; round < 30; ++round) {
    std::vector<Monomial> ga, gb;
    for (int i = 0; i < 3; ++i) {
      ga.push_back(random_monomial(rng, 3, 3));
      gb.push_back(random_monomial(rng, 3, 3));
    }
    MonomialIdeal a = MonomialIdeal::make(3, ga);
    MonomialIdeal b = MonomialIdeal::make(3, gb);
    MonomialIdeal meet = intersect(a, b);
    CHECK(a.contains_ideal(meet));
    CHECK(b.contains_ideal(meet));
    CHECK(meet.contains_ideal(product(a, b)));
  }
}

TEST_CASE("colon ideal") {
  Ring r = ring_of("ab");
  CHECK(quotient(ideal_of(r, {"a^2", "a*b"}), ideal_of(r, {"a"})) ==
        ideal_of(r, {"a", "b"}));
  CHECK(quotient(ideal_of(r, {"a*b"}), ideal_of(r, {"a", "b"})) ==
        ideal_of(r, {"a*b"}));
  MonomialIdeal i = ideal_of(r, {"a^2", "b^3"});
  CHECK(quotient(i, MonomialIdeal::unit_ideal(2)) == i);
}

TEST_CASE("colon characterization up to degree 6") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 20; ++round) {
    std::vector<Monomial> ga, gb;
    for (int i = 0; i < 3; ++i) ga.push_back(random_monomial(rng, 3, 3));
    for (int i = 0; i < 2; ++i) gb.push_back(random_monomial(rng, 3, 2));
    MonomialIdeal a = MonomialIdeal::make(3, ga);
    MonomialIdeal b = MonomialIdeal::make(3, gb);
    MonomialIdeal colon = quotient(a, b);
    for (Exponent d = 0; d <= 6; ++d)
      for_each_monomial_of_degree(3, d, [&](const Monomial& m) {
        bool lhs = colon.contains(m);
        bool rhs = true;
        for (const Monomial& h : b.gens())
          rhs = rhs && a.contains(m * h);
        CHECK(lhs == rhs);
      });
  }
}

TEST_CASE("membership") {
  Ring r = ring_of("ab");
  MonomialIdeal i = ideal_of(r, {"a^2", "a*b"});
  CHECK(i.contains(mono(r, "a^2*b")));
  CHECK_FALSE(i.contains(mono(r, "b^3")));
  CHECK_FALSE(MonomialIdeal::zero(2).contains(mono(r, "a")));
  CHECK(MonomialIdeal::unit_ideal(2).contains(Monomial::unit(2)));
}

TEST_CASE("graded_count") {
  Ring r3 = ring_of("abc");
  CHECK(graded_count(power(ideal_of(r3, {"a", "b", "c"}), 2), 2) == 6);
  Ring r2 = ring_of("ab");
  CHECK(graded_count(ideal_of(r2, {"a*b"}), 2) == 1);
  CHECK(graded_count(ideal_of(r3, {"a^2", "a*b", "a*c", "b*c"}), 3) == 8);
}

TEST_CASE("graded_count equals brute-force membership filter") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 20; ++round) {
    std::vector<Monomial> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_monomial(rng, 3, 3));
    MonomialIdeal a = MonomialIdeal::make(3, gens);
    for (Exponent d = 0; d <= 4; ++d) {
      long direct = 0;
      for_each_monomial_of_degree(3, d, [&](const Monomial& m) {
        if (a.contains(m)) ++direct;
      });
      CHECK(graded_count(a, d) == direct);
    }
  }
}

TEST_CASE("canonical generator order is degree then descending revlex") {
  Ring r = ring_of("abc");
  MonomialIdeal i = ideal_of(r, {"b*c", "a^2", "a*c", "b^2", "a*b"});
  std::vector<std::string> got;
  for (const Monomial& g : i.gens()) got.push_back(g.str(r.names));
  CHECK(got == std::vector<std::string>{"a^2", "a*b", "b^2", "a*c", "b*c"});
}

TEST_CASE("monomial text forms") {
  Ring r = ring_of("ab");
  CHECK(mono(r, "a^2*b") == mono(r, "a2b"));
  CHECK(mono(r, "a2b").degree() == 3);
  CHECK(mono(r, "1").is_unit());
}
