#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace testing;

TEST_SUITE("ideal-engine") {
  TEST_CASE("generation and enumeration") {
    auto z6 = make_zn(6);
    auto z32 = make_zn(32);
    CHECK(members(gen(z6, {2}).members()) == std::vector<Elem>{0, 2, 4});
    CHECK(members(gen(z32, {16}).members()) == std::vector<Elem>{0, 16});
    CHECK(gen(z6, {}).is_zero());

    CHECK(all_ideals(z6).size() == 4);
    CHECK(all_ideals(z32).size() == 6);
    CHECK(all_ideals(make_zn(2)).size() == 2);

    const auto m6 = maximal_ideals(z6);
    REQUIRE(m6.size() == 2);
    CHECK(m6[0].members() == principal_set(*z6, 3));
    CHECK(m6[1].members() == principal_set(*z6, 2));
    CHECK(maximal_ideals(z32).size() == 1);
    CHECK(maximal_ideals(make_zn(5))[0].is_zero());
  }

  TEST_CASE("lattice order is size then members") {
    auto z12 = make_zn(12);
    const Lattice& lat = lattice(*z12);
    CHECK(lat.ideals.front().count() == 1);
    CHECK(lat.ideals.back().is_full());
    for (std::size_t i = 1; i < lat.size(); ++i) CHECK(canonical_order(lat.ideals[i - 1], lat.ideals[i]) < 0);
  }

  TEST_CASE("j_of_ideal") {
    auto z12 = make_zn(12);
    CHECK(j_of_ideal(gen(z12, {6})).members() == principal_set(*z12, 6));
    CHECK(j_of_ideal(Ideal::zero(make_zn(6))).is_zero());
    auto z32 = make_zn(32);
    CHECK(j_of_ideal(gen(z32, {16})).members() == principal_set(*z32, 2));
    CHECK_THROWS_AS(j_of_ideal(Ideal::whole(z12)), Error);
  }

  TEST_CASE("sum, product, intersection") {
    auto z6 = make_zn(6);
    CHECK(intersect(gen(z6, {2}), gen(z6, {3})).is_zero());
    auto z12 = make_zn(12);
    CHECK(sum(gen(z12, {4}), gen(z12, {6})).members() == principal_set(*z12, 2));
    const Ideal i = gen(z12, {4});
    CHECK(product(i, Ideal::whole(z12)) == i);
    try {
      sum(gen(z6, {2}), gen(make_zn(6), {2}));
      FAIL("mixed rings accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ring_mismatch);
    }
  }

  TEST_CASE("residual and annihilator") {
    auto z12 = make_zn(12);
    CHECK(residual(gen(z12, {6}), set_of(*z12, {2})).members() == principal_set(*z12, 3));
    const Ideal i = gen(z12, {4});
    CHECK(residual(i, set_of(*z12, {1})) == i);
    auto z6 = make_zn(6);
    CHECK(members(annihilator(z6, set_of(*z6, {2})).members()) == std::vector<Elem>{0, 3});
    try {
      residual(i, z12->empty_set());
      FAIL("empty S accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::empty_set);
    }
  }

  TEST_CASE("radical") {
    auto z12 = make_zn(12);
    CHECK(radical(gen(z12, {4})).members() == principal_set(*z12, 2));
    CHECK(radical(Ideal::whole(z12)).members().is_full());
    auto z32 = make_zn(32);
    CHECK(radical(gen(z32, {16})).members() == principal_set(*z32, 2));
  }

  TEST_CASE("zi_set") {
    auto z6 = make_zn(6);
    CHECK(members(zi_set(Ideal::zero(z6))) == std::vector<Elem>{0, 2, 3, 4});
    CHECK(members(zi_set(Ideal::zero(make_zn(7)))) == std::vector<Elem>{0});
    // Z12, I = <4>: brute force gives the non-units outside the 3-part.
    auto z12 = make_zn(12);
    CHECK(members(zi_set(gen(z12, {4}))) == std::vector<Elem>{0, 2, 4, 6, 8, 10});
  }

  TEST_CASE("ideal axioms are enforced") {
    auto z6 = make_zn(6);
    try {
      Ideal(z6, set_of(*z6, {0, 2}));
      FAIL("non-ideal accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::not_an_ideal);
    }
  }

  TEST_CASE("invariants over a ring sample") {
    for (const char* text : {"Z24", "Z36", "Z2 x Z4", "Z3 x Z9", "Z8 (+) mod(Z8, 2)", "Z6 >< <2>", "poly(Z2, 4)"}) {
      CAPTURE(text);
      const Subject s = ring(text);
      const auto ideals = all_ideals(s.ring);
      const Lattice& lat = lattice(*s.ring);
      auto in_lattice = [&](const Ideal& i) { return lat.find(i.members()).has_value(); };
      std::mt19937 rng(7);
      std::uniform_int_distribution<std::size_t> pick(0, s.ring->order() - 1);
      for (const Ideal& i : ideals) {
        const Ideal r = radical(i);
        CHECK(i.subset_of(r));
        CHECK(radical(r) == r);
        ElementSet sub(s.ring->order());
        for (int k = 0; k < 3; ++k) sub.set(pick(rng));
        CHECK(i.subset_of(residual(i, sub)));
        for (const Ideal& k : ideals) {
          CHECK(in_lattice(sum(i, k)));
          CHECK(in_lattice(product(i, k)));
          CHECK(in_lattice(intersect(i, k)));
          // monotone in I, antitone in S
          if (i.subset_of(k)) CHECK(residual(i, sub).subset_of(residual(k, sub)));
          ElementSet bigger = sub | k.members();
          CHECK(residual(i, bigger).subset_of(residual(i, sub)));
        }
      }
      // enumeration agrees with the uncached path
      CHECK(enumerate_ideal_sets(*s.ring).size() == lat.size());
    }
  }
}
