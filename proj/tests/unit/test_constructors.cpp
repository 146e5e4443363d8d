#include <doctest.h>

#include "idealforge/constructors.hpp"
#include "support.hpp"

using namespace testing;

namespace {

bool same_tables(const Ring& a, const Ring& b) {
  return a.order() == b.order() && std::ranges::equal(a.add_table(), b.add_table()) &&
         std::ranges::equal(a.mul_table(), b.mul_table());
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::io_error;
}

}  // namespace

TEST_SUITE("constructors") {
  TEST_CASE("quotient rings") {
    auto z12 = make_zn(12);
    const QuotientRing q = quotient_ring(gen(z12, {4}));
    CHECK(q.ring->order() == 4);
    CHECK(same_tables(*q.ring, *make_zn(4)));
    CHECK(q.projection.is_epi());
    CHECK(same_tables(*quotient_ring(Ideal::zero(z12)).ring, *z12));
    CHECK(quotient_ring(gen(make_zn(8), {4})).ring->order() == 4);
    CHECK(kind_of([&] { quotient_ring(Ideal::whole(z12)); }) == ErrorKind::improper_ideal);
  }

  TEST_CASE("products") {
    const ProductRing p = product_ring(make_zn(2), make_zn(3));
    CHECK(p.ring->order() == 6);
    CHECK(lattice(*p.ring).size() == 4);
    CHECK(maximal_ideals(product_ring(make_zn(2), make_zn(2)).ring).size() == 2);
    CHECK(kind_of([] { product_ring(make_zn(100), make_zn(100)); }) == ErrorKind::order_cap_exceeded);
    CHECK(p.ring->element_label(*p.ring->pair_index(1, 2)) == "(1,2)");
  }

  TEST_CASE("idealization") {
    auto z6 = make_zn(6);
    const Idealization d = idealization(z6, regular_module(z6));
    CHECK(d.ring->order() == 36);
    // J(Z6 (+) Z6) = {0} (+) Z6
    ElementSet expect(36);
    for (Elem x = 0; x < 6; ++x) expect.set(*d.ring->pair_index(0, x));
    CHECK(lattice(*d.ring).jacobson == expect);

    auto z4 = make_zn(4);
    const Idealization e = idealization(z4, zn_module(z4, 2));
    CHECK(e.ring->order() == 8);
    CHECK(is_quasi_local(*e.ring));

    const Idealization z = idealization(z6, zero_module(z6));
    CHECK(z.ring->order() == 6);
    CHECK(lattice(*z.ring).size() == lattice(*z6).size());
  }

  TEST_CASE("ideals of an idealization") {
    auto z6 = make_zn(6);
    const Idealization d = idealization(z6, regular_module(z6));
    const Ideal whole_m = ideal_in_idealization(d, Ideal::zero(z6), ElementSet::full(6));
    CHECK(whole_m.size() == 6);
    CHECK(kind_of([&] { ideal_in_idealization(d, gen(z6, {2}), ElementSet(6, {0})); }) ==
          ErrorKind::containment_violation);
    CHECK(ideal_in_idealization(d, Ideal::whole(z6), ElementSet::full(6)).members().is_full());
  }

  TEST_CASE("amalgamations") {
    auto z4 = make_zn(4);
    const Amalgamation a = amalgamation({z4, z4, identity_hom(z4), gen(z4, {2})});
    CHECK(a.ring->order() == 8);
    CHECK(check_ring_axioms(*a.ring).empty());

    const Amalgamation diag = amalgamation({z4, z4, identity_hom(z4), Ideal::zero(z4)});
    CHECK(diag.ring->order() == 4);

    auto z6 = make_zn(6);
    auto z2 = make_zn(2);
    const Amalgamation m = amalgamation({z6, z2, validate_hom(z6, z2, {0, 1, 0, 1, 0, 1}), Ideal::whole(z2)});
    CHECK(m.ring->order() == 12);
  }

  TEST_CASE("amalgamated ideals") {
    auto z4 = make_zn(4);
    const Amalgamation a = amalgamation({z4, z4, identity_hom(z4), gen(z4, {2})});
    CHECK(amalgamated_ideal_I(a, gen(z4, {2})).size() == 4);
    CHECK(amalgamated_ideal_I(a, Ideal::zero(z4)).members() == a.zero_times_ideal);
    CHECK(amalgamated_ideal_I(a, Ideal::whole(z4)).members().is_full());

    // K-bar for K = f(R)+J is everything
    CHECK(amalgamated_ideal_K(a, Ideal::whole(a.subring)).members().is_full());
    // K = <2> of the subring: pairs (x, x+j) with x+j in <2>
    const Ideal k2 = restrict_to_subring(a, principal_set(*z4, 2));
    const Ideal bar = amalgamated_ideal_K(a, k2);
    bar.members().for_each([&](Elem e) {
      const auto [r, s] = a.ring->pairs()->coords[e];
      CHECK(s % 2 == 0);
      CHECK((s + 4 - r) % 2 == 0);
    });

    // I join T with T = J reduces to I join J; T outside J is rejected.
    const Ideal j_sub = restrict_to_subring(a, principal_set(*z4, 2));
    CHECK(amalgamated_ideal_T(a, gen(z4, {2}), j_sub) == amalgamated_ideal_I(a, gen(z4, {2})));
    CHECK(kind_of([&] { amalgamated_ideal_T(a, gen(z4, {2}), Ideal::whole(a.subring)); }) ==
          ErrorKind::containment_violation);
  }

  TEST_CASE("localization") {
    auto z6 = make_zn(6);
    const Localization l = localization({z6, set_of(*z6, {1, 3})});
    CHECK(l.ring->order() == 2);
    const Localization t = localization({z6, set_of(*z6, {1})});
    CHECK(t.ring->order() == 6);
    CHECK(t.canonical.is_mono());
    CHECK(t.canonical.is_epi());
    CHECK(kind_of([&] { localization({z6, set_of(*z6, {0, 1})}); }) == ErrorKind::invalid_mult_set);
    // inverting units changes nothing
    auto z9 = make_zn(9);
    const Localization u = localization({z9, units(*z9)});
    CHECK(u.canonical.is_mono());
    CHECK(u.canonical.is_epi());
  }

  TEST_CASE("truncated polynomials") {
    auto p = truncated_poly(make_zn(2), 2);
    CHECK(p->order() == 4);
    CHECK(is_quasi_local(*p));
    // x is the element with coefficient vector (0, 1): index 0 + 1*2
    CHECK(nilpotency_index(*p, 2) == 2);
    CHECK(lattice(*p).jacobson == principal_set(*p, 2));
    const auto constants = poly_constants(p, make_zn(2));
    const ElementSet x = principal_set(*p, 2);
    std::size_t inside = 0;
    for (Elem c : constants) inside += x.test(c);
    CHECK(inside == 1);  // only the zero constant
    CHECK(kind_of([] { truncated_poly(make_zn(16), 4); }) == ErrorKind::order_cap_exceeded);
  }

  TEST_CASE("radical laws hold on constructed families") {
    for (unsigned n = 2; n <= 12; ++n) {
      auto zn = make_zn(n);
      for (unsigned m = 2; m <= n; ++m) {
        if (n % m) continue;
        const Idealization d = idealization(zn, zn_module(zn, m));
        ElementSet expect(d.ring->order());
        lattice(*zn).jacobson.for_each([&](Elem r) {
          for (Elem x = 0; x < m; ++x) expect.set(*d.ring->pair_index(r, x));
        });
        CHECK(lattice(*d.ring).jacobson == expect);
      }
    }
  }
}
