#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

RingData zn_data(unsigned n) {
  RingData d;
  d.order = n;
  d.add.resize(std::size_t{n} * n);
  d.mul.resize(std::size_t{n} * n);
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = 0; b < n; ++b) {
      d.add[a * n + b] = static_cast<Elem>((a + b) % n);
      d.mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  }
  d.zero = 0;
  d.one = 1;
  d.label = "Z" + std::to_string(n);
  return d;
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

TEST_SUITE("ring-core") {
  TEST_CASE("make_zn") {
    auto z6 = make_zn(6);
    CHECK(z6->order() == 6);
    CHECK(z6->label() == "Z6");
    CHECK(members(units(*z6)) == std::vector<Elem>{1, 5});
    CHECK(members(units(*make_zn(2))) == std::vector<Elem>{1});
    auto z32 = make_zn(32);
    for (Elem x = 0; x < 32; ++x) CHECK(units(*z32).test(x) == (x % 2 == 1));
    CHECK(kind_of([] { make_zn(1); }) == ErrorKind::order_out_of_range);
    CHECK(kind_of([] { make_zn(257); }) == ErrorKind::order_out_of_range);
  }

  TEST_CASE("validate_ring reports the first violated axiom") {
    CHECK(validate_ring(zn_data(4))->order() == 4);

    RingData bad = zn_data(4);
    bad.mul[2 * 4 + 2] = 1;
    try {
      validate_ring(bad);
      FAIL("accepted broken tables");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::axiom_violation);
      CHECK_FALSE(e.detail().empty());
      CHECK(e.witness().size() == 3);
    }

    RingData trivial = zn_data(4);
    trivial.one = 0;
    try {
      validate_ring(trivial);
      FAIL("accepted zero = one");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::axiom_violation);
      CHECK(e.detail() == "nontrivial-identity");
    }
  }

  TEST_CASE("radicals") {
    CHECK(members(nilradical(make_zn(6)).members()) == std::vector<Elem>{0});
    CHECK(members(nilradical(make_zn(8)).members()) == std::vector<Elem>{0, 2, 4, 6});
    CHECK(members(jacobson_radical(make_zn(6)).members()) == std::vector<Elem>{0});
    CHECK(members(jacobson_radical(make_zn(2)).members()) == std::vector<Elem>{0});
    auto z32 = make_zn(32);
    CHECK(jacobson_radical(z32).members() == principal_set(*z32, 2));
  }

  TEST_CASE("ring-level predicates") {
    auto z32 = make_zn(32);
    CHECK(is_quasi_local(*z32));
    CHECK(is_presimplifiable(*z32));
    auto z6 = make_zn(6);
    CHECK_FALSE(is_quasi_local(*z6));
    CHECK(is_semiprimitive(*z6));
    auto f7 = make_zn(7);
    CHECK(is_quasi_local(*f7));
    CHECK(is_semiprimitive(*f7));
    CHECK(is_presimplifiable(*f7));
    CHECK(is_quasi_presimplifiable(*f7));
  }

  TEST_CASE("homomorphisms") {
    auto z12 = make_zn(12);
    auto z4 = make_zn(4);
    std::vector<Elem> mod4(12);
    for (Elem x = 0; x < 12; ++x) mod4[x] = x % 4;
    RingHom p = validate_hom(z12, z4, mod4);
    CHECK(p.is_epi());
    CHECK_FALSE(p.is_mono());
    CHECK(members(p.kernel()) == std::vector<Elem>{0, 4, 8});

    RingHom id = identity_hom(make_zn(6));
    CHECK(id.is_mono());
    CHECK(id.is_epi());

    try {
      validate_hom(z4, z4, {0, 2, 0, 2});
      FAIL("accepted 1 -> 2");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::hom_violation);
      CHECK(e.detail() == "preserves-one");
    }
  }

  TEST_CASE("structural invariants over small rings") {
    for (const char* text : {"Z12", "Z2 x Z6", "Z4 (+) mod(Z4, 2)", "Z8 / <4>", "Z4 >< <2>", "poly(Z3, 3)", "loc(Z12, {1, 3, 9})",
                             "amalg(Z6, Z2, mod 2, <1>)"}) {
      CAPTURE(text);
      const Subject s = ring(text);
      const Ring& r = *s.ring;
      CHECK(check_ring_axioms(r).empty());
      const Lattice& lat = lattice(r);
      // two-oracle Jacobson agreement
      CHECK(lat.jacobson == jacobson_by_units(r));
      CHECK(lat.nilradical.subset_of(lat.jacobson));
      if (is_presimplifiable(r)) CHECK(is_quasi_presimplifiable(r));
      for (Elem x = 0; x < r.order(); ++x) CHECK((nilpotency_index(r, x) != 0) == lat.nilradical.test(x));
    }
  }
}
