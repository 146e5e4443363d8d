// Frozen values from an independent brute-force oracle over Z_n (n <= 36)
// and small products Z_a x Z_b.
#include <doctest.h>

#include <fstream>

#include <json.hpp>

#include "support.hpp"

using namespace testing;

namespace {

ElementSet to_set(const Ring& r, const nlohmann::json& members) {
  ElementSet s(r.order());
  for (const auto& m : members) {
    if (m.is_array()) {
      s.set(*r.pair_index(m[0].get<std::size_t>(), m[1].get<std::size_t>()));
    } else {
      s.set(m.get<std::size_t>());
    }
  }
  return s;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("small rings match the frozen oracle") {
    std::ifstream in(IDEALFORGE_TEST_DATA "/oracle_small_rings.json");
    REQUIRE(in);
    const auto fixtures = nlohmann::json::parse(in);
    REQUIRE(fixtures.size() > 40);
    for (const auto& f : fixtures) {
      const Subject s = ring(f["ring"].get<std::string>());
      const Ring& r = *s.ring;
      CAPTURE(s.recipe);
      REQUIRE(r.order() == f["order"].get<std::size_t>());
      const Lattice& lat = lattice(r);
      CHECK(lat.units.count() == f["units"].get<std::size_t>());
      CHECK(lat.jacobson == to_set(r, f["jacobson"]));
      CHECK(lat.nilradical == to_set(r, f["nilradical"]));
      CHECK(lat.size() == f["ideals"].size() + 1);  // the oracle lists proper ideals
      for (const auto& fi : f["ideals"]) {
        const ElementSet members = to_set(r, fi["members"]);
        REQUIRE(lat.find(members).has_value());
        const IdealReport rep = ideal_report(Ideal(s.ring, members));
        CAPTURE(dsl::ideal_text(r, members));
        for (const char* p : {"weaklyJ", "J", "nIdeal", "weaklyPrime", "prime"}) {
          CAPTURE(p);
          CHECK(rep[p].holds == fi[p].get<bool>());
        }
      }
    }
  }
}
