#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "idealforge/classifier.hpp"
#include "idealforge/dsl.hpp"
#include "idealforge/ideal.hpp"
#include "idealforge/ring.hpp"

namespace testing {

using namespace idealforge;

inline ElementSet set_of(const Ring& r, std::initializer_list<Elem> members) { return ElementSet(r.order(), members); }

inline Ideal gen(const RingPtr& r, std::initializer_list<Elem> gens) { return ideal_generated_by(r, gens); }

inline Subject ring(const std::string& text) { return dsl::evaluate_ring(text); }

inline Ideal ideal(const Subject& s, const std::string& text) { return dsl::evaluate_ideal(text, s.ring); }

inline std::vector<Elem> members(const ElementSet& s) { return s.members(); }

inline bool holds(const Ideal& i, std::string_view predicate) { return ideal_report(i)[predicate].holds; }

}  // namespace testing
