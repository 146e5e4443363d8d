#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "idealforge/constructors.hpp"
#include "idealforge/ideal.hpp"

namespace idealforge {

// Outcome of one definitional scan. A failing verdict carries the
// lexicographically least falsifying tuple by element index.
struct PredicateVerdict {
  std::string predicate;
  bool holds = true;
  std::vector<Elem> witness;
};

// Stable predicate names, also the vocabulary of search expressions.
namespace predicate {
inline constexpr std::string_view weakly_j = "weaklyJ";
inline constexpr std::string_view j = "J";
inline constexpr std::string_view quasi_j = "quasiJ";
inline constexpr std::string_view weakly_prime = "weaklyPrime";
inline constexpr std::string_view prime = "prime";
inline constexpr std::string_view n_ideal = "nIdeal";
inline constexpr std::string_view superfluous = "superfluous";
inline constexpr std::string_view s_presimplifiable = "sPresimp";
inline constexpr std::string_view weakly_j_mult_closed = "weaklyJMultClosed";
}  // namespace predicate

// All ideal predicates below throw improper_ideal for I = R.

// 0 != ab in I, a outside J(R)  =>  b in I.       witness (a, b)
PredicateVerdict is_weakly_j_ideal(const Ideal& ideal);
// ab in I, a outside J(R)  =>  b in I.            witness (a, b)
PredicateVerdict is_j_ideal(const Ideal& ideal);
// sqrt(I) is a J-ideal.                           witness (a, b) against sqrt(I)
PredicateVerdict is_quasi_j_ideal(const Ideal& ideal);
// 0 != ab in I  =>  a in I or b in I.             witness (a, b)
PredicateVerdict is_weakly_prime(const Ideal& ideal);
PredicateVerdict is_prime(const Ideal& ideal);
// ab in I, a outside N(R)  =>  b in I.            witness (a, b)
PredicateVerdict is_n_ideal(const Ideal& ideal);
// I + K = R  =>  K = R over the lattice.          witness: generators of K
PredicateVerdict is_superfluous(const Ideal& ideal);

// Strong zero divisors of R/I: cosets C with some a in C and b outside I
// such that ab lies in I and ab != 0. Empty for I = {0}.
struct StrongZeroDivisors {
  QuotientRing quotient;
  ElementSet cosets;  // over quotient.ring
};
StrongZeroDivisors strong_zero_divisors(const Ideal& ideal);

// SZ(R/I) inside J(R/I).                           witness (a, b) with a + I outside J(R/I)
PredicateVerdict is_s_presimplifiable_quotient(const Ideal& ideal);

// ab in S or ab = 0 for a outside J(R), b in S. Throws
// definition_precondition unless R - J(R) is inside S.   witness (a, b)
PredicateVerdict is_weakly_j_mult_closed(const MultSet& set);

// Re-checks a failing verdict's witness against the definition. True when
// the witness reproduces the failure.
bool replay(const PredicateVerdict& verdict, const Ideal& ideal);
bool replay(const PredicateVerdict& verdict, const MultSet& set);

struct IdealReport {
  std::vector<PredicateVerdict> verdicts;  // fixed order, see ideal_report
  bool in_jacobson = false;
  bool in_nilradical = false;
  bool square_zero = false;

  const PredicateVerdict& operator[](std::string_view name) const;
};

// weaklyJ, J, quasiJ, weaklyPrime, prime, nIdeal, superfluous, sPresimp,
// weaklyJMultClosed (false when R - J(R) is not inside R - I).
IdealReport ideal_report(const Ideal& ideal);

}  // namespace idealforge
