#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idealforge/context.hpp"

namespace idealforge {

struct WitnessPart {
  std::string role;
  RingPtr ring;
  std::vector<Elem> elements;  // element tuple, or the generators of an ideal
  bool is_ideal = false;
};

struct Witness {
  std::string note;
  std::vector<WitnessPart> parts;
  // Ideal of the subject ring the instance was scoped to, used for replay.
  std::optional<ElementSet> scope;
};

// One theorem over all instances drawn from one subject ring.
struct TheoremVerdict {
  std::string theorem_id;
  std::size_t subject_index = 0;
  std::string subject;
  std::size_t checked = 0;
  std::size_t nonvacuous = 0;
  std::size_t failures = 0;
  std::size_t guard_outside = 0;  // guarded converse violated where its guard is false
  std::optional<Witness> witness;  // first failure, else first guard-outside case
  bool replayed = false;           // the failure witness reproduced on a fresh context

  bool holds() const noexcept { return failures == 0; }
  bool vacuous() const noexcept { return nonvacuous == 0; }
};

struct TheoremInfo {
  std::string_view id;
  std::string_view statement;
  std::string_view subjects;  // "any", "product", "idealization", "amalgamation"
};

const std::vector<TheoremInfo>& catalog();
bool is_known_theorem(std::string_view id);

// Throws unknown_theorem for any id outside the catalog.
std::vector<std::string> resolve_theorem_ids(const std::vector<std::string>& requested);

// An explicit instance: a subject, optionally narrowed to the listed ideals
// of its ring (empty means every ideal).
struct Instance {
  Subject subject;
  std::vector<ElementSet> ideals;
};

// Throws unknown_theorem, or instance_shape_mismatch when the theorem needs
// a construction the subject does not carry.
TheoremVerdict check_theorem(std::string_view id, const Instance& instance);

// Whether the theorem has anything to say about this subject.
bool applies(std::string_view id, const Subject& subject);

struct TheoremSummary {
  std::string theorem_id;
  std::size_t subjects = 0;
  std::size_t checked = 0;
  std::size_t nonvacuous = 0;
  std::size_t failures = 0;
  std::size_t guard_outside = 0;
};

struct SweepOptions {
  std::vector<std::string> theorems;  // empty means the whole catalog
  unsigned jobs = 1;
};

struct SweepResult {
  std::vector<TheoremVerdict> verdicts;  // subject order, then catalog order
  std::vector<TheoremSummary> summary;   // catalog order
  std::vector<std::string> diagnostics;
};

SweepResult sweep(const std::vector<Subject>& subjects, const SweepOptions& options);

}  // namespace idealforge
