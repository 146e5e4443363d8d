#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "idealforge/classifier.hpp"
#include "idealforge/search.hpp"
#include "idealforge/theorem_lab.hpp"

namespace idealforge::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "idealforge 0.1.0";

// Indices plus display labels for elements of `ring`.
Json elements_json(const Ring& ring, const std::vector<Elem>& elements);
Json ideal_json(const Ring& ring, const ElementSet& ideal);
Json witness_json(const Witness& witness, bool replayed);

struct ClassifyInput {
  std::string ring_text;
  std::string ideal_text;
  const Subject* subject = nullptr;
  const Ideal* ideal = nullptr;
  const IdealReport* verdicts = nullptr;
  const StrongZeroDivisors* strong_zero_divisors = nullptr;
};
Json classify(const ClassifyInput& in);

struct VerifyInput {
  std::vector<std::string> suite;
  std::string corpus;  // path, or "default"
  bool all_verdicts = false;
  const std::vector<Subject>* subjects = nullptr;
  const std::vector<std::string>* corpus_diagnostics = nullptr;
  const SweepResult* result = nullptr;
};
Json verify(const VerifyInput& in);

struct SearchInput {
  std::string where;
  std::string corpus;
  std::size_t limit = 0;
  const std::vector<Subject>* subjects = nullptr;
  const std::vector<SearchHit>* hits = nullptr;
};
Json search(const SearchInput& in);

// Ideal lattice of one ring with its radicals and ring-level properties.
Json enumerate_ring(const std::string& ring_text, const Subject& subject);
// Corpus listing.
Json enumerate_corpus(const std::string& corpus, const std::vector<Subject>& subjects,
                      const std::vector<std::string>& diagnostics);

// Null unless the caller asked for timing.
void set_elapsed(Json& report, std::optional<double> ms);

// Two-space indented dump with a trailing newline.
std::string render(const Json& report);

}  // namespace idealforge::report
