#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idealforge/context.hpp"

namespace idealforge {

struct IdealizationRecipe {
  std::string base;    // ring expression
  std::string module;  // module expression, e.g. "mod(Z8, 4)"
};

struct AmalgamationRecipe {
  std::string base;    // R
  std::string target;  // S
  std::string hom;     // "id", "mod m", "proj i", "table(...)"
  std::string ideal;   // J, an ideal of S
};

// Construction recipes for a sweep. Zero in a *_max field disables that
// family.
struct CorpusSpec {
  unsigned zn_min = 2;
  unsigned zn_max = 64;
  unsigned product_max = 64;                                // Z_a x Z_b, 2 <= a <= b, a*b <= product_max
  std::vector<std::pair<unsigned, unsigned>> product_pairs;  // explicit pairs instead of product_max
  unsigned quotient_depth = 1;
  unsigned idealization_max = 144;  // Z_n (+) Z_m, m | n, m >= 2, n*m <= idealization_max
  unsigned duplication_max = 12;    // Z_n >< J for every proper J, n <= duplication_max
  unsigned amalgamation_max = 12;   // amalg(Z_n, Z_m, mod m, J), 1 < m < n, m | n, n <= amalgamation_max
  std::vector<IdealizationRecipe> idealizations;
  std::vector<AmalgamationRecipe> amalgamations;
  std::vector<std::string> rings;  // extra ring expressions
  Caps caps;
};

CorpusSpec default_corpus_spec();

// JSON corpus file. Throws Error{corpus_spec}.
CorpusSpec parse_corpus_spec(std::string_view json);
CorpusSpec load_corpus_spec(const std::filesystem::path& path);

struct Corpus {
  std::vector<Subject> subjects;
  std::vector<std::string> diagnostics;  // recipes skipped for caps or errors
};

// Subjects in recipe order: Z_n, products, quotients, idealizations,
// duplications, amalgamations, extra rings. Construction-free rings with
// identical tables appear once.
Corpus build_corpus(const CorpusSpec& spec);

}  // namespace idealforge
