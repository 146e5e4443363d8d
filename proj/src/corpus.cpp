#include "idealforge/corpus.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "idealforge/dsl.hpp"

namespace idealforge {

namespace {

using nlohmann::json;

[[noreturn]] void bad_spec(const std::string& message) { throw Error(ErrorKind::corpus_spec, message); }

unsigned get_uint(const json& j, const char* key) {
  if (!j.is_number_unsigned()) bad_spec(std::string(key) + " must be a non-negative integer");
  const auto v = j.get<std::uint64_t>();
  if (v > 1'000'000) bad_spec(std::string(key) + " is too large");
  return static_cast<unsigned>(v);
}

std::string idealization_expr(const IdealizationRecipe& r) { return "(" + r.base + ") (+) " + r.module; }

std::string amalgamation_expr(const AmalgamationRecipe& r) {
  return "amalg(" + r.base + ", " + r.target + ", " + r.hom + ", " + r.ideal + ")";
}

std::string get_string(const json& obj, const char* key, const char* where) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) bad_spec(std::string(where) + " needs a string field '" + key + "'");
  return it->get<std::string>();
}

bool same_tables(const Ring& a, const Ring& b) {
  return a.order() == b.order() && a.zero() == b.zero() && a.one() == b.one() &&
         std::equal(a.add_table().begin(), a.add_table().end(), b.add_table().begin()) &&
         std::equal(a.mul_table().begin(), a.mul_table().end(), b.mul_table().begin());
}

class Builder {
 public:
  explicit Builder(const CorpusSpec& spec) : spec_(spec) {}

  Corpus corpus;

  // Evaluates a ring expression, recording failures as diagnostics.
  const Subject* add(const std::string& text) {
    try {
      return push(dsl::evaluate_ring(text, spec_.caps));
    } catch (const Error& e) {
      corpus.diagnostics.push_back(text + ": " + e.what());
      return nullptr;
    }
  }

  const Subject* push(Subject s) {
    const bool plain = !s.product && !s.idealization && !s.amalgamation;
    if (plain) {
      auto& bucket = seen_[s.ring->content_hash()];
      for (const RingPtr& r : bucket) {
        if (same_tables(*r, *s.ring)) return nullptr;
      }
      bucket.push_back(s.ring);
    }
    corpus.subjects.push_back(std::move(s));
    return &corpus.subjects.back();
  }

 private:
  const CorpusSpec& spec_;
  std::map<std::uint64_t, std::vector<RingPtr>> seen_;
};

std::string zn(unsigned n) { return "Z" + std::to_string(n); }

}  // namespace

CorpusSpec default_corpus_spec() { return CorpusSpec{}; }

CorpusSpec parse_corpus_spec(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad_spec(std::string("corpus spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) bad_spec("corpus spec must be a JSON object");

  // A file describes exactly the families it names.
  CorpusSpec s;
  s.zn_max = 0;
  s.product_max = 0;
  s.quotient_depth = 0;
  s.idealization_max = 0;
  s.duplication_max = 0;
  s.amalgamation_max = 0;

  for (const auto& [key, v] : j.items()) {
    if (key == "zn_min") {
      s.zn_min = get_uint(v, "zn_min");
    } else if (key == "zn_max") {
      s.zn_max = get_uint(v, "zn_max");
    } else if (key == "product_pairs") {
      if (v.is_number()) {
        s.product_max = get_uint(v, "product_pairs");
      } else if (v.is_array()) {
        for (const auto& p : v) {
          if (!p.is_array() || p.size() != 2) bad_spec("product_pairs entries must be [a, b]");
          s.product_pairs.emplace_back(get_uint(p[0], "product_pairs"), get_uint(p[1], "product_pairs"));
        }
      } else {
        bad_spec("product_pairs must be an integer bound or a list of [a, b]");
      }
    } else if (key == "quotient_depth") {
      s.quotient_depth = get_uint(v, "quotient_depth");
    } else if (key == "idealization_max") {
      s.idealization_max = get_uint(v, "idealization_max");
    } else if (key == "duplication_max") {
      s.duplication_max = get_uint(v, "duplication_max");
    } else if (key == "amalgamation_max") {
      s.amalgamation_max = get_uint(v, "amalgamation_max");
    } else if (key == "idealizations") {
      if (!v.is_array()) bad_spec("idealizations must be a list");
      for (const auto& e : v) {
        if (!e.is_object()) bad_spec("idealizations entries must be objects");
        s.idealizations.push_back({get_string(e, "base", "idealization"), get_string(e, "module", "idealization")});
      }
    } else if (key == "amalgamations") {
      if (!v.is_array()) bad_spec("amalgamations must be a list");
      for (const auto& e : v) {
        if (!e.is_object()) bad_spec("amalgamations entries must be objects");
        s.amalgamations.push_back({get_string(e, "R", "amalgamation"), get_string(e, "S", "amalgamation"),
                                   get_string(e, "hom", "amalgamation"), get_string(e, "J", "amalgamation")});
      }
    } else if (key == "rings") {
      if (!v.is_array()) bad_spec("rings must be a list of ring expressions");
      for (const auto& e : v) {
        if (!e.is_string()) bad_spec("rings entries must be strings");
        s.rings.push_back(e.get<std::string>());
      }
    } else if (key == "caps") {
      if (!v.is_object()) bad_spec("caps must be an object");
      for (const auto& [ck, cv] : v.items()) {
        if (ck == "direct") {
          s.caps.direct = get_uint(cv, "caps.direct");
        } else if (ck == "derived") {
          s.caps.derived = get_uint(cv, "caps.derived");
        } else {
          bad_spec("unknown caps field '" + ck + "'");
        }
      }
      if (s.caps.derived > 65536 || s.caps.direct > s.caps.derived || s.caps.direct < 2) {
        bad_spec("caps need 2 <= direct <= derived <= 65536");
      }
    } else {
      bad_spec("unknown corpus field '" + key + "'");
    }
  }
  // Syntax errors are spec errors; evaluation failures (caps, bad homs) are
  // left to build_corpus, which reports them per recipe.
  auto check_syntax = [](const std::string& expr, const std::string& where) {
    try {
      dsl::parse_ring(expr);
    } catch (const dsl::DslError& e) {
      bad_spec(where + ": " + e.what());
    }
  };
  for (const auto& r : s.idealizations) check_syntax(idealization_expr(r), "idealization");
  for (const auto& r : s.amalgamations) check_syntax(amalgamation_expr(r), "amalgamation");
  for (const auto& r : s.rings) check_syntax(r, "ring '" + r + "'");
  return s;
}

CorpusSpec load_corpus_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io_error, "cannot read corpus spec " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus_spec(buf.str());
}

Corpus build_corpus(const CorpusSpec& spec) {
  Builder b(spec);

  std::vector<std::size_t> level;  // subjects the next quotient level starts from
  for (unsigned n = spec.zn_min; n <= spec.zn_max; ++n) {
    const std::size_t before = b.corpus.subjects.size();
    if (b.add(zn(n))) level.push_back(before);
  }
  std::vector<std::pair<unsigned, unsigned>> pairs = spec.product_pairs;
  if (pairs.empty()) {
    for (unsigned a = 2; a * a <= spec.product_max; ++a) {
      for (unsigned c = a; a * c <= spec.product_max; ++c) pairs.emplace_back(a, c);
    }
  }
  for (const auto& [a, c] : pairs) {
    const std::size_t before = b.corpus.subjects.size();
    if (b.add(zn(a) + " x " + zn(c))) level.push_back(before);
  }

  for (unsigned depth = 0; depth < spec.quotient_depth && !level.empty(); ++depth) {
    std::vector<std::size_t> next;
    for (std::size_t idx : level) {
      // Copies: push() may reallocate the subject list.
      const RingPtr ring = b.corpus.subjects[idx].ring;
      const std::string parent = b.corpus.subjects[idx].recipe;
      const Lattice& lat = lattice(*ring);
      for (std::size_t k = 1; k + 1 < lat.size(); ++k) {
        const std::string text = "(" + parent + ") / " + dsl::ideal_text(*ring, lat.ideals[k]);
        const std::size_t before = b.corpus.subjects.size();
        if (b.add(text)) next.push_back(before);
      }
    }
    level = std::move(next);
  }

  for (unsigned n = 2; n * 2 <= spec.idealization_max; ++n) {
    for (unsigned m = 2; m <= n && n * m <= spec.idealization_max; ++m) {
      if (n % m == 0) b.add(zn(n) + " (+) mod(" + zn(n) + ", " + std::to_string(m) + ")");
    }
  }
  for (const auto& r : spec.idealizations) b.add(idealization_expr(r));

  for (unsigned n = 2; n <= spec.duplication_max; ++n) {
    RingPtr z;
    try {
      z = make_zn(n, spec.caps);
    } catch (const Error& e) {
      b.corpus.diagnostics.push_back(zn(n) + ": " + e.what());
      continue;
    }
    const Lattice& lat = lattice(*z);
    for (std::size_t k = 0; k + 1 < lat.size(); ++k) b.add(zn(n) + " >< " + dsl::ideal_text(*z, lat.ideals[k]));
  }
  for (unsigned n = 4; n <= spec.amalgamation_max; ++n) {
    for (unsigned m = 2; m < n; ++m) {
      if (n % m) continue;
      const RingPtr z = make_zn(m);
      const Lattice& lat = lattice(*z);
      for (std::size_t k = 0; k + 1 < lat.size(); ++k) {
        b.add("amalg(" + zn(n) + ", " + zn(m) + ", mod " + std::to_string(m) + ", " + dsl::ideal_text(*z, lat.ideals[k]) +
              ")");
      }
    }
  }
  for (const auto& r : spec.amalgamations) b.add(amalgamation_expr(r));
  for (const auto& r : spec.rings) b.add(r);
  return std::move(b.corpus);
}

}  // namespace idealforge
