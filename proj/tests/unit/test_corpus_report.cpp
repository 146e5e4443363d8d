#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "idealforge/cache.hpp"
#include "idealforge/corpus.hpp"
#include "idealforge/report.hpp"
#include "support.hpp"

using namespace testing;
namespace fs = std::filesystem;

namespace {

ErrorKind spec_error(std::string_view json) {
  try {
    parse_corpus_spec(json);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("accepted: " << json);
  return ErrorKind::io_error;
}

fs::path scratch_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("idealforge-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

// Same tables, fresh object: its lattice has not been computed yet.
RingPtr clone(const Ring& r) {
  RingData d;
  d.order = r.order();
  d.add.assign(r.add_table().begin(), r.add_table().end());
  d.mul.assign(r.mul_table().begin(), r.mul_table().end());
  d.zero = r.zero();
  d.one = r.one();
  d.label = r.label();
  return make_ring(std::move(d));
}

}  // namespace

TEST_SUITE("corpus") {
  TEST_CASE("default corpus families") {
    const CorpusSpec d = default_corpus_spec();
    CHECK(d.zn_min == 2);
    CHECK(d.zn_max == 64);
    CHECK(d.product_max == 64);
    CHECK(d.idealization_max == 144);
    CHECK(d.duplication_max == 12);
    const Corpus c = build_corpus(d);
    CHECK(c.diagnostics.empty());
    CHECK(c.subjects.front().recipe == "Z2");
    std::size_t products = 0, idealizations = 0, duplications = 0;
    for (const Subject& s : c.subjects) {
      products += s.product.has_value();
      idealizations += s.idealization.has_value();
      duplications += s.amalgamation.has_value() && s.recipe.find("><") != std::string::npos;
    }
    CHECK(products > 0);
    CHECK(idealizations > 0);
    CHECK(duplications > 0);
  }

  TEST_CASE("spec files enable only the listed families") {
    const CorpusSpec s = parse_corpus_spec(R"({"zn_max": 5})");
    const Corpus c = build_corpus(s);
    REQUIRE(c.subjects.size() == 4);
    CHECK(c.subjects.back().recipe == "Z5");

    const CorpusSpec p = parse_corpus_spec(R"({"product_pairs": [[2, 3]], "rings": ["Z4 >< <2>"]})");
    const Corpus pc = build_corpus(p);
    REQUIRE(pc.subjects.size() == 2);
    CHECK(pc.subjects[0].recipe == "Z2 x Z3");
    CHECK(pc.subjects[1].amalgamation.has_value());

    const Corpus ic = build_corpus(parse_corpus_spec(
        R"J({"idealizations": [{"base": "Z8", "module": "mod(Z8, 4)"}],
            "amalgamations": [{"R": "Z6", "S": "Z2", "hom": "mod 2", "J": "<1>"}]})J"));
    REQUIRE(ic.subjects.size() == 2);
    CHECK(ic.subjects[0].idealization.has_value());
    CHECK(ic.subjects[1].amalgamation.has_value());
  }

  TEST_CASE("bad specs") {
    CHECK(spec_error("{") == ErrorKind::corpus_spec);
    CHECK(spec_error(R"({"zn_max": "big"})") == ErrorKind::corpus_spec);
    CHECK(spec_error(R"({"colour": 1})") == ErrorKind::corpus_spec);
    CHECK(spec_error(R"({"idealizations": [{"base": "Z8"}]})") == ErrorKind::corpus_spec);
    CHECK(spec_error(R"({"rings": ["Z6 (+ ) Z6"]})") == ErrorKind::corpus_spec);
    try {
      load_corpus_spec("/nonexistent/idealforge.json");
      FAIL("missing file accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::io_error);
    }
  }

  TEST_CASE("cap violations become diagnostics") {
    CorpusSpec s = parse_corpus_spec(R"({"product_pairs": [[2, 3], [60, 60]], "caps": {"direct": 256, "derived": 1000}})");
    const Corpus c = build_corpus(s);
    CHECK(c.subjects.size() == 1);
    CHECK(c.diagnostics.size() == 1);
  }

  TEST_CASE("every generated ring is valid") {
    CorpusSpec s = default_corpus_spec();
    s.zn_max = 20;
    s.product_max = 20;
    s.idealization_max = 48;
    for (const Subject& sub : build_corpus(s).subjects) {
      CAPTURE(sub.recipe);
      CHECK(check_ring_axioms(*sub.ring).empty());
    }
  }
}

TEST_SUITE("report") {
  TEST_CASE("classify report schema and round trip") {
    const Subject s = ring("Z32");
    const Ideal i = ideal(s, "<16>");
    const IdealReport rep = ideal_report(i);
    const StrongZeroDivisors sz = strong_zero_divisors(i);
    const report::Json r = report::classify({"Z32", "<16>", &s, &i, &rep, &sz});
    std::vector<std::string> keys;
    for (const auto& [k, v] : r.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"version", "command", "instances", "verdicts", "summary", "elapsed_ms"});
    CHECK(r["elapsed_ms"].is_null());
    CHECK(r["verdicts"][0]["predicate"] == "weaklyJ");
    CHECK(r["verdicts"][0]["holds"] == true);
    CHECK(r["verdicts"][3]["predicate"] == "weaklyPrime");
    CHECK(r["verdicts"][3]["witness"]["labels"] == report::Json::array({"2", "8"}));

    const std::string text = report::render(r);
    CHECK(report::render(report::Json::parse(text)) == text);
  }

  TEST_CASE("verify report is byte-stable") {
    CorpusSpec spec = default_corpus_spec();
    spec.zn_max = 12;
    spec.product_max = 12;
    spec.idealization_max = 24;
    spec.duplication_max = 4;
    spec.amalgamation_max = 4;
    const Corpus c = build_corpus(spec);
    const auto ids = resolve_theorem_ids({"all"});
    const SweepResult a = sweep(c.subjects, {ids, 1});
    const SweepResult b = sweep(c.subjects, {ids, 3});
    const auto ra = report::render(report::verify({ids, "default", true, &c.subjects, &c.diagnostics, &a}));
    const auto rb = report::render(report::verify({ids, "default", true, &c.subjects, &c.diagnostics, &b}));
    CHECK(ra == rb);
    CHECK(report::render(report::Json::parse(ra)) == ra);
  }

  TEST_CASE("enumerate report") {
    const Subject s = ring("Z12");
    const report::Json r = report::enumerate_ring("Z12", s);
    CHECK(r["summary"]["ideals"].size() == 6);
    CHECK(r["summary"]["jacobson"]["text"] == "<6>");
    CHECK(r["summary"]["units"] == 4);
    CHECK(r["summary"]["nilradical"]["text"] == "<6>");
  }
}

TEST_SUITE("cache") {
  TEST_CASE("store then preload") {
    const fs::path dir = scratch_dir("store");
    const Subject s = ring("Z2 x Z12");
    {
      LatticeCache cache(dir, 0.0);
      CHECK_FALSE(cache.preload(*s.ring));
      cache.store(*s.ring);
      CHECK(cache.stats().stores == 1);
      CHECK(fs::exists(cache.entry_path(*s.ring)));
    }
    const RingPtr copy = clone(*s.ring);
    LatticeCache cache(dir, 0.0);
    CHECK(cache.preload(*copy));
    CHECK(cache.stats().hits == 1);
    CHECK(lattice(*copy).size() == lattice(*s.ring).size());
    CHECK(lattice(*copy).jacobson == lattice(*s.ring).jacobson);
    fs::remove_all(dir);
  }

  TEST_CASE("corrupt and stale entries") {
    const fs::path dir = scratch_dir("stale");
    const Subject s = ring("Z24");
    LatticeCache writer(dir, 0.0);
    writer.store(*s.ring);
    const fs::path entry = writer.entry_path(*s.ring);

    {
      std::ofstream(entry, std::ios::trunc) << "{not json";
      LatticeCache cache(dir, 0.0);
      CHECK_FALSE(cache.preload(*clone(*s.ring)));
      CHECK(cache.stats().misses == 1);
    }
    {
      // A well-formed entry missing one ideal: only a spot check notices.
      nlohmann::json j;
      j["order"] = 24;
      char hash[17];
      std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(s.ring->content_hash()));
      j["hash"] = hash;
      j["ideals"] = nlohmann::json::array();
      const Lattice& lat = lattice(*s.ring);
      for (std::size_t i = 0; i + 1 < lat.size(); ++i) {
        if (i == 2) continue;
        j["ideals"].push_back(lat.ideals[i].members());
      }
      j["ideals"].push_back(lat.ideals.back().members());
      std::ofstream(entry, std::ios::trunc) << j.dump();

      LatticeCache cache(dir, 1.0);
      const RingPtr fresh = clone(*s.ring);
      CHECK_FALSE(cache.preload(*fresh));
      CHECK(cache.stats().spot_checks == 1);
      CHECK(cache.stats().mismatches == 1);
      CHECK(lattice(*fresh).size() == lat.size());

      LatticeCache again(dir, 1.0);
      CHECK(again.preload(*clone(*s.ring)));
      CHECK(again.stats().mismatches == 0);
    }
    fs::remove_all(dir);
  }

  TEST_CASE("directory resolution") {
    CHECK(LatticeCache::directory(std::optional<std::string>("/tmp/x")) == fs::path("/tmp/x"));
    ::setenv("IDEALFORGE_CACHE", "/tmp/from-env", 1);
    CHECK(LatticeCache::directory(std::nullopt) == fs::path("/tmp/from-env"));
    ::unsetenv("IDEALFORGE_CACHE");
    CHECK_FALSE(LatticeCache::directory(std::nullopt).has_value());
  }
}
