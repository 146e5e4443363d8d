// Command-line front end: classify, verify, search, enumerate.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "idealforge/cache.hpp"
#include "idealforge/corpus.hpp"
#include "idealforge/dsl.hpp"
#include "idealforge/report.hpp"

namespace {

using namespace idealforge;
using report::Json;

enum Exit { ok = 0, failure = 1, usage = 2 };

struct Common {
  std::string format = "json";
  bool timing = false;
  std::optional<std::string> cache;
};

bool is_usage_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::syntax_error:
    case ErrorKind::evaluation_error:
    case ErrorKind::malformed_expression:
    case ErrorKind::unknown_theorem:
    case ErrorKind::corpus_spec:
    case ErrorKind::io_error:
    case ErrorKind::element_out_of_range:
    case ErrorKind::improper_ideal:
      return true;
    default:
      return false;
  }
}

class Clock {
 public:
  std::optional<double> elapsed(bool wanted) const {
    if (!wanted) return std::nullopt;
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Corpus load_corpus(const std::string& path) {
  return build_corpus(path.empty() ? default_corpus_spec() : load_corpus_spec(path));
}

std::optional<LatticeCache> open_cache(const Common& c) {
  auto dir = LatticeCache::directory(c.cache);
  if (!dir) return std::nullopt;
  return LatticeCache(*dir, LatticeCache::default_spot_check_rate());
}

void preload(std::optional<LatticeCache>& cache, const std::vector<Subject>& subjects) {
  if (!cache) return;
  for (const Subject& s : subjects) cache->preload(*s.ring);
}

void store(std::optional<LatticeCache>& cache, const std::vector<Subject>& subjects) {
  if (!cache) return;
  for (const Subject& s : subjects) cache->store(*s.ring);
  const auto& st = cache->stats();
  if (st.mismatches > 0) {
    std::fprintf(stderr, "cache: %zu stale lattice entries re-derived\n", st.mismatches);
  }
}

std::string yes(bool b) { return b ? "true" : "false"; }

void print_text_classify(const Json& r) {
  const Json& inst = r["instances"][0];
  std::cout << inst["recipe"].get<std::string>() << "  ideal " << inst["ideal"]["text"].get<std::string>() << "\n";
  for (const Json& v : r["verdicts"]) {
    std::cout << "  " << v["predicate"].get<std::string>() << ": " << yes(v["holds"].get<bool>());
    if (!v["witness"].is_null()) {
      std::cout << "  witness";
      for (const Json& l : v["witness"]["labels"]) std::cout << " " << l.get<std::string>();
    }
    std::cout << "\n";
  }
  const Json& s = r["summary"];
  std::cout << "  inside J(R): " << yes(s["in_jacobson"].get<bool>()) << "\n";
  std::cout << "  inside N(R): " << yes(s["in_nilradical"].get<bool>()) << "\n";
  std::cout << "  I^2 = 0: " << yes(s["square_zero"].get<bool>()) << "\n";
  std::cout << "  SZ(R/I):";
  for (const Json& l : s["strong_zero_divisors"]["labels"]) std::cout << " " << l.get<std::string>();
  std::cout << "\n";
}

void print_text_verify(const Json& r) {
  std::printf("%-8s %9s %10s %10s %8s %6s\n", "theorem", "checked", "nonvacuous", "failures", "guard", "status");
  for (const Json& t : r["summary"]["theorems"]) {
    const auto nonvac = t["nonvacuous"].get<std::size_t>();
    const auto fails = t["failures"].get<std::size_t>();
    std::printf("%-8s %9zu %10zu %10zu %8zu %6s\n", t["theorem_id"].get<std::string>().c_str(),
                t["checked"].get<std::size_t>(), nonvac, fails, t["guard_outside"].get<std::size_t>(),
                fails ? "FAIL" : nonvac ? "pass" : "vacuous");
  }
  for (const Json& v : r["verdicts"]) {
    if (v["failures"].get<std::size_t>() == 0) continue;
    std::printf("  %s on %s: %s\n", v["theorem_id"].get<std::string>().c_str(), v["instance"].get<std::string>().c_str(),
                v["witness"].is_null() ? "" : v["witness"]["note"].get<std::string>().c_str());
  }
}

void print_text_search(const Json& r) {
  for (const Json& v : r["verdicts"]) {
    std::cout << v["instance"].get<std::string>();
    for (const Json& b : v["witness"]["bindings"]) {
      std::cout << "  " << b["variable"].get<std::string>() << " = " << b["ideal"]["text"].get<std::string>();
    }
    std::cout << "\n";
  }
  std::cout << r["summary"]["hits"].get<std::size_t>() << " hit(s)\n";
}

void print_text_enumerate(const Json& r) {
  if (r["summary"].contains("ideals")) {
    const Json& inst = r["instances"][0];
    std::cout << inst["recipe"].get<std::string>() << " (order " << inst["order"].get<std::size_t>() << ")\n";
    for (const Json& i : r["summary"]["ideals"]) {
      std::cout << "  " << i["text"].get<std::string>() << "  size " << i["size"].get<std::size_t>()
                << (i["maximal"].get<bool>() ? "  maximal" : "") << "\n";
    }
    std::cout << "  J(R) = " << r["summary"]["jacobson"]["text"].get<std::string>() << ", N(R) = "
              << r["summary"]["nilradical"]["text"].get<std::string>() << "\n";
  } else {
    for (const Json& i : r["instances"]) {
      std::cout << i["index"].get<std::size_t>() << "  " << i["recipe"].get<std::string>() << "  order "
                << i["order"].get<std::size_t>() << "\n";
    }
  }
}

void emit(const Json& r, const std::string& format, void (*text)(const Json&)) {
  if (format == "text") {
    text(r);
  } else {
    std::cout << report::render(r);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brute-force checker for weakly J-ideals in finite commutative rings"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--timing", common.timing, "Record elapsed_ms in the report");
    sub->add_option("--cache", common.cache, "Lattice cache directory (default: $IDEALFORGE_CACHE)");
  };

  std::string ring_text;
  std::string ideal_text;
  auto* classify = app.add_subcommand("classify", "Classify one ideal of one ring");
  classify->add_option("--ring", ring_text, "Ring expression")->required();
  classify->add_option("--ideal", ideal_text, "Ideal expression, e.g. \"<2>\"")->required();
  add_common(classify);

  std::vector<std::string> suite{"all"};
  std::string corpus_path;
  unsigned jobs = 1;
  bool all_verdicts = false;
  auto* verify = app.add_subcommand("verify", "Sweep the theorem catalog over a corpus");
  verify->add_option("--suite", suite, "all, or theorem ids")->delimiter(',');
  verify->add_option("--corpus", corpus_path, "Corpus spec file (JSON); default corpus when omitted");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1U, 256U));
  verify->add_flag("--all-verdicts", all_verdicts, "List passing verdicts too");
  add_common(verify);

  std::string where;
  std::size_t limit = 1;
  auto* search = app.add_subcommand("search", "Find instances satisfying a predicate expression");
  search->add_option("--where", where, "Predicate expression, e.g. \"weaklyJ & !J\"")->required();
  search->add_option("--corpus", corpus_path, "Corpus spec file (JSON)");
  search->add_option("--limit", limit, "Maximum number of witnesses");
  add_common(search);

  auto* enumerate = app.add_subcommand("enumerate", "List the ideals of a ring, or the rings of a corpus");
  enumerate->add_option("--ring", ring_text, "Ring expression");
  enumerate->add_option("--corpus", corpus_path, "Corpus spec file (JSON)");
  add_common(enumerate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  const Clock clock;
  try {
    if (classify->parsed()) {
      const Subject subject = dsl::evaluate_ring(ring_text);
      const Ideal ideal = dsl::evaluate_ideal(ideal_text, subject.ring);
      if (!ideal.is_proper()) throw Error(ErrorKind::improper_ideal, "the ideal is the whole ring; predicates need a proper ideal");
      const IdealReport verdicts = ideal_report(ideal);
      const StrongZeroDivisors sz = strong_zero_divisors(ideal);
      Json r = report::classify({ring_text, ideal_text, &subject, &ideal, &verdicts, &sz});
      report::set_elapsed(r, clock.elapsed(common.timing));
      emit(r, common.format, print_text_classify);
      return ok;
    }
    if (verify->parsed()) {
      const std::vector<std::string> ids = resolve_theorem_ids(suite);
      Corpus corpus = load_corpus(corpus_path);
      auto cache = open_cache(common);
      preload(cache, corpus.subjects);
      const SweepResult result = idealforge::sweep(corpus.subjects, {ids, jobs});
      store(cache, corpus.subjects);
      Json r = report::verify({ids, corpus_path.empty() ? "default" : corpus_path, all_verdicts, &corpus.subjects,
                               &corpus.diagnostics, &result});
      report::set_elapsed(r, clock.elapsed(common.timing));
      emit(r, common.format, print_text_verify);
      return r["summary"]["total_failures"].get<std::size_t>() > 0 ? failure : ok;
    }
    if (search->parsed()) {
      const PredicateExpr expr = parse_predicate(where);
      Corpus corpus = load_corpus(corpus_path);
      auto cache = open_cache(common);
      preload(cache, corpus.subjects);
      const std::vector<SearchHit> hits = idealforge::search(expr, corpus.subjects, limit);
      store(cache, corpus.subjects);
      Json r = report::search({where, corpus_path.empty() ? "default" : corpus_path, limit, &corpus.subjects, &hits});
      report::set_elapsed(r, clock.elapsed(common.timing));
      emit(r, common.format, print_text_search);
      return ok;
    }
    if (!ring_text.empty()) {
      const Subject subject = dsl::evaluate_ring(ring_text);
      auto cache = open_cache(common);
      if (cache) cache->preload(*subject.ring);
      Json r = report::enumerate_ring(ring_text, subject);
      if (cache) cache->store(*subject.ring);
      report::set_elapsed(r, clock.elapsed(common.timing));
      emit(r, common.format, print_text_enumerate);
      return ok;
    }
    Corpus corpus = load_corpus(corpus_path);
    Json r = report::enumerate_corpus(corpus_path.empty() ? "default" : corpus_path, corpus.subjects, corpus.diagnostics);
    report::set_elapsed(r, clock.elapsed(common.timing));
    emit(r, common.format, print_text_enumerate);
    return ok;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_usage_error(e.kind()) ? usage : failure;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return failure;
  }
}
