// Drives the built command-line tool and checks exit codes and output.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(IDEALFORGE_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string data = IDEALFORGE_TEST_DATA;

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("classify") {
    Run r = run("classify --ring Z32 --ideal '<16>'");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdicts"][0]["holds"] == true);
    CHECK(j["verdicts"][3]["predicate"] == "weaklyPrime");
    CHECK(j["verdicts"][3]["holds"] == false);

    r = run("classify --ring Z6 --ideal '<>'");
    CHECK(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["verdicts"][0]["holds"] == true);
    CHECK(j["verdicts"][1]["holds"] == false);

    CHECK(run("classify --ring Z6 --ideal '<7>'").code == 2);
    CHECK(run("classify --ring 'Z6 (+ ) Z6' --ideal '<>'").code == 2);
    CHECK(run("classify --ring Z6 --ideal '<1>'").code == 2);
    CHECK(run("classify --ring Z6").code == 2);
    CHECK(run("classify --ring Z6 --ideal '<2>' --format text").out.find("weaklyJ: false") != std::string::npos);
  }

  TEST_CASE("verify") {
    CHECK(run("verify --suite NOPE").code == 2);
    CHECK(run("verify --corpus /nonexistent.json").code == 2);
    Run r = run("verify --suite T-AML-I --corpus " + data + "/guarded_converse.json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["summary"]["theorems"][0]["guard_outside"].get<int>() > 0);
    CHECK(j["summary"]["total_failures"] == 0);

    r = run("verify --suite P-CART --corpus " + data + "/small_corpus.json");
    CHECK(r.code == 1);
    r = run("verify --suite T-SQ,P-INT --corpus " + data + "/small_corpus.json --timing");
    CHECK(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["summary"]["theorems"].size() == 2);
    CHECK(j["elapsed_ms"].is_number());
  }

  TEST_CASE("search") {
    Run r = run("search --where 'weaklyJ & !J' --limit 1");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["verdicts"].size() == 1);
    CHECK(j["verdicts"][0]["instance"] == "Z6");
    CHECK(j["verdicts"][0]["witness"]["bindings"][0]["ideal"]["text"] == "<>");

    r = run("search --where 'weaklyJ' --limit 0");
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["verdicts"].empty());

    CHECK(run("search --where 'weaklyJ &'").code == 2);
  }

  TEST_CASE("enumerate and usage") {
    Run r = run("enumerate --ring Z12");
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["summary"]["ideals"].size() == 6);
    r = run("enumerate --corpus " + data + "/small_corpus.json");
    CHECK(r.code == 0);
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("--help").code == 0);
  }
}
