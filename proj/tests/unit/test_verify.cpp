#include <algorithm>

#include "helpers.hpp"
#include "subshift/aut_search.hpp"
#include "subshift/verify.hpp"

using namespace subshift;

namespace {

bool has(const SuiteResult& r, const std::string& label, CheckStatus status) {
  return std::any_of(r.checks.begin(), r.checks.end(),
                     [&](const Check& c) { return c.label == label && c.status == status; });
}

}  // namespace

TEST_CASE("union-sturmian automorphisms at range 1") {
  auto table = generate_language(builtin_example("union-sturmian"), 7);
  auto report = aut_group_mod_shift(table, 1, 1, 7);
  // (j1, j2) in {-1,0,1}^2; the global shift identifies pairs with equal j1 - j2.
  CHECK(report.certified.size() == 9);
  CHECK(report.coset_count() == 5);
  CHECK(recheck_report(report, table).empty());
}

TEST_CASE("suites on matching specs pass") {
  SuiteParams p;
  p.max_n = 20;
  CHECK(run_suite("sturmian", test::spec_file("fibonacci.json"), p).passed());
  CHECK(run_suite("sturmian", test::spec_file("sturmian_cf2.json"), p).passed());
  CHECK(run_suite("periodic", test::spec_file("periodic_1_2.json"), p).passed());
  CHECK(run_suite("cassaigne", test::spec_file("union_k2.json"), p).passed());
  CHECK(run_suite("growth", test::spec_file("thue_morse.json"), p).passed());
  auto ex = run_suite("examples-6", std::nullopt, p);
  CHECK(ex.passed());
  CHECK(has(ex, "doubling-closed-form", CheckStatus::pass));
}

TEST_CASE("Thue-Morse left-special counts only recur below k - 1") {
  SuiteParams p;
  p.max_n = 24;
  auto r = run_suite("boshernitzan", test::spec_file("thue_morse.json"), p);
  CHECK(r.passed());
  CHECK(has(r, "left-special-count-recurrent", CheckStatus::pass));
  CHECK(has(r, "left-special-count-uniform", CheckStatus::skipped));
}

TEST_CASE("suites report skips and failures") {
  SuiteParams p;
  p.max_n = 12;
  CHECK_FALSE(run_suite("sturmian", test::spec_file("thue_morse.json"), p).passed());
  CHECK_FALSE(run_suite("periodic", test::spec_file("fibonacci.json"), p).passed());
  auto g = run_suite("growth", test::spec_file("periodic_2_3.json"), p);
  CHECK(g.passed());
  CHECK(has(g, "growth-bound", CheckStatus::skipped));
  CHECK(test::error_kind([&] { run_suite("bogus", std::nullopt, p); }) == ErrorKind::bad_params);
  CHECK(test::error_kind([&] { run_suite("sturmian", std::nullopt, p); }) == ErrorKind::bad_params);
}

TEST_CASE("suite JSON lists every check") {
  SuiteParams p;
  p.max_n = 12;
  auto r = run_suite("cassaigne", fibonacci_spec(), p);
  auto j = r.to_json();
  CHECK(j["suite"] == "cassaigne");
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() == r.checks.size());
}
