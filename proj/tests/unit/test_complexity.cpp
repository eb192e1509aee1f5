#include "helpers.hpp"
#include "subshift/complexity.hpp"

using namespace subshift;

namespace {

// Counts words of length n that have more than one continuation of length m,
// straight from the string sets.
std::size_t naive_failures(const LanguageTable& table, std::size_t n, std::size_t m) {
  const auto words = test::level_strings(table, n);
  const auto longer = test::level_strings(table, n + m);
  std::size_t count = 0;
  for (const auto& w : words) {
    std::size_t ext = 0;
    for (const auto& v : longer) ext += v.compare(0, w.size(), w) == 0;
    count += ext != 1;
  }
  return count;
}

}  // namespace

TEST_CASE("profile of the Fibonacci shift") {
  auto prof = profile(generate_language(fibonacci_spec(), 6));
  CHECK(prof.values == std::vector<std::size_t>{2, 3, 4, 5, 6, 7});
  CHECK(prof.differences == std::vector<std::size_t>{1, 1, 1, 1, 1});
  CHECK(prof.B == 1);
  CHECK(prof.k_linear == 2);
  CHECK(prof.P(4) == 5);
}

TEST_CASE("k_linear on the documented examples") {
  BuiltinParams p;
  p.k = 2;
  CHECK(profile(generate_language(builtin_example("union-sturmian", p), 8)).k_linear == 3);
  auto periodic = test::spec(R"({"model":"periodic","alphabet":["0","1"],"orbits":["01"]})");
  auto prof = profile(generate_language(periodic, 4));
  CHECK(prof.values == std::vector<std::size_t>{2, 2, 2, 2});
  CHECK(prof.k_linear == 2);
  CHECK(prof.B == 0);
}

TEST_CASE("single-level profile") {
  auto prof = profile(generate_language(fibonacci_spec(), 1));
  CHECK(prof.values == std::vector<std::size_t>{2});
  CHECK(prof.differences.empty());
  CHECK(prof.B == 0);
}

TEST_CASE("Thue-Morse complexity values") {
  // Known values of the Thue-Morse factor complexity.
  const std::vector<std::size_t> expect{2, 4, 6, 10, 12, 16, 20, 22, 24, 28, 32, 36, 40, 42, 44, 46};
  auto prof = profile(generate_language(test::spec_file("thue_morse.json"), 16));
  CHECK(prof.values == expect);
  CHECK(prof.B == 4);
}

TEST_CASE("cassaigne check") {
  auto prof = profile(generate_language(test::spec_file("thue_morse.json"), 12));
  auto ok = cassaigne_check(prof, 4);
  CHECK(ok.bounded);
  CHECK(ok.observed_max == 4);
  auto bad = cassaigne_check(prof, 2);
  CHECK_FALSE(bad.bounded);
  CHECK(bad.first_n == 3u);
}

TEST_CASE("extension failure counts agree with string counting and the Bm bound") {
  for (const char* name : {"fibonacci.json", "thue_morse.json", "union_k2.json", "golden_mean.json"}) {
    CAPTURE(name);
    auto table = generate_language(test::spec_file(name), 12);
    auto prof = profile(table);
    for (std::size_t n = 1; n <= 12; ++n)
      for (std::size_t m = 0; n + m <= 12; ++m) {
        CAPTURE(n);
        CAPTURE(m);
        const auto count = extension_failure_count(table, n, m);
        CHECK(count == naive_failures(table, n, m));
        CHECK(count <= prof.B * m);
      }
  }
}

TEST_CASE("special factor counts") {
  auto fib = generate_language(fibonacci_spec(), 33);
  for (std::size_t n = 1; n <= 32; ++n) {
    CHECK(nonuniquely_left_extendable_count(fib, n) == 1);
    CHECK(right_special_count(fib, n) == 1);
  }
  auto gm = generate_language(test::spec_file("golden_mean.json"), 5);
  CHECK(right_special_count(gm, 1) == 1);  // only 0
  CHECK(nonuniquely_left_extendable_count(gm, 2) == 2);  // 00 and 01
}

TEST_CASE("Morse-Hedlund flag") {
  CHECK_FALSE(morse_hedlund_flag(profile(generate_language(fibonacci_spec(), 20))).has_value());
  auto prof = profile(generate_language(test::spec_file("periodic_2_2_3.json"), 10));
  CHECK(morse_hedlund_flag(prof) == 7u);
}
