#include <sstream>

#include "helpers.hpp"
#include "subshift/block_code.hpp"

using namespace subshift;

TEST_CASE("identity and shift power codes") {
  auto table = generate_language(fibonacci_spec(), 9);
  const auto& a = table.alphabet();
  auto id = BlockCode::identity(table);
  CHECK(id.range() == 0);
  CHECK(apply_to_word(id, a.parse("01001")) == a.parse("01001"));
  auto s1 = shift_power_code(1, table);
  CHECK(s1.range() == 1);
  CHECK(apply_to_word(s1, a.parse("01001")) == a.parse("001"));
  auto sm1 = shift_power_code(-1, table);
  CHECK(apply_to_word(sm1, a.parse("01001")) == a.parse("010"));
  CHECK(codes_equal(compose(s1, sm1, table), id, table));
  CHECK(codes_equal(shift_power_code(0, table), id, table));
}

TEST_CASE("compose agrees with applying twice") {
  auto table = generate_language(test::spec_file("golden_mean.json"), 9);
  const auto& a = table.alphabet();
  // Range-1 rule: 1 where the left neighbour is 1.
  auto left = BlockCode::from_rule(table, 1, [](const Word& w) { return w[0]; });
  auto s1 = shift_power_code(1, table);
  auto composed = compose(s1, left, table);
  CHECK(composed.range() == 2);
  for (const auto& w : table.level(7))
    CHECK(apply_to_word(composed, w) == apply_to_word(s1, apply_to_word(left, w)));
  CHECK(codes_equal(composed, BlockCode::identity(table), table));
  CHECK(minimal_range(composed, table) == 0);
  CHECK(restrict_range(composed, 0, table) == BlockCode::identity(table));
  (void)a;
}

TEST_CASE("inflate keeps the map") {
  auto table = generate_language(fibonacci_spec(), 9);
  auto s1 = shift_power_code(1, table);
  auto big = inflate(s1, 3, table);
  CHECK(big.range() == 3);
  CHECK(codes_equal(big, s1, table));
  CHECK(minimal_range(big, table) == 1);
}

TEST_CASE("apply_to_word rejects windows outside the domain") {
  auto table = generate_language(fibonacci_spec(), 5);
  auto id = BlockCode::identity(table, 1);
  CHECK(test::error_kind([&] { apply_to_word(id, table.alphabet().parse("0110")); }) ==
        ErrorKind::window_not_in_domain);
}

TEST_CASE("compose checks alphabets and tables") {
  auto fib = generate_language(fibonacci_spec(), 7);
  auto gm = generate_language(test::spec_file("golden_mean.json"), 7);
  auto union_table = generate_language(test::spec_file("union_k2.json"), 7);
  CHECK(test::error_kind([&] { compose(BlockCode::identity(fib), BlockCode::identity(gm, 1), fib); }) ==
        ErrorKind::table_mismatch);
  CHECK(test::error_kind([&] {
          compose(BlockCode::identity(union_table), BlockCode::identity(fib), fib);
        }) == ErrorKind::alphabet_mismatch);
}

TEST_CASE("endomorphism verdicts") {
  auto fib = generate_language(fibonacci_spec(), 12);
  auto id_verdict = is_endomorphism(shift_power_code(2, fib), fib, 12);
  CHECK(id_verdict.kind == EndoVerdict::Kind::consistent_to_horizon);
  // Bit flip sends 00 to 11, which Fibonacci forbids.
  auto flip = BlockCode::from_rule(fib, 0, [](const Word& w) { return static_cast<Symbol>(1 - w[0]); });
  auto flip_verdict = is_endomorphism(flip, fib, 12);
  REQUIRE(flip_verdict.refuted());
  CHECK(fib.alphabet().format(*flip_verdict.witness) == "00");

  auto gm_spec = test::spec_file("golden_mean.json");
  auto gm = generate_language(gm_spec, 8);
  auto shift = shift_power_code(1, gm);
  CHECK(is_endomorphism(shift, gm, 4, sft_window(gm_spec)).kind == EndoVerdict::Kind::certified_exact);
  CHECK(is_endomorphism(shift, gm, 3, sft_window(gm_spec)).kind == EndoVerdict::Kind::consistent_to_horizon);
}

TEST_CASE("block code text round trip") {
  auto table = generate_language(test::spec_file("union_k2.json"), 7);
  auto code = compose(shift_power_code(1, table), shift_power_code(1, table), table);
  std::stringstream buf;
  code.write(buf);
  CHECK(buf.str().rfind("range\t2\n", 0) == 0);
  auto back = BlockCode::read(buf, table.alphabet(), table.alphabet());
  CHECK(back == code);
}
