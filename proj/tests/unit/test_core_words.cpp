#include <sstream>

#include "helpers.hpp"
#include "subshift/alphabet.hpp"

using namespace subshift;

TEST_CASE("alphabet tokens and word formatting") {
  Alphabet bin = Alphabet::binary();
  CHECK(bin.size() == 2);
  CHECK(bin.format(bin.parse("0110")) == "0110");
  Alphabet multi({"0_1", "1_1", "0_2"});
  CHECK(multi.format(Word{0, 2, 1}) == "0_1.0_2.1_1");
  CHECK(multi.parse("0_1.0_2.1_1") == Word{0, 2, 1});
  CHECK(test::error_kind([] { Alphabet({"0", "0"}); }) == ErrorKind::invalid_alphabet);
  CHECK(test::error_kind([] { Alphabet({"a.b"}); }) == ErrorKind::invalid_alphabet);
  CHECK(test::error_kind([] { Alphabet({""}); }) == ErrorKind::invalid_alphabet);
  CHECK(test::error_kind([&] { bin.parse("012"); }) == ErrorKind::invalid_word);
}

TEST_CASE("language table of the golden-mean shift") {
  auto table = generate_language(test::spec_file("golden_mean.json"), 6);
  const auto& a = table.alphabet();
  CHECK(table.count(1) == 2);
  CHECK(table.count(2) == 3);
  CHECK(table.count(5) == 13);
  CHECK(table.contains(a.parse("010")));
  CHECK_FALSE(table.contains(a.parse("011")));
  CHECK(table.right_extensions(a.parse("0")) == std::vector<Symbol>{0, 1});
  CHECK(table.right_extensions(a.parse("1")) == std::vector<Symbol>{0});
  CHECK(table.left_extensions(a.parse("1")) == std::vector<Symbol>{0});
  CHECK(table.count_with_prefix(a.parse("1"), 2) == 2);  // 100, 101
  CHECK(table.extends_uniquely_right(a.parse("1"), 1));
  CHECK_FALSE(table.extends_uniquely_right(a.parse("1"), 2));
  CHECK(table.index_of(a.parse("00")) == 0u);
  CHECK_FALSE(table.index_of(a.parse("11")).has_value());
}

TEST_CASE("language table rejects bad queries and bad input") {
  auto table = generate_language(fibonacci_spec(), 4);
  const auto& a = table.alphabet();
  CHECK(test::error_kind([&] { table.level(5); }) == ErrorKind::depth_exceeded);
  CHECK(test::error_kind([&] { table.right_extensions(a.parse("0101")); }) == ErrorKind::depth_exceeded);
  CHECK(test::error_kind([&] { table.right_extensions(a.parse("11")); }) == ErrorKind::word_not_in_language);
  // Not factor closed: "11" present but its prefix "1" missing.
  CHECK(test::error_kind([] { LanguageTable(Alphabet::binary(), 2, {{Word{0}}, {Word{0, 0}, Word{1, 1}}}); }) ==
        ErrorKind::invalid_table);
  // Word of the wrong length.
  CHECK(test::error_kind([] { LanguageTable(Alphabet::binary(), 1, {{Word{0, 0}}}); }) == ErrorKind::invalid_table);
}

TEST_CASE("language table cache round trip is exact") {
  auto table = generate_language(test::spec_file("union_k2.json"), 9);
  std::stringstream buf;
  table.write(buf);
  auto back = LanguageTable::read(buf);
  CHECK(back == table);
  std::stringstream again;
  back.write(again);
  std::stringstream first;
  table.write(first);
  CHECK(again.str() == first.str());
}

TEST_CASE("factor_levels collects all factors") {
  Alphabet a = Alphabet::binary();
  std::vector<Word> src{a.parse("00101")};
  auto levels = factor_levels(src, 3);
  REQUIRE(levels.size() == 3);
  CHECK(levels[0].size() == 2);
  CHECK(levels[1].size() == 3);  // 00 01 10
  CHECK(levels[2].size() == 3);  // 001 010 101
}
