#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace subshift {

/// Index of a token in its alphabet. Words compare lexicographically on
/// these indices, which is the canonical order used everywhere.
using Symbol = std::uint16_t;
using Word = std::vector<Symbol>;

/// Ordered finite set of symbol tokens.
///
/// Tokens are arbitrary non-empty strings without separators ('.', ',',
/// whitespace), so alphabets such as {0,1,2,3} and product alphabets like
/// {0_1, 1_1, 0_2, 1_2} are handled the same way. When every token is a single
/// character, words print as plain concatenations; otherwise tokens are joined
/// by '.'.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> tokens);

  static Alphabet binary() { return Alphabet({"0", "1"}); }

  std::size_t size() const noexcept { return tokens_.size(); }
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }
  const std::string& token(Symbol s) const { return tokens_.at(s); }

  std::optional<Symbol> find(std::string_view token) const;
  Symbol symbol(std::string_view token) const;  // throws invalid_word

  bool single_char() const noexcept { return single_char_; }

  std::string format(const Word& w) const;
  Word parse(std::string_view text) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.tokens_ == b.tokens_; }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, Symbol> index_;
  bool single_char_ = true;
};

}  // namespace subshift
