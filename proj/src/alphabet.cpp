#include "subshift/alphabet.hpp"

#include <algorithm>
#include <limits>

#include "subshift/error.hpp"

namespace subshift {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_alphabet: return "invalid-alphabet";
    case ErrorKind::invalid_word: return "invalid-word";
    case ErrorKind::word_not_in_language: return "word-not-in-language";
    case ErrorKind::depth_exceeded: return "depth-exceeded";
    case ErrorKind::invalid_table: return "invalid-table";
    case ErrorKind::non_primitive_substitution: return "non-primitive-substitution";
    case ErrorKind::invalid_seeds: return "invalid-seeds";
    case ErrorKind::duplicate_orbit: return "duplicate-orbit";
    case ErrorKind::alphabet_collision: return "alphabet-collision";
    case ErrorKind::unknown_builtin: return "unknown-builtin";
    case ErrorKind::bad_params: return "bad-params";
    case ErrorKind::window_not_in_domain: return "window-not-in-domain";
    case ErrorKind::alphabet_mismatch: return "alphabet-mismatch";
    case ErrorKind::table_mismatch: return "table-mismatch";
    case ErrorKind::search_budget_exceeded: return "search-budget-exceeded";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
    case ErrorKind::schema_violation: return "schema-violation";
    case ErrorKind::io_error: return "io-error";
  }
  return "error";
}

namespace {

bool valid_token(const std::string& t) {
  if (t.empty()) return false;
  return std::none_of(t.begin(), t.end(), [](char c) {
    return c == '.' || c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
  });
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty()) throw Error(ErrorKind::invalid_alphabet, "alphabet is empty");
  if (tokens_.size() > std::numeric_limits<Symbol>::max())
    throw Error(ErrorKind::invalid_alphabet, "alphabet too large");
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    const auto& t = tokens_[i];
    if (!valid_token(t)) throw Error(ErrorKind::invalid_alphabet, "bad token '" + t + "'");
    if (!index_.emplace(t, static_cast<Symbol>(i)).second)
      throw Error(ErrorKind::invalid_alphabet, "duplicate token '" + t + "'");
    if (t.size() != 1) single_char_ = false;
  }
}

std::optional<Symbol> Alphabet::find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Symbol Alphabet::symbol(std::string_view token) const {
  if (auto s = find(token)) return *s;
  throw Error(ErrorKind::invalid_word, "token '" + std::string(token) + "' not in alphabet");
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single_char_ && i > 0) out += '.';
    out += token(w[i]);
  }
  return out;
}

Word Alphabet::parse(std::string_view text) const {
  Word w;
  if (text.empty()) return w;
  if (single_char_) {
    w.reserve(text.size());
    for (char c : text) w.push_back(symbol(std::string_view(&c, 1)));
    return w;
  }
  std::size_t start = 0;
  while (true) {
    auto dot = text.find('.', start);
    w.push_back(symbol(text.substr(start, dot == std::string_view::npos ? dot : dot - start)));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return w;
}

}  // namespace subshift
