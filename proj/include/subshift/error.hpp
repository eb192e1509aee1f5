#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace subshift {

enum class ErrorKind {
  invalid_alphabet,
  invalid_word,
  word_not_in_language,
  depth_exceeded,
  invalid_table,
  non_primitive_substitution,
  invalid_seeds,
  duplicate_orbit,
  alphabet_collision,
  unknown_builtin,
  bad_params,
  window_not_in_domain,
  alphabet_mismatch,
  table_mismatch,
  search_budget_exceeded,
  budget_exceeded,
  schema_violation,
  io_error,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` lets callers branch
/// without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace subshift
