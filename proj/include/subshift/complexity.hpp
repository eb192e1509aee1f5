#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "subshift/language_table.hpp"

namespace subshift {

/// Factor complexity P(1..N) of a table with derived constants.
struct ComplexityProfile {
  std::size_t max_n = 0;
  std::vector<std::size_t> values;       // values[n-1] = P(n)
  std::vector<std::size_t> differences;  // differences[n-1] = P(n+1) - P(n)
  std::size_t B = 0;                     // max difference (0 when N = 1)
  /// Smallest integer k with P(n) < k n for every measured n in the upper
  /// half ceil(N/2)..N of the horizon; a finite-depth stand-in for
  /// limsup P(n)/n < k.
  std::size_t k_linear = 1;

  std::size_t P(std::size_t n) const { return values.at(n - 1); }
};

ComplexityProfile profile(const LanguageTable& table);

struct CassaigneVerdict {
  bool bounded = true;
  std::size_t observed_max = 0;        // when bounded
  std::optional<std::size_t> first_n;  // first n with P(n+1) - P(n) > bound
};

CassaigneVerdict cassaigne_check(const ComplexityProfile& profile, std::size_t bound);

/// Words of length n that do not extend uniquely m times to the right.
std::size_t extension_failure_count(const LanguageTable& table, std::size_t n, std::size_t m);

/// Words of length n with at least two left extensions.
std::size_t nonuniquely_left_extendable_count(const LanguageTable& table, std::size_t n);
/// Words of length n with at least two right extensions.
std::size_t right_special_count(const LanguageTable& table, std::size_t n);

/// Smallest measured n with P(n) <= n; such a shift consists of periodic
/// points only.
std::optional<std::size_t> morse_hedlund_flag(const ComplexityProfile& profile);

}  // namespace subshift
