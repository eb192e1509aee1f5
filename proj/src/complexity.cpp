#include "subshift/complexity.hpp"

#include <algorithm>

#include "subshift/error.hpp"

namespace subshift {

ComplexityProfile profile(const LanguageTable& table) {
  ComplexityProfile p;
  p.max_n = table.max_n();
  for (std::size_t n = 1; n <= p.max_n; ++n) p.values.push_back(table.count(n));
  for (std::size_t n = 1; n < p.max_n; ++n) {
    // factor closure plus bi-extendability make P nondecreasing
    p.differences.push_back(p.values[n] - p.values[n - 1]);
  }
  p.B = p.differences.empty() ? 0 : *std::max_element(p.differences.begin(), p.differences.end());
  std::size_t k = 1;
  for (std::size_t n = (p.max_n + 1) / 2; n <= p.max_n; ++n) {
    if (n == 0) continue;
    k = std::max(k, p.values[n - 1] / n + 1);
  }
  p.k_linear = k;
  return p;
}

CassaigneVerdict cassaigne_check(const ComplexityProfile& profile, std::size_t bound) {
  CassaigneVerdict v;
  for (std::size_t i = 0; i < profile.differences.size(); ++i) {
    if (profile.differences[i] > bound) {
      v.bounded = false;
      v.first_n = i + 1;
      return v;
    }
    v.observed_max = std::max(v.observed_max, profile.differences[i]);
  }
  return v;
}

std::size_t extension_failure_count(const LanguageTable& table, std::size_t n, std::size_t m) {
  if (n + m > table.max_n())
    throw Error(ErrorKind::depth_exceeded, "n + m = " + std::to_string(n + m) + " exceeds table depth");
  std::size_t count = 0;
  for (const auto& w : table.level(n))
    if (!table.extends_uniquely_right(w, m)) ++count;
  return count;
}

std::size_t nonuniquely_left_extendable_count(const LanguageTable& table, std::size_t n) {
  if (n >= table.max_n()) throw Error(ErrorKind::depth_exceeded, "n must be below the table depth");
  std::size_t count = 0;
  for (const auto& w : table.level(n))
    if (table.left_extensions(w).size() >= 2) ++count;
  return count;
}

std::size_t right_special_count(const LanguageTable& table, std::size_t n) {
  if (n >= table.max_n()) throw Error(ErrorKind::depth_exceeded, "n must be below the table depth");
  std::size_t count = 0;
  for (const auto& w : table.level(n))
    if (table.right_extensions(w).size() >= 2) ++count;
  return count;
}

std::optional<std::size_t> morse_hedlund_flag(const ComplexityProfile& profile) {
  for (std::size_t n = 1; n <= profile.values.size(); ++n)
    if (profile.values[n - 1] <= n) return n;
  return std::nullopt;
}

}  // namespace subshift
