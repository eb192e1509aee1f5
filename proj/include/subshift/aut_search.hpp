#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "subshift/block_code.hpp"
#include "subshift/language_table.hpp"

namespace subshift {

struct SearchOptions {
  /// Upper bound on |A|^{P(2R+1)}, the size of the raw rule space.
  std::uint64_t budget = 10'000'000;
  /// Worker threads for the enumeration; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// |A|^{P(2R+1)}, saturating at UINT64_MAX.
std::uint64_t candidate_count(const LanguageTable& table, std::size_t range);

/// All range-R rules that are not refuted at `horizon`, in canonical order
/// (lexicographic on images listed in canonical window order).
///
/// Backtracking assigns rule entries along the window overlap graph and
/// checks every word of length <= horizon as soon as all of its windows are
/// assigned, so most of the rule space is never visited.
std::vector<BlockCode> enumerate_endomorphisms(const LanguageTable& table, std::size_t range, std::size_t horizon,
                                               const SearchOptions& options = {});

/// Code with a verified two-sided inverse at the stated horizon.
struct AutCertificate {
  BlockCode code;
  BlockCode inverse;
  std::size_t horizon;
  bool exact;  // both directions certified-exact (SFT case)
};

struct NotInvertible {
  std::size_t inv_range;
};

struct Refuted {
  Word witness;
};

using CertifyResult = std::variant<AutCertificate, NotInvertible, Refuted>;

/// Searches inverses of range 0..inv_range in increasing order; the inverse at
/// each range is forced entry by entry by ψ∘φ = id.
CertifyResult certify_automorphism(const BlockCode& code, const LanguageTable& table, std::size_t inv_range,
                                   std::size_t horizon, std::optional<std::size_t> sft_window = std::nullopt);

struct AutReport {
  std::size_t range = 0;
  std::size_t inv_range = 0;
  std::size_t horizon = 0;
  std::size_t table_depth = 0;
  std::uint64_t candidates = 0;
  std::uint64_t refuted_count = 0;
  std::vector<AutCertificate> certified;
  std::vector<BlockCode> unknown;
  /// Partition of `certified` (by index) under φ ~ σ^t∘φ, |t| <= shift_window.
  std::vector<std::vector<std::size_t>> cosets;
  std::size_t shift_window = 0;
  /// growth_counts[r] = |{φ certified : φ and φ^{-1} both have range <= r}|.
  std::vector<std::size_t> growth_counts;

  std::size_t coset_count() const { return cosets.size(); }
};

AutReport aut_group_mod_shift(const LanguageTable& table, std::size_t range, std::size_t inv_range,
                              std::size_t horizon, const SearchOptions& options = {},
                              std::optional<std::size_t> sft_window = std::nullopt);

/// Independent re-check of a report's invariants; returns one message per
/// failed check (empty when everything holds).
std::vector<std::string> recheck_report(const AutReport& report, const LanguageTable& table);

/// Certified codes that are σ^j for some |j| <= range.
std::vector<long> shift_powers_among(const AutReport& report, const LanguageTable& table);

}  // namespace subshift
