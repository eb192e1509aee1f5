#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "subshift/alphabet.hpp"

namespace subshift {

/// The words of length 1..max_n of a subshift, each level sorted in canonical
/// (lexicographic by symbol index) order.
///
/// Construction validates factor-closure and bi-extendability within the
/// depth; the table is immutable afterwards. Queries beyond `max_n` throw
/// depth_exceeded rather than guessing.
class LanguageTable {
 public:
  /// `levels[n-1]` holds the words of length n. Levels are sorted and
  /// deduplicated here.
  LanguageTable(Alphabet alphabet, std::size_t max_n, std::vector<std::vector<Word>> levels);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t max_n() const noexcept { return max_n_; }

  /// L_n; n = 0 yields the single empty word.
  std::span<const Word> level(std::size_t n) const;
  std::size_t count(std::size_t n) const { return level(n).size(); }

  bool contains(const Word& w) const;
  /// Position of `w` within its level, if present.
  std::optional<std::size_t> index_of(const Word& w) const;

  std::vector<Symbol> right_extensions(const Word& w) const;
  std::vector<Symbol> left_extensions(const Word& w) const;

  /// True iff exactly one word of length |w|+m has `w` as its prefix.
  bool extends_uniquely_right(const Word& w, std::size_t m) const;
  /// Number of words of length |w|+m with prefix `w`.
  std::size_t count_with_prefix(const Word& w, std::size_t m) const;

  void write(std::ostream& out) const;
  static LanguageTable read(std::istream& in);

  friend bool operator==(const LanguageTable& a, const LanguageTable& b) {
    return a.alphabet_ == b.alphabet_ && a.max_n_ == b.max_n_ && a.levels_ == b.levels_;
  }

 private:
  void require_depth(std::size_t n) const;
  void require_member(const Word& w) const;
  void validate() const;

  Alphabet alphabet_;
  std::size_t max_n_;
  std::vector<std::vector<Word>> levels_;  // levels_[n] = L_n, levels_[0] = {ε}
};

/// All factors of length 1..max_n of the given finite words, collected into
/// per-length sorted sets. No bi-extendability is implied.
std::vector<std::vector<Word>> factor_levels(std::span<const Word> sources, std::size_t max_n);

/// Merge `extra` into `levels` (same shape) keeping each level sorted/unique.
void merge_levels(std::vector<std::vector<Word>>& levels, const std::vector<std::vector<Word>>& extra);

}  // namespace subshift
