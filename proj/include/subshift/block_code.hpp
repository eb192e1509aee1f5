#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "subshift/alphabet.hpp"
#include "subshift/language_table.hpp"

namespace subshift {

/// Sliding block code of range R: the output at coordinate 0 is
/// rule(x[-R..R]). The rule is total on L_{2R+1} of the table it was built
/// against and undefined elsewhere.
class BlockCode {
 public:
  BlockCode(std::size_t range, Alphabet domain, Alphabet codomain, std::vector<Word> windows,
            std::vector<Symbol> images);

  /// Rule built by evaluating `rule` on every window of L_{2R+1}(table).
  static BlockCode from_rule(const LanguageTable& table, std::size_t range,
                             const std::function<Symbol(const Word&)>& rule);
  /// Images listed in canonical window order of L_{2R+1}(table).
  static BlockCode from_images(const LanguageTable& table, std::size_t range, std::vector<Symbol> images);
  static BlockCode identity(const LanguageTable& table, std::size_t range = 0);

  std::size_t range() const noexcept { return range_; }
  std::size_t window_length() const noexcept { return 2 * range_ + 1; }
  const Alphabet& domain() const noexcept { return domain_; }
  const Alphabet& codomain() const noexcept { return codomain_; }
  const std::vector<Word>& windows() const noexcept { return windows_; }
  const std::vector<Symbol>& images() const noexcept { return images_; }

  std::optional<Symbol> image(const Word& window) const;

  /// Whether the rule's domain is exactly L_{2R+1}(table).
  bool built_on(const LanguageTable& table) const;

  /// Text form: header `range<TAB>R`, then `window<TAB>symbol` per line in
  /// canonical window order.
  void write(std::ostream& out) const;
  static BlockCode read(std::istream& in, const Alphabet& domain, const Alphabet& codomain);

  friend bool operator==(const BlockCode& a, const BlockCode& b) {
    return a.range_ == b.range_ && a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.windows_ == b.windows_ &&
           a.images_ == b.images_;
  }

 private:
  std::size_t range_;
  Alphabet domain_;
  Alphabet codomain_;
  std::vector<Word> windows_;  // sorted
  std::vector<Symbol> images_;
};

/// Output of length |w| - 2R. Throws window_not_in_domain naming the window.
Word apply_to_word(const BlockCode& code, const Word& w);

/// outer ∘ inner, range R_outer + R_inner.
BlockCode compose(const BlockCode& outer, const BlockCode& inner, const LanguageTable& table);

/// σ^j as a range-|j| code: rule(w) = w[|j| + j].
BlockCode shift_power_code(long j, const LanguageTable& table);

/// Same map at a larger range; rule'(w) = rule(central subword of w).
BlockCode inflate(const BlockCode& code, std::size_t target_range, const LanguageTable& table);

bool codes_equal(const BlockCode& a, const BlockCode& b, const LanguageTable& table);

/// Smallest r <= range such that the rule only depends on the central
/// (2r+1)-window.
std::size_t minimal_range(const BlockCode& code, const LanguageTable& table);
/// The code rewritten at range r (r must be >= minimal_range).
BlockCode restrict_range(const BlockCode& code, std::size_t r, const LanguageTable& table);

struct EndoVerdict {
  enum class Kind { certified_exact, consistent_to_horizon, refuted };
  Kind kind;
  std::size_t horizon;
  std::optional<Word> witness;  // set iff refuted

  bool refuted() const noexcept { return kind == Kind::refuted; }
};

const char* to_string(EndoVerdict::Kind kind);

/// Checks that every w in L_n, 2R+1 <= n <= horizon, has image in L_{n-2R}.
/// With `sft_window` = longest forbidden word of an SFT, a pass at horizon
/// >= 2R + sft_window is exact.
EndoVerdict is_endomorphism(const BlockCode& code, const LanguageTable& table, std::size_t horizon,
                            std::optional<std::size_t> sft_window = std::nullopt);

}  // namespace subshift
