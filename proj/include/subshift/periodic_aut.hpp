#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "subshift/alphabet.hpp"
#include "subshift/block_code.hpp"
#include "subshift/language_table.hpp"
#include "subshift/shift_models.hpp"

namespace subshift {

struct Point {
  std::size_t orbit;
  std::size_t phase;
  friend bool operator==(const Point&, const Point&) = default;
};

/// A finite shift: the orbits of the given primitive seeds. Point (i, p) is
/// σ^p applied to the periodic point seed_i^∞, so the shift adds one to the
/// phase modulo the period.
class PeriodicShift {
 public:
  PeriodicShift(Alphabet alphabet, std::vector<Word> seeds);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Word>& seeds() const noexcept { return seeds_; }
  std::size_t orbit_count() const noexcept { return seeds_.size(); }
  std::size_t period(std::size_t orbit) const { return seeds_.at(orbit).size(); }
  std::size_t point_count() const noexcept { return offsets_.back(); }

  std::size_t index(Point p) const { return offsets_[p.orbit] + p.phase; }
  Point point(std::size_t index) const;
  std::size_t shift(std::size_t index) const;

  /// x(k) for the point with the given index.
  Symbol symbol_at(std::size_t index, long k) const;

  std::size_t lcm_of_periods() const;

 private:
  Alphabet alphabet_;
  std::vector<Word> seeds_;
  std::vector<std::size_t> offsets_;
};

/// Periodic spec without asymptotic points, or a union of such.
PeriodicShift periodic_shift(const ShiftSpec& spec);

struct PointPermutation {
  std::vector<std::size_t> image;

  std::size_t size() const { return image.size(); }
  std::size_t operator()(std::size_t i) const { return image[i]; }

  static PointPermutation identity(std::size_t n);
  /// (a * b)(i) = a(b(i))
  friend PointPermutation operator*(const PointPermutation& a, const PointPermutation& b);
  PointPermutation inverse() const;

  friend bool operator==(const PointPermutation&, const PointPermutation&) = default;
  friend auto operator<=>(const PointPermutation&, const PointPermutation&) = default;
};

PointPermutation shift_permutation(const PeriodicShift& ps);

/// Product of generalized symmetric groups S(n_1, m_1) x ... x S(n_s, m_s).
struct GroupDescriptor {
  std::vector<std::pair<std::size_t, std::size_t>> factors;  // (period, multiplicity), periods increasing
  boost::multiprecision::cpp_int order;                      // ∏ n_i^{m_i} m_i!

  /// ∏ n_i^{m_i}, the orbit-preserving part.
  boost::multiprecision::cpp_int rotation_order() const;
  /// ∏ m_i!
  boost::multiprecision::cpp_int permutation_order() const;
};

GroupDescriptor classify(const PeriodicShift& ps);

/// Per-orbit rotations and, within each period class, swaps of adjacent
/// orbits that match phases.
std::vector<PointPermutation> generators(const PeriodicShift& ps);

/// Closure of `gens` under composition; throws budget_exceeded past `limit`.
std::vector<PointPermutation> generate_group(const PeriodicShift& ps, const std::vector<PointPermutation>& gens,
                                             std::size_t limit = 1'000'000);

inline constexpr std::size_t kBruteForcePointLimit = 12;

/// Every bijection of the point set commuting with the shift, found by
/// backtracking on point images. Independent of `classify`.
std::vector<PointPermutation> brute_force_aut(const PeriodicShift& ps, std::size_t limit = 1'000'000);

struct FullGroupReport {
  std::vector<PointPermutation> elements;  // orbit-preserving automorphisms
  std::size_t order = 0;
  std::size_t group_order = 0;
  bool abelian = false;
  bool normal = false;
  std::size_t quotient_order = 0;
};

FullGroupReport full_group_intersection(const PeriodicShift& ps);

/// Smallest r such that central (2r+1)-windows tell all points apart.
std::size_t separating_radius(const PeriodicShift& ps);

/// Realises a point permutation as a block code on the shift's table.
BlockCode as_block_code(const PeriodicShift& ps, const PointPermutation& perm, const LanguageTable& table);

/// The action of a code on the point set, or nullopt if it sends some point
/// outside the set or is not bijective there.
std::optional<PointPermutation> point_action(const PeriodicShift& ps, const BlockCode& code);

/// Range-0 involution exchanging the two copies (0<->2, 1<->3) of the
/// doubling-pair construction.
BlockCode copy_swap_code(const LanguageTable& table);

/// Involution exchanging only the period-2^m orbits of the two copies,
/// fixing everything else; range 2^m.
BlockCode doubling_orbit_swap_code(const LanguageTable& table, unsigned m);

}  // namespace subshift
