#include "subshift/periodic_aut.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "subshift/error.hpp"

namespace subshift {

using boost::multiprecision::cpp_int;

PeriodicShift::PeriodicShift(Alphabet alphabet, std::vector<Word> seeds)
    : alphabet_(std::move(alphabet)), seeds_(std::move(seeds)) {
  if (seeds_.empty()) throw Error(ErrorKind::invalid_seeds, "no orbits");
  for (const auto& s : seeds_) {
    if (s.empty()) throw Error(ErrorKind::invalid_seeds, "empty seed");
    for (Symbol c : s)
      if (c >= alphabet_.size()) throw Error(ErrorKind::invalid_seeds, "seed symbol outside alphabet");
    if (minimal_period(s) != s.size())
      throw Error(ErrorKind::invalid_seeds, "seed '" + alphabet_.format(s) + "' is not primitive");
  }
  for (std::size_t i = 0; i < seeds_.size(); ++i)
    for (std::size_t j = i + 1; j < seeds_.size(); ++j)
      if (is_rotation_of(seeds_[i], seeds_[j]))
        throw Error(ErrorKind::duplicate_orbit,
                    "'" + alphabet_.format(seeds_[i]) + "' and '" + alphabet_.format(seeds_[j]) + "'");
  offsets_.push_back(0);
  for (const auto& s : seeds_) offsets_.push_back(offsets_.back() + s.size());
}

Point PeriodicShift::point(std::size_t idx) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), idx);
  const auto orbit = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  return {orbit, idx - offsets_[orbit]};
}

std::size_t PeriodicShift::shift(std::size_t idx) const {
  auto p = point(idx);
  return index(Point{p.orbit, (p.phase + 1) % period(p.orbit)});
}

Symbol PeriodicShift::symbol_at(std::size_t idx, long k) const {
  auto p = point(idx);
  const auto n = static_cast<long>(period(p.orbit));
  const long pos = ((static_cast<long>(p.phase) + k) % n + n) % n;
  return seeds_[p.orbit][static_cast<std::size_t>(pos)];
}

std::size_t PeriodicShift::lcm_of_periods() const {
  std::size_t l = 1;
  for (const auto& s : seeds_) l = std::lcm(l, s.size());
  return l;
}

PeriodicShift periodic_shift(const ShiftSpec& spec) {
  if (const auto* p = std::get_if<PeriodicSpec>(&spec.model)) {
    if (!p->asymptotic.empty())
      throw Error(ErrorKind::bad_params, "shift has non-periodic points; no finite point set");
    return PeriodicShift(p->alphabet, p->orbits);
  }
  if (const auto* u = std::get_if<UnionSpec>(&spec.model)) {
    validate(spec);
    std::vector<Word> seeds;
    Symbol offset = 0;
    for (const auto& part : u->parts) {
      auto sub = periodic_shift(part);
      for (auto seed : sub.seeds()) {
        for (auto& s : seed) s = static_cast<Symbol>(s + offset);
        seeds.push_back(std::move(seed));
      }
      offset = static_cast<Symbol>(offset + sub.alphabet().size());
    }
    return PeriodicShift(alphabet_of(spec), std::move(seeds));
  }
  throw Error(ErrorKind::bad_params, "not a periodic spec");
}

PointPermutation PointPermutation::identity(std::size_t n) {
  PointPermutation p;
  p.image.resize(n);
  std::iota(p.image.begin(), p.image.end(), 0);
  return p;
}

PointPermutation operator*(const PointPermutation& a, const PointPermutation& b) {
  PointPermutation c;
  c.image.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c.image[i] = a.image[b.image[i]];
  return c;
}

PointPermutation PointPermutation::inverse() const {
  PointPermutation inv;
  inv.image.resize(size());
  for (std::size_t i = 0; i < size(); ++i) inv.image[image[i]] = i;
  return inv;
}

PointPermutation shift_permutation(const PeriodicShift& ps) {
  PointPermutation s;
  for (std::size_t i = 0; i < ps.point_count(); ++i) s.image.push_back(ps.shift(i));
  return s;
}

cpp_int GroupDescriptor::rotation_order() const {
  cpp_int r = 1;
  for (auto [n, m] : factors) r *= boost::multiprecision::pow(cpp_int(n), static_cast<unsigned>(m));
  return r;
}

cpp_int GroupDescriptor::permutation_order() const {
  cpp_int r = 1;
  for (auto [n, m] : factors)
    for (std::size_t i = 2; i <= m; ++i) r *= i;
  return r;
}

GroupDescriptor classify(const PeriodicShift& ps) {
  std::map<std::size_t, std::size_t> multiplicity;
  for (const auto& s : ps.seeds()) ++multiplicity[s.size()];
  GroupDescriptor g;
  g.factors.assign(multiplicity.begin(), multiplicity.end());
  g.order = g.rotation_order() * g.permutation_order();
  return g;
}

std::vector<PointPermutation> generators(const PeriodicShift& ps) {
  const std::size_t n = ps.point_count();
  std::vector<PointPermutation> gens;
  for (std::size_t orbit = 0; orbit < ps.orbit_count(); ++orbit) {
    auto g = PointPermutation::identity(n);
    for (std::size_t phase = 0; phase < ps.period(orbit); ++phase)
      g.image[ps.index({orbit, phase})] = ps.index({orbit, (phase + 1) % ps.period(orbit)});
    gens.push_back(std::move(g));
  }
  std::map<std::size_t, std::vector<std::size_t>> by_period;
  for (std::size_t orbit = 0; orbit < ps.orbit_count(); ++orbit) by_period[ps.period(orbit)].push_back(orbit);
  for (const auto& [period, orbits] : by_period) {
    for (std::size_t j = 0; j + 1 < orbits.size(); ++j) {
      auto g = PointPermutation::identity(n);
      for (std::size_t phase = 0; phase < period; ++phase) {
        g.image[ps.index({orbits[j], phase})] = ps.index({orbits[j + 1], phase});
        g.image[ps.index({orbits[j + 1], phase})] = ps.index({orbits[j], phase});
      }
      gens.push_back(std::move(g));
    }
  }
  return gens;
}

std::vector<PointPermutation> generate_group(const PeriodicShift& ps, const std::vector<PointPermutation>& gens,
                                             std::size_t limit) {
  std::set<PointPermutation> seen{PointPermutation::identity(ps.point_count())};
  std::deque<PointPermutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    auto g = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& h : gens) {
      auto gh = h * g;
      if (seen.insert(gh).second) {
        if (seen.size() > limit) throw Error(ErrorKind::budget_exceeded, "group closure exceeds limit");
        frontier.push_back(std::move(gh));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<PointPermutation> brute_force_aut(const PeriodicShift& ps, std::size_t limit) {
  const std::size_t n = ps.point_count();
  if (n > kBruteForcePointLimit)
    throw Error(ErrorKind::budget_exceeded,
                std::to_string(n) + " points exceeds the brute-force limit of " + std::to_string(kBruteForcePointLimit));
  const auto sigma = shift_permutation(ps);
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> image(n, unset);
  std::vector<bool> used(n, false);
  std::vector<PointPermutation> out;

  // Fixing f(p) = q forces f(σ^k p) = σ^k q along the whole orbit of p; a
  // clash with an earlier choice or with injectivity prunes the branch.
  auto dfs = [&](auto&& self, std::size_t p) -> void {
    while (p < n && image[p] != unset) ++p;
    if (p == n) {
      PointPermutation f{image};
      if (f * sigma == sigma * f) {
        out.push_back(std::move(f));
        if (out.size() > limit) throw Error(ErrorKind::budget_exceeded, "automorphism count exceeds limit");
      }
      return;
    }
    for (std::size_t q = 0; q < n; ++q) {
      if (used[q]) continue;
      std::vector<std::size_t> assigned;
      bool ok = true;
      std::size_t src = p, dst = q;
      do {
        if (image[src] != unset) {
          ok = image[src] == dst;
          break;
        }
        if (used[dst]) {
          ok = false;
          break;
        }
        image[src] = dst;
        used[dst] = true;
        assigned.push_back(src);
        src = sigma(src);
        dst = sigma(dst);
      } while (true);
      if (ok) self(self, p + 1);
      for (auto s : assigned) {
        used[image[s]] = false;
        image[s] = unset;
      }
    }
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end());
  return out;
}

FullGroupReport full_group_intersection(const PeriodicShift& ps) {
  auto group = brute_force_aut(ps);
  FullGroupReport report;
  report.group_order = group.size();
  for (const auto& g : group) {
    bool preserves = true;
    for (std::size_t i = 0; i < ps.point_count() && preserves; ++i)
      preserves = ps.point(g(i)).orbit == ps.point(i).orbit;
    if (preserves) report.elements.push_back(g);
  }
  report.order = report.elements.size();
  report.quotient_order = report.order ? report.group_order / report.order : 0;

  report.abelian = true;
  for (std::size_t i = 0; i < report.elements.size() && report.abelian; ++i)
    for (std::size_t j = i + 1; j < report.elements.size() && report.abelian; ++j)
      report.abelian = report.elements[i] * report.elements[j] == report.elements[j] * report.elements[i];

  const std::set<PointPermutation> members(report.elements.begin(), report.elements.end());
  report.normal = true;
  for (const auto& g : group) {
    const auto g_inv = g.inverse();
    for (const auto& h : report.elements)
      if (!members.count(g * h * g_inv)) {
        report.normal = false;
        break;
      }
    if (!report.normal) break;
  }
  return report;
}

std::size_t separating_radius(const PeriodicShift& ps) {
  for (std::size_t r = 0;; ++r) {
    std::set<Word> windows;
    for (std::size_t i = 0; i < ps.point_count(); ++i) {
      Word w;
      for (long k = -static_cast<long>(r); k <= static_cast<long>(r); ++k) w.push_back(ps.symbol_at(i, k));
      windows.insert(std::move(w));
    }
    if (windows.size() == ps.point_count()) return r;
  }
}

BlockCode as_block_code(const PeriodicShift& ps, const PointPermutation& perm, const LanguageTable& table) {
  if (!(table.alphabet() == ps.alphabet())) throw Error(ErrorKind::alphabet_mismatch, "table alphabet differs");
  if (perm.size() != ps.point_count()) throw Error(ErrorKind::bad_params, "permutation size differs from point count");
  const std::size_t r = separating_radius(ps);
  if (2 * r + 1 > table.max_n())
    throw Error(ErrorKind::depth_exceeded, "needs table depth " + std::to_string(2 * r + 1));
  std::map<Word, std::size_t> owner;
  for (std::size_t i = 0; i < ps.point_count(); ++i) {
    Word w;
    for (long k = -static_cast<long>(r); k <= static_cast<long>(r); ++k) w.push_back(ps.symbol_at(i, k));
    owner.emplace(std::move(w), i);
  }
  return BlockCode::from_rule(table, r, [&](const Word& w) {
    auto it = owner.find(w);
    if (it == owner.end()) throw Error(ErrorKind::table_mismatch, "table window is not a window of the point set");
    return ps.symbol_at(perm(it->second), 0);
  });
}

std::optional<PointPermutation> point_action(const PeriodicShift& ps, const BlockCode& code) {
  if (!(code.domain() == ps.alphabet()) || !(code.codomain() == ps.alphabet())) return std::nullopt;
  const long r = static_cast<long>(code.range());
  PointPermutation f;
  for (std::size_t i = 0; i < ps.point_count(); ++i) {
    const std::size_t n = ps.period(ps.point(i).orbit);
    Word image;
    for (std::size_t k = 0; k < n; ++k) {
      Word w;
      for (long d = -r; d <= r; ++d) w.push_back(ps.symbol_at(i, static_cast<long>(k) + d));
      auto s = code.image(w);
      if (!s) return std::nullopt;
      image.push_back(*s);
    }
    // image is one period of the image point; find the point it spells
    std::optional<std::size_t> match;
    for (std::size_t j = 0; j < ps.point_count() && !match; ++j) {
      const std::size_t span = std::lcm(n, ps.period(ps.point(j).orbit));
      bool same = true;
      for (std::size_t k = 0; k < span && same; ++k) same = ps.symbol_at(j, static_cast<long>(k)) == image[k % n];
      if (same) match = j;
    }
    if (!match) return std::nullopt;
    f.image.push_back(*match);
  }
  std::vector<std::size_t> sorted = f.image;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  return f;
}

BlockCode copy_swap_code(const LanguageTable& table) {
  if (table.alphabet().size() != 4) throw Error(ErrorKind::alphabet_mismatch, "expected the 4-symbol doubling pair");
  return BlockCode::from_rule(table, 0, [](const Word& w) { return static_cast<Symbol>(w[0] ^ 2u); });
}

BlockCode doubling_orbit_swap_code(const LanguageTable& table, unsigned m) {
  if (table.alphabet().size() != 4) throw Error(ErrorKind::alphabet_mismatch, "expected the 4-symbol doubling pair");
  const std::size_t gap = std::size_t{1} << m;
  const std::size_t r = gap;
  if (2 * r + 1 > table.max_n()) throw Error(ErrorKind::depth_exceeded, "needs table depth " + std::to_string(2 * r + 1));
  // A radius-2^m window of x_m always shows two marks 2^m apart; windows of
  // any other orbit show a different gap or fewer than two marks.
  return BlockCode::from_rule(table, r, [gap, r](const Word& w) {
    std::vector<std::size_t> marks;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] & 1u) marks.push_back(i);
    bool on_orbit = marks.size() >= 2;
    for (std::size_t i = 1; i < marks.size() && on_orbit; ++i) on_orbit = marks[i] - marks[i - 1] == gap;
    return static_cast<Symbol>(on_orbit ? (w[r] ^ 2u) : w[r]);
  });
}

}  // namespace subshift
