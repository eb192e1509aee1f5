#include "subshift/aut_search.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <thread>

#include "subshift/error.hpp"

namespace subshift {

std::uint64_t candidate_count(const LanguageTable& table, std::size_t range) {
  const std::uint64_t a = table.alphabet().size();
  const std::size_t windows = table.count(2 * range + 1);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < windows; ++i) {
    if (total > UINT64_MAX / a) return UINT64_MAX;
    total *= a;
  }
  return total;
}

namespace {

// Constraint: the image of a word (given by its window indices) must lie in
// L_{n-2R}.
struct Constraint {
  std::vector<std::size_t> windows;
};

class RuleSearch {
 public:
  RuleSearch(const LanguageTable& table, std::size_t range, std::size_t horizon) : table_(table) {
    const std::size_t len = 2 * range + 1;
    auto windows = table.level(len);
    const std::size_t count = windows.size();

    for (const auto& w : table.level(1)) values_.push_back(w.front());

    // Visit windows along overlaps so that consecutive assignments share
    // constraints early.
    std::vector<bool> seen(count, false);
    auto push = [&](std::size_t i) {
      if (!seen[i]) {
        seen[i] = true;
        order_.push_back(i);
      }
    };
    for (std::size_t start = 0; start < count; ++start) {
      if (seen[start]) continue;
      std::size_t head = order_.size();
      push(start);
      while (head < order_.size()) {
        const Word& w = windows[order_[head++]];
        Word probe(len);
        for (Symbol a : values_) {
          std::copy(w.begin() + 1, w.end(), probe.begin());
          probe.back() = a;
          if (auto i = table.index_of(probe)) push(*i);
          probe.front() = a;
          std::copy(w.begin(), w.end() - 1, probe.begin() + 1);
          if (auto i = table.index_of(probe)) push(*i);
        }
      }
    }
    std::vector<std::size_t> position(count);
    for (std::size_t p = 0; p < count; ++p) position[order_[p]] = p;

    buckets_.resize(count);
    for (std::size_t n = len + 1; n <= horizon; ++n) {
      for (const auto& u : table.level(n)) {
        Constraint c;
        std::size_t last = 0;
        for (std::size_t i = 0; i + len <= n; ++i) {
          Word win(u.begin() + static_cast<std::ptrdiff_t>(i), u.begin() + static_cast<std::ptrdiff_t>(i + len));
          auto idx = *table.index_of(win);
          c.windows.push_back(idx);
          last = std::max(last, position[idx]);
        }
        buckets_[last].push_back(std::move(c));
      }
    }
  }

  std::size_t variable_count() const { return order_.size(); }
  const std::vector<Symbol>& values() const { return values_; }

  /// All solutions with the first variable fixed to `first`.
  std::vector<std::vector<Symbol>> solve_from(Symbol first) const {
    std::vector<std::vector<Symbol>> out;
    std::vector<Symbol> assignment(order_.size(), 0);
    assignment[order_[0]] = first;
    if (consistent(0, assignment)) dfs(1, assignment, out);
    return out;
  }

 private:
  bool consistent(std::size_t depth, const std::vector<Symbol>& assignment) const {
    Word image;
    for (const auto& c : buckets_[depth]) {
      image.resize(c.windows.size());
      for (std::size_t i = 0; i < c.windows.size(); ++i) image[i] = assignment[c.windows[i]];
      if (!table_.contains(image)) return false;
    }
    return true;
  }

  void dfs(std::size_t depth, std::vector<Symbol>& assignment, std::vector<std::vector<Symbol>>& out) const {
    if (depth == order_.size()) {
      out.push_back(assignment);
      return;
    }
    for (Symbol v : values_) {
      assignment[order_[depth]] = v;
      if (consistent(depth, assignment)) dfs(depth + 1, assignment, out);
    }
  }

  const LanguageTable& table_;
  std::vector<Symbol> values_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<Constraint>> buckets_;
};

}  // namespace

std::vector<BlockCode> enumerate_endomorphisms(const LanguageTable& table, std::size_t range, std::size_t horizon,
                                               const SearchOptions& options) {
  const std::size_t len = 2 * range + 1;
  if (horizon > table.max_n())
    throw Error(ErrorKind::depth_exceeded, "horizon " + std::to_string(horizon) + " exceeds table depth");
  if (horizon < len) throw Error(ErrorKind::bad_params, "horizon below window length " + std::to_string(len));
  const auto bound = candidate_count(table, range);
  if (bound > options.budget)
    throw Error(ErrorKind::search_budget_exceeded,
                "|A|^P(2R+1) = " + std::to_string(table.alphabet().size()) + "^" + std::to_string(table.count(len)) +
                    (bound == UINT64_MAX ? std::string(" (overflow)") : " = " + std::to_string(bound)) +
                    " exceeds budget " + std::to_string(options.budget));

  const RuleSearch search(table, range, horizon);
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::vector<std::vector<Symbol>>> parts(search.values().size());
  if (threads > 1 && search.values().size() > 1) {
    std::vector<std::future<std::vector<std::vector<Symbol>>>> futures;
    for (Symbol v : search.values())
      futures.push_back(std::async(std::launch::async, [&search, v] { return search.solve_from(v); }));
    for (std::size_t i = 0; i < futures.size(); ++i) parts[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < search.values().size(); ++i) parts[i] = search.solve_from(search.values()[i]);
  }

  std::vector<std::vector<Symbol>> solutions;
  for (auto& p : parts)
    for (auto& s : p) solutions.push_back(std::move(s));
  std::sort(solutions.begin(), solutions.end());

  std::vector<BlockCode> codes;
  codes.reserve(solutions.size());
  for (auto& s : solutions) codes.push_back(BlockCode::from_images(table, range, std::move(s)));
  return codes;
}

namespace {

bool is_identity_on(const BlockCode& code, const LanguageTable& table) {
  return codes_equal(code, BlockCode::identity(table, 0), table);
}

std::optional<AutCertificate> try_inverse(const BlockCode& code, const BlockCode& candidate, const LanguageTable& table,
                                          std::size_t horizon, std::optional<std::size_t> sft_window,
                                          const EndoVerdict& forward) {
  try {
    if (!is_identity_on(compose(candidate, code, table), table)) return std::nullopt;
    if (!is_identity_on(compose(code, candidate, table), table)) return std::nullopt;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::window_not_in_domain) return std::nullopt;
    throw;
  }
  auto backward = is_endomorphism(candidate, table, horizon, sft_window);
  if (backward.refuted()) return std::nullopt;
  const bool exact = forward.kind == EndoVerdict::Kind::certified_exact &&
                     backward.kind == EndoVerdict::Kind::certified_exact;
  return AutCertificate{code, candidate, horizon, exact};
}

}  // namespace

CertifyResult certify_automorphism(const BlockCode& code, const LanguageTable& table, std::size_t inv_range,
                                   std::size_t horizon, std::optional<std::size_t> sft_window) {
  const std::size_t needed = 2 * (code.range() + inv_range) + 1;
  if (horizon < needed)
    throw Error(ErrorKind::depth_exceeded,
                "horizon " + std::to_string(horizon) + " below 2(R+R_inv)+1 = " + std::to_string(needed));
  auto forward = is_endomorphism(code, table, horizon, sft_window);
  if (forward.refuted()) return Refuted{*forward.witness};

  std::vector<Symbol> values;
  for (const auto& w : table.level(1)) values.push_back(w.front());

  for (std::size_t r = 0; r <= inv_range; ++r) {
    auto small = table.level(2 * r + 1);
    std::vector<int> forced(small.size(), -1);
    bool conflict = false;
    for (const auto& w : table.level(2 * (code.range() + r) + 1)) {
      auto u = apply_to_word(code, w);
      auto idx = table.index_of(u);
      if (!idx) return Refuted{w};
      const int want = w[code.range() + r];
      if (forced[*idx] >= 0 && forced[*idx] != want) {
        conflict = true;
        break;
      }
      forced[*idx] = want;
    }
    if (conflict) continue;

    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < forced.size(); ++i)
      if (forced[i] < 0) free.push_back(i);
    // Unforced entries only arise when the code misses part of the language;
    // a few fill-ins are tried in canonical order before giving up.
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < free.size() && combos <= 4096; ++i) combos *= values.size();
    if (combos > 4096) continue;
    std::vector<std::size_t> digits(free.size(), 0);
    for (std::uint64_t c = 0; c < combos; ++c) {
      std::vector<Symbol> images(forced.size());
      for (std::size_t i = 0; i < forced.size(); ++i) images[i] = forced[i] >= 0 ? static_cast<Symbol>(forced[i]) : 0;
      for (std::size_t i = 0; i < free.size(); ++i) images[free[i]] = values[digits[i]];
      auto cert = try_inverse(code, BlockCode::from_images(table, r, std::move(images)), table, horizon, sft_window,
                              forward);
      if (cert) return *cert;
      for (std::size_t i = free.size(); i-- > 0;) {
        if (++digits[i] < values.size()) break;
        digits[i] = 0;
      }
    }
  }
  return NotInvertible{inv_range};
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<std::size_t>> classes() {
    std::vector<std::vector<std::size_t>> out;
    std::vector<long> slot(parent.size(), -1);
    for (std::size_t i = 0; i < parent.size(); ++i) {
      auto root = find(i);
      if (slot[root] < 0) {
        slot[root] = static_cast<long>(out.size());
        out.emplace_back();
      }
      out[static_cast<std::size_t>(slot[root])].push_back(i);
    }
    return out;
  }
};

// Largest |t| such that σ^t composed with a range-R code still fits the table.
std::size_t usable_shift_window(const LanguageTable& table, std::size_t range, std::size_t wanted) {
  const std::size_t max_total = (table.max_n() - 1) / 2;
  if (max_total < range) return 0;
  return std::min(wanted, max_total - range);
}

enum class Side { pre, post };

std::vector<std::vector<std::size_t>> shift_classes(const std::vector<AutCertificate>& certified,
                                                    const LanguageTable& table, std::size_t window, Side side) {
  DisjointSets sets(certified.size());
  for (std::size_t i = 0; i < certified.size(); ++i) {
    for (long t = -static_cast<long>(window); t <= static_cast<long>(window); ++t) {
      auto shift = shift_power_code(t, table);
      auto moved = side == Side::pre ? compose(shift, certified[i].code, table) : compose(certified[i].code, shift, table);
      for (std::size_t j = i + 1; j < certified.size(); ++j)
        if (sets.find(i) != sets.find(j) && codes_equal(moved, certified[j].code, table)) sets.unite(i, j);
    }
  }
  return sets.classes();
}

}  // namespace

AutReport aut_group_mod_shift(const LanguageTable& table, std::size_t range, std::size_t inv_range,
                              std::size_t horizon, const SearchOptions& options,
                              std::optional<std::size_t> sft_window) {
  AutReport report;
  report.range = range;
  report.inv_range = inv_range;
  report.horizon = horizon;
  report.table_depth = table.max_n();
  const std::size_t needed = 2 * (range + inv_range) + 1;
  if (horizon < needed)
    throw Error(ErrorKind::depth_exceeded,
                "horizon " + std::to_string(horizon) + " below 2(R+R_inv)+1 = " + std::to_string(needed));

  auto endos = enumerate_endomorphisms(table, range, horizon, options);
  report.candidates = candidate_count(table, range);
  report.refuted_count = report.candidates - endos.size();

  for (auto& code : endos) {
    auto result = certify_automorphism(code, table, inv_range, horizon, sft_window);
    if (auto* cert = std::get_if<AutCertificate>(&result)) report.certified.push_back(std::move(*cert));
    else if (std::holds_alternative<NotInvertible>(result)) report.unknown.push_back(std::move(code));
    else ++report.refuted_count;
  }

  report.shift_window = usable_shift_window(table, range, range + inv_range);
  report.cosets = shift_classes(report.certified, table, report.shift_window, Side::pre);

  for (std::size_t r = 0; r <= range; ++r) {
    std::size_t count = 0;
    for (const auto& c : report.certified)
      if (minimal_range(c.code, table) <= r && minimal_range(c.inverse, table) <= r) ++count;
    report.growth_counts.push_back(count);
  }
  return report;
}

std::vector<long> shift_powers_among(const AutReport& report, const LanguageTable& table) {
  std::vector<long> out;
  for (const auto& c : report.certified)
    for (long j = -static_cast<long>(report.range); j <= static_cast<long>(report.range); ++j)
      if (codes_equal(c.code, shift_power_code(j, table), table)) {
        out.push_back(j);
        break;
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> recheck_report(const AutReport& report, const LanguageTable& table) {
  std::vector<std::string> failures;
  const auto identity = BlockCode::identity(table, 0);

  for (std::size_t i = 0; i < report.certified.size(); ++i) {
    const auto& c = report.certified[i];
    if (!codes_equal(compose(c.inverse, c.code, table), identity, table) ||
        !codes_equal(compose(c.code, c.inverse, table), identity, table))
      failures.push_back("soundness: certificate " + std::to_string(i) + " inverse does not compose to identity");
  }

  const long expect = static_cast<long>(std::min(report.range, report.inv_range));
  auto powers = shift_powers_among(report, table);
  for (long j = -expect; j <= expect; ++j)
    if (!std::binary_search(powers.begin(), powers.end(), j))
      failures.push_back("shift power " + std::to_string(j) + " missing from certified set");

  std::vector<std::size_t> members;
  for (const auto& cls : report.cosets) members.insert(members.end(), cls.begin(), cls.end());
  std::sort(members.begin(), members.end());
  std::vector<std::size_t> all(report.certified.size());
  std::iota(all.begin(), all.end(), 0);
  if (members != all) failures.push_back("cosets do not partition the certified set");

  if (!std::is_sorted(report.growth_counts.begin(), report.growth_counts.end()))
    failures.push_back("growth counts are not nondecreasing");

  if (2 * (report.range + 1) + 1 <= table.max_n()) {
    auto sigma = shift_power_code(1, table);
    for (std::size_t i = 0; i < report.certified.size(); ++i) {
      const auto& code = report.certified[i].code;
      if (!codes_equal(compose(sigma, code, table), compose(code, sigma, table), table))
        failures.push_back("certificate " + std::to_string(i) + " does not commute with the shift");
    }
  }

  auto post = shift_classes(report.certified, table, report.shift_window, Side::post);
  if (post != report.cosets) failures.push_back("pre- and post-composition cosets disagree");
  return failures;
}

}  // namespace subshift
