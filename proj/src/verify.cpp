#include "subshift/verify.hpp"

#include <algorithm>
#include <sstream>

#include "subshift/aut_search.hpp"
#include "subshift/complexity.hpp"
#include "subshift/error.hpp"
#include "subshift/periodic_aut.hpp"
#include "subshift/spec_io.hpp"

namespace subshift {

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skipped: return "SKIP";
  }
  return "?";
}

bool SuiteResult::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::fail; });
}

nlohmann::ordered_json SuiteResult::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["passed"] = passed();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) arr.push_back({{"label", c.label}, {"status", to_string(c.status)}, {"detail", c.detail}});
  j["checks"] = arr;
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"sturmian", "periodic", "growth", "cassaigne", "boshernitzan", "examples-6"};
  return names;
}

namespace {

Check make(std::string label, bool ok, std::string detail) {
  return {std::move(label), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)};
}

Check skip(std::string label, std::string reason) { return {std::move(label), CheckStatus::skipped, std::move(reason)}; }

template <class Range>
std::string join(const Range& values) {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : values) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  return out.str();
}

std::size_t aut_table_depth(const SuiteParams& p) {
  return std::max({p.max_n, p.horizon, 2 * (2 * p.range + p.inv_range) + 1});
}

SearchOptions search_options(const SuiteParams& p) { return SearchOptions{p.budget, p.threads}; }

bool aperiodic_minimal(const ShiftSpec& spec, const ComplexityProfile& prof) {
  return (std::holds_alternative<SturmianSpec>(spec.model) || std::holds_alternative<SubstitutionSpec>(spec.model)) &&
         !morse_hedlund_flag(prof);
}

// P(n) = n + 1 and one right/left special word per length.
void sturmian_language_checks(const LanguageTable& table, std::vector<Check>& out) {
  auto prof = profile(table);
  std::optional<std::size_t> bad;
  for (std::size_t n = 1; n <= prof.max_n && !bad; ++n)
    if (prof.P(n) != n + 1) bad = n;
  out.push_back(make("sturmian-complexity", !bad,
                     bad ? "P(" + std::to_string(*bad) + ") = " + std::to_string(prof.P(*bad))
                         : "P(n) = n+1 for n <= " + std::to_string(prof.max_n)));
  std::optional<std::size_t> bad_special;
  for (std::size_t n = 1; n < table.max_n() && !bad_special; ++n)
    if (right_special_count(table, n) != 1 || nonuniquely_left_extendable_count(table, n) != 1) bad_special = n;
  out.push_back(make("sturmian-special-factors", !bad_special,
                     bad_special ? "n = " + std::to_string(*bad_special)
                                 : "one right- and one left-special word per length"));
}

SuiteResult suite_sturmian(const ShiftSpec& spec, const SuiteParams& p) {
  SuiteResult r{"sturmian", {}};
  if (!std::holds_alternative<SturmianSpec>(spec.model)) {
    r.checks.push_back(make("sturmian-spec", false, "spec is not a sturmian model"));
    return r;
  }
  auto table = generate_language(spec, aut_table_depth(p));
  sturmian_language_checks(generate_language(spec, p.max_n), r.checks);
  auto report = aut_group_mod_shift(table, p.range, p.inv_range, p.horizon, search_options(p));
  auto powers = shift_powers_among(report, table);
  const long expect = static_cast<long>(std::min(p.range, p.inv_range));
  const bool only_powers = powers.size() == report.certified.size() &&
                           powers.size() == static_cast<std::size_t>(2 * expect + 1);
  r.checks.push_back(make("sturmian-rigidity-certified", only_powers,
                          "certified " + std::to_string(report.certified.size()) + ", shift powers {" + join(powers) +
                              "}"));
  r.checks.push_back(make("sturmian-rigidity-cosets", report.coset_count() == 1,
                          "coset count " + std::to_string(report.coset_count())));
  r.checks.push_back(make("sturmian-rigidity-unknown", report.unknown.empty(),
                          std::to_string(report.unknown.size()) + " unknown codes"));
  auto failures = recheck_report(report, table);
  r.checks.push_back(make("aut-report-recheck", failures.empty(), failures.empty() ? "ok" : failures.front()));
  return r;
}

SuiteResult suite_periodic(const ShiftSpec& spec, const SuiteParams& p) {
  SuiteResult r{"periodic", {}};
  if (!is_periodic_model(spec)) {
    r.checks.push_back(make("periodic-spec", false, "spec is not purely periodic"));
    return r;
  }
  auto ps = periodic_shift(spec);
  auto desc = classify(ps);
  std::vector<std::string> factors;
  for (auto [n, m] : desc.factors) factors.push_back("S(" + std::to_string(n) + "," + std::to_string(m) + ")");
  const std::string order = desc.order.str();

  if (ps.point_count() > kBruteForcePointLimit) {
    r.checks.push_back(skip("periodic-classification", "more than 12 points; formula order " + order));
    return r;
  }
  auto group = brute_force_aut(ps);
  r.checks.push_back(make("periodic-classification", desc.order == group.size(),
                          join(factors) + " order " + order + ", brute force " + std::to_string(group.size())));
  auto closure = generate_group(ps, generators(ps));
  r.checks.push_back(make("periodic-generators", closure == group,
                          "generated " + std::to_string(closure.size()) + " of " + std::to_string(group.size())));

  auto full = full_group_intersection(ps);
  r.checks.push_back(make("full-group-order", desc.rotation_order() == full.order,
                          "orbit-preserving order " + std::to_string(full.order) + ", expected " +
                              desc.rotation_order().str()));
  r.checks.push_back(make("full-group-abelian", full.abelian, full.abelian ? "abelian" : "not abelian"));
  r.checks.push_back(make("full-group-normal", full.normal, full.normal ? "normal" : "not normal"));
  r.checks.push_back(make("full-group-quotient", desc.permutation_order() == full.quotient_order,
                          "quotient order " + std::to_string(full.quotient_order) + ", expected " +
                              desc.permutation_order().str()));

  // Morse-Hedlund: once P(n) <= n the complexity settles at the point count.
  {
    auto table = generate_language(spec, std::max<std::size_t>(p.max_n, 2 * ps.point_count()));
    auto prof = profile(table);
    auto flag = morse_hedlund_flag(prof);
    bool ok = flag.has_value();
    if (flag)
      for (std::size_t n = std::max(*flag, ps.lcm_of_periods()); n <= prof.max_n; ++n)
        ok = ok && prof.P(n) == ps.point_count();
    r.checks.push_back(make("morse-hedlund", ok,
                            flag ? "P(n) <= n first at n = " + std::to_string(*flag) + ", points " +
                                       std::to_string(ps.point_count())
                                 : "no n with P(n) <= n"));
  }

  // Cross-check with the block-code search at the separating radius.
  const std::size_t radius = separating_radius(ps);
  const std::size_t horizon = 4 * radius + 1;
  auto table = generate_language(spec, std::max(horizon, 2 * (3 * radius) + 1));
  if (candidate_count(table, radius) > p.budget) {
    r.checks.push_back(skip("periodic-block-code-cross-check", "rule space exceeds budget at radius " +
                                                                   std::to_string(radius)));
    return r;
  }
  auto report = aut_group_mod_shift(table, radius, radius, horizon, search_options(p));
  std::vector<PointPermutation> actions;
  bool all_act = true;
  for (const auto& c : report.certified) {
    auto a = point_action(ps, c.code);
    if (a) actions.push_back(*a);
    else all_act = false;
  }
  std::sort(actions.begin(), actions.end());
  const bool bijective = all_act && std::adjacent_find(actions.begin(), actions.end()) == actions.end();
  r.checks.push_back(make("periodic-block-code-cross-check", bijective && actions == group,
                          "certified " + std::to_string(report.certified.size()) + " at range " +
                              std::to_string(radius) + ", brute force " + std::to_string(group.size())));
  return r;
}

SuiteResult suite_growth(const ShiftSpec& spec, const SuiteParams& p) {
  SuiteResult r{"growth", {}};
  auto table = generate_language(spec, aut_table_depth(p));
  auto prof = profile(generate_language(spec, p.max_n));
  if (is_periodic_model(spec) || morse_hedlund_flag(prof)) {
    r.checks.push_back(skip("growth-bound", "periodic shift; growth bound targets aperiodic shifts"));
    return r;
  }
  auto report = aut_group_mod_shift(table, p.range, p.inv_range, p.horizon, search_options(p));
  // No word of an aperiodic minimal shift pins down a single point, so the
  // singleton-cylinder constant is 0.
  const std::size_t C = 0;
  bool ok = true;
  std::vector<std::string> parts;
  for (std::size_t rr = 0; rr < report.growth_counts.size(); ++rr) {
    const std::size_t bound = prof.B * prof.k_linear * (C + 2) * (rr + 1);
    ok = ok && report.growth_counts[rr] <= bound;
    parts.push_back(std::to_string(report.growth_counts[rr]) + "<=" + std::to_string(bound));
  }
  r.checks.push_back(make("growth-bound", ok,
                          "B=" + std::to_string(prof.B) + " k=" + std::to_string(prof.k_linear) + " counts " +
                              join(parts)));
  r.checks.push_back(make("growth-monotone",
                          std::is_sorted(report.growth_counts.begin(), report.growth_counts.end()),
                          join(report.growth_counts)));
  if (aperiodic_minimal(spec, prof))
    r.checks.push_back(make("minimal-coset-bound", report.coset_count() < prof.k_linear,
                            std::to_string(report.coset_count()) + " cosets < k=" + std::to_string(prof.k_linear)));
  return r;
}

SuiteResult suite_cassaigne(const ShiftSpec& spec, const SuiteParams& p) {
  SuiteResult r{"cassaigne", {}};
  auto table = generate_language(spec, p.max_n);
  auto prof = profile(table);
  auto verdict = cassaigne_check(prof, prof.B);
  r.checks.push_back(make("cassaigne-difference-bound", verdict.bounded,
                          "differences bounded by B=" + std::to_string(prof.B) + " up to n=" + std::to_string(p.max_n)));
  std::optional<std::string> bad;
  for (std::size_t n = 1; n <= p.max_n && !bad; ++n)
    for (std::size_t m = 0; n + m <= p.max_n && !bad; ++m) {
      auto count = extension_failure_count(table, n, m);
      if (count > prof.B * m)
        bad = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " count " + std::to_string(count);
    }
  r.checks.push_back(make("extension-failure-bound", !bad, bad ? *bad : "count(n,m) <= B*m for n+m <= " +
                                                                            std::to_string(p.max_n)));
  return r;
}

SuiteResult suite_boshernitzan(const ShiftSpec& spec, const SuiteParams& p) {
  SuiteResult r{"boshernitzan", {}};
  auto table = generate_language(spec, p.max_n);
  auto prof = profile(table);
  if (!aperiodic_minimal(spec, prof)) {
    r.checks.push_back(skip("left-special-count", "not an aperiodic minimal model"));
    return r;
  }
  std::vector<std::size_t> counts;
  for (std::size_t n = 1; n < p.max_n; ++n) counts.push_back(nonuniquely_left_extendable_count(table, n));
  const std::size_t limit = prof.k_linear - 1;
  const auto worst = *std::max_element(counts.begin(), counts.end());
  const bool some = std::any_of(counts.begin() + static_cast<std::ptrdiff_t>(counts.size() / 2), counts.end(),
                                [limit](std::size_t c) { return c <= limit; });
  r.checks.push_back(make("left-special-count-recurrent", some,
                          "count <= k-1 = " + std::to_string(limit) + " recurs in the upper half; counts " +
                              join(counts)));
  if (worst <= limit)
    r.checks.push_back(make("left-special-count-uniform", true, "max " + std::to_string(worst)));
  else
    r.checks.push_back(skip("left-special-count-uniform",
                            "max " + std::to_string(worst) + " > k-1 at some lengths; only recurrence is implied"));
  return r;
}

SuiteResult suite_examples6(const SuiteParams& p) {
  SuiteResult r{"examples-6", {}};
  const std::size_t N = p.max_n;

  for (unsigned k : {2u, 3u}) {
    BuiltinParams bp;
    bp.k = k;
    auto prof = profile(generate_language(builtin_example("union-sturmian", bp), N));
    std::optional<std::size_t> bad;
    for (std::size_t n = 1; n <= N && !bad; ++n)
      if (prof.P(n) != k * n + k) bad = n;
    r.checks.push_back(make("union-sturmian-complexity-k" + std::to_string(k), !bad,
                            bad ? "P(" + std::to_string(*bad) + ") = " + std::to_string(prof.P(*bad))
                                : "P(n) = " + std::to_string(k) + "n+" + std::to_string(k) + " for n <= " +
                                      std::to_string(N)));
  }
  {
    BuiltinParams bp;
    bp.k = 2;
    auto spec = builtin_example("union-sturmian", bp);
    auto table = generate_language(spec, 7);
    SearchOptions opts{std::max<std::uint64_t>(p.budget, candidate_count(table, 1)), p.threads};
    auto report = aut_group_mod_shift(table, 1, 1, 7, opts);
    // Independent shifts on the two parts: (a, b) with |a|, |b| <= 1, and
    // composing with the shift identifies codes with the same a - b.
    r.checks.push_back(make("union-sturmian-aut", report.certified.size() == 9 && report.coset_count() == 5,
                            "certified " + std::to_string(report.certified.size()) + ", cosets " +
                                std::to_string(report.coset_count())));
  }
  {
    auto base = generate_language(fibonacci_spec(), N);
    auto marked = generate_language(builtin_example("marked-transitive"), N);
    std::optional<std::size_t> bad;
    for (std::size_t n = 1; n <= N && !bad; ++n)
      if (marked.count(n) != base.count(n) + n) bad = n;
    r.checks.push_back(make("marked-point-complexity", !bad,
                            bad ? "n = " + std::to_string(*bad) : "P~(n) = P(n) + n for n <= " + std::to_string(N)));
  }
  {
    BuiltinParams bp;
    bp.n_max = 1;
    while (doubling_exact_depth(bp.n_max) < N) ++bp.n_max;
    auto prof = profile(generate_language(builtin_example("doubling-periodic", bp), N));
    std::optional<std::size_t> bad;
    std::vector<std::size_t> differs;
    for (std::size_t n = 1; n <= N; ++n) {
      if (!(prof.P(n) < 3 * n) && !bad) bad = n;
      if (prof.P(n) != doubling_claimed_complexity(n)) differs.push_back(n);
    }
    r.checks.push_back(make("doubling-linear-bound", !bad,
                            bad ? "P(" + std::to_string(*bad) + ") >= 3n" : "P(n) < 3n for n <= " + std::to_string(N)));
    std::string note = differs.empty() ? "closed form matches"
                                       : "warning: closed form n+2^(floor(log2 n)+1)-1 differs at " +
                                             std::to_string(differs.size()) + " lengths, e.g. n=" +
                                             std::to_string(differs.front()) + ": measured " +
                                             std::to_string(prof.P(differs.front())) + ", claimed " +
                                             std::to_string(doubling_claimed_complexity(differs.front()));
    r.checks.push_back({"doubling-closed-form", CheckStatus::pass, note});
  }
  {
    BuiltinParams bp;
    bp.n_max = 4;
    const unsigned top = 2;
    const std::size_t depth = 2 * ((std::size_t{1} << top) + (std::size_t{1} << top)) + 1;
    auto table = generate_language(builtin_example("doubling-pair", bp), depth);
    std::vector<BlockCode> involutions{copy_swap_code(table)};
    for (unsigned m = 1; m <= top; ++m) involutions.push_back(doubling_orbit_swap_code(table, m));
    bool ok = true;
    std::string why = "copy swap and orbit swaps m=1.." + std::to_string(top) + " are commuting distinct involutions";
    const auto identity = BlockCode::identity(table);
    for (std::size_t i = 0; i < involutions.size() && ok; ++i) {
      const auto& d = involutions[i];
      if (is_endomorphism(d, table, depth).refuted()) ok = false, why = "involution " + std::to_string(i) + " refuted";
      else if (!codes_equal(compose(d, d, table), identity, table))
        ok = false, why = "involution " + std::to_string(i) + " is not of order 2";
      else if (codes_equal(d, identity, table)) ok = false, why = "involution " + std::to_string(i) + " is trivial";
      for (std::size_t j = i + 1; j < involutions.size() && ok; ++j) {
        const auto& e = involutions[j];
        if (!codes_equal(compose(d, e, table), compose(e, d, table), table))
          ok = false, why = "involutions " + std::to_string(i) + "," + std::to_string(j) + " do not commute";
        else if (codes_equal(d, e, table))
          ok = false, why = "involutions " + std::to_string(i) + "," + std::to_string(j) + " coincide";
      }
    }
    r.checks.push_back(make("doubling-pair-involutions", ok, why));
  }
  return r;
}

}  // namespace

SuiteResult run_suite(const std::string& name, const std::optional<ShiftSpec>& spec, const SuiteParams& params) {
  if (name == "examples-6") return suite_examples6(params);
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw Error(ErrorKind::bad_params, "unknown suite '" + name + "'");
  if (!spec) throw Error(ErrorKind::bad_params, "suite '" + name + "' needs --spec");
  if (name == "sturmian") return suite_sturmian(*spec, params);
  if (name == "periodic") return suite_periodic(*spec, params);
  if (name == "growth") return suite_growth(*spec, params);
  if (name == "cassaigne") return suite_cassaigne(*spec, params);
  return suite_boshernitzan(*spec, params);
}

}  // namespace subshift
