#include "subshift/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "subshift/aut_search.hpp"
#include "subshift/complexity.hpp"
#include "subshift/error.hpp"
#include "subshift/periodic_aut.hpp"
#include "subshift/spec_io.hpp"
#include "subshift/verify.hpp"

namespace subshift::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct Options {
  std::string spec_path;
  std::string builtin;
  unsigned k = 2;
  unsigned n_max = 5;
  std::size_t max_n = 16;
  std::size_t range = 1;
  std::size_t inv_range = 1;
  std::size_t horizon = 8;
  std::uint64_t budget = 10'000'000;
  unsigned threads = 0;
  std::string json_path;
  std::string word;
  std::string suite;
  bool brute_force = false;
};

void add_spec_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--spec", o.spec_path, "Shift spec JSON file");
  cmd->add_option("--builtin", o.builtin, "Built-in example name");
  cmd->add_option("--k", o.k, "union-sturmian: number of components");
  cmd->add_option("--n-max", o.n_max, "doubling builtins: largest orbit exponent");
  cmd->add_option("--json", o.json_path, "Write a JSON report to this path");
}

void add_aut_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--range", o.range, "Block-code range R");
  cmd->add_option("--inv-range", o.inv_range, "Inverse range R'");
  cmd->add_option("--horizon", o.horizon, "Word length up to which codes are checked");
  cmd->add_option("--budget", o.budget, "Largest rule space searched");
  cmd->add_option("--threads", o.threads, "Worker threads (0 = hardware)");
}

std::optional<ShiftSpec> resolve_spec(const Options& o, bool required) {
  if (!o.spec_path.empty() && !o.builtin.empty())
    throw Error(ErrorKind::bad_params, "--spec and --builtin are mutually exclusive");
  if (!o.spec_path.empty()) return load_spec(o.spec_path);
  if (!o.builtin.empty()) {
    BuiltinParams params;
    params.k = o.k;
    params.n_max = o.n_max;
    return builtin_example(o.builtin, params);
  }
  if (required) throw Error(ErrorKind::bad_params, "one of --spec or --builtin is required");
  return std::nullopt;
}

void write_json(const std::string& path, const ojson& doc) {
  if (path.empty()) return;
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::io_error, "cannot write " + path);
  file << doc.dump(2) << '\n';
}

ojson code_json(const BlockCode& code) {
  ojson rule = ojson::object();
  for (std::size_t i = 0; i < code.windows().size(); ++i)
    rule[code.domain().format(code.windows()[i])] = code.codomain().token(code.images()[i]);
  return {{"range", code.range()}, {"rule", rule}};
}

ojson order_json(const boost::multiprecision::cpp_int& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

int cmd_complexity(const Options& o, std::ostream& out) {
  auto spec = *resolve_spec(o, true);
  auto table = cached_language(spec, o.max_n);
  auto prof = profile(table);
  out << "n\tP(n)\tdiff\n";
  for (std::size_t n = 1; n <= prof.max_n; ++n) {
    out << n << '\t' << prof.P(n) << '\t';
    if (n < prof.max_n) out << prof.differences[n - 1];
    else out << '-';
    out << '\n';
  }
  out << "B\t" << prof.B << "\nk_linear\t" << prof.k_linear << '\n';
  write_json(o.json_path, ojson{{"values", prof.values},
                                {"differences", prof.differences},
                                {"B", prof.B},
                                {"k_linear", prof.k_linear},
                                {"max_n", prof.max_n}});
  return kExitOk;
}

int cmd_extensions(const Options& o, std::ostream& out) {
  auto spec = *resolve_spec(o, true);
  const auto& alphabet = alphabet_of(spec);
  if (!o.word.empty()) {
    const Word w = alphabet.parse(o.word);
    auto table = cached_language(spec, std::max(o.max_n, w.size() + 1));
    if (!table.contains(w)) throw Error(ErrorKind::word_not_in_language, "'" + o.word + "' is not in the language");
    auto fmt = [&](const std::vector<Symbol>& s) {
      ojson arr = ojson::array();
      for (auto a : s) arr.push_back(alphabet.token(a));
      return arr;
    };
    auto right = table.right_extensions(w);
    auto left = table.left_extensions(w);
    out << "word\t" << o.word << "\nright\t" << fmt(right).dump() << "\nleft\t" << fmt(left).dump() << '\n';
    write_json(o.json_path, ojson{{"word", o.word}, {"right", fmt(right)}, {"left", fmt(left)}});
    return kExitOk;
  }
  auto table = cached_language(spec, o.max_n);
  ojson rows = ojson::array();
  out << "n\tright_special\tleft_special\n";
  for (std::size_t n = 1; n < table.max_n(); ++n) {
    ojson rs = ojson::array(), ls = ojson::array();
    for (const auto& w : table.level(n)) {
      if (table.right_extensions(w).size() > 1) rs.push_back(alphabet.format(w));
      if (table.left_extensions(w).size() > 1) ls.push_back(alphabet.format(w));
    }
    out << n << '\t' << rs.dump() << '\t' << ls.dump() << '\n';
    rows.push_back({{"n", n}, {"right_special", rs}, {"left_special", ls}});
  }
  write_json(o.json_path, ojson{{"max_n", table.max_n()}, {"special", rows}});
  return kExitOk;
}

int cmd_aut(const Options& o, std::ostream& out) {
  auto spec = *resolve_spec(o, true);
  const std::size_t depth = std::max(o.horizon, 2 * (2 * o.range + o.inv_range) + 1);
  auto table = cached_language(spec, depth);
  auto report = aut_group_mod_shift(table, o.range, o.inv_range, o.horizon, SearchOptions{o.budget, o.threads},
                                    sft_window(spec));
  auto failures = recheck_report(report, table);
  auto powers = shift_powers_among(report, table);

  out << "range\t" << report.range << "\ninv_range\t" << report.inv_range << "\nhorizon\t" << report.horizon
      << "\ntable_depth\t" << report.table_depth << "\ncandidates\t" << report.candidates << "\nrefuted\t"
      << report.refuted_count << "\ncertified\t" << report.certified.size() << "\nunknown\t" << report.unknown.size()
      << "\ncosets\t" << report.coset_count() << "\nshift_powers\t";
  for (std::size_t i = 0; i < powers.size(); ++i) out << (i ? "," : "") << powers[i];
  out << "\ngrowth_counts\t";
  for (std::size_t i = 0; i < report.growth_counts.size(); ++i) out << (i ? "," : "") << report.growth_counts[i];
  out << '\n';
  for (const auto& f : failures) out << "recheck failed\t" << f << '\n';

  ojson certified = ojson::array();
  for (const auto& c : report.certified)
    certified.push_back({{"code", code_json(c.code)}, {"inverse", code_json(c.inverse)}, {"exact", c.exact}});
  ojson unknown = ojson::array();
  for (const auto& c : report.unknown) unknown.push_back(code_json(c));
  write_json(o.json_path, ojson{{"range", report.range},
                                {"inv_range", report.inv_range},
                                {"horizon", report.horizon},
                                {"table_depth", report.table_depth},
                                {"candidates", report.candidates},
                                {"refuted_count", report.refuted_count},
                                {"certified", certified},
                                {"unknown", unknown},
                                {"cosets", report.cosets},
                                {"coset_count", report.coset_count()},
                                {"shift_window", report.shift_window},
                                {"shift_powers", powers},
                                {"growth_counts", report.growth_counts},
                                {"recheck_failures", failures}});
  return failures.empty() ? kExitOk : kExitFailed;
}

int cmd_classify(const Options& o, std::ostream& out) {
  auto spec = *resolve_spec(o, true);
  auto ps = periodic_shift(spec);
  auto desc = classify(ps);
  ojson factors = ojson::array();
  out << "factors\t";
  for (std::size_t i = 0; i < desc.factors.size(); ++i) {
    auto [n, m] = desc.factors[i];
    out << (i ? " x " : "") << "S(" << n << "," << m << ")";
    factors.push_back({n, m});
  }
  out << "\norder\t" << desc.order.str() << '\n';
  ojson doc{{"factors", factors}, {"order", order_json(desc.order)}};
  int code = kExitOk;
  if (ps.point_count() <= kBruteForcePointLimit) {
    auto full = full_group_intersection(ps);
    out << std::boolalpha << "full_group_order\t" << full.order << "\nabelian\t" << full.abelian << "\nnormal\t" << full.normal
        << "\nquotient_order\t" << full.quotient_order << '\n';
    doc["full_group"] = {{"order", full.order},
                         {"abelian", full.abelian},
                         {"normal", full.normal},
                         {"quotient_order", full.quotient_order}};
  } else {
    out << "full_group\tskipped (more than " << kBruteForcePointLimit << " points)\n";
  }
  if (o.brute_force) {
    if (ps.point_count() > kBruteForcePointLimit)
      throw Error(ErrorKind::budget_exceeded, "brute force needs at most 12 points");
    const auto count = brute_force_aut(ps).size();
    const bool agree = desc.order == count;
    out << "brute_force_order\t" << count << (agree ? "\tagrees" : "\tDISAGREES") << '\n';
    doc["brute_force_order"] = count;
    if (!agree) code = kExitFailed;
  }
  write_json(o.json_path, doc);
  return code;
}

int cmd_verify(const Options& o, std::ostream& out) {
  auto spec = resolve_spec(o, false);
  SuiteParams params;
  params.max_n = o.max_n;
  params.range = o.range;
  params.inv_range = o.inv_range;
  params.horizon = o.horizon;
  params.budget = o.budget;
  params.threads = o.threads;
  auto result = run_suite(o.suite, spec, params);
  for (const auto& c : result.checks) out << to_string(c.status) << '\t' << c.label << '\t' << c.detail << '\n';
  out << (result.passed() ? "suite passed" : "suite FAILED") << '\n';
  write_json(o.json_path, result.to_json());
  return result.passed() ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Languages, complexity and automorphism groups of low-complexity subshifts", "subshift"};
  app.require_subcommand(1);
  Options o;

  auto* complexity = app.add_subcommand("complexity", "Factor complexity table");
  add_spec_options(complexity, o);
  complexity->add_option("--max-n", o.max_n, "Largest word length");

  auto* extensions = app.add_subcommand("extensions", "Special factors, or the extensions of one word");
  add_spec_options(extensions, o);
  extensions->add_option("--max-n", o.max_n, "Largest word length");
  extensions->add_option("--word", o.word, "Word to extend");

  auto* aut = app.add_subcommand("aut", "Automorphisms of bounded range modulo the shift");
  add_spec_options(aut, o);
  add_aut_options(aut, o);

  auto* cls = app.add_subcommand("classify", "Automorphism group of a periodic shift");
  add_spec_options(cls, o);
  cls->add_flag("--brute-force", o.brute_force, "Cross-check the order by brute force");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  add_spec_options(verify, o);
  add_aut_options(verify, o);
  verify->add_option("--max-n", o.max_n, "Largest word length");
  verify->add_option("--suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    if (complexity->parsed()) return cmd_complexity(o, out);
    if (extensions->parsed()) return cmd_extensions(o, out);
    if (aut->parsed()) return cmd_aut(o, out);
    if (cls->parsed()) return cmd_classify(o, out);
    return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace subshift::cli
