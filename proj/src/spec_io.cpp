#include "subshift/spec_io.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "subshift/error.hpp"

namespace subshift {

using nlohmann::json;

namespace {

[[noreturn]] void violation(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::schema_violation, (where.empty() ? std::string("/") : where) + ": " + what);
}

void allow_fields(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items())
    if (!ok.count(key)) violation(where + "/" + key, "unknown field");
}

const json& require(const json& obj, const std::string& where, const char* key) {
  if (!obj.contains(key)) violation(where + "/" + key, "missing field");
  return obj.at(key);
}

Alphabet read_alphabet(const json& v, const std::string& where) {
  if (!v.is_array()) violation(where, "expected array of tokens");
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) violation(where + "/" + std::to_string(i), "expected string token");
    tokens.push_back(v[i].get<std::string>());
  }
  try {
    return Alphabet(std::move(tokens));
  } catch (const Error& e) {
    violation(where, e.what());
  }
}

Word read_word(const Alphabet& alphabet, const json& v, const std::string& where) {
  if (!v.is_string()) violation(where, "expected word string");
  try {
    return alphabet.parse(v.get<std::string>());
  } catch (const Error& e) {
    violation(where, e.what());
  }
}

std::vector<Word> read_words(const Alphabet& alphabet, const json& v, const std::string& where) {
  if (!v.is_array()) violation(where, "expected array of words");
  std::vector<Word> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(read_word(alphabet, v[i], where + "/" + std::to_string(i)));
  return out;
}

std::vector<unsigned> read_cf(const json& v, const std::string& where) {
  if (!v.is_array()) violation(where, "expected array of positive integers");
  std::vector<unsigned> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_unsigned() || v[i].get<unsigned>() < 1)
      violation(where + "/" + std::to_string(i), "expected positive integer");
    out.push_back(v[i].get<unsigned>());
  }
  return out;
}

ShiftSpec parse(const json& doc, const std::string& where) {
  if (!doc.is_object()) violation(where, "expected object");
  const auto& model_v = require(doc, where, "model");
  if (!model_v.is_string()) violation(where + "/model", "expected string");
  const auto model = model_v.get<std::string>();

  if (model == "sft") {
    allow_fields(doc, where, {"model", "alphabet", "forbidden"});
    auto alphabet = read_alphabet(require(doc, where, "alphabet"), where + "/alphabet");
    auto forbidden = doc.contains("forbidden") ? read_words(alphabet, doc["forbidden"], where + "/forbidden")
                                               : std::vector<Word>{};
    return ShiftSpec{SftSpec{std::move(alphabet), std::move(forbidden)}};
  }
  if (model == "substitution") {
    allow_fields(doc, where, {"model", "alphabet", "rules"});
    auto alphabet = read_alphabet(require(doc, where, "alphabet"), where + "/alphabet");
    const auto& rules_v = require(doc, where, "rules");
    if (!rules_v.is_object()) violation(where + "/rules", "expected object symbol -> word");
    std::vector<Word> rules(alphabet.size());
    std::vector<bool> seen(alphabet.size(), false);
    for (const auto& [key, value] : rules_v.items()) {
      auto sym = alphabet.find(key);
      if (!sym) violation(where + "/rules/" + key, "symbol not in alphabet");
      rules[*sym] = read_word(alphabet, value, where + "/rules/" + key);
      seen[*sym] = true;
    }
    for (std::size_t s = 0; s < alphabet.size(); ++s)
      if (!seen[s]) violation(where + "/rules/" + alphabet.token(static_cast<Symbol>(s)), "missing rule");
    return ShiftSpec{SubstitutionSpec{std::move(alphabet), std::move(rules)}};
  }
  if (model == "sturmian") {
    allow_fields(doc, where, {"model", "cf", "alphabet"});
    const auto& cf = require(doc, where, "cf");
    if (!cf.is_object()) violation(where + "/cf", "expected object");
    allow_fields(cf, where + "/cf", {"pre", "period"});
    SturmianSpec s;
    if (cf.contains("pre")) s.cf_pre = read_cf(cf["pre"], where + "/cf/pre");
    s.cf_period = read_cf(require(cf, where + "/cf", "period"), where + "/cf/period");
    if (s.cf_period.empty()) violation(where + "/cf/period", "must be nonempty");
    if (doc.contains("alphabet")) {
      s.alphabet = read_alphabet(doc["alphabet"], where + "/alphabet");
      if (s.alphabet.size() != 2) violation(where + "/alphabet", "sturmian alphabet has exactly 2 tokens");
    }
    return ShiftSpec{std::move(s)};
  }
  if (model == "periodic") {
    allow_fields(doc, where, {"model", "alphabet", "orbits", "asymptotic"});
    auto alphabet = read_alphabet(require(doc, where, "alphabet"), where + "/alphabet");
    auto orbits = read_words(alphabet, require(doc, where, "orbits"), where + "/orbits");
    std::vector<AsymptoticPoint> asymptotic;
    if (doc.contains("asymptotic")) {
      const auto& arr = doc["asymptotic"];
      if (!arr.is_array()) violation(where + "/asymptotic", "expected array");
      for (std::size_t i = 0; i < arr.size(); ++i) {
        auto at = where + "/asymptotic/" + std::to_string(i);
        if (!arr[i].is_object()) violation(at, "expected object");
        allow_fields(arr[i], at, {"left", "core", "right"});
        asymptotic.push_back({read_word(alphabet, require(arr[i], at, "left"), at + "/left"),
                              arr[i].contains("core") ? read_word(alphabet, arr[i]["core"], at + "/core") : Word{},
                              read_word(alphabet, require(arr[i], at, "right"), at + "/right")});
      }
    }
    return ShiftSpec{PeriodicSpec{std::move(alphabet), std::move(orbits), std::move(asymptotic)}};
  }
  if (model == "union") {
    allow_fields(doc, where, {"model", "parts"});
    const auto& parts = require(doc, where, "parts");
    if (!parts.is_array() || parts.empty()) violation(where + "/parts", "expected nonempty array");
    UnionSpec u;
    for (std::size_t i = 0; i < parts.size(); ++i) u.parts.push_back(parse(parts[i], where + "/parts/" + std::to_string(i)));
    return ShiftSpec{std::move(u)};
  }
  if (model == "marked") {
    allow_fields(doc, where, {"model", "base", "marker"});
    auto base = parse(require(doc, where, "base"), where + "/base");
    std::string marker;
    if (doc.contains("marker")) {
      if (!doc["marker"].is_string()) violation(where + "/marker", "expected string");
      marker = doc["marker"].get<std::string>();
    } else {
      BuiltinParams p;
      p.base = base;
      return builtin_example("marked-transitive", p);
    }
    return ShiftSpec{MarkedSpec{std::make_shared<const ShiftSpec>(std::move(base)), marker}};
  }
  violation(where + "/model", "unknown model '" + model + "'");
}

json words_json(const Alphabet& a, const std::vector<Word>& words) {
  json arr = json::array();
  for (const auto& w : words) arr.push_back(a.format(w));
  return arr;
}

}  // namespace

ShiftSpec spec_from_json(const json& doc) {
  auto spec = parse(doc, "");
  validate(spec);
  return spec;
}

json spec_to_json(const ShiftSpec& spec) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        json j;
        if constexpr (std::is_same_v<T, SftSpec>) {
          j["model"] = "sft";
          j["alphabet"] = s.alphabet.tokens();
          j["forbidden"] = words_json(s.alphabet, s.forbidden);
        } else if constexpr (std::is_same_v<T, SubstitutionSpec>) {
          j["model"] = "substitution";
          j["alphabet"] = s.alphabet.tokens();
          json rules = json::object();
          for (std::size_t a = 0; a < s.rules.size(); ++a)
            rules[s.alphabet.token(static_cast<Symbol>(a))] = s.alphabet.format(s.rules[a]);
          j["rules"] = rules;
        } else if constexpr (std::is_same_v<T, SturmianSpec>) {
          j["model"] = "sturmian";
          j["cf"] = {{"pre", s.cf_pre}, {"period", s.cf_period}};
          if (!(s.alphabet == Alphabet::binary())) j["alphabet"] = s.alphabet.tokens();
        } else if constexpr (std::is_same_v<T, PeriodicSpec>) {
          j["model"] = "periodic";
          j["alphabet"] = s.alphabet.tokens();
          j["orbits"] = words_json(s.alphabet, s.orbits);
          if (!s.asymptotic.empty()) {
            json arr = json::array();
            for (const auto& p : s.asymptotic)
              arr.push_back({{"left", s.alphabet.format(p.left)},
                             {"core", s.alphabet.format(p.core)},
                             {"right", s.alphabet.format(p.right)}});
            j["asymptotic"] = arr;
          }
        } else if constexpr (std::is_same_v<T, UnionSpec>) {
          j["model"] = "union";
          json parts = json::array();
          for (const auto& p : s.parts) parts.push_back(spec_to_json(p));
          j["parts"] = parts;
        } else {
          j["model"] = "marked";
          j["base"] = spec_to_json(*s.base);
          j["marker"] = s.marker;
        }
        return j;
      },
      spec.model);
}

ShiftSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io_error, "cannot open spec file '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::schema_violation, "/: invalid JSON: " + std::string(e.what()));
  }
  return spec_from_json(doc);
}

void save_table(const LanguageTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::io_error, "cannot write '" + path.string() + "'");
  table.write(out);
}

LanguageTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io_error, "cannot open '" + path.string() + "'");
  return LanguageTable::read(in);
}

std::filesystem::path cache_file_name(const ShiftSpec& spec, std::size_t max_n) {
  // FNV-1a over the canonical spec document; stable across runs and platforms.
  const auto text = spec_to_json(spec).dump() + "#" + std::to_string(max_n);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream name;
  name << "table-" << std::hex << std::setw(16) << std::setfill('0') << h << "-n" << std::dec << max_n << ".tsv";
  return name.str();
}

LanguageTable cached_language(const ShiftSpec& spec, std::size_t max_n, std::optional<std::filesystem::path> cache_dir) {
  if (!cache_dir) {
    if (const char* env = std::getenv(kCacheDirEnv); env && *env) cache_dir = env;
  }
  if (!cache_dir) return generate_language(spec, max_n);
  validate(spec);
  const auto file = *cache_dir / cache_file_name(spec, max_n);
  if (std::filesystem::exists(file)) {
    auto table = load_table(file);
    if (table.alphabet() == alphabet_of(spec) && table.max_n() == max_n) return table;
  }
  auto table = generate_language(spec, max_n);
  std::filesystem::create_directories(*cache_dir);
  save_table(table, file);
  return table;
}

}  // namespace subshift
