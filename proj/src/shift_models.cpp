#include "subshift/shift_models.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "subshift/error.hpp"

namespace subshift {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool contains_factor(const Word& w, const Word& f) {
  return std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end();
}

void check_symbols(const Alphabet& alphabet, const Word& w, const std::string& what) {
  for (Symbol s : w)
    if (s >= alphabet.size()) throw Error(ErrorKind::invalid_word, what + ": symbol outside alphabet");
}

// --- SFT ---------------------------------------------------------------------

// Words of length K (K >= longest forbidden word - 1) avoiding the forbidden
// set form the vertices of a de Bruijn-style graph; allowed (K+1)-words are
// the edges. After repeatedly deleting vertices without a predecessor or a
// successor, finite paths are exactly the words of bi-infinite allowed
// sequences.
std::vector<std::vector<Word>> sft_levels(const SftSpec& spec, std::size_t max_n) {
  const std::size_t a = spec.alphabet.size();
  std::size_t longest = 0;
  for (const auto& f : spec.forbidden) longest = std::max(longest, f.size());
  const std::size_t k = std::max<std::size_t>(longest > 0 ? longest - 1 : 1, 1);

  auto allowed = [&](const Word& w) {
    return std::none_of(spec.forbidden.begin(), spec.forbidden.end(),
                        [&](const Word& f) { return contains_factor(w, f); });
  };

  std::vector<Word> vertices;
  {
    Word w(k, 0);
    while (true) {
      if (allowed(w)) vertices.push_back(w);
      std::size_t i = k;
      while (i > 0 && w[i - 1] + 1u == a) w[--i] = 0;
      if (i == 0) break;
      ++w[i - 1];
    }
  }
  if (vertices.size() > 5'000'000)
    throw Error(ErrorKind::budget_exceeded, "SFT vertex set too large");

  auto vertex_index = [&](const Word& w) -> std::optional<std::size_t> {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
    if (it == vertices.end() || *it != w) return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
  };

  const std::size_t nv = vertices.size();
  std::vector<std::vector<std::pair<std::size_t, Symbol>>> out(nv), in(nv);
  Word edge(k + 1);
  for (std::size_t v = 0; v < nv; ++v) {
    std::copy(vertices[v].begin(), vertices[v].end(), edge.begin());
    for (std::size_t s = 0; s < a; ++s) {
      edge[k] = static_cast<Symbol>(s);
      if (!allowed(edge)) continue;
      Word next(edge.begin() + 1, edge.end());
      if (auto u = vertex_index(next)) {
        out[v].emplace_back(*u, static_cast<Symbol>(s));
        in[*u].emplace_back(v, static_cast<Symbol>(s));
      }
    }
  }

  std::vector<bool> alive(nv, true);
  std::vector<std::size_t> indeg(nv), outdeg(nv);
  std::deque<std::size_t> dead;
  for (std::size_t v = 0; v < nv; ++v) {
    indeg[v] = in[v].size();
    outdeg[v] = out[v].size();
    if (indeg[v] == 0 || outdeg[v] == 0) {
      alive[v] = false;
      dead.push_back(v);
    }
  }
  while (!dead.empty()) {
    auto v = dead.front();
    dead.pop_front();
    for (auto [u, s] : out[v])
      if (alive[u] && --indeg[u] == 0) {
        alive[u] = false;
        dead.push_back(u);
      }
    for (auto [u, s] : in[v])
      if (alive[u] && --outdeg[u] == 0) {
        alive[u] = false;
        dead.push_back(u);
      }
  }
  if (std::none_of(alive.begin(), alive.end(), [](bool b) { return b; }))
    throw Error(ErrorKind::invalid_seeds, "SFT is empty");

  std::vector<std::set<Word>> sets(max_n);
  std::vector<Word> alive_vertices;
  for (std::size_t v = 0; v < nv; ++v)
    if (alive[v]) alive_vertices.push_back(vertices[v]);
  // Words shorter than K are factors of alive vertices.
  for (const auto& w : alive_vertices)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t n = 1; i + n <= k && n <= max_n; ++n)
        sets[n - 1].emplace(w.begin() + static_cast<std::ptrdiff_t>(i),
                            w.begin() + static_cast<std::ptrdiff_t>(i + n));
  // Longer words are labelled paths.
  Word path;
  auto dfs = [&](auto&& self, std::size_t v) -> void {
    if (path.size() > max_n) return;
    sets[path.size() - 1].insert(path);
    if (path.size() == max_n) return;
    for (auto [u, s] : out[v]) {
      if (!alive[u]) continue;
      path.push_back(s);
      self(self, u);
      path.pop_back();
    }
  };
  for (std::size_t v = 0; v < nv; ++v) {
    if (!alive[v] || k > max_n) continue;
    path = vertices[v];
    dfs(dfs, v);
  }

  std::vector<std::vector<Word>> levels(max_n);
  for (std::size_t n = 0; n < max_n; ++n) levels[n].assign(sets[n].begin(), sets[n].end());
  return levels;
}

// --- substitution --------------------------------------------------------------

Word substitute(const SubstitutionSpec& spec, const Word& w) {
  Word out;
  for (Symbol s : w) out.insert(out.end(), spec.rules[s].begin(), spec.rules[s].end());
  return out;
}

// Closure of the single letters under "take every factor of length <= N of the
// image". Every factor of every iterate lies inside the image of a factor of
// the previous iterate that is no longer than itself, so the fixpoint is the
// exact language up to N.
std::vector<std::vector<Word>> substitution_levels(const SubstitutionSpec& spec, std::size_t max_n) {
  std::vector<std::set<Word>> sets(max_n);
  std::deque<Word> work;
  auto add = [&](Word w) {
    if (sets[w.size() - 1].insert(w).second) work.push_back(std::move(w));
  };
  for (std::size_t s = 0; s < spec.alphabet.size(); ++s) add(Word{static_cast<Symbol>(s)});
  while (!work.empty()) {
    Word u = std::move(work.front());
    work.pop_front();
    Word img = substitute(spec, u);
    for (std::size_t i = 0; i < img.size(); ++i)
      for (std::size_t n = 1; n <= max_n && i + n <= img.size(); ++n)
        add(Word(img.begin() + static_cast<std::ptrdiff_t>(i), img.begin() + static_cast<std::ptrdiff_t>(i + n)));
  }
  std::vector<std::vector<Word>> levels(max_n);
  for (std::size_t n = 0; n < max_n; ++n) levels[n].assign(sets[n].begin(), sets[n].end());
  return levels;
}

Word substitution_long_word(const SubstitutionSpec& spec, std::size_t length) {
  Word w{0};
  std::size_t stalled = 0;
  while (w.size() < length) {
    auto next = substitute(spec, w);
    stalled = next.size() == w.size() ? stalled + 1 : 0;
    if (stalled > spec.alphabet.size() + 1)
      throw Error(ErrorKind::non_primitive_substitution, "iterates do not grow");
    w = std::move(next);
  }
  w.resize(length);
  return w;
}

// --- periodic --------------------------------------------------------------------

std::vector<std::vector<Word>> periodic_levels(const PeriodicSpec& spec, std::size_t max_n) {
  std::vector<Word> sources;
  for (const auto& seed : spec.orbits) {
    // seed repeated so that every rotation contributes all windows up to max_n
    Word rep;
    while (rep.size() < max_n + seed.size()) rep.insert(rep.end(), seed.begin(), seed.end());
    sources.push_back(std::move(rep));
  }
  for (const auto& p : spec.asymptotic) {
    Word w;
    while (w.size() < max_n + p.left.size()) w.insert(w.end(), p.left.begin(), p.left.end());
    w.insert(w.end(), p.core.begin(), p.core.end());
    std::size_t tail = 0;
    while (tail < max_n + p.right.size()) {
      w.insert(w.end(), p.right.begin(), p.right.end());
      tail += p.right.size();
    }
    sources.push_back(std::move(w));
  }
  return factor_levels(sources, max_n);
}

// --- helpers shared by generation and validation ---------------------------------

std::vector<unsigned> cf_prefix(const SturmianSpec& spec, std::size_t count) {
  std::vector<unsigned> out(spec.cf_pre.begin(), spec.cf_pre.end());
  for (std::size_t i = 0; out.size() < count; ++i) out.push_back(spec.cf_period[i % spec.cf_period.size()]);
  return out;
}

Word marked_center_word(const ShiftSpec& base, std::size_t radius) {
  const std::size_t len = 2 * radius + 1;
  return std::visit(overloaded{
                        [&](const SturmianSpec& s) { return sturmian_prefix(s, len); },
                        [&](const SubstitutionSpec& s) { return substitution_long_word(s, len); },
                        [&](const auto&) -> Word {
                          throw Error(ErrorKind::bad_params, "marked point needs a sturmian or substitution base");
                        }},
                    base.model);
}

}  // namespace

// --- public API ------------------------------------------------------------------

std::size_t minimal_period(const Word& w) {
  if (w.empty()) throw Error(ErrorKind::invalid_word, "minimal period of the empty word");
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return p;
  }
  return n;
}

bool is_rotation_of(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  Word doubled = a;
  doubled.insert(doubled.end(), a.begin(), a.end());
  return contains_factor(doubled, b);
}

Word sturmian_prefix(const SturmianSpec& spec, std::size_t length) {
  Word older{1}, prev{0};  // s_{-1}, s_0
  if (length <= prev.size()) return prev;
  for (std::size_t k = 1;; ++k) {
    const unsigned a = cf_prefix(spec, k).back();
    Word next;
    for (unsigned i = 0; i < a; ++i) next.insert(next.end(), prev.begin(), prev.end());
    next.insert(next.end(), older.begin(), older.end());
    older = std::move(prev);
    prev = std::move(next);
    if (prev.size() >= length) {
      prev.resize(length);
      return prev;
    }
  }
}

bool is_primitive(const SubstitutionSpec& spec) {
  const std::size_t d = spec.alphabet.size();
  using Matrix = std::vector<std::vector<bool>>;
  Matrix m(d, std::vector<bool>(d, false));
  for (std::size_t a = 0; a < d; ++a)
    for (Symbol b : spec.rules[a]) m[a][b] = true;
  auto multiply = [d](const Matrix& x, const Matrix& y) {
    Matrix z(d, std::vector<bool>(d, false));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k)
        if (x[i][k])
          for (std::size_t j = 0; j < d; ++j)
            if (y[k][j]) z[i][j] = true;
    return z;
  };
  // Wielandt: a primitive d x d matrix has a positive power at exponent
  // (d-1)^2 + 1 at the latest.
  Matrix power = m;
  const std::size_t limit = (d - 1) * (d - 1) + 1;
  for (std::size_t e = 1; e <= limit; ++e) {
    bool positive = true;
    for (const auto& row : power)
      for (bool b : row) positive = positive && b;
    if (positive) return true;
    power = multiply(power, m);
  }
  return false;
}

void validate(const ShiftSpec& spec) {
  std::visit(overloaded{
                 [](const SftSpec& s) {
                   for (const auto& f : s.forbidden) {
                     if (f.empty()) throw Error(ErrorKind::invalid_word, "empty forbidden word");
                     check_symbols(s.alphabet, f, "forbidden word");
                   }
                 },
                 [](const SubstitutionSpec& s) {
                   if (s.rules.size() != s.alphabet.size())
                     throw Error(ErrorKind::bad_params, "substitution must define every symbol");
                   for (const auto& r : s.rules) {
                     if (r.empty()) throw Error(ErrorKind::bad_params, "substitution image is empty");
                     check_symbols(s.alphabet, r, "substitution rule");
                   }
                   if (!is_primitive(s))
                     throw Error(ErrorKind::non_primitive_substitution, "no power of the incidence matrix is positive");
                   bool grows = std::any_of(s.rules.begin(), s.rules.end(), [](const Word& r) { return r.size() > 1; });
                   if (!grows && s.alphabet.size() > 1)
                     throw Error(ErrorKind::non_primitive_substitution, "substitution does not grow");
                 },
                 [](const SturmianSpec& s) {
                   if (s.cf_period.empty()) throw Error(ErrorKind::bad_params, "sturmian cf period is empty");
                   auto positive = [](unsigned a) { return a >= 1; };
                   if (!std::all_of(s.cf_pre.begin(), s.cf_pre.end(), positive) ||
                       !std::all_of(s.cf_period.begin(), s.cf_period.end(), positive))
                     throw Error(ErrorKind::bad_params, "continued fraction coefficients must be >= 1");
                   if (s.alphabet.size() != 2) throw Error(ErrorKind::bad_params, "sturmian alphabet must have 2 tokens");
                 },
                 [](const PeriodicSpec& s) {
                   if (s.orbits.empty() && s.asymptotic.empty())
                     throw Error(ErrorKind::invalid_seeds, "no orbits given");
                   for (const auto& seed : s.orbits) {
                     if (seed.empty()) throw Error(ErrorKind::invalid_seeds, "empty orbit seed");
                     check_symbols(s.alphabet, seed, "orbit seed");
                     if (minimal_period(seed) != seed.size())
                       throw Error(ErrorKind::invalid_seeds, "seed '" + s.alphabet.format(seed) + "' is not primitive");
                   }
                   for (std::size_t i = 0; i < s.orbits.size(); ++i)
                     for (std::size_t j = i + 1; j < s.orbits.size(); ++j)
                       if (is_rotation_of(s.orbits[i], s.orbits[j]))
                         throw Error(ErrorKind::duplicate_orbit, "'" + s.alphabet.format(s.orbits[i]) + "' and '" +
                                                                     s.alphabet.format(s.orbits[j]) + "'");
                   for (const auto& p : s.asymptotic) {
                     if (p.left.empty() || p.right.empty())
                       throw Error(ErrorKind::invalid_seeds, "asymptotic point needs periodic tails");
                     check_symbols(s.alphabet, p.left, "asymptotic left");
                     check_symbols(s.alphabet, p.core, "asymptotic core");
                     check_symbols(s.alphabet, p.right, "asymptotic right");
                   }
                 },
                 [](const UnionSpec& s) {
                   if (s.parts.empty()) throw Error(ErrorKind::bad_params, "union has no parts");
                   std::set<std::string> seen;
                   for (const auto& part : s.parts) {
                     validate(part);
                     const auto alphabet = alphabet_of(part);
                     for (const auto& t : alphabet.tokens())
                       if (!seen.insert(t).second)
                         throw Error(ErrorKind::alphabet_collision, "token '" + t + "' appears in two parts");
                   }
                 },
                 [](const MarkedSpec& s) {
                   if (!s.base) throw Error(ErrorKind::bad_params, "marked spec without base");
                   validate(*s.base);
                   if (!std::holds_alternative<SturmianSpec>(s.base->model) &&
                       !std::holds_alternative<SubstitutionSpec>(s.base->model))
                     throw Error(ErrorKind::bad_params, "marked point needs a sturmian or substitution base");
                   if (alphabet_of(*s.base).find(s.marker))
                     throw Error(ErrorKind::alphabet_collision, "marker '" + s.marker + "' already in base alphabet");
                   Alphabet({s.marker});  // token syntax
                 }},
             spec.model);
}

Alphabet alphabet_of(const ShiftSpec& spec) {
  return std::visit(overloaded{
                        [](const UnionSpec& s) {
                          std::vector<std::string> tokens;
                          for (const auto& part : s.parts) {
                            auto a = alphabet_of(part);
                            tokens.insert(tokens.end(), a.tokens().begin(), a.tokens().end());
                          }
                          return Alphabet(std::move(tokens));
                        },
                        [](const MarkedSpec& s) {
                          auto tokens = alphabet_of(*s.base).tokens();
                          tokens.push_back(s.marker);
                          return Alphabet(std::move(tokens));
                        },
                        [](const auto& s) { return s.alphabet; }},
                    spec.model);
}

namespace {

std::vector<std::vector<Word>> levels_of(const ShiftSpec& spec, std::size_t max_n) {
  return std::visit(
      overloaded{
          [&](const SftSpec& s) { return sft_levels(s, max_n); },
          [&](const SubstitutionSpec& s) { return substitution_levels(s, max_n); },
          [&](const SturmianSpec& s) {
            // Grow the characteristic-word prefix until every length has n+1
            // factors; no Sturmian level can hold more.
            std::size_t len = 4 * max_n + 8;
            while (true) {
              std::vector<Word> src{sturmian_prefix(s, len)};
              auto levels = factor_levels(src, max_n);
              bool complete = true;
              for (std::size_t n = 1; n <= max_n && complete; ++n) complete = levels[n - 1].size() == n + 1;
              if (complete) return levels;
              len *= 2;
            }
          },
          [&](const PeriodicSpec& s) { return periodic_levels(s, max_n); },
          [&](const UnionSpec& s) {
            std::vector<std::vector<Word>> levels(max_n);
            Symbol offset = 0;
            for (const auto& part : s.parts) {
              auto sub = levels_of(part, max_n);
              for (std::size_t n = 0; n < max_n; ++n)
                for (auto w : sub[n]) {
                  for (auto& sym : w) sym = static_cast<Symbol>(sym + offset);
                  levels[n].push_back(std::move(w));
                }
              offset = static_cast<Symbol>(offset + alphabet_of(part).size());
            }
            return levels;
          },
          [&](const MarkedSpec& s) {
            auto levels = levels_of(*s.base, max_n);
            const auto marker = static_cast<Symbol>(alphabet_of(*s.base).size());
            const Word center = marked_center_word(*s.base, max_n);
            for (std::size_t n = 1; n <= max_n; ++n)
              for (std::size_t i = 0; i < n; ++i) {
                auto first = center.begin() + static_cast<std::ptrdiff_t>(max_n - i);
                Word w(first, first + static_cast<std::ptrdiff_t>(n));
                w[i] = marker;
                levels[n - 1].push_back(std::move(w));
              }
            return levels;
          }},
      spec.model);
}

}  // namespace

LanguageTable generate_language(const ShiftSpec& spec, std::size_t max_n) {
  if (max_n < 1) throw Error(ErrorKind::bad_params, "max_n must be at least 1");
  validate(spec);
  return LanguageTable(alphabet_of(spec), max_n, levels_of(spec, max_n));
}

std::optional<std::size_t> sft_window(const ShiftSpec& spec) {
  if (const auto* s = std::get_if<SftSpec>(&spec.model)) {
    std::size_t longest = 1;
    for (const auto& f : s->forbidden) longest = std::max(longest, f.size());
    return longest;
  }
  return std::nullopt;
}

bool is_minimal_model(const ShiftSpec& spec) {
  if (std::holds_alternative<SturmianSpec>(spec.model) || std::holds_alternative<SubstitutionSpec>(spec.model))
    return true;
  if (const auto* p = std::get_if<PeriodicSpec>(&spec.model))
    return p->orbits.size() == 1 && p->asymptotic.empty();
  return false;
}

bool is_periodic_model(const ShiftSpec& spec) {
  if (const auto* p = std::get_if<PeriodicSpec>(&spec.model)) return p->asymptotic.empty();
  if (const auto* u = std::get_if<UnionSpec>(&spec.model))
    return std::all_of(u->parts.begin(), u->parts.end(), [](const ShiftSpec& s) { return is_periodic_model(s); });
  return false;
}

ShiftSpec fibonacci_spec() { return ShiftSpec{SturmianSpec{{}, {1}}}; }

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"union-sturmian", "marked-transitive", "doubling-periodic",
                                              "doubling-pair"};
  return names;
}

namespace {

PeriodicSpec doubling_spec(unsigned n_max, const std::string& zero, const std::string& one) {
  Alphabet alphabet({zero, one});
  PeriodicSpec spec{alphabet, {}, {}};
  spec.orbits.push_back(Word{0});
  for (unsigned n = 1; n <= n_max; ++n) {
    Word seed(std::size_t{1} << n, 0);
    seed[0] = 1;
    spec.orbits.push_back(std::move(seed));
  }
  spec.asymptotic.push_back(AsymptoticPoint{Word{0}, Word{1}, Word{0}});
  return spec;
}

}  // namespace

ShiftSpec builtin_example(const std::string& name, const BuiltinParams& params) {
  if (name == "union-sturmian") {
    if (params.k < 1) throw Error(ErrorKind::bad_params, "k must be at least 1");
    std::vector<SturmianCf> cfs = params.cfs;
    if (cfs.empty())
      for (unsigned i = 1; i <= params.k; ++i) cfs.push_back({{}, {i}});
    if (cfs.size() != params.k)
      throw Error(ErrorKind::bad_params, "expected " + std::to_string(params.k) + " continued fractions");
    for (std::size_t i = 0; i < cfs.size(); ++i)
      for (std::size_t j = i + 1; j < cfs.size(); ++j)
        if (cfs[i].pre == cfs[j].pre && cfs[i].period == cfs[j].period)
          throw Error(ErrorKind::bad_params, "continued fractions must be distinct");
    UnionSpec u;
    for (std::size_t i = 0; i < cfs.size(); ++i) {
      auto tag = std::to_string(i + 1);
      u.parts.push_back(ShiftSpec{SturmianSpec{cfs[i].pre, cfs[i].period, Alphabet({"0_" + tag, "1_" + tag})}});
    }
    ShiftSpec spec{std::move(u)};
    validate(spec);
    return spec;
  }
  if (name == "marked-transitive") {
    ShiftSpec base = params.base ? *params.base : fibonacci_spec();
    validate(base);
    auto alphabet = alphabet_of(base);
    std::string marker = std::to_string(alphabet.size());
    if (alphabet.find(marker)) marker = "#";
    ShiftSpec spec{MarkedSpec{std::make_shared<const ShiftSpec>(std::move(base)), marker}};
    validate(spec);
    return spec;
  }
  if (name == "doubling-periodic" || name == "doubling-pair") {
    if (params.n_max < 1 || params.n_max > 16) throw Error(ErrorKind::bad_params, "n_max must be in 1..16");
    if (name == "doubling-periodic") return ShiftSpec{doubling_spec(params.n_max, "0", "1")};
    UnionSpec u;
    u.parts.push_back(ShiftSpec{doubling_spec(params.n_max, "0", "1")});
    u.parts.push_back(ShiftSpec{doubling_spec(params.n_max, "2", "3")});
    return ShiftSpec{std::move(u)};
  }
  throw Error(ErrorKind::unknown_builtin, "'" + name + "'");
}

std::size_t doubling_claimed_complexity(std::size_t n) {
  std::size_t floor_log = 0;
  while ((std::size_t{2} << floor_log) <= n) ++floor_log;
  return n + (std::size_t{1} << (floor_log + 1)) - 1;
}

std::size_t doubling_exact_depth(unsigned n_max) { return std::size_t{1} << (n_max + 1); }

}  // namespace subshift
