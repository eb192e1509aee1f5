#include "subshift/language_table.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "subshift/error.hpp"

namespace subshift {

namespace {

void sort_unique(std::vector<Word>& words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
}

}  // namespace

LanguageTable::LanguageTable(Alphabet alphabet, std::size_t max_n,
                             std::vector<std::vector<Word>> levels)
    : alphabet_(std::move(alphabet)), max_n_(max_n) {
  if (max_n_ < 1) throw Error(ErrorKind::invalid_table, "max_n must be at least 1");
  if (levels.size() != max_n_)
    throw Error(ErrorKind::invalid_table, "expected " + std::to_string(max_n_) + " levels, got " +
                                              std::to_string(levels.size()));
  levels_.reserve(max_n_ + 1);
  levels_.push_back({Word{}});
  for (auto& lvl : levels) {
    sort_unique(lvl);
    levels_.push_back(std::move(lvl));
  }
  validate();
}

void LanguageTable::validate() const {
  for (std::size_t n = 1; n <= max_n_; ++n) {
    const auto& lvl = levels_[n];
    if (lvl.empty()) throw Error(ErrorKind::invalid_table, "level " + std::to_string(n) + " is empty");
    for (const auto& w : lvl) {
      if (w.size() != n)
        throw Error(ErrorKind::invalid_table, "word of wrong length at level " + std::to_string(n));
      for (Symbol s : w)
        if (s >= alphabet_.size()) throw Error(ErrorKind::invalid_table, "symbol outside alphabet");
      if (n > 1) {
        Word prefix(w.begin(), w.end() - 1), suffix(w.begin() + 1, w.end());
        if (!std::binary_search(levels_[n - 1].begin(), levels_[n - 1].end(), prefix) ||
            !std::binary_search(levels_[n - 1].begin(), levels_[n - 1].end(), suffix))
          throw Error(ErrorKind::invalid_table, "not factor-closed at '" + alphabet_.format(w) + "'");
      }
    }
  }
  // Bi-extendability: every word below max_n is a prefix and a suffix of some
  // longer word. Factor closure gives the converse direction for free.
  for (std::size_t n = 1; n < max_n_; ++n) {
    std::set<Word> prefixes, suffixes;
    for (const auto& w : levels_[n + 1]) {
      prefixes.emplace(w.begin(), w.end() - 1);
      suffixes.emplace(w.begin() + 1, w.end());
    }
    for (const auto& w : levels_[n]) {
      if (!prefixes.count(w) || !suffixes.count(w))
        throw Error(ErrorKind::invalid_table,
                    "word '" + alphabet_.format(w) + "' is not bi-extendable within depth");
    }
  }
}

std::span<const Word> LanguageTable::level(std::size_t n) const {
  require_depth(n);
  return levels_[n];
}

void LanguageTable::require_depth(std::size_t n) const {
  if (n > max_n_)
    throw Error(ErrorKind::depth_exceeded,
                "length " + std::to_string(n) + " exceeds table depth " + std::to_string(max_n_));
}

void LanguageTable::require_member(const Word& w) const {
  if (!contains(w))
    throw Error(ErrorKind::word_not_in_language, "'" + alphabet_.format(w) + "'");
}

bool LanguageTable::contains(const Word& w) const {
  require_depth(w.size());
  const auto& lvl = levels_[w.size()];
  return std::binary_search(lvl.begin(), lvl.end(), w);
}

std::optional<std::size_t> LanguageTable::index_of(const Word& w) const {
  require_depth(w.size());
  const auto& lvl = levels_[w.size()];
  auto it = std::lower_bound(lvl.begin(), lvl.end(), w);
  if (it == lvl.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - lvl.begin());
}

std::vector<Symbol> LanguageTable::right_extensions(const Word& w) const {
  require_depth(w.size() + 1);
  require_member(w);
  std::vector<Symbol> out;
  Word probe = w;
  probe.push_back(0);
  for (std::size_t a = 0; a < alphabet_.size(); ++a) {
    probe.back() = static_cast<Symbol>(a);
    if (contains(probe)) out.push_back(static_cast<Symbol>(a));
  }
  return out;
}

std::vector<Symbol> LanguageTable::left_extensions(const Word& w) const {
  require_depth(w.size() + 1);
  require_member(w);
  std::vector<Symbol> out;
  Word probe;
  probe.reserve(w.size() + 1);
  probe.push_back(0);
  probe.insert(probe.end(), w.begin(), w.end());
  for (std::size_t a = 0; a < alphabet_.size(); ++a) {
    probe.front() = static_cast<Symbol>(a);
    if (contains(probe)) out.push_back(static_cast<Symbol>(a));
  }
  return out;
}

std::size_t LanguageTable::count_with_prefix(const Word& w, std::size_t m) const {
  const std::size_t n = w.size() + m;
  require_depth(n);
  const auto& lvl = levels_[n];
  const auto k = static_cast<std::ptrdiff_t>(w.size());
  auto lo = std::lower_bound(lvl.begin(), lvl.end(), w, [k](const Word& e, const Word& p) {
    return std::lexicographical_compare(e.begin(), e.begin() + k, p.begin(), p.end());
  });
  auto hi = std::upper_bound(lo, lvl.end(), w, [k](const Word& p, const Word& e) {
    return std::lexicographical_compare(p.begin(), p.end(), e.begin(), e.begin() + k);
  });
  return static_cast<std::size_t>(hi - lo);
}

bool LanguageTable::extends_uniquely_right(const Word& w, std::size_t m) const {
  return count_with_prefix(w, m) == 1;
}

void LanguageTable::write(std::ostream& out) const {
  out << "alphabet\t";
  for (std::size_t i = 0; i < alphabet_.size(); ++i) out << (i ? "," : "") << alphabet_.token(static_cast<Symbol>(i));
  out << "\nmax_n\t" << max_n_ << '\n';
  for (std::size_t n = 1; n <= max_n_; ++n)
    for (const auto& w : levels_[n]) out << n << '\t' << alphabet_.format(w) << '\n';
}

LanguageTable LanguageTable::read(std::istream& in) {
  auto bad = [](const std::string& what) { return Error(ErrorKind::invalid_table, "cache: " + what); };
  std::string line;
  if (!std::getline(in, line) || line.rfind("alphabet\t", 0) != 0) throw bad("missing alphabet header");
  std::vector<std::string> tokens;
  {
    std::stringstream ss(line.substr(9));
    std::string tok;
    while (std::getline(ss, tok, ',')) tokens.push_back(tok);
  }
  Alphabet alphabet(std::move(tokens));
  if (!std::getline(in, line) || line.rfind("max_n\t", 0) != 0) throw bad("missing max_n header");
  std::size_t max_n = 0;
  try {
    max_n = std::stoul(line.substr(6));
  } catch (const std::exception&) {
    throw bad("bad max_n");
  }
  std::vector<std::vector<Word>> levels(max_n);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw bad("malformed line '" + line + "'");
    std::size_t n = 0;
    try {
      n = std::stoul(line.substr(0, tab));
    } catch (const std::exception&) {
      throw bad("malformed length in '" + line + "'");
    }
    if (n < 1 || n > max_n) throw bad("length out of range in '" + line + "'");
    levels[n - 1].push_back(alphabet.parse(line.substr(tab + 1)));
  }
  return LanguageTable(std::move(alphabet), max_n, std::move(levels));
}

std::vector<std::vector<Word>> factor_levels(std::span<const Word> sources, std::size_t max_n) {
  std::vector<std::set<Word>> sets(max_n);
  for (const auto& src : sources) {
    for (std::size_t i = 0; i < src.size(); ++i) {
      for (std::size_t n = 1; n <= max_n && i + n <= src.size(); ++n)
        sets[n - 1].emplace(src.begin() + static_cast<std::ptrdiff_t>(i),
                            src.begin() + static_cast<std::ptrdiff_t>(i + n));
    }
  }
  std::vector<std::vector<Word>> levels(max_n);
  for (std::size_t n = 0; n < max_n; ++n) levels[n].assign(sets[n].begin(), sets[n].end());
  return levels;
}

void merge_levels(std::vector<std::vector<Word>>& levels, const std::vector<std::vector<Word>>& extra) {
  for (std::size_t n = 0; n < levels.size() && n < extra.size(); ++n) {
    levels[n].insert(levels[n].end(), extra[n].begin(), extra[n].end());
    sort_unique(levels[n]);
  }
}

}  // namespace subshift
