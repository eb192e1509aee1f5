#include "subshift/block_code.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <string>

#include "subshift/error.hpp"

namespace subshift {

BlockCode::BlockCode(std::size_t range, Alphabet domain, Alphabet codomain, std::vector<Word> windows,
                     std::vector<Symbol> images)
    : range_(range),
      domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      windows_(std::move(windows)),
      images_(std::move(images)) {
  if (windows_.size() != images_.size())
    throw Error(ErrorKind::bad_params, "block code needs one image per window");
  if (!std::is_sorted(windows_.begin(), windows_.end()) ||
      std::adjacent_find(windows_.begin(), windows_.end()) != windows_.end())
    throw Error(ErrorKind::bad_params, "block code windows must be sorted and distinct");
  for (const auto& w : windows_) {
    if (w.size() != window_length()) throw Error(ErrorKind::bad_params, "window of wrong length");
    for (Symbol s : w)
      if (s >= domain_.size()) throw Error(ErrorKind::bad_params, "window symbol outside domain alphabet");
  }
  for (Symbol s : images_)
    if (s >= codomain_.size()) throw Error(ErrorKind::bad_params, "image symbol outside codomain alphabet");
}

BlockCode BlockCode::from_rule(const LanguageTable& table, std::size_t range,
                               const std::function<Symbol(const Word&)>& rule) {
  auto lvl = table.level(2 * range + 1);
  std::vector<Word> windows(lvl.begin(), lvl.end());
  std::vector<Symbol> images;
  images.reserve(windows.size());
  for (const auto& w : windows) images.push_back(rule(w));
  return BlockCode(range, table.alphabet(), table.alphabet(), std::move(windows), std::move(images));
}

BlockCode BlockCode::from_images(const LanguageTable& table, std::size_t range, std::vector<Symbol> images) {
  auto lvl = table.level(2 * range + 1);
  return BlockCode(range, table.alphabet(), table.alphabet(), std::vector<Word>(lvl.begin(), lvl.end()),
                   std::move(images));
}

BlockCode BlockCode::identity(const LanguageTable& table, std::size_t range) {
  return from_rule(table, range, [range](const Word& w) { return w[range]; });
}

std::optional<Symbol> BlockCode::image(const Word& window) const {
  auto it = std::lower_bound(windows_.begin(), windows_.end(), window);
  if (it == windows_.end() || *it != window) return std::nullopt;
  return images_[static_cast<std::size_t>(it - windows_.begin())];
}

bool BlockCode::built_on(const LanguageTable& table) const {
  if (!(domain_ == table.alphabet()) || window_length() > table.max_n()) return false;
  auto lvl = table.level(window_length());
  return std::equal(lvl.begin(), lvl.end(), windows_.begin(), windows_.end());
}

void BlockCode::write(std::ostream& out) const {
  out << "range\t" << range_ << '\n';
  for (std::size_t i = 0; i < windows_.size(); ++i)
    out << domain_.format(windows_[i]) << '\t' << codomain_.token(images_[i]) << '\n';
}

BlockCode BlockCode::read(std::istream& in, const Alphabet& domain, const Alphabet& codomain) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("range\t", 0) != 0)
    throw Error(ErrorKind::schema_violation, "block code: missing range header");
  const std::size_t range = std::stoul(line.substr(6));
  std::vector<std::pair<Word, Symbol>> entries;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw Error(ErrorKind::schema_violation, "block code: malformed line");
    entries.emplace_back(domain.parse(line.substr(0, tab)), codomain.symbol(line.substr(tab + 1)));
  }
  std::sort(entries.begin(), entries.end());
  std::vector<Word> windows;
  std::vector<Symbol> images;
  for (auto& [w, s] : entries) {
    windows.push_back(std::move(w));
    images.push_back(s);
  }
  return BlockCode(range, domain, codomain, std::move(windows), std::move(images));
}

Word apply_to_word(const BlockCode& code, const Word& w) {
  const std::size_t len = code.window_length();
  if (w.size() < len)
    throw Error(ErrorKind::bad_params, "word shorter than the code window (" + std::to_string(len) + ")");
  Word out;
  out.reserve(w.size() - len + 1);
  Word window(len);
  for (std::size_t i = 0; i + len <= w.size(); ++i) {
    std::copy_n(w.begin() + static_cast<std::ptrdiff_t>(i), len, window.begin());
    auto s = code.image(window);
    if (!s) throw Error(ErrorKind::window_not_in_domain, "'" + code.domain().format(window) + "'");
    out.push_back(*s);
  }
  return out;
}

namespace {

void require_built_on(const BlockCode& code, const LanguageTable& table) {
  if (!code.built_on(table))
    throw Error(ErrorKind::table_mismatch, "code of range " + std::to_string(code.range()) +
                                               " was not built on this table");
}

void require_depth(const LanguageTable& table, std::size_t len) {
  if (len > table.max_n())
    throw Error(ErrorKind::depth_exceeded,
                "needs words of length " + std::to_string(len) + ", table depth is " + std::to_string(table.max_n()));
}

}  // namespace

BlockCode compose(const BlockCode& outer, const BlockCode& inner, const LanguageTable& table) {
  if (!(inner.codomain() == outer.domain()))
    throw Error(ErrorKind::alphabet_mismatch, "inner codomain differs from outer domain");
  const std::size_t range = outer.range() + inner.range();
  require_depth(table, 2 * range + 1);
  require_built_on(inner, table);
  auto lvl = table.level(2 * range + 1);
  std::vector<Symbol> images;
  images.reserve(lvl.size());
  for (const auto& w : lvl) images.push_back(apply_to_word(outer, apply_to_word(inner, w)).front());
  return BlockCode(range, table.alphabet(), outer.codomain(), std::vector<Word>(lvl.begin(), lvl.end()),
                   std::move(images));
}

BlockCode shift_power_code(long j, const LanguageTable& table) {
  const auto r = static_cast<std::size_t>(std::labs(j));
  require_depth(table, 2 * r + 1);
  const auto pos = static_cast<std::size_t>(static_cast<long>(r) + j);
  return BlockCode::from_rule(table, r, [pos](const Word& w) { return w[pos]; });
}

BlockCode inflate(const BlockCode& code, std::size_t target_range, const LanguageTable& table) {
  if (target_range < code.range())
    throw Error(ErrorKind::bad_params, "cannot inflate to a smaller range");
  require_depth(table, 2 * target_range + 1);
  const std::size_t offset = target_range - code.range();
  const std::size_t len = code.window_length();
  auto lvl = table.level(2 * target_range + 1);
  std::vector<Symbol> images;
  images.reserve(lvl.size());
  Word window(len);
  for (const auto& w : lvl) {
    std::copy_n(w.begin() + static_cast<std::ptrdiff_t>(offset), len, window.begin());
    auto s = code.image(window);
    if (!s) throw Error(ErrorKind::window_not_in_domain, "'" + code.domain().format(window) + "'");
    images.push_back(*s);
  }
  return BlockCode(target_range, code.domain(), code.codomain(), std::vector<Word>(lvl.begin(), lvl.end()),
                   std::move(images));
}

bool codes_equal(const BlockCode& a, const BlockCode& b, const LanguageTable& table) {
  const std::size_t r = std::max(a.range(), b.range());
  require_depth(table, 2 * r + 1);
  require_built_on(a, table);
  require_built_on(b, table);
  if (!(a.codomain() == b.codomain())) return false;
  return inflate(a, r, table).images() == inflate(b, r, table).images();
}

std::size_t minimal_range(const BlockCode& code, const LanguageTable& table) {
  require_built_on(code, table);
  for (std::size_t r = 0; r < code.range(); ++r) {
    const std::size_t offset = code.range() - r;
    auto small = table.level(2 * r + 1);
    std::vector<int> forced(small.size(), -1);
    bool ok = true;
    for (std::size_t i = 0; i < code.windows().size() && ok; ++i) {
      const auto& w = code.windows()[i];
      Word center(w.begin() + static_cast<std::ptrdiff_t>(offset),
                  w.begin() + static_cast<std::ptrdiff_t>(offset + 2 * r + 1));
      auto idx = static_cast<std::size_t>(std::lower_bound(small.begin(), small.end(), center) - small.begin());
      int& slot = forced[idx];
      if (slot < 0) slot = code.images()[i];
      else ok = slot == code.images()[i];
    }
    if (ok) return r;
  }
  return code.range();
}

BlockCode restrict_range(const BlockCode& code, std::size_t r, const LanguageTable& table) {
  require_built_on(code, table);
  if (r > code.range()) return inflate(code, r, table);
  const std::size_t offset = code.range() - r;
  auto small = table.level(2 * r + 1);
  std::vector<int> forced(small.size(), -1);
  for (std::size_t i = 0; i < code.windows().size(); ++i) {
    const auto& w = code.windows()[i];
    Word center(w.begin() + static_cast<std::ptrdiff_t>(offset),
                w.begin() + static_cast<std::ptrdiff_t>(offset + 2 * r + 1));
    auto idx = static_cast<std::size_t>(std::lower_bound(small.begin(), small.end(), center) - small.begin());
    if (forced[idx] >= 0 && forced[idx] != code.images()[i])
      throw Error(ErrorKind::bad_params, "code depends on coordinates outside range " + std::to_string(r));
    forced[idx] = code.images()[i];
  }
  std::vector<Symbol> images;
  for (int s : forced) {
    if (s < 0) throw Error(ErrorKind::bad_params, "central window never occurs");
    images.push_back(static_cast<Symbol>(s));
  }
  return BlockCode(r, code.domain(), code.codomain(), std::vector<Word>(small.begin(), small.end()),
                   std::move(images));
}

const char* to_string(EndoVerdict::Kind kind) {
  switch (kind) {
    case EndoVerdict::Kind::certified_exact: return "certified-exact";
    case EndoVerdict::Kind::consistent_to_horizon: return "consistent-to-horizon";
    case EndoVerdict::Kind::refuted: return "refuted";
  }
  return "?";
}

EndoVerdict is_endomorphism(const BlockCode& code, const LanguageTable& table, std::size_t horizon,
                            std::optional<std::size_t> sft_window) {
  if (!(code.codomain() == table.alphabet()))
    throw Error(ErrorKind::alphabet_mismatch, "endomorphism must map into the table alphabet");
  require_depth(table, horizon);
  if (horizon < code.window_length())
    throw Error(ErrorKind::bad_params, "horizon below the code window length");
  require_built_on(code, table);
  for (std::size_t n = code.window_length(); n <= horizon; ++n)
    for (const auto& w : table.level(n))
      if (!table.contains(apply_to_word(code, w)))
        return EndoVerdict{EndoVerdict::Kind::refuted, horizon, w};
  const bool exact = sft_window && horizon >= 2 * code.range() + *sft_window;
  return EndoVerdict{exact ? EndoVerdict::Kind::certified_exact : EndoVerdict::Kind::consistent_to_horizon, horizon,
                     std::nullopt};
}

}  // namespace subshift
