#pragma once

// Independent reference computations on plain strings. Nothing here calls the
// library's generators, so agreement with them is a real cross-check.

#include <cstddef>
#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Factors = std::set<std::string>;

inline Factors factors_of(const std::string& s, std::size_t n) {
  Factors out;
  for (std::size_t i = 0; i + n <= s.size(); ++i) out.insert(s.substr(i, n));
  return out;
}

/// Length-n factors of the bi-infinite periodic point seed^∞.
inline Factors periodic_factors(const std::string& seed, std::size_t n) {
  std::string s;
  while (s.size() < n + seed.size()) s += seed;
  return factors_of(s, n);
}

/// Iterates a substitution from `start` until the word has `length` letters.
inline std::string iterate(const std::map<char, std::string>& rules, std::string start, std::size_t length) {
  while (start.size() < length) {
    std::string next;
    for (char c : start) next += rules.at(c);
    start = std::move(next);
  }
  return start;
}

/// Fibonacci word prefix via 0 -> 01, 1 -> 0.
inline std::string fibonacci_prefix(std::size_t length) { return iterate({{'0', "01"}, {'1', "0"}}, "0", length); }

/// Characteristic word of slope alpha: c(k) = floor((k+2)alpha) - floor((k+1)alpha).
inline std::string mechanical_word(long double alpha, std::size_t length) {
  std::string s;
  for (std::size_t k = 0; k < length; ++k) {
    long long a = static_cast<long long>((k + 2) * alpha);
    long long b = static_cast<long long>((k + 1) * alpha);
    s += a - b ? '1' : '0';
  }
  return s;
}

/// Words of length n that extend `pad` symbols on both sides without a
/// forbidden factor. For the small SFTs used here, pad >= n is plenty.
inline Factors sft_factors(const std::string& letters, const std::vector<std::string>& forbidden, std::size_t n,
                           std::size_t pad) {
  Factors out;
  const std::size_t total = n + 2 * pad;
  std::string cur;
  std::function<void()> rec = [&] {
    for (const auto& f : forbidden)
      if (cur.size() >= f.size() && cur.compare(cur.size() - f.size(), f.size(), f) == 0) return;
    if (cur.size() == total) {
      out.insert(cur.substr(pad, n));
      return;
    }
    for (char c : letters) {
      cur.push_back(c);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

/// Factors of the doubling family: 0^∞, ...0001000..., and (1 0^{2^k-1})^∞
/// for 1 <= k <= k_max.
inline Factors doubling_factors(std::size_t n, unsigned k_max) {
  Factors out = periodic_factors("0", n);
  std::string lone(n, '0');
  lone += '1';
  lone += std::string(n, '0');
  for (const auto& w : factors_of(lone, n)) out.insert(w);
  for (unsigned k = 1; k <= k_max; ++k) {
    std::string seed(std::size_t{1} << k, '0');
    seed[0] = '1';
    for (const auto& w : periodic_factors(seed, n)) out.insert(w);
  }
  return out;
}

/// Applies a range-R rule (window -> char) to a word.
inline std::string apply_rule(const std::map<std::string, char>& rule, std::size_t range, const std::string& w) {
  std::string out;
  for (std::size_t i = 0; i + 2 * range + 1 <= w.size(); ++i) out += rule.at(w.substr(i, 2 * range + 1));
  return out;
}

/// Every assignment windows -> letters whose image of each word of length
/// 2R+1..horizon lies in the language. `language(n)` lists the words of
/// length n. Rules come out in lexicographic order of their image strings.
inline std::vector<std::string> naive_endomorphisms(const std::function<Factors(std::size_t)>& language,
                                                    const std::string& letters, std::size_t range,
                                                    std::size_t horizon) {
  const std::size_t w = 2 * range + 1;
  const Factors windows_set = language(w);
  const std::vector<std::string> windows(windows_set.begin(), windows_set.end());
  std::vector<Factors> levels(horizon + 1);
  for (std::size_t n = 1; n <= horizon; ++n) levels[n] = language(n);
  std::vector<std::string> result;
  std::size_t total = 1;
  for (std::size_t i = 0; i < windows.size(); ++i) total *= letters.size();
  for (std::size_t code = 0; code < total; ++code) {
    std::string images(windows.size(), ' ');
    std::size_t c = code;
    for (std::size_t i = windows.size(); i-- > 0;) {
      images[i] = letters[c % letters.size()];
      c /= letters.size();
    }
    std::map<std::string, char> rule;
    for (std::size_t i = 0; i < windows.size(); ++i) rule[windows[i]] = images[i];
    bool ok = true;
    for (std::size_t n = w; n <= horizon && ok; ++n)
      for (const auto& word : levels[n])
        if (!levels[n - 2 * range].count(apply_rule(rule, range, word))) {
          ok = false;
          break;
        }
    if (ok) result.push_back(images);
  }
  return result;
}

/// Number of bijections f of {0..size-1} with f(shift(i)) = shift(f(i)).
inline std::size_t commuting_permutations(const std::vector<std::size_t>& shift) {
  std::vector<std::size_t> perm(shift.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i) ok = perm[shift[i]] == shift[perm[i]];
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// The shift map on the points of the given orbits (period p_i each).
inline std::vector<std::size_t> orbit_shift(const std::vector<std::size_t>& periods) {
  std::vector<std::size_t> shift;
  std::size_t base = 0;
  for (auto p : periods) {
    for (std::size_t j = 0; j < p; ++j) shift.push_back(base + (j + 1) % p);
    base += p;
  }
  return shift;
}

}  // namespace oracle
