#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "subshift/alphabet.hpp"
#include "subshift/language_table.hpp"

namespace subshift {

struct ShiftSpec;

/// Shift of finite type given by forbidden words.
struct SftSpec {
  Alphabet alphabet;
  std::vector<Word> forbidden;
};

/// Primitive substitution; `rules[a]` is the image of symbol a.
struct SubstitutionSpec {
  Alphabet alphabet;
  std::vector<Word> rules;
};

/// Sturmian shift whose characteristic word is built from the standard-word
/// recursion s_{k+1} = s_k^{a_{k+1}} s_{k-1}, with the partial quotients a_k
/// given as a preperiod followed by a repeating period.
struct SturmianSpec {
  std::vector<unsigned> cf_pre;
  std::vector<unsigned> cf_period;
  Alphabet alphabet = Alphabet::binary();
};

/// Bi-infinite point left^∞ · core · right^∞. Used for the non-periodic
/// limit points of otherwise periodic constructions.
struct AsymptoticPoint {
  Word left;
  Word core;
  Word right;
};

/// Finite union of periodic orbits, optionally closed up with asymptotic
/// points.
struct PeriodicSpec {
  Alphabet alphabet;
  std::vector<Word> orbits;
  std::vector<AsymptoticPoint> asymptotic;
};

/// Disjoint union; the combined alphabet lists each part's tokens in order.
struct UnionSpec {
  std::vector<ShiftSpec> parts;
};

/// Orbit closure of a point of a minimal base shift with coordinate 0
/// overwritten by a fresh marker symbol.
struct MarkedSpec {
  std::shared_ptr<const ShiftSpec> base;
  std::string marker;
};

struct ShiftSpec {
  std::variant<SftSpec, SubstitutionSpec, SturmianSpec, PeriodicSpec, UnionSpec, MarkedSpec> model;
};

/// Throws the appropriate ErrorKind when the spec violates its invariants.
void validate(const ShiftSpec& spec);

Alphabet alphabet_of(const ShiftSpec& spec);

/// Exact language of the subshift up to length max_n.
LanguageTable generate_language(const ShiftSpec& spec, std::size_t max_n);

/// Longest forbidden word when the spec is an SFT; endomorphism checks are
/// exact at horizon >= 2R + this value.
std::optional<std::size_t> sft_window(const ShiftSpec& spec);

/// Sturmian, primitive substitution, marked-free single periodic orbit.
/// Unions are never minimal.
bool is_minimal_model(const ShiftSpec& spec);
bool is_periodic_model(const ShiftSpec& spec);

/// Smallest p such that w is a power of its length-p prefix.
std::size_t minimal_period(const Word& w);

bool is_rotation_of(const Word& a, const Word& b);

/// Prefix of the characteristic word of a Sturmian spec of at least `length`
/// symbols.
Word sturmian_prefix(const SturmianSpec& spec, std::size_t length);

/// Primitivity of the substitution's incidence matrix.
bool is_primitive(const SubstitutionSpec& spec);

struct SturmianCf {
  std::vector<unsigned> pre;
  std::vector<unsigned> period;
};

/// Parameters for builtin_example; each name reads only the fields it needs.
struct BuiltinParams {
  /// union-sturmian: number of components.
  unsigned k = 2;
  /// union-sturmian: one expansion per component; defaults to period [i].
  std::vector<SturmianCf> cfs;
  /// marked-transitive: base shift (default Fibonacci).
  std::optional<ShiftSpec> base;
  /// doubling-periodic / doubling-pair: orbits of period 2^1..2^n_max.
  unsigned n_max = 5;
};

/// Named example constructions: "union-sturmian", "marked-transitive",
/// "doubling-periodic", "doubling-pair".
ShiftSpec builtin_example(const std::string& name, const BuiltinParams& params = {});

const std::vector<std::string>& builtin_names();

ShiftSpec fibonacci_spec();

/// The closed form n + 2^{floor(log2 n)+1} - 1 sometimes given for the
/// doubling construction. It overcounts, so it is only reported next to
/// measured counts.
std::size_t doubling_claimed_complexity(std::size_t n);

/// Depth up to which the doubling-periodic truncation at n_max matches the
/// full closure exactly.
std::size_t doubling_exact_depth(unsigned n_max);

}  // namespace subshift
