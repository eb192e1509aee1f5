#pragma once

#include <set>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "../oracles.hpp"
#include "subshift/error.hpp"
#include "subshift/language_table.hpp"
#include "subshift/shift_models.hpp"
#include "subshift/spec_io.hpp"

namespace test {

inline oracle::Factors level_strings(const subshift::LanguageTable& table, std::size_t n) {
  oracle::Factors out;
  for (const auto& w : table.level(n)) out.insert(table.alphabet().format(w));
  return out;
}

inline subshift::ShiftSpec spec(const char* json) { return subshift::spec_from_json(nlohmann::json::parse(json)); }

inline subshift::ShiftSpec spec_file(const std::string& name) {
  return subshift::load_spec(std::string(SUBSHIFT_SPECS_DIR) + "/" + name);
}

template <class F>
subshift::ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const subshift::Error& e) {
    return e.kind();
  }
  FAIL("no subshift::Error thrown");
  return subshift::ErrorKind::io_error;
}

}  // namespace test
