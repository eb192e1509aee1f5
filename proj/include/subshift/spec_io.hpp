#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "subshift/language_table.hpp"
#include "subshift/shift_models.hpp"

namespace subshift {

/// Parse a shift spec document. Schema problems throw schema_violation with a
/// JSON-pointer location; semantic problems (duplicate orbits, alphabet
/// collisions, non-primitive rules) throw their own kinds.
ShiftSpec spec_from_json(const nlohmann::json& doc);
nlohmann::json spec_to_json(const ShiftSpec& spec);

ShiftSpec load_spec(const std::filesystem::path& path);

void save_table(const LanguageTable& table, const std::filesystem::path& path);
LanguageTable load_table(const std::filesystem::path& path);

/// Environment variable naming the table cache directory.
inline constexpr const char* kCacheDirEnv = "SUBSHIFT_CACHE_DIR";

/// generate_language, going through the on-disk cache when `cache_dir` (or the
/// environment variable) is set.
LanguageTable cached_language(const ShiftSpec& spec, std::size_t max_n,
                              std::optional<std::filesystem::path> cache_dir = std::nullopt);

std::filesystem::path cache_file_name(const ShiftSpec& spec, std::size_t max_n);

}  // namespace subshift
