#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "utsforge/scheduler.hpp"

namespace utsforge {

// Environment variable that overrides RunConfig::output_dir.
inline constexpr const char* kOutputDirEnv = "UTSFORGE_OUTPUT_DIR";

struct RunConfig {
    ForgeRequest request;
    std::filesystem::path output_dir = "utsforge-out";
};

// Parses a JSON run configuration. Real and complex scalars may be given as
// numbers, decimal strings, or [re, im] pairs of either. Every catalog entry is
// validated; any problem raises ConfigError naming the offending field.
RunConfig parse_config(std::string_view json_text);

// Reads and parses a file, then applies the output-directory override.
RunConfig load_config(const std::filesystem::path& path);

}  // namespace utsforge
