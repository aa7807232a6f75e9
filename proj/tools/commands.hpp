#pragma once

#include <filesystem>
#include <iosfwd>

namespace utsforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitApproximationFailed = 2;

inline constexpr const char* kVerificationFile = "verification.json";
inline constexpr const char* kErrorCsv = "error_vs_task.csv";
inline constexpr const char* kGrowthCsv = "coefficient_growth.csv";
inline constexpr const char* kRadiusCsv = "radius_vs_prefix.csv";

int cmd_run(const std::filesystem::path& config, std::ostream& out, std::ostream& err);
int cmd_verify(const std::filesystem::path& dir, double density_multiplier, std::ostream& out,
               std::ostream& err);
int cmd_plotdata(const std::filesystem::path& dir, double window_fraction, std::ostream& out,
                 std::ostream& err);

}  // namespace utsforge::cli
