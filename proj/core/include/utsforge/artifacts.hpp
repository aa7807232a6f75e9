#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "utsforge/scheduler.hpp"

namespace utsforge {

inline constexpr const char* kCoefficientsFile = "coefficients.csv";
inline constexpr const char* kLedgerFile = "ledger.json";

struct RunFailure {
    std::string message;
    TaskCoordinates task;
    bool transform_fault = false;
};

struct RunArtifacts {
    UniversalSeries series;
    std::optional<RunFailure> failure;
    double total_seconds = 0.0;
};

// Writes coefficients.csv and ledger.json into dir (created if needed).
void write_artifacts(const std::filesystem::path& dir, const RunArtifacts& artifacts);

// Reads both files back. Missing, truncated or inconsistent files raise
// ArtifactError.
RunArtifacts read_artifacts(const std::filesystem::path& dir);

// Coefficient table alone, "index,re,im" with round-trip precision.
void write_coefficients_csv(const std::filesystem::path& file, const std::vector<Complex>& a);
std::vector<Complex> read_coefficients_csv(const std::filesystem::path& file);

}  // namespace utsforge
