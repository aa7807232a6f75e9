#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "utsforge/scheduler.hpp"

namespace utsforge {

struct VerificationRow {
    std::size_t entry = 0;
    TaskCoordinates coords;
    std::size_t n = 0;
    double tol = 0.0;
    double recorded = 0.0;
    double recomputed = 0.0;
    double delta = 0.0;  // |recomputed - recorded|
    bool pass = false;   // recomputed < tol
};

struct VerificationReport {
    double density_multiplier = 1.0;
    std::vector<VerificationRow> rows;

    bool all_pass() const noexcept {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }
};

// Recomputes every ledger entry on clouds built at density * multiplier.
VerificationReport verify_series(const UniversalSeries& series, const TransformSpec& transform,
                                 double density_multiplier);

struct StabilityReport {
    double epsilon = 0.0;
    double delta = 0.0;
    std::size_t N = 0;
    double M = 1.0;
    double baseline_error = 0.0;
    double tol = 0.0;
};

// Per-coefficient perturbation bound for one ledger entry. Linear kinds only.
StabilityReport stability_radius(const TransformSpec& transform, const UniversalSeries& series,
                                 std::size_t entry_index);

struct PerturbationResult {
    std::size_t trials = 0;
    double max_error = 0.0;
    double max_perturbation = 0.0;  // largest |da_k| actually drawn
};

// Draws `trials` perturbation vectors with |da_k| < delta for k <= N from a
// seeded mt19937_64 and returns the worst recomputed sup error on the entry's
// validation grid.
PerturbationResult perturbation_check(const TransformSpec& transform,
                                      const UniversalSeries& series, std::size_t entry_index,
                                      const StabilityReport& report, std::size_t trials = 100,
                                      std::uint64_t seed = 0x5eed5eedULL);

// 1 / max |b_n|^{1/n} over the trailing ceil(window_fraction * size) entries
// with n >= 1 and b_n != 0; +infinity when there are none.
double radius_estimate(std::span<const Complex> b, double window_fraction);

}  // namespace utsforge
