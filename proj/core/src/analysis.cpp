#include "utsforge/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "format.hpp"
#include "utsforge/errors.hpp"

namespace utsforge {

namespace {

double entry_error(const TransformSpec& transform, std::span<const Complex> coefficients,
                   const LedgerEntry& entry, const PointCloud& cloud) {
    if (entry.chosen_n >= coefficients.size()) return std::numeric_limits<double>::infinity();
    const auto values = eval_TN(transform, coefficients, entry.chosen_n, cloud.validation);
    return sup_gap(values, entry.target.evaluate(cloud.validation));
}

const LedgerEntry& entry_at(const UniversalSeries& series, std::size_t index) {
    if (index >= series.state.ledger.size())
        throw PreconditionError("ledger entry " + std::to_string(index) + " does not exist");
    return series.state.ledger[index];
}

}  // namespace

VerificationReport verify_series(const UniversalSeries& series, const TransformSpec& transform,
                                 double density_multiplier) {
    if (!(density_multiplier >= 1.0) || !std::isfinite(density_multiplier))
        throw PreconditionError("density multiplier must be >= 1");
    VerificationReport report;
    report.density_multiplier = density_multiplier;
    const double density = series.config.density * density_multiplier;
    const auto& ledger = series.state.ledger;
    for (std::size_t i = 0; i < ledger.size(); ++i) {
        const auto& e = ledger[i];
        VerificationRow row;
        row.entry = i;
        row.coords = e.coords;
        row.n = e.chosen_n;
        row.tol = e.tol;
        row.recorded = e.achieved_error;
        const PointCloud cloud = build_cloud(e.set, density);
        row.recomputed = entry_error(transform, series.state.coefficients, e, cloud);
        row.delta = std::abs(row.recomputed - row.recorded);
        row.pass = row.recomputed < row.tol;
        report.rows.push_back(row);
    }
    return report;
}

StabilityReport stability_radius(const TransformSpec& transform, const UniversalSeries& series,
                                 std::size_t entry_index) {
    if (!transform.is_linear())
        throw UnsupportedTransform("stability radius needs a linear transform, got " +
                                   std::string(to_string(transform.kind())));
    const LedgerEntry& e = entry_at(series, entry_index);
    const PointCloud cloud = build_cloud(e.set, series.config.density);

    StabilityReport r;
    r.N = e.chosen_n;
    r.tol = e.tol;
    r.baseline_error = entry_error(transform, series.state.coefficients, e, cloud);
    if (!(r.baseline_error < r.tol))
        throw PreconditionError("baseline error " + detail::num(r.baseline_error) +
                                " is not below tol " + detail::num(r.tol));
    r.M = std::max(1.0, std::pow(cloud.max_modulus, static_cast<double>(r.N)));
    r.epsilon = (r.tol - r.baseline_error) / (2.0 * static_cast<double>(r.N + 1) * r.M);
    r.delta = r.epsilon / transform.max_row_abs_sum(r.N);
    return r;
}

PerturbationResult perturbation_check(const TransformSpec& transform,
                                      const UniversalSeries& series, std::size_t entry_index,
                                      const StabilityReport& report, std::size_t trials,
                                      std::uint64_t seed) {
    const LedgerEntry& e = entry_at(series, entry_index);
    const PointCloud cloud = build_cloud(e.set, series.config.density);
    const auto reference = e.target.evaluate(cloud.validation);

    std::mt19937_64 rng(seed);
    // Magnitudes are skewed towards delta so the bound is actually exercised.
    std::uniform_real_distribution<double> radius(0.5, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

    PerturbationResult out;
    out.trials = trials;
    std::vector<Complex> c(series.state.coefficients.begin(),
                           series.state.coefficients.begin() +
                               static_cast<std::ptrdiff_t>(e.chosen_n + 1));
    const std::vector<Complex> base = c;
    for (std::size_t t = 0; t < trials; ++t) {
        for (std::size_t k = 0; k < c.size(); ++k) {
            const Complex d = std::polar(report.delta * radius(rng), angle(rng));
            out.max_perturbation = std::max(out.max_perturbation, std::abs(d));
            c[k] = base[k] + d;
        }
        const auto values = eval_TN(transform, c, e.chosen_n, cloud.validation);
        out.max_error = std::max(out.max_error, sup_gap(values, reference));
    }
    return out;
}

double radius_estimate(std::span<const Complex> b, double window_fraction) {
    if (!(window_fraction > 0.0 && window_fraction <= 1.0))
        throw PreconditionError("window fraction must lie in (0, 1]");
    const std::size_t len = b.size();
    const auto window = static_cast<std::size_t>(std::ceil(window_fraction * static_cast<double>(len)));
    double root_max = 0.0;
    bool any = false;
    for (std::size_t n = std::max<std::size_t>(len - std::min(window, len), 1); n < len; ++n) {
        const double mod = std::abs(b[n]);
        if (mod == 0.0) continue;
        root_max = std::max(root_max, std::exp(std::log(mod) / static_cast<double>(n)));
        any = true;
    }
    if (!any) return std::numeric_limits<double>::infinity();
    return 1.0 / root_max;
}

}  // namespace utsforge
