#pragma once

#include <span>
#include <vector>

#include "utsforge/compact_sets.hpp"
#include "utsforge/polynomial.hpp"
#include "utsforge/transform.hpp"

namespace utsforge {

// Values of g(z) = (f(z) - sum_{n<=N0} b_n z^n) / z^{N0+1} on both grids of a
// cloud, where N0 + 1 = prefix.size().
struct ShiftedTarget {
    std::vector<Complex> samples;
    std::vector<Complex> validation;
};

ShiftedTarget shifted_target(const TransformSpec& transform, CoefficientPrefix prefix,
                             const ComplexPolynomial& target, const PointCloud& cloud);

// Fitting gives up once an orthonormal basis polynomial, written in the
// monomial basis and evaluated with absolute values on the sample nodes,
// exceeds its own rms norm (1) by this factor.
inline constexpr double kGrowthLimit = 1e12;

struct FitResult {
    ComplexPolynomial polynomial;
    double validation_error = 0.0;  // max over validation nodes of |p - g|
    double growth = 1.0;            // largest basis growth factor seen
};

// Discrete least squares on the samples with degree escalation d = 0, 1, ...,
// max_degree. Returns the first degree whose validation error is below tol.
// Throws MaxDegreeExceeded or IllConditioned (both carry the best error seen).
FitResult fit(const PointCloud& cloud, std::span<const Complex> g_samples,
              std::span<const Complex> g_validation, double tol, int max_degree);

inline ComplexPolynomial fit_polynomial(const PointCloud& cloud, std::span<const Complex> g_samples,
                                        std::span<const Complex> g_validation, double tol,
                                        int max_degree) {
    return fit(cloud, g_samples, g_validation, tol, max_degree).polynomial;
}

}  // namespace utsforge
