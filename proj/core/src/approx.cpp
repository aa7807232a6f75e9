#include "utsforge/approx.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "format.hpp"
#include "utsforge/errors.hpp"

namespace utsforge {

namespace {

Complex int_power(Complex z, std::size_t k) {
    Complex result{1.0, 0.0};
    while (k > 0) {
        if (k & 1u) result *= z;
        z *= z;
        k >>= 1u;
    }
    return result;
}

std::vector<Complex> shift_values(std::span<const Complex> points, std::span<const Complex> b,
                                  const ComplexPolynomial& target) {
    std::vector<Complex> g;
    g.reserve(points.size());
    for (Complex z : points) {
        const Complex numerator = target(z) - horner(b, z);
        g.push_back(numerator / int_power(z, b.size()));
    }
    return g;
}

Complex inner(const std::vector<Complex>& u, const std::vector<Complex>& v) {
    Complex s{};
    for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
    return s / static_cast<double>(u.size());
}

double rms(const std::vector<Complex>& v) {
    double s = 0.0;
    for (Complex x : v) s += std::norm(x);
    return std::sqrt(s / static_cast<double>(v.size()));
}

// max_i sum_k |c_k| |z_i|^k
double abs_growth(const std::vector<Complex>& c, std::span<const Complex> nodes) {
    double worst = 0.0;
    for (Complex z : nodes) {
        const double r = std::abs(z);
        double acc = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + std::abs(*it);
        worst = std::max(worst, acc);
    }
    return worst;
}

double validation_error(const std::vector<Complex>& p, std::span<const Complex> nodes,
                        std::span<const Complex> g) {
    double worst = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double e = std::abs(horner(p, nodes[i]) - g[i]);
        if (std::isnan(e)) return std::numeric_limits<double>::infinity();
        worst = std::max(worst, e);
    }
    return worst;
}

}  // namespace

ShiftedTarget shifted_target(const TransformSpec& transform, CoefficientPrefix prefix,
                             const ComplexPolynomial& target, const PointCloud& cloud) {
    if (!(cloud.min_modulus > 0.0))
        throw PreconditionError("shifted_target: cloud touches the origin");
    std::vector<Complex> b;
    if (!prefix.empty()) b = coeffs_T(transform, prefix, prefix.size() - 1);
    return {shift_values(cloud.samples, b, target), shift_values(cloud.validation, b, target)};
}

FitResult fit(const PointCloud& cloud, std::span<const Complex> g_samples,
              std::span<const Complex> g_validation, double tol, int max_degree) {
    const auto& z = cloud.samples;
    if (z.empty()) throw PreconditionError("fit_polynomial: empty sample grid");
    if (g_samples.size() != z.size() || g_validation.size() != cloud.validation.size())
        throw PreconditionError("fit_polynomial: value arrays do not match the cloud grids");
    if (!(tol > 0.0)) throw PreconditionError("fit_polynomial: tol must be positive");
    if (max_degree < 0) throw PreconditionError("fit_polynomial: negative max degree");

    // basis[k]: values of the k-th orthonormal polynomial on the samples;
    // monomial[k]: its coefficients in 1, z, z^2, ...
    std::vector<std::vector<Complex>> basis;
    std::vector<std::vector<Complex>> monomial;
    std::vector<Complex> residual(g_samples.begin(), g_samples.end());
    std::vector<Complex> p;

    double best_error = std::numeric_limits<double>::infinity();
    int best_degree = -1;
    double growth_seen = 1.0;

    for (int d = 0; d <= max_degree; ++d) {
        std::vector<Complex> q(z.size());
        std::vector<Complex> c(static_cast<std::size_t>(d) + 1);
        if (d == 0) {
            std::fill(q.begin(), q.end(), Complex{1.0, 0.0});
            c[0] = 1.0;
        } else {
            const auto& prev = basis.back();
            for (std::size_t i = 0; i < z.size(); ++i) q[i] = z[i] * prev[i];
            std::copy(monomial.back().begin(), monomial.back().end(), c.begin() + 1);
            const double before = rms(q);
            for (int pass = 0; pass < 2; ++pass) {
                for (int j = 0; j < d; ++j) {
                    const Complex h = inner(basis[j], q);
                    for (std::size_t i = 0; i < z.size(); ++i) q[i] -= h * basis[j][i];
                    for (std::size_t k = 0; k < monomial[j].size(); ++k) c[k] -= h * monomial[j][k];
                }
            }
            const double norm = rms(q);
            if (!(norm > 1e-12 * before))
                throw IllConditioned("fit_polynomial: basis degenerate at degree " +
                                         std::to_string(d) + " (too few distinct samples)",
                                     best_error, best_degree, d - 1);
            for (auto& x : q) x /= norm;
            for (auto& x : c) x /= norm;
        }

        const double growth = abs_growth(c, z);
        if (growth > kGrowthLimit)
            throw IllConditioned("fit_polynomial: basis growth " + detail::num(growth) +
                                     " exceeds the limit at degree " + std::to_string(d),
                                 best_error, best_degree, d - 1);
        growth_seen = std::max(growth_seen, growth);

        const Complex coef = inner(q, residual);
        for (std::size_t i = 0; i < z.size(); ++i) residual[i] -= coef * q[i];
        p.resize(static_cast<std::size_t>(d) + 1);
        for (std::size_t k = 0; k < c.size(); ++k) p[k] += coef * c[k];

        basis.push_back(std::move(q));
        monomial.push_back(std::move(c));

        const double err = validation_error(p, cloud.validation, g_validation);
        if (err < best_error) {
            best_error = err;
            best_degree = d;
        }
        if (err < tol) return {ComplexPolynomial(p), err, growth_seen};
    }
    throw MaxDegreeExceeded("fit_polynomial: no degree <= " + std::to_string(max_degree) +
                                " reaches tol " + detail::num(tol) +
                                " (best validation error " + detail::num(best_error) + ")",
                            best_error, best_degree);
}

}  // namespace utsforge
