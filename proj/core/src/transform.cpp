#include "utsforge/transform.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "utsforge/errors.hpp"

namespace utsforge {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Probe points for the inverse spot-check of a homeomorphism pair.
constexpr std::array<Complex, 9> kProbes{{
    {0.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.5, -2.0},
    {3.0, 4.0}, {-7.25, 0.1}, {0.0, -40.0}, {1e-3, 2e-3},
}};
constexpr double kProbeTolerance = 1e-12;

std::string row_error(std::size_t n, const char* why) {
    return "transform row " + std::to_string(n) + ": " + why;
}

void check_band(const rows::ConstantBand& band) {
    if (band.band.empty() || band.band.front() == Complex{})
        throw InvalidTransform("constant-band rule needs a nonzero leading entry");
}

void check_table(const rows::Table& table) {
    for (std::size_t n = 0; n < table.rows.size(); ++n) {
        if (table.rows[n].size() != n + 1)
            throw InvalidTransform(row_error(n, "table row must have n+1 entries"));
        if (table.rows[n][n] == Complex{})
            throw InvalidTransform(row_error(n, "diagonal entry is zero"));
    }
}

const std::vector<Complex>& table_row(const rows::Table& table, std::size_t n) {
    if (n >= table.rows.size())
        throw InvalidTransform(row_error(n, "beyond the end of the row table"));
    return table.rows[n];
}

}  // namespace

std::string to_string(TransformKind kind) {
    switch (kind) {
        case TransformKind::identity: return "identity";
        case TransformKind::cesaro: return "cesaro";
        case TransformKind::linear_triangular: return "linearTriangular";
        case TransformKind::wrapped_linear: return "wrappedLinear";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// Homeomorphism

Homeomorphism::Homeomorphism(std::string name, std::vector<Complex> params, Map forward,
                             Map inverse)
    : name_(std::move(name)),
      params_(std::move(params)),
      forward_(std::move(forward)),
      inverse_(std::move(inverse)) {
    if (!forward_ || !inverse_)
        throw InvalidTransform("homeomorphism '" + name_ + "' needs both directions");
    for (Complex w : kProbes) {
        const Complex image = forward_(w);
        const Complex back = inverse_(image);
        const double scale = 1.0 + std::abs(w) + std::abs(image);
        if (!(std::abs(back - w) <= kProbeTolerance * scale))
            throw InvalidTransform("homeomorphism '" + name_ +
                                   "': inverse does not undo the forward map on the probe set");
    }
}

Homeomorphism Homeomorphism::affine(Complex alpha, Complex beta) {
    if (alpha == Complex{})
        throw InvalidTransform("affine homeomorphism requires alpha != 0");
    return Homeomorphism(
        "affine", {alpha, beta}, [alpha, beta](Complex w) { return alpha * w + beta; },
        [alpha, beta](Complex w) { return (w - beta) / alpha; });
}

Homeomorphism Homeomorphism::radial_power(double rho) {
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw InvalidTransform("radialPower homeomorphism requires rho > 0");
    auto power = [](double exponent) {
        return [exponent](Complex w) {
            const double r = std::abs(w);
            if (r == 0.0) return Complex{};
            return std::polar(std::pow(r, exponent), std::arg(w));
        };
    };
    return Homeomorphism("radialPower", {Complex{rho, 0.0}}, power(rho), power(1.0 / rho));
}

Homeomorphism Homeomorphism::custom(std::string name, Map forward, Map inverse) {
    return Homeomorphism(std::move(name), {}, std::move(forward), std::move(inverse));
}

// ---------------------------------------------------------------------------
// TransformSpec

TransformSpec::TransformSpec(TransformKind kind, LambdaRule rule, std::optional<Homeomorphism> psi)
    : kind_(kind), rule_(std::move(rule)), psi_(std::move(psi)) {
    std::visit(overloaded{
                   [](const rows::ConstantBand& b) { check_band(b); },
                   [](const rows::Table& t) { check_table(t); },
                   [](const auto&) {},
               },
               rule_);
}

TransformSpec TransformSpec::identity() {
    return TransformSpec(TransformKind::identity, rows::Identity{}, std::nullopt);
}

TransformSpec TransformSpec::cesaro() {
    return TransformSpec(TransformKind::cesaro, rows::Cesaro{}, std::nullopt);
}

TransformSpec TransformSpec::linear(LambdaRule rule) {
    return TransformSpec(TransformKind::linear_triangular, std::move(rule), std::nullopt);
}

TransformSpec TransformSpec::wrapped(LambdaRule rule, Homeomorphism psi) {
    return TransformSpec(TransformKind::wrapped_linear, std::move(rule), std::move(psi));
}

Complex TransformSpec::diagonal(std::size_t n) const {
    const Complex d = std::visit(
        overloaded{
            [](const rows::Identity&) { return Complex{1.0, 0.0}; },
            [n](const rows::Cesaro&) { return Complex{1.0 / static_cast<double>(n + 1), 0.0}; },
            [](const rows::ConstantBand& b) { return b.band.front(); },
            [n](const rows::Table& t) { return table_row(t, n)[n]; },
        },
        rule_);
    if (d == Complex{}) throw InvalidTransform(row_error(n, "diagonal entry is zero"));
    return d;
}

std::vector<Complex> TransformSpec::row(std::size_t n) const {
    std::vector<Complex> out(n + 1);
    std::visit(overloaded{
                   [&](const rows::Identity&) { out[n] = 1.0; },
                   [&](const rows::Cesaro&) {
                       std::fill(out.begin(), out.end(),
                                 Complex{1.0 / static_cast<double>(n + 1), 0.0});
                   },
                   [&](const rows::ConstantBand& b) {
                       for (std::size_t d = 0; d < b.band.size() && d <= n; ++d)
                           out[n - d] = b.band[d];
                   },
                   [&](const rows::Table& t) { out = table_row(t, n); },
               },
               rule_);
    if (out[n] == Complex{}) throw InvalidTransform(row_error(n, "diagonal entry is zero"));
    return out;
}

Complex TransformSpec::off_diagonal_sum(std::size_t n, CoefficientPrefix prefix) const {
    if (prefix.size() < n) throw PreconditionError("off_diagonal_sum: prefix shorter than n");
    return std::visit(
        overloaded{
            [](const rows::Identity&) { return Complex{}; },
            [&](const rows::Cesaro&) {
                const double w = 1.0 / static_cast<double>(n + 1);
                Complex s{};
                for (std::size_t k = 0; k < n; ++k) s += w * prefix[k];
                return s;
            },
            [&](const rows::ConstantBand& b) {
                Complex s{};
                const std::size_t reach = std::min(n, b.band.size() - 1);
                for (std::size_t k = n - reach; k < n; ++k) s += b.band[n - k] * prefix[k];
                return s;
            },
            [&](const rows::Table& t) {
                const auto& r = table_row(t, n);
                Complex s{};
                for (std::size_t k = 0; k < n; ++k) s += r[k] * prefix[k];
                return s;
            },
        },
        rule_);
}

double TransformSpec::max_row_abs_sum(std::size_t N) const {
    return std::visit(overloaded{
                          [](const rows::Identity&) { return 1.0; },
                          [](const rows::Cesaro&) { return 1.0; },
                          [N](const rows::ConstantBand& b) {
                              double s = 0.0;
                              for (std::size_t d = 0; d < b.band.size() && d <= N; ++d)
                                  s += std::abs(b.band[d]);
                              return s;
                          },
                          [N](const rows::Table& t) {
                              double best = 0.0;
                              for (std::size_t n = 0; n <= N; ++n) {
                                  double s = 0.0;
                                  for (Complex l : table_row(t, n)) s += std::abs(l);
                                  best = std::max(best, s);
                              }
                              return best;
                          },
                      },
                      rule_);
}

// ---------------------------------------------------------------------------
// Operations

namespace {

// Sequential sum a_0 + ... + a_{count-1}; shared by the Cesaro forward map
// and its inverse so that padding zeros come out exactly.
Complex running_sum(CoefficientPrefix prefix, std::size_t count) {
    Complex s{};
    for (std::size_t k = 0; k < count; ++k) s += prefix[k];
    return s;
}

// sum_k lambda_{n,k} a_k written as lambda_nn (a_n + s / lambda_nn). With the
// same s, the a_n that solve_last returns for target 0 cancels exactly, so
// padding coefficients come out as exact zeros.
Complex linear_part(const TransformSpec& t, CoefficientPrefix prefix) {
    const std::size_t n = prefix.size() - 1;
    const Complex d = t.diagonal(n);
    return d * (prefix[n] + t.off_diagonal_sum(n, prefix) / d);
}

}  // namespace

Complex apply_b(const TransformSpec& transform, CoefficientPrefix prefix) {
    if (prefix.empty()) throw PreconditionError("apply_b: empty prefix");
    const std::size_t n = prefix.size() - 1;
    switch (transform.kind()) {
        case TransformKind::identity:
            return prefix[n];
        case TransformKind::cesaro:
            return running_sum(prefix, n + 1) / static_cast<double>(n + 1);
        case TransformKind::linear_triangular:
            return linear_part(transform, prefix);
        case TransformKind::wrapped_linear:
            return (*transform.psi())(linear_part(transform, prefix));
    }
    return {};
}

std::vector<Complex> coeffs_T(const TransformSpec& transform, CoefficientPrefix prefix,
                              std::size_t N) {
    if (prefix.size() < N + 1)
        throw PreconditionError("coeffs_T: prefix has " + std::to_string(prefix.size()) +
                                " entries, need " + std::to_string(N + 1));
    std::vector<Complex> b(N + 1);
    switch (transform.kind()) {
        case TransformKind::identity:
            std::copy_n(prefix.begin(), N + 1, b.begin());
            break;
        case TransformKind::cesaro: {
            Complex s{};
            for (std::size_t n = 0; n <= N; ++n) {
                s += prefix[n];
                b[n] = s / static_cast<double>(n + 1);
            }
            break;
        }
        default:
            for (std::size_t n = 0; n <= N; ++n) b[n] = apply_b(transform, prefix.first(n + 1));
            break;
    }
    return b;
}

Complex horner(std::span<const Complex> coefficients, Complex z) {
    Complex acc{};
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::vector<Complex> eval_TN(const TransformSpec& transform, CoefficientPrefix prefix,
                             std::size_t N, std::span<const Complex> points) {
    const auto b = coeffs_T(transform, prefix, N);
    std::vector<Complex> out;
    out.reserve(points.size());
    for (Complex z : points) out.push_back(horner(b, z));
    return out;
}

Complex solve_last(const TransformSpec& transform, CoefficientPrefix prefix, Complex target) {
    const std::size_t n = prefix.size();
    switch (transform.kind()) {
        case TransformKind::identity:
            return target;
        case TransformKind::cesaro:
            return static_cast<double>(n + 1) * target - running_sum(prefix, n);
        case TransformKind::linear_triangular:
            return (target - transform.off_diagonal_sum(n, prefix)) / transform.diagonal(n);
        case TransformKind::wrapped_linear: {
            const Complex inner = transform.psi()->inverse(target);
            return (inner - transform.off_diagonal_sum(n, prefix)) / transform.diagonal(n);
        }
    }
    return {};
}

std::vector<Complex> pullback(const TransformSpec& transform, std::span<const Complex> c) {
    std::vector<Complex> a;
    a.reserve(c.size());
    for (Complex target : c) a.push_back(solve_last(transform, a, target));
    return a;
}

}  // namespace utsforge
