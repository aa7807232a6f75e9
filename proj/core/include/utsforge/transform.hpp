#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace utsforge {

using Complex = std::complex<double>;

// Raw coefficients (a_0, ..., a_{N0}); an empty prefix means nothing has
// been chosen yet (N0 = -1).
using CoefficientPrefix = std::span<const Complex>;

enum class TransformKind { identity, cesaro, linear_triangular, wrapped_linear };

std::string to_string(TransformKind kind);

// Row rules for lambda_{n,k}. Rows are produced on demand since the matrix is
// infinite.
namespace rows {

struct Identity {};   // lambda_{n,k} = delta_{n,k}
struct Cesaro {};     // lambda_{n,k} = 1/(n+1)

// Toeplitz band: lambda_{n,n-d} = band[d] for d < band.size(), zero beyond.
struct ConstantBand {
    std::vector<Complex> band;
};

// Explicit rows; rows[n] has n+1 entries. Asking for a row past the end of
// the table is an InvalidTransform.
struct Table {
    std::vector<std::vector<Complex>> rows;
};

}  // namespace rows

using LambdaRule = std::variant<rows::Identity, rows::Cesaro, rows::ConstantBand, rows::Table>;

// A homeomorphism of the complex plane together with its inverse.
class Homeomorphism {
public:
    using Map = std::function<Complex(Complex)>;

    // w -> alpha*w + beta, alpha != 0.
    static Homeomorphism affine(Complex alpha, Complex beta);
    // r e^{i theta} -> r^rho e^{i theta}, rho > 0.
    static Homeomorphism radial_power(double rho);
    // Arbitrary pair; the inverse is spot-checked on a fixed probe set.
    static Homeomorphism custom(std::string name, Map forward, Map inverse);

    Complex operator()(Complex w) const { return forward_(w); }
    Complex inverse(Complex w) const { return inverse_(w); }

    const std::string& name() const noexcept { return name_; }
    // Catalog parameters (alpha, beta) or (rho, 0); empty for custom maps.
    const std::vector<Complex>& parameters() const noexcept { return params_; }

private:
    Homeomorphism(std::string name, std::vector<Complex> params, Map forward, Map inverse);

    std::string name_;
    std::vector<Complex> params_;
    Map forward_;
    Map inverse_;
};

// The family {b_n} of coefficient functionals.
class TransformSpec {
public:
    static TransformSpec identity();
    static TransformSpec cesaro();
    static TransformSpec linear(LambdaRule rule);
    static TransformSpec wrapped(LambdaRule rule, Homeomorphism psi);

    TransformKind kind() const noexcept { return kind_; }
    bool is_linear() const noexcept { return kind_ != TransformKind::wrapped_linear; }

    const LambdaRule& rule() const noexcept { return rule_; }
    const Homeomorphism* psi() const noexcept { return psi_ ? &*psi_ : nullptr; }

    // Materialized row (lambda_{n,0}, ..., lambda_{n,n}). Throws
    // InvalidTransform when lambda_{n,n} == 0.
    std::vector<Complex> row(std::size_t n) const;

    // lambda_{n,n}, validated nonzero.
    Complex diagonal(std::size_t n) const;

    // sum_{k<n} lambda_{n,k} a_k for a prefix of length >= n.
    Complex off_diagonal_sum(std::size_t n, CoefficientPrefix prefix) const;

    // max_{n<=N} sum_k |lambda_{n,k}|.
    double max_row_abs_sum(std::size_t N) const;

private:
    TransformSpec(TransformKind kind, LambdaRule rule, std::optional<Homeomorphism> psi);

    TransformKind kind_;
    LambdaRule rule_;
    std::optional<Homeomorphism> psi_;
};

// b_n(a_0, ..., a_n) where n = prefix.size() - 1.
Complex apply_b(const TransformSpec& transform, CoefficientPrefix prefix);

// (b_0, ..., b_N) of the first N+1 prefix entries.
std::vector<Complex> coeffs_T(const TransformSpec& transform, CoefficientPrefix prefix,
                              std::size_t N);

// T_N(a)(z) at every point, by Horner on coeffs_T.
std::vector<Complex> eval_TN(const TransformSpec& transform, CoefficientPrefix prefix,
                             std::size_t N, std::span<const Complex> points);

// The a_n with b_n(prefix..., a_n) == target, where n = prefix.size().
Complex solve_last(const TransformSpec& transform, CoefficientPrefix prefix, Complex target);

// Raw coefficients whose transform reproduces c entrywise.
std::vector<Complex> pullback(const TransformSpec& transform, std::span<const Complex> c);

// Horner evaluation of sum_n coefficients[n] z^n.
Complex horner(std::span<const Complex> coefficients, Complex z);

}  // namespace utsforge
