#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "utsforge/transform.hpp"

namespace utsforge {

// p_0 + p_1 z + ... + p_d z^d, constant term first. The empty sequence is
// the zero polynomial.
struct ComplexPolynomial {
    std::vector<Complex> coefficients;

    ComplexPolynomial() = default;
    explicit ComplexPolynomial(std::vector<Complex> c) : coefficients(std::move(c)) {}

    // length - 1; -1 for the empty sequence.
    long degree() const noexcept { return static_cast<long>(coefficients.size()) - 1; }
    bool is_zero() const noexcept;

    Complex operator()(Complex z) const { return horner(coefficients, z); }
    std::vector<Complex> evaluate(std::span<const Complex> points) const;

    friend bool operator==(const ComplexPolynomial&, const ComplexPolynomial&) = default;
};

}  // namespace utsforge
