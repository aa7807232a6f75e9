#pragma once

#include <cstdint>
#include <vector>

#include "utsforge/pairing.hpp"
#include "utsforge/polynomial.hpp"

namespace utsforge {

// p/q in lowest terms, q >= 1.
struct Rational {
    std::int64_t p = 0;
    std::int64_t q = 1;

    double value() const noexcept { return static_cast<double>(p) / static_cast<double>(q); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

// pa/qa + i pb/qb
struct GaussianRational {
    Rational re;
    Rational im;

    Complex value() const noexcept { return {re.value(), im.value()}; }
    bool is_zero() const noexcept { return re.p == 0 && im.p == 0; }
    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

// k-th positive rational in Calkin-Wilf breadth-first order, k >= 1.
Rational calkin_wilf(std::uint64_t k);

// Bijection N -> Q: 0 -> 0, 2k-1 -> +cw(k), 2k -> -cw(k).
Rational rational_at(std::uint64_t index);

// Bijection N -> Q[i]: unpair(index) = (x, y) -> rational_at(x) + i rational_at(y).
GaussianRational gaussian_rational_at(std::uint64_t index);

// Bijection N -> polynomials with Gaussian-rational coefficients; j = 0 is
// the zero polynomial and every other j decodes to a sequence whose last
// coefficient is nonzero. The layout is documented in docs/enumeration.md.
std::vector<GaussianRational> enumerate_polynomial_exact(std::uint64_t j);

ComplexPolynomial enumerate_polynomials(std::uint64_t j);

}  // namespace utsforge
