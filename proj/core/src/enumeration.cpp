#include "utsforge/enumeration.hpp"

#include <bit>
#include <cmath>

#include "utsforge/errors.hpp"

namespace utsforge {

namespace {

__extension__ typedef unsigned __int128 u128;

u128 triangle(std::uint64_t w) { return static_cast<u128>(w) * (static_cast<u128>(w) + 1) / 2; }

}  // namespace

std::uint64_t cantor_pair(std::uint64_t x, std::uint64_t y) {
    const u128 w = static_cast<u128>(x) + y;
    const u128 z = w * (w + 1) / 2 + y;
    if (z > UINT64_MAX) throw PreconditionError("cantor_pair: result does not fit in 64 bits");
    return static_cast<std::uint64_t>(z);
}

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z) {
    auto w = static_cast<std::uint64_t>(
        (std::sqrt(8.0L * static_cast<long double>(z) + 1.0L) - 1.0L) / 2.0L);
    while (triangle(w) > z) --w;
    while (triangle(w + 1) <= z) ++w;
    const auto y = static_cast<std::uint64_t>(z - triangle(w));
    return {w - y, y};
}

Rational calkin_wilf(std::uint64_t k) {
    if (k == 0) throw PreconditionError("calkin_wilf: index must be >= 1");
    std::int64_t p = 1;
    std::int64_t q = 1;
    const int top = std::bit_width(k) - 1;
    for (int bit = top - 1; bit >= 0; --bit) {
        if ((k >> bit) & 1u)
            p += q;  // right child (p+q)/q
        else
            q += p;  // left child p/(p+q)
    }
    return {p, q};
}

Rational rational_at(std::uint64_t index) {
    if (index == 0) return {0, 1};
    const std::uint64_t k = (index + 1) / 2;
    Rational r = calkin_wilf(k);
    if (index % 2 == 0) r.p = -r.p;
    return r;
}

GaussianRational gaussian_rational_at(std::uint64_t index) {
    const auto [x, y] = cantor_unpair(index);
    return {rational_at(x), rational_at(y)};
}

std::vector<GaussianRational> enumerate_polynomial_exact(std::uint64_t j) {
    if (j == 0) return {};
    auto [extra, rest] = cantor_unpair(j - 1);
    const std::uint64_t length = extra + 1;
    std::vector<GaussianRational> coeffs;
    coeffs.reserve(length);
    for (std::uint64_t i = 0; i + 1 < length; ++i) {
        const auto [head, tail] = cantor_unpair(rest);
        coeffs.push_back(gaussian_rational_at(head));
        rest = tail;
    }
    // Shifting by one skips 0 + 0i, so the leading coefficient is nonzero.
    coeffs.push_back(gaussian_rational_at(rest + 1));
    return coeffs;
}

ComplexPolynomial enumerate_polynomials(std::uint64_t j) {
    ComplexPolynomial p;
    for (const auto& c : enumerate_polynomial_exact(j)) p.coefficients.push_back(c.value());
    return p;
}

}  // namespace utsforge
