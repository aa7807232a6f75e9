#include "utsforge/polynomial.hpp"

#include <algorithm>

namespace utsforge {

bool ComplexPolynomial::is_zero() const noexcept {
    return std::all_of(coefficients.begin(), coefficients.end(),
                       [](Complex c) { return c == Complex{}; });
}

std::vector<Complex> ComplexPolynomial::evaluate(std::span<const Complex> points) const {
    std::vector<Complex> out;
    out.reserve(points.size());
    for (Complex z : points) out.push_back(horner(coefficients, z));
    return out;
}

}  // namespace utsforge
