#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "utsforge/transform.hpp"

namespace utsforge {

namespace shapes {

struct Segment {
    Complex z1;
    Complex z2;
};

struct Disk {
    Complex center;
    double radius = 0.0;
};

// {r_in <= |z| <= r_out} minus the open wedge of half-width gap_half_width
// centred on the direction gap_angle + pi.
struct SlitAnnulus {
    double r_in = 0.0;
    double r_out = 0.0;
    double gap_angle = 0.0;
    double gap_half_width = 0.0;
};

// Filled simple polygon; the closing edge back to vertices.front() is
// implicit.
struct Polygon {
    std::vector<Complex> vertices;
};

}  // namespace shapes

using CompactSetSpec = std::variant<shapes::Segment, shapes::Disk, shapes::SlitAnnulus, shapes::Polygon>;

std::string describe(const CompactSetSpec& spec);

// Throws InvalidSet when 0 could lie in K or a parameter is out of range.
void validate(const CompactSetSpec& spec);

// Membership predicate with a 1e-12 relative slack for points produced by
// the layout (boundary nodes land within rounding of the boundary).
bool contains(const CompactSetSpec& spec, Complex z);

struct PointCloud {
    std::vector<Complex> samples;     // fitting nodes
    std::vector<Complex> validation;  // error-measurement nodes
    double min_modulus = 0.0;
    double max_modulus = 0.0;
};

// Validation nodes use the sample layout at this multiple of the density.
inline constexpr double kValidationDensityFactor = 4.0;

// Interval count for a 1-D piece of the given length: the smallest power of
// two >= ceil(density * length). Doubling density doubles the count, so
// grids at density d are subsets of grids at density 2d.
std::size_t interval_count(double length, double density);

// The node set a single layout pass produces at this density.
std::vector<Complex> layout(const CompactSetSpec& spec, double density);

PointCloud build_cloud(const CompactSetSpec& spec, double density);

// Surrogate K_m for the exhaustion sequence: m-1 is Cantor-unpaired into
// (r-1, g), and the result is slitAnnulus(1/(r+1), r+1, 2 pi g/(g+1) - pi, 1/(g+2)).
CompactSetSpec exhaustion_member(std::uint64_t m);

// max_i |values[i] - reference[i]|; 0 on empty input.
double sup_gap(std::span<const Complex> values, std::span<const Complex> reference);

}  // namespace utsforge
