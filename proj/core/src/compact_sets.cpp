#include "utsforge/compact_sets.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "utsforge/errors.hpp"
#include "utsforge/pairing.hpp"

namespace utsforge {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSlack = 1e-12;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

double distance_to_segment(Complex z, Complex a, Complex b) {
    const Complex d = b - a;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(z - a);
    const double t = std::clamp((std::conj(d) * (z - a)).real() / len2, 0.0, 1.0);
    return std::abs(z - (a + t * d));
}

double distance_to_boundary(const std::vector<Complex>& v, Complex z) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i)
        best = std::min(best, distance_to_segment(z, v[i], v[(i + 1) % v.size()]));
    return best;
}

// Crossing-number test; boundary points may go either way.
bool inside_polygon(const std::vector<Complex>& v, Complex z) {
    bool in = false;
    for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
        const Complex a = v[i];
        const Complex b = v[j];
        if ((a.imag() > z.imag()) != (b.imag() > z.imag())) {
            const double x = (b.real() - a.real()) * (z.imag() - a.imag()) / (b.imag() - a.imag()) +
                             a.real();
            if (z.real() < x) in = !in;
        }
    }
    return in;
}

int orientation(Complex a, Complex b, Complex c) {
    const double v = cross(b - a, c - a);
    return (v > 0.0) - (v < 0.0);
}

bool on_segment(Complex a, Complex b, Complex p) {
    return std::min(a.real(), b.real()) <= p.real() && p.real() <= std::max(a.real(), b.real()) &&
           std::min(a.imag(), b.imag()) <= p.imag() && p.imag() <= std::max(a.imag(), b.imag());
}

bool segments_intersect(Complex p1, Complex p2, Complex q1, Complex q2) {
    const int o1 = orientation(p1, p2, q1);
    const int o2 = orientation(p1, p2, q2);
    const int o3 = orientation(q1, q2, p1);
    const int o4 = orientation(q1, q2, p2);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(p1, p2, q1)) return true;
    if (o2 == 0 && on_segment(p1, p2, q2)) return true;
    if (o3 == 0 && on_segment(q1, q2, p1)) return true;
    if (o4 == 0 && on_segment(q1, q2, p2)) return true;
    return false;
}

bool is_simple(const std::vector<Complex>& v) {
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Complex a = v[i];
        const Complex b = v[(i + 1) % n];
        if (a == b) return false;
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            const Complex c = v[j];
            const Complex d = v[(j + 1) % n];
            if (adjacent) {
                // Adjacent edges share one vertex; they must not fold back onto each other.
                const Complex shared = (j == i + 1) ? b : a;
                const Complex other_a = (j == i + 1) ? a : b;
                const Complex other_c = (j == i + 1) ? d : c;
                if (orientation(other_a, shared, other_c) == 0 &&
                    (std::conj(other_a - shared) * (other_c - shared)).real() > 0.0)
                    return false;
                continue;
            }
            if (segments_intersect(a, b, c, d)) return false;
        }
    }
    return true;
}

double polygon_area2(const std::vector<Complex>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) s += cross(v[i], v[(i + 1) % v.size()]);
    return s;
}

// Signed angular offset of z from the wedge centre, in [-pi, pi].
double wedge_offset(const shapes::SlitAnnulus& s, Complex z) {
    return std::remainder(std::arg(z) - (s.gap_angle + kPi), 2.0 * kPi);
}

void lattice_points(double x0, double x1, double y0, double y1, double density,
                    const auto& keep, std::vector<Complex>& out) {
    const auto a0 = static_cast<long long>(std::floor(x0 * density));
    const auto a1 = static_cast<long long>(std::ceil(x1 * density));
    const auto b0 = static_cast<long long>(std::floor(y0 * density));
    const auto b1 = static_cast<long long>(std::ceil(y1 * density));
    for (long long b = b0; b <= b1; ++b) {
        for (long long a = a0; a <= a1; ++a) {
            const Complex z{static_cast<double>(a) / density, static_cast<double>(b) / density};
            if (keep(z)) out.push_back(z);
        }
    }
}

double fraction(std::size_t i, std::size_t count) {
    return static_cast<double>(i) / static_cast<double>(count);
}

}  // namespace

std::string describe(const CompactSetSpec& spec) {
    std::ostringstream os;
    os.precision(17);
    auto put = [&](Complex z) -> std::ostream& {
        if (z.imag() == 0.0) return os << z.real();
        return os << z;
    };
    std::visit(overloaded{
                   [&](const shapes::Segment& s) { os << "segment(";
                       put(s.z1) << ", ";
                       put(s.z2) << ")"; },
                   [&](const shapes::Disk& d) { os << "disk(";
                       put(d.center) << ", " << d.radius << ")"; },
                   [&](const shapes::SlitAnnulus& a) {
                       os << "slitAnnulus(" << a.r_in << ", " << a.r_out << ", " << a.gap_angle
                          << ", " << a.gap_half_width << ")";
                   },
                   [&](const shapes::Polygon& p) {
                       os << "polygonRegion(" << p.vertices.size() << " vertices)";
                   },
               },
               spec);
    return os.str();
}

void validate(const CompactSetSpec& spec) {
    auto fail = [&](const std::string& why) { throw InvalidSet(describe(spec) + ": " + why); };
    std::visit(
        overloaded{
            [&](const shapes::Segment& s) {
                if (!finite(s.z1) || !finite(s.z2)) fail("non-finite endpoint");
                if (s.z1 == s.z2) fail("degenerate segment");
                const double scale = std::max(std::abs(s.z1), std::abs(s.z2));
                if (distance_to_segment(Complex{}, s.z1, s.z2) <= kSlack * scale)
                    fail("segment passes through 0");
            },
            [&](const shapes::Disk& d) {
                if (!finite(d.center) || !std::isfinite(d.radius)) fail("non-finite parameter");
                if (!(d.radius > 0.0)) fail("radius must be positive");
                if (!(std::abs(d.center) > d.radius)) fail("disk contains 0 (|center| <= radius)");
            },
            [&](const shapes::SlitAnnulus& a) {
                if (!std::isfinite(a.r_in) || !std::isfinite(a.r_out) ||
                    !std::isfinite(a.gap_angle) || !std::isfinite(a.gap_half_width))
                    fail("non-finite parameter");
                if (!(a.r_in > 0.0)) fail("inner radius must be positive");
                if (!(a.r_out > a.r_in)) fail("outer radius must exceed inner radius");
                if (!(a.gap_half_width > 0.0 && a.gap_half_width < kPi))
                    fail("gap half-width must lie in (0, pi)");
            },
            [&](const shapes::Polygon& p) {
                if (p.vertices.size() < 3) fail("polygon needs at least 3 vertices");
                for (Complex v : p.vertices)
                    if (!finite(v)) fail("non-finite vertex");
                if (polygon_area2(p.vertices) == 0.0) fail("polygon has zero area");
                if (!is_simple(p.vertices)) fail("polygon is not simple");
                double scale = 0.0;
                for (Complex v : p.vertices) scale = std::max(scale, std::abs(v));
                if (inside_polygon(p.vertices, Complex{}) ||
                    distance_to_boundary(p.vertices, Complex{}) <= kSlack * scale)
                    fail("0 is not strictly outside the polygon");
            },
        },
        spec);
}

bool contains(const CompactSetSpec& spec, Complex z) {
    return std::visit(
        overloaded{
            [&](const shapes::Segment& s) {
                const double scale = std::max({std::abs(s.z1), std::abs(s.z2), 1.0});
                return distance_to_segment(z, s.z1, s.z2) <= kSlack * scale;
            },
            [&](const shapes::Disk& d) {
                return std::abs(z - d.center) <= d.radius * (1.0 + kSlack);
            },
            [&](const shapes::SlitAnnulus& a) {
                const double r = std::abs(z);
                if (r < a.r_in * (1.0 - kSlack) || r > a.r_out * (1.0 + kSlack)) return false;
                return std::abs(wedge_offset(a, z)) >= a.gap_half_width - kSlack * (1.0 + kPi);
            },
            [&](const shapes::Polygon& p) {
                double scale = 1.0;
                for (Complex v : p.vertices) scale = std::max(scale, std::abs(v));
                return inside_polygon(p.vertices, z) ||
                       distance_to_boundary(p.vertices, z) <= kSlack * scale;
            },
        },
        spec);
}

std::size_t interval_count(double length, double density) {
    const double raw = std::ceil(length * density);
    if (!(raw >= 1.0)) return 1;
    if (raw > 1e9) throw PreconditionError("interval_count: grid too fine");
    return std::bit_ceil(static_cast<std::size_t>(raw));
}

std::vector<Complex> layout(const CompactSetSpec& spec, double density) {
    if (!(density > 0.0) || !std::isfinite(density))
        throw PreconditionError("density must be a positive finite number");
    std::vector<Complex> pts;
    std::visit(
        overloaded{
            [&](const shapes::Segment& s) {
                const Complex d = s.z2 - s.z1;
                const std::size_t n = interval_count(std::abs(d), density);
                for (std::size_t i = 0; i <= n; ++i) pts.push_back(s.z1 + d * fraction(i, n));
            },
            [&](const shapes::Disk& d) {
                const std::size_t n = interval_count(2.0 * kPi * d.radius, density);
                for (std::size_t i = 0; i < n; ++i)
                    pts.push_back(d.center + std::polar(d.radius, 2.0 * kPi * fraction(i, n)));
                lattice_points(d.center.real() - d.radius, d.center.real() + d.radius,
                               d.center.imag() - d.radius, d.center.imag() + d.radius, density,
                               [&](Complex z) { return std::abs(z - d.center) < d.radius; }, pts);
            },
            [&](const shapes::SlitAnnulus& a) {
                const double sweep = 2.0 * kPi - 2.0 * a.gap_half_width;
                const double start = a.gap_angle + kPi + a.gap_half_width;
                const std::size_t nr = interval_count(a.r_out - a.r_in, density);
                const std::size_t na = interval_count(a.r_in * sweep, density);
                for (std::size_t i = 0; i <= nr; ++i) {
                    const double r = a.r_in + (a.r_out - a.r_in) * fraction(i, nr);
                    for (std::size_t k = 0; k <= na; ++k)
                        pts.push_back(std::polar(r, start + sweep * fraction(k, na)));
                }
            },
            [&](const shapes::Polygon& p) {
                const auto& v = p.vertices;
                double x0 = v[0].real(), x1 = x0, y0 = v[0].imag(), y1 = y0;
                for (std::size_t e = 0; e < v.size(); ++e) {
                    const Complex a = v[e];
                    const Complex d = v[(e + 1) % v.size()] - a;
                    const std::size_t n = interval_count(std::abs(d), density);
                    for (std::size_t i = 0; i < n; ++i) pts.push_back(a + d * fraction(i, n));
                    x0 = std::min(x0, a.real());
                    x1 = std::max(x1, a.real());
                    y0 = std::min(y0, a.imag());
                    y1 = std::max(y1, a.imag());
                }
                lattice_points(x0, x1, y0, y1, density,
                               [&](Complex z) { return inside_polygon(v, z); }, pts);
            },
        },
        spec);
    return pts;
}

PointCloud build_cloud(const CompactSetSpec& spec, double density) {
    validate(spec);
    PointCloud cloud;
    cloud.samples = layout(spec, density);
    cloud.validation = layout(spec, density * kValidationDensityFactor);

    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (const auto* grid : {&cloud.samples, &cloud.validation}) {
        for (Complex z : *grid) {
            if (!contains(spec, z))
                throw InvalidSet(describe(spec) + ": layout produced a point outside the set");
            lo = std::min(lo, std::abs(z));
            hi = std::max(hi, std::abs(z));
        }
    }
    if (!(lo > 0.0)) throw InvalidSet(describe(spec) + ": sample at the origin");
    cloud.min_modulus = lo;
    cloud.max_modulus = hi;
    return cloud;
}

CompactSetSpec exhaustion_member(std::uint64_t m) {
    if (m < 1) throw PreconditionError("exhaustion_member: m must be >= 1");
    const auto [x, y] = cantor_unpair(m - 1);
    const double r = static_cast<double>(x) + 1.0;
    const double g = static_cast<double>(y);
    return shapes::SlitAnnulus{1.0 / (r + 1.0), r + 1.0, 2.0 * kPi * g / (g + 1.0) - kPi,
                               1.0 / (g + 2.0)};
}

double sup_gap(std::span<const Complex> values, std::span<const Complex> reference) {
    if (values.size() != reference.size())
        throw PreconditionError("sup_gap: length mismatch (" + std::to_string(values.size()) +
                                " vs " + std::to_string(reference.size()) + ")");
    double best = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double d = std::abs(values[i] - reference[i]);
        if (std::isnan(d)) return std::numeric_limits<double>::infinity();
        best = std::max(best, d);
    }
    return best;
}

}  // namespace utsforge
