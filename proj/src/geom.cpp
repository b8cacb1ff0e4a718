#include "panofold/geom.hpp"

#include <stdexcept>
#include <string>

namespace panofold {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

}  // namespace

Mat3 Mat3::rot_x(double a) {
    const double c = std::cos(a), s = std::sin(a);
    return {{1, 0, 0, 0, c, -s, 0, s, c}};
}

Mat3 Mat3::rot_y(double a) {
    const double c = std::cos(a), s = std::sin(a);
    return {{c, 0, s, 0, 1, 0, -s, 0, c}};
}

Mat3 Mat3::rot_z(double a) {
    const double c = std::cos(a), s = std::sin(a);
    return {{c, -s, 0, s, c, 0, 0, 0, 1}};
}

Mat3 Mat3::transposed() const {
    Mat3 t;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) t(r, c) = (*this)(c, r);
    return t;
}

double Mat3::determinant() const {
    const auto& a = m;
    return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
           a[2] * (a[3] * a[7] - a[4] * a[6]);
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 out;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            double acc = 0.0;
            for (int k = 0; k < 3; ++k) acc += a(r, k) * b(k, c);
            out(r, c) = acc;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// LatLon
// ---------------------------------------------------------------------------

double wrap_lon(double lon) {
    double w = lon - kTwoPi * std::floor((lon + kPi) / kTwoPi);
    // floor() rounding can leave w == pi for inputs just below an odd multiple of pi
    if (w >= kPi) w -= kTwoPi;
    if (w < -kPi) w = -kPi;
    return w;
}

LatLon::LatLon(double lon, double lat) {
    if (!std::isfinite(lon) || !std::isfinite(lat))
        throw std::invalid_argument("LatLon: non-finite coordinate");
    if (lat < -kHalfPi || lat > kHalfPi)
        throw std::invalid_argument("LatLon: latitude " + std::to_string(lat) + " outside [-pi/2, pi/2]");
    lon_ = wrap_lon(lon);
    lat_ = lat;
}

Vec3 latlon_to_dir(const LatLon& p) {
    const double cl = std::cos(p.lat());
    return {cl * std::cos(p.lon()), cl * std::sin(p.lon()), std::sin(p.lat())};
}

LatLon dir_to_latlon(const Vec3& d) {
    const double n = norm(d);
    if (!(std::abs(n - 1.0) <= 1e-6))
        throw std::invalid_argument("dir_to_latlon: direction is not unit length (norm " +
                                    std::to_string(n) + ")");
    // atan2 form of asin(z): same value for unit input, but well conditioned near the poles
    const double lat = std::atan2(d.z, std::hypot(d.x, d.y));
    if (std::abs(lat) >= kHalfPi - 1e-12) return {0.0, lat > 0 ? kHalfPi : -kHalfPi};
    return {std::atan2(d.y, d.x), lat};
}

// ---------------------------------------------------------------------------
// Orientation
// ---------------------------------------------------------------------------

Mat3 orientation_matrix(const Orientation& o) {
    return Mat3::rot_z(o.yaw) * Mat3::rot_y(-o.pitch) * Mat3::rot_x(o.roll);
}

// ---------------------------------------------------------------------------
// Gnomonic camera
// ---------------------------------------------------------------------------

PerspectiveSpec::PerspectiveSpec(int out_w, int out_h, double fov_h)
    : out_w_(out_w), out_h_(out_h), fov_h_(fov_h) {
    if (out_w < 2 || out_h < 2)
        throw std::invalid_argument("PerspectiveSpec: output size must be at least 2x2");
    if (!(fov_h > 0.0 && fov_h < kPi))
        throw std::invalid_argument("PerspectiveSpec: horizontal fov must be in (0, pi)");
    focal_px_ = 0.5 * (out_w - 1) / std::tan(0.5 * fov_h);
}

double PerspectiveSpec::fov_v() const { return 2.0 * std::atan(cy() / focal_px_); }

Vec3 gnomonic_ray(const PerspectiveSpec& spec, const Mat3& rotation, double x, double y) {
    const Vec3 cam = normalized({spec.focal_px(), x - spec.cx(), spec.cy() - y});
    return rotation * cam;
}

Vec3 gnomonic_ray(const PerspectiveSpec& spec, const Orientation& o, double x, double y) {
    return gnomonic_ray(spec, orientation_matrix(o), x, y);
}

ImagePoint gnomonic_project(const PerspectiveSpec& spec, const Mat3& rotation, const Vec3& d) {
    const Vec3 c = rotation.transposed() * d;
    if (c.x <= 1e-9) return {0.0, 0.0, false};
    return {spec.cx() + spec.focal_px() * c.y / c.x, spec.cy() - spec.focal_px() * c.z / c.x, true};
}

ImagePoint gnomonic_project(const PerspectiveSpec& spec, const Orientation& o, const Vec3& d) {
    return gnomonic_project(spec, orientation_matrix(o), d);
}

// ---------------------------------------------------------------------------
// Little planet
// ---------------------------------------------------------------------------

std::optional<LatLon> little_planet_latlon(int out_size, double horizon_radius_px, double spin,
                                           double x, double y) {
    const double c = 0.5 * (out_size - 1);
    const double dx = x - c, dy = y - c;
    const double r = std::hypot(dx, dy);
    const double lat = 2.0 * std::atan(r / horizon_radius_px) - kHalfPi;
    if (lat > kHalfPi * (1.0 - kLittlePlanetZenithGuard)) return std::nullopt;
    if (r == 0.0) return LatLon{0.0, -kHalfPi};
    return LatLon{std::atan2(dy, dx) + spin, lat};
}

Vec2 little_planet_point(int out_size, double horizon_radius_px, double spin, const LatLon& p) {
    const double c = 0.5 * (out_size - 1);
    const double r = horizon_radius_px * std::tan(0.5 * (p.lat() + kHalfPi));
    const double a = p.lon() - spin;
    return {c + r * std::cos(a), c + r * std::sin(a)};
}

}  // namespace panofold
