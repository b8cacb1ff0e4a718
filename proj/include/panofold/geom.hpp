#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>

namespace panofold {

// World frame: +X = (lon 0, lat 0), +Y = (lon +90°, lat 0), +Z = north pole.
// Camera frame components are (forward, right, up).

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend bool operator==(Vec2, Vec2) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
    friend Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
    friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalized(const Vec3& a) { return (1.0 / norm(a)) * a; }

// Row-major 3x3 matrix.
struct Mat3 {
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

    double operator()(int r, int c) const { return m[static_cast<std::size_t>(r * 3 + c)]; }
    double& operator()(int r, int c) { return m[static_cast<std::size_t>(r * 3 + c)]; }

    static Mat3 identity() { return {}; }
    static Mat3 rot_x(double a);
    static Mat3 rot_y(double a);
    static Mat3 rot_z(double a);

    [[nodiscard]] Mat3 transposed() const;
    [[nodiscard]] double determinant() const;

    friend Mat3 operator*(const Mat3& a, const Mat3& b);
    friend Vec3 operator*(const Mat3& a, const Vec3& v) {
        return {a.m[0] * v.x + a.m[1] * v.y + a.m[2] * v.z,
                a.m[3] * v.x + a.m[4] * v.y + a.m[5] * v.z,
                a.m[6] * v.x + a.m[7] * v.y + a.m[8] * v.z};
    }
};

// ---------------------------------------------------------------------------
// LatLon
// ---------------------------------------------------------------------------

// Longitude is kept in [-pi, pi); latitude must lie in [-pi/2, pi/2].
class LatLon {
public:
    LatLon() = default;
    // Throws std::invalid_argument when lat is outside [-pi/2, pi/2] or either value is not finite.
    LatLon(double lon, double lat);

    [[nodiscard]] double lon() const { return lon_; }
    [[nodiscard]] double lat() const { return lat_; }

    friend bool operator==(const LatLon&, const LatLon&) = default;

private:
    double lon_ = 0.0;
    double lat_ = 0.0;
};

// Wraps any finite angle into [-pi, pi).
double wrap_lon(double lon);

Vec3 latlon_to_dir(const LatLon& p);

// Throws std::invalid_argument when |d| deviates from 1 by more than 1e-6.
// Poles (|lat| within 1e-12 of pi/2) report lon = 0.
LatLon dir_to_latlon(const Vec3& d);

// ---------------------------------------------------------------------------
// Orientation
// ---------------------------------------------------------------------------

struct Orientation {
    double yaw = 0.0;    // about world +Z, positive toward +lon
    double pitch = 0.0;  // positive looks up
    double roll = 0.0;   // about the forward axis
};

// world_dir = M * cam_dir, M = Rz(yaw) * Ry(-pitch) * Rx(roll).
Mat3 orientation_matrix(const Orientation& o);

// ---------------------------------------------------------------------------
// Gnomonic (rectilinear) camera
// ---------------------------------------------------------------------------

class PerspectiveSpec {
public:
    // Throws std::invalid_argument unless out_w, out_h >= 2 and fov_h in (0, pi).
    PerspectiveSpec(int out_w, int out_h, double fov_h);

    [[nodiscard]] int out_w() const { return out_w_; }
    [[nodiscard]] int out_h() const { return out_h_; }
    [[nodiscard]] double fov_h() const { return fov_h_; }
    [[nodiscard]] double fov_v() const;
    [[nodiscard]] double cx() const { return 0.5 * (out_w_ - 1); }
    [[nodiscard]] double cy() const { return 0.5 * (out_h_ - 1); }
    [[nodiscard]] double focal_px() const { return focal_px_; }

private:
    int out_w_;
    int out_h_;
    double fov_h_;
    double focal_px_;
};

Vec3 gnomonic_ray(const PerspectiveSpec& spec, const Mat3& rotation, double x, double y);
Vec3 gnomonic_ray(const PerspectiveSpec& spec, const Orientation& o, double x, double y);

struct ImagePoint {
    double x = 0.0;
    double y = 0.0;
    bool visible = false;
};

// Points behind the camera (forward component <= 1e-9) come back with visible = false.
// Visible points may still fall outside the image rectangle.
ImagePoint gnomonic_project(const PerspectiveSpec& spec, const Mat3& rotation, const Vec3& d);
ImagePoint gnomonic_project(const PerspectiveSpec& spec, const Orientation& o, const Vec3& d);

// ---------------------------------------------------------------------------
// Little planet (stereographic, nadir at the image center)
// ---------------------------------------------------------------------------

inline constexpr double kLittlePlanetZenithGuard = 1e-6;

// Returns nullopt for pixels whose latitude would pass pi/2 * (1 - 1e-6).
std::optional<LatLon> little_planet_latlon(int out_size, double horizon_radius_px, double spin,
                                           double x, double y);

// Inverse of little_planet_latlon; returns the pixel position of a sphere point.
Vec2 little_planet_point(int out_size, double horizon_radius_px, double spin, const LatLon& p);

inline double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

}  // namespace panofold
