#include "panofold/raster.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "parallel.hpp"

namespace panofold {

namespace {

constexpr double kPi = std::numbers::pi;

using Accum = std::array<double, 4>;

std::uint8_t to_u8(double v) {
    return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
}

Rgba to_rgba(const Accum& a) { return {to_u8(a[0]), to_u8(a[1]), to_u8(a[2]), to_u8(a[3])}; }

// Lookup for a direction known to be unit length (skips the norm check of dir_to_latlon).
Accum sample_dir(const EquirectImage& img, const Vec3& d) {
    const double lat = std::atan2(d.z, std::sqrt(d.x * d.x + d.y * d.y));
    const double lon = std::atan2(d.y, d.x);
    return sample_bilinear_exact(img, lon, lat);
}

bool inside_convex(const std::vector<Vec2>& poly, Vec2 p) {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = poly[i], b = poly[(i + 1) % n];
        const double c = cross(b - a, p - a);
        if (c < -1e-12) return false;
        // on the edge: top-left rule, otherwise subsample grids that line up with an edge
        // count it fully and coverage is biased upward
        if (c <= 1e-12 && !(a.y > b.y || (a.y == b.y && b.x < a.x))) return false;
    }
    return true;
}

double polygon_area(const std::vector<Vec2>& poly) {
    double a = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) a += cross(poly[i], poly[(i + 1) % poly.size()]);
    return 0.5 * a;
}

void put(Image& img, int x, int y, Rgba c) {
    if (x >= 0 && y >= 0 && x < img.width() && y < img.height()) img.at(x, y) = c;
}

void draw_line(Image& img, Vec2 a, Vec2 b, Rgba c) {
    int x0 = static_cast<int>(std::lround(a.x)), y0 = static_cast<int>(std::lround(a.y));
    const int x1 = static_cast<int>(std::lround(b.x)), y1 = static_cast<int>(std::lround(b.y));
    const int dx = std::abs(x1 - x0), dy = -std::abs(y1 - y0);
    const int sx = x0 < x1 ? 1 : -1, sy = y0 < y1 ? 1 : -1;
    int err = dx + dy;
    for (;;) {
        put(img, x0, y0, c);
        if (x0 == x1 && y0 == y1) break;
        const int e2 = 2 * err;
        if (e2 >= dy) { err += dy; x0 += sx; }
        if (e2 <= dx) { err += dx; y0 += sy; }
    }
}

// Dotted stroke along a pixel-space polyline; the dash phase runs continuously over arc length.
void draw_dotted(Image& img, const std::vector<Vec2>& pts, const GraticuleStyle& style) {
    const double period = style.dot_on_px + style.dot_off_px;
    double travelled = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const Vec2 d = pts[i] - pts[i - 1];
        const double len = norm(d);
        const int steps = std::max(1, static_cast<int>(std::ceil(len)));
        for (int k = 0; k < steps; ++k) {
            const double t = static_cast<double>(k) / steps;
            if (std::fmod(travelled + t * len, period) < style.dot_on_px) {
                const Vec2 p = pts[i - 1] + t * d;
                put(img, static_cast<int>(std::lround(p.x)), static_cast<int>(std::lround(p.y)), style.line_color);
            }
        }
        travelled += len;
    }
}

void draw_marker(Image& img, Vec2 p, int arm, Rgba c) {
    const int cx = static_cast<int>(std::lround(p.x)), cy = static_cast<int>(std::lround(p.y));
    for (int k = -arm; k <= arm; ++k) {
        put(img, cx + k, cy, c);
        put(img, cx, cy + k, c);
    }
}

// Area-weighted resampling of one axis: out[i] averages in[] over [i*scale, (i+1)*scale).
std::vector<std::vector<std::pair<int, double>>> box_weights(int in_n, int out_n) {
    std::vector<std::vector<std::pair<int, double>>> w(static_cast<std::size_t>(out_n));
    const double scale = static_cast<double>(in_n) / out_n;
    for (int i = 0; i < out_n; ++i) {
        const double lo = i * scale, hi = (i + 1) * scale;
        double total = 0.0;
        for (int k = static_cast<int>(std::floor(lo)); k < static_cast<int>(std::ceil(hi)) && k < in_n; ++k) {
            const double overlap = std::min(hi, k + 1.0) - std::max(lo, static_cast<double>(k));
            if (overlap > 0.0) {
                w[static_cast<std::size_t>(i)].emplace_back(k, overlap);
                total += overlap;
            }
        }
        for (auto& [k, v] : w[static_cast<std::size_t>(i)]) v /= total;
    }
    return w;
}

}  // namespace

void SamplingConfig::validate() const {
    if (supersample < 1 || supersample > 8)
        throw std::invalid_argument("supersample must be in [1, 8]");
}

EquirectImage::EquirectImage(Image image) : image_(std::move(image)) {
    if (image_.width() < 2 || image_.height() < 1)
        throw std::invalid_argument("EquirectImage: needs width >= 2 and height >= 1");
    nonstandard_aspect_ = std::abs(image_.width() - 2 * image_.height()) > 2;
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

std::array<double, 4> sample_bilinear_exact(const EquirectImage& img, double lon, double lat) {
    const int w = img.width(), h = img.height();
    const double u = (lon + kPi) / (2.0 * kPi) * w - 0.5;
    const double v = (0.5 * kPi - lat) / kPi * h - 0.5;
    const double u0f = std::floor(u), v0f = std::floor(v);
    const double fu = u - u0f, fv = v - v0f;

    auto wrap_col = [w](long c) { return static_cast<int>(((c % w) + w) % w); };
    auto clamp_row = [h](long r) { return static_cast<int>(std::clamp(r, 0L, static_cast<long>(h - 1))); };
    const long u0 = static_cast<long>(u0f), v0 = static_cast<long>(v0f);
    const int c0 = wrap_col(u0), c1 = wrap_col(u0 + 1);
    const int r0 = clamp_row(v0), r1 = clamp_row(v0 + 1);

    const Rgba& p00 = img.at(c0, r0);
    const Rgba& p10 = img.at(c1, r0);
    const Rgba& p01 = img.at(c0, r1);
    const Rgba& p11 = img.at(c1, r1);
    const double w00 = (1 - fu) * (1 - fv), w10 = fu * (1 - fv), w01 = (1 - fu) * fv, w11 = fu * fv;
    return {w00 * p00.r + w10 * p10.r + w01 * p01.r + w11 * p11.r,
            w00 * p00.g + w10 * p10.g + w01 * p01.g + w11 * p11.g,
            w00 * p00.b + w10 * p10.b + w01 * p01.b + w11 * p11.b,
            w00 * p00.a + w10 * p10.a + w01 * p01.a + w11 * p11.a};
}

Rgba sample_bilinear(const EquirectImage& img, const LatLon& p) {
    return to_rgba(sample_bilinear_exact(img, p.lon(), p.lat()));
}

EquirectImage make_latlon_chart(int width, int height) {
    if (width < 2 || height < 1) throw std::invalid_argument("make_latlon_chart: needs width >= 2, height >= 1");
    Image img(width, height);
    for (int v = 0; v < height; ++v) {
        const double lat = 0.5 * kPi - kPi * (v + 0.5) / height;
        const auto g = to_u8(255.0 * (lat + 0.5 * kPi) / kPi);
        for (int u = 0; u < width; ++u) {
            const double lon = 2.0 * kPi * (u + 0.5) / width - kPi;
            img.at(u, v) = {to_u8(255.0 * (lon + kPi) / (2.0 * kPi)), g, 0, 255};
        }
    }
    return EquirectImage(std::move(img));
}

// ---------------------------------------------------------------------------
// Renderers
// ---------------------------------------------------------------------------

RasterImage render_perspective(const EquirectImage& img, const PerspectiveSpec& spec, const Orientation& o,
                               const SamplingConfig& cfg) {
    cfg.validate();
    const Mat3 rot = orientation_matrix(o);
    const int n = cfg.supersample;
    RasterImage out(spec.out_w(), spec.out_h());
    detail::parallel_rows(spec.out_h(), [&](int y) {
        for (int x = 0; x < spec.out_w(); ++x) {
            Accum acc{};
            for (int j = 0; j < n; ++j) {
                for (int i = 0; i < n; ++i) {
                    const double sx = x + (i + 0.5) / n - 0.5, sy = y + (j + 0.5) / n - 0.5;
                    const Accum s = sample_dir(img, gnomonic_ray(spec, rot, sx, sy));
                    for (int c = 0; c < 3; ++c) acc[c] += s[c];
                }
            }
            for (int c = 0; c < 3; ++c) acc[c] /= n * n;
            acc[3] = 255.0;
            out.at(x, y) = to_rgba(acc);
        }
    });
    return out;
}

RasterImage render_little_planet(const EquirectImage& img, int out_size, double horizon_radius_px, double spin,
                                 const SamplingConfig& cfg) {
    cfg.validate();
    if (out_size < 2) throw std::invalid_argument("render_little_planet: out_size must be >= 2");
    if (!(horizon_radius_px > 0.0)) throw std::invalid_argument("render_little_planet: horizon radius must be > 0");
    const int n = cfg.supersample;
    RasterImage out(out_size, out_size);
    detail::parallel_rows(out_size, [&](int y) {
        for (int x = 0; x < out_size; ++x) {
            // a pixel is transparent when its center is beyond the zenith guard
            const auto mid = little_planet_latlon(out_size, horizon_radius_px, spin, x, y);
            if (!mid) continue;
            Accum acc{};
            int count = 0;
            for (int j = 0; j < n; ++j) {
                for (int i = 0; i < n; ++i) {
                    const auto p = little_planet_latlon(out_size, horizon_radius_px, spin, x + (i + 0.5) / n - 0.5,
                                                        y + (j + 0.5) / n - 0.5);
                    if (!p) continue;
                    const Accum s = sample_bilinear_exact(img, p->lon(), p->lat());
                    for (int c = 0; c < 3; ++c) acc[c] += s[c];
                    ++count;
                }
            }
            if (count == 0) {
                acc = sample_bilinear_exact(img, mid->lon(), mid->lat());
                count = 1;
            }
            for (int c = 0; c < 3; ++c) acc[c] /= count;
            acc[3] = 255.0;
            out.at(x, y) = to_rgba(acc);
        }
    });
    return out;
}

FaceRaster render_face(const EquirectImage& img, const FacePlaneSpec& face, const Orientation& o,
                       const SamplingConfig& cfg) {
    cfg.validate();
    if (face.polygon.size() < 3 || std::abs(polygon_area(face.polygon)) < 1e-12)
        throw std::invalid_argument("render_face: degenerate face polygon");
    if (!(face.px_per_unit > 0.0)) throw std::invalid_argument("render_face: px_per_unit must be > 0");

    double s_min = face.polygon[0].x, s_max = s_min, t_min = face.polygon[0].y, t_max = t_min;
    for (const Vec2& p : face.polygon) {
        s_min = std::min(s_min, p.x);
        s_max = std::max(s_max, p.x);
        t_min = std::min(t_min, p.y);
        t_max = std::max(t_max, p.y);
    }
    const double ppu = face.px_per_unit;
    // the epsilon keeps exact multiples (e.g. 2 units at 32 px/unit) from gaining an empty column
    const int w = std::max(1, static_cast<int>(std::ceil((s_max - s_min) * ppu - 1e-9)));
    const int h = std::max(1, static_cast<int>(std::ceil((t_max - t_min) * ppu - 1e-9)));

    const Mat3 rot = orientation_matrix(o);
    const int n = cfg.supersample;
    FaceRaster out{RasterImage(w, h), s_min, t_max, ppu};
    detail::parallel_rows(h, [&](int y) {
        for (int x = 0; x < w; ++x) {
            int covered = 0;
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i)
                    if (inside_convex(face.polygon, {s_min + (x + (i + 0.5) / n) / ppu, t_max - (y + (j + 0.5) / n) / ppu}))
                        ++covered;
            if (covered == 0) continue;
            // color comes from every subsample so partially covered pixels keep the face color
            Accum acc{};
            for (int j = 0; j < n; ++j) {
                for (int i = 0; i < n; ++i) {
                    const double s = s_min + (x + (i + 0.5) / n) / ppu;
                    const double t = t_max - (y + (j + 0.5) / n) / ppu;
                    const Vec3 p3 = face.center + s * face.e1 + t * face.e2;
                    const Accum c = sample_dir(img, rot * normalized(p3));
                    for (int k = 0; k < 3; ++k) acc[k] += c[k];
                }
            }
            for (int k = 0; k < 3; ++k) acc[k] /= n * n;
            acc[3] = 255.0 * covered / (n * n);
            out.image.at(x, y) = to_rgba(acc);
        }
    });
    return out;
}

// ---------------------------------------------------------------------------
// Mini-map
// ---------------------------------------------------------------------------

std::vector<Polyline> compute_footprint(const PerspectiveSpec& spec, const Orientation& o, int samples_per_edge) {
    if (samples_per_edge < 2) throw std::invalid_argument("compute_footprint: samples_per_edge must be >= 2");
    const Mat3 rot = orientation_matrix(o);
    const double xr = spec.out_w() - 1, yb = spec.out_h() - 1;
    const std::array<Vec2, 5> corners{Vec2{0, 0}, Vec2{xr, 0}, Vec2{xr, yb}, Vec2{0, yb}, Vec2{0, 0}};

    std::vector<LatLon> ring;
    ring.reserve(static_cast<std::size_t>(4 * samples_per_edge + 1));
    for (int e = 0; e < 4; ++e) {
        for (int k = 0; k < samples_per_edge; ++k) {
            const Vec2 p = corners[e] + (static_cast<double>(k) / samples_per_edge) * (corners[e + 1] - corners[e]);
            ring.push_back(dir_to_latlon(gnomonic_ray(spec, rot, p.x, p.y)));
        }
    }
    ring.push_back(ring.front());

    std::vector<Polyline> out(1);
    out.back().push_back(ring.front());
    for (std::size_t i = 1; i < ring.size(); ++i) {
        if (std::abs(ring[i].lon() - ring[i - 1].lon()) > kPi) out.emplace_back();
        out.back().push_back(ring[i]);
    }
    return out;
}

GraticuleLines graticule_lines(double spacing_deg) {
    if (!(spacing_deg > 0.0 && spacing_deg <= 180.0))
        throw std::invalid_argument("graticule spacing must be in (0, 180] degrees");
    GraticuleLines g;
    for (int k = 1; -180.0 + k * spacing_deg < 180.0 - 1e-9; ++k) g.lon_deg.push_back(-180.0 + k * spacing_deg);
    for (int k = 1; -90.0 + k * spacing_deg < 90.0 - 1e-9; ++k) g.lat_deg.push_back(-90.0 + k * spacing_deg);
    return g;
}

RasterImage box_downscale(const Image& src, int out_w, int out_h) {
    if (out_w <= 0 || out_h <= 0) throw std::invalid_argument("box_downscale: empty output");
    const auto wx = box_weights(src.width(), out_w);
    const auto wy = box_weights(src.height(), out_h);

    // horizontal pass into a float buffer, then vertical
    std::vector<Accum> tmp(static_cast<std::size_t>(out_w) * static_cast<std::size_t>(src.height()));
    for (int y = 0; y < src.height(); ++y) {
        for (int x = 0; x < out_w; ++x) {
            Accum acc{};
            for (const auto& [k, w] : wx[static_cast<std::size_t>(x)]) {
                const Rgba& p = src.at(k, y);
                acc[0] += w * p.r;
                acc[1] += w * p.g;
                acc[2] += w * p.b;
                acc[3] += w * p.a;
            }
            tmp[static_cast<std::size_t>(y) * static_cast<std::size_t>(out_w) + static_cast<std::size_t>(x)] = acc;
        }
    }
    RasterImage out(out_w, out_h);
    for (int y = 0; y < out_h; ++y) {
        for (int x = 0; x < out_w; ++x) {
            Accum acc{};
            for (const auto& [k, w] : wy[static_cast<std::size_t>(y)]) {
                const Accum& t = tmp[static_cast<std::size_t>(k) * static_cast<std::size_t>(out_w) +
                                     static_cast<std::size_t>(x)];
                for (int c = 0; c < 4; ++c) acc[c] += w * t[c];
            }
            out.at(x, y) = to_rgba(acc);
        }
    }
    return out;
}

Vec2 minimap_point(const LatLon& p, int width, int height) {
    return {(p.lon() + kPi) / (2.0 * kPi) * width - 0.5, (0.5 * kPi - p.lat()) / kPi * height - 0.5};
}

namespace {

RasterImage equirect_minimap(const EquirectImage& img, const PerspectiveSpec& spec, const Orientation& o,
                             int map_w, const GraticuleStyle& style) {
    const int map_h = map_w / 2;
    RasterImage map = box_downscale(img.image(), map_w, map_h);
    for (auto& p : map.pixels()) p.a = 255;

    const GraticuleLines lines = graticule_lines(style.spacing_deg);
    const int period = style.dot_on_px + style.dot_off_px;
    for (double lon : lines.lon_deg) {
        const int x = static_cast<int>(std::lround(minimap_point({deg_to_rad(lon), 0.0}, map_w, map_h).x));
        for (int y = 0; y < map_h; ++y)
            if (y % period < style.dot_on_px) put(map, x, y, style.line_color);
    }
    for (double lat : lines.lat_deg) {
        const int y = static_cast<int>(std::lround(minimap_point({0.0, deg_to_rad(lat)}, map_w, map_h).y));
        for (int x = 0; x < map_w; ++x)
            if (x % period < style.dot_on_px) put(map, x, y, style.line_color);
    }

    for (const Polyline& line : compute_footprint(spec, o)) {
        for (std::size_t i = 1; i < line.size(); ++i)
            draw_line(map, minimap_point(line[i - 1], map_w, map_h), minimap_point(line[i], map_w, map_h),
                      style.footprint_color);
    }
    const LatLon center = dir_to_latlon(orientation_matrix(o) * Vec3{1, 0, 0});
    draw_marker(map, minimap_point(center, map_w, map_h), std::max(3, map_w / 64), style.marker_color);
    return map;
}

RasterImage planet_minimap(const EquirectImage& img, const PerspectiveSpec& spec, const Orientation& o, int size,
                           const GraticuleStyle& style) {
    const double radius = 0.25 * size;
    RasterImage map = render_little_planet(img, size, radius, 0.0, SamplingConfig{2});
    const auto project = [&](double lon, double lat) {
        return little_planet_point(size, radius, 0.0, LatLon{lon, lat});
    };

    const GraticuleLines lines = graticule_lines(style.spacing_deg);
    const int steps = std::max(64, size);
    for (double lat : lines.lat_deg) {
        std::vector<Vec2> circle;
        for (int k = 0; k <= steps; ++k) circle.push_back(project(-kPi + 2.0 * kPi * k / steps, deg_to_rad(lat)));
        draw_dotted(map, circle, style);
    }
    const double top = lines.lat_deg.empty() ? 0.0 : deg_to_rad(lines.lat_deg.back());
    for (double lon : lines.lon_deg) {
        std::vector<Vec2> spoke;
        for (int k = 0; k <= steps; ++k) spoke.push_back(project(deg_to_rad(lon), -0.5 * kPi + (top + 0.5 * kPi) * k / steps));
        draw_dotted(map, spoke, style);
    }

    // stereographic radius diverges toward the zenith; segments far off the map are dropped
    const auto on_canvas = [size](Vec2 p) { return std::abs(p.x) < 4.0 * size && std::abs(p.y) < 4.0 * size; };
    for (const Polyline& line : compute_footprint(spec, o)) {
        for (std::size_t i = 1; i < line.size(); ++i) {
            const Vec2 a = project(line[i - 1].lon(), line[i - 1].lat());
            const Vec2 b = project(line[i].lon(), line[i].lat());
            if (on_canvas(a) && on_canvas(b)) draw_line(map, a, b, style.footprint_color);
        }
    }
    const LatLon center = dir_to_latlon(orientation_matrix(o) * Vec3{1, 0, 0});
    draw_marker(map, project(center.lon(), center.lat()), std::max(3, size / 64), style.marker_color);
    return map;
}

}  // namespace

RasterImage render_minimap(const EquirectImage& img, const PerspectiveSpec& spec, const Orientation& o,
                           int map_width_px, const GraticuleStyle& style) {
    if (map_width_px < 64) throw std::invalid_argument("render_minimap: map width must be >= 64 px");
    if (style.dot_on_px < 1 || style.dot_off_px < 0) throw std::invalid_argument("render_minimap: bad dot pattern");
    if (style.projection == MinimapProjection::little_planet) return planet_minimap(img, spec, o, map_width_px, style);
    return equirect_minimap(img, spec, o, map_width_px, style);
}

}  // namespace panofold
