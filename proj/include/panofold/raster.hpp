#pragma once

#include <array>
#include <vector>

#include "panofold/geom.hpp"
#include "panofold/image.hpp"

namespace panofold {

struct SamplingConfig {
    int supersample = 2;  // n x n subsamples per output pixel, 1..8

    void validate() const;
};

// Face of a polyhedron as a plane patch: p3 = center + s*e1 + t*e2 for (s, t) inside polygon.
struct FacePlaneSpec {
    Vec3 center;
    Vec3 e1;
    Vec3 e2;
    std::vector<Vec2> polygon;  // convex, counterclockwise, in (e1, e2) coordinates
    double px_per_unit = 64.0;
};

// Rendered face plus the placement of its pixel grid in (s, t): pixel (i, j) covers
// s in [s_min + i/ppu, s_min + (i+1)/ppu], t in [t_max - (j+1)/ppu, t_max - j/ppu].
struct FaceRaster {
    RasterImage image;
    double s_min = 0.0;
    double t_max = 0.0;
    double px_per_unit = 0.0;
};

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

// Seam-correct bilinear lookup: columns wrap modulo width, rows clamp.
Rgba sample_bilinear(const EquirectImage& img, const LatLon& p);

// Same lookup without the final rounding, channels in [0, 255].
std::array<double, 4> sample_bilinear_exact(const EquirectImage& img, double lon, double lat);

// R encodes lon, G encodes lat at each pixel center; B = 0, A = 255.
EquirectImage make_latlon_chart(int width, int height);

// ---------------------------------------------------------------------------
// Renderers
// ---------------------------------------------------------------------------

RasterImage render_perspective(const EquirectImage& img, const PerspectiveSpec& spec, const Orientation& o,
                               const SamplingConfig& cfg = {});

// Pixels beyond the zenith guard are transparent.
RasterImage render_little_planet(const EquirectImage& img, int out_size, double horizon_radius_px, double spin,
                                 const SamplingConfig& cfg = {});

// Throws std::invalid_argument for a degenerate (zero-area) face.
FaceRaster render_face(const EquirectImage& img, const FacePlaneSpec& face, const Orientation& o,
                       const SamplingConfig& cfg = {});

// ---------------------------------------------------------------------------
// Mini-map
// ---------------------------------------------------------------------------

using Polyline = std::vector<LatLon>;

// Boundary of the perspective frame in (lon, lat), split at antimeridian crossings.
std::vector<Polyline> compute_footprint(const PerspectiveSpec& spec, const Orientation& o,
                                        int samples_per_edge = 64);

enum class MinimapProjection { equirectangular, little_planet };

struct GraticuleStyle {
    double spacing_deg = 30.0;
    int dot_on_px = 2;
    int dot_off_px = 2;
    Rgba line_color{255, 255, 255, 255};
    Rgba footprint_color{230, 30, 30, 255};
    Rgba marker_color{255, 220, 0, 255};
    MinimapProjection projection = MinimapProjection::equirectangular;
};

// Interior graticule values (degrees), excluding the map edges.
struct GraticuleLines {
    std::vector<double> lon_deg;
    std::vector<double> lat_deg;
};
GraticuleLines graticule_lines(double spacing_deg);

// Area-averaging resize.
RasterImage box_downscale(const Image& src, int out_w, int out_h);

// Continuous pixel coordinates of (lon, lat) on a width x height equirectangular thumbnail.
Vec2 minimap_point(const LatLon& p, int width, int height);

// map_width_px >= 64. Equirectangular maps are map_width_px x map_width_px/2,
// little-planet maps are square.
RasterImage render_minimap(const EquirectImage& img, const PerspectiveSpec& spec, const Orientation& o,
                           int map_width_px, const GraticuleStyle& style = {});

}  // namespace panofold
