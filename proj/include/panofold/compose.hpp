#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "panofold/geom.hpp"
#include "panofold/image.hpp"
#include "panofold/polyhedra.hpp"
#include "panofold/raster.hpp"

namespace panofold {

// ---------------------------------------------------------------------------
// Page and document model (millimetres, y pointing down)
// ---------------------------------------------------------------------------

struct PageSpec {
    double width_mm = 210.0;
    double height_mm = 297.0;
    double margin_mm = 10.0;
    int dpi = 300;

    static PageSpec a4(bool landscape = false);
    static PageSpec letter(bool landscape = false);

    [[nodiscard]] double printable_width() const { return width_mm - 2.0 * margin_mm; }
    [[nodiscard]] double printable_height() const { return height_mm - 2.0 * margin_mm; }

    // Throws std::invalid_argument when the printable area is empty or dpi is not positive.
    void validate() const;
};

enum class StrokeStyle { solid, dashed, dotted };

struct RasterElement {
    RasterImage image;
    double x_mm = 0.0;
    double y_mm = 0.0;
    double w_mm = 0.0;
    double h_mm = 0.0;
};

struct PathElement {
    std::vector<Vec2> points_mm;
    bool closed = false;
    StrokeStyle style = StrokeStyle::solid;
    double width_mm = 0.3;
    std::string color = "#000000";
    std::string role;  // emitted as the SVG class: cut, fold, tab, minimap-border, ...
};

enum class TextAnchor { start, middle, end };

struct TextElement {
    std::string text;
    Vec2 anchor_mm;  // baseline position
    TextAnchor anchor = TextAnchor::start;
    double size_mm = 4.0;
};

using Element = std::variant<RasterElement, PathElement, TextElement>;

// Elements are painted in order.
struct VectorDoc {
    PageSpec page;
    std::vector<Element> elements;
};

// ---------------------------------------------------------------------------
// Artifact specs
// ---------------------------------------------------------------------------

enum class Corner { upper_right, upper_left, lower_right, lower_left };

struct FlatArtifactSpec {
    PerspectiveSpec perspective{1200, 900, deg_to_rad(90.0)};
    Orientation orientation;
    double minimap_fraction = 0.28;  // of the main panel width, in (0.1, 0.5)
    Corner minimap_corner = Corner::upper_right;
    GraticuleStyle graticule;
    std::string caption;
    SamplingConfig sampling;

    void validate() const;
};

struct LineStyle {
    StrokeStyle style = StrokeStyle::solid;
    double width_mm = 0.3;
    std::string color = "#000000";
};

struct NetArtifactSpec {
    Shape shape = Shape::cube;
    Orientation orientation;
    TabStyle tabs;
    double tab_max_mm = 8.0;
    LineStyle cut{StrokeStyle::solid, 0.3, "#000000"};
    LineStyle fold{StrokeStyle::dashed, 0.3, "#808080"};
    SamplingConfig sampling;

    void validate() const;
};

// The flat layout does not fit the page (e.g. a tall perspective on a portrait page).
class LayoutError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kMinimapInset_mm = 2.0;
inline constexpr double kMinimapBorder_mm = 0.3;
inline constexpr double kNetClearance_mm = 1.0;

// Main perspective panel across the printable width with the mini-map inset in one corner.
VectorDoc compose_flat(const EquirectImage& img, const FlatArtifactSpec& spec, const PageSpec& page);

// Net layout computed by compose_net, exposed for inspection.
struct NetPlacement {
    NetLayout net;             // possibly turned a quarter for a better fit
    bool quarter_turn = false;
    double scale_mm = 0.0;     // millimetres per model unit
    double tab_height = 0.0;   // tab height fraction actually used
    double offset_x_mm = 0.0;  // page x of net u = 0
    double offset_y_mm = 0.0;  // page y of net v = 0 (v points up)
};

// Largest uniform scale, and quarter turn, that fits the net with tabs into the printable area.
NetPlacement place_net(const PolyhedronModel& model, const NetArtifactSpec& spec, const PageSpec& page);

VectorDoc compose_net(const EquirectImage& img, const NetArtifactSpec& spec, const PageSpec& page);

}  // namespace panofold
