#include "panofold/params.hpp"

#include <cmath>
#include <sstream>

#include "panofold/image_io.hpp"
#include "panofold/svg.hpp"

namespace panofold {

namespace {

constexpr double kMmPerInch = 25.4;

std::string describe(const ParamRange& r) {
    std::ostringstream os;
    os << r.field << " must be in " << (r.lo_open ? '(' : '[') << r.lo << ", " << r.hi << (r.hi_open ? ')' : ']');
    return os.str();
}

void check(const char* field, double v) {
    for (const ParamRange& r : param_ranges()) {
        if (std::string_view(r.field) != field) continue;
        const bool ok = std::isfinite(v) && (r.lo_open ? v > r.lo : v >= r.lo) && (r.hi_open ? v < r.hi : v <= r.hi);
        if (!ok) throw ParamError(field, describe(r));
        return;
    }
}

void check_size(const char* field, int v) {
    if (v != 0 && (v < 2 || v > 8192)) throw ParamError(field, std::string(field) + " must be 0 (auto) or in [2, 8192]");
}

template <class T>
void read(const nlohmann::json& j, const char* key, T& out) {
    const auto it = j.find(key);
    if (it == j.end()) return;
    try {
        if constexpr (std::is_same_v<T, int>) {
            if (!it->is_number_integer()) throw ParamError(key, std::string(key) + " must be an integer");
        } else if constexpr (std::is_same_v<T, double>) {
            if (!it->is_number()) throw ParamError(key, std::string(key) + " must be a number");
        } else {
            if (!it->is_string()) throw ParamError(key, std::string(key) + " must be a string");
        }
        out = it->get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ParamError(key, std::string(key) + " has the wrong type");
    }
}

}  // namespace

const std::vector<ParamRange>& param_ranges() {
    static const std::vector<ParamRange> ranges{
        {"yaw", -360.0, 360.0, false, false},
        {"pitch", -90.0, 90.0, false, false},
        {"roll", -360.0, 360.0, false, false},
        {"fov", 1.0, 179.0, true, true},
        {"dpi", 30.0, 1200.0, false, false},
        {"supersample", 1.0, 8.0, false, false},
        {"minimap_fraction", 0.1, 0.5, true, true},
        {"graticule_spacing", 5.0, 90.0, false, false},
        {"size", 2.0, 8192.0, false, false},
        {"horizon_radius", 0.0, 1e6, false, false},
        {"spin", -360.0, 360.0, false, false},
    };
    return ranges;
}

Shape parse_shape(const std::string& s) {
    if (s == "cube") return Shape::cube;
    if (s == "cuboctahedron") return Shape::cuboctahedron;
    throw ParamError("shape", "unsupported shape '" + s + "' (expected cube or cuboctahedron)");
}

void validate(const ArtifactParams& p) {
    check("yaw", p.yaw);
    check("pitch", p.pitch);
    check("roll", p.roll);
    check("fov", p.fov);
    check("dpi", p.dpi);
    check("supersample", p.supersample);
    check("minimap_fraction", p.minimap_fraction);
    check("graticule_spacing", p.graticule_spacing);
    check("size", p.size);
    check("horizon_radius", p.horizon_radius);
    check("spin", p.spin);
    check_size("out_w", p.out_w);
    check_size("out_h", p.out_h);
    if (p.page != "a4" && p.page != "letter") throw ParamError("page", "page must be a4 or letter");
    if (p.page_orientation != "portrait" && p.page_orientation != "landscape")
        throw ParamError("page_orientation", "page_orientation must be portrait or landscape");
    if (p.minimap_projection != "equirectangular" && p.minimap_projection != "little-planet")
        throw ParamError("minimap_projection", "minimap_projection must be equirectangular or little-planet");
    if (p.caption.size() > 200) throw ParamError("caption", "caption is limited to 200 bytes");
}

ArtifactParams params_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParamError("params", "params must be a JSON object");
    static const std::vector<std::string> known{
        "yaw",  "pitch",   "roll",  "fov",   "shape",   "page",           "page_orientation", "dpi",  "supersample",
        "minimap_fraction", "graticule_spacing", "minimap_projection", "out_w", "out_h", "caption", "size",
        "horizon_radius",   "spin"};
    for (const auto& [key, value] : j.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ParamError(key, "unknown parameter '" + key + "'");
    }
    ArtifactParams p;
    read(j, "yaw", p.yaw);
    read(j, "pitch", p.pitch);
    read(j, "roll", p.roll);
    read(j, "fov", p.fov);
    std::string shape = to_string(p.shape);
    read(j, "shape", shape);
    p.shape = parse_shape(shape);
    read(j, "page", p.page);
    read(j, "page_orientation", p.page_orientation);
    read(j, "dpi", p.dpi);
    read(j, "supersample", p.supersample);
    read(j, "minimap_fraction", p.minimap_fraction);
    read(j, "graticule_spacing", p.graticule_spacing);
    read(j, "minimap_projection", p.minimap_projection);
    read(j, "out_w", p.out_w);
    read(j, "out_h", p.out_h);
    read(j, "caption", p.caption);
    read(j, "size", p.size);
    read(j, "horizon_radius", p.horizon_radius);
    read(j, "spin", p.spin);
    validate(p);
    return p;
}

nlohmann::json params_to_json(const ArtifactParams& p) {
    return {{"yaw", p.yaw},
            {"pitch", p.pitch},
            {"roll", p.roll},
            {"fov", p.fov},
            {"shape", to_string(p.shape)},
            {"page", p.page},
            {"page_orientation", p.page_orientation},
            {"dpi", p.dpi},
            {"supersample", p.supersample},
            {"minimap_fraction", p.minimap_fraction},
            {"graticule_spacing", p.graticule_spacing},
            {"minimap_projection", p.minimap_projection},
            {"out_w", p.out_w},
            {"out_h", p.out_h},
            {"caption", p.caption},
            {"size", p.size},
            {"horizon_radius", p.horizon_radius},
            {"spin", p.spin}};
}

Orientation orientation(const ArtifactParams& p) {
    return {deg_to_rad(p.yaw), deg_to_rad(p.pitch), deg_to_rad(p.roll)};
}

PageSpec page_spec(const ArtifactParams& p) {
    const bool landscape = p.page_orientation == "landscape";
    PageSpec page = p.page == "letter" ? PageSpec::letter(landscape) : PageSpec::a4(landscape);
    page.dpi = p.dpi;
    return page;
}

FlatArtifactSpec flat_spec(const ArtifactParams& p) {
    const PageSpec page = page_spec(p);
    // default perspective: 4:3 at the page's print resolution
    int w = p.out_w, h = p.out_h;
    if (w == 0) w = std::max(2, static_cast<int>(std::lround(page.printable_width() / kMmPerInch * page.dpi)));
    if (h == 0) h = std::max(2, static_cast<int>(std::lround(w * 3.0 / 4.0)));
    FlatArtifactSpec spec;
    spec.perspective = PerspectiveSpec(w, h, deg_to_rad(p.fov));
    spec.orientation = orientation(p);
    spec.minimap_fraction = p.minimap_fraction;
    spec.graticule.spacing_deg = p.graticule_spacing;
    spec.graticule.projection =
        p.minimap_projection == "little-planet" ? MinimapProjection::little_planet : MinimapProjection::equirectangular;
    spec.caption = p.caption;
    spec.sampling.supersample = p.supersample;
    return spec;
}

NetArtifactSpec net_spec(const ArtifactParams& p) {
    NetArtifactSpec spec;
    spec.shape = p.shape;
    spec.orientation = orientation(p);
    spec.sampling.supersample = p.supersample;
    return spec;
}

std::string generate_flat_svg(const EquirectImage& img, const ArtifactParams& p) {
    validate(p);
    return emit_svg(compose_flat(img, flat_spec(p), page_spec(p)));
}

std::string generate_net_svg(const EquirectImage& img, const ArtifactParams& p) {
    validate(p);
    return emit_svg(compose_net(img, net_spec(p), page_spec(p)));
}

std::vector<std::uint8_t> generate_preview_png(const EquirectImage& img, const ArtifactParams& p) {
    validate(p);
    const int w = p.out_w == 0 ? kPreviewDefaultWidth : p.out_w;
    const int h = p.out_h == 0 ? kPreviewDefaultHeight : p.out_h;
    return encode_png(render_perspective(img, PerspectiveSpec(w, h, deg_to_rad(p.fov)), orientation(p),
                                         SamplingConfig{p.supersample}));
}

std::vector<std::uint8_t> generate_planet_png(const EquirectImage& img, const ArtifactParams& p) {
    validate(p);
    const double radius = p.horizon_radius > 0.0 ? p.horizon_radius : 0.25 * p.size;
    return encode_png(render_little_planet(img, p.size, radius, deg_to_rad(p.spin), SamplingConfig{p.supersample}));
}

}  // namespace panofold
