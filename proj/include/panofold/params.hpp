#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "panofold/compose.hpp"

namespace panofold {

// User-facing parameters shared by the CLI flags and the service's "params" JSON part.
// Angles are degrees here and converted to radians exactly once (orientation(), flat_spec()).
struct ArtifactParams {
    double yaw = 0.0;
    double pitch = 0.0;
    double roll = 0.0;
    double fov = 90.0;
    Shape shape = Shape::cube;
    std::string page = "a4";                   // a4 | letter
    std::string page_orientation = "portrait"; // portrait | landscape
    int dpi = 300;
    int supersample = 2;
    double minimap_fraction = 0.28;
    double graticule_spacing = 30.0;
    std::string minimap_projection = "equirectangular";  // equirectangular | little-planet
    int out_w = 0;  // 0: derived from page and dpi (flat) or the preview default
    int out_h = 0;
    std::string caption;
    // little planet
    int size = 1024;
    double horizon_radius = 0.0;  // 0: size / 4
    double spin = 0.0;
};

// Invalid parameter; field names the JSON key (the CLI maps it to its flag).
class ParamError : public std::invalid_argument {
public:
    ParamError(std::string field, const std::string& message)
        : std::invalid_argument(message), field_(std::move(field)) {}
    [[nodiscard]] const std::string& field() const { return field_; }

private:
    std::string field_;
};

struct ParamRange {
    const char* field;
    double lo;
    double hi;
    bool lo_open;
    bool hi_open;
};

// Validation bounds, also published by /api/v1/meta.
const std::vector<ParamRange>& param_ranges();

inline constexpr int kPreviewDefaultWidth = 640;
inline constexpr int kPreviewDefaultHeight = 480;
inline constexpr int kPreviewMaxEdge = 1024;

void validate(const ArtifactParams& p);

Shape parse_shape(const std::string& s);  // throws ParamError("shape")

// Missing keys keep their defaults; unknown keys and type mismatches throw ParamError.
ArtifactParams params_from_json(const nlohmann::json& j);
nlohmann::json params_to_json(const ArtifactParams& p);

Orientation orientation(const ArtifactParams& p);
PageSpec page_spec(const ArtifactParams& p);
FlatArtifactSpec flat_spec(const ArtifactParams& p);
NetArtifactSpec net_spec(const ArtifactParams& p);

// The artifact pipelines behind both the CLI and the HTTP service.
std::string generate_flat_svg(const EquirectImage& img, const ArtifactParams& p);
std::string generate_net_svg(const EquirectImage& img, const ArtifactParams& p);
std::vector<std::uint8_t> generate_preview_png(const EquirectImage& img, const ArtifactParams& p);
std::vector<std::uint8_t> generate_planet_png(const EquirectImage& img, const ArtifactParams& p);

}  // namespace panofold
