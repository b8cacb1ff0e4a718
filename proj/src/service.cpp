#include "panofold/service.hpp"

#include <algorithm>
#include <optional>

#include "panofold/image_io.hpp"
#include "panofold/params.hpp"
#include "panofold/polyhedra.hpp"
#include "panofold/version.hpp"

namespace panofold::service {

namespace {

constexpr const char* kSvgType = "image/svg+xml";
constexpr const char* kPngType = "image/png";
constexpr const char* kJsonType = "application/json";

struct Decoded {
    EquirectImage image;
    ArtifactParams params;
};

// Either fills `out` or returns the error response to send.
std::optional<Response> decode_request(const Parts& parts, const Options& options, Decoded& out) {
    const auto image = parts.find("image");
    if (image == parts.end()) return error_response(400, "missing multipart part 'image'", "image");
    if (image->second.content.size() > options.max_image_bytes)
        return error_response(413, "image exceeds the " + std::to_string(options.max_image_bytes) + " byte limit",
                              "image");

    if (const auto params = parts.find("params"); params != parts.end()) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(params->second.content);
        } catch (const nlohmann::json::parse_error& e) {
            return error_response(400, std::string("params is not valid JSON: ") + e.what(), "params");
        }
        try {
            out.params = params_from_json(j);
        } catch (const ParamError& e) {
            return error_response(400, e.what(), e.field());
        }
    }

    try {
        const auto& bytes = image->second.content;
        out.image = EquirectImage(decode_image({reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()}));
    } catch (const ImageDecodeError& e) {
        return error_response(422, std::string("cannot decode image: ") + e.what(), "image");
    } catch (const std::invalid_argument& e) {
        return error_response(422, std::string("unusable image: ") + e.what(), "image");
    }
    return std::nullopt;
}

template <class Fn>
Response handle(const Parts& parts, const Options& options, Fn&& render) {
    Decoded d;
    if (auto err = decode_request(parts, options, d)) return *err;
    try {
        return render(d);
    } catch (const ParamError& e) {
        return error_response(400, e.what(), e.field());
    } catch (const LayoutError& e) {
        return error_response(422, e.what());
    } catch (const std::exception& e) {
        return error_response(500, e.what());
    }
}

}  // namespace

Response error_response(int status, const std::string& message, const std::string& field) {
    nlohmann::json body{{"error", message}};
    if (!field.empty()) body["field"] = field;
    return {status, kJsonType, body.dump()};
}

Response Api::flat(const Parts& parts) const {
    return handle(parts, options_, [](const Decoded& d) {
        return Response{200, kSvgType, generate_flat_svg(d.image, d.params)};
    });
}

Response Api::net(const Parts& parts) const {
    return handle(parts, options_, [](const Decoded& d) {
        return Response{200, kSvgType, generate_net_svg(d.image, d.params)};
    });
}

Response Api::preview(const Parts& parts) const {
    return handle(parts, options_, [](const Decoded& d) {
        ArtifactParams p = d.params;
        if (p.out_w > kPreviewMaxEdge)
            throw ParamError("out_w", "preview width is limited to " + std::to_string(kPreviewMaxEdge) + " px");
        if (p.out_h > kPreviewMaxEdge)
            throw ParamError("out_h", "preview height is limited to " + std::to_string(kPreviewMaxEdge) + " px");
        p.supersample = 1;
        const auto png = generate_preview_png(d.image, p);
        return Response{200, kPngType, std::string(png.begin(), png.end())};
    });
}

Response Api::meta() const { return {200, kJsonType, meta_json(options_).dump()}; }

nlohmann::json meta_json(const Options& options) {
    nlohmann::json ranges = nlohmann::json::object();
    for (const ParamRange& r : param_ranges()) {
        ranges[r.field] = {{"min", r.lo}, {"max", r.hi}, {"min_exclusive", r.lo_open}, {"max_exclusive", r.hi_open}};
    }

    nlohmann::json distortion = nlohmann::json::object();
    for (Shape shape : {Shape::cube, Shape::cuboctahedron}) {
        const PolyhedronModel model = make_polyhedron(shape);
        nlohmann::json faces = nlohmann::json::array();
        nlohmann::json by_kind = nlohmann::json::object();
        double worst = 0.0;
        for (int f = 0; f < model.face_count(); ++f) {
            const double d = face_distortion(model, f);
            faces.push_back(d);
            worst = std::max(worst, d);
            const char* kind = model.faces()[static_cast<std::size_t>(f)].size() == 3 ? "triangle" : "square";
            by_kind[kind] = d;
        }
        distortion[to_string(shape)] = {{"faces", faces}, {"max", worst}, {"by_kind", by_kind}};
    }

    nlohmann::json pages = nlohmann::json::array();
    for (const auto& [name, page] : {std::pair{"a4", PageSpec::a4()}, std::pair{"letter", PageSpec::letter()}})
        pages.push_back({{"name", name}, {"width_mm", page.width_mm}, {"height_mm", page.height_mm}});

    return {{"version", std::string(kVersion)},
            {"shapes", {"cube", "cuboctahedron"}},
            {"pages", pages},
            {"page_orientations", {"portrait", "landscape"}},
            {"minimap_projections", {"equirectangular", "little-planet"}},
            {"ranges", ranges},
            {"preview_max_edge", kPreviewMaxEdge},
            {"max_image_bytes", options.max_image_bytes},
            {"distortion", distortion}};
}

}  // namespace panofold::service
