#include "panofold/cli.hpp"

#include <algorithm>
#include <functional>

#include "CLI11.hpp"
#include "panofold/image_io.hpp"
#include "panofold/params.hpp"
#include "panofold/version.hpp"

namespace panofold::cli {

namespace {

struct Invocation {
    ArtifactParams params;
    std::string input;
    std::string output;
    std::string shape = "cube";
};

void add_orientation(CLI::App* sub, Invocation& inv) {
    sub->add_option("--yaw", inv.params.yaw, "Yaw in degrees, positive toward +longitude");
    sub->add_option("--pitch", inv.params.pitch, "Pitch in degrees, positive looks up");
    sub->add_option("--roll", inv.params.roll, "Roll in degrees about the view axis");
}

void add_io(CLI::App* sub, Invocation& inv, bool needs_input) {
    if (needs_input) sub->add_option("-i,--input", inv.input, "Equirectangular PNG or JPEG")->required();
    sub->add_option("-o,--out", inv.output, "Output path, '-' for standard output")->required();
}

void add_page(CLI::App* sub, Invocation& inv) {
    sub->add_option("--page", inv.params.page, "Paper size: a4 | letter");
    sub->add_option("--page-orientation", inv.params.page_orientation, "portrait | landscape");
    sub->add_option("--dpi", inv.params.dpi, "Resolution of embedded rasters");
}

void emit(const std::string& path, std::span<const std::uint8_t> bytes, std::ostream& out) {
    if (path == "-") {
        out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
        out.flush();
    } else {
        write_file(path, bytes);
    }
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    emit(path, {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()}, out);
}

EquirectImage load_input(const std::string& path, std::ostream& err) {
    if (std::filesystem::is_directory(path)) throw std::runtime_error("cannot read '" + path + "': is a directory");
    const auto bytes = read_file(path);
    EquirectImage img;
    try {
        img = EquirectImage(decode_image(bytes));
    } catch (const ImageDecodeError& e) {
        throw std::runtime_error("cannot decode '" + path + "': " + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error("unusable image '" + path + "': " + e.what());
    }
    if (img.nonstandard_aspect())
        err << "panofold: warning: '" << path << "' is " << img.width() << "x" << img.height()
            << ", not the 2:1 aspect of an equirectangular frame\n";
    return img;
}

}  // namespace

std::string flag_for_field(const std::string& field) {
    if (field == "out_w") return "--width";
    if (field == "out_h") return "--height";
    std::string flag = "--" + field;
    std::replace(flag.begin(), flag.end(), '_', '-');
    return flag;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Printable flat sheets and cut-and-fold nets from equirectangular 360 frames", "panofold"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1, 1);

    Invocation inv;
    std::function<void()> action;

    auto* flat = app.add_subcommand("flat", "Perspective crop with a graticuled mini-map (SVG)");
    add_io(flat, inv, true);
    add_orientation(flat, inv);
    flat->add_option("--fov", inv.params.fov, "Horizontal field of view in degrees, (1, 179)");
    add_page(flat, inv);
    flat->add_option("--supersample", inv.params.supersample, "Subsamples per pixel edge, 1..8");
    flat->add_option("--minimap-fraction", inv.params.minimap_fraction, "Mini-map width relative to the main panel");
    flat->add_option("--graticule-spacing", inv.params.graticule_spacing, "Graticule spacing in degrees");
    flat->add_option("--minimap-projection", inv.params.minimap_projection, "equirectangular | little-planet");
    flat->add_option("--width", inv.params.out_w, "Perspective width in pixels (default: page width at dpi)");
    flat->add_option("--height", inv.params.out_h, "Perspective height in pixels (default: 3/4 of width)");
    flat->add_option("--caption", inv.params.caption, "Caption printed below the main panel");

    auto* net = app.add_subcommand("net", "Cut-and-fold polyhedron net (SVG)");
    add_io(net, inv, true);
    add_orientation(net, inv);
    net->add_option("--shape", inv.shape, "cube | cuboctahedron");
    add_page(net, inv);
    net->add_option("--supersample", inv.params.supersample, "Subsamples per pixel edge, 1..8");

    auto* planet = app.add_subcommand("planet", "Little-planet rendering (PNG)");
    add_io(planet, inv, true);
    planet->add_option("--size", inv.params.size, "Output edge length in pixels");
    planet->add_option("--horizon-radius", inv.params.horizon_radius, "Horizon circle radius in pixels (default size/4)");
    planet->add_option("--spin", inv.params.spin, "Rotation of the planet in degrees");
    planet->add_option("--supersample", inv.params.supersample, "Subsamples per pixel edge, 1..8");

    auto* chart = app.add_subcommand("chart", "Synthetic lat/lon test chart (PNG)");
    add_io(chart, inv, false);
    inv.params.out_w = 0;
    chart->add_option("--width", inv.params.out_w, "Chart width in pixels (default 2048)");
    chart->add_option("--height", inv.params.out_h, "Chart height in pixels (default width/2)");

    auto* preview = app.add_subcommand("preview", "Perspective view (PNG)");
    add_io(preview, inv, true);
    add_orientation(preview, inv);
    preview->add_option("--fov", inv.params.fov, "Horizontal field of view in degrees, (1, 179)");
    preview->add_option("--width", inv.params.out_w, "Width in pixels (default 640)");
    preview->add_option("--height", inv.params.out_h, "Height in pixels (default 480)");
    preview->add_option("--supersample", inv.params.supersample, "Subsamples per pixel edge, 1..8");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return kExitUsage;
    }

    try {
        inv.params.shape = parse_shape(inv.shape);
        validate(inv.params);
    } catch (const ParamError& e) {
        err << "panofold: invalid value for " << flag_for_field(e.field()) << ": " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*chart) {
            const int w = inv.params.out_w == 0 ? 2048 : inv.params.out_w;
            const int h = inv.params.out_h == 0 ? std::max(1, w / 2) : inv.params.out_h;
            emit(inv.output, encode_png(make_latlon_chart(w, h).image()), out);
            return kExitOk;
        }
        const EquirectImage img = load_input(inv.input, err);
        if (*flat) emit(inv.output, generate_flat_svg(img, inv.params), out);
        else if (*net) emit(inv.output, generate_net_svg(img, inv.params), out);
        else if (*planet) emit(inv.output, generate_planet_png(img, inv.params), out);
        else if (*preview) emit(inv.output, generate_preview_png(img, inv.params), out);
    } catch (const std::exception& e) {
        err << "panofold: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}

}  // namespace panofold::cli
