#include "panofold/compose.hpp"

#include <algorithm>
#include <cmath>

namespace panofold {

namespace {

constexpr double kMmPerInch = 25.4;
constexpr double kCaptionGap_mm = 3.0;
constexpr double kCaptionSize_mm = 4.5;

Vec2 quarter_turn(Vec2 p) { return {-p.y, p.x}; }

void turn_net(NetLayout& net) {
    for (PlacedFace& f : net.faces) {
        for (Vec2& p : f.polygon) p = quarter_turn(p);
        const double c = f.cos, s = f.sin;
        f.cos = -s;
        f.sin = c;
        f.translation = quarter_turn(f.translation);
    }
    for (auto* segs : {&net.fold_edges, &net.cut_edges}) {
        for (NetSegment& seg : *segs) {
            seg.a = quarter_turn(seg.a);
            seg.b = quarter_turn(seg.b);
        }
    }
    for (Tab& t : net.tabs)
        for (Vec2& p : t.outline) p = quarter_turn(p);
}

struct Fit {
    double scale = 0.0;
    bool quarter = false;
};

Fit best_fit(const NetLayout& net, double avail_w, double avail_h) {
    const auto b = net.bounds();
    const double w = b.max.x - b.min.x, h = b.max.y - b.min.y;
    const double upright = std::min(avail_w / w, avail_h / h);
    const double turned = std::min(avail_w / h, avail_h / w);
    if (turned > upright * (1.0 + 1e-9)) return {turned, true};
    return {upright, false};
}

PathElement stroke(std::vector<Vec2> pts, const LineStyle& ls, std::string role, bool closed = false) {
    return {std::move(pts), closed, ls.style, ls.width_mm, ls.color, std::move(role)};
}

}  // namespace

// ---------------------------------------------------------------------------
// Specs
// ---------------------------------------------------------------------------

PageSpec PageSpec::a4(bool landscape) {
    return landscape ? PageSpec{297.0, 210.0, 10.0, 300} : PageSpec{210.0, 297.0, 10.0, 300};
}

PageSpec PageSpec::letter(bool landscape) {
    return landscape ? PageSpec{279.4, 215.9, 10.0, 300} : PageSpec{215.9, 279.4, 10.0, 300};
}

void PageSpec::validate() const {
    if (!(margin_mm >= 0.0) || !(printable_width() > 0.0) || !(printable_height() > 0.0))
        throw std::invalid_argument("page has no printable area");
    if (dpi <= 0) throw std::invalid_argument("page dpi must be positive");
}

void FlatArtifactSpec::validate() const {
    if (!(minimap_fraction > 0.1 && minimap_fraction < 0.5))
        throw std::invalid_argument("minimap fraction must be in (0.1, 0.5)");
    sampling.validate();
    graticule_lines(graticule.spacing_deg);
}

void NetArtifactSpec::validate() const {
    tabs.validate();
    sampling.validate();
    if (!(tab_max_mm > 0.0)) throw std::invalid_argument("tab cap must be positive");
}

// ---------------------------------------------------------------------------
// Flat artifact
// ---------------------------------------------------------------------------

VectorDoc compose_flat(const EquirectImage& img, const FlatArtifactSpec& spec, const PageSpec& page) {
    page.validate();
    spec.validate();
    const PerspectiveSpec& persp = spec.perspective;

    const double main_w = page.printable_width();
    const double main_h = main_w * persp.out_h() / persp.out_w();
    const double caption_h = spec.caption.empty() ? 0.0 : kCaptionGap_mm + kCaptionSize_mm;
    if (main_h + caption_h > page.printable_height())
        throw LayoutError("perspective aspect is too tall for this page (" + std::to_string(persp.out_w()) + "x" +
                          std::to_string(persp.out_h()) + "); use a landscape page or a wider crop");

    VectorDoc doc{page, {}};
    const double x0 = page.margin_mm, y0 = page.margin_mm;
    doc.elements.emplace_back(
        RasterElement{render_perspective(img, persp, spec.orientation, spec.sampling), x0, y0, main_w, main_h});

    const double map_w = spec.minimap_fraction * main_w;
    const int map_px = std::max(64, static_cast<int>(std::lround(map_w / kMmPerInch * page.dpi)));
    RasterImage map = render_minimap(img, persp, spec.orientation, map_px, spec.graticule);
    const double map_h = map_w * map.height() / map.width();
    if (map_h + 2.0 * kMinimapInset_mm > main_h)
        throw LayoutError("mini-map does not fit inside the main panel; lower the minimap fraction");

    const bool right = spec.minimap_corner == Corner::upper_right || spec.minimap_corner == Corner::lower_right;
    const bool top = spec.minimap_corner == Corner::upper_right || spec.minimap_corner == Corner::upper_left;
    const double mx = right ? x0 + main_w - kMinimapInset_mm - map_w : x0 + kMinimapInset_mm;
    const double my = top ? y0 + kMinimapInset_mm : y0 + main_h - kMinimapInset_mm - map_h;
    doc.elements.emplace_back(RasterElement{std::move(map), mx, my, map_w, map_h});
    doc.elements.emplace_back(PathElement{{{mx, my}, {mx + map_w, my}, {mx + map_w, my + map_h}, {mx, my + map_h}},
                                          true,
                                          StrokeStyle::solid,
                                          kMinimapBorder_mm,
                                          "#000000",
                                          "minimap-border"});

    if (!spec.caption.empty()) {
        doc.elements.emplace_back(TextElement{spec.caption, {x0, y0 + main_h + kCaptionGap_mm + kCaptionSize_mm},
                                              TextAnchor::start, kCaptionSize_mm});
    }
    return doc;
}

// ---------------------------------------------------------------------------
// Net artifact
// ---------------------------------------------------------------------------

NetPlacement place_net(const PolyhedronModel& model, const NetArtifactSpec& spec, const PageSpec& page) {
    page.validate();
    spec.validate();
    const double avail_w = page.printable_width() - 2.0 * kNetClearance_mm;
    const double avail_h = page.printable_height() - 2.0 * kNetClearance_mm;
    if (avail_w <= 0.0 || avail_h <= 0.0) throw LayoutError("page too small for a net");

    NetPlacement out;
    out.net = unfold(model, default_spanning_tree(spec.shape), spec.tabs);
    double longest = 0.0;
    for (const PolyEdge& e : model.edges())
        longest = std::max(longest, norm(model.vertices()[static_cast<std::size_t>(e.v1)] -
                                          model.vertices()[static_cast<std::size_t>(e.v0)]));

    // Shrinking tabs can only grow the scale, so the capped height decreases monotonically.
    double height = spec.tabs.height;
    Fit fit;
    for (int iter = 0; iter < 200; ++iter) {
        rebuild_tabs(out.net, model, {height, spec.tabs.shoulder_deg});
        fit = best_fit(out.net, avail_w, avail_h);
        const double capped = std::min(spec.tabs.height, spec.tab_max_mm / (fit.scale * longest));
        if (std::abs(capped - height) <= 1e-12) break;
        height = capped;
    }
    if (fit.quarter) turn_net(out.net);

    const auto b = out.net.bounds();
    out.quarter_turn = fit.quarter;
    out.scale_mm = fit.scale;
    out.tab_height = height;
    const double s = fit.scale;
    out.offset_x_mm = page.margin_mm + kNetClearance_mm + 0.5 * (avail_w - (b.max.x - b.min.x) * s) - b.min.x * s;
    out.offset_y_mm = page.margin_mm + kNetClearance_mm + 0.5 * (avail_h - (b.max.y - b.min.y) * s) + b.max.y * s;
    return out;
}

VectorDoc compose_net(const EquirectImage& img, const NetArtifactSpec& spec, const PageSpec& page) {
    const PolyhedronModel model = make_polyhedron(spec.shape);
    const NetPlacement pl = place_net(model, spec, page);
    const double s = pl.scale_mm;
    const auto to_page = [&pl, s](Vec2 p) { return Vec2{pl.offset_x_mm + p.x * s, pl.offset_y_mm - p.y * s}; };

    VectorDoc doc{page, {}};
    const double ppu = s * page.dpi / kMmPerInch;
    for (int f = 0; f < model.face_count(); ++f) {
        const FacePlaneSpec plane = placed_face_plane(model, pl.net, f, ppu);
        FaceRaster fr = render_face(img, plane, spec.orientation, spec.sampling);
        const Vec2 t = pl.net.faces[static_cast<std::size_t>(f)].translation;
        const Vec2 top_left = to_page({t.x + fr.s_min, t.y + fr.t_max});
        const double w_mm = fr.image.width() / ppu * s, h_mm = fr.image.height() / ppu * s;
        doc.elements.emplace_back(RasterElement{std::move(fr.image), top_left.x, top_left.y, w_mm, h_mm});
    }

    for (const NetSegment& seg : pl.net.fold_edges)
        doc.elements.emplace_back(stroke({to_page(seg.a), to_page(seg.b)}, spec.fold, "fold"));

    // a cut edge carrying a tab is where the tab folds over, so it takes the fold stroke
    const auto has_tab = [&pl](const NetSegment& seg) {
        return std::any_of(pl.net.tabs.begin(), pl.net.tabs.end(),
                           [&seg](const Tab& t) { return t.edge == seg.edge && t.face == seg.face; });
    };
    for (const NetSegment& seg : pl.net.cut_edges) {
        const bool tabbed = has_tab(seg);
        doc.elements.emplace_back(
            stroke({to_page(seg.a), to_page(seg.b)}, tabbed ? spec.fold : spec.cut, tabbed ? "cut tab-base" : "cut"));
    }
    for (const Tab& tab : pl.net.tabs) {
        doc.elements.emplace_back(stroke({to_page(tab.outline[1]), to_page(tab.outline[2]), to_page(tab.outline[3]),
                                          to_page(tab.outline[0])},
                                         spec.cut, "tab"));
    }
    return doc;
}

}  // namespace panofold
