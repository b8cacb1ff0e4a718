#include "panofold/svg.hpp"

#include <charconv>
#include <cmath>

#include "panofold/image_io.hpp"

namespace panofold {

namespace {

std::string escape_xml(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

const char* anchor_name(TextAnchor a) {
    switch (a) {
        case TextAnchor::middle: return "middle";
        case TextAnchor::end: return "end";
        default: return "start";
    }
}

void emit(std::string& out, const RasterElement& r, int id) {
    const auto png = encode_png(r.image);
    out += "  <image id=\"e" + std::to_string(id) + "\" x=\"" + format_mm(r.x_mm) + "\" y=\"" + format_mm(r.y_mm) +
           "\" width=\"" + format_mm(r.w_mm) + "\" height=\"" + format_mm(r.h_mm) +
           "\" preserveAspectRatio=\"none\" xlink:href=\"data:image/png;base64,";
    out += base64_encode({reinterpret_cast<const char*>(png.data()), png.size()});
    out += "\"/>\n";
}

void emit(std::string& out, const PathElement& p, int id) {
    out += "  <path id=\"e" + std::to_string(id) + "\"";
    if (!p.role.empty()) out += " class=\"" + escape_xml(p.role) + "\"";
    out += " d=\"";
    for (std::size_t i = 0; i < p.points_mm.size(); ++i) {
        out += i == 0 ? "M " : " L ";
        out += format_mm(p.points_mm[i].x) + " " + format_mm(p.points_mm[i].y);
    }
    if (p.closed) out += " Z";
    out += "\" fill=\"none\" stroke=\"" + escape_xml(p.color) + "\" stroke-width=\"" + format_mm(p.width_mm) + "\"";
    if (const std::string dash = dash_pattern(p.style); !dash.empty()) out += " stroke-dasharray=\"" + dash + "\"";
    out += " stroke-linecap=\"round\" stroke-linejoin=\"round\"/>\n";
}

void emit(std::string& out, const TextElement& t, int id) {
    out += "  <text id=\"e" + std::to_string(id) + "\" x=\"" + format_mm(t.anchor_mm.x) + "\" y=\"" +
           format_mm(t.anchor_mm.y) + "\" font-family=\"sans-serif\" font-size=\"" + format_mm(t.size_mm) +
           "\" text-anchor=\"" + anchor_name(t.anchor) + "\">" + escape_xml(t.text) + "</text>\n";
}

}  // namespace

std::string format_mm(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 3);
    std::string s(buf, res.ptr);
    if (s == "-0.000") s = "0.000";
    return s;
}

std::string dash_pattern(StrokeStyle style) {
    switch (style) {
        case StrokeStyle::dashed: return "4,2";
        case StrokeStyle::dotted: return "2,2";
        default: return "";
    }
}

std::string base64_encode(std::string_view bytes) {
    static constexpr char table[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
    std::string out;
    out.reserve((bytes.size() + 2) / 3 * 4);
    std::size_t i = 0;
    for (; i + 2 < bytes.size(); i += 3) {
        const unsigned n = (static_cast<unsigned char>(bytes[i]) << 16) |
                           (static_cast<unsigned char>(bytes[i + 1]) << 8) | static_cast<unsigned char>(bytes[i + 2]);
        out += table[(n >> 18) & 63];
        out += table[(n >> 12) & 63];
        out += table[(n >> 6) & 63];
        out += table[n & 63];
    }
    if (i + 1 == bytes.size()) {
        const unsigned n = static_cast<unsigned char>(bytes[i]) << 16;
        out += table[(n >> 18) & 63];
        out += table[(n >> 12) & 63];
        out += "==";
    } else if (i + 2 == bytes.size()) {
        const unsigned n = (static_cast<unsigned char>(bytes[i]) << 16) | (static_cast<unsigned char>(bytes[i + 1]) << 8);
        out += table[(n >> 18) & 63];
        out += table[(n >> 12) & 63];
        out += table[(n >> 6) & 63];
        out += '=';
    }
    return out;
}

std::string emit_svg(const VectorDoc& doc) {
    const std::string w = format_mm(doc.page.width_mm), h = format_mm(doc.page.height_mm);
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" xmlns:xlink=\"http://www.w3.org/1999/xlink\" version=\"1.1\" width=\"" +
           w + "mm\" height=\"" + h + "mm\" viewBox=\"0 0 " + w + " " + h + "\">\n";
    int id = 0;
    for (const Element& el : doc.elements) {
        ++id;
        std::visit([&out, id](const auto& e) { emit(out, e, id); }, el);
    }
    out += "</svg>\n";
    return out;
}

}  // namespace panofold
