#include "panofold/polyhedra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>

namespace panofold {

namespace {

// Template "up" for a face: world +Z projected into the plane, or -sign(n_z)*X for faces
// normal to Z. e1 = e2 x n gives e1 x e2 = n.
void build_frame(FaceFrame& fr, const std::vector<Vec3>& verts, const std::vector<int>& ring) {
    const Vec3 n = fr.normal;
    Vec3 up{0, 0, 1};
    if (std::abs(n.z) > 1.0 - 1e-9) up = Vec3{n.z > 0 ? -1.0 : 1.0, 0, 0};
    fr.e2 = normalized(up - dot(up, n) * n);
    fr.e1 = cross(fr.e2, n);
    fr.polygon.clear();
    for (int v : ring) {
        const Vec3 d = verts[static_cast<std::size_t>(v)] - fr.centroid;
        fr.polygon.push_back({dot(d, fr.e1), dot(d, fr.e2)});
    }
}

// Sutherland-Hodgman clip of `subject` by the half-plane left of a->b.
std::vector<Vec2> clip_left(const std::vector<Vec2>& subject, Vec2 a, Vec2 b) {
    std::vector<Vec2> out;
    const std::size_t n = subject.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 p = subject[i], q = subject[(i + 1) % n];
        const double sp = cross(b - a, p - a), sq = cross(b - a, q - a);
        if (sp >= 0) out.push_back(p);
        if ((sp >= 0) != (sq >= 0)) {
            const double t = sp / (sp - sq);
            out.push_back(p + t * (q - p));
        }
    }
    return out;
}

Vec2 rotate(double c, double s, Vec2 p) { return {c * p.x - s * p.y, s * p.x + c * p.y}; }

// Position of vertex v within face f's ring.
std::size_t ring_index(const std::vector<int>& ring, int v) {
    return static_cast<std::size_t>(std::find(ring.begin(), ring.end(), v) - ring.begin());
}

Tab make_tab(const NetSegment& seg, const TabStyle& style) {
    const Vec2 d = seg.b - seg.a;
    const double len = norm(d);
    const Vec2 along = (1.0 / len) * d;
    // segments follow the counterclockwise ring, so the face interior is on the left
    const Vec2 outward{along.y, -along.x};
    const double h = style.height * len;
    const double inset = h / std::tan(deg_to_rad(style.shoulder_deg));
    Tab tab{seg.edge, seg.face, {}};
    tab.outline = {seg.a, seg.b, seg.b + h * outward - inset * along, seg.a + h * outward + inset * along};
    return tab;
}

}  // namespace

std::string to_string(Shape shape) { return shape == Shape::cube ? "cube" : "cuboctahedron"; }

// ---------------------------------------------------------------------------
// PolyhedronModel
// ---------------------------------------------------------------------------

PolyhedronModel PolyhedronModel::from_planes(std::vector<Vec3> vertices,
                                             const std::vector<std::pair<Vec3, double>>& planes) {
    PolyhedronModel m;
    m.vertices_ = std::move(vertices);
    for (const auto& [normal_in, offset] : planes) {
        const Vec3 n = normalized(normal_in);
        std::vector<int> ring;
        Vec3 c{};
        for (int v = 0; v < static_cast<int>(m.vertices_.size()); ++v) {
            if (std::abs(dot(m.vertices_[static_cast<std::size_t>(v)], n) - offset) < 1e-9) {
                ring.push_back(v);
                c = c + m.vertices_[static_cast<std::size_t>(v)];
            }
        }
        if (ring.size() < 3) throw std::invalid_argument("from_planes: plane touches fewer than 3 vertices");
        c = (1.0 / static_cast<double>(ring.size())) * c;

        FaceFrame fr;
        fr.centroid = c;
        fr.normal = n;
        fr.offset = dot(c, n);
        if (fr.offset <= 0.0) throw std::invalid_argument("from_planes: face normal points inward");
        build_frame(fr, m.vertices_, ring);
        // counterclockwise in (e1, e2), starting from the smallest angle
        std::vector<std::size_t> order(ring.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return std::atan2(fr.polygon[a].y, fr.polygon[a].x) < std::atan2(fr.polygon[b].y, fr.polygon[b].x);
        });
        std::vector<int> sorted;
        for (std::size_t i : order) sorted.push_back(ring[i]);
        build_frame(fr, m.vertices_, sorted);
        m.faces_.push_back(std::move(sorted));
        m.frames_.push_back(std::move(fr));
    }

    std::map<std::pair<int, int>, std::vector<int>> incidence;
    for (int f = 0; f < m.face_count(); ++f) {
        const auto& ring = m.faces_[static_cast<std::size_t>(f)];
        for (std::size_t k = 0; k < ring.size(); ++k) {
            const int a = ring[k], b = ring[(k + 1) % ring.size()];
            incidence[{std::min(a, b), std::max(a, b)}].push_back(f);
        }
    }
    for (const auto& [key, fs] : incidence) {
        if (fs.size() != 2) throw std::invalid_argument("from_planes: edge not shared by exactly two faces");
        m.edges_.push_back({key.first, key.second, std::min(fs[0], fs[1]), std::max(fs[0], fs[1])});
    }
    const auto euler = static_cast<long>(m.vertices_.size()) - static_cast<long>(m.edges_.size()) + m.face_count();
    if (euler != 2) throw std::invalid_argument("from_planes: Euler characteristic is not 2");
    return m;
}

int PolyhedronModel::edge_of(int v0, int v1) const {
    const int lo = std::min(v0, v1), hi = std::max(v0, v1);
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].v0 == lo && edges_[e].v1 == hi) return static_cast<int>(e);
    return -1;
}

int PolyhedronModel::edge_between(int f, int g) const {
    const int lo = std::min(f, g), hi = std::max(f, g);
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].face_a == lo && edges_[e].face_b == hi) return static_cast<int>(e);
    return -1;
}

FacePlaneSpec PolyhedronModel::face_plane(int f, double px_per_unit) const {
    const FaceFrame& fr = frames_.at(static_cast<std::size_t>(f));
    return {fr.centroid, fr.e1, fr.e2, fr.polygon, px_per_unit};
}

PolyhedronModel make_cube() {
    std::vector<Vec3> v;
    for (int sx : {-1, 1})
        for (int sy : {-1, 1})
            for (int sz : {-1, 1}) v.push_back({double(sx), double(sy), double(sz)});
    return PolyhedronModel::from_planes(std::move(v), {{{1, 0, 0}, 1.0},
                                                       {{-1, 0, 0}, 1.0},
                                                       {{0, 1, 0}, 1.0},
                                                       {{0, -1, 0}, 1.0},
                                                       {{0, 0, 1}, 1.0},
                                                       {{0, 0, -1}, 1.0}});
}

PolyhedronModel make_cuboctahedron() {
    std::vector<Vec3> v;
    for (int a : {1, -1})
        for (int b : {1, -1}) v.push_back({double(a), double(b), 0});
    for (int a : {1, -1})
        for (int b : {1, -1}) v.push_back({double(a), 0, double(b)});
    for (int a : {1, -1})
        for (int b : {1, -1}) v.push_back({0, double(a), double(b)});

    std::vector<std::pair<Vec3, double>> planes{{{1, 0, 0}, 1.0},  {{-1, 0, 0}, 1.0}, {{0, 1, 0}, 1.0},
                                                {{0, -1, 0}, 1.0}, {{0, 0, 1}, 1.0},  {{0, 0, -1}, 1.0}};
    const double tri_offset = 2.0 / std::sqrt(3.0);
    for (int sx : {1, -1})
        for (int sy : {1, -1})
            for (int sz : {1, -1}) planes.push_back({{double(sx), double(sy), double(sz)}, tri_offset});
    return PolyhedronModel::from_planes(std::move(v), planes);
}

PolyhedronModel make_polyhedron(Shape shape) {
    return shape == Shape::cube ? make_cube() : make_cuboctahedron();
}

int face_for_direction(const PolyhedronModel& model, const Vec3& d) {
    int best = 0;
    double best_score = -std::numeric_limits<double>::infinity();
    for (int f = 0; f < model.face_count(); ++f) {
        const FaceFrame& fr = model.frames()[static_cast<std::size_t>(f)];
        const double score = dot(d, fr.normal) / fr.offset;
        if (score > best_score + 1e-12) {
            best = f;
            best_score = score;
        }
    }
    return best;
}

double face_distortion(const PolyhedronModel& model, int face) {
    const FaceFrame& fr = model.frames().at(static_cast<std::size_t>(face));
    double worst = 1.0;
    for (int v : model.faces()[static_cast<std::size_t>(face)]) {
        const double c = dot(fr.normal, normalized(model.vertices()[static_cast<std::size_t>(v)]));
        worst = std::max(worst, 1.0 / (c * c));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Spanning trees
// ---------------------------------------------------------------------------

SpanningTree default_spanning_tree(Shape shape) {
    const auto model = make_polyhedron(shape);
    auto link = [&model](int parent, int child) { return TreeEdge{parent, child, model.edge_between(parent, child)}; };
    enum { PX, NX, PY, NY, PZ, NZ };
    if (shape == Shape::cube) {
        return {NZ, {link(NZ, PX), link(NZ, PY), link(NZ, NX), link(NZ, NY), link(PX, PZ)}};
    }
    // Triangles are named by the signs of their normal: T_pmp = (+,-,+), ...
    enum { T_ppp = 6, T_ppm, T_pmp, T_pmm, T_mpp, T_mpm, T_mmp, T_mmm };
    return {T_ppp,
            {link(T_ppp, PZ), link(T_ppp, PY), link(PZ, T_pmp), link(PZ, T_mpp), link(PY, T_mpm), link(T_pmp, PX),
             link(T_mpp, NX), link(PX, T_pmm), link(PX, T_ppm), link(NX, T_mmp), link(T_pmm, NY), link(T_ppm, NZ),
             link(NY, T_mmm)}};
}

SpanningTree random_spanning_tree(const PolyhedronModel& model, std::mt19937_64& rng) {
    const int nf = model.face_count();
    std::vector<int> order(model.edges().size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<int> parent(static_cast<std::size_t>(nf));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(nf));
    for (int e : order) {
        const PolyEdge& pe = model.edges()[static_cast<std::size_t>(e)];
        const int ra = find(pe.face_a), rb = find(pe.face_b);
        if (ra == rb) continue;
        parent[static_cast<std::size_t>(ra)] = rb;
        adj[static_cast<std::size_t>(pe.face_a)].push_back({pe.face_b, e});
        adj[static_cast<std::size_t>(pe.face_b)].push_back({pe.face_a, e});
    }

    SpanningTree tree;
    tree.root = std::uniform_int_distribution<int>(0, nf - 1)(rng);
    std::vector<bool> seen(static_cast<std::size_t>(nf), false);
    std::queue<int> q;
    q.push(tree.root);
    seen[static_cast<std::size_t>(tree.root)] = true;
    while (!q.empty()) {
        const int f = q.front();
        q.pop();
        for (const auto& [g, e] : adj[static_cast<std::size_t>(f)]) {
            if (seen[static_cast<std::size_t>(g)]) continue;
            seen[static_cast<std::size_t>(g)] = true;
            tree.edges.push_back({f, g, e});
            q.push(g);
        }
    }
    return tree;
}

// ---------------------------------------------------------------------------
// Unfolding
// ---------------------------------------------------------------------------

void TabStyle::validate() const {
    if (!(height > 0.0 && height <= 0.5)) throw std::invalid_argument("tab height must be in (0, 0.5]");
    if (!(shoulder_deg >= 45.0 && shoulder_deg < 90.0))
        throw std::invalid_argument("tab shoulder angle must be in [45, 90) degrees");
}

NetOverlapError::NetOverlapError(int a, int b)
    : std::runtime_error("net faces " + std::to_string(a) + " and " + std::to_string(b) + " overlap"),
      face_a(a),
      face_b(b) {}

NetLayout::Bounds NetLayout::bounds() const {
    Bounds b{{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()},
             {-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()}};
    auto grow = [&b](Vec2 p) {
        b.min = {std::min(b.min.x, p.x), std::min(b.min.y, p.y)};
        b.max = {std::max(b.max.x, p.x), std::max(b.max.y, p.y)};
    };
    for (const auto& f : faces)
        for (Vec2 p : f.polygon) grow(p);
    for (const auto& t : tabs)
        for (Vec2 p : t.outline) grow(p);
    return b;
}

double polygon_area(const std::vector<Vec2>& poly) {
    double a = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) a += cross(poly[i], poly[(i + 1) % poly.size()]);
    return 0.5 * a;
}

double convex_intersection_area(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
    // either winding is accepted; tab outlines run clockwise
    std::vector<Vec2> clipped = a;
    if (polygon_area(clipped) < 0.0) std::reverse(clipped.begin(), clipped.end());
    std::vector<Vec2> clip = b;
    if (polygon_area(clip) < 0.0) std::reverse(clip.begin(), clip.end());
    for (std::size_t i = 0; i < clip.size() && !clipped.empty(); ++i)
        clipped = clip_left(clipped, clip[i], clip[(i + 1) % clip.size()]);
    return clipped.size() < 3 ? 0.0 : std::max(0.0, polygon_area(clipped));
}

namespace {

bool has_overlap(const std::vector<Vec2>& a, const std::vector<Vec2>& b, double min_area) {
    return convex_intersection_area(a, b) > 1e-12 * min_area;
}

double min_face_area(const PolyhedronModel& model) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& fr : model.frames()) m = std::min(m, polygon_area(fr.polygon));
    return m;
}

}  // namespace

void rebuild_tabs(NetLayout& net, const PolyhedronModel& model, const TabStyle& style) {
    style.validate();
    net.tabs.clear();
    for (std::size_t e = 0; e < model.edges().size(); ++e) {
        const PolyEdge& pe = model.edges()[e];
        for (const NetSegment& seg : net.cut_edges) {
            if (seg.edge == static_cast<int>(e) && seg.face == pe.face_a) {
                net.tabs.push_back(make_tab(seg, style));
                break;
            }
        }
    }
}

NetLayout unfold(const PolyhedronModel& model, const SpanningTree& tree, const TabStyle& tabs, OverlapPolicy policy) {
    tabs.validate();
    const int nf = model.face_count();
    if (tree.root < 0 || tree.root >= nf) throw InvalidTreeError("unfold: root face out of range");
    if (static_cast<int>(tree.edges.size()) != nf - 1)
        throw InvalidTreeError("unfold: a spanning tree needs exactly " + std::to_string(nf - 1) + " edges");

    std::vector<std::vector<const TreeEdge*>> children(static_cast<std::size_t>(nf));
    for (const TreeEdge& te : tree.edges) {
        if (te.parent < 0 || te.parent >= nf || te.child < 0 || te.child >= nf)
            throw InvalidTreeError("unfold: tree edge references a missing face");
        if (te.edge < 0 || te.edge >= static_cast<int>(model.edges().size()) ||
            model.edge_between(te.parent, te.child) != te.edge)
            throw InvalidTreeError("unfold: faces " + std::to_string(te.parent) + " and " + std::to_string(te.child) +
                                   " are not joined by edge " + std::to_string(te.edge));
        children[static_cast<std::size_t>(te.parent)].push_back(&te);
    }

    NetLayout net;
    net.tree = tree;
    net.faces.resize(static_cast<std::size_t>(nf));
    std::vector<bool> placed(static_cast<std::size_t>(nf), false);
    std::vector<bool> is_fold(model.edges().size(), false);

    const auto& root_fr = model.frames()[static_cast<std::size_t>(tree.root)];
    net.faces[static_cast<std::size_t>(tree.root)] = {tree.root, root_fr.polygon, 1.0, 0.0, {0.0, 0.0}};
    placed[static_cast<std::size_t>(tree.root)] = true;

    std::queue<int> q;
    q.push(tree.root);
    int placed_count = 1;
    while (!q.empty()) {
        const int f = q.front();
        q.pop();
        for (const TreeEdge* te : children[static_cast<std::size_t>(f)]) {
            const int c = te->child;
            if (placed[static_cast<std::size_t>(c)]) throw InvalidTreeError("unfold: tree contains a cycle");
            const PolyEdge& pe = model.edges()[static_cast<std::size_t>(te->edge)];
            const auto& pring = model.faces()[static_cast<std::size_t>(f)];
            const auto& cring = model.faces()[static_cast<std::size_t>(c)];
            const auto& cpoly = model.frames()[static_cast<std::size_t>(c)].polygon;
            const PlacedFace& pf = net.faces[static_cast<std::size_t>(f)];

            const Vec2 pa = pf.polygon[ring_index(pring, pe.v0)], pb = pf.polygon[ring_index(pring, pe.v1)];
            const std::size_t ia = ring_index(cring, pe.v0), ib = ring_index(cring, pe.v1);
            const Vec2 ca = cpoly[ia], cb = cpoly[ib];
            const Vec2 dp = (1.0 / norm(pb - pa)) * (pb - pa);
            const Vec2 dc = (1.0 / norm(cb - ca)) * (cb - ca);
            const double cs = dot(dc, dp), sn = cross(dc, dp);

            PlacedFace out{c, {}, cs, sn, pa - rotate(cs, sn, ca)};
            for (Vec2 p : cpoly) out.polygon.push_back(rotate(cs, sn, p) + out.translation);
            // shared endpoints are copied so folds coincide exactly
            out.polygon[ia] = pa;
            out.polygon[ib] = pb;
            net.faces[static_cast<std::size_t>(c)] = std::move(out);
            placed[static_cast<std::size_t>(c)] = true;
            is_fold[static_cast<std::size_t>(te->edge)] = true;
            ++placed_count;
            net.fold_edges.push_back({pa, pb, te->edge, f});
            q.push(c);
        }
    }
    if (placed_count != nf) throw InvalidTreeError("unfold: tree does not reach every face from the root");

    for (int f = 0; f < nf; ++f) {
        const auto& ring = model.faces()[static_cast<std::size_t>(f)];
        const auto& poly = net.faces[static_cast<std::size_t>(f)].polygon;
        for (std::size_t k = 0; k < ring.size(); ++k) {
            const int a = ring[k], b = ring[(k + 1) % ring.size()];
            const int e = model.edge_of(a, b);
            if (!is_fold[static_cast<std::size_t>(e)]) net.cut_edges.push_back({poly[k], poly[(k + 1) % ring.size()], e, f});
        }
    }
    rebuild_tabs(net, model, tabs);

    if (policy == OverlapPolicy::reject) {
        const double min_area = min_face_area(model);
        for (int a = 0; a < nf; ++a)
            for (int b = a + 1; b < nf; ++b)
                if (has_overlap(net.faces[static_cast<std::size_t>(a)].polygon, net.faces[static_cast<std::size_t>(b)].polygon, min_area))
                    throw NetOverlapError(a, b);
    }
    return net;
}

NetReport validate_net(const NetLayout& net, const PolyhedronModel& model) {
    NetReport r;
    const int nf = model.face_count();
    if (static_cast<int>(net.faces.size()) != nf) {
        r.isometry = false;
        r.failures.push_back("net does not place every face exactly once");
        return r;
    }

    for (int f = 0; f < nf; ++f) {
        const auto& ring = model.faces()[static_cast<std::size_t>(f)];
        const auto& poly = net.faces[static_cast<std::size_t>(f)].polygon;
        if (poly.size() != ring.size()) {
            r.isometry = false;
            r.failures.push_back("face " + std::to_string(f) + ": vertex count mismatch");
            continue;
        }
        for (std::size_t k = 0; k < ring.size(); ++k) {
            const double l3 = norm(model.vertices()[static_cast<std::size_t>(ring[(k + 1) % ring.size()])] -
                                   model.vertices()[static_cast<std::size_t>(ring[k])]);
            const double l2 = norm(poly[(k + 1) % poly.size()] - poly[k]);
            if (std::abs(l2 - l3) > 1e-9 * l3) {
                r.isometry = false;
                r.failures.push_back("face " + std::to_string(f) + ": edge " + std::to_string(k) + " length mismatch");
            }
        }
        // also rules out mirrored placements, which keep edge lengths
        if (polygon_area(poly) <= 0.0) {
            r.isometry = false;
            r.failures.push_back("face " + std::to_string(f) + ": placed clockwise");
        }
    }

    for (const TreeEdge& te : net.tree.edges) {
        const PolyEdge& pe = model.edges()[static_cast<std::size_t>(te.edge)];
        const auto& pring = model.faces()[static_cast<std::size_t>(te.parent)];
        const auto& cring = model.faces()[static_cast<std::size_t>(te.child)];
        const auto& pp = net.faces[static_cast<std::size_t>(te.parent)].polygon;
        const auto& cp = net.faces[static_cast<std::size_t>(te.child)].polygon;
        for (int v : {pe.v0, pe.v1}) {
            if (!(pp[ring_index(pring, v)] == cp[ring_index(cring, v)])) {
                r.fold_coincidence = false;
                r.failures.push_back("fold " + std::to_string(te.parent) + "-" + std::to_string(te.child) +
                                     ": endpoints do not coincide");
                break;
            }
        }
    }

    const double min_area = min_face_area(model);
    for (int a = 0; a < nf; ++a) {
        for (int b = a + 1; b < nf; ++b) {
            if (has_overlap(net.faces[static_cast<std::size_t>(a)].polygon, net.faces[static_cast<std::size_t>(b)].polygon, min_area)) {
                r.non_overlap = false;
                r.failures.push_back("faces " + std::to_string(a) + " and " + std::to_string(b) + " overlap");
            }
        }
    }

    for (const Tab& tab : net.tabs) {
        const std::vector<Vec2> outline(tab.outline.begin(), tab.outline.end());
        for (int f = 0; f < nf; ++f) {
            if (has_overlap(outline, net.faces[static_cast<std::size_t>(f)].polygon, min_area)) {
                r.tab_clearance = false;
                r.failures.push_back("tab on edge " + std::to_string(tab.edge) + " overlaps face " + std::to_string(f));
            }
        }
    }
    return r;
}

FacePlaneSpec placed_face_plane(const PolyhedronModel& model, const NetLayout& net, int face, double px_per_unit) {
    const FaceFrame& fr = model.frames().at(static_cast<std::size_t>(face));
    const PlacedFace& pf = net.faces.at(static_cast<std::size_t>(face));
    // (s, t) = R^T (q - T) in template coordinates, so p3 = c + q_u e1' + q_v e2'
    FacePlaneSpec spec;
    spec.center = fr.centroid;
    spec.e1 = pf.cos * fr.e1 - pf.sin * fr.e2;
    spec.e2 = pf.sin * fr.e1 + pf.cos * fr.e2;
    for (Vec2 p : pf.polygon) spec.polygon.push_back(p - pf.translation);
    spec.px_per_unit = px_per_unit;
    return spec;
}

}  // namespace panofold
