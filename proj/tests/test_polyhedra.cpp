#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "panofold/polyhedra.hpp"

using namespace panofold;
using oracle::kPi;

namespace {

// Separating-axis test for convex polygons: true when their interiors are disjoint
// (touching along an edge or at a vertex counts as disjoint).
bool interiors_disjoint(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
    for (const auto* poly : {&a, &b}) {
        for (std::size_t i = 0; i < poly->size(); ++i) {
            const Vec2 e = (*poly)[(i + 1) % poly->size()] - (*poly)[i];
            const Vec2 n{-e.y, e.x};
            double amin = 1e300, amax = -1e300, bmin = 1e300, bmax = -1e300;
            for (Vec2 p : a) amin = std::min(amin, dot(n, p)), amax = std::max(amax, dot(n, p));
            for (Vec2 p : b) bmin = std::min(bmin, dot(n, p)), bmax = std::max(bmax, dot(n, p));
            const double tol = 1e-9 * norm(n);
            if (amax <= bmin + tol || bmax <= amin + tol) return true;
        }
    }
    return false;
}

bool faces_disjoint(const NetLayout& net) {
    for (std::size_t i = 0; i < net.faces.size(); ++i)
        for (std::size_t j = i + 1; j < net.faces.size(); ++j)
            if (!interiors_disjoint(net.faces[i].polygon, net.faces[j].polygon)) return false;
    return true;
}

Vec3 random_dir(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    for (;;) {
        const Vec3 v{g(rng), g(rng), g(rng)};
        if (norm(v) > 1e-6) return normalized(v);
    }
}

std::vector<oracle::V3> face_vertices(const PolyhedronModel& m, int f) {
    std::vector<oracle::V3> out;
    for (int v : m.faces()[static_cast<std::size_t>(f)]) {
        const Vec3 p = m.vertices()[static_cast<std::size_t>(v)];
        out.push_back({p.x, p.y, p.z});
    }
    return out;
}

double face_solid_angle(const PolyhedronModel& m, int f) {
    const auto vs = face_vertices(m, f);
    double total = 0.0;
    for (std::size_t k = 1; k + 1 < vs.size(); ++k) total += oracle::triangle_solid_angle(vs[0], vs[k], vs[k + 1]);
    return total;
}

}  // namespace

TEST_SUITE("polyhedra") {

TEST_CASE("cube model") {
    const PolyhedronModel m = make_cube();
    CHECK(m.vertices().size() == 8);
    CHECK(m.edges().size() == 12);
    CHECK(m.face_count() == 6);
    CHECK(static_cast<int>(m.vertices().size()) - static_cast<int>(m.edges().size()) + m.face_count() == 2);
    const std::array<Vec3, 6> normals{Vec3{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    for (int f = 0; f < 6; ++f) {
        const FaceFrame& fr = m.frames()[static_cast<std::size_t>(f)];
        CHECK(norm(fr.normal - normals[static_cast<std::size_t>(f)]) <= 1e-15);
        CHECK(fr.offset == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(m.faces()[static_cast<std::size_t>(f)].size() == 4);
    }
    for (const PolyEdge& e : m.edges()) {
        CHECK(norm(m.vertices()[static_cast<std::size_t>(e.v0)] - m.vertices()[static_cast<std::size_t>(e.v1)]) ==
              doctest::Approx(2.0).epsilon(1e-15));
        CHECK(e.v0 < e.v1);
        CHECK(e.face_a < e.face_b);
    }
    for (const Vec3& v : m.vertices()) CHECK((std::abs(v.x) == 1 && std::abs(v.y) == 1 && std::abs(v.z) == 1));
}

TEST_CASE("cuboctahedron model") {
    const PolyhedronModel m = make_cuboctahedron();
    CHECK(m.vertices().size() == 12);
    CHECK(m.edges().size() == 24);
    CHECK(m.face_count() == 14);
    CHECK(12 - 24 + 14 == 2);
    std::set<std::array<int, 3>> expected;
    for (int zero = 0; zero < 3; ++zero)
        for (int a : {-1, 1})
            for (int b : {-1, 1}) {
                std::array<int, 3> v{};
                v[static_cast<std::size_t>((zero + 1) % 3)] = a;
                v[static_cast<std::size_t>((zero + 2) % 3)] = b;
                expected.insert(v);
            }
    std::set<std::array<int, 3>> got;
    for (const Vec3& v : m.vertices())
        got.insert({static_cast<int>(std::lround(v.x)), static_cast<int>(std::lround(v.y)), static_cast<int>(std::lround(v.z))});
    CHECK(got == expected);

    for (const PolyEdge& e : m.edges())
        CHECK(norm(m.vertices()[static_cast<std::size_t>(e.v0)] - m.vertices()[static_cast<std::size_t>(e.v1)]) ==
              doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    for (int f = 0; f < 6; ++f) {
        CHECK(m.faces()[static_cast<std::size_t>(f)].size() == 4);
        CHECK(m.frames()[static_cast<std::size_t>(f)].offset == doctest::Approx(1.0).epsilon(1e-15));
    }
    const std::array<std::array<int, 3>, 8> signs{{{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1},
                                                   {-1, 1, 1}, {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}}};
    for (int k = 0; k < 8; ++k) {
        const FaceFrame& fr = m.frames()[static_cast<std::size_t>(6 + k)];
        const auto& s = signs[static_cast<std::size_t>(k)];
        CHECK(m.faces()[static_cast<std::size_t>(6 + k)].size() == 3);
        CHECK(norm(fr.normal - (1.0 / std::sqrt(3.0)) * Vec3{double(s[0]), double(s[1]), double(s[2])}) <= 1e-15);
        CHECK(fr.offset == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-15));
    }
    // the (+,+,+) triangle is (1,1,0), (1,0,1), (0,1,1), all on x + y + z = 2
    for (int v : m.faces()[6]) {
        const Vec3 p = m.vertices()[static_cast<std::size_t>(v)];
        CHECK(p.x + p.y + p.z == doctest::Approx(2.0));
    }
}

TEST_CASE("model invariants: coplanar, outward, counterclockwise, orthonormal frames") {
    for (const PolyhedronModel& m : {make_cube(), make_cuboctahedron()}) {
        for (int f = 0; f < m.face_count(); ++f) {
            const FaceFrame& fr = m.frames()[static_cast<std::size_t>(f)];
            CHECK(dot(fr.centroid, fr.normal) > 0.0);
            CHECK(std::abs(dot(fr.e1, fr.e2)) <= 1e-12);
            CHECK(std::abs(dot(fr.e1, fr.normal)) <= 1e-12);
            CHECK(std::abs(dot(fr.e2, fr.normal)) <= 1e-12);
            CHECK(norm(cross(fr.e1, fr.e2) - fr.normal) <= 1e-12);
            const auto& ring = m.faces()[static_cast<std::size_t>(f)];
            for (int v : ring) CHECK(std::abs(dot(m.vertices()[static_cast<std::size_t>(v)], fr.normal) - fr.offset) <= 1e-9);
            // counterclockwise seen from outside
            const Vec3 a = m.vertices()[static_cast<std::size_t>(ring[0])];
            const Vec3 b = m.vertices()[static_cast<std::size_t>(ring[1])];
            const Vec3 c = m.vertices()[static_cast<std::size_t>(ring[2])];
            CHECK(dot(cross(b - a, c - b), fr.normal) > 0.0);
            CHECK(polygon_area(fr.polygon) > 0.0);
            // frame polygon is the ring in (e1, e2) coordinates
            for (std::size_t k = 0; k < ring.size(); ++k) {
                const Vec3 p = fr.centroid + fr.polygon[k].x * fr.e1 + fr.polygon[k].y * fr.e2;
                CHECK(norm(p - m.vertices()[static_cast<std::size_t>(ring[k])]) <= 1e-12);
            }
            const FacePlaneSpec spec = m.face_plane(f, 10.0);
            CHECK(spec.center == fr.centroid);
            CHECK(spec.polygon == fr.polygon);
            CHECK(spec.px_per_unit == 10.0);
        }
        for (int e = 0; e < static_cast<int>(m.edges().size()); ++e) {
            const PolyEdge& pe = m.edges()[static_cast<std::size_t>(e)];
            CHECK(m.edge_between(pe.face_a, pe.face_b) == e);
            CHECK(m.edge_between(pe.face_b, pe.face_a) == e);
            CHECK(m.edge_of(pe.v0, pe.v1) == e);
            CHECK(m.edge_of(pe.v1, pe.v0) == e);
        }
    }
    CHECK(make_cube().edge_between(0, 1) == -1);
}

TEST_CASE("from_planes rejects an open shell") {
    const PolyhedronModel cube = make_cube();
    std::vector<std::pair<Vec3, double>> planes;
    for (int f = 0; f < 5; ++f) planes.push_back({cube.frames()[static_cast<std::size_t>(f)].normal, 1.0});
    CHECK_THROWS_AS(PolyhedronModel::from_planes(cube.vertices(), planes), std::invalid_argument);
}

TEST_CASE("face_for_direction examples") {
    const PolyhedronModel cube = make_cube();
    CHECK(face_for_direction(cube, {1, 0, 0}) == 0);
    CHECK(face_for_direction(cube, {-1, 0, 0}) == 1);
    CHECK(face_for_direction(cube, {0, 0, -1}) == 5);
    CHECK(face_for_direction(cube, normalized({1, 1, 0})) == 0);
    CHECK(face_for_direction(cube, normalized({-1, 1, 0})) == 1);
    CHECK(face_for_direction(cube, normalized({1, 1, 1})) == 0);

    const PolyhedronModel co = make_cuboctahedron();
    const Vec3 d = normalized({1, 1, 1});
    // ratio table: squares 1/sqrt(3), the (+,+,+) triangle (1)/(2/sqrt(3)) = sqrt(3)/2
    int best = -1;
    double best_ratio = -1e9;
    for (int f = 0; f < co.face_count(); ++f) {
        const FaceFrame& fr = co.frames()[static_cast<std::size_t>(f)];
        const double r = dot(d, fr.normal) / fr.offset;
        if (r > best_ratio + 1e-12) best_ratio = r, best = f;
    }
    CHECK(best == 6);
    CHECK(best_ratio == doctest::Approx(std::sqrt(3.0) / 2.0));
    CHECK(face_for_direction(co, d) == 6);
    CHECK(face_for_direction(co, {0, 0, 1}) == 4);
    CHECK(face_for_direction(co, normalized({-1, -1, -1})) == 13);
}

TEST_CASE("coverage and projection consistency") {
    std::mt19937_64 rng(101);
    for (const PolyhedronModel& m : {make_cube(), make_cuboctahedron()}) {
        const int n = 100000;
        std::vector<int> hits(static_cast<std::size_t>(m.face_count()), 0);
        for (int i = 0; i < n; ++i) {
            const Vec3 d = random_dir(rng);
            const int f = face_for_direction(m, d);
            REQUIRE(f >= 0);
            REQUIRE(f < m.face_count());
            ++hits[static_cast<std::size_t>(f)];
            // pierce point of the ray lies in the face and strictly inside no other face
            int containing = 0;
            for (int g = 0; g < m.face_count(); ++g) {
                const FaceFrame& fr = m.frames()[static_cast<std::size_t>(g)];
                const double dn = dot(d, fr.normal);
                if (dn <= 0.0) continue;
                const Vec3 p = (fr.offset / dn) * d - fr.centroid;
                const Vec2 q{dot(p, fr.e1), dot(p, fr.e2)};
                double min_side = 1e300;
                for (std::size_t k = 0; k < fr.polygon.size(); ++k)
                    min_side = std::min(min_side, cross(fr.polygon[(k + 1) % fr.polygon.size()] - fr.polygon[k], q - fr.polygon[k]));
                if (g == f) REQUIRE(min_side >= -1e-9);
                else if (min_side > 1e-9) ++containing;
            }
            REQUIRE(containing == 0);
        }
        double total = 0.0;
        for (int f = 0; f < m.face_count(); ++f) {
            const double p = face_solid_angle(m, f) / (4.0 * kPi);
            total += p;
            const double sigma = std::sqrt(n * p * (1.0 - p));
            CHECK(std::abs(hits[static_cast<std::size_t>(f)] - n * p) <= 3.0 * sigma);
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(face_solid_angle(make_cube(), 0) == doctest::Approx(4.0 * kPi / 6.0).epsilon(1e-12));
}

TEST_CASE("face distortion") {
    const PolyhedronModel cube = make_cube();
    const PolyhedronModel co = make_cuboctahedron();
    // sec^2 of the angle between the normal and each vertex, from raw coordinates
    auto oracle_distortion = [](const PolyhedronModel& m, int f) {
        double worst = 0.0;
        for (const auto& v : face_vertices(m, f)) {
            const Vec3 n = m.frames()[static_cast<std::size_t>(f)].normal;
            const double c = (v[0] * n.x + v[1] * n.y + v[2] * n.z) / std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
            worst = std::max(worst, 1.0 / (c * c));
        }
        return worst;
    };
    for (int f = 0; f < 6; ++f) {
        CHECK(std::abs(face_distortion(cube, f) - 3.0) <= 1e-12);
        CHECK(std::abs(oracle_distortion(cube, f) - 3.0) <= 1e-12);
        CHECK(std::abs(face_distortion(co, f) - 2.0) <= 1e-12);
    }
    for (int f = 6; f < 14; ++f) {
        CHECK(std::abs(face_distortion(co, f) - 1.5) <= 1e-12);
        CHECK(std::abs(oracle_distortion(co, f) - 1.5) <= 1e-12);
    }
    double co_max = 0.0, cube_max = 0.0;
    for (int f = 0; f < 14; ++f) co_max = std::max(co_max, face_distortion(co, f));
    for (int f = 0; f < 6; ++f) cube_max = std::max(cube_max, face_distortion(cube, f));
    CHECK(co_max < cube_max);
}

TEST_CASE("default spanning trees") {
    const SpanningTree ct = default_spanning_tree(Shape::cube);
    CHECK(ct.edges.size() == 5);
    CHECK(ct.root == 5);
    std::set<std::pair<int, int>> links;
    for (const TreeEdge& e : ct.edges) links.insert({e.parent, e.child});
    CHECK(links == std::set<std::pair<int, int>>{{5, 0}, {5, 2}, {5, 1}, {5, 3}, {0, 4}});

    const SpanningTree ot = default_spanning_tree(Shape::cuboctahedron);
    CHECK(ot.edges.size() == 13);
    CHECK(ot.root == 6);
}

TEST_CASE("unfolding the default nets") {
    struct Expect {
        Shape shape;
        std::size_t faces, folds, cuts, tabs;
    };
    for (const Expect& x : {Expect{Shape::cube, 6, 5, 14, 7}, Expect{Shape::cuboctahedron, 14, 13, 22, 11}}) {
        const PolyhedronModel m = make_polyhedron(x.shape);
        const NetLayout net = unfold(m, default_spanning_tree(x.shape));
        CHECK(net.faces.size() == x.faces);
        CHECK(net.fold_edges.size() == x.folds);
        CHECK(net.cut_edges.size() == x.cuts);
        CHECK(net.tabs.size() == x.tabs);

        const NetReport r = validate_net(net, m);
        CHECK(r.ok());
        CHECK(r.failures.empty());
        CHECK(faces_disjoint(net));

        // every 3D edge: once as a fold, or twice as a cut
        std::map<int, int> folds, cuts;
        for (const auto& s : net.fold_edges) ++folds[s.edge];
        for (const auto& s : net.cut_edges) ++cuts[s.edge];
        for (int e = 0; e < static_cast<int>(m.edges().size()); ++e) {
            const bool fold = folds.count(e) == 1 && folds[e] == 1 && cuts.count(e) == 0;
            const bool cut = folds.count(e) == 0 && cuts.count(e) == 1 && cuts[e] == 2;
            CHECK((fold || cut));
        }
        // one tab per cut pair, on the lower face index, with no tab crossing a face or another tab
        std::set<int> tab_edges;
        for (const Tab& t : net.tabs) {
            CHECK(tab_edges.insert(t.edge).second);
            CHECK(t.face == m.edges()[static_cast<std::size_t>(t.edge)].face_a);
            const std::vector<Vec2> outline(t.outline.begin(), t.outline.end());
            CHECK(polygon_area(outline) < 0.0);  // base follows the face ring, so the flap winds clockwise
            std::vector<Vec2> ccw(outline.rbegin(), outline.rend());
            for (const auto& f : net.faces) CHECK(interiors_disjoint(ccw, f.polygon));
            for (const Tab& u : net.tabs) {
                if (&u == &t) continue;
                std::vector<Vec2> other(u.outline.rbegin(), u.outline.rend());
                CHECK(interiors_disjoint(ccw, other));
            }
            // 45 degree shoulders, height 0.3 of the edge
            const double len = norm(t.outline[1] - t.outline[0]);
            const double h = std::abs(cross(t.outline[1] - t.outline[0], t.outline[3] - t.outline[0])) / len;
            CHECK(h == doctest::Approx(0.3 * len));
            CHECK(norm(t.outline[2] - t.outline[3]) == doctest::Approx(len - 2.0 * h));
        }
    }
}

TEST_CASE("cube cross net geometry") {
    const PolyhedronModel m = make_cube();
    const NetLayout net = unfold(m, default_spanning_tree(Shape::cube), TabStyle{0.3, 45.0});
    NetLayout bare = net;
    bare.tabs.clear();
    const auto b = bare.bounds();
    const double w = b.max.x - b.min.x, h = b.max.y - b.min.y;
    CHECK(std::min(w, h) == doctest::Approx(6.0));
    CHECK(std::max(w, h) == doctest::Approx(8.0));
}

TEST_CASE("unfold rejects trees that do not span") {
    const PolyhedronModel m = make_cube();
    CHECK_THROWS_AS(unfold(m, SpanningTree{0, {}}), InvalidTreeError);
    SpanningTree t = default_spanning_tree(Shape::cube);
    t.edges.back() = TreeEdge{0, 2, m.edge_between(0, 2)};  // +Z no longer reached, +Y twice
    CHECK_THROWS_AS(unfold(m, t), InvalidTreeError);
    t = default_spanning_tree(Shape::cube);
    t.edges[0].edge = m.edge_between(5, 2);  // wrong edge for 5-0
    CHECK_THROWS_AS(unfold(m, t), InvalidTreeError);
    t = default_spanning_tree(Shape::cube);
    t.root = 9;
    CHECK_THROWS_AS(unfold(m, t), InvalidTreeError);
    CHECK_THROWS_AS(unfold(m, default_spanning_tree(Shape::cube), TabStyle{0.6, 45.0}), std::invalid_argument);
}

TEST_CASE("validate_net flags a displaced face") {
    const PolyhedronModel m = make_cube();
    NetLayout net = unfold(m, default_spanning_tree(Shape::cube));
    for (Vec2& p : net.faces[4].polygon) p = p + Vec2{0.1, 0.0};
    const NetReport r = validate_net(net, m);
    CHECK(r.isometry);
    CHECK_FALSE(r.fold_coincidence);
    CHECK_FALSE(r.ok());

    NetLayout mirrored = unfold(m, default_spanning_tree(Shape::cube));
    for (Vec2& p : mirrored.faces[2].polygon) p.x = -p.x;
    CHECK_FALSE(validate_net(mirrored, m).isometry);

    // a tab pushed into its own face
    NetLayout folded = unfold(m, default_spanning_tree(Shape::cube));
    Tab& t = folded.tabs.front();
    const Vec2 inward = t.outline[0] - t.outline[3] + (t.outline[1] - t.outline[2]);
    for (Vec2& p : t.outline) p = p + 0.5 * inward;
    const NetReport tr = validate_net(folded, m);
    CHECK_FALSE(tr.tab_clearance);
    CHECK(tr.non_overlap);
}

TEST_CASE("no cuboctahedron spanning tree overlaps") {
    // exhaustive: every 13-edge subset of the face-adjacency graph that is a spanning tree
    const PolyhedronModel m = make_cuboctahedron();
    const auto& edges = m.edges();
    const int nf = m.face_count();
    std::vector<char> pick(edges.size(), 0);
    std::fill(pick.end() - (nf - 1), pick.end(), 1);
    long trees = 0, overlapping = 0;
    do {
        std::vector<int> parent(static_cast<std::size_t>(nf));
        std::iota(parent.begin(), parent.end(), 0);
        const auto root = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
            return x;
        };
        bool acyclic = true;
        for (std::size_t i = 0; i < edges.size() && acyclic; ++i) {
            if (!pick[i]) continue;
            const int a = root(edges[i].face_a), b = root(edges[i].face_b);
            acyclic = a != b;
            parent[static_cast<std::size_t>(a)] = b;
        }
        if (!acyclic) continue;
        ++trees;
        // orient it from face 0
        SpanningTree t;
        std::vector<char> seen(static_cast<std::size_t>(nf), 0);
        std::vector<int> queue{0};
        seen[0] = 1;
        for (std::size_t k = 0; k < queue.size(); ++k)
            for (std::size_t i = 0; i < edges.size(); ++i) {
                if (!pick[i]) continue;
                const int f = queue[k];
                const int g = edges[i].face_a == f ? edges[i].face_b : edges[i].face_b == f ? edges[i].face_a : -1;
                if (g < 0 || seen[static_cast<std::size_t>(g)]) continue;
                seen[static_cast<std::size_t>(g)] = 1;
                queue.push_back(g);
                t.edges.push_back({f, g, static_cast<int>(i)});
            }
        if (!faces_disjoint(unfold(m, t, {}, OverlapPolicy::allow))) ++overlapping;
    } while (std::next_permutation(pick.begin(), pick.end()));
    CHECK(trees == 331776);
    CHECK(overlapping == 0);
}

TEST_CASE("overlap search on a stretched cuboctahedron") {
    // same combinatorics as the cuboctahedron, scaled (1, 2, 4); unlike the regular solid
    // some of its edge unfoldings overlap
    const Vec3 k{1, 2, 4};
    const PolyhedronModel regular = make_cuboctahedron();
    std::vector<Vec3> v;
    for (const Vec3& p : regular.vertices()) v.push_back({k.x * p.x, k.y * p.y, k.z * p.z});
    std::vector<std::pair<Vec3, double>> planes;
    for (const FaceFrame& fr : regular.frames()) {
        const Vec3 n{fr.normal.x / k.x, fr.normal.y / k.y, fr.normal.z / k.z};
        planes.push_back({normalized(n), fr.offset / norm(n)});
    }
    const PolyhedronModel m = PolyhedronModel::from_planes(v, planes);
    REQUIRE(m.face_count() == 14);

    std::mt19937_64 rng(2024);
    bool found = false;
    for (int i = 0; i < 5000 && !found; ++i) {
        const SpanningTree t = random_spanning_tree(m, rng);
        const NetLayout net = unfold(m, t, {}, OverlapPolicy::allow);
        if (faces_disjoint(net)) continue;
        found = true;
        const NetReport r = validate_net(net, m);
        CHECK_FALSE(r.non_overlap);
        CHECK_FALSE(r.ok());
        CHECK(r.isometry);
        CHECK(r.fold_coincidence);
        try {
            (void)unfold(m, t);
            FAIL("expected NetOverlapError");
        } catch (const NetOverlapError& e) {
            CHECK(e.face_a < e.face_b);
            CHECK(convex_intersection_area(net.faces[static_cast<std::size_t>(e.face_a)].polygon,
                                           net.faces[static_cast<std::size_t>(e.face_b)].polygon) > 0.0);
        }
    }
    CHECK(found);
}

TEST_CASE("random non-overlapping nets are isometric and fold-coincident") {
    std::mt19937_64 rng(77);
    for (const PolyhedronModel& m : {make_cube(), make_cuboctahedron()}) {
        int accepted = 0;
        for (int i = 0; i < 20000 && accepted < 50; ++i) {
            const SpanningTree t = random_spanning_tree(m, rng);
            REQUIRE(static_cast<int>(t.edges.size()) == m.face_count() - 1);
            const NetLayout net = unfold(m, t, {}, OverlapPolicy::allow);
            if (!faces_disjoint(net)) continue;
            ++accepted;
            const NetReport r = validate_net(net, m);
            CHECK(r.isometry);
            CHECK(r.fold_coincidence);
            CHECK(r.non_overlap);
            CHECK(net.tabs.size() == m.edges().size() - t.edges.size());
        }
        CHECK(accepted == 50);
    }
}

TEST_CASE("placed face planes render in net coordinates") {
    const PolyhedronModel m = make_cuboctahedron();
    const NetLayout net = unfold(m, default_spanning_tree(Shape::cuboctahedron));
    for (int f = 0; f < m.face_count(); ++f) {
        const FacePlaneSpec spec = placed_face_plane(m, net, f, 50.0);
        const PlacedFace& pf = net.faces[static_cast<std::size_t>(f)];
        const auto& ring = m.faces()[static_cast<std::size_t>(f)];
        CHECK(std::abs(dot(spec.e1, spec.e2)) <= 1e-12);
        for (std::size_t k = 0; k < ring.size(); ++k) {
            const Vec3 p = spec.center + spec.polygon[k].x * spec.e1 + spec.polygon[k].y * spec.e2;
            CHECK(norm(p - m.vertices()[static_cast<std::size_t>(ring[k])]) <= 1e-9);
            CHECK(norm(spec.polygon[k] + pf.translation - pf.polygon[k]) <= 1e-9);
        }
    }
}

TEST_CASE("convex intersection area") {
    const std::vector<Vec2> a{{0, 0}, {2, 0}, {2, 2}, {0, 2}};
    const std::vector<Vec2> b{{1, 1}, {3, 1}, {3, 3}, {1, 3}};
    const std::vector<Vec2> c{{2, 0}, {4, 0}, {4, 2}, {2, 2}};
    CHECK(convex_intersection_area(a, b) == doctest::Approx(1.0));
    CHECK(convex_intersection_area(a, c) == doctest::Approx(0.0));
    CHECK(polygon_area(a) == doctest::Approx(4.0));
}

}  // TEST_SUITE
