#pragma once

#include <array>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "panofold/geom.hpp"
#include "panofold/raster.hpp"

namespace panofold {

enum class Shape { cube, cuboctahedron };

// "cube" / "cuboctahedron"
std::string to_string(Shape shape);

// ---------------------------------------------------------------------------
// PolyhedronModel
// ---------------------------------------------------------------------------

struct PolyEdge {
    int v0 = 0;
    int v1 = 0;
    int face_a = 0;  // face_a < face_b
    int face_b = 0;
};

// Per-face plane frame. polygon holds the face ring in (e1, e2) coordinates relative to the
// centroid; e1 x e2 = normal, so rings that are counterclockwise from outside stay counterclockwise.
struct FaceFrame {
    Vec3 centroid;
    Vec3 normal;
    double offset = 0.0;  // centroid . normal
    Vec3 e1;
    Vec3 e2;
    std::vector<Vec2> polygon;
};

class PolyhedronModel {
public:
    // Faces are the vertex sets lying on each plane (normal, offset), ordered counterclockwise
    // when seen from outside. Throws std::invalid_argument when the result is not a closed
    // convex polyhedron (an edge not shared by exactly two faces, or V - E + F != 2).
    static PolyhedronModel from_planes(std::vector<Vec3> vertices, const std::vector<std::pair<Vec3, double>>& planes);

    [[nodiscard]] const std::vector<Vec3>& vertices() const { return vertices_; }
    [[nodiscard]] const std::vector<std::vector<int>>& faces() const { return faces_; }
    [[nodiscard]] const std::vector<PolyEdge>& edges() const { return edges_; }
    [[nodiscard]] const std::vector<FaceFrame>& frames() const { return frames_; }
    [[nodiscard]] int face_count() const { return static_cast<int>(faces_.size()); }

    // Index into edges() of the edge shared by faces f and g, or -1.
    [[nodiscard]] int edge_between(int f, int g) const;
    // Index of the edge joining vertices v0 and v1, or -1.
    [[nodiscard]] int edge_of(int v0, int v1) const;

    // Plane patch of face f in its own (e1, e2) frame.
    [[nodiscard]] FacePlaneSpec face_plane(int f, double px_per_unit) const;

private:
    std::vector<Vec3> vertices_;
    std::vector<std::vector<int>> faces_;
    std::vector<PolyEdge> edges_;
    std::vector<FaceFrame> frames_;
};

// Vertices (+-1, +-1, +-1); faces +X, -X, +Y, -Y, +Z, -Z.
PolyhedronModel make_cube();

// Vertices: permutations of (+-1, +-1, 0). Squares +X, -X, +Y, -Y, +Z, -Z first, then the
// triangles with normals (sx, sy, sz)/sqrt(3) in the order
// (+,+,+), (+,+,-), (+,-,+), (+,-,-), (-,+,+), (-,+,-), (-,-,+), (-,-,-).
PolyhedronModel make_cuboctahedron();

PolyhedronModel make_polyhedron(Shape shape);

// Face hit first by the ray from the origin along d: argmax (d . n_i) / h_i, ties within
// 1e-12 going to the lowest index.
int face_for_direction(const PolyhedronModel& model, const Vec3& d);

// Largest gnomonic radial scale factor sec^2(theta) over the face's vertices, where theta is
// the angle between the face normal and the vertex direction.
double face_distortion(const PolyhedronModel& model, int face);

// ---------------------------------------------------------------------------
// Unfolding
// ---------------------------------------------------------------------------

struct TreeEdge {
    int parent = 0;
    int child = 0;
    int edge = 0;  // index into PolyhedronModel::edges()

    friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

struct SpanningTree {
    int root = 0;
    std::vector<TreeEdge> edges;
};

// Hardcoded nets, part of the stable output contract.
//   cube: cross net rooted at -Z; +X, +Y, -X, -Y hang off -Z; +Z hangs off +X.
//   cuboctahedron: rooted at the (+,+,+) triangle, see polyhedra.cpp for the full list.
SpanningTree default_spanning_tree(Shape shape);

// Uniformly shuffled Kruskal tree over the face-adjacency graph, oriented from a random root.
SpanningTree random_spanning_tree(const PolyhedronModel& model, std::mt19937_64& rng);

struct TabStyle {
    double height = 0.3;          // fraction of the edge length, (0, 0.5]
    double shoulder_deg = 45.0;

    void validate() const;
};

// Placed face: polygon[k] is the net position of model.faces()[face][k]. The placement maps
// the face's template coordinates q to R(cos, sin) * q + translation.
struct PlacedFace {
    int face = 0;
    std::vector<Vec2> polygon;
    double cos = 1.0;
    double sin = 0.0;
    Vec2 translation;
};

struct NetSegment {
    Vec2 a;
    Vec2 b;
    int edge = 0;  // 3D edge index
    int face = 0;  // face whose boundary this instance belongs to
};

// Trapezoid glue flap: outline[0..1] is the base on the cut edge, outline[2..3] the top.
struct Tab {
    int edge = 0;
    int face = 0;
    std::array<Vec2, 4> outline;
};

struct NetLayout {
    std::vector<PlacedFace> faces;  // indexed by face id
    SpanningTree tree;
    std::vector<NetSegment> fold_edges;
    std::vector<NetSegment> cut_edges;
    std::vector<Tab> tabs;

    struct Bounds {
        Vec2 min;
        Vec2 max;
    };
    // Bounding box over faces and tabs.
    [[nodiscard]] Bounds bounds() const;
};

class InvalidTreeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NetOverlapError : public std::runtime_error {
public:
    NetOverlapError(int face_a, int face_b);
    int face_a;
    int face_b;
};

enum class OverlapPolicy { reject, allow };

// Throws InvalidTreeError when tree is not a spanning tree of the face-adjacency graph and,
// under OverlapPolicy::reject, NetOverlapError for the first overlapping face pair.
NetLayout unfold(const PolyhedronModel& model, const SpanningTree& tree, const TabStyle& tabs = {},
                 OverlapPolicy policy = OverlapPolicy::reject);

// Recomputes net.tabs for a different tab style (one tab per cut pair, on the lower face index).
void rebuild_tabs(NetLayout& net, const PolyhedronModel& model, const TabStyle& style);

struct NetReport {
    bool isometry = true;
    bool fold_coincidence = true;
    bool non_overlap = true;
    bool tab_clearance = true;
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const { return isometry && fold_coincidence && non_overlap && tab_clearance; }
};

NetReport validate_net(const NetLayout& net, const PolyhedronModel& model);

// Plane patch of a placed face expressed in net coordinates (relative to its placed centroid):
// render it and the raster lands axis-aligned on the net.
FacePlaneSpec placed_face_plane(const PolyhedronModel& model, const NetLayout& net, int face, double px_per_unit);

double polygon_area(const std::vector<Vec2>& poly);

// Area of the intersection of two convex polygons of either winding.
double convex_intersection_area(const std::vector<Vec2>& a, const std::vector<Vec2>& b);

}  // namespace panofold
