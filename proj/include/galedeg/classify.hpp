#pragma once
// Complete classification of point configurations of degree <= 1, with
// structural witnesses: simplex, low dimension, polygon without interior
// points, prism over a simplex with points on the vertical edges, simplex
// with points on the edges at one vertex, pyramids over any of these, and an
// interior-face witness when the degree is at least 2.

#include <memory>
#include <optional>

#include "galedeg/configuration.hpp"

namespace galedeg {

enum class ClassKind {
    SIMPLEX_DEG0,
    DIM_LE_1,
    POLYGON_NO_INTERIOR,
    PRISM_OVER_SIMPLEX_EDGE_POINTS,
    SIMPLEX_EDGE_POINTS_AT_VERTEX,
    PYRAMID,
    NOT_DEG_LE_1,
};
const char* class_kind_name(ClassKind k);

// One vertical edge of a prism over a simplex: matched top and bottom
// vertices plus the non-vertex labels strictly inside the edge. params[k] is
// the parameter of points[k] on the segment (p = top + t (bottom - top),
// 0 < t < 1); support is an affine functional on the base coordinates
// vanishing exactly on the edge members and positive elsewhere.
struct VerticalEdge {
    int top = 0;
    int bottom = 0;
    std::vector<int> points;
    std::vector<Rat> params;
    Hyperplane support;
};
struct PrismData {
    std::vector<int> top, bottom;  // vertex labels of the two simplex facets
    Hyperplane top_support, bottom_support;
    std::vector<VerticalEdge> edges;
};

struct EdgeAssignment {
    int far_vertex = 0;
    std::vector<int> points;  // strictly inside the edge (apex, far_vertex)
    std::vector<Rat> params;  // p = apex + t (far_vertex - apex), 0 < t < 1
};
struct SimplexEdgeData {
    int apex = 0;
    std::vector<int> vertices;  // all d+1 hull vertices, ascending
    std::vector<EdgeAssignment> edges;  // ascending by far vertex
};

struct Classification {
    ClassKind kind = ClassKind::NOT_DEG_LE_1;
    int degree = 0;
    // Top-level node only: repeated-point multiplicities of the input.
    std::vector<std::pair<int, int>> multiplicities;
    // PYRAMID: removed apices, replayable charts, classification of the base.
    std::vector<int> apices;
    std::vector<PyramidStep> strip_steps;
    std::shared_ptr<const Classification> inner;
    // NOT_DEG_LE_1: interior face of size <= d - 1.
    std::vector<int> witness_face;
    std::optional<PrismData> prism;
    std::optional<SimplexEdgeData> simplex_edges;
};

// Deduplicates, routes on the degree, strips pyramid apices in the degree-1
// case and runs the prism recognizer, then the simplex-edge recognizer. The
// classification theorem makes the recognizers exhaustive for degree 1 in
// dimension >= 3; both failing is an internal error.
Classification classify_low_degree(const PointConfiguration& a);

// Hull vertex labels (points outside the hull of the others), ascending
// positions.
std::vector<int> hull_vertices(const PointConfiguration& a);

} // namespace galedeg
