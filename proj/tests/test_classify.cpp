// The complete classification of configurations of degree at most one, with
// substitution checks of every structural witness it returns.
#include "doctest.h"

#include <algorithm>

#include "galedeg/classify.hpp"
#include "galedeg/degree.hpp"
#include "galedeg/generators.hpp"

using namespace galedeg;

namespace {

QVec q(std::initializer_list<long> xs) {
    QVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

Rat eval_homog(const QVec& normal, const QVec& point) {
    Rat val = normal.back();
    for (std::size_t k = 0; k + 1 < normal.size(); ++k) val += normal[k] * point[k];
    return val;
}

// The functional vanishes exactly on `zero_labels` and is positive elsewhere.
void check_support(const PointConfiguration& a, const QVec& normal,
                   std::vector<int> zero_labels) {
    REQUIRE(normal.size() == a.dim() + 1);
    std::sort(zero_labels.begin(), zero_labels.end());
    for (std::size_t i = 0; i < a.count(); ++i) {
        Rat val = eval_homog(normal, a.at(i));
        bool member = std::binary_search(zero_labels.begin(), zero_labels.end(), a.label_at(i));
        if (member) CHECK(val == 0);
        else CHECK(val > 0);
    }
}

} // namespace

TEST_CASE("simplices and low dimension") {
    Classification tri = classify_low_degree(
        PointConfiguration::checked({0, 1, 2}, {q({0, 0}), q({1, 0}), q({0, 1})}, 2));
    CHECK(tri.kind == ClassKind::SIMPLEX_DEG0);
    CHECK(tri.degree == 0);

    Classification tet = classify_low_degree(PointConfiguration::checked(
        {0, 1, 2, 3}, {q({0, 0, 0}), q({1, 0, 0}), q({0, 1, 0}), q({0, 0, 1})}, 3));
    CHECK(tet.kind == ClassKind::SIMPLEX_DEG0);

    Classification dot =
        classify_low_degree(PointConfiguration::checked({0}, {QVec{}}, 0));
    CHECK(dot.kind == ClassKind::SIMPLEX_DEG0);
    CHECK(dot.degree == 0);

    Classification line = classify_low_degree(
        PointConfiguration::checked({0, 1, 2}, {q({0}), q({1}), q({2})}, 1));
    CHECK(line.kind == ClassKind::DIM_LE_1);
    CHECK(line.degree == 1);
}

TEST_CASE("planar configurations without interior points") {
    Classification pent = classify_low_degree(pentagon_config());
    CHECK(pent.kind == ClassKind::POLYGON_NO_INTERIOR);
    CHECK(pent.degree == 1);

    // the square is planar, so it routes to the polygon class, not the prism
    Classification sq = classify_low_degree(prism_config(2));
    CHECK(sq.kind == ClassKind::POLYGON_NO_INTERIOR);
    CHECK(sq.degree == 1);

    // an interior point pushes the degree to two, witnessed by that point
    Classification center = classify_low_degree(PointConfiguration::checked(
        {0, 1, 2, 3, 4}, {q({0, 0}), q({2, 0}), q({2, 2}), q({0, 2}), q({1, 1})}, 2));
    CHECK(center.kind == ClassKind::NOT_DEG_LE_1);
    CHECK(center.degree == 2);
    CHECK(center.witness_face == std::vector<int>{4});
}

TEST_CASE("prisms over simplices, with points on vertical edges") {
    Classification pr = classify_low_degree(prism_config(3));
    CHECK(pr.kind == ClassKind::PRISM_OVER_SIMPLEX_EDGE_POINTS);
    CHECK(pr.degree == 1);
    REQUIRE(pr.prism.has_value());
    CHECK(pr.prism->top == std::vector<int>{0, 1, 2});
    CHECK(pr.prism->bottom == std::vector<int>{3, 4, 5});

    // a point one third of the way down a vertical edge is picked up
    PointConfiguration base = prism_config(3);
    std::vector<QVec> pts = base.coords();
    QVec third(base.dim());
    for (std::size_t k = 0; k < base.dim(); ++k)
        third[k] = base.at(0)[k] + (base.at(3)[k] - base.at(0)[k]) / 3;
    pts.push_back(third);
    PointConfiguration withpt =
        PointConfiguration::checked({0, 1, 2, 3, 4, 5, 6}, pts, 3);

    Classification c = classify_low_degree(withpt);
    CHECK(c.kind == ClassKind::PRISM_OVER_SIMPLEX_EDGE_POINTS);
    REQUIRE(c.prism.has_value());
    const PrismData& pd = *c.prism;
    check_support(withpt, pd.top_support.normal, {0, 1, 2});
    check_support(withpt, pd.bottom_support.normal, {3, 4, 5});
    REQUIRE(pd.edges.size() == 3);
    for (const VerticalEdge& e : pd.edges) {
        std::vector<int> members = {e.top, e.bottom};
        members.insert(members.end(), e.points.begin(), e.points.end());
        check_support(withpt, e.support.normal, members);
        // parameter substitution: p = top + t (bottom - top), 0 < t < 1
        REQUIRE(e.points.size() == e.params.size());
        const QVec& pt = withpt.at(withpt.pos_of(e.top));
        const QVec& pb = withpt.at(withpt.pos_of(e.bottom));
        for (std::size_t k = 0; k < e.points.size(); ++k) {
            CHECK(e.params[k] > 0);
            CHECK(e.params[k] < 1);
            const QVec& pp = withpt.at(withpt.pos_of(e.points[k]));
            for (std::size_t j = 0; j < withpt.dim(); ++j)
                CHECK(pp[j] == pt[j] + e.params[k] * (pb[j] - pt[j]));
        }
    }
    CHECK(pd.edges[0].top == 0);
    CHECK(pd.edges[0].bottom == 3);
    CHECK(pd.edges[0].points == std::vector<int>{6});
    CHECK(pd.edges[0].params == std::vector<Rat>{Rat(1, 3)});
    CHECK(pd.edges[1].points.empty());
    CHECK(pd.edges[2].points.empty());
}

TEST_CASE("simplex with edge points at a common vertex") {
    PointConfiguration es = edge_simplex_config(3);
    Classification c = classify_low_degree(es);
    CHECK(c.kind == ClassKind::SIMPLEX_EDGE_POINTS_AT_VERTEX);
    CHECK(c.degree == 1);
    REQUIRE(c.simplex_edges.has_value());
    const SimplexEdgeData& sd = *c.simplex_edges;
    CHECK(sd.apex == 0);
    CHECK(sd.vertices == std::vector<int>{0, 1, 2, 3});
    REQUIRE(sd.edges.size() == 3);
    const QVec& apex = es.at(es.pos_of(sd.apex));
    for (const EdgeAssignment& e : sd.edges) {
        REQUIRE(e.points.size() == e.params.size());
        const QVec& far = es.at(es.pos_of(e.far_vertex));
        for (std::size_t k = 0; k < e.points.size(); ++k) {
            CHECK(e.params[k] > 0);
            CHECK(e.params[k] < 1);
            const QVec& pp = es.at(es.pos_of(e.points[k]));
            for (std::size_t j = 0; j < es.dim(); ++j)
                CHECK(pp[j] == apex[j] + e.params[k] * (far[j] - apex[j]));
        }
    }
    CHECK(sd.edges[0].far_vertex == 1);
    CHECK(sd.edges[0].points == std::vector<int>{4});
    CHECK(sd.edges[0].params == std::vector<Rat>{Rat(1, 2)});
}

TEST_CASE("pyramids wrap the classification of their base") {
    PointConfiguration base = prism_config(3);
    std::vector<QVec> pts;
    for (const QVec& r : base.coords()) {
        QVec x = r;
        x.push_back(Rat(0));
        pts.push_back(x);
    }
    QVec apex(base.dim() + 1, Rat(0));
    apex[base.dim()] = 1;
    pts.push_back(apex);
    PointConfiguration pyr =
        PointConfiguration::checked({0, 1, 2, 3, 4, 5, 6}, pts, base.dim() + 1);

    Classification c = classify_low_degree(pyr);
    CHECK(c.kind == ClassKind::PYRAMID);
    CHECK(c.degree == 1);
    CHECK(c.apices == std::vector<int>{6});
    CHECK(c.strip_steps.size() == 1);
    REQUIRE(c.inner);
    CHECK(c.inner->kind == ClassKind::PRISM_OVER_SIMPLEX_EDGE_POINTS);
    REQUIRE(c.inner->prism.has_value());
    CHECK(c.inner->prism->top == std::vector<int>{0, 1, 2});
    // degree is preserved by pyramids
    CHECK(c.inner->degree == 1);
}

TEST_CASE("degree two and beyond carries an interior-face witness") {
    PointConfiguration a = lifted_config(2);
    Classification c = classify_low_degree(a);
    CHECK(c.kind == ClassKind::NOT_DEG_LE_1);
    CHECK(c.degree == 2);
    CHECK(c.witness_face == std::vector<int>{3, 6});
    CHECK(c.witness_face.size() <= a.dim() - 1);
    CHECK(is_interior_face(a, c.witness_face));
    CHECK(c.degree == degree_primal(a).degree);
}

TEST_CASE("repeated points are collapsed before routing") {
    PointConfiguration pent = pentagon_config();
    std::vector<QVec> pts = pent.coords();
    pts.push_back(pts[1]);
    Classification c = classify_low_degree(
        PointConfiguration::checked({0, 1, 2, 3, 4, 5}, pts, 2));
    CHECK(c.kind == ClassKind::POLYGON_NO_INTERIOR);
    CHECK(c.degree == 1);
    CHECK(c.multiplicities ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 1}, {3, 1}, {4, 1}});
}

TEST_CASE("hull vertices") {
    CHECK(hull_vertices(pentagon_config()) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(hull_vertices(edge_simplex_config(2)) == std::vector<int>{0, 1, 2});
    PointConfiguration sqc = PointConfiguration::checked(
        {0, 1, 2, 3, 4}, {q({0, 0}), q({2, 0}), q({2, 2}), q({0, 2}), q({1, 1})}, 2);
    CHECK(hull_vertices(sqc) == std::vector<int>{0, 1, 2, 3});
}
