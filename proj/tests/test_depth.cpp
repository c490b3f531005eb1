// Halfspace depth and Tverberg order of query points, their witnesses, the
// depth-to-order theorem record, and affine invariance.
#include "doctest.h"

#include <algorithm>

#include "galedeg/depth.hpp"
#include "galedeg/generators.hpp"
#include "galedeg/separation.hpp"

using namespace galedeg;

namespace {

QVec q(std::initializer_list<long> xs) {
    QVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

// The witness halfspace passes through x, and on_side is exactly the set of
// sample labels it contains, of size depth.
void check_depth_witness(const PointConfiguration& s, const QVec& x, const DepthReport& r) {
    if (s.dim() == 0) {
        CHECK_FALSE(r.witness.has_value());
        CHECK(r.on_side.size() == s.count());
        return;
    }
    REQUIRE(r.witness.has_value());
    CHECK(dot(r.witness->normal, x) == r.witness->offset);
    std::vector<int> inside;
    for (std::size_t i = 0; i < s.count(); ++i)
        if (dot(r.witness->normal, s.at(i)) >= r.witness->offset)
            inside.push_back(s.label_at(i));
    CHECK(inside == r.on_side);
    CHECK(inside.size() == static_cast<std::size_t>(r.depth));
}

// Parts are disjoint, cover count - unused labels, and each hull contains x.
void check_tverberg_parts(const PointConfiguration& s, const QVec& x, const TverbergReport& r) {
    CHECK(r.parts.size() == static_cast<std::size_t>(r.order));
    std::vector<int> seen;
    for (const std::vector<int>& part : r.parts) {
        REQUIRE(!part.empty());
        std::vector<QVec> translated;
        for (int lab : part) {
            CHECK(std::find(seen.begin(), seen.end(), lab) == seen.end());
            seen.push_back(lab);
            QVec t = s.at(s.pos_of(lab));
            for (std::size_t k = 0; k < s.dim(); ++k) t[k] -= x[k];
            translated.push_back(std::move(t));
        }
        CHECK(origin_position(translated, s.dim()).kind != OriginPosition::OUTSIDE);
    }
    std::sort(seen.begin(), seen.end());
    std::vector<int> all = s.labels();
    std::vector<int> unused;
    std::set_difference(all.begin(), all.end(), seen.begin(), seen.end(),
                        std::back_inserter(unused));
    CHECK(unused == r.unused);
}

void check_core_record(const CoreTverbergRecord& r) {
    int nd = static_cast<int>(r.count) - static_cast<int>(r.dim);
    CHECK(r.bound == 3 * r.depth - 2 * nd);
    CHECK(r.conjectured_bound == 2 * r.depth - nd);
    CHECK(r.satisfied == (r.order >= r.bound));
    CHECK(r.conjecture_holds == (r.order >= r.conjectured_bound));
    CHECK(r.satisfied);
}

} // namespace

TEST_CASE("pentagon query point of depth two") {
    PointConfiguration pent = pentagon_config();
    QVec x{Rat(100, 31), Rat(60, 31)};
    DepthReport d = halfspace_depth(pent, x);
    CHECK(d.depth == 2);
    CHECK(d.on_side == std::vector<int>{0, 1});
    check_depth_witness(pent, x, d);

    TverbergReport t = tverberg_order(pent, x);
    CHECK(t.order == 2);
    REQUIRE(t.parts.size() == 2);
    CHECK(t.parts[0] == std::vector<int>{0, 2});
    CHECK(t.parts[1] == std::vector<int>{1, 3});
    CHECK(t.unused == std::vector<int>{4});
    check_tverberg_parts(pent, x, t);
    check_core_record(check_core_tverberg(pent, x));
}

TEST_CASE("triangle queries: centroid, vertex, outside") {
    PointConfiguration tri =
        PointConfiguration::checked({0, 1, 2}, {q({0, 0}), q({3, 0}), q({0, 3})}, 2);

    QVec centroid{Rat(1), Rat(1)};
    DepthReport dc = halfspace_depth(tri, centroid);
    CHECK(dc.depth == 1);
    check_depth_witness(tri, centroid, dc);
    TverbergReport tc = tverberg_order(tri, centroid);
    CHECK(tc.order == 1);
    CHECK(tc.parts == std::vector<std::vector<int>>{{0, 1, 2}});
    check_tverberg_parts(tri, centroid, tc);

    // a vertex is its own singleton part
    QVec vertex{Rat(0), Rat(0)};
    CHECK(halfspace_depth(tri, vertex).depth == 1);
    TverbergReport tv = tverberg_order(tri, vertex);
    CHECK(tv.order == 1);
    CHECK(tv.parts == std::vector<std::vector<int>>{{0}});
    CHECK(tv.unused == std::vector<int>{1, 2});

    // outside the hull: depth and order are both zero
    QVec out{Rat(5), Rat(5)};
    DepthReport dz = halfspace_depth(tri, out);
    CHECK(dz.depth == 0);
    CHECK(dz.on_side.empty());
    check_depth_witness(tri, out, dz);
    TverbergReport tz = tverberg_order(tri, out);
    CHECK(tz.order == 0);
    CHECK(tz.parts.empty());
    CHECK(tz.unused == std::vector<int>{0, 1, 2});
    check_core_record(check_core_tverberg(tri, out));
}

TEST_CASE("square center attains the depth-to-order bound with equality") {
    PointConfiguration sq = PointConfiguration::checked(
        {0, 1, 2, 3}, {q({0, 0}), q({1, 0}), q({1, 1}), q({0, 1})}, 2);
    QVec center{Rat(1, 2), Rat(1, 2)};
    CHECK(halfspace_depth(sq, center).depth == 2);
    TverbergReport t = tverberg_order(sq, center);
    CHECK(t.order == 2);
    CHECK(t.parts == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
    CHECK(t.unused.empty());
    CoreTverbergRecord r = check_core_tverberg(sq, center);
    check_core_record(r);
    CHECK(r.bound == 2);
    CHECK(r.order == r.bound);
}

TEST_CASE("zero-dimensional sample") {
    PointConfiguration dot = PointConfiguration::checked({0}, {QVec{}}, 0);
    DepthReport d = halfspace_depth(dot, QVec{});
    CHECK(d.depth == 1);
    check_depth_witness(dot, QVec{}, d);
    TverbergReport t = tverberg_order(dot, QVec{});
    CHECK(t.order == 1);
    CHECK(t.parts == std::vector<std::vector<int>>{{0}});
    check_core_record(check_core_tverberg(dot, QVec{}));
}

TEST_CASE("depth and order are invariant under affine maps") {
    PointConfiguration pent = pentagon_config();
    QVec x{Rat(100, 31), Rat(60, 31)};
    // shear (p1, p2) -> (p1 + 2 p2, p2), then translate by (7, -3)
    std::vector<QVec> moved;
    for (const QVec& p : pent.coords())
        moved.push_back(QVec{p[0] + 2 * p[1] + 7, p[1] - 3});
    PointConfiguration sheared = PointConfiguration::checked(pent.labels(), moved, 2);
    QVec y{x[0] + 2 * x[1] + 7, x[1] - 3};

    DepthReport d = halfspace_depth(sheared, y);
    CHECK(d.depth == halfspace_depth(pent, x).depth);
    check_depth_witness(sheared, y, d);
    TverbergReport t = tverberg_order(sheared, y);
    CHECK(t.order == tverberg_order(pent, x).order);
    CHECK(t.parts == tverberg_order(pent, x).parts);
    check_tverberg_parts(sheared, y, t);
}
