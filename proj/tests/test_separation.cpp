// Origin trichotomy, strict separation and raw circuit enumeration: the
// feasibility kernels, checked together with their certificates.
#include "doctest.h"

#include "galedeg/separation.hpp"

using namespace galedeg;

namespace {

QVec q(std::initializer_list<long> xs) {
    QVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

// Substitution check of an origin certificate against the input vectors.
void check_certificate(const std::vector<QVec>& w, std::size_t dim, const OriginCertificate& c) {
    switch (c.kind) {
        case OriginPosition::IN_RELINT: {
            REQUIRE(c.dependence.size() == w.size());
            QVec s(dim, Rat(0));
            for (std::size_t i = 0; i < w.size(); ++i) {
                CHECK(c.dependence[i] > 0);
                for (std::size_t j = 0; j < dim; ++j) s[j] += c.dependence[i] * w[i][j];
            }
            CHECK(is_zero_vec(s));
            break;
        }
        case OriginPosition::IN_HULL_NOT_RELINT: {
            REQUIRE(c.dependence.size() == w.size());
            REQUIRE(c.normal.size() == dim);
            QVec s(dim, Rat(0));
            bool any = false;
            for (std::size_t i = 0; i < w.size(); ++i) {
                CHECK(c.dependence[i] >= 0);
                any = any || c.dependence[i] > 0;
                for (std::size_t j = 0; j < dim; ++j) s[j] += c.dependence[i] * w[i][j];
                Rat v = dot(c.normal, w[i]);
                if (c.dependence[i] > 0)
                    CHECK(v == 0);
                else
                    CHECK(v > 0);
            }
            CHECK(any);
            CHECK(is_zero_vec(s));
            break;
        }
        case OriginPosition::OUTSIDE: {
            REQUIRE(c.normal.size() == dim);
            for (const QVec& x : w) CHECK(dot(c.normal, x) > 0);
            break;
        }
    }
}

} // namespace

TEST_CASE("origin position trichotomy") {
    std::vector<QVec> outside = {q({1, 0}), q({0, 1}), q({1, 1})};
    OriginCertificate a = origin_position(outside, 2);
    CHECK(a.kind == OriginPosition::OUTSIDE);
    check_certificate(outside, 2, a);

    // segment through the origin: in the relative interior of its own span
    std::vector<QVec> segment = {q({1, 0}), q({-1, 0})};
    OriginCertificate b = origin_position(segment, 2);
    CHECK(b.kind == OriginPosition::IN_RELINT);
    check_certificate(segment, 2, b);

    // origin on the boundary edge of a triangle
    std::vector<QVec> boundary = {q({1, 0}), q({-1, 0}), q({0, 1})};
    OriginCertificate c = origin_position(boundary, 2);
    CHECK(c.kind == OriginPosition::IN_HULL_NOT_RELINT);
    check_certificate(boundary, 2, c);
    // the dependence support is the minimal face containing the origin
    CHECK(c.dependence[0] > 0);
    CHECK(c.dependence[1] > 0);
    CHECK(c.dependence[2] == 0);

    std::vector<QVec> cross = {q({1, 0}), q({-1, 0}), q({0, 1}), q({0, -1})};
    OriginCertificate d = origin_position(cross, 2);
    CHECK(d.kind == OriginPosition::IN_RELINT);
    check_certificate(cross, 2, d);

    // a vertex of the hull: degenerate boundary case
    std::vector<QVec> vertex = {q({0, 0}), q({1, 0})};
    OriginCertificate e = origin_position(vertex, 2);
    CHECK(e.kind == OriginPosition::IN_HULL_NOT_RELINT);
    check_certificate(vertex, 2, e);

    CHECK(origin_position({}, 2).kind == OriginPosition::OUTSIDE);
}

TEST_CASE("strict separation certificate and convention") {
    std::vector<QVec> t = {q({1, 0}), q({1, 1}), q({1, -1})};
    auto c = strict_separation(t, 2);
    REQUIRE(c.has_value());
    for (const QVec& x : t) CHECK(dot(*c, x) > 0);

    // nonnegative dependence blocks separation
    CHECK_FALSE(strict_separation({q({1, 0}), q({-1, 0})}, 2).has_value());
    CHECK_FALSE(strict_separation({q({0, 0})}, 2).has_value());

    // documented trivial certificate for the empty sequence
    auto e = strict_separation({}, 3);
    REQUIRE(e.has_value());
    CHECK(*e == q({1, 0, 0}));
    auto z = strict_separation({}, 0);
    REQUIRE(z.has_value());
    CHECK(z->empty());
}

TEST_CASE("raw circuits of tiny families") {
    // antipodal pair: one positive circuit
    auto c1 = raw_circuits({q({1, 0}), q({-2, 0})}, 2, false);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].support == std::vector<std::size_t>{0, 1});
    CHECK(c1[0].coeffs == q({2, 1}));  // primitive, first entry positive

    // e1, e2, e1+e2: single circuit with a mixed sign pattern
    auto c2 = raw_circuits({q({1, 0}), q({0, 1}), q({1, 1})}, 2, false);
    REQUIRE(c2.size() == 1);
    CHECK(c2[0].support == std::vector<std::size_t>{0, 1, 2});
    CHECK(c2[0].coeffs == q({1, 1, -1}));
    CHECK(raw_circuits({q({1, 0}), q({0, 1}), q({1, 1})}, 2, true).empty());

    // zero vector: a singleton circuit, positive by convention
    auto c3 = raw_circuits({q({0, 0}), q({1, 0})}, 2, true);
    REQUIRE(c3.size() == 1);
    CHECK(c3[0].support == std::vector<std::size_t>{0});
    CHECK(c3[0].coeffs == q({1}));

    CHECK(raw_circuits({q({1, 0}), q({0, 1})}, 2, false).empty());
}
