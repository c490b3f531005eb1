// Circuit enumeration against a rank-characterization oracle, hitting sets,
// and the weak and combinatorial Cayley decompositions with their primal
// verification.
#include "doctest.h"

#include <algorithm>
#include <cstdint>

#include "galedeg/circuits.hpp"
#include "galedeg/degree.hpp"
#include "galedeg/generators.hpp"

using namespace galedeg;

namespace {

QVec q(std::initializer_list<long> xs) {
    QVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

std::vector<int> support_of(const Circuit& c) {
    std::vector<int> s;
    for (const auto& [lab, co] : c.dependence) s.push_back(lab);
    return s;
}

// Oracle: a circuit support is a dependent set all of whose proper subsets
// are independent. Enumerates subsets directly by rank, with no reference to
// the kernel-based enumeration under test.
std::vector<std::vector<int>> circuit_supports_oracle(const VectorConfiguration& v) {
    std::size_t n = v.count();
    REQUIRE(n <= 20);
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        if (idx.size() > v.rank() + 1) continue;
        std::vector<QVec> rows;
        for (std::size_t i : idx) rows.push_back(v.at(i));
        if (rank_of_rows(rows, v.rank()) != idx.size() - 1) continue;
        bool minimal = true;
        for (std::size_t drop = 0; drop < idx.size() && minimal; ++drop) {
            std::vector<QVec> sub;
            for (std::size_t k = 0; k < idx.size(); ++k)
                if (k != drop) sub.push_back(v.at(idx[k]));
            if (rank_of_rows(sub, v.rank()) != sub.size()) minimal = false;
        }
        if (!minimal) continue;
        std::vector<int> labs;
        for (std::size_t i : idx) labs.push_back(v.label_at(i));
        std::sort(labs.begin(), labs.end());
        out.push_back(std::move(labs));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Every structural promise of the circuit representation, checked by
// substitution into the configuration.
void check_circuit_contract(const VectorConfiguration& v, const Circuit& c) {
    REQUIRE(!c.dependence.empty());
    CHECK(c.dependence.size() <= v.rank() + 1);
    CHECK(std::is_sorted(c.pos.begin(), c.pos.end()));
    CHECK(std::is_sorted(c.neg.begin(), c.neg.end()));
    CHECK(std::is_sorted(c.dependence.begin(), c.dependence.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; }));

    // the dependence really is a dependence, with support pos + neg
    QVec sum(v.rank(), Rat(0));
    mpz_class g = 0;
    for (const auto& [lab, co] : c.dependence) {
        REQUIRE(co != 0);
        CHECK(co.get_den() == 1);
        g = gcd(g, mpz_class(co.get_num()));
        bool in_pos = std::find(c.pos.begin(), c.pos.end(), lab) != c.pos.end();
        bool in_neg = std::find(c.neg.begin(), c.neg.end(), lab) != c.neg.end();
        CHECK(in_pos == (sgn(co) > 0));
        CHECK(in_neg == (sgn(co) < 0));
        const QVec& w = v.at(v.pos_of(lab));
        for (std::size_t k = 0; k < v.rank(); ++k) sum[k] += co * w[k];
    }
    CHECK(g == 1);
    CHECK(is_zero_vec(sum));
    // canonical orientation: lowest support label carries a positive sign
    CHECK(c.dependence.front().second > 0);
    CHECK(!c.pos.empty());
    CHECK(c.pos.front() == c.dependence.front().first);
}

void check_against_oracle(const VectorConfiguration& v) {
    std::vector<Circuit> cs = circuits(v);
    std::vector<std::vector<int>> got;
    for (const Circuit& c : cs) {
        check_circuit_contract(v, c);
        got.push_back(support_of(c));
    }
    CHECK(std::is_sorted(got.begin(), got.end()));
    std::vector<std::vector<int>> sorted = got;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == circuit_supports_oracle(v));

    // positive circuits are exactly the one-signed ones, in the same order
    std::vector<std::vector<int>> pos_supports;
    for (const Circuit& c : cs)
        if (c.neg.empty()) pos_supports.push_back(support_of(c));
    std::vector<std::vector<int>> from_filter;
    for (const Circuit& c : positive_circuits(v)) {
        CHECK(c.neg.empty());
        from_filter.push_back(support_of(c));
    }
    CHECK(from_filter == pos_supports);
}

} // namespace

TEST_CASE("circuits match the minimal-dependent-set oracle") {
    check_against_oracle(gale_dual(pentagon_config()));
    check_against_oracle(gale_dual(lifted_config(2)));
    check_against_oracle(VectorConfiguration::checked(
        {0, 1, 2, 3}, {q({1, 0}), q({-1, 0}), q({0, 1}), q({0, -1})}, 2));
    Rng rng(11);
    check_against_oracle(lawrence_config(3, 8, rng));
    check_against_oracle(gale_dual(rand_points(7, 3, rng)));
    // a zero vector is a one-element circuit
    VectorConfiguration z =
        VectorConfiguration::checked({0, 1, 2}, {q({0}), q({1}), q({-1})}, 1);
    check_against_oracle(z);
    std::vector<Circuit> zc = circuits(z);
    REQUIRE(!zc.empty());
    CHECK(zc.front().pos == std::vector<int>{0});
    CHECK(zc.front().neg.empty());
}

TEST_CASE("pentagon dual has ten circuits, five positive") {
    VectorConfiguration g = gale_dual(pentagon_config());
    CHECK(g.rank() == 2);
    CHECK(circuits(g).size() == 10);
    CHECK(positive_circuits(g).size() == 5);
}

TEST_CASE("minimum hitting sets") {
    CHECK(min_hitting_set_size({}) == 0);
    CHECK(min_hitting_set_size({0b1u}) == 1);
    // one shared element suffices
    CHECK(min_hitting_set_size({0b011u, 0b110u, 0b010u}) == 1);
    // two disjoint sets force two elements
    CHECK(min_hitting_set_size({0b0011u, 0b1100u}) == 2);
    CHECK(min_hitting_set_size({0b01u, 0b10u, 0b11u}) == 2);

    CHECK(lex_first_hitting_set({}, 0, 4) == 0u);
    // the lowest index that works is chosen, in subset lex order
    CHECK(lex_first_hitting_set({0b11u}, 1, 2) == 0b01u);
    CHECK(lex_first_hitting_set({0b110u, 0b101u}, 1, 3) == 0b100u);
    CHECK(lex_first_hitting_set({0b0011u, 0b1100u}, 2, 4) == 0b0101u);
}

TEST_CASE("weak decomposition: disjoint positive circuits, canonical packing") {
    // doubled-basis lift: two disjoint positive circuits cover everything
    VectorConfiguration g = gale_dual(lifted_config(2));
    WeakCayley w = max_weak_cayley(g);
    REQUIRE(w.factors.size() == 2);
    CHECK(w.factors[0].pos == std::vector<int>{0, 3, 5});
    CHECK(w.factors[1].pos == std::vector<int>{1, 2, 4, 6});
    CHECK(w.factors[0].neg.empty());
    CHECK(w.factors[1].neg.empty());
    CHECK(w.residual.empty());
    // the packing bound: never more factors than the dual codegree
    CHECK(w.factors.size() <= static_cast<std::size_t>(dual_degree(g).codegree));

    // pentagon dual: all positive circuits are triples over five labels, so
    // no two are disjoint
    VectorConfiguration p = gale_dual(pentagon_config());
    WeakCayley wp = max_weak_cayley(p);
    REQUIRE(wp.factors.size() == 1);
    CHECK(wp.factors[0].pos == std::vector<int>{0, 1, 2});
    CHECK(wp.residual == std::vector<int>{3, 4});

    // opposite pairs pack perfectly
    VectorConfiguration cross = VectorConfiguration::checked(
        {0, 1, 2, 3}, {q({1, 0}), q({-1, 0}), q({0, 1}), q({0, -1})}, 2);
    WeakCayley wc = max_weak_cayley(cross);
    REQUIRE(wc.factors.size() == 2);
    CHECK(wc.factors[0].pos == std::vector<int>{0, 1});
    CHECK(wc.factors[1].pos == std::vector<int>{2, 3});
    CHECK(wc.residual.empty());

    // a zero vector is a factor on its own
    VectorConfiguration z =
        VectorConfiguration::checked({0, 1, 2}, {q({0}), q({1}), q({-1})}, 1);
    WeakCayley wz = max_weak_cayley(z);
    CHECK(wz.factors.size() == 2);
    CHECK(wz.residual.empty());
}

TEST_CASE("combinatorial decomposition: partition into positive vectors") {
    // not totally cyclic: no decomposition at all
    CHECK_FALSE(max_combinatorial_cayley(
                    VectorConfiguration::checked({0, 1}, {q({1, 0}), q({0, 1})}, 2))
                    .has_value());

    VectorConfiguration g = gale_dual(lifted_config(2));
    auto mc = max_combinatorial_cayley(g);
    REQUIRE(mc.has_value());
    REQUIRE(mc->size() == 2);
    CHECK((*mc)[0] == std::vector<int>{0, 3, 5});
    CHECK((*mc)[1] == std::vector<int>{1, 2, 4, 6});
    // each part is a positive vector of the configuration
    for (const auto& part : *mc) CHECK(is_totally_cyclic(restrict_to(g, part)));

    // pentagon dual: the whole set is the only decomposition
    auto pc = max_combinatorial_cayley(gale_dual(pentagon_config()));
    REQUIRE(pc.has_value());
    REQUIRE(pc->size() == 1);
    CHECK((*pc)[0] == std::vector<int>{0, 1, 2, 3, 4});

    VectorConfiguration cross = VectorConfiguration::checked(
        {0, 1, 2, 3}, {q({1, 0}), q({-1, 0}), q({0, 1}), q({0, -1})}, 2);
    auto cc = max_combinatorial_cayley(cross);
    REQUIRE(cc.has_value());
    REQUIRE(cc->size() == 2);
    CHECK((*cc)[0] == std::vector<int>{0, 1});
    CHECK((*cc)[1] == std::vector<int>{2, 3});

    // a zero vector carries a strictly positive dependence by itself
    VectorConfiguration z =
        VectorConfiguration::checked({0, 1, 2}, {q({0}), q({1}), q({-1})}, 1);
    auto zc = max_combinatorial_cayley(z);
    REQUIRE(zc.has_value());
    REQUIRE(zc->size() == 2);
    CHECK((*zc)[0] == std::vector<int>{0});
    CHECK((*zc)[1] == std::vector<int>{1, 2});
}

TEST_CASE("primal verification of weak decompositions") {
    PointConfiguration a = lifted_config(2);

    // the canonical factors and an alternative decomposition both verify
    for (std::vector<std::vector<int>> factors :
         {std::vector<std::vector<int>>{{0, 3, 5}, {1, 2, 4, 6}},
          std::vector<std::vector<int>>{{1, 3, 4}, {2, 5, 6}}}) {
        PrimalCayleyCheck pc = verify_weak_cayley_primal(a, factors);
        REQUIRE(pc.ok);
        CHECK(pc.reason.empty());
        REQUIRE(pc.witnesses.size() == 2);
        // substitution: the functional vanishes exactly off the factor and is
        // strictly positive on it
        for (std::size_t f = 0; f < factors.size(); ++f) {
            const QVec& nrm = pc.witnesses[f].support.normal;
            REQUIRE(nrm.size() == a.dim() + 1);
            for (std::size_t i = 0; i < a.count(); ++i) {
                Rat val = nrm[a.dim()];
                for (std::size_t k = 0; k < a.dim(); ++k) val += nrm[k] * a.at(i)[k];
                bool in_factor = std::find(factors[f].begin(), factors[f].end(),
                                           a.label_at(i)) != factors[f].end();
                if (in_factor) CHECK(val > 0);
                else CHECK(val == 0);
            }
        }
    }

    // a swap that breaks exposedness is rejected
    PrimalCayleyCheck bad = verify_weak_cayley_primal(a, {{1, 3, 5}, {2, 4, 6}});
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.reason.empty());

    // pentagon: no edge is a factor (its complement affinely spans)
    CHECK_FALSE(verify_weak_cayley_primal(pentagon_config(), {{0, 1}}).ok);

    // triangle: each vertex is a factor, the opposite edge being a face
    PointConfiguration tri =
        PointConfiguration::checked({0, 1, 2}, {q({0, 0}), q({1, 0}), q({0, 1})}, 2);
    CHECK(verify_weak_cayley_primal(tri, {{0}}).ok);
    CHECK(verify_weak_cayley_primal(tri, {{0}, {1}, {2}}).ok);

    // malformed factor lists
    CHECK_FALSE(verify_weak_cayley_primal(tri, {{0}, {}}).ok);
    CHECK_FALSE(verify_weak_cayley_primal(tri, {{0, 1}, {1, 2}}).ok);
    CHECK_THROWS_AS(verify_weak_cayley_primal(tri, {{7}}), input_error);
}

TEST_CASE("small-circuit property of pure dual-degree-1 configurations") {
    VectorConfiguration g = gale_dual(prism_config(3));
    REQUIRE(dual_degree(g).degree == 1);
    SmallCircuitReport r = check_small_circuits_deg1(g);
    CHECK(r.ok);
    CHECK(r.expected_size == static_cast<int>(g.rank()) + 1);
    CHECK_FALSE(r.counterexample.has_value());

    // impure or wrong-degree inputs are refused
    VectorConfiguration cross = VectorConfiguration::checked(
        {0, 1, 2, 3}, {q({1, 0}), q({-1, 0}), q({0, 1}), q({0, -1})}, 2);
    CHECK_THROWS_AS(check_small_circuits_deg1(cross), input_error);
}
