#pragma once
// Oriented-matroid circuits of a vector configuration and the machinery built
// directly on them: maximum weak and combinatorial Cayley decompositions,
// primal verification of weak decompositions, and the small-circuit check for
// pure dual-degree-1 configurations.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "galedeg/configuration.hpp"

namespace galedeg {

// Minimal dependent label set. Canonical: the dependence is primitive with
// the coefficient of the lowest support label positive, so that label sits in
// `pos`. pos/neg ascend; `dependence` is keyed by label, ascending, support
// only.
struct Circuit {
    std::vector<int> pos, neg;
    std::vector<std::pair<int, Rat>> dependence;
};

// All circuits (size <= rank+1), ordered lexicographically by support.
std::vector<Circuit> circuits(const VectorConfiguration& v);

// The circuits whose dependence is one-signed: exactly the minimal subsets
// with the origin in the relative interior of their hull.
std::vector<Circuit> positive_circuits(const VectorConfiguration& v);

// Exact minimum hitting set over bitmask sets (branch and bound). Empty input
// gives 0. Also the lex-first optimal hitting set as a mask.
std::size_t min_hitting_set_size(const std::vector<std::uint32_t>& sets);
std::uint32_t lex_first_hitting_set(const std::vector<std::uint32_t>& sets, std::size_t size,
                                    std::size_t universe);

// Maximum packing of pairwise disjoint positive circuits; the first maximum
// packing in lexicographic order of circuit indices. The packing size never
// exceeds the dual codegree.
struct WeakCayley {
    std::vector<Circuit> factors;
    std::vector<int> residual;  // labels in no factor
};
WeakCayley max_weak_cayley(const VectorConfiguration& v);

// Maximum-size partition of all labels into positive vectors (label sets
// whose hull has the origin in its relative interior). Exists iff the
// configuration is totally cyclic. Canonical: each part is the
// lexicographically smallest choice among optimal continuations, parts listed
// in formation order (each contains the lowest label not yet covered).
std::optional<std::vector<std::vector<int>>> max_combinatorial_cayley(
    const VectorConfiguration& v);

// Primal check that factor sets form a weak Cayley decomposition of a point
// configuration: factors nonempty, pairwise disjoint, and for each factor F
// an affine functional vanishes exactly on A minus F and is strictly positive
// on F (so A minus F is the full point set of a face). Factors need not be
// minimal. Witnesses are homogenized functionals, primitive.
struct FaceWitness {
    std::vector<int> factor;
    Hyperplane support;
};
struct PrimalCayleyCheck {
    bool ok = false;
    std::string reason;  // empty when ok
    std::vector<FaceWitness> witnesses;
};
PrimalCayleyCheck verify_weak_cayley_primal(const PointConfiguration& a,
                                            const std::vector<std::vector<int>>& factors);

// For a pure configuration of dual degree exactly 1 (anything else is an
// input error), checks that every mixed-sign circuit has full size rank+1.
struct SmallCircuitReport {
    bool ok = true;
    int expected_size = 0;
    std::optional<Circuit> counterexample;
};
SmallCircuitReport check_small_circuits_deg1(const VectorConfiguration& v);

} // namespace galedeg
