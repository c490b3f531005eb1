#pragma once
// Halfspace-depth and Tverberg-order queries of a rational point against a
// point configuration, and the depth-to-order bound check. Both queries
// reduce to dual degree machinery on the translated configuration S - x.

#include <optional>

#include "galedeg/circuits.hpp"
#include "galedeg/configuration.hpp"

namespace galedeg {

// Closed halfspace {y : <normal, y> >= offset}; the witnesses below pass
// through the query point (<normal, x> = offset).
struct AffineHalfspace {
    QVec normal;
    Rat offset;
};

struct DepthReport {
    int depth = 0;
    // A depth-attaining halfspace through the query point (absent in
    // dimension 0, where the only halfspace is the whole space).
    std::optional<AffineHalfspace> witness;
    std::vector<int> on_side;  // labels inside the witness halfspace, count = depth
};

// Minimum number of sample points in a closed halfspace containing x:
// the dual codegree of {s_i - x}. Depth 0 iff x lies outside conv(S).
DepthReport halfspace_depth(const PointConfiguration& s, const QVec& x);

struct TverbergReport {
    int order = 0;
    std::vector<std::vector<int>> parts;  // disjoint, x in conv of each
    std::vector<int> unused;
};

// Largest m with m pairwise disjoint subsets whose hulls all contain x: the
// maximum weak Cayley length of {s_i - x}. Parts are positive circuit
// supports of the translated configuration, re-verified by substitution.
TverbergReport tverberg_order(const PointConfiguration& s, const QVec& x);

struct CoreTverbergRecord {
    std::size_t count = 0;  // n
    std::size_t dim = 0;    // d
    int depth = 0;
    int order = 0;
    int bound = 0;  // 3 depth - 2 (n - d)
    bool satisfied = false;
    // Recorded, never asserted: order >= 2 depth - (n - d).
    int conjectured_bound = 0;
    bool conjecture_holds = false;
};

// Checks order >= 3 depth - 2(n - d); a violation is a check_failure (the
// bound is a theorem). Also records the stronger conjectured bound.
CoreTverbergRecord check_core_tverberg(const PointConfiguration& s, const QVec& x);

} // namespace galedeg
