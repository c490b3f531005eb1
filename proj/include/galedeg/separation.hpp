#pragma once
// Exact position of the origin relative to the convex hull of finitely many
// rational vectors, with substitution-checkable certificates, and strict
// linear separation. These are the feasibility kernels of the library; both
// are solved by exhaustive basic-solution enumeration, which is exact,
// canonical and fast at the intended scale (n <= 16 or so).

#include <optional>
#include <vector>

#include "galedeg/rational.hpp"

namespace galedeg {

enum class OriginPosition { OUTSIDE, IN_HULL_NOT_RELINT, IN_RELINT };

struct OriginCertificate {
    OriginPosition kind = OriginPosition::OUTSIDE;
    // IN_RELINT: dependence with every entry > 0 and sum of lambda_i w_i = 0.
    // IN_HULL_NOT_RELINT: nonnegative nonzero dependence; its support is the
    //   full label set of the minimal face of conv(W) containing the origin.
    // OUTSIDE: empty.
    QVec dependence;
    // OUTSIDE: <c, w_i> > 0 for every i.
    // IN_HULL_NOT_RELINT: <c, w_i> = 0 on the dependence support, > 0 off it.
    // IN_RELINT: empty.
    QVec normal;
};

// Trichotomy for 0 against conv(w_0..w_{n-1}) in Q^dim. Deterministic; both
// witnesses are primitive integer vectors.
OriginCertificate origin_position(const std::vector<QVec>& w, std::size_t dim);

// Some c with <c, t_i> > 0 for all i, or nullopt when none exists (that is,
// when the t_i carry a nonnegative nonzero dependence). Canonical choice: the
// lexicographically smallest primitive vector among the basic solutions
// <c, t_b> = 1, b in an independent subset, with c restricted to span(T).
// For an empty sequence every c works; the documented convention is the first
// unit coordinate vector (the empty vector when dim == 0).
std::optional<QVec> strict_separation(const std::vector<QVec>& t, std::size_t dim);

// Minimal dependent index subsets carrying (up to sign) a unique dependence.
// Support indices ascend; coeffs align with support, primitive, first entry
// positive. Ordered by support sequence, lexicographically.
struct RawCircuit {
    std::vector<std::size_t> support;
    QVec coeffs;
};

// positive_only restricts to circuits whose dependence is one-signed (all
// coefficients positive after canonicalization).
std::vector<RawCircuit> raw_circuits(const std::vector<QVec>& w, std::size_t dim,
                                     bool positive_only);

} // namespace galedeg
