#pragma once
// Primal and dual degree/codegree with witnesses, facet enumeration, the
// exhaustive degree oracle, and section/quotient degree comparison.

#include <optional>

#include "galedeg/configuration.hpp"

namespace galedeg {

// A facet of conv(A): supporting hyperplane (homogenized primitive normal,
// nonnegative on every point) whose zero set affinely spans it. `members` are
// ALL labels landing on it, ascending. Facets are listed lexicographically by
// member set. A 0-dimensional configuration has no facets.
struct Facet {
    std::vector<int> members;
    Hyperplane support;
};
std::vector<Facet> facets(const PointConfiguration& a);

// Interior face: nonempty label subset contained in no facet member set,
// i.e. the relative interior of its hull lies in the interior of conv(A).
bool is_interior_face(const PointConfiguration& a, const std::vector<int>& labels);

struct DegreeReport {
    int degree = 0;
    int codegree = 0;
    // Primal: the first minimum-size interior face in ascending size-then-lex
    // order (it is automatically affinely independent). Dual: the lex-first
    // minimum hitting set of the positive circuit supports. For a
    // configuration and its Gale dual these are the same label set.
    std::vector<int> witness_face;
    // Dual only: strictly positive on exactly rank+degree vectors (absent at
    // rank 0, where there are no hyperplanes).
    std::optional<Hyperplane> witness_hyperplane;
};

// Primal degree: repeated points are collapsed first (degree is invariant
// under repetition); witness labels are the kept ones.
DegreeReport degree_primal(const PointConfiguration& a);

// Dual degree of a vector configuration: max over hyperplanes h of
// |h_strict_positive| - rank; codegree n - rank - degree equals the minimum
// hitting set of the positive circuit supports.
DegreeReport dual_degree(const VectorConfiguration& v);

// Exhaustive oracle: no deduplication, every subset tested for facet
// containment, degree = max over interior subsets of (d - affine dim).
// Limited to 20 points.
int degree_oracle(const PointConfiguration& a);

// Degrees of a section, its quotient, and the whole configuration, for a
// label set W with lin(W) meeting V exactly in W (anything else is an input
// error naming an offending label). Asserts total >= sub + quotient.
struct SectionQuotientDegrees {
    int sub = 0, quotient = 0, total = 0;
};
SectionQuotientDegrees section_quotient_degrees(const VectorConfiguration& v,
                                                const std::vector<int>& sub_labels);

} // namespace galedeg
