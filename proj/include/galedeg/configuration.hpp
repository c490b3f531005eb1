#pragma once
// Labeled rational point and vector configurations, Gale duality, deletion
// and contraction, the structural predicates (totally cyclic, pure,
// irreducible, Lawrence-type pairing) and the two degree-preserving
// reductions. Labels are stable: operations that drop elements keep the
// surviving labels unchanged, so witnesses always refer to the caller's
// original labels.

#include <optional>
#include <utility>
#include <vector>

#include "galedeg/separation.hpp"

namespace galedeg {

// Linear hyperplane <normal, x> = 0 (affine when the coordinates are
// homogenized). The normal is a primitive integer vector, never all zero.
struct Hyperplane {
    QVec normal;
};

// Sign of x under the composition h1 then h2, the hyperplane with symbolic
// normal n1 + eps n2 for infinitesimal eps > 0: the lexicographic sign of
// (<n1,x>, <n2,x>).
int composed_sign(const Hyperplane& h1, const Hyperplane& h2, const QVec& x);

// n points affinely spanning a d-dimensional space. Repeats allowed.
class PointConfiguration {
public:
    // checked: affine-span or label problems are the caller's fault
    // (input_error); trusted: they are ours (internal_error).
    static PointConfiguration checked(std::vector<int> labels, std::vector<QVec> pts,
                                      std::size_t dim);
    static PointConfiguration trusted(std::vector<int> labels, std::vector<QVec> pts,
                                      std::size_t dim);

    std::size_t dim() const { return dim_; }
    std::size_t count() const { return pts_.size(); }
    const std::vector<int>& labels() const { return labels_; }
    const std::vector<QVec>& coords() const { return pts_; }
    const QVec& at(std::size_t pos) const { return pts_[pos]; }
    int label_at(std::size_t pos) const { return labels_[pos]; }
    std::size_t pos_of(int label) const;  // internal_error when absent
    bool has_label(int label) const;

    // Point coordinates extended by a trailing 1 (rows of the homogenized
    // matrix whose column kernel is the space of affine dependences).
    std::vector<QVec> homogenized() const;

private:
    PointConfiguration() = default;
    std::size_t dim_ = 0;
    std::vector<int> labels_;
    std::vector<QVec> pts_;
};

// n vectors linearly spanning a rank-r space. Zero vectors and repeats allowed.
class VectorConfiguration {
public:
    static VectorConfiguration checked(std::vector<int> labels, std::vector<QVec> vecs,
                                       std::size_t rank);
    static VectorConfiguration trusted(std::vector<int> labels, std::vector<QVec> vecs,
                                       std::size_t rank);

    std::size_t rank() const { return rank_; }
    std::size_t count() const { return vecs_.size(); }
    const std::vector<int>& labels() const { return labels_; }
    const std::vector<QVec>& coords() const { return vecs_; }
    const QVec& at(std::size_t pos) const { return vecs_[pos]; }
    int label_at(std::size_t pos) const { return labels_[pos]; }
    std::size_t pos_of(int label) const;
    bool has_label(int label) const;

private:
    VectorConfiguration() = default;
    std::size_t rank_ = 0;
    std::vector<int> labels_;
    std::vector<QVec> vecs_;
};

// Canonical Gale dual: the RREF-derived kernel basis of the homogenized point
// matrix, read off columnwise. Same labels; rank n - d - 1.
VectorConfiguration gale_dual(const PointConfiguration& a);

// Deletion of one vector; the result is re-embedded in its own span when the
// rank drops. Labels of the survivors are unchanged. An absent label is an
// input_error, as in contract_vector, contract_set and restrict_to.
VectorConfiguration delete_vector(const VectorConfiguration& v, int label);

// Contraction: images w - (<u,w>/<u,u>) u of all other vectors, re-embedded
// into rank r-1 coordinates. Contracting a zero vector is deletion. Zero
// images of surviving vectors are retained.
VectorConfiguration contract_vector(const VectorConfiguration& v, int label);

// Iterated contraction, ascending label order. The result is independent of
// the order up to relabeling of coordinates.
VectorConfiguration contract_set(const VectorConfiguration& v, std::vector<int> labels);

// Subconfiguration on the given labels, re-embedded in its own span.
VectorConfiguration restrict_to(const VectorConfiguration& v, std::vector<int> labels);

// Totally cyclic: the origin lies in the relative interior of conv(V)
// (vacuously true at rank 0).
bool is_totally_cyclic(const VectorConfiguration& v);

// A purity violation: a hyperplane with at most one vector strictly on each
// side. Pure means none exists (rank 0 is pure).
struct PurityViolation {
    Hyperplane h;
    std::vector<int> strict_pos, strict_neg;  // labels, each list of size <= 1
};
std::optional<PurityViolation> purity_violation(const VectorConfiguration& v);
bool is_pure(const VectorConfiguration& v);

// Irreducible: contains no zero vector.
bool is_irreducible(const VectorConfiguration& v);

VectorConfiguration strip_zeros(const VectorConfiguration& v);

// Collapse repeated points; keeps the lowest label of each class.
struct DedupResult {
    PointConfiguration config;
    std::vector<std::pair<int, int>> multiplicity;  // (kept label, class size), >= 1
};
DedupResult dedup_points(const PointConfiguration& a);

// One pyramid-stripping step, recorded so that the re-embedding chart can be
// replayed by pure coordinate arithmetic: drop the apex, subtract the
// translation point from every survivor, keep the listed coordinates.
struct PyramidStep {
    int apex = 0;
    int translate_label = 0;
    std::vector<std::size_t> pivot_columns;
};

// Repeatedly removes apices (points not in the affine hull of the rest),
// lowest label first, re-embedding the base in its own affine span each time
// (translate by the lowest-label point, then take RREF-pivot coordinates).
struct PyramidSplit {
    PointConfiguration base;
    std::vector<int> apices;  // in removal order
    std::vector<PyramidStep> steps;
};
PyramidSplit strip_pyramids(const PointConfiguration& a);

// Lowest apex label, or nullopt. A single point has no apex.
std::optional<int> pyramid_apex(const PointConfiguration& a);

// Restriction to the union of positive circuit supports: the unique minimal
// totally cyclic subconfiguration with the same dual codegree. Precondition:
// the origin lies in conv(V). Postcondition (asserted): codegree preserved.
struct TotallyCyclicReduction {
    std::vector<int> kept;
    VectorConfiguration sub;
};
TotallyCyclicReduction totally_cyclic_reduction(const VectorConfiguration& v);

// Repeatedly contracts the lowest-label vector taking part in a purity
// violation until pure. Precondition: totally cyclic. Postcondition
// (asserted): dual degree preserved at every step.
struct PureReduction {
    std::vector<int> contracted;  // in contraction order
    VectorConfiguration quotient;
};
PureReduction pure_reduction(const VectorConfiguration& v);

// Lawrence-type pairing: a perfect matching of labels into opposite rays
// (v_j = -lambda v_i, lambda > 0; zero vectors pair with zero vectors).
std::optional<std::vector<std::pair<int, int>>> is_lawrence(const VectorConfiguration& v);

} // namespace galedeg
