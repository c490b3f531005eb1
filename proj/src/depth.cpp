#include "galedeg/depth.hpp"

#include "galedeg/degree.hpp"

namespace galedeg {

namespace {

// S - x as a vector configuration. The translates always span: if they all
// lay on a linear hyperplane, S would lie on an affine one.
VectorConfiguration translated(const PointConfiguration& s, const QVec& x) {
    require_input(x.size() == s.dim(), "query point dimension mismatch");
    std::vector<QVec> vecs;
    vecs.reserve(s.count());
    for (const QVec& p : s.coords()) vecs.push_back(sub(p, x));
    return VectorConfiguration::trusted(s.labels(), std::move(vecs), s.dim());
}

} // namespace

DepthReport halfspace_depth(const PointConfiguration& s, const QVec& x) {
    VectorConfiguration v = translated(s, x);
    DegreeReport d = dual_degree(v);

    DepthReport out;
    out.depth = d.codegree;
    if (d.witness_hyperplane) {
        // The dual witness c is strictly positive on exactly rank + degree
        // translates; the halfspace <-c, y> >= <-c, x> holds the rest.
        QVec normal = d.witness_hyperplane->normal;
        for (Rat& t : normal) t = -t;
        Rat offset = dot(normal, x);
        for (std::size_t i = 0; i < s.count(); ++i)
            if (dot(normal, s.at(i)) >= offset) out.on_side.push_back(s.label_at(i));
        require_internal(out.on_side.size() == static_cast<std::size_t>(out.depth),
                         "halfspace_depth: witness count mismatch");
        out.witness = AffineHalfspace{std::move(normal), std::move(offset)};
    } else {
        require_internal(s.dim() == 0, "halfspace_depth: witness missing");
        out.on_side = s.labels();
    }
    return out;
}

TverbergReport tverberg_order(const PointConfiguration& s, const QVec& x) {
    VectorConfiguration v = translated(s, x);
    WeakCayley wc = max_weak_cayley(v);

    TverbergReport out;
    out.order = static_cast<int>(wc.factors.size());
    for (const Circuit& c : wc.factors) {
        require_internal(c.neg.empty(), "tverberg_order: factor is not a positive circuit");
        // Substitute: sum lambda_i (s_i - x) = 0 with every lambda positive,
        // so x is a convex combination of the part.
        QVec acc(s.dim(), Rat(0));
        for (const auto& [lab, co] : c.dependence) {
            require_internal(sgn(co) > 0, "tverberg_order: nonpositive coefficient");
            const QVec& p = s.at(s.pos_of(lab));
            for (std::size_t k = 0; k < s.dim(); ++k) acc[k] += co * (p[k] - x[k]);
        }
        require_internal(is_zero_vec(acc), "tverberg_order: dependence substitution failed");
        out.parts.push_back(c.pos);
    }
    out.unused = wc.residual;
    return out;
}

CoreTverbergRecord check_core_tverberg(const PointConfiguration& s, const QVec& x) {
    CoreTverbergRecord rec;
    rec.count = s.count();
    rec.dim = s.dim();
    rec.depth = halfspace_depth(s, x).depth;
    rec.order = tverberg_order(s, x).order;
    int nd = static_cast<int>(rec.count) - static_cast<int>(rec.dim);
    rec.bound = 3 * rec.depth - 2 * nd;
    rec.satisfied = rec.order >= rec.bound;
    rec.conjectured_bound = 2 * rec.depth - nd;
    rec.conjecture_holds = rec.order >= rec.conjectured_bound;
    require_check(rec.satisfied, "depth-to-order bound violated");
    require_check(rec.order <= rec.depth, "Tverberg order exceeded halfspace depth");
    return rec;
}

} // namespace galedeg
