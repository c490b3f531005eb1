#include "galedeg/configuration.hpp"

#include <algorithm>

#include "galedeg/degree.hpp"

namespace galedeg {

namespace {

// from_input: the labels came from a caller, so problems are input_error;
// otherwise they are ours and signal a broken invariant.
void check_labels(const std::vector<int>& labels, std::size_t n, bool from_input) {
    auto bad = [&](const char* what) {
        if (from_input) throw input_error(what);
        throw internal_error(what);
    };
    if (labels.size() != n) bad("label count mismatch");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (labels[i] == labels[j]) bad("duplicate label");
}

// Coordinates in the row space of `vecs`: RREF pivot-column extraction. This
// is a linear isomorphism of the span, so it preserves the oriented matroid.
std::vector<QVec> linear_chart(const std::vector<QVec>& vecs, std::size_t old_dim,
                               std::size_t new_rank) {
    Rref r = rref(QMatrix::from_rows(vecs, old_dim));
    require_internal(r.pivots.size() == new_rank, "linear_chart: rank mismatch");
    std::vector<QVec> out;
    out.reserve(vecs.size());
    for (const QVec& v : vecs) {
        QVec w(new_rank);
        for (std::size_t k = 0; k < new_rank; ++k) w[k] = v[r.pivots[k]];
        out.push_back(std::move(w));
    }
    return out;
}

std::size_t affine_rank(const std::vector<QVec>& pts, std::size_t dim) {
    std::vector<QVec> rows;
    rows.reserve(pts.size());
    for (const QVec& p : pts) {
        QVec h = p;
        h.push_back(1);
        rows.push_back(std::move(h));
    }
    return rank_of_rows(rows, dim + 1);
}

} // namespace

int composed_sign(const Hyperplane& h1, const Hyperplane& h2, const QVec& x) {
    int s = sgn(dot(h1.normal, x));
    if (s != 0) return s;
    return sgn(dot(h2.normal, x));
}

PointConfiguration PointConfiguration::checked(std::vector<int> labels, std::vector<QVec> pts,
                                               std::size_t dim) {
    require_input(!pts.empty(), "a point configuration needs at least one point");
    for (const QVec& p : pts)
        require_input(p.size() == dim, "point coordinate count does not match dimension");
    require_input(affine_rank(pts, dim) == dim + 1,
                  "points do not affinely span the declared dimension");
    check_labels(labels, pts.size(), true);
    PointConfiguration a;
    a.dim_ = dim;
    a.labels_ = std::move(labels);
    a.pts_ = std::move(pts);
    return a;
}

PointConfiguration PointConfiguration::trusted(std::vector<int> labels, std::vector<QVec> pts,
                                               std::size_t dim) {
    require_internal(!pts.empty(), "empty point configuration");
    for (const QVec& p : pts) require_internal(p.size() == dim, "point length mismatch");
    require_internal(affine_rank(pts, dim) == dim + 1, "affine span mismatch");
    check_labels(labels, pts.size(), false);
    PointConfiguration a;
    a.dim_ = dim;
    a.labels_ = std::move(labels);
    a.pts_ = std::move(pts);
    return a;
}

std::size_t PointConfiguration::pos_of(int label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    throw internal_error("unknown point label");
}

bool PointConfiguration::has_label(int label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::vector<QVec> PointConfiguration::homogenized() const {
    std::vector<QVec> rows;
    rows.reserve(pts_.size());
    for (const QVec& p : pts_) {
        QVec h = p;
        h.push_back(1);
        rows.push_back(std::move(h));
    }
    return rows;
}

VectorConfiguration VectorConfiguration::checked(std::vector<int> labels, std::vector<QVec> vecs,
                                                 std::size_t rank) {
    for (const QVec& v : vecs)
        require_input(v.size() == rank, "vector coordinate count does not match rank");
    require_input(rank_of_rows(vecs, rank) == rank,
                  "vectors do not linearly span the declared rank");
    check_labels(labels, vecs.size(), true);
    VectorConfiguration v;
    v.rank_ = rank;
    v.labels_ = std::move(labels);
    v.vecs_ = std::move(vecs);
    return v;
}

VectorConfiguration VectorConfiguration::trusted(std::vector<int> labels, std::vector<QVec> vecs,
                                                 std::size_t rank) {
    for (const QVec& v : vecs) require_internal(v.size() == rank, "vector length mismatch");
    require_internal(rank_of_rows(vecs, rank) == rank, "linear span mismatch");
    check_labels(labels, vecs.size(), false);
    VectorConfiguration v;
    v.rank_ = rank;
    v.labels_ = std::move(labels);
    v.vecs_ = std::move(vecs);
    return v;
}

std::size_t VectorConfiguration::pos_of(int label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    throw internal_error("unknown vector label");
}

bool VectorConfiguration::has_label(int label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

VectorConfiguration gale_dual(const PointConfiguration& a) {
    const std::size_t n = a.count();
    const std::size_t r = n - a.dim() - 1;
    std::vector<QVec> basis = kernel_basis(QMatrix::from_cols(a.homogenized(), a.dim() + 1));
    require_internal(basis.size() == r, "gale_dual: kernel dimension mismatch");
    std::vector<QVec> duals(n, QVec(r));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < r; ++k) duals[i][k] = basis[k][i];
    return VectorConfiguration::trusted(a.labels(), std::move(duals), r);
}

VectorConfiguration delete_vector(const VectorConfiguration& v, int label) {
    require_input(v.has_label(label), "deletion label not present");
    std::size_t pos = v.pos_of(label);
    std::vector<int> labels;
    std::vector<QVec> rest;
    for (std::size_t i = 0; i < v.count(); ++i) {
        if (i == pos) continue;
        labels.push_back(v.label_at(i));
        rest.push_back(v.at(i));
    }
    std::size_t rk = rank_of_rows(rest, v.rank());
    if (rk < v.rank()) rest = linear_chart(rest, v.rank(), rk);
    return VectorConfiguration::trusted(std::move(labels), std::move(rest), rk);
}

VectorConfiguration contract_vector(const VectorConfiguration& v, int label) {
    require_input(v.has_label(label), "contraction label not present");
    std::size_t pos = v.pos_of(label);
    const QVec& u = v.at(pos);
    if (is_zero_vec(u)) return delete_vector(v, label);
    Rat uu = dot(u, u);
    std::vector<int> labels;
    std::vector<QVec> images;
    for (std::size_t i = 0; i < v.count(); ++i) {
        if (i == pos) continue;
        labels.push_back(v.label_at(i));
        const QVec& w = v.at(i);
        Rat f = dot(u, w) / uu;
        QVec img(v.rank());
        for (std::size_t k = 0; k < v.rank(); ++k) img[k] = w[k] - f * u[k];
        images.push_back(std::move(img));
    }
    images = linear_chart(images, v.rank(), v.rank() - 1);
    return VectorConfiguration::trusted(std::move(labels), std::move(images), v.rank() - 1);
}

VectorConfiguration contract_set(const VectorConfiguration& v, std::vector<int> labels) {
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 0; i + 1 < labels.size(); ++i)
        require_input(labels[i] != labels[i + 1], "repeated label in contraction set");
    VectorConfiguration cur = v;
    for (int ell : labels) {
        require_input(cur.has_label(ell), "contraction label not present");
        cur = contract_vector(cur, ell);
    }
    return cur;
}

VectorConfiguration restrict_to(const VectorConfiguration& v, std::vector<int> labels) {
    std::vector<int> keep;
    std::vector<QVec> rows;
    for (std::size_t i = 0; i < v.count(); ++i) {
        if (std::find(labels.begin(), labels.end(), v.label_at(i)) == labels.end()) continue;
        keep.push_back(v.label_at(i));
        rows.push_back(v.at(i));
    }
    require_input(keep.size() == labels.size(), "restriction label not present");
    std::size_t rk = rank_of_rows(rows, v.rank());
    if (rk < v.rank()) rows = linear_chart(rows, v.rank(), rk);
    return VectorConfiguration::trusted(std::move(keep), std::move(rows), rk);
}

bool is_totally_cyclic(const VectorConfiguration& v) {
    if (v.rank() == 0) return true;  // conv(V) = {0}
    return origin_position(v.coords(), v.rank()).kind == OriginPosition::IN_RELINT;
}

namespace {

struct ViolationScan {
    std::vector<PurityViolation> all;
};

// A hyperplane violates purity iff it has at most one vector strictly on each
// side, i.e. it contains all vectors except at most two. It is enough to scan
// complements of singletons and pairs.
ViolationScan scan_violations(const VectorConfiguration& v) {
    ViolationScan out;
    const std::size_t n = v.count();
    const std::size_t r = v.rank();
    if (r == 0) return out;

    auto classify = [&](const QVec& normal) {
        PurityViolation pv;
        pv.h.normal = normal;
        for (std::size_t i = 0; i < n; ++i) {
            int s = sgn(dot(normal, v.at(i)));
            if (s > 0) pv.strict_pos.push_back(v.label_at(i));
            if (s < 0) pv.strict_neg.push_back(v.label_at(i));
        }
        return pv;
    };

    for (std::size_t p = 0; p < n; ++p) {
        std::vector<QVec> others;
        for (std::size_t i = 0; i < n; ++i)
            if (i != p) others.push_back(v.at(i));
        std::vector<QVec> ker = kernel_basis(QMatrix::from_rows(others, r));
        if (ker.empty()) continue;
        require_internal(ker.size() == 1, "purity scan: rank dropped by more than one");
        PurityViolation pv = classify(ker[0]);
        require_internal(pv.strict_pos.size() + pv.strict_neg.size() == 1,
                         "purity scan: unexpected off-plane count");
        out.all.push_back(std::move(pv));
    }
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            std::vector<QVec> others;
            for (std::size_t i = 0; i < n; ++i)
                if (i != p && i != q) others.push_back(v.at(i));
            std::vector<QVec> ker = kernel_basis(QMatrix::from_rows(others, r));
            // Rank deficits > 1 are already covered by the singleton scan.
            if (ker.size() != 1) continue;
            PurityViolation pv = classify(ker[0]);
            if (pv.strict_pos.size() <= 1 && pv.strict_neg.size() <= 1 &&
                pv.strict_pos.size() + pv.strict_neg.size() == 2)
                out.all.push_back(std::move(pv));
        }
    }
    return out;
}

} // namespace

std::optional<PurityViolation> purity_violation(const VectorConfiguration& v) {
    ViolationScan s = scan_violations(v);
    if (s.all.empty()) return std::nullopt;
    return s.all.front();
}

bool is_pure(const VectorConfiguration& v) { return !purity_violation(v).has_value(); }

bool is_irreducible(const VectorConfiguration& v) {
    for (const QVec& x : v.coords())
        if (is_zero_vec(x)) return false;
    return true;
}

VectorConfiguration strip_zeros(const VectorConfiguration& v) {
    std::vector<int> labels;
    std::vector<QVec> rows;
    for (std::size_t i = 0; i < v.count(); ++i) {
        if (is_zero_vec(v.at(i))) continue;
        labels.push_back(v.label_at(i));
        rows.push_back(v.at(i));
    }
    return VectorConfiguration::trusted(std::move(labels), std::move(rows), v.rank());
}

DedupResult dedup_points(const PointConfiguration& a) {
    std::vector<int> labels;
    std::vector<QVec> pts;
    std::vector<std::pair<int, int>> mult;
    for (std::size_t i = 0; i < a.count(); ++i) {
        bool seen = false;
        for (std::size_t k = 0; k < pts.size() && !seen; ++k) {
            if (pts[k] == a.at(i)) {
                ++mult[k].second;
                seen = true;
            }
        }
        if (!seen) {
            labels.push_back(a.label_at(i));
            pts.push_back(a.at(i));
            mult.emplace_back(a.label_at(i), 1);
        }
    }
    DedupResult out{PointConfiguration::trusted(std::move(labels), std::move(pts), a.dim()),
                    std::move(mult)};
    return out;
}

namespace {

std::optional<std::size_t> apex_position(const PointConfiguration& a) {
    if (a.count() < 2) return std::nullopt;
    std::vector<QVec> homog = a.homogenized();
    for (std::size_t p = 0; p < a.count(); ++p) {
        std::vector<QVec> others;
        for (std::size_t i = 0; i < a.count(); ++i)
            if (i != p) others.push_back(homog[i]);
        if (rank_of_rows(others, a.dim() + 1) == a.dim()) return p;
    }
    return std::nullopt;
}

} // namespace

std::optional<int> pyramid_apex(const PointConfiguration& a) {
    std::optional<std::size_t> p = apex_position(a);
    if (!p) return std::nullopt;
    return a.label_at(*p);
}

PyramidSplit strip_pyramids(const PointConfiguration& a) {
    PointConfiguration cur = a;
    std::vector<int> apices;
    std::vector<PyramidStep> steps;
    while (true) {
        std::optional<std::size_t> p = apex_position(cur);
        if (!p) break;
        apices.push_back(cur.label_at(*p));
        std::vector<int> labels;
        std::vector<QVec> pts;
        for (std::size_t i = 0; i < cur.count(); ++i) {
            if (i == *p) continue;
            labels.push_back(cur.label_at(i));
            pts.push_back(cur.at(i));
        }
        // Affine chart of the base: translate by the first remaining point,
        // then take RREF-pivot coordinates of the difference vectors.
        std::vector<QVec> diffs;
        diffs.reserve(pts.size());
        for (const QVec& q : pts) diffs.push_back(sub(q, pts[0]));
        Rref rr = rref(QMatrix::from_rows(diffs, cur.dim()));
        require_internal(rr.pivots.size() == cur.dim() - 1, "strip_pyramids: chart rank mismatch");
        std::vector<QVec> charted;
        charted.reserve(diffs.size());
        for (const QVec& dv : diffs) {
            QVec w(rr.pivots.size());
            for (std::size_t k = 0; k < rr.pivots.size(); ++k) w[k] = dv[rr.pivots[k]];
            charted.push_back(std::move(w));
        }
        steps.push_back(PyramidStep{apices.back(), labels[0], rr.pivots});
        cur = PointConfiguration::trusted(std::move(labels), std::move(charted), cur.dim() - 1);
    }
    return PyramidSplit{std::move(cur), std::move(apices), std::move(steps)};
}

TotallyCyclicReduction totally_cyclic_reduction(const VectorConfiguration& v) {
    std::size_t before = dual_degree(v).codegree;
    TotallyCyclicReduction out{{}, v};
    if (v.rank() == 0 || is_totally_cyclic(v)) {
        out.kept = v.labels();
    } else {
        OriginCertificate cert = origin_position(v.coords(), v.rank());
        require_input(cert.kind != OriginPosition::OUTSIDE,
                      "totally_cyclic_reduction: origin outside the hull");
        for (std::size_t i = 0; i < v.count(); ++i)
            if (sgn(cert.dependence[i]) > 0) out.kept.push_back(v.label_at(i));
        out.sub = restrict_to(v, out.kept);
    }
    require_internal(is_totally_cyclic(out.sub), "totally_cyclic_reduction: result not cyclic");
    require_check(dual_degree(out.sub).codegree == before,
                  "totally_cyclic_reduction changed the codegree");
    return out;
}

PureReduction pure_reduction(const VectorConfiguration& v) {
    require_input(is_totally_cyclic(v), "pure_reduction: configuration not totally cyclic");
    int before = dual_degree(v).degree;
    PureReduction out{{}, v};
    while (true) {
        ViolationScan s = scan_violations(out.quotient);
        if (s.all.empty()) break;
        std::optional<int> lowest;
        for (const PurityViolation& pv : s.all) {
            for (int lab : pv.strict_pos)
                if (!lowest || lab < *lowest) lowest = lab;
            for (int lab : pv.strict_neg)
                if (!lowest || lab < *lowest) lowest = lab;
        }
        require_internal(lowest.has_value(), "pure_reduction: violation without participants");
        out.quotient = contract_vector(out.quotient, *lowest);
        out.contracted.push_back(*lowest);
        require_internal(is_totally_cyclic(out.quotient),
                         "pure_reduction: contraction broke total cyclicity");
        require_check(dual_degree(out.quotient).degree == before,
                      "pure_reduction changed the dual degree");
    }
    return out;
}

std::optional<std::vector<std::pair<int, int>>> is_lawrence(const VectorConfiguration& v) {
    const std::size_t n = v.count();
    if (n % 2 != 0) return std::nullopt;
    std::vector<bool> matched(n, false);
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t p = 0; p < n; ++p) {
        if (matched[p]) continue;
        const QVec& u = v.at(p);
        bool found = false;
        for (std::size_t q = p + 1; q < n && !found; ++q) {
            if (matched[q]) continue;
            const QVec& w = v.at(q);
            if (is_zero_vec(u)) {
                if (!is_zero_vec(w)) continue;
            } else {
                if (is_zero_vec(w)) continue;
                // w must be a negative multiple of u.
                std::size_t k0 = 0;
                while (sgn(u[k0]) == 0) ++k0;
                Rat lambda = -w[k0] / u[k0];
                if (sgn(lambda) <= 0) continue;
                bool anti = true;
                for (std::size_t k = 0; k < v.rank() && anti; ++k) {
                    Rat t = w[k] + lambda * u[k];
                    anti = sgn(t) == 0;
                }
                if (!anti) continue;
            }
            matched[p] = matched[q] = true;
            pairs.emplace_back(v.label_at(p), v.label_at(q));
            found = true;
        }
        if (!found) return std::nullopt;
    }
    return pairs;
}

} // namespace galedeg
