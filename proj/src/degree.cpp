#include "galedeg/degree.hpp"

#include <algorithm>
#include <cstdint>

#include "galedeg/circuits.hpp"

namespace galedeg {

namespace {

// Visits the k-subsets of {0..n-1} as ascending index vectors, in
// lexicographic order, until the visitor returns true. Returns whether any
// visit did.
template <typename F>
bool first_combination(std::size_t n, std::size_t k, F visit) {
    if (k > n) return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (visit(idx)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

std::vector<Facet> facets(const PointConfiguration& a) {
    const std::size_t d = a.dim();
    const std::size_t n = a.count();
    if (d == 0) return {};
    std::vector<QVec> homog = a.homogenized();

    std::vector<Facet> out;
    std::vector<std::vector<int>> seen_members;
    // Every facet affinely spans its hyperplane with d of its members, so
    // scanning the affinely independent d-subsets finds them all.
    first_combination(n, d, [&](const std::vector<std::size_t>& idx) {
        std::vector<QVec> rows;
        rows.reserve(d);
        for (std::size_t i : idx) rows.push_back(homog[i]);
        std::vector<QVec> ker = kernel_basis(QMatrix::from_rows(rows, d + 1));
        if (ker.size() != 1) return false;  // not affinely independent
        QVec h = ker[0];
        int pos = 0, neg = 0;
        std::vector<int> members;
        for (std::size_t i = 0; i < n; ++i) {
            int s = sgn(dot(h, homog[i]));
            if (s > 0) ++pos;
            if (s < 0) ++neg;
            if (s == 0) members.push_back(a.label_at(i));
        }
        if (pos > 0 && neg > 0) return false;  // not supporting
        require_internal(pos + neg > 0, "facets: functional vanishing on a spanning set");
        if (neg > 0)
            for (Rat& x : h) x = -x;
        if (std::find(seen_members.begin(), seen_members.end(), members) ==
            seen_members.end()) {
            seen_members.push_back(members);
            out.push_back(Facet{std::move(members), Hyperplane{std::move(h)}});
        }
        return false;
    });
    std::sort(out.begin(), out.end(),
              [](const Facet& x, const Facet& y) { return x.members < y.members; });
    return out;
}

bool is_interior_face(const PointConfiguration& a, const std::vector<int>& labels) {
    require_input(!labels.empty(), "the empty set is not a face");
    std::vector<int> s = labels;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        require_input(s[i] != s[i + 1], "repeated label in face query");
    for (int lab : s) require_input(a.has_label(lab), "face query label not present");
    for (const Facet& f : facets(a))
        if (std::includes(f.members.begin(), f.members.end(), s.begin(), s.end()))
            return false;
    return true;
}

DegreeReport degree_primal(const PointConfiguration& a) {
    PointConfiguration b = dedup_points(a).config;
    const std::size_t n = b.count();
    const std::size_t d = b.dim();
    require_input(n <= 63, "primal degree search is limited to 63 distinct points");

    std::vector<std::uint64_t> fmasks;
    for (const Facet& f : facets(b)) {
        std::uint64_t m = 0;
        for (int lab : f.members) m |= (std::uint64_t{1} << b.pos_of(lab));
        fmasks.push_back(m);
    }

    DegreeReport rep;
    for (std::size_t k = 1; k <= d + 1; ++k) {
        bool found = first_combination(n, k, [&](const std::vector<std::size_t>& idx) {
            std::uint64_t m = 0;
            for (std::size_t i : idx) m |= (std::uint64_t{1} << i);
            for (std::uint64_t fm : fmasks)
                if ((m & fm) == m) return false;  // inside a facet
            for (std::size_t i : idx) rep.witness_face.push_back(b.label_at(i));
            return true;
        });
        if (found) {
            rep.codegree = static_cast<int>(k);
            rep.degree = static_cast<int>(d) + 1 - static_cast<int>(k);
            return rep;
        }
    }
    throw internal_error("degree_primal: no interior face found");
}

DegreeReport dual_degree(const VectorConfiguration& v) {
    const std::size_t n = v.count();
    const std::size_t r = v.rank();

    std::vector<std::uint32_t> supports;
    for (const Circuit& c : positive_circuits(v)) {
        std::uint32_t m = 0;
        for (const auto& [lab, co] : c.dependence) m |= (1u << v.pos_of(lab));
        supports.push_back(m);
    }

    DegreeReport rep;
    std::size_t kappa = min_hitting_set_size(supports);
    rep.codegree = static_cast<int>(kappa);
    rep.degree = static_cast<int>(n) - static_cast<int>(r) - static_cast<int>(kappa);
    require_internal(rep.degree >= 0, "dual_degree: negative degree");

    std::uint32_t wmask = lex_first_hitting_set(supports, kappa, n);
    for (std::size_t p = 0; p < n; ++p)
        if (wmask & (1u << p)) rep.witness_face.push_back(v.label_at(p));

    if (r >= 1) {
        // The complement T of the witness contains no positive circuit
        // support, so a strictly positive functional on T exists; it is then
        // strictly positive on exactly rank + degree vectors (no hyperplane
        // beats that count).
        std::vector<QVec> t;
        for (std::size_t p = 0; p < n; ++p)
            if (!(wmask & (1u << p))) t.push_back(v.at(p));
        std::optional<QVec> c = strict_separation(t, r);
        require_internal(c.has_value(), "dual_degree: hyperplane witness missing");
        std::size_t strict = 0;
        for (std::size_t p = 0; p < n; ++p) {
            int s = sgn(dot(*c, v.at(p)));
            if (wmask & (1u << p))
                require_internal(s <= 0, "dual_degree: witness positive on the hitting set");
            if (s > 0) ++strict;
        }
        require_internal(strict == r + static_cast<std::size_t>(rep.degree),
                         "dual_degree: wrong strict-positive count");
        rep.witness_hyperplane = Hyperplane{std::move(*c)};
    }
    return rep;
}

int degree_oracle(const PointConfiguration& a) {
    const std::size_t n = a.count();
    const std::size_t d = a.dim();
    require_input(n <= 20, "the degree oracle is limited to 20 points");

    std::vector<std::uint32_t> fmasks;
    for (const Facet& f : facets(a)) {
        std::uint32_t m = 0;
        for (int lab : f.members) m |= (1u << a.pos_of(lab));
        fmasks.push_back(m);
    }
    std::vector<QVec> homog = a.homogenized();

    int best = -1;
    const std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        bool buried = false;
        for (std::uint32_t fm : fmasks)
            if ((mask & fm) == mask) {
                buried = true;
                break;
            }
        if (buried) continue;
        std::vector<QVec> rows;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) rows.push_back(homog[i]);
        int affdim = static_cast<int>(rank_of_rows(rows, d + 1)) - 1;
        best = std::max(best, static_cast<int>(d) - affdim);
    }
    require_internal(best >= 0, "degree_oracle: no interior subset");
    return best;
}

SectionQuotientDegrees section_quotient_degrees(const VectorConfiguration& v,
                                                const std::vector<int>& sub_labels) {
    std::vector<int> w = sub_labels;
    std::sort(w.begin(), w.end());
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        require_input(w[i] != w[i + 1], "repeated label in section");
    for (int lab : w) require_input(v.has_label(lab), "section label not present");

    std::vector<QVec> wrows;
    for (int lab : w) wrows.push_back(v.at(v.pos_of(lab)));
    const std::size_t rank_w = rank_of_rows(wrows, v.rank());
    for (std::size_t i = 0; i < v.count(); ++i) {
        int lab = v.label_at(i);
        if (std::find(w.begin(), w.end(), lab) != w.end()) continue;
        std::vector<QVec> probe = wrows;
        probe.push_back(v.at(i));
        require_input(rank_of_rows(probe, v.rank()) > rank_w,
                      "vector " + std::to_string(lab) +
                          " lies in the span of the section labels but is not among them");
    }

    SectionQuotientDegrees out;
    out.sub = w.empty() ? 0 : dual_degree(restrict_to(v, w)).degree;
    out.quotient = dual_degree(contract_set(v, w)).degree;
    out.total = dual_degree(v).degree;
    require_check(out.total >= out.sub + out.quotient,
                  "section and quotient degrees exceed the total degree");
    return out;
}

} // namespace galedeg
