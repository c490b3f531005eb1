#include "galedeg/separation.hpp"

#include <algorithm>
#include <cstdint>

namespace galedeg {

namespace {

// Scales v by a positive rational to coprime integer entries (no sign flip,
// unlike make_primitive).
void make_primitive_positive(QVec& v) {
    int lead = 0;
    for (const Rat& x : v)
        if ((lead = sgn(x)) != 0) break;
    make_primitive(v);
    if (lead < 0)
        for (Rat& x : v) x = -x;
}

// Ascending-index combinations of size k from {0..n-1}, visited in lex order.
template <typename F>
void for_each_combination(std::size_t n, std::size_t k, F&& visit) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!visit(idx)) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

std::vector<RawCircuit> raw_circuits(const std::vector<QVec>& w, std::size_t dim,
                                     bool positive_only) {
    const std::size_t n = w.size();
    require_input(n <= 31, "too many vectors for circuit enumeration (limit 31)");
    for (const QVec& v : w) require_internal(v.size() == dim, "raw_circuits: ragged input");

    const std::size_t r = rank_of_rows(w, dim);
    std::vector<RawCircuit> found;
    std::vector<std::uint32_t> found_masks;  // includes non-positive circuits, for pruning

    for (std::size_t size = 1; size <= r + 1 && size <= n; ++size) {
        for_each_combination(n, size, [&](const std::vector<std::size_t>& idx) {
            std::uint32_t mask = 0;
            for (std::size_t i : idx) mask |= (1u << i);
            for (std::uint32_t fm : found_masks)
                if ((fm & mask) == fm) return true;  // proper superset of a circuit

            std::vector<QVec> cols;
            cols.reserve(size);
            for (std::size_t i : idx) cols.push_back(w[i]);
            std::vector<QVec> ker = kernel_basis(QMatrix::from_cols(cols, dim));
            if (ker.size() != 1) return true;
            const QVec& lam = ker[0];
            for (const Rat& x : lam)
                if (sgn(x) == 0) return true;  // dependence misses an index: not minimal

            found_masks.push_back(mask);
            bool positive = true;
            for (const Rat& x : lam) positive = positive && sgn(x) > 0;
            if (!positive_only || positive) found.push_back(RawCircuit{idx, lam});
            return true;
        });
    }
    std::sort(found.begin(), found.end(), [](const RawCircuit& a, const RawCircuit& b) {
        return std::lexicographical_compare(a.support.begin(), a.support.end(),
                                            b.support.begin(), b.support.end());
    });
    return found;
}

std::optional<QVec> strict_separation(const std::vector<QVec>& t, std::size_t dim) {
    if (t.empty()) {
        QVec c(dim, Rat(0));
        if (dim > 0) c[0] = 1;
        return c;  // vacuous certificate, by convention the first unit vector
    }
    for (const QVec& v : t) require_internal(v.size() == dim, "strict_separation: ragged input");

    Rref span = rref(QMatrix::from_rows(t, dim));
    const std::size_t rho = span.pivots.size();
    if (rho == 0) return std::nullopt;  // only zero vectors; nothing is strictly positive

    std::vector<QVec> basis(rho, QVec(dim));
    for (std::size_t k = 0; k < rho; ++k)
        for (std::size_t j = 0; j < dim; ++j) basis[k][j] = span.mat.at(k, j);

    const std::size_t n = t.size();
    std::vector<QVec> evals(n, QVec(rho));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < rho; ++k) evals[i][k] = dot(basis[k], t[i]);

    std::optional<QVec> best;
    for_each_combination(n, rho, [&](const std::vector<std::size_t>& idx) {
        QMatrix eb(rho, rho);
        for (std::size_t a = 0; a < rho; ++a)
            for (std::size_t k = 0; k < rho; ++k) eb.at(a, k) = evals[idx[a]][k];
        if (rank_of(eb) != rho) return true;
        std::optional<QVec> y = solve_linear(eb, QVec(rho, Rat(1)));
        require_internal(y.has_value(), "strict_separation: singular basic system");
        bool feasible = true;
        for (std::size_t i = 0; i < n && feasible; ++i) feasible = sgn(dot(*y, evals[i])) > 0;
        if (!feasible) return true;
        QVec c(dim, Rat(0));
        for (std::size_t k = 0; k < rho; ++k)
            for (std::size_t j = 0; j < dim; ++j) c[j] += (*y)[k] * basis[k][j];
        make_primitive_positive(c);
        if (!best || lex_less(c, *best)) best = std::move(c);
        return true;
    });
    return best;
}

OriginCertificate origin_position(const std::vector<QVec>& w, std::size_t dim) {
    const std::size_t n = w.size();
    OriginCertificate cert;
    std::vector<RawCircuit> pos = raw_circuits(w, dim, true);

    if (pos.empty()) {
        cert.kind = OriginPosition::OUTSIDE;
        std::optional<QVec> c = strict_separation(w, dim);
        require_internal(c.has_value(),
                         "origin_position: no positive circuit yet no separator");
        cert.normal = *c;
        return cert;
    }

    std::vector<bool> in_star(n, false);
    QVec dep(n, Rat(0));
    for (const RawCircuit& c : pos)
        for (std::size_t k = 0; k < c.support.size(); ++k) {
            in_star[c.support[k]] = true;
            dep[c.support[k]] += c.coeffs[k];
        }
    make_primitive(dep);
    cert.dependence = dep;
    for (std::size_t j = 0; j < dim; ++j) {
        Rat s = 0;
        for (std::size_t i = 0; i < n; ++i) s += dep[i] * w[i][j];
        require_internal(sgn(s) == 0, "origin_position: dependence does not vanish");
    }

    std::size_t star = 0;
    for (bool b : in_star) star += b ? 1 : 0;
    if (star == n) {
        cert.kind = OriginPosition::IN_RELINT;
        return cert;
    }

    cert.kind = OriginPosition::IN_HULL_NOT_RELINT;
    // Exposing functional: vanishes on lin(S*), strictly positive on the rest.
    std::vector<QVec> star_rows;
    for (std::size_t i = 0; i < n; ++i)
        if (in_star[i]) star_rows.push_back(w[i]);
    std::vector<QVec> perp = kernel_basis(QMatrix::from_rows(star_rows, dim));
    require_internal(!perp.empty(), "origin_position: face spans ambient space");

    std::vector<QVec> outside_evals;
    for (std::size_t i = 0; i < n; ++i) {
        if (in_star[i]) continue;
        QVec e(perp.size());
        for (std::size_t k = 0; k < perp.size(); ++k) e[k] = dot(perp[k], w[i]);
        outside_evals.push_back(std::move(e));
    }
    std::optional<QVec> mu = strict_separation(outside_evals, perp.size());
    require_internal(mu.has_value(), "origin_position: face not exposable");
    QVec c(dim, Rat(0));
    for (std::size_t k = 0; k < perp.size(); ++k)
        for (std::size_t j = 0; j < dim; ++j) c[j] += (*mu)[k] * perp[k][j];
    make_primitive_positive(c);
    cert.normal = c;

    for (std::size_t i = 0; i < n; ++i) {
        int s = sgn(dot(c, w[i]));
        require_internal(in_star[i] ? s == 0 : s > 0, "origin_position: bad exposing normal");
    }
    return cert;
}

} // namespace galedeg
