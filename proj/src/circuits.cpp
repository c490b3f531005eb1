#include "galedeg/circuits.hpp"

#include <algorithm>

#include "galedeg/degree.hpp"

namespace galedeg {

namespace {

Circuit to_labeled(const RawCircuit& rc, const VectorConfiguration& v) {
    Circuit c;
    std::vector<std::pair<int, Rat>> dep;
    dep.reserve(rc.support.size());
    for (std::size_t k = 0; k < rc.support.size(); ++k)
        dep.emplace_back(v.label_at(rc.support[k]), rc.coeffs[k]);
    std::sort(dep.begin(), dep.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // Canonical sign: coefficient of the lowest support label positive.
    if (sgn(dep.front().second) < 0)
        for (auto& [lab, co] : dep) co = -co;
    for (const auto& [lab, co] : dep)
        (sgn(co) > 0 ? c.pos : c.neg).push_back(lab);
    c.dependence = std::move(dep);
    return c;
}

bool support_lex_less(const Circuit& a, const Circuit& b) {
    std::vector<int> sa, sb;
    for (const auto& [lab, co] : a.dependence) sa.push_back(lab);
    for (const auto& [lab, co] : b.dependence) sb.push_back(lab);
    return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
}

std::vector<Circuit> circuits_impl(const VectorConfiguration& v, bool positive_only) {
    std::vector<Circuit> out;
    for (const RawCircuit& rc : raw_circuits(v.coords(), v.rank(), positive_only))
        out.push_back(to_labeled(rc, v));
    std::sort(out.begin(), out.end(), support_lex_less);
    return out;
}

} // namespace

std::vector<Circuit> circuits(const VectorConfiguration& v) { return circuits_impl(v, false); }

std::vector<Circuit> positive_circuits(const VectorConfiguration& v) {
    return circuits_impl(v, true);
}

namespace {

std::uint32_t lowest_bit(std::uint32_t m) { return m & (~m + 1); }

// Greedy hitting set (pick the element covering the most unhit sets); its size
// is an upper bound on the minimum.
std::size_t greedy_hitting_size(const std::vector<std::uint32_t>& sets) {
    std::vector<std::uint32_t> unhit = sets;
    std::size_t size = 0;
    while (!unhit.empty()) {
        std::uint32_t all = 0;
        for (std::uint32_t s : unhit) all |= s;
        std::uint32_t best_e = 0;
        std::size_t best_cnt = 0;
        for (std::uint32_t m = all; m;) {
            std::uint32_t e = lowest_bit(m);
            m ^= e;
            std::size_t cnt = 0;
            for (std::uint32_t s : unhit) cnt += (s & e) ? 1 : 0;
            if (cnt > best_cnt) {
                best_cnt = cnt;
                best_e = e;
            }
        }
        std::vector<std::uint32_t> next;
        for (std::uint32_t s : unhit)
            if (!(s & best_e)) next.push_back(s);
        unhit = std::move(next);
        ++size;
    }
    return size;
}

// Greedy disjoint packing among the given sets: a lower bound on the minimum
// hitting set, used for pruning.
std::size_t greedy_disjoint_packing(const std::vector<std::uint32_t>& sets) {
    std::uint32_t used = 0;
    std::size_t cnt = 0;
    for (std::uint32_t s : sets)
        if (!(s & used)) {
            used |= s;
            ++cnt;
        }
    return cnt;
}

void hitting_dfs(const std::vector<std::uint32_t>& sets, std::uint32_t chosen,
                 std::size_t count, std::size_t& best) {
    std::vector<std::uint32_t> unhit;
    for (std::uint32_t s : sets)
        if (!(s & chosen)) unhit.push_back(s);
    if (unhit.empty()) {
        best = std::min(best, count);
        return;
    }
    if (count + greedy_disjoint_packing(unhit) >= best) return;
    std::uint32_t branch = unhit.front();
    for (std::uint32_t m = branch; m;) {
        std::uint32_t e = lowest_bit(m);
        m ^= e;
        hitting_dfs(sets, chosen | e, count + 1, best);
    }
}

} // namespace

std::size_t min_hitting_set_size(const std::vector<std::uint32_t>& sets) {
    for (std::uint32_t s : sets)
        require_internal(s != 0, "min_hitting_set: empty set is unhittable");
    if (sets.empty()) return 0;
    std::size_t best = greedy_hitting_size(sets);
    hitting_dfs(sets, 0, 0, best);
    return best;
}

std::uint32_t lex_first_hitting_set(const std::vector<std::uint32_t>& sets, std::size_t size,
                                    std::size_t universe) {
    if (size == 0) return 0;
    // First k-subset of {0..universe-1}, in lex order of ascending index
    // sequences, that hits every set.
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
        std::uint32_t mask = 0;
        for (std::size_t i : idx) mask |= (1u << i);
        bool hits = true;
        for (std::uint32_t s : sets) hits = hits && (s & mask);
        if (hits) return mask;
        std::size_t i = size;
        while (i > 0 && idx[i - 1] == universe - size + i - 1) --i;
        require_internal(i > 0, "lex_first_hitting_set: no hitting set of stated size");
        ++idx[i - 1];
        for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

namespace {

struct PackingSearch {
    const std::vector<std::uint32_t>& masks;
    std::size_t best = 0;

    // Upper bound on how many pairwise disjoint sets can still be added from
    // masks[from..] avoiding `used`: any hitting set of the remaining sets
    // bounds any packing of them. Exact minimum when few sets remain.
    std::size_t bound(std::size_t from, std::uint32_t used) const {
        std::vector<std::uint32_t> rem;
        for (std::size_t i = from; i < masks.size(); ++i)
            if (!(masks[i] & used)) rem.push_back(masks[i]);
        if (rem.empty()) return 0;
        if (rem.size() <= 20) return min_hitting_set_size(rem);
        return greedy_hitting_size(rem);
    }

    void search(std::size_t from, std::uint32_t used, std::size_t count) {
        best = std::max(best, count);
        if (from >= masks.size()) return;
        if (count + bound(from, used) <= best) return;
        for (std::size_t i = from; i < masks.size(); ++i) {
            if (masks[i] & used) continue;
            search(i + 1, used | masks[i], count + 1);
        }
    }

    // First packing of exactly `target` sets in lex order of index sequences.
    bool reconstruct(std::size_t from, std::uint32_t used, std::size_t count,
                     std::size_t target, std::vector<std::size_t>& picked) {
        if (count == target) return true;
        for (std::size_t i = from; i < masks.size(); ++i) {
            if (masks[i] & used) continue;
            picked.push_back(i);
            if (reconstruct(i + 1, used | masks[i], count + 1, target, picked)) return true;
            picked.pop_back();
        }
        return false;
    }
};

} // namespace

WeakCayley max_weak_cayley(const VectorConfiguration& v) {
    std::vector<Circuit> pos = positive_circuits(v);
    std::vector<std::uint32_t> masks;
    masks.reserve(pos.size());
    for (const Circuit& c : pos) {
        std::uint32_t m = 0;
        for (const auto& [lab, co] : c.dependence) m |= (1u << v.pos_of(lab));
        masks.push_back(m);
    }
    PackingSearch ps{masks};
    ps.search(0, 0, 0);
    std::vector<std::size_t> picked;
    bool found = ps.reconstruct(0, 0, 0, ps.best, picked);
    require_internal(found, "max_weak_cayley: reconstruction failed");

    WeakCayley out;
    std::uint32_t covered = 0;
    for (std::size_t i : picked) {
        out.factors.push_back(pos[i]);
        covered |= masks[i];
    }
    for (std::size_t p = 0; p < v.count(); ++p)
        if (!(covered & (1u << p))) out.residual.push_back(v.label_at(p));
    return out;
}

std::optional<std::vector<std::vector<int>>> max_combinatorial_cayley(
    const VectorConfiguration& v) {
    if (!is_totally_cyclic(v)) return std::nullopt;
    const std::size_t n = v.count();
    require_input(n <= 16, "combinatorial Cayley enumeration is limited to 16 vectors");
    if (n == 0) return std::vector<std::vector<int>>{};

    std::vector<std::uint32_t> circuit_masks;
    for (const Circuit& c : positive_circuits(v)) {
        std::uint32_t m = 0;
        for (const auto& [lab, co] : c.dependence) m |= (1u << v.pos_of(lab));
        circuit_masks.push_back(m);
    }

    const std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
    // mask is a positive vector iff it is exactly a union of positive circuit
    // supports it contains (conformal decomposition).
    std::vector<char> posvec(full + 1, 0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t un = 0;
        for (std::uint32_t cm : circuit_masks)
            if ((cm & mask) == cm) un |= cm;
        posvec[mask] = (un == mask) ? 1 : 0;
    }

    std::vector<int> parts_count(full + 1, -1);
    parts_count[0] = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t low = lowest_bit(mask);
        std::uint32_t rest = mask ^ low;
        int best = -1;
        // Submasks of mask containing `low`: P = low | s over submasks s of rest.
        std::uint32_t s = rest;
        while (true) {
            std::uint32_t p = low | s;
            if (posvec[p] && parts_count[mask ^ p] >= 0)
                best = std::max(best, parts_count[mask ^ p] + 1);
            if (s == 0) break;
            s = (s - 1) & rest;
        }
        parts_count[mask] = best;
    }
    require_internal(parts_count[full] >= 1, "max_combinatorial_cayley: cyclic but no partition");

    std::vector<std::vector<int>> parts;
    std::uint32_t mask = full;
    while (mask) {
        std::uint32_t low = lowest_bit(mask);
        std::uint32_t rest = mask ^ low;
        // Among optimal parts containing the lowest label, take the one whose
        // ascending label sequence is lexicographically smallest.
        std::optional<std::uint32_t> chosen;
        std::vector<int> chosen_labels;
        std::uint32_t s = rest;
        while (true) {
            std::uint32_t p = low | s;
            if (posvec[p] && parts_count[mask ^ p] + 1 == parts_count[mask]) {
                std::vector<int> labels;
                for (std::size_t b = 0; b < n; ++b)
                    if (p & (1u << b)) labels.push_back(v.label_at(b));
                if (!chosen || std::lexicographical_compare(labels.begin(), labels.end(),
                                                            chosen_labels.begin(),
                                                            chosen_labels.end())) {
                    chosen = p;
                    chosen_labels = std::move(labels);
                }
            }
            if (s == 0) break;
            s = (s - 1) & rest;
        }
        require_internal(chosen.has_value(), "max_combinatorial_cayley: broken table");
        parts.push_back(std::move(chosen_labels));
        mask ^= *chosen;
    }
    return parts;
}

PrimalCayleyCheck verify_weak_cayley_primal(const PointConfiguration& a,
                                            const std::vector<std::vector<int>>& factors) {
    PrimalCayleyCheck out;
    std::vector<int> seen;
    for (const std::vector<int>& f : factors) {
        if (f.empty()) {
            out.reason = "empty factor";
            return out;
        }
        for (int lab : f) {
            require_input(a.has_label(lab), "factor label not in the configuration");
            if (std::find(seen.begin(), seen.end(), lab) != seen.end()) {
                out.reason = "factors are not pairwise disjoint";
                return out;
            }
            seen.push_back(lab);
        }
    }

    std::vector<QVec> homog = a.homogenized();
    for (const std::vector<int>& f : factors) {
        std::vector<QVec> comp_rows;
        std::vector<std::size_t> factor_pos;
        for (std::size_t i = 0; i < a.count(); ++i) {
            if (std::find(f.begin(), f.end(), a.label_at(i)) == f.end())
                comp_rows.push_back(homog[i]);
            else
                factor_pos.push_back(i);
        }
        // Affine functionals vanishing on the complement; then a strictly
        // positive combination on the factor.
        std::vector<QVec> ker = kernel_basis(QMatrix::from_rows(comp_rows, a.dim() + 1));
        if (ker.empty()) {
            out.reason = "complement of a factor affinely spans; the factor is not exposed";
            return out;
        }
        std::vector<QVec> evals;
        for (std::size_t i : factor_pos) {
            QVec e(ker.size());
            for (std::size_t k = 0; k < ker.size(); ++k) e[k] = dot(ker[k], homog[i]);
            evals.push_back(std::move(e));
        }
        std::optional<QVec> mu = strict_separation(evals, ker.size());
        if (!mu) {
            out.reason = "no supporting functional is strictly positive on a factor";
            return out;
        }
        QVec normal(a.dim() + 1, Rat(0));
        for (std::size_t k = 0; k < ker.size(); ++k)
            for (std::size_t j = 0; j <= a.dim(); ++j) normal[j] += (*mu)[k] * ker[k][j];
        make_primitive(normal);
        // make_primitive may flip the overall sign; re-orient on the factor.
        if (sgn(dot(normal, homog[factor_pos.front()])) < 0)
            for (Rat& x : normal) x = -x;
        for (std::size_t i = 0; i < a.count(); ++i) {
            int s = sgn(dot(normal, homog[i]));
            bool in_factor = std::find(f.begin(), f.end(), a.label_at(i)) != f.end();
            require_internal(in_factor ? s > 0 : s == 0,
                             "verify_weak_cayley_primal: witness substitution failed");
        }
        std::vector<int> fs = f;
        std::sort(fs.begin(), fs.end());
        out.witnesses.push_back(FaceWitness{std::move(fs), Hyperplane{std::move(normal)}});
    }
    out.ok = true;
    return out;
}

SmallCircuitReport check_small_circuits_deg1(const VectorConfiguration& v) {
    require_input(is_pure(v), "small-circuit check expects a pure configuration");
    require_input(dual_degree(v).degree == 1,
                  "small-circuit check expects dual degree exactly 1");
    SmallCircuitReport out;
    out.expected_size = static_cast<int>(v.rank()) + 1;
    for (const Circuit& c : circuits(v)) {
        if (c.pos.empty() || c.neg.empty()) continue;  // one-signed
        if (c.dependence.size() != static_cast<std::size_t>(out.expected_size)) {
            out.ok = false;
            out.counterexample = c;
            return out;
        }
    }
    return out;
}

} // namespace galedeg
