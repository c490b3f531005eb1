// Seeded self-check suites. Each suite generates instances, evaluates a
// theorem-backed property on them, and records any violation together with
// the serialized offending instance so it can be replayed through the CLI.

#include "galedeg/checks.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "galedeg/certificate.hpp"
#include "galedeg/circuits.hpp"
#include "galedeg/classify.hpp"
#include "galedeg/configuration.hpp"
#include "galedeg/degree.hpp"
#include "galedeg/depth.hpp"
#include "galedeg/errors.hpp"
#include "galedeg/generators.hpp"
#include "galedeg/io.hpp"
#include "galedeg/rng.hpp"

namespace galedeg {

namespace {

constexpr std::size_t kFailureCap = 5;
constexpr std::size_t kFindingCap = 8;

struct Ctx {
    CheckResult res;
    Rng rng;
    std::size_t trials;
    std::size_t max_n;
    std::size_t max_dim;
    bool corrupt;

    Ctx(const std::string& suite, const CheckOptions& o, std::size_t def_trials,
        std::size_t def_n, std::size_t def_dim)
        : rng(o.seed),
          trials(o.trials ? o.trials : def_trials),
          max_n(o.max_n ? o.max_n : def_n),
          max_dim(o.max_dim ? o.max_dim : def_dim),
          corrupt(o.corrupt_oracle) {
        res.suite = suite;
        res.seed = o.seed;
    }

    void instance() { ++res.instances; }

    bool expect(bool ok, const std::string& what, const std::string& inst) {
        ++res.checks;
        if (!ok && res.failures.size() < kFailureCap) res.failures.push_back({what, inst});
        return ok;
    }

    void finding(const std::string& s) {
        if (res.findings.size() < kFindingCap) res.findings.push_back(s);
    }

    CheckResult done() {
        res.ok = res.failures.empty();
        return res;
    }
};

std::vector<int> iota_labels(std::size_t n) {
    std::vector<int> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<int>(i);
    return out;
}

std::string labels_str(const std::vector<int>& labs) {
    std::string out = "{";
    for (std::size_t i = 0; i < labs.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(labs[i]);
    }
    return out + "}";
}

std::string point_comment(const QVec& x) {
    std::string out = "# query point:";
    for (const Rat& c : x) out += " " + rat_to_string(c);
    return out + "\n";
}

std::size_t affine_dim_of(const std::vector<QVec>& pts, std::size_t ambient) {
    std::vector<QVec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
    if (diffs.empty()) return 0;
    return rank_of_rows(diffs, ambient);
}

// Totally cyclic configuration of n nonzero vectors of rank r: for n = r + 1
// a scaled basis plus one negative combination (the unique shape at that
// count), otherwise rejection sampling with a Gale-dual fallback.
VectorConfiguration rand_tc_vectors(Rng& rng, std::size_t n, std::size_t r) {
    require_internal(r >= 1 && n >= r + 1, "rand_tc_vectors: need n > r >= 1");
    if (n == r + 1) {
        std::vector<QVec> vecs;
        QVec last(r, Rat(0));
        for (std::size_t i = 0; i < r; ++i) {
            QVec e(r, Rat(0));
            e[i] = Rat(static_cast<long>(1 + rng.below(3)));
            last[i] = -Rat(static_cast<long>(1 + rng.below(3)));
            vecs.push_back(e);
        }
        vecs.push_back(last);
        return VectorConfiguration::trusted(iota_labels(n), vecs, r);
    }
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<QVec> vecs;
        for (std::size_t i = 0; i < n; ++i) {
            QVec w(r);
            do {
                for (std::size_t j = 0; j < r; ++j) w[j] = Rat(rng.range(-4, 4));
            } while (is_zero_vec(w));
            vecs.push_back(w);
        }
        if (rank_of_rows(vecs, r) != r) continue;
        VectorConfiguration v = VectorConfiguration::trusted(iota_labels(n), vecs, r);
        if (is_totally_cyclic(v)) return v;
    }
    return gale_dual(rand_points(n, n - r - 1, rng));
}

// Face lattice of b versus total cyclicity of dual complements: a nonempty
// proper label set is the point set of a face of conv(b) exactly when the
// complementary Gale vectors positively span their own space.
bool faces_match_dual(const PointConfiguration& b, const VectorConfiguration& g,
                      std::string& mismatch) {
    const std::size_t n = b.count();
    std::vector<std::uint32_t> fmasks;
    for (const Facet& f : facets(b)) {
        std::uint32_t m = 0;
        for (int lab : f.members) m |= (1u << b.pos_of(lab));
        fmasks.push_back(m);
    }
    const std::uint32_t full = static_cast<std::uint32_t>((1u << n) - 1);
    for (std::uint32_t m = 1; m < full; ++m) {
        bool supported = false;
        std::uint32_t inter = full;
        for (std::uint32_t fm : fmasks)
            if ((m & fm) == m) {
                supported = true;
                inter &= fm;
            }
        const bool primal_face = supported && inter == m;
        std::vector<int> subset, comp;
        for (std::size_t p = 0; p < n; ++p) {
            if (m & (1u << p))
                subset.push_back(b.label_at(p));
            else
                comp.push_back(g.label_at(p));
        }
        const bool dual_cyclic = is_totally_cyclic(restrict_to(g, comp));
        if (primal_face != dual_cyclic) {
            mismatch = "subset " + labels_str(subset) +
                       (primal_face ? " is a face but its dual complement is not totally cyclic"
                                    : " is not a face but its dual complement is totally cyclic");
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- primal-dual

void suite_primal_dual(Ctx& ctx) {
    std::vector<PointConfiguration> preamble = {
        pentagon_config(),    pentagon_join_config(2), lifted_config(2),
        prism_config(3),      edge_simplex_config(3),
    };
    bool corrupt_pending = ctx.corrupt;
    const std::size_t total = preamble.size() + ctx.trials;
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::optional<PointConfiguration> hold;
        if (idx < preamble.size()) {
            hold = preamble[idx];
        } else {
            std::size_t dmax = std::min<std::size_t>(ctx.max_dim, 12);
            if (ctx.max_n >= 3) dmax = std::min(dmax, ctx.max_n - 2);
            if (dmax < 1) dmax = 1;
            const std::size_t d = 1 + ctx.rng.below(dmax);
            const std::size_t span = ctx.max_n >= d + 2 ? ctx.max_n - d - 1 : 1;
            const std::size_t n = d + 2 + ctx.rng.below(span);
            hold = rand_points(n, d, ctx.rng);
        }
        const PointConfiguration& a = *hold;
        ctx.instance();
        const std::string inst = serialize_points(a);

        DedupResult dd = dedup_points(a);
        DegreeReport pr = degree_primal(a);
        VectorConfiguration g = gale_dual(dd.config);
        DegreeReport du = dual_degree(g);

        ctx.expect(pr.degree == du.degree && pr.codegree == du.codegree,
                   "primal degree " + std::to_string(pr.degree) + "/" +
                       std::to_string(pr.codegree) + " differs from dual " +
                       std::to_string(du.degree) + "/" + std::to_string(du.codegree),
                   inst);
        ctx.expect(pr.witness_face == du.witness_face,
                   "primal witness " + labels_str(pr.witness_face) + " differs from dual witness " +
                       labels_str(du.witness_face),
                   inst);
        ctx.expect(pr.degree + pr.codegree == static_cast<int>(dd.config.dim()) + 1,
                   "degree + codegree != dim + 1", inst);
        ctx.expect(is_interior_face(dd.config, pr.witness_face),
                   "degree witness " + labels_str(pr.witness_face) + " is not an interior face",
                   inst);
        {
            std::vector<QVec> wpts;
            for (int lab : pr.witness_face) wpts.push_back(dd.config.at(dd.config.pos_of(lab)));
            ctx.expect(affine_dim_of(wpts, dd.config.dim()) + 1 == wpts.size(),
                       "degree witness is affinely dependent", inst);
        }

        if (dd.config.count() <= 12) {
            int oracle = degree_oracle(dd.config);
            if (corrupt_pending) {
                oracle += 1;  // deliberate self-test corruption, first oracle use only
                corrupt_pending = false;
            }
            ctx.expect(pr.degree == oracle,
                       "degree " + std::to_string(pr.degree) + " disagrees with the exhaustive oracle " +
                           std::to_string(oracle),
                       inst);
        }

        if (idx % 10 == 9) {
            std::vector<QVec> pts = a.coords();
            pts.push_back(a.at(0));
            PointConfiguration doubled =
                PointConfiguration::trusted(iota_labels(pts.size()), pts, a.dim());
            DegreeReport pr2 = degree_primal(doubled);
            ctx.expect(pr2.degree == pr.degree && pr2.codegree == pr.codegree,
                       "repeating a point changed the degree", inst);
        }

        {
            const std::size_t drop = ctx.rng.below(a.count());
            std::vector<QVec> kept;
            std::vector<int> kl;
            for (std::size_t p = 0; p < a.count(); ++p)
                if (p != drop) {
                    kept.push_back(a.at(p));
                    kl.push_back(a.label_at(p));
                }
            if (kept.size() >= 2 && affine_dim_of(kept, a.dim()) == a.dim()) {
                PointConfiguration rest = PointConfiguration::trusted(kl, kept, a.dim());
                ctx.expect(degree_primal(rest).degree <= pr.degree,
                           "deleting point " + std::to_string(a.label_at(drop)) +
                               " increased the degree",
                           inst);
            }
        }
        {
            const int dl = g.label_at(ctx.rng.below(g.count()));
            ctx.expect(dual_degree(delete_vector(g, dl)).degree <= du.degree,
                       "deleting dual vector " + std::to_string(dl) + " increased the dual degree",
                       inst);
            const int cl = g.label_at(ctx.rng.below(g.count()));
            ctx.expect(dual_degree(contract_vector(g, cl)).degree <= du.degree,
                       "contracting dual vector " + std::to_string(cl) +
                           " increased the dual degree",
                       inst);
        }

        if (dd.config.count() <= 8 && dd.config.dim() >= 1) {
            std::string mismatch;
            ctx.expect(faces_match_dual(dd.config, g, mismatch),
                       "face lattice vs dual total cyclicity: " + mismatch, inst);
        }
    }
}

// ----------------------------------------------------------------------- deg1

struct Deg1Shared {
    std::vector<PointConfiguration> delta1_pool;  // apex free, distinct points
};

void deg1_common_checks(Ctx& ctx, const PointConfiguration& a, const Classification& c,
                        int expected_degree, const std::string& inst) {
    ctx.expect(c.degree == expected_degree,
               "classified degree " + std::to_string(c.degree) + ", expected " +
                   std::to_string(expected_degree),
               inst);
    if (a.count() <= 12)
        ctx.expect(degree_oracle(a) == expected_degree,
                   "exhaustive oracle disagrees with the expected degree", inst);
    ctx.expect(degree_primal(a).degree == c.degree, "classification degree differs from degree_primal",
               inst);
    CommandOutput co = run_classify(inst);
    VerifyReport vr = verify_certificate(inst, co.cert);
    ctx.expect(vr.ok, "classification certificate rejected: " + vr.failure, inst);
}

void deg1_case_prism(Ctx& ctx, Deg1Shared& shared) {
    for (std::size_t t = 0; t < ctx.trials; ++t) {
        const int d = 3 + static_cast<int>(ctx.rng.below(2));
        PointConfiguration base = prism_config(d);
        std::vector<QVec> pts = base.coords();
        const std::size_t budget = 12 - pts.size();
        const std::size_t extra = 1 + ctx.rng.below(std::min<std::size_t>(4, budget));
        std::set<std::pair<int, std::pair<long, long>>> used;
        for (std::size_t e = 0; e < extra; ++e) {
            const int i = static_cast<int>(ctx.rng.below(static_cast<std::uint64_t>(d)));
            const long den = 2 + static_cast<long>(ctx.rng.below(7));
            const long num = 1 + static_cast<long>(ctx.rng.below(static_cast<std::uint64_t>(den - 1)));
            if (!used.insert({i, {num, den}}).second) continue;
            const Rat s = Rat(num) / Rat(den);
            QVec p(base.dim());
            for (std::size_t j = 0; j < base.dim(); ++j) {
                Rat diff = base.at(static_cast<std::size_t>(d) + i)[j] - base.at(i)[j];
                p[j] = base.at(i)[j] + s * diff;
            }
            pts.push_back(p);
        }
        PointConfiguration a = PointConfiguration::trusted(iota_labels(pts.size()), pts, base.dim());
        ctx.instance();
        const std::string inst = serialize_points(a);
        Classification c = classify_low_degree(a);
        ctx.expect(c.kind == ClassKind::PRISM_OVER_SIMPLEX_EDGE_POINTS,
                   std::string("expected a prism classification, got ") + class_kind_name(c.kind),
                   inst);
        deg1_common_checks(ctx, a, c, 1, inst);
        if (shared.delta1_pool.size() < 200) shared.delta1_pool.push_back(a);
    }
}

void deg1_case_simplex_edges(Ctx& ctx, Deg1Shared& shared) {
    for (std::size_t t = 0; t < ctx.trials; ++t) {
        const std::size_t d = 3 + ctx.rng.below(5);  // 3..7
        const std::size_t kcap = std::min<std::size_t>(d, 11 - d);
        const std::size_t k = 1 + ctx.rng.below(kcap);
        std::set<int> far;
        while (far.size() < k) far.insert(1 + static_cast<int>(ctx.rng.below(d)));

        std::vector<QVec> pts;
        pts.emplace_back(d, Rat(0));  // common vertex at the origin, label 0
        for (std::size_t i = 1; i <= d; ++i) {
            QVec e(d, Rat(0));
            e[i - 1] = Rat(1);
            pts.push_back(e);
        }
        std::size_t budget = 11 - d - k;  // room for second points per edge
        for (int f : far) {
            std::set<std::pair<long, long>> ts;
            std::size_t cnt = 1;
            if (budget > 0 && ctx.rng.below(3) == 0) {
                ++cnt;
                --budget;
            }
            while (ts.size() < cnt) {
                const long den = 2 + static_cast<long>(ctx.rng.below(7));
                const long num =
                    1 + static_cast<long>(ctx.rng.below(static_cast<std::uint64_t>(den - 1)));
                ts.insert({num, den});
            }
            for (const auto& [num, den] : ts) {
                QVec p(d, Rat(0));
                p[static_cast<std::size_t>(f) - 1] = Rat(num) / Rat(den);
                pts.push_back(p);
            }
        }
        PointConfiguration a = PointConfiguration::trusted(iota_labels(pts.size()), pts, d);
        ctx.instance();
        const std::string inst = serialize_points(a);
        Classification c = classify_low_degree(a);

        std::vector<int> expected_apices;
        for (std::size_t i = 1; i <= d; ++i)
            if (!far.count(static_cast<int>(i))) expected_apices.push_back(static_cast<int>(i));
        if (k == d) {
            ctx.expect(c.kind == ClassKind::SIMPLEX_EDGE_POINTS_AT_VERTEX,
                       std::string("expected simplex-edge classification, got ") +
                           class_kind_name(c.kind),
                       inst);
        } else {
            const bool shaped = c.kind == ClassKind::PYRAMID && c.inner != nullptr;
            ctx.expect(shaped, std::string("expected a pyramid wrapper, got ") +
                                   class_kind_name(c.kind),
                       inst);
            if (shaped) {
                ctx.expect(c.apices == expected_apices,
                           "pyramid apices " + labels_str(c.apices) + ", expected " +
                               labels_str(expected_apices),
                           inst);
                ClassKind want = k == 1   ? ClassKind::DIM_LE_1
                                 : k == 2 ? ClassKind::POLYGON_NO_INTERIOR
                                          : ClassKind::SIMPLEX_EDGE_POINTS_AT_VERTEX;
                ctx.expect(c.inner->kind == want,
                           std::string("pyramid base classified as ") +
                               class_kind_name(c.inner->kind) + ", expected " +
                               class_kind_name(want),
                           inst);
            }
        }
        deg1_common_checks(ctx, a, c, 1, inst);
        if (k == d && shared.delta1_pool.size() < 200) shared.delta1_pool.push_back(a);
    }
}

// Convex polygon sampled on the parabola, optional extra boundary points.
PointConfiguration rand_polygon(Rng& rng, std::size_t vertices, std::size_t boundary_extra) {
    std::set<long> xs;
    while (xs.size() < vertices) xs.insert(rng.range(-8, 8));
    std::vector<QVec> pts;
    for (long x : xs) {
        QVec p = {Rat(x), Rat(x) * Rat(x)};
        pts.push_back(p);
    }
    PointConfiguration hull = PointConfiguration::trusted(iota_labels(pts.size()), pts, 2);
    std::vector<Facet> fs = facets(hull);
    for (std::size_t e = 0; e < boundary_extra; ++e) {
        const Facet& f = fs[rng.below(fs.size())];
        const QVec& p1 = hull.at(hull.pos_of(f.members[0]));
        const QVec& p2 = hull.at(hull.pos_of(f.members[1]));
        const long den = 2 + static_cast<long>(rng.below(7));
        const long num = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(den - 1)));
        const Rat s = Rat(num) / Rat(den);
        QVec p(2);
        for (std::size_t j = 0; j < 2; ++j) {
            Rat diff = p2[j] - p1[j];
            p[j] = p1[j] + s * diff;
        }
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    return PointConfiguration::trusted(iota_labels(pts.size()), pts, 2);
}

void deg1_case_polygon(Ctx& ctx, Deg1Shared& shared) {
    for (std::size_t t = 0; t < ctx.trials; ++t) {
        PointConfiguration a = rand_polygon(ctx.rng, 4 + ctx.rng.below(5), ctx.rng.below(3));
        ctx.instance();
        const std::string inst = serialize_points(a);
        Classification c = classify_low_degree(a);
        ctx.expect(c.kind == ClassKind::POLYGON_NO_INTERIOR,
                   std::string("expected a polygon classification, got ") + class_kind_name(c.kind),
                   inst);
        deg1_common_checks(ctx, a, c, 1, inst);
        if (shared.delta1_pool.size() < 200) shared.delta1_pool.push_back(a);
    }
}

// Iterated pyramid: lift into a new coordinate and add an apex at height 1
// with random base-plane coordinates. Degree is preserved at every step.
PointConfiguration stack_apices(const PointConfiguration& base, std::size_t stack, Rng& rng) {
    std::vector<QVec> pts = base.coords();
    std::size_t dim = base.dim();
    for (std::size_t s = 0; s < stack; ++s) {
        for (QVec& p : pts) p.push_back(Rat(0));
        ++dim;
        QVec apex(dim);
        for (std::size_t j = 0; j + 1 < dim; ++j) apex[j] = Rat(rng.range(-2, 2));
        apex[dim - 1] = Rat(1);
        pts.push_back(apex);
    }
    return PointConfiguration::trusted(iota_labels(pts.size()), pts, dim);
}

void deg1_case_stacked_pyramids(Ctx& ctx) {
    for (std::size_t t = 0; t < ctx.trials; ++t) {
        std::optional<PointConfiguration> base;
        ClassKind want = ClassKind::DIM_LE_1;
        switch (t % 4) {
            case 0:
                base = rand_polygon(ctx.rng, 4 + ctx.rng.below(3), 0);
                want = ClassKind::POLYGON_NO_INTERIOR;
                break;
            case 1:
                base = prism_config(3);
                want = ClassKind::PRISM_OVER_SIMPLEX_EDGE_POINTS;
                break;
            case 2: {
                std::vector<QVec> pts = {{Rat(0)}, {Rat(2)}, {Rat(1)}};
                base = PointConfiguration::trusted(iota_labels(3), pts, 1);
                want = ClassKind::DIM_LE_1;
                break;
            }
            default:
                base = edge_simplex_config(3);
                want = ClassKind::SIMPLEX_EDGE_POINTS_AT_VERTEX;
                break;
        }
        const std::size_t stack = 1 + ctx.rng.below(3);
        PointConfiguration a = stack_apices(*base, stack, ctx.rng);
        ctx.instance();
        const std::string inst = serialize_points(a);
        Classification c = classify_low_degree(a);

        std::vector<int> expected_apices;
        for (std::size_t s = 0; s < stack; ++s)
            expected_apices.push_back(static_cast<int>(base->count() + s));
        const bool shaped = c.kind == ClassKind::PYRAMID && c.inner != nullptr;
        ctx.expect(shaped,
                   std::string("expected a pyramid wrapper, got ") + class_kind_name(c.kind), inst);
        if (shaped) {
            ctx.expect(c.apices == expected_apices,
                       "pyramid apices " + labels_str(c.apices) + ", expected " +
                           labels_str(expected_apices),
                       inst);
            ctx.expect(c.inner->kind == want,
                       std::string("pyramid base classified as ") + class_kind_name(c.inner->kind) +
                           ", expected " + class_kind_name(want),
                       inst);
        }
        deg1_common_checks(ctx, a, c, 1, inst);
    }
}

void deg1_case_high_degree(Ctx& ctx) {
    for (std::size_t t = 0; t < ctx.trials; ++t) {
        std::optional<PointConfiguration> hold;
        for (int tries = 0; tries < 40 && !hold; ++tries) {
            const std::size_t d = 2 + ctx.rng.below(3);
            const std::size_t n = d + 3 + ctx.rng.below(3);
            PointConfiguration cand = rand_points(n, d, ctx.rng);
            if (degree_primal(cand).degree >= 2) hold = cand;
        }
        if (!hold) {
            const std::size_t d = 2 + ctx.rng.below(3);
            std::vector<QVec> pts;
            pts.emplace_back(d, Rat(0));
            for (std::size_t i = 0; i < d; ++i) {
                QVec e(d, Rat(0));
                e[i] = Rat(1);
                pts.push_back(e);
            }
            QVec centroid(d, Rat(1) / Rat(static_cast<long>(d + 1)));
            pts.push_back(centroid);
            hold = PointConfiguration::trusted(iota_labels(pts.size()), pts, d);
        }
        const PointConfiguration& a = *hold;
        ctx.instance();
        const std::string inst = serialize_points(a);

        DegreeReport pr = degree_primal(a);
        Classification c = classify_low_degree(a);
        ctx.expect(c.kind == ClassKind::NOT_DEG_LE_1,
                   std::string("degree ") + std::to_string(pr.degree) + " classified as " +
                       class_kind_name(c.kind),
                   inst);
        ctx.expect(c.degree == pr.degree && c.degree >= 2,
                   "high-degree classification reports the wrong degree", inst);
        DedupResult dd = dedup_points(a);
        ctx.expect(!c.witness_face.empty() && is_interior_face(dd.config, c.witness_face),
                   "high-degree witness " + labels_str(c.witness_face) + " is not interior", inst);
        ctx.expect(static_cast<int>(c.witness_face.size()) + c.degree ==
                       static_cast<int>(dd.config.dim()) + 1,
                   "high-degree witness has the wrong size", inst);
        if (a.count() <= 12)
            ctx.expect(degree_oracle(dd.config) == c.degree,
                       "exhaustive oracle disagrees with the classified degree", inst);
        CommandOutput co = run_classify(inst);
        VerifyReport vr = verify_certificate(inst, co.cert);
        ctx.expect(vr.ok, "high-degree certificate rejected: " + vr.failure, inst);
    }
}

void deg1_dual_circuit_checks(Ctx& ctx, Deg1Shared& shared) {
    // Precondition rejection: a dual-degree-0 configuration must be refused.
    {
        VectorConfiguration v0 = lawrence_config(2, 4, ctx.rng);
        const std::string inst = serialize_vectors(v0);
        ctx.expect(dual_degree(v0).degree == 0, "opposite-ray pair configuration has degree 0",
                   inst);
        bool rejected = false;
        try {
            check_small_circuits_deg1(v0);
        } catch (const input_error&) {
            rejected = true;
        }
        ctx.expect(rejected, "small-circuit check accepted a degree-0 configuration", inst);
    }

    const std::size_t cap = std::max<std::size_t>(ctx.trials / 2, 1);
    std::size_t taken = 0;
    for (const PointConfiguration& b : shared.delta1_pool) {
        if (taken >= cap) break;
        ++taken;
        const std::string inst = serialize_points(b);
        VectorConfiguration g = gale_dual(b);
        DegreeReport du = dual_degree(g);
        if (!ctx.expect(du.degree == 1, "collected configuration is not of degree 1", inst))
            continue;

        if (b.dim() >= 3) {
            WeakCayley wc = max_weak_cayley(g);
            ctx.expect(wc.factors.size() >= b.dim(),
                       "degree-1 weak decomposition length " + std::to_string(wc.factors.size()) +
                           " below the dimension " + std::to_string(b.dim()),
                       inst);
        }

        std::optional<PureReduction> red;
        try {
            red = pure_reduction(g);
        } catch (const check_failure& e) {
            ctx.expect(false, e.what(), inst);
            continue;
        }
        const VectorConfiguration& q = red->quotient;
        if (q.rank() < 1) continue;

        SmallCircuitReport rep = check_small_circuits_deg1(q);
        ctx.expect(rep.ok && rep.expected_size == static_cast<int>(q.rank()) + 1,
                   "mixed-sign circuit smaller than rank + 1 in a pure degree-1 quotient", inst);

        // Distinct circuits with a union of at most rank + 1 labels never meet.
        std::vector<Circuit> cs = circuits(q);
        bool disjoint_ok = true;
        std::string offender;
        for (std::size_t i = 0; i < cs.size() && disjoint_ok; ++i) {
            for (std::size_t j = i + 1; j < cs.size() && disjoint_ok; ++j) {
                std::vector<int> si, sj;
                for (const auto& [lab, co] : cs[i].dependence) si.push_back(lab);
                for (const auto& [lab, co] : cs[j].dependence) sj.push_back(lab);
                std::vector<int> uni, inter;
                std::set_union(si.begin(), si.end(), sj.begin(), sj.end(),
                               std::back_inserter(uni));
                if (uni.size() > q.rank() + 1) continue;
                std::set_intersection(si.begin(), si.end(), sj.begin(), sj.end(),
                                      std::back_inserter(inter));
                if (!inter.empty()) {
                    disjoint_ok = false;
                    offender = "circuits " + labels_str(si) + " and " + labels_str(sj);
                }
            }
        }
        ctx.expect(disjoint_ok, "small-union circuits are not disjoint: " + offender, inst);
    }
}

void suite_deg1(Ctx& ctx) {
    Deg1Shared shared;
    deg1_case_prism(ctx, shared);
    deg1_case_simplex_edges(ctx, shared);
    deg1_case_polygon(ctx, shared);
    deg1_case_stacked_pyramids(ctx);
    deg1_case_high_degree(ctx);
    deg1_dual_circuit_checks(ctx, shared);
}

// --------------------------------------------------------------- cayley-bound

void suite_cayley_bound(Ctx& ctx) {
    {
        VectorConfiguration g = gale_dual(pentagon_config());
        ctx.instance();
        ctx.expect(max_weak_cayley(g).factors.size() == 1, "pentagon dual weak length is not 1",
                   serialize_vectors(g));
    }
    {
        VectorConfiguration g = gale_dual(lifted_config(2));
        ctx.instance();
        const std::string inst = serialize_vectors(g);
        ctx.expect(max_weak_cayley(g).factors.size() == 2,
                   "lifted configuration dual weak length is not 2", inst);
        auto mc = max_combinatorial_cayley(g);
        ctx.expect(mc && mc->size() == 2, "lifted configuration combinatorial length is not 2",
                   inst);
        if (mc) {
            // Each part of a combinatorial decomposition must be a positive vector,
            // equivalently its primal complement is exactly a face point set.
            for (const auto& part : *mc) {
                ctx.expect(is_totally_cyclic(restrict_to(g, part)),
                           "lifted combinatorial part is not a positive vector", inst);
            }
        }
    }
    {
        VectorConfiguration g = gale_dual(pentagon_join_config(2));
        ctx.instance();
        ctx.expect(max_weak_cayley(g).factors.size() == 2,
                   "pentagon join dual weak length is not 2", serialize_vectors(g));
    }
    {
        VectorConfiguration g = gale_dual(prism_config(3));
        ctx.instance();
        ctx.expect(max_weak_cayley(g).factors.size() == 3, "prism dual weak length is not 3",
                   serialize_vectors(g));
    }

    for (std::size_t t = 0; t < ctx.trials; ++t) {
        const std::size_t rmax = std::min<std::size_t>(ctx.max_dim, ctx.max_n - 1);
        const std::size_t r = 1 + ctx.rng.below(rmax);
        const std::size_t n = r + 1 + ctx.rng.below(ctx.max_n - r);
        VectorConfiguration v = rand_tc_vectors(ctx.rng, n, r);
        ctx.instance();
        const std::string inst = serialize_vectors(v);

        DegreeReport du = dual_degree(v);
        const int d = static_cast<int>(n) - static_cast<int>(r) - 1;
        WeakCayley wc = max_weak_cayley(v);
        const int m = static_cast<int>(wc.factors.size());

        ctx.expect(m >= d - 3 * du.degree + 1,
                   "weak decomposition length " + std::to_string(m) + " below d - 3 delta + 1 = " +
                       std::to_string(d - 3 * du.degree + 1),
                   inst);
        ctx.expect(m <= du.codegree,
                   "weak decomposition length " + std::to_string(m) + " exceeds the codegree " +
                       std::to_string(du.codegree),
                   inst);

        std::vector<int> covered;
        for (const Circuit& f : wc.factors) {
            for (int lab : f.pos) covered.push_back(lab);
            for (int lab : f.neg) covered.push_back(lab);
        }
        std::sort(covered.begin(), covered.end());
        bool disjoint = std::adjacent_find(covered.begin(), covered.end()) == covered.end();
        std::vector<int> meet;
        std::set_intersection(covered.begin(), covered.end(), wc.residual.begin(),
                              wc.residual.end(), std::back_inserter(meet));
        ctx.expect(disjoint && meet.empty() && covered.size() + wc.residual.size() == n,
                   "weak decomposition factors and residual do not partition the labels", inst);

        if (n <= 9) {
            auto mc = max_combinatorial_cayley(v);
            ctx.expect(mc.has_value(), "totally cyclic but no combinatorial decomposition", inst);
            if (mc) {
                ctx.expect(static_cast<int>(mc->size()) <= m,
                           "combinatorial length exceeds the weak length", inst);
                if (du.degree == 0)
                    ctx.expect(static_cast<int>(mc->size()) == static_cast<int>(n - r) &&
                                   m == static_cast<int>(n - r),
                               "degree 0 must decompose into n - r parts", inst);
            }
        }
    }
}

// -------------------------------------------------------------- core-tverberg

void suite_core_tverberg(Ctx& ctx) {
    struct Fixed {
        std::vector<QVec> pts;
        QVec x;
        int depth, order;
    };
    std::vector<Fixed> fixed = {
        {{{Rat(1), Rat(0)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(0), Rat(-1)}},
         {Rat(0), Rat(0)},
         2,
         2},
        {{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}},
         {Rat(1) / Rat(3), Rat(1) / Rat(3)},
         1,
         1},
    };
    for (const Fixed& f : fixed) {
        PointConfiguration s = PointConfiguration::trusted(iota_labels(f.pts.size()), f.pts, 2);
        ctx.instance();
        const std::string inst = serialize_points(s) + point_comment(f.x);
        try {
            CoreTverbergRecord rec = check_core_tverberg(s, f.x);
            ctx.expect(rec.depth == f.depth && rec.order == f.order,
                       "fixed depth/order instance reports " + std::to_string(rec.depth) + "/" +
                           std::to_string(rec.order) + ", expected " + std::to_string(f.depth) +
                           "/" + std::to_string(f.order),
                       inst);
        } catch (const check_failure& e) {
            ctx.expect(false, e.what(), inst);
        }
    }

    for (std::size_t t = 0; t < ctx.trials; ++t) {
        const std::size_t dmax = std::min<std::size_t>(ctx.max_dim, ctx.max_n - 2);
        const std::size_t d = 1 + ctx.rng.below(std::max<std::size_t>(dmax, 1));
        const std::size_t n = d + 2 + ctx.rng.below(ctx.max_n >= d + 2 ? ctx.max_n - d - 1 : 1);
        PointConfiguration s = rand_points(n, d, ctx.rng);

        QVec x(d, Rat(0));
        const std::uint64_t mode = ctx.rng.below(4);
        if (mode <= 1) {
            std::set<std::size_t> support;
            const std::size_t k = 1 + ctx.rng.below(n);
            while (support.size() < k) support.insert(ctx.rng.below(n));
            Rat total(0);
            for (std::size_t p : support) {
                Rat w(static_cast<long>(1 + ctx.rng.below(4)));
                total += w;
                for (std::size_t j = 0; j < d; ++j) x[j] += w * s.at(p)[j];
            }
            for (std::size_t j = 0; j < d; ++j) x[j] /= total;
        } else if (mode == 2) {
            for (std::size_t j = 0; j < d; ++j) x[j] = Rat(ctx.rng.range(-10, 10));
        } else {
            x = s.at(ctx.rng.below(n));
        }

        ctx.instance();
        const std::string inst = serialize_points(s) + point_comment(x);
        std::optional<CoreTverbergRecord> rec;
        try {
            rec = check_core_tverberg(s, x);
        } catch (const check_failure& e) {
            ctx.expect(false, e.what(), inst);
            continue;
        }
        ctx.expect(rec->satisfied && rec->order <= rec->depth,
                   "depth and order bookkeeping is inconsistent", inst);
        if (!rec->conjecture_holds)
            ctx.finding("conjectured bound order >= 2 depth - (n - d) fails (depth " +
                        std::to_string(rec->depth) + ", order " + std::to_string(rec->order) +
                        "):\n" + inst);

        if (t % 4 == 0) {
            std::vector<QVec> mapped = s.coords();
            QVec mx = x;
            if (d >= 2) {
                const std::size_t p = ctx.rng.below(d);
                const std::size_t q = (p + 1 + ctx.rng.below(d - 1)) % d;
                const Rat lam(ctx.rng.range(-2, 2));
                for (QVec& y : mapped) y[p] += lam * y[q];
                mx[p] += lam * mx[q];
            }
            QVec shift(d);
            for (std::size_t j = 0; j < d; ++j) shift[j] = Rat(ctx.rng.range(-3, 3));
            for (QVec& y : mapped)
                for (std::size_t j = 0; j < d; ++j) y[j] += shift[j];
            for (std::size_t j = 0; j < d; ++j) mx[j] += shift[j];
            PointConfiguration s2 =
                PointConfiguration::trusted(iota_labels(mapped.size()), mapped, d);
            try {
                CoreTverbergRecord rec2 = check_core_tverberg(s2, mx);
                ctx.expect(rec2.depth == rec->depth && rec2.order == rec->order,
                           "depth or order changed under a unimodular affine map", inst);
            } catch (const check_failure& e) {
                ctx.expect(false, e.what(), inst);
            }
        }
    }
}

// ------------------------------------------------------------------- lawrence

void suite_lawrence(Ctx& ctx) {
    const std::size_t constructed = std::max<std::size_t>(ctx.trials / 4, 1);
    for (std::size_t t = 0; t < constructed; ++t) {
        const int r = 1 + static_cast<int>(ctx.rng.below(std::min<std::size_t>(ctx.max_dim, 4)));
        const int n = 2 * r + 2 * static_cast<int>(ctx.rng.below(3));
        VectorConfiguration v = lawrence_config(r, n, ctx.rng);
        ctx.instance();
        const std::string inst = serialize_vectors(v);
        ctx.expect(is_lawrence(v).has_value(), "constructed opposite-ray pairing not recognized",
                   inst);
        ctx.expect(is_totally_cyclic(v), "constructed pairing is not totally cyclic", inst);
        DegreeReport du = dual_degree(v);
        ctx.expect(2 * du.degree == n - 2 * r,
                   "paired configuration degree " + std::to_string(du.degree) +
                       " differs from (n - 2r)/2 = " + std::to_string((n - 2 * r) / 2),
                   inst);
    }

    for (std::size_t t = 0; t < ctx.trials; ++t) {
        const std::size_t r = 1 + ctx.rng.below(std::min<std::size_t>(ctx.max_dim, 4));
        const std::size_t n = r + 1 + ctx.rng.below(ctx.max_n - r);
        VectorConfiguration v = strip_zeros(rand_tc_vectors(ctx.rng, n, r));
        ctx.instance();
        const std::string inst = serialize_vectors(v);

        DegreeReport du = dual_degree(v);
        const int slack = static_cast<int>(v.count()) - 2 * static_cast<int>(v.rank());
        ctx.expect(2 * du.degree >= slack,
                   "irreducible configuration violates n <= 2r + 2 delta", inst);
        const bool extremal = 2 * du.degree == slack;
        const bool paired = is_lawrence(v).has_value();
        ctx.expect(extremal == paired,
                   paired ? "opposite-ray pairing without extremal degree"
                          : "extremal degree without an opposite-ray pairing",
                   inst);
    }
}

// -------------------------------------------------------------- pyramid-bound

void suite_pyramid_bound(Ctx& ctx) {
    std::vector<PointConfiguration> preamble = {pentagon_config(), prism_config(3),
                                                lifted_config(2)};
    for (const PointConfiguration& a : preamble) {
        ctx.instance();
        const std::string inst = serialize_points(a);
        DegreeReport pr = degree_primal(a);
        ctx.expect(!pyramid_apex(a).has_value(), "expected an apex-free example", inst);
        ctx.expect(static_cast<int>(a.count()) >= 2 * pr.codegree,
                   "apex-free example with fewer than 2 codegree points", inst);
    }

    for (std::size_t t = 0; t < ctx.trials; ++t) {
        if (t % 2 == 0) {
            const std::size_t r = 1 + ctx.rng.below(std::min<std::size_t>(ctx.max_dim + 1, 5));
            const std::size_t n = r + 1 + ctx.rng.below(ctx.max_n > r ? ctx.max_n - r : 1);
            VectorConfiguration v = strip_zeros(rand_tc_vectors(ctx.rng, n, r));
            ctx.instance();
            DegreeReport du = dual_degree(v);
            ctx.expect(static_cast<int>(v.count()) <=
                           2 * static_cast<int>(v.rank()) + 2 * du.degree,
                       "irreducible configuration with more than 2r + 2 delta vectors",
                       serialize_vectors(v));
        } else {
            const std::size_t dmax =
                std::min<std::size_t>(ctx.max_dim, ctx.max_n >= 2 ? ctx.max_n - 1 : 1);
            const std::size_t d = 1 + ctx.rng.below(std::max<std::size_t>(dmax, 1));
            const std::size_t n = d + 1 + ctx.rng.below(ctx.max_n - d);
            PointConfiguration a = rand_points(n, d, ctx.rng);
            ctx.instance();
            const std::string inst = serialize_points(a);
            DegreeReport pr = degree_primal(a);
            if (!pyramid_apex(a).has_value()) {
                ctx.expect(static_cast<int>(n) >= 2 * pr.codegree,
                           "apex-free configuration with n below twice the codegree", inst);
            } else {
                PyramidSplit sp = strip_pyramids(a);
                ctx.expect(degree_primal(sp.base).degree == pr.degree,
                           "stripping pyramid apices changed the degree", inst);
            }
            ctx.expect((pr.degree == 0) == (a.count() == d + 1),
                       "degree 0 exactly characterizes simplices", inst);
        }
    }
}

// ----------------------------------------------------------- section-quotient

void suite_section_quotient(Ctx& ctx) {
    {
        std::vector<QVec> vecs = {{Rat(1), Rat(0)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(1)},
                                  {Rat(0), Rat(-1)}};
        VectorConfiguration v = VectorConfiguration::trusted(iota_labels(4), vecs, 2);
        ctx.instance();
        const std::string inst = serialize_vectors(v);
        SectionQuotientDegrees sq = section_quotient_degrees(v, {0, 1});
        ctx.expect(sq.sub == 0 && sq.quotient == 0 && sq.total == 0,
                   "antipodal pair section/quotient degrees are not (0, 0, 0)", inst);
        SectionQuotientDegrees sq2 = section_quotient_degrees(v, {0, 1, 2, 3});
        ctx.expect(sq2.sub == 0 && sq2.quotient == 0 && sq2.total == 0,
                   "full-label section must reproduce the total degree", inst);
    }
    {
        VectorConfiguration g = gale_dual(pentagon_join_config(2));
        ctx.instance();
        const std::string inst = serialize_vectors(g);
        SectionQuotientDegrees sq = section_quotient_degrees(g, {0, 1, 2, 3, 4});
        ctx.expect(sq.sub == 1 && sq.quotient == 1 && sq.total == 2,
                   "pentagon join block degrees are not (1, 1, 2)", inst);
    }

    for (std::size_t t = 0; t < ctx.trials; ++t) {
        if (t % 4 == 3) {
            // Block construction with a known split.
            const std::size_t r1 = 1 + ctx.rng.below(3), r2 = 1 + ctx.rng.below(3);
            const std::size_t n1 = r1 + 1 + ctx.rng.below(3), n2 = r2 + 1 + ctx.rng.below(3);
            VectorConfiguration v1 = rand_tc_vectors(ctx.rng, n1, r1);
            VectorConfiguration v2 = rand_tc_vectors(ctx.rng, n2, r2);
            std::vector<QVec> vecs;
            for (std::size_t i = 0; i < n1; ++i) {
                QVec w(r1 + r2, Rat(0));
                for (std::size_t j = 0; j < r1; ++j) w[j] = v1.at(i)[j];
                vecs.push_back(w);
            }
            for (std::size_t i = 0; i < n2; ++i) {
                QVec w(r1 + r2, Rat(0));
                for (std::size_t j = 0; j < r2; ++j) w[r1 + j] = v2.at(i)[j];
                vecs.push_back(w);
            }
            VectorConfiguration v =
                VectorConfiguration::trusted(iota_labels(vecs.size()), vecs, r1 + r2);
            ctx.instance();
            const std::string inst = serialize_vectors(v);
            std::vector<int> w_labels;
            for (std::size_t i = 0; i < n1; ++i) w_labels.push_back(static_cast<int>(i));
            try {
                SectionQuotientDegrees sq = section_quotient_degrees(v, w_labels);
                ctx.expect(sq.sub == dual_degree(v1).degree &&
                               sq.quotient == dual_degree(v2).degree,
                           "block section/quotient degrees do not match the factors", inst);
                ctx.expect(sq.total >= sq.sub + sq.quotient,
                           "degree subadditivity fails on a block construction", inst);
            } catch (const check_failure& e) {
                ctx.expect(false, e.what(), inst);
            }
            continue;
        }

        const std::size_t r = 2 + ctx.rng.below(std::max<std::size_t>(
                                      std::min<std::size_t>(ctx.max_dim, 5) - 1, 1));
        const std::size_t n = r + 2 + ctx.rng.below(ctx.max_n > r + 2 ? ctx.max_n - r - 1 : 1);
        VectorConfiguration v = rand_tc_vectors(ctx.rng, n, r);
        ctx.instance();
        const std::string inst = serialize_vectors(v);

        std::optional<std::vector<int>> w_labels;
        for (int attempt = 0; attempt < 6 && !w_labels; ++attempt) {
            std::set<std::size_t> seed_positions;
            const std::size_t k = 1 + ctx.rng.below(n - 1);
            while (seed_positions.size() < k) seed_positions.insert(ctx.rng.below(n));
            std::vector<QVec> span_rows;
            for (std::size_t p : seed_positions) span_rows.push_back(v.at(p));
            const std::size_t base_rank = rank_of_rows(span_rows, r);
            std::vector<int> closure;
            for (std::size_t p = 0; p < n; ++p) {
                std::vector<QVec> probe = span_rows;
                probe.push_back(v.at(p));
                if (rank_of_rows(probe, r) == base_rank) closure.push_back(v.label_at(p));
            }
            if (closure.size() < n) w_labels = closure;
        }
        if (!w_labels) continue;

        try {
            SectionQuotientDegrees sq = section_quotient_degrees(v, *w_labels);
            ctx.expect(sq.total >= sq.sub + sq.quotient,
                       "degree subadditivity fails for section " + labels_str(*w_labels), inst);
            const std::size_t rank_split = restrict_to(v, *w_labels).rank() +
                                           contract_set(v, *w_labels).rank();
            ctx.expect(rank_split == r, "section and quotient ranks do not sum to the rank",
                       inst);
        } catch (const check_failure& e) {
            ctx.expect(false, e.what(), inst);
        }
    }
}

// ----------------------------------------------------------------- conjecture

void suite_conjecture(Ctx& ctx) {
    std::size_t applicable = 0, equalities = 0, violations = 0;
    std::string equality_example;

    {
        VectorConfiguration g = gale_dual(pentagon_join_config(2));
        ctx.instance();
        const int d = static_cast<int>(g.count() - g.rank()) - 1;
        const int delta = dual_degree(g).degree;
        const int m = static_cast<int>(max_weak_cayley(g).factors.size());
        ++ctx.res.checks;
        if (2 * delta < d) {
            ++applicable;
            if (m < d + 1 - 2 * delta)
                ++violations;
            else if (m == d + 1 - 2 * delta) {
                ++equalities;
                equality_example = serialize_vectors(g);
                ctx.finding("sharpness example: the pentagon join attains m = d + 1 - 2 delta = " +
                            std::to_string(m));
            }
        }
    }

    for (std::size_t t = 0; t < ctx.trials; ++t) {
        // Uniform random totally cyclic configurations almost never have low
        // degree, so interleave structured low-degree shapes (prisms and
        // pentagon joins, possibly under stacked apices) that land inside the
        // hypothesis 2 delta < d by construction.
        std::optional<VectorConfiguration> sampled;
        if (t % 3 == 0) {
            const std::size_t d0 = 3 + ctx.rng.below(3);
            std::size_t stack = ctx.rng.below(3);
            if (2 * d0 + stack > ctx.max_n) stack = ctx.max_n > 2 * d0 ? ctx.max_n - 2 * d0 : 0;
            sampled = gale_dual(stack_apices(prism_config(d0), stack, ctx.rng));
        } else if (t % 3 == 1) {
            std::size_t stack = ctx.rng.below(3);
            if (10 + stack > ctx.max_n) stack = ctx.max_n > 10 ? ctx.max_n - 10 : 0;
            sampled = gale_dual(stack_apices(pentagon_join_config(2), stack, ctx.rng));
        } else {
            const std::size_t r =
                1 + ctx.rng.below(std::min<std::size_t>(ctx.max_dim, ctx.max_n - 1));
            const std::size_t n = r + 2 + ctx.rng.below(ctx.max_n > r + 2 ? ctx.max_n - r - 1 : 1);
            sampled = rand_tc_vectors(ctx.rng, n, r);
        }
        VectorConfiguration v = std::move(*sampled);
        ctx.instance();
        const int d = static_cast<int>(v.count() - v.rank()) - 1;
        const int delta = dual_degree(v).degree;
        if (2 * delta >= d) continue;
        ++applicable;
        ++ctx.res.checks;
        const int m = static_cast<int>(max_weak_cayley(v).factors.size());
        if (m < d + 1 - 2 * delta) {
            ++violations;
            ctx.finding("conjecture m >= d + 1 - 2 delta violated (m " + std::to_string(m) +
                        ", d " + std::to_string(d) + ", delta " + std::to_string(delta) + "):\n" +
                        serialize_vectors(v));
        } else if (m == d + 1 - 2 * delta && equality_example.empty()) {
            ++equalities;
            equality_example = serialize_vectors(v);
        } else if (m == d + 1 - 2 * delta) {
            ++equalities;
        }
    }

    ctx.finding("conjecture m >= d + 1 - 2 delta: " + std::to_string(applicable) +
                " applicable instances, " + std::to_string(violations) + " violations, " +
                std::to_string(equalities) + " equality cases");
}

} // namespace

std::vector<std::string> check_suite_names() {
    return {"primal-dual",  "deg1",          "cayley-bound",     "core-tverberg",
            "lawrence",     "pyramid-bound", "section-quotient", "conjecture"};
}

CheckResult run_check_suite(const std::string& name, const CheckOptions& opts) {
    if (name == "primal-dual") {
        Ctx c(name, opts, 1000, 9, 4);
        suite_primal_dual(c);
        return c.done();
    }
    if (name == "deg1") {
        Ctx c(name, opts, 200, 12, 4);
        suite_deg1(c);
        return c.done();
    }
    if (name == "cayley-bound") {
        Ctx c(name, opts, 500, 12, 5);
        suite_cayley_bound(c);
        return c.done();
    }
    if (name == "core-tverberg") {
        Ctx c(name, opts, 1000, 12, 4);
        suite_core_tverberg(c);
        return c.done();
    }
    if (name == "lawrence") {
        Ctx c(name, opts, 200, 12, 4);
        suite_lawrence(c);
        return c.done();
    }
    if (name == "pyramid-bound") {
        Ctx c(name, opts, 500, 9, 4);
        suite_pyramid_bound(c);
        return c.done();
    }
    if (name == "section-quotient") {
        Ctx c(name, opts, 500, 10, 5);
        suite_section_quotient(c);
        return c.done();
    }
    if (name == "conjecture") {
        Ctx c(name, opts, 300, 12, 4);
        suite_conjecture(c);
        return c.done();
    }
    std::string known;
    for (const std::string& s : check_suite_names()) {
        if (!known.empty()) known += ", ";
        known += s;
    }
    throw input_error("unknown check suite '" + name + "' (expected one of: " + known +
                      ", or all)");
}

std::vector<CheckResult> run_check_suites(const std::string& name, const CheckOptions& opts) {
    std::vector<CheckResult> out;
    if (name == "all") {
        for (const std::string& s : check_suite_names()) out.push_back(run_check_suite(s, opts));
        return out;
    }
    out.push_back(run_check_suite(name, opts));
    return out;
}

} // namespace galedeg
