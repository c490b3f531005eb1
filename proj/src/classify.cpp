#include "galedeg/classify.hpp"

#include <algorithm>

#include "galedeg/degree.hpp"

namespace galedeg {

const char* class_kind_name(ClassKind k) {
    switch (k) {
        case ClassKind::SIMPLEX_DEG0: return "SIMPLEX_DEG0";
        case ClassKind::DIM_LE_1: return "DIM_LE_1";
        case ClassKind::POLYGON_NO_INTERIOR: return "POLYGON_NO_INTERIOR";
        case ClassKind::PRISM_OVER_SIMPLEX_EDGE_POINTS:
            return "PRISM_OVER_SIMPLEX_EDGE_POINTS";
        case ClassKind::SIMPLEX_EDGE_POINTS_AT_VERTEX:
            return "SIMPLEX_EDGE_POINTS_AT_VERTEX";
        case ClassKind::PYRAMID: return "PYRAMID";
        case ClassKind::NOT_DEG_LE_1: return "NOT_DEG_LE_1";
    }
    throw internal_error("unknown classification kind");
}

std::vector<int> hull_vertices(const PointConfiguration& a) {
    std::vector<int> out;
    for (std::size_t j = 0; j < a.count(); ++j) {
        std::vector<QVec> w;
        for (std::size_t i = 0; i < a.count(); ++i)
            if (i != j) w.push_back(sub(a.at(i), a.at(j)));
        if (origin_position(w, a.dim()).kind == OriginPosition::OUTSIDE)
            out.push_back(a.label_at(j));
    }
    return out;
}

namespace {

// Affine functional vanishing on exactly the `on` positions and strictly
// positive elsewhere, or nullopt when the positions are not the complete
// member set of a face.
std::optional<QVec> exposing_functional(const PointConfiguration& a,
                                        const std::vector<std::size_t>& on) {
    std::vector<QVec> homog = a.homogenized();
    std::vector<QVec> face_rows;
    for (std::size_t i : on) face_rows.push_back(homog[i]);
    std::vector<QVec> ker = kernel_basis(QMatrix::from_rows(face_rows, a.dim() + 1));
    if (ker.empty()) return std::nullopt;
    std::vector<QVec> evals;
    std::vector<std::size_t> off;
    for (std::size_t i = 0; i < a.count(); ++i) {
        if (std::find(on.begin(), on.end(), i) != on.end()) continue;
        off.push_back(i);
        QVec e(ker.size());
        for (std::size_t k = 0; k < ker.size(); ++k) e[k] = dot(ker[k], homog[i]);
        evals.push_back(std::move(e));
    }
    std::optional<QVec> mu = strict_separation(evals, ker.size());
    if (!mu) return std::nullopt;
    QVec h(a.dim() + 1, Rat(0));
    for (std::size_t k = 0; k < ker.size(); ++k)
        for (std::size_t j = 0; j <= a.dim(); ++j) h[j] += (*mu)[k] * ker[k][j];
    make_primitive(h);
    if (!off.empty() && sgn(dot(h, homog[off.front()])) < 0)
        for (Rat& x : h) x = -x;
    for (std::size_t i = 0; i < a.count(); ++i) {
        int s = sgn(dot(h, homog[i]));
        bool member = std::find(on.begin(), on.end(), i) != on.end();
        require_internal(member ? s == 0 : s > 0, "exposing_functional: sign pattern broken");
    }
    return h;
}

// Parameter t with p = u + t (w - u), or nullopt when p is off the line.
std::optional<Rat> segment_parameter(const QVec& u, const QVec& w, const QVec& p) {
    QVec dir = sub(w, u);
    QVec rel = sub(p, u);
    std::size_t k0 = dir.size();
    for (std::size_t k = 0; k < dir.size(); ++k)
        if (sgn(dir[k]) != 0) {
            k0 = k;
            break;
        }
    require_internal(k0 < dir.size(), "segment_parameter: coincident endpoints");
    Rat t = rel[k0] / dir[k0];
    for (std::size_t k = 0; k < dir.size(); ++k) {
        Rat expect = t * dir[k];
        if (rel[k] != expect) return std::nullopt;
    }
    return t;
}

struct EdgeProbe {
    std::vector<std::size_t> member_positions;  // all positions on the line
    std::vector<int> interior_labels;           // strictly between, ascending
    std::vector<Rat> interior_params;           // aligned with interior_labels
    QVec support;                               // exposing functional of the edge
};

// Tests whether the segment between two hull vertices is an edge of the hull
// whose only vertices are its endpoints, with every other collinear point
// strictly inside.
std::optional<EdgeProbe> probe_edge(const PointConfiguration& a, std::size_t pu,
                                    std::size_t pw, const std::vector<int>& vertices) {
    const QVec& u = a.at(pu);
    const QVec& w = a.at(pw);
    EdgeProbe probe;
    std::vector<std::pair<int, Rat>> inner;
    for (std::size_t i = 0; i < a.count(); ++i) {
        std::optional<Rat> t = segment_parameter(u, w, a.at(i));
        if (!t) continue;
        probe.member_positions.push_back(i);
        if (i == pu || i == pw) continue;
        bool is_vertex = std::find(vertices.begin(), vertices.end(), a.label_at(i)) !=
                         vertices.end();
        if (is_vertex) return std::nullopt;  // a third vertex on the line
        if (!(sgn(*t) > 0 && *t < 1)) return std::nullopt;
        inner.emplace_back(a.label_at(i), *t);
    }
    std::optional<QVec> h = exposing_functional(a, probe.member_positions);
    if (!h) return std::nullopt;
    probe.support = std::move(*h);
    std::sort(inner.begin(), inner.end());
    for (const auto& [lab, t] : inner) {
        probe.interior_labels.push_back(lab);
        probe.interior_params.push_back(t);
    }
    return probe;
}

std::optional<PrismData> recognize_prism(const PointConfiguration& b) {
    const std::size_t d = b.dim();
    std::vector<int> verts = hull_vertices(b);
    if (verts.size() != 2 * d) return std::nullopt;

    std::vector<Facet> fs = facets(b);
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].members.size() != d) continue;
        bool all_vertices = true;
        for (int lab : fs[i].members)
            all_vertices = all_vertices &&
                           std::find(verts.begin(), verts.end(), lab) != verts.end();
        if (all_vertices) candidates.push_back(i);
    }

    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
        for (std::size_t cj = ci + 1; cj < candidates.size(); ++cj) {
            const std::vector<int>& top = fs[candidates[ci]].members;
            const std::vector<int>& bottom = fs[candidates[cj]].members;
            std::vector<int> both = top;
            both.insert(both.end(), bottom.begin(), bottom.end());
            std::sort(both.begin(), both.end());
            if (both != verts) continue;  // not disjoint or not covering

            PrismData data;
            data.top = top;
            data.bottom = bottom;
            data.top_support = fs[candidates[ci]].support;
            data.bottom_support = fs[candidates[cj]].support;
            std::vector<int> used_bottom, covered;
            bool ok = true;
            for (int ut : top) {
                std::optional<VerticalEdge> found;
                for (int wb : bottom) {
                    std::optional<EdgeProbe> probe =
                        probe_edge(b, b.pos_of(ut), b.pos_of(wb), verts);
                    if (!probe) continue;
                    if (found) {
                        ok = false;  // two vertical edges at one top vertex
                        break;
                    }
                    found = VerticalEdge{ut, wb, probe->interior_labels,
                                         probe->interior_params, Hyperplane{probe->support}};
                }
                if (!ok || !found) {
                    ok = false;
                    break;
                }
                if (std::find(used_bottom.begin(), used_bottom.end(), found->bottom) !=
                    used_bottom.end()) {
                    ok = false;  // not a matching
                    break;
                }
                used_bottom.push_back(found->bottom);
                covered.insert(covered.end(), found->points.begin(), found->points.end());
                data.edges.push_back(std::move(*found));
            }
            if (!ok) continue;
            // Every non-vertex point must sit on some vertical edge.
            std::vector<int> expected;
            for (int lab : b.labels())
                if (std::find(verts.begin(), verts.end(), lab) == verts.end())
                    expected.push_back(lab);
            std::sort(expected.begin(), expected.end());
            std::sort(covered.begin(), covered.end());
            if (covered != expected) continue;
            return data;
        }
    }
    return std::nullopt;
}

std::optional<SimplexEdgeData> recognize_simplex_edges(const PointConfiguration& b) {
    const std::size_t d = b.dim();
    std::vector<int> verts = hull_vertices(b);
    if (verts.size() != d + 1) return std::nullopt;

    std::vector<int> non_vertex;
    for (int lab : b.labels())
        if (std::find(verts.begin(), verts.end(), lab) == verts.end())
            non_vertex.push_back(lab);

    for (int apex : verts) {
        const QVec& ap = b.at(b.pos_of(apex));
        bool ok = true;
        std::vector<EdgeAssignment> edges;
        for (int p : non_vertex) {
            std::optional<int> far;
            std::optional<Rat> param;
            for (int v : verts) {
                if (v == apex) continue;
                std::optional<Rat> t = segment_parameter(ap, b.at(b.pos_of(v)),
                                                         b.at(b.pos_of(p)));
                if (!t || !(sgn(*t) > 0 && *t < 1)) continue;
                require_internal(!far, "simplex-edge recognizer: point on two edges");
                far = v;
                param = *t;
            }
            if (!far) {
                ok = false;
                break;
            }
            auto it = std::find_if(edges.begin(), edges.end(),
                                   [&](const EdgeAssignment& e) { return e.far_vertex == *far; });
            if (it == edges.end()) {
                edges.push_back(EdgeAssignment{*far, {p}, {*param}});
            } else {
                it->points.push_back(p);
                it->params.push_back(*param);
            }
        }
        if (!ok) continue;
        // A base that survived pyramid stripping has points on every edge at
        // the apex: an untouched far vertex would itself be an apex.
        require_internal(edges.size() == d, "simplex-edge recognizer: bare edge after stripping");
        std::sort(edges.begin(), edges.end(),
                  [](const EdgeAssignment& x, const EdgeAssignment& y) {
                      return x.far_vertex < y.far_vertex;
                  });
        for (EdgeAssignment& e : edges) {
            std::vector<std::pair<int, Rat>> z;
            for (std::size_t i = 0; i < e.points.size(); ++i)
                z.emplace_back(e.points[i], e.params[i]);
            std::sort(z.begin(), z.end());
            for (std::size_t i = 0; i < z.size(); ++i) {
                e.points[i] = z[i].first;
                e.params[i] = z[i].second;
            }
        }
        SimplexEdgeData data;
        data.apex = apex;
        data.vertices = verts;
        data.edges = std::move(edges);
        return data;
    }
    return std::nullopt;
}

} // namespace

Classification classify_low_degree(const PointConfiguration& a) {
    DedupResult dd = dedup_points(a);
    const PointConfiguration& b0 = dd.config;
    DegreeReport deg = degree_primal(b0);

    if (deg.degree >= 2) {
        Classification top;
        top.kind = ClassKind::NOT_DEG_LE_1;
        top.degree = deg.degree;
        top.multiplicities = dd.multiplicity;
        top.witness_face = deg.witness_face;
        require_internal(top.witness_face.size() + 2 <= b0.dim() + 1,
                         "classify: interior-face witness too large");
        return top;
    }
    if (deg.degree == 0) {
        Classification top;
        top.kind = ClassKind::SIMPLEX_DEG0;
        top.degree = 0;
        top.multiplicities = dd.multiplicity;
        return top;
    }

    PyramidSplit ps = strip_pyramids(b0);
    const PointConfiguration& base = ps.base;
    require_internal(degree_primal(base).degree == 1,
                     "classify: pyramid stripping changed the degree");

    Classification node;
    node.degree = 1;
    const std::size_t db = base.dim();
    if (db <= 1) {
        node.kind = ClassKind::DIM_LE_1;
    } else if (db == 2) {
        node.kind = ClassKind::POLYGON_NO_INTERIOR;
        for (int lab : base.labels())
            require_internal(!is_interior_face(base, {lab}),
                             "classify: interior point in a degree-1 polygon");
    } else {
        std::optional<PrismData> pr = recognize_prism(base);
        if (pr) {
            node.kind = ClassKind::PRISM_OVER_SIMPLEX_EDGE_POINTS;
            node.prism = std::move(pr);
        } else {
            std::optional<SimplexEdgeData> se = recognize_simplex_edges(base);
            require_internal(se.has_value(),
                             "classify: degree-1 recognizers exhausted; classification theorem "
                             "violated");
            node.kind = ClassKind::SIMPLEX_EDGE_POINTS_AT_VERTEX;
            node.simplex_edges = std::move(se);
        }
    }

    if (ps.apices.empty()) {
        node.multiplicities = dd.multiplicity;
        return node;
    }
    Classification top;
    top.kind = ClassKind::PYRAMID;
    top.degree = 1;
    top.multiplicities = dd.multiplicity;
    top.apices = ps.apices;
    top.strip_steps = ps.steps;
    top.inner = std::make_shared<const Classification>(std::move(node));
    return top;
}

} // namespace galedeg
