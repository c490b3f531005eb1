// Command runners (text report + JSON certificate) and the substitution-only
// certificate verifier.

#include "galedeg/certificate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "galedeg/circuits.hpp"
#include "galedeg/classify.hpp"
#include "galedeg/degree.hpp"
#include "galedeg/depth.hpp"
#include "galedeg/errors.hpp"
#include "galedeg/io.hpp"

namespace galedeg {

namespace {

// ---------------------------------------------------------------- builders

Json vec_json(const QVec& v) {
    Json a = Json::array();
    for (const Rat& x : v) a.push_back(rat_to_string(x));
    return a;
}

Json labels_json(const std::vector<int>& ls) {
    Json a = Json::array();
    for (int l : ls) a.push_back(l);
    return a;
}

Json dep_json(const std::vector<std::pair<int, Rat>>& dep) {
    Json a = Json::array();
    for (const auto& [l, c] : dep) a.push_back(Json::array({l, rat_to_string(c)}));
    return a;
}

Json params_json(const std::vector<Rat>& ts) {
    Json a = Json::array();
    for (const Rat& t : ts) a.push_back(rat_to_string(t));
    return a;
}

Json mult_json(const std::vector<std::pair<int, int>>& mult) {
    Json a = Json::array();
    for (const auto& [l, k] : mult) a.push_back(Json::array({l, k}));
    return a;
}

Json facet_json(const Facet& f) {
    Json j;
    j["members"] = labels_json(f.members);
    j["normal"] = vec_json(f.support.normal);
    return j;
}

Json facets_json(const std::vector<Facet>& fs) {
    Json a = Json::array();
    for (const Facet& f : fs) a.push_back(facet_json(f));
    return a;
}

Json dual_block(const VectorConfiguration& v) {
    Json j;
    j["rank"] = v.rank();
    j["count"] = v.count();
    Json rows = Json::array();
    for (std::size_t i = 0; i < v.count(); ++i) rows.push_back(vec_json(v.at(i)));
    j["vectors"] = rows;
    return j;
}

Json circuit_json(const Circuit& c) {
    Json j;
    j["pos"] = labels_json(c.pos);
    j["neg"] = labels_json(c.neg);
    j["dependence"] = dep_json(c.dependence);
    return j;
}

Json input_block(const ParsedConfig& in, const std::string& raw) {
    Json j;
    j["kind"] = in.is_points ? "points" : "vectors";
    j[in.is_points ? "dim" : "rank"] = in.ambient();
    j["count"] = in.count();
    j["fnv1a64"] = fnv1a64_hex(raw);
    return j;
}

Json envelope(const char* command, Json input, Json result, Json witnesses) {
    Json j;
    j["format"] = "galedeg-certificate";
    j["version"] = 1;
    j["command"] = command;
    j["input"] = std::move(input);
    j["result"] = std::move(result);
    j["witnesses"] = std::move(witnesses);
    return j;
}

// ----------------------------------------------------------- text helpers

std::string fmt_labels(const std::vector<int>& ls) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (i) out << ' ';
        out << ls[i];
    }
    out << '}';
    return out.str();
}

std::string fmt_vec(const QVec& v) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ", ";
        out << rat_to_string(v[i]);
    }
    out << ')';
    return out.str();
}

std::string fmt_dep(const std::vector<std::pair<int, Rat>>& dep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < dep.size(); ++i) {
        if (i) out << ' ';
        out << dep[i].first << '=' << rat_to_string(dep[i].second);
    }
    return out.str();
}

std::string fmt_multiplicities(const std::vector<std::pair<int, int>>& mult) {
    std::ostringstream out;
    bool any = false;
    for (const auto& [l, k] : mult) {
        if (k < 2) continue;
        if (any) out << ", ";
        out << l << " x" << k;
        any = true;
    }
    return any ? out.str() : std::string("none");
}

// ------------------------------------------------------- shared replaying

// One pyramid-stripping step replayed by pure arithmetic, validating the
// recorded data: the apex really is outside the affine hull of the rest, and
// the recorded chart columns give a faithful re-embedding (the checked
// factory rejects a rank mismatch). Used both when building classification
// certificates and when verifying them.
PointConfiguration replay_one(const PointConfiguration& cur, int apex, int translate,
                              const std::vector<std::size_t>& pivots) {
    const std::size_t d = cur.dim();
    require_input(d >= 1, "pyramid step: the configuration is already 0-dimensional");
    require_input(cur.has_label(apex), "pyramid step: apex label absent");
    require_input(cur.has_label(translate) && translate != apex,
                  "pyramid step: translation label absent or equal to the apex");
    require_input(pivots.size() == d - 1, "pyramid step: chart column count mismatch");
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        require_input(pivots[k] < d, "pyramid step: chart column out of range");
        require_input(k == 0 || pivots[k - 1] < pivots[k],
                      "pyramid step: chart columns not ascending");
    }

    std::vector<QVec> homog = cur.homogenized();
    std::vector<QVec> rest_h;
    const std::size_t apex_pos = cur.pos_of(apex);
    for (std::size_t i = 0; i < cur.count(); ++i)
        if (i != apex_pos) rest_h.push_back(homog[i]);
    require_input(rank_of_rows(rest_h, d + 1) == d,
                  "pyramid step: claimed apex lies in the affine hull of the rest");

    const QVec& t = cur.at(cur.pos_of(translate));
    std::vector<int> labels;
    std::vector<QVec> rows;
    for (std::size_t i = 0; i < cur.count(); ++i) {
        if (i == apex_pos) continue;
        labels.push_back(cur.label_at(i));
        QVec w(pivots.size());
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            Rat diff = cur.at(i)[pivots[k]] - t[pivots[k]];
            w[k] = diff;
        }
        rows.push_back(std::move(w));
    }
    return PointConfiguration::checked(std::move(labels), std::move(rows), d - 1);
}

PointConfiguration replay_steps(const PointConfiguration& start,
                                const std::vector<PyramidStep>& steps) {
    PointConfiguration cur = start;
    for (const PyramidStep& st : steps)
        cur = replay_one(cur, st.apex, st.translate_label, st.pivot_columns);
    return cur;
}

// Strictly positive dependence witnessing that `part` is a positive vector:
// a conformal sum of the positive circuits inside the part.
std::vector<std::pair<int, Rat>> part_dependence(const std::vector<Circuit>& pos_circuits,
                                                 const std::vector<int>& part) {
    std::set<int> pset(part.begin(), part.end());
    std::map<int, Rat> acc;
    for (int l : part) acc[l] = Rat(0);
    for (const Circuit& c : pos_circuits) {
        bool inside = true;
        for (int l : c.pos) inside = inside && pset.count(l) > 0;
        if (!inside) continue;
        bool helps = false;
        for (int l : c.pos) helps = helps || sgn(acc[l]) == 0;
        if (!helps) continue;
        for (const auto& [l, x] : c.dependence) acc[l] += x;
    }
    std::vector<std::pair<int, Rat>> out(acc.begin(), acc.end());
    for (const auto& [l, x] : out)
        require_internal(sgn(x) > 0, "combinatorial part is not covered by positive circuits");
    return out;
}

const PointConfiguration& require_points(const ParsedConfig& in, const char* cmd) {
    require_input(in.is_points,
                  std::string(cmd) + " expects a point configuration ('points' header)");
    return *in.points;
}

} // namespace

CommandOutput run_analyze(const std::string& input_text) {
    ParsedConfig in = parse_config_text(input_text);
    const PointConfiguration& a = require_points(in, "analyze");
    DedupResult dd = dedup_points(a);
    DegreeReport deg = degree_primal(a);
    std::vector<Facet> fs = facets(dd.config);
    PyramidSplit ps = strip_pyramids(dd.config);

    Json result;
    result["dim"] = a.dim();
    result["count"] = a.count();
    result["distinct_count"] = dd.config.count();
    result["multiplicities"] = mult_json(dd.multiplicity);
    result["pyramid_apices"] = labels_json(ps.apices);
    result["degree"] = deg.degree;
    result["codegree"] = deg.codegree;
    result["interior_witness"] = labels_json(deg.witness_face);
    result["facet_count"] = fs.size();
    Json witnesses;
    witnesses["facets"] = facets_json(fs);

    std::ostringstream out;
    out << "points: dim " << a.dim() << ", count " << a.count() << ", distinct "
        << dd.config.count() << '\n';
    out << "multiplicities: " << fmt_multiplicities(dd.multiplicity) << '\n';
    out << "pyramid apices: " << (ps.apices.empty() ? "none" : fmt_labels(ps.apices)) << '\n';
    out << "degree: " << deg.degree << '\n';
    out << "codegree: " << deg.codegree << '\n';
    out << "interior face witness: " << fmt_labels(deg.witness_face) << '\n';
    out << "facets: " << fs.size() << '\n';

    return CommandOutput{out.str(),
                         envelope("analyze", input_block(in, input_text), std::move(result),
                                  std::move(witnesses))};
}

CommandOutput run_gale(const std::string& input_text) {
    ParsedConfig in = parse_config_text(input_text);
    const PointConfiguration& a = require_points(in, "gale");
    VectorConfiguration g = gale_dual(a);

    Json result = dual_block(g);
    return CommandOutput{serialize_vectors(g),
                         envelope("gale", input_block(in, input_text), std::move(result),
                                  Json::object())};
}

CommandOutput run_circuits(const std::string& input_text) {
    ParsedConfig in = parse_config_text(input_text);
    VectorConfiguration v = in.is_points ? gale_dual(*in.points) : *in.vectors;
    std::vector<Circuit> cs = circuits(v);
    std::size_t positive = 0;
    for (const Circuit& c : cs)
        if (c.neg.empty()) ++positive;

    Json result;
    result["rank"] = v.rank();
    result["count"] = v.count();
    result["circuit_count"] = cs.size();
    result["positive_count"] = positive;
    Json list = Json::array();
    for (const Circuit& c : cs) {
        Json j = circuit_json(c);
        j["positive"] = c.neg.empty();
        list.push_back(std::move(j));
    }
    result["circuits"] = std::move(list);
    Json witnesses = Json::object();
    if (in.is_points) witnesses["dual"] = dual_block(v);

    std::ostringstream out;
    out << (in.is_points ? "gale dual" : "vectors") << ": rank " << v.rank() << ", count "
        << v.count() << '\n';
    out << "circuits: " << cs.size() << ", positive: " << positive << '\n';
    for (std::size_t i = 0; i < cs.size(); ++i)
        out << "  " << i << ": pos " << fmt_labels(cs[i].pos) << " neg " << fmt_labels(cs[i].neg)
            << " :: " << fmt_dep(cs[i].dependence) << '\n';

    return CommandOutput{out.str(),
                         envelope("circuits", input_block(in, input_text), std::move(result),
                                  std::move(witnesses))};
}

CommandOutput run_cayley(const std::string& input_text) {
    ParsedConfig in = parse_config_text(input_text);
    VectorConfiguration v = in.is_points ? gale_dual(*in.points) : *in.vectors;
    WeakCayley wc = max_weak_cayley(v);
    std::optional<std::vector<std::vector<int>>> comb = max_combinatorial_cayley(v);

    Json result;
    result["rank"] = v.rank();
    result["count"] = v.count();
    Json jweak;
    jweak["length"] = wc.factors.size();
    Json jfactors = Json::array();
    for (const Circuit& c : wc.factors) {
        Json f;
        f["labels"] = labels_json(c.pos);
        f["dependence"] = dep_json(c.dependence);
        jfactors.push_back(std::move(f));
    }
    jweak["factors"] = std::move(jfactors);
    jweak["residual"] = labels_json(wc.residual);
    result["weak"] = std::move(jweak);

    Json jcomb;
    jcomb["present"] = comb.has_value();
    if (comb) {
        jcomb["length"] = comb->size();
        Json parts = Json::array();
        Json deps = Json::array();
        std::vector<Circuit> pos = positive_circuits(v);
        for (const std::vector<int>& part : *comb) {
            parts.push_back(labels_json(part));
            deps.push_back(dep_json(part_dependence(pos, part)));
        }
        jcomb["parts"] = std::move(parts);
        jcomb["part_dependences"] = std::move(deps);
    } else {
        OriginCertificate oc = origin_position(v.coords(), v.rank());
        require_internal(oc.kind != OriginPosition::IN_RELINT,
                         "cayley: totally cyclic configuration without a combinatorial "
                         "decomposition");
        jcomb["non_cyclic_witness"] = vec_json(oc.normal);
    }
    result["combinatorial"] = std::move(jcomb);

    Json witnesses = Json::object();
    if (in.is_points) {
        witnesses["dual"] = dual_block(v);
        std::vector<std::vector<int>> factor_sets;
        for (const Circuit& c : wc.factors) factor_sets.push_back(c.pos);
        PrimalCayleyCheck pc = verify_weak_cayley_primal(*in.points, factor_sets);
        require_internal(pc.ok, "cayley: primal face check failed: " + pc.reason);
        Json supports = Json::array();
        for (const FaceWitness& w : pc.witnesses) {
            Json jw;
            jw["factor"] = labels_json(w.factor);
            jw["normal"] = vec_json(w.support.normal);
            supports.push_back(std::move(jw));
        }
        witnesses["face_supports"] = std::move(supports);
    }

    std::ostringstream out;
    out << (in.is_points ? "gale dual" : "vectors") << ": rank " << v.rank() << ", count "
        << v.count() << '\n';
    out << "weak cayley length: " << wc.factors.size() << '\n';
    for (std::size_t i = 0; i < wc.factors.size(); ++i)
        out << "  factor " << i << ": " << fmt_labels(wc.factors[i].pos) << '\n';
    out << "residual: " << fmt_labels(wc.residual) << '\n';
    if (comb) {
        out << "combinatorial cayley length: " << comb->size() << '\n';
        for (std::size_t i = 0; i < comb->size(); ++i)
            out << "  part " << i << ": " << fmt_labels((*comb)[i]) << '\n';
    } else {
        out << "combinatorial cayley: absent (not totally cyclic)" << '\n';
    }
    if (in.is_points) out << "face supports: verified" << '\n';

    return CommandOutput{out.str(),
                         envelope("cayley", input_block(in, input_text), std::move(result),
                                  std::move(witnesses))};
}

namespace {

Json class_node_json(const Classification& c) {
    Json j;
    j["kind"] = class_kind_name(c.kind);
    j["degree"] = c.degree;
    switch (c.kind) {
        case ClassKind::PYRAMID: {
            j["apices"] = labels_json(c.apices);
            Json steps = Json::array();
            for (const PyramidStep& st : c.strip_steps) {
                Json js;
                js["apex"] = st.apex;
                js["translate"] = st.translate_label;
                Json piv = Json::array();
                for (std::size_t p : st.pivot_columns) piv.push_back(p);
                js["pivots"] = std::move(piv);
                steps.push_back(std::move(js));
            }
            j["steps"] = std::move(steps);
            j["inner"] = class_node_json(*c.inner);
            break;
        }
        case ClassKind::NOT_DEG_LE_1:
            j["witness_face"] = labels_json(c.witness_face);
            break;
        case ClassKind::PRISM_OVER_SIMPLEX_EDGE_POINTS: {
            Json p;
            p["top"] = labels_json(c.prism->top);
            p["top_normal"] = vec_json(c.prism->top_support.normal);
            p["bottom"] = labels_json(c.prism->bottom);
            p["bottom_normal"] = vec_json(c.prism->bottom_support.normal);
            Json edges = Json::array();
            for (const VerticalEdge& e : c.prism->edges) {
                Json je;
                je["top"] = e.top;
                je["bottom"] = e.bottom;
                je["points"] = labels_json(e.points);
                je["params"] = params_json(e.params);
                je["normal"] = vec_json(e.support.normal);
                edges.push_back(std::move(je));
            }
            p["edges"] = std::move(edges);
            j["prism"] = std::move(p);
            break;
        }
        case ClassKind::SIMPLEX_EDGE_POINTS_AT_VERTEX: {
            Json s;
            s["apex"] = c.simplex_edges->apex;
            s["vertices"] = labels_json(c.simplex_edges->vertices);
            Json edges = Json::array();
            for (const EdgeAssignment& e : c.simplex_edges->edges) {
                Json je;
                je["far"] = e.far_vertex;
                je["points"] = labels_json(e.points);
                je["params"] = params_json(e.params);
                edges.push_back(std::move(je));
            }
            s["edges"] = std::move(edges);
            j["simplex_edges"] = std::move(s);
            break;
        }
        default: break;
    }
    return j;
}

void class_node_text(const Classification& c, std::ostream& out, const std::string& indent) {
    out << indent << "kind: " << class_kind_name(c.kind) << '\n';
    out << indent << "degree: " << c.degree << '\n';
    switch (c.kind) {
        case ClassKind::PYRAMID:
            out << indent << "apices: " << fmt_labels(c.apices) << '\n';
            out << indent << "base:" << '\n';
            class_node_text(*c.inner, out, indent + "  ");
            break;
        case ClassKind::NOT_DEG_LE_1:
            out << indent << "interior face witness: " << fmt_labels(c.witness_face) << '\n';
            break;
        case ClassKind::PRISM_OVER_SIMPLEX_EDGE_POINTS:
            out << indent << "top: " << fmt_labels(c.prism->top) << '\n';
            out << indent << "bottom: " << fmt_labels(c.prism->bottom) << '\n';
            for (const VerticalEdge& e : c.prism->edges)
                out << indent << "edge " << e.top << '-' << e.bottom << ": points "
                    << fmt_labels(e.points) << '\n';
            break;
        case ClassKind::SIMPLEX_EDGE_POINTS_AT_VERTEX:
            out << indent << "apex: " << c.simplex_edges->apex << '\n';
            out << indent << "vertices: " << fmt_labels(c.simplex_edges->vertices) << '\n';
            for (const EdgeAssignment& e : c.simplex_edges->edges)
                out << indent << "edge to " << e.far_vertex << ": points "
                    << fmt_labels(e.points) << '\n';
            break;
        default: break;
    }
}

} // namespace

CommandOutput run_classify(const std::string& input_text) {
    ParsedConfig in = parse_config_text(input_text);
    const PointConfiguration& a = require_points(in, "classify");
    Classification c = classify_low_degree(a);
    DedupResult dd = dedup_points(a);

    Json result;
    result["dim"] = a.dim();
    result["count"] = a.count();
    result["distinct_count"] = dd.config.count();
    result["multiplicities"] = mult_json(c.multiplicities);
    result["classification"] = class_node_json(c);

    Json witnesses = Json::object();
    if (c.kind == ClassKind::NOT_DEG_LE_1) {
        witnesses["facets"] = facets_json(facets(dd.config));
    }
    const Classification* node = &c;
    if (node->kind == ClassKind::PYRAMID) node = node->inner.get();
    if (node->kind == ClassKind::POLYGON_NO_INTERIOR) {
        PointConfiguration base = replay_steps(dd.config, c.strip_steps);
        witnesses["base_facets"] = facets_json(facets(base));
    }

    std::ostringstream out;
    out << "points: dim " << a.dim() << ", count " << a.count() << ", distinct "
        << dd.config.count() << '\n';
    out << "multiplicities: " << fmt_multiplicities(c.multiplicities) << '\n';
    class_node_text(c, out, "");

    return CommandOutput{out.str(),
                         envelope("classify", input_block(in, input_text), std::move(result),
                                  std::move(witnesses))};
}

CommandOutput run_depth(const std::string& input_text, const std::string& point_text) {
    ParsedConfig in = parse_config_text(input_text);
    const PointConfiguration& a = require_points(in, "depth");
    QVec x = parse_point_text(point_text, a.dim());
    DepthReport rep = halfspace_depth(a, x);

    Json result;
    result["dim"] = a.dim();
    result["count"] = a.count();
    result["point"] = vec_json(x);
    result["depth"] = rep.depth;
    if (rep.witness) {
        Json w;
        w["normal"] = vec_json(rep.witness->normal);
        w["offset"] = rat_to_string(rep.witness->offset);
        result["witness"] = std::move(w);
    } else {
        result["witness"] = nullptr;
    }
    result["on_side"] = labels_json(rep.on_side);

    std::ostringstream out;
    out << "point: " << fmt_vec(x) << '\n';
    out << "depth: " << rep.depth << '\n';
    if (rep.witness)
        out << "witness halfspace: normal " << fmt_vec(rep.witness->normal) << ", offset "
            << rat_to_string(rep.witness->offset) << '\n';
    else
        out << "witness halfspace: whole space (dimension 0)" << '\n';
    out << "on side: " << fmt_labels(rep.on_side) << '\n';

    return CommandOutput{out.str(),
                         envelope("depth", input_block(in, input_text), std::move(result),
                                  Json::object())};
}

CommandOutput run_tverberg(const std::string& input_text, const std::string& point_text) {
    ParsedConfig in = parse_config_text(input_text);
    const PointConfiguration& a = require_points(in, "tverberg");
    QVec x = parse_point_text(point_text, a.dim());
    TverbergReport rep = tverberg_order(a, x);

    Json result;
    result["dim"] = a.dim();
    result["count"] = a.count();
    result["point"] = vec_json(x);
    result["order"] = rep.order;
    Json parts = Json::array();
    for (const std::vector<int>& part : rep.parts) {
        // The unique positive dependence on the part, recovered from the
        // kernel of the translated columns (each part is a positive circuit
        // support of {s_i - x}).
        std::vector<QVec> cols;
        for (int l : part) cols.push_back(sub(a.at(a.pos_of(l)), x));
        std::vector<QVec> ker = kernel_basis(QMatrix::from_cols(cols, a.dim()));
        require_internal(ker.size() == 1, "tverberg: part is not a circuit support");
        Json jp;
        jp["labels"] = labels_json(part);
        std::vector<std::pair<int, Rat>> dep;
        for (std::size_t k = 0; k < part.size(); ++k) {
            require_internal(sgn(ker[0][k]) > 0, "tverberg: part dependence not positive");
            dep.emplace_back(part[k], ker[0][k]);
        }
        jp["dependence"] = dep_json(dep);
        parts.push_back(std::move(jp));
    }
    result["parts"] = std::move(parts);
    result["unused"] = labels_json(rep.unused);

    std::ostringstream out;
    out << "point: " << fmt_vec(x) << '\n';
    out << "order: " << rep.order << '\n';
    for (std::size_t i = 0; i < rep.parts.size(); ++i)
        out << "  part " << i << ": " << fmt_labels(rep.parts[i]) << '\n';
    out << "unused: " << fmt_labels(rep.unused) << '\n';

    return CommandOutput{out.str(),
                         envelope("tverberg", input_block(in, input_text), std::move(result),
                                  Json::object())};
}

// ----------------------------------------------------------------- verifier

namespace {

struct VerifyFail {
    std::string msg;
};

[[noreturn]] void vfail(const std::string& msg) { throw VerifyFail{msg}; }

long long jint(const Json& j, const char* what) {
    if (!j.is_number_integer()) vfail(std::string(what) + ": expected an integer");
    return j.get<long long>();
}

std::string jstr(const Json& j, const char* what) {
    if (!j.is_string()) vfail(std::string(what) + ": expected a string");
    return j.get<std::string>();
}

Rat jrat(const Json& j, const char* what) {
    try {
        return parse_rational(jstr(j, what));
    } catch (const input_error& e) {
        vfail(std::string(what) + ": " + e.what());
    }
}

QVec jvec(const Json& j, const char* what) {
    if (!j.is_array()) vfail(std::string(what) + ": expected an array");
    QVec v;
    for (const Json& x : j) v.push_back(jrat(x, what));
    return v;
}

std::vector<int> jlabels(const Json& j, const char* what) {
    if (!j.is_array()) vfail(std::string(what) + ": expected a label array");
    std::vector<int> ls;
    for (const Json& x : j) ls.push_back(static_cast<int>(jint(x, what)));
    return ls;
}

std::vector<std::pair<int, Rat>> jdep(const Json& j, const char* what) {
    if (!j.is_array()) vfail(std::string(what) + ": expected a dependence array");
    std::vector<std::pair<int, Rat>> dep;
    for (const Json& e : j) {
        if (!e.is_array() || e.size() != 2) vfail(std::string(what) + ": malformed entry");
        dep.emplace_back(static_cast<int>(jint(e[0], what)), jrat(e[1], what));
    }
    return dep;
}

void need_ascending_present(const std::vector<int>& ls, const PointConfiguration& a,
                            const char* what) {
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (i > 0 && ls[i - 1] >= ls[i]) vfail(std::string(what) + ": labels not ascending");
        if (!a.has_label(ls[i]))
            vfail(std::string(what) + ": unknown label " + std::to_string(ls[i]));
    }
}

Rat eval_affine(const QVec& h, const QVec& p) {
    Rat s = h.back();
    for (std::size_t j = 0; j < p.size(); ++j) s += h[j] * p[j];
    return s;
}

// Embedded facet: supporting affine hyperplane whose member list is exactly
// its zero set and affinely spans it.
void check_facet_block(const PointConfiguration& a, const Json& jf, const std::string& what) {
    std::vector<int> members = jlabels(jf.at("members"), what.c_str());
    QVec normal = jvec(jf.at("normal"), what.c_str());
    if (normal.size() != a.dim() + 1) vfail(what + ": normal has the wrong length");
    if (is_zero_vec(normal)) vfail(what + ": zero normal");
    need_ascending_present(members, a, what.c_str());
    std::set<int> mset(members.begin(), members.end());
    std::vector<QVec> member_h;
    for (std::size_t i = 0; i < a.count(); ++i) {
        int s = sgn(eval_affine(normal, a.at(i)));
        if (s < 0) vfail(what + ": normal is negative on label " +
                         std::to_string(a.label_at(i)));
        bool member = mset.count(a.label_at(i)) > 0;
        if (member != (s == 0))
            vfail(what + ": member set does not match the zero set at label " +
                  std::to_string(a.label_at(i)));
        if (member) {
            QVec h = a.at(i);
            h.push_back(Rat(1));
            member_h.push_back(std::move(h));
        }
    }
    if (a.dim() >= 1 && rank_of_rows(member_h, a.dim() + 1) != a.dim())
        vfail(what + ": members do not affinely span a hyperplane");
}

std::vector<std::vector<int>> check_facets_block(const PointConfiguration& a, const Json& jfs,
                                                 const std::string& what) {
    if (!jfs.is_array()) vfail(what + ": expected a facet array");
    std::vector<std::vector<int>> member_sets;
    for (std::size_t i = 0; i < jfs.size(); ++i) {
        check_facet_block(a, jfs[i], what + "[" + std::to_string(i) + "]");
        member_sets.push_back(jlabels(jfs[i].at("members"), what.c_str()));
    }
    return member_sets;
}

// Embedded Gale dual: right count and rank, and every dual coordinate is an
// affine dependence of the points.
VectorConfiguration check_dual_block(const PointConfiguration& a, const Json& jd) {
    std::size_t n = a.count();
    std::size_t d = a.dim();
    if (n < d + 1) vfail("dual: fewer points than dim + 1");
    std::size_t r = n - d - 1;
    if (static_cast<std::size_t>(jint(jd.at("rank"), "dual rank")) != r)
        vfail("dual: rank is not count - dim - 1");
    if (static_cast<std::size_t>(jint(jd.at("count"), "dual count")) != n)
        vfail("dual: count mismatch");
    const Json& rows = jd.at("vectors");
    if (!rows.is_array() || rows.size() != n) vfail("dual: wrong number of vectors");
    std::vector<QVec> g;
    for (const Json& row : rows) {
        QVec v = jvec(row, "dual vector");
        if (v.size() != r) vfail("dual: vector of wrong length");
        g.push_back(std::move(v));
    }
    std::vector<QVec> homog = a.homogenized();
    for (std::size_t k = 0; k < r; ++k) {
        QVec acc(d + 1, Rat(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= d; ++j) acc[j] += g[i][k] * homog[i][j];
        if (!is_zero_vec(acc)) vfail("dual: coordinate " + std::to_string(k) +
                                     " is not an affine dependence of the points");
    }
    if (rank_of_rows(g, r) != r) vfail("dual: vectors do not span rank " + std::to_string(r));
    std::vector<int> labels = a.labels();
    return VectorConfiguration::trusted(std::move(labels), std::move(g), r);
}

// Signed circuit data: labels exist, signs match the dependence, the
// dependence sums to zero, and the support is minimally dependent (dropping
// any one element leaves an independent set).
void check_circuit_data(const VectorConfiguration& v, const std::vector<int>& pos,
                        const std::vector<int>& neg,
                        const std::vector<std::pair<int, Rat>>& dep, const std::string& what) {
    std::vector<int> support = pos;
    support.insert(support.end(), neg.begin(), neg.end());
    std::sort(support.begin(), support.end());
    if (support.empty()) vfail(what + ": empty support");
    for (std::size_t i = 1; i < support.size(); ++i)
        if (support[i - 1] == support[i]) vfail(what + ": repeated label");
    for (int l : support)
        if (!v.has_label(l)) vfail(what + ": unknown label " + std::to_string(l));
    if (dep.size() != support.size()) vfail(what + ": dependence does not match the support");
    std::set<int> pset(pos.begin(), pos.end());
    QVec acc(v.rank(), Rat(0));
    for (std::size_t i = 0; i < dep.size(); ++i) {
        const auto& [l, c] = dep[i];
        if (l != support[i]) vfail(what + ": dependence labels not the ascending support");
        int s = sgn(c);
        if (pset.count(l) ? s <= 0 : s >= 0)
            vfail(what + ": coefficient sign mismatch at label " + std::to_string(l));
        const QVec& w = v.at(v.pos_of(l));
        for (std::size_t j = 0; j < v.rank(); ++j) acc[j] += c * w[j];
    }
    if (!is_zero_vec(acc)) vfail(what + ": dependence does not sum to zero");
    // Minimality: each one-smaller subset is independent.
    for (std::size_t skip = 0; skip < support.size(); ++skip) {
        std::vector<QVec> rows;
        for (std::size_t i = 0; i < support.size(); ++i)
            if (i != skip) rows.push_back(v.at(v.pos_of(support[i])));
        if (rank_of_rows(rows, v.rank()) != support.size() - 1)
            vfail(what + ": support minus " + std::to_string(support[skip]) +
                  " is still dependent");
    }
}

// Positive-vector data (not necessarily a circuit): strictly positive
// dependence with support exactly `part` (or, with closure acceptance,
// nonnegative/nonzero with support inside `part`).
void check_part_positive(const VectorConfiguration& v, const std::vector<int>& part,
                         const std::vector<std::pair<int, Rat>>& dep, bool allow_closure,
                         const std::string& what) {
    if (part.empty()) vfail(what + ": empty part");
    for (std::size_t i = 1; i < part.size(); ++i)
        if (part[i - 1] >= part[i]) vfail(what + ": labels not ascending");
    std::set<int> pset(part.begin(), part.end());
    for (int l : part)
        if (!v.has_label(l)) vfail(what + ": unknown label " + std::to_string(l));
    QVec acc(v.rank(), Rat(0));
    std::set<int> seen;
    bool any = false;
    for (const auto& [l, c] : dep) {
        if (!pset.count(l)) vfail(what + ": dependence label outside the part");
        if (!seen.insert(l).second) vfail(what + ": repeated dependence label");
        int s = sgn(c);
        if (s < 0) vfail(what + ": negative coefficient");
        if (s > 0) any = true;
        if (!allow_closure && s == 0) vfail(what + ": zero coefficient");
        const QVec& w = v.at(v.pos_of(l));
        for (std::size_t j = 0; j < v.rank(); ++j) acc[j] += c * w[j];
    }
    if (!any) vfail(what + ": dependence has no positive coefficient");
    if (!allow_closure && seen.size() != part.size())
        vfail(what + ": dependence does not cover the part");
    if (!is_zero_vec(acc)) vfail(what + ": dependence does not sum to zero");
}

struct VerifyContext {
    VerifyReport* rep;
    void note(std::string s) { rep->checked.push_back(std::move(s)); }
};

void verify_analyze(const ParsedConfig& in, const Json& cert, VerifyContext& ctx);
void verify_gale(const ParsedConfig& in, const Json& cert, VerifyContext& ctx);
void verify_circuits(const ParsedConfig& in, const Json& cert, VerifyContext& ctx);
void verify_cayley(const ParsedConfig& in, const Json& cert, VerifyContext& ctx);
void verify_classify(const ParsedConfig& in, const Json& cert, VerifyContext& ctx);
void verify_depth(const ParsedConfig& in, const Json& cert, VerifyContext& ctx);
void verify_tverberg(const ParsedConfig& in, const Json& cert, VerifyContext& ctx);

// Multiplicity block: recomputes nothing beyond coordinate equality.
DedupResult check_multiplicities(const PointConfiguration& a, const Json& jmult,
                                 VerifyContext& ctx) {
    DedupResult dd = dedup_points(a);
    if (!jmult.is_array() || jmult.size() != dd.multiplicity.size())
        vfail("multiplicities: wrong number of entries");
    for (std::size_t i = 0; i < dd.multiplicity.size(); ++i) {
        const Json& e = jmult[i];
        if (!e.is_array() || e.size() != 2) vfail("multiplicities: malformed entry");
        if (jint(e[0], "multiplicity label") != dd.multiplicity[i].first ||
            jint(e[1], "multiplicity count") != dd.multiplicity[i].second)
            vfail("multiplicities: entry " + std::to_string(i) +
                  " does not match coordinate equality classes");
    }
    ctx.note("multiplicities match the coordinate equality classes");
    return dd;
}

void verify_analyze(const ParsedConfig& in, const Json& cert, VerifyContext& ctx) {
    if (!in.is_points) vfail("analyze: input is not a point configuration");
    const PointConfiguration& a = *in.points;
    const Json& res = cert.at("result");
    if (static_cast<std::size_t>(jint(res.at("dim"), "dim")) != a.dim() ||
        static_cast<std::size_t>(jint(res.at("count"), "count")) != a.count())
        vfail("analyze: result shape mismatch");
    DedupResult dd = check_multiplicities(a, res.at("multiplicities"), ctx);
    if (static_cast<std::size_t>(jint(res.at("distinct_count"), "distinct_count")) !=
        dd.config.count())
        vfail("analyze: distinct_count mismatch");

    long long degree = jint(res.at("degree"), "degree");
    long long codegree = jint(res.at("codegree"), "codegree");
    if (degree < 0 || codegree < 1 ||
        degree + codegree != static_cast<long long>(a.dim()) + 1)
        vfail("analyze: degree + codegree != dim + 1");
    ctx.note("degree + codegree = dim + 1");

    std::vector<std::vector<int>> facet_members =
        check_facets_block(dd.config, cert.at("witnesses").at("facets"), "facet");
    if (static_cast<std::size_t>(jint(res.at("facet_count"), "facet_count")) !=
        facet_members.size())
        vfail("analyze: facet_count does not match the embedded list");
    ctx.note("all " + std::to_string(facet_members.size()) +
             " embedded facets are supporting hyperplanes with exact member sets");

    std::vector<int> witness = jlabels(res.at("interior_witness"), "interior witness");
    need_ascending_present(witness, dd.config, "interior witness");
    if (witness.empty()) vfail("analyze: empty interior witness");
    if (static_cast<long long>(witness.size()) != codegree)
        vfail("analyze: interior witness size differs from the codegree");
    for (const std::vector<int>& m : facet_members)
        if (std::includes(m.begin(), m.end(), witness.begin(), witness.end()))
            vfail("analyze: interior witness lies in a facet");
    ctx.note("interior witness of size codegree avoids every embedded facet");

    std::vector<int> apices = jlabels(res.at("pyramid_apices"), "pyramid apices");
    std::vector<int> remaining = dd.config.labels();
    for (int apex : apices) {
        auto it = std::find(remaining.begin(), remaining.end(), apex);
        if (it == remaining.end()) vfail("analyze: apex not among the remaining labels");
        std::vector<QVec> all_h, rest_h;
        for (int l : remaining) {
            QVec h = dd.config.at(dd.config.pos_of(l));
            h.push_back(Rat(1));
            all_h.push_back(h);
            if (l != apex) rest_h.push_back(std::move(h));
        }
        std::size_t rk = rank_of_rows(all_h, a.dim() + 1);
        if (rank_of_rows(rest_h, a.dim() + 1) != rk - 1)
            vfail("analyze: claimed apex " + std::to_string(apex) +
                  " lies in the affine hull of the rest");
        remaining.erase(it);
    }
    ctx.note("pyramid apex chain verified by rank drops");
    ctx.note("note: completeness of the facet list and of the apex chain is not "
             "substitution-checkable; the check suites cover it");
}

void verify_gale(const ParsedConfig& in, const Json& cert, VerifyContext& ctx) {
    if (!in.is_points) vfail("gale: input is not a point configuration");
    check_dual_block(*in.points, cert.at("result"));
    ctx.note("dual vectors: affine dependences of the points, spanning rank count - dim - 1");
    ctx.note("note: canonicality of the kernel basis is a convention, not re-derived");
}

void verify_circuits(const ParsedConfig& in, const Json& cert, VerifyContext& ctx) {
    VectorConfiguration v = [&] {
        if (in.is_points) {
            VectorConfiguration g =
                check_dual_block(*in.points, cert.at("witnesses").at("dual"));
            ctx.note("embedded Gale dual verified against the points");
            return g;
        }
        return *in.vectors;
    }();
    const Json& res = cert.at("result");
    if (static_cast<std::size_t>(jint(res.at("rank"), "rank")) != v.rank() ||
        static_cast<std::size_t>(jint(res.at("count"), "count")) != v.count())
        vfail("circuits: result shape mismatch");
    const Json& list = res.at("circuits");
    if (!list.is_array()) vfail("circuits: malformed list");
    if (static_cast<std::size_t>(jint(res.at("circuit_count"), "circuit_count")) != list.size())
        vfail("circuits: circuit_count mismatch");
    std::size_t positive = 0;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const Json& jc = list[i];
        std::vector<int> pos = jlabels(jc.at("pos"), "pos");
        std::vector<int> neg = jlabels(jc.at("neg"), "neg");
        check_circuit_data(v, pos, neg, jdep(jc.at("dependence"), "dependence"),
                           "circuit " + std::to_string(i));
        bool is_positive = neg.empty();
        if (jc.at("positive") != is_positive) vfail("circuit " + std::to_string(i) +
                                                    ": positivity flag mismatch");
        if (is_positive) ++positive;
    }
    if (static_cast<std::size_t>(jint(res.at("positive_count"), "positive_count")) != positive)
        vfail("circuits: positive_count mismatch");
    ctx.note("all " + std::to_string(list.size()) +
             " circuits: zero-sum dependences with sign-matched supports, minimal by "
             "one-element-removed rank checks");
    ctx.note("note: completeness of the circuit list is not substitution-checkable; the "
             "check suites cover it");
}

void verify_cayley(const ParsedConfig& in, const Json& cert, VerifyContext& ctx) {
    VectorConfiguration v = [&] {
        if (in.is_points) {
            VectorConfiguration g =
                check_dual_block(*in.points, cert.at("witnesses").at("dual"));
            ctx.note("embedded Gale dual verified against the points");
            return g;
        }
        return *in.vectors;
    }();
    const Json& res = cert.at("result");
    if (static_cast<std::size_t>(jint(res.at("rank"), "rank")) != v.rank() ||
        static_cast<std::size_t>(jint(res.at("count"), "count")) != v.count())
        vfail("cayley: result shape mismatch");

    const Json& jweak = res.at("weak");
    const Json& jfactors = jweak.at("factors");
    if (!jfactors.is_array()) vfail("cayley: malformed factors");
    if (static_cast<std::size_t>(jint(jweak.at("length"), "weak length")) != jfactors.size())
        vfail("cayley: weak length mismatch");
    std::set<int> used;
    std::vector<std::vector<int>> factor_sets;
    for (std::size_t i = 0; i < jfactors.size(); ++i) {
        std::vector<int> labels = jlabels(jfactors[i].at("labels"), "factor labels");
        std::vector<std::pair<int, Rat>> dep = jdep(jfactors[i].at("dependence"), "factor");
        check_circuit_data(v, labels, {}, dep, "weak factor " + std::to_string(i));
        for (int l : labels)
            if (!used.insert(l).second)
                vfail("weak factor " + std::to_string(i) + ": label " + std::to_string(l) +
                      " reused");
        factor_sets.push_back(std::move(labels));
    }
    std::vector<int> residual = jlabels(jweak.at("residual"), "residual");
    std::vector<int> expect;
    for (int l : v.labels())
        if (!used.count(l)) expect.push_back(l);
    std::sort(expect.begin(), expect.end());
    if (residual != expect) vfail("cayley: residual is not the complement of the factors");
    ctx.note("weak factors: disjoint positive circuits (zero-sum, minimal); residual is "
             "their complement");

    const Json& jcomb = res.at("combinatorial");
    bool present = jcomb.at("present").is_boolean() && jcomb.at("present").get<bool>();
    if (present) {
        const Json& parts = jcomb.at("parts");
        const Json& deps = jcomb.at("part_dependences");
        if (!parts.is_array() || !deps.is_array() || parts.size() != deps.size())
            vfail("cayley: malformed combinatorial parts");
        if (static_cast<std::size_t>(jint(jcomb.at("length"), "comb length")) != parts.size())
            vfail("cayley: combinatorial length mismatch");
        std::set<int> covered;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            std::vector<int> part = jlabels(parts[i], "part");
            check_part_positive(v, part, jdep(deps[i], "part dependence"), false,
                                "combinatorial part " + std::to_string(i));
            for (int l : part)
                if (!covered.insert(l).second)
                    vfail("combinatorial part " + std::to_string(i) + ": label " +
                          std::to_string(l) + " reused");
        }
        if (covered.size() != v.count())
            vfail("cayley: combinatorial parts do not cover every label");
        if (jfactors.size() < parts.size())
            vfail("cayley: combinatorial length exceeds the weak length");
        ctx.note("combinatorial parts: a partition into positive vectors, each with a "
                 "strictly positive zero-sum dependence");
    } else {
        QVec c = jvec(jcomb.at("non_cyclic_witness"), "non-cyclic witness");
        if (c.size() != v.rank()) vfail("cayley: non-cyclic witness has the wrong length");
        bool strict = false;
        for (std::size_t i = 0; i < v.count(); ++i) {
            int s = sgn(dot(c, v.at(i)));
            if (s < 0) vfail("cayley: non-cyclic witness is negative on label " +
                             std::to_string(v.label_at(i)));
            strict = strict || s > 0;
        }
        if (!strict) vfail("cayley: non-cyclic witness vanishes everywhere");
        ctx.note("absence of a combinatorial decomposition: witness functional is "
                 "nonnegative on every vector and positive somewhere");
    }

    if (in.is_points) {
        const Json& supports = cert.at("witnesses").at("face_supports");
        if (!supports.is_array() || supports.size() != factor_sets.size())
            vfail("cayley: face supports do not match the factors");
        const PointConfiguration& a = *in.points;
        for (std::size_t i = 0; i < supports.size(); ++i) {
            std::vector<int> factor = jlabels(supports[i].at("factor"), "face factor");
            if (factor != factor_sets[i])
                vfail("cayley: face support " + std::to_string(i) +
                      " names a different factor");
            QVec normal = jvec(supports[i].at("normal"), "face normal");
            if (normal.size() != a.dim() + 1)
                vfail("cayley: face normal has the wrong length");
            std::set<int> fset(factor.begin(), factor.end());
            for (std::size_t p = 0; p < a.count(); ++p) {
                int s = sgn(eval_affine(normal, a.at(p)));
                bool inside = fset.count(a.label_at(p)) > 0;
                if (inside ? s <= 0 : s != 0)
                    vfail("cayley: face support " + std::to_string(i) +
                          " has the wrong sign at label " + std::to_string(a.label_at(p)));
            }
        }
        ctx.note("primal face supports: each factor complement is the exact zero set of an "
                 "affine functional positive on the factor");
    }
    ctx.note("note: maximality of both decompositions is not substitution-checkable; the "
             "check suites cover it");
}

void check_class_node(const PointConfiguration& cur, const Json& jn, const Json& jwit,
                      VerifyContext& ctx, int depth_guard) {
    if (depth_guard > 64) vfail("classify: node nesting too deep");
    std::string kind = jstr(jn.at("kind"), "kind");
    long long degree = jint(jn.at("degree"), "degree");
    const std::size_t d = cur.dim();
    const std::size_t n = cur.count();

    if (kind == "PYRAMID") {
        std::vector<int> apices = jlabels(jn.at("apices"), "apices");
        const Json& steps = jn.at("steps");
        if (!steps.is_array() || steps.empty() || steps.size() != apices.size())
            vfail("classify: PYRAMID without matching steps");
        PointConfiguration base = cur;
        for (std::size_t i = 0; i < steps.size(); ++i) {
            const Json& st = steps[i];
            int apex = static_cast<int>(jint(st.at("apex"), "step apex"));
            if (apex != apices[i]) vfail("classify: step apex differs from the apex list");
            int translate = static_cast<int>(jint(st.at("translate"), "step translate"));
            std::vector<std::size_t> pivots;
            for (const Json& p : st.at("pivots"))
                pivots.push_back(static_cast<std::size_t>(jint(p, "step pivot")));
            try {
                base = replay_one(base, apex, translate, pivots);
            } catch (const input_error& e) {
                vfail("classify: step " + std::to_string(i) + ": " + e.what());
            }
        }
        ctx.note("pyramid steps replayed: each apex verified by rank drop, each chart by "
                 "the re-embedded affine span");
        const Json& inner = jn.at("inner");
        if (jint(inner.at("degree"), "inner degree") != degree)
            vfail("classify: pyramid degree differs from the base degree");
        check_class_node(base, inner, jwit, ctx, depth_guard + 1);
        ctx.note("note: the base having no further apex is not substitution-checkable; the "
                 "check suites cover it");
        return;
    }

    if (kind == "SIMPLEX_DEG0") {
        if (degree != 0) vfail("classify: SIMPLEX_DEG0 with nonzero degree");
        if (n != d + 1) vfail("classify: SIMPLEX_DEG0 but count != dim + 1");
        std::vector<QVec> homog = cur.homogenized();
        if (rank_of_rows(homog, d + 1) != d + 1)
            vfail("classify: SIMPLEX_DEG0 but the points are affinely dependent");
        ctx.note("simplex: dim + 1 affinely independent distinct points (degree 0 certified)");
        return;
    }

    if (kind == "DIM_LE_1") {
        if (degree != 1) vfail("classify: DIM_LE_1 with degree != 1");
        if (d > 1) vfail("classify: DIM_LE_1 but the base is " + std::to_string(d) +
                         "-dimensional");
        if (n < 3) vfail("classify: DIM_LE_1 with fewer than 3 distinct points");
        ctx.note("segment: at least 3 distinct collinear points (degree 1 certified)");
        return;
    }

    if (kind == "POLYGON_NO_INTERIOR") {
        if (degree != 1) vfail("classify: POLYGON_NO_INTERIOR with degree != 1");
        if (d != 2) vfail("classify: POLYGON_NO_INTERIOR but the base is not planar");
        if (n < 4) vfail("classify: POLYGON_NO_INTERIOR with fewer than 4 points");
        std::vector<std::vector<int>> facet_members =
            check_facets_block(cur, jwit.at("base_facets"), "base facet");
        for (int l : cur.labels()) {
            bool on_boundary = false;
            for (const std::vector<int>& m : facet_members)
                on_boundary = on_boundary ||
                              std::binary_search(m.begin(), m.end(), l);
            if (!on_boundary)
                vfail("classify: label " + std::to_string(l) +
                      " lies on no embedded boundary edge");
        }
        ctx.note("polygon: every point lies on a verified supporting edge, so none is "
                 "interior (degree 1 certified)");
        return;
    }

    if (kind == "PRISM_OVER_SIMPLEX_EDGE_POINTS") {
        if (degree != 1) vfail("classify: prism node with degree != 1");
        const Json& jp = jn.at("prism");
        std::vector<int> top = jlabels(jp.at("top"), "prism top");
        std::vector<int> bottom = jlabels(jp.at("bottom"), "prism bottom");
        if (top.size() != d || bottom.size() != d)
            vfail("classify: prism facets must have exactly dim vertices");
        auto check_simplex_facet = [&](const std::vector<int>& members, const QVec& normal,
                                       const char* what) {
            Json jf;
            jf["members"] = labels_json(members);
            jf["normal"] = vec_json(normal);
            check_facet_block(cur, jf, what);
            std::vector<QVec> homog;
            for (int l : members) {
                QVec h = cur.at(cur.pos_of(l));
                h.push_back(Rat(1));
                homog.push_back(std::move(h));
            }
            if (rank_of_rows(homog, d + 1) != d)
                vfail(std::string(what) + ": members are not affinely independent");
        };
        check_simplex_facet(top, jvec(jp.at("top_normal"), "top normal"), "prism top facet");
        check_simplex_facet(bottom, jvec(jp.at("bottom_normal"), "bottom normal"),
                            "prism bottom facet");
        std::set<int> covered(top.begin(), top.end());
        for (int l : bottom)
            if (!covered.insert(l).second)
                vfail("classify: prism top and bottom facets share label " +
                      std::to_string(l));

        const Json& edges = jn.at("prism").at("edges");
        if (!edges.is_array() || edges.size() != d)
            vfail("classify: prism needs exactly dim vertical edges");
        std::set<int> tops_used, bottoms_used;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const Json& je = edges[i];
            std::string what = "prism edge " + std::to_string(i);
            int t = static_cast<int>(jint(je.at("top"), "edge top"));
            int b = static_cast<int>(jint(je.at("bottom"), "edge bottom"));
            if (std::find(top.begin(), top.end(), t) == top.end() ||
                std::find(bottom.begin(), bottom.end(), b) == bottom.end())
                vfail(what + ": endpoints are not a top/bottom vertex pair");
            if (!tops_used.insert(t).second || !bottoms_used.insert(b).second)
                vfail(what + ": vertex reused by another edge");
            std::vector<int> points = jlabels(je.at("points"), "edge points");
            std::vector<int> members = points;
            members.push_back(t);
            members.push_back(b);
            std::sort(members.begin(), members.end());
            // An edge is a face, not a facet: check signs only, not the span.
            QVec normal = jvec(je.at("normal"), "edge normal");
            if (normal.size() != d + 1) vfail(what + ": normal has the wrong length");
            std::set<int> mset(members.begin(), members.end());
            for (std::size_t p = 0; p < cur.count(); ++p) {
                int s = sgn(eval_affine(normal, cur.at(p)));
                bool member = mset.count(cur.label_at(p)) > 0;
                if (s < 0) vfail(what + ": supporting functional negative at label " +
                                 std::to_string(cur.label_at(p)));
                if (member != (s == 0))
                    vfail(what + ": zero set does not match the edge members");
            }
            const Json& jparams = je.at("params");
            if (!jparams.is_array() || jparams.size() != points.size())
                vfail(what + ": params do not match the points");
            const QVec& pt = cur.at(cur.pos_of(t));
            const QVec& pb = cur.at(cur.pos_of(b));
            for (std::size_t k = 0; k < points.size(); ++k) {
                Rat tau = jrat(jparams[k], "edge param");
                if (!(sgn(tau) > 0 && tau < 1)) vfail(what + ": param not strictly inside");
                const QVec& pp = cur.at(cur.pos_of(points[k]));
                for (std::size_t j = 0; j < d; ++j) {
                    Rat expect = pt[j] + tau * (pb[j] - pt[j]);
                    if (pp[j] != expect)
                        vfail(what + ": point " + std::to_string(points[k]) +
                              " is not at its parameter on the edge");
                }
                if (!covered.insert(points[k]).second)
                    vfail(what + ": label " + std::to_string(points[k]) + " reused");
            }
        }
        if (covered.size() != n)
            vfail("classify: prism structure does not cover every label");
        ctx.note("prism: two disjoint verified simplex facets, a perfect vertical-edge "
                 "matching, every remaining point strictly inside a verified edge "
                 "(degree 1 certified)");
        return;
    }

    if (kind == "SIMPLEX_EDGE_POINTS_AT_VERTEX") {
        if (degree != 1) vfail("classify: simplex-edge node with degree != 1");
        const Json& js = jn.at("simplex_edges");
        int apex = static_cast<int>(jint(js.at("apex"), "apex"));
        std::vector<int> vertices = jlabels(js.at("vertices"), "vertices");
        need_ascending_present(vertices, cur, "vertices");
        if (vertices.size() != d + 1)
            vfail("classify: simplex-edge vertices must number dim + 1");
        if (std::find(vertices.begin(), vertices.end(), apex) == vertices.end())
            vfail("classify: apex is not a listed vertex");
        std::vector<QVec> homog;
        for (int l : vertices) {
            QVec h = cur.at(cur.pos_of(l));
            h.push_back(Rat(1));
            homog.push_back(std::move(h));
        }
        if (rank_of_rows(homog, d + 1) != d + 1)
            vfail("classify: simplex-edge vertices are affinely dependent");
        std::set<int> covered(vertices.begin(), vertices.end());
        const Json& edges = js.at("edges");
        if (!edges.is_array()) vfail("classify: malformed simplex edges");
        const QVec& pa = cur.at(cur.pos_of(apex));
        std::set<int> fars;
        std::size_t total_points = 0;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const Json& je = edges[i];
            std::string what = "simplex edge " + std::to_string(i);
            int far = static_cast<int>(jint(je.at("far"), "far vertex"));
            if (far == apex ||
                std::find(vertices.begin(), vertices.end(), far) == vertices.end())
                vfail(what + ": far vertex invalid");
            if (!fars.insert(far).second) vfail(what + ": far vertex reused");
            std::vector<int> points = jlabels(je.at("points"), "edge points");
            const Json& jparams = je.at("params");
            if (!jparams.is_array() || jparams.size() != points.size())
                vfail(what + ": params do not match the points");
            const QVec& pf = cur.at(cur.pos_of(far));
            for (std::size_t k = 0; k < points.size(); ++k) {
                if (!cur.has_label(points[k]))
                    vfail(what + ": unknown label " + std::to_string(points[k]));
                Rat tau = jrat(jparams[k], "edge param");
                if (!(sgn(tau) > 0 && tau < 1)) vfail(what + ": param not strictly inside");
                const QVec& pp = cur.at(cur.pos_of(points[k]));
                for (std::size_t j = 0; j < d; ++j) {
                    Rat expect = pa[j] + tau * (pf[j] - pa[j]);
                    if (pp[j] != expect)
                        vfail(what + ": point " + std::to_string(points[k]) +
                              " is not at its parameter on the edge");
                }
                if (!covered.insert(points[k]).second)
                    vfail(what + ": label " + std::to_string(points[k]) + " reused");
                ++total_points;
            }
        }
        if (covered.size() != n)
            vfail("classify: simplex-edge structure does not cover every label");
        if (total_points == 0)
            vfail("classify: simplex-edge node without any edge point would be a simplex");
        ctx.note("simplex with edge points: verified affinely independent vertices, every "
                 "other point strictly inside an edge at the apex (degree 1 certified)");
        return;
    }

    if (kind == "NOT_DEG_LE_1") {
        std::vector<std::vector<int>> facet_members =
            check_facets_block(cur, jwit.at("facets"), "facet");
        std::vector<int> witness = jlabels(jn.at("witness_face"), "witness face");
        need_ascending_present(witness, cur, "witness face");
        if (witness.empty()) vfail("classify: empty interior-face witness");
        if (witness.size() + 2 > d + 1)
            vfail("classify: witness face too large to certify degree >= 2");
        for (const std::vector<int>& m : facet_members)
            if (std::includes(m.begin(), m.end(), witness.begin(), witness.end()))
                vfail("classify: witness face lies in an embedded facet");
        if (degree != static_cast<long long>(d) + 1 - static_cast<long long>(witness.size()))
            vfail("classify: degree does not match dim + 1 - witness size");
        ctx.note("interior face of size dim + 1 - degree avoids every embedded facet "
                 "(degree >= 2 certified up to facet-list completeness)");
        ctx.note("note: completeness of the facet list and minimality of the witness are "
                 "not substitution-checkable; the check suites cover them");
        return;
    }

    vfail("classify: unknown kind '" + kind + "'");
}

void verify_classify(const ParsedConfig& in, const Json& cert, VerifyContext& ctx) {
    if (!in.is_points) vfail("classify: input is not a point configuration");
    const PointConfiguration& a = *in.points;
    const Json& res = cert.at("result");
    if (static_cast<std::size_t>(jint(res.at("dim"), "dim")) != a.dim() ||
        static_cast<std::size_t>(jint(res.at("count"), "count")) != a.count())
        vfail("classify: result shape mismatch");
    DedupResult dd = check_multiplicities(a, res.at("multiplicities"), ctx);
    if (static_cast<std::size_t>(jint(res.at("distinct_count"), "distinct_count")) !=
        dd.config.count())
        vfail("classify: distinct_count mismatch");
    check_class_node(dd.config, res.at("classification"), cert.at("witnesses"), ctx, 0);
}

void verify_depth(const ParsedConfig& in, const Json& cert, VerifyContext& ctx) {
    if (!in.is_points) vfail("depth: input is not a point configuration");
    const PointConfiguration& a = *in.points;
    const Json& res = cert.at("result");
    if (static_cast<std::size_t>(jint(res.at("dim"), "dim")) != a.dim() ||
        static_cast<std::size_t>(jint(res.at("count"), "count")) != a.count())
        vfail("depth: result shape mismatch");
    QVec x = jvec(res.at("point"), "query point");
    if (x.size() != a.dim()) vfail("depth: query point has the wrong dimension");
    long long depth = jint(res.at("depth"), "depth");
    std::vector<int> on_side = jlabels(res.at("on_side"), "on_side");
    need_ascending_present(on_side, a, "on_side");

    const Json& jw = res.at("witness");
    if (jw.is_null()) {
        if (a.dim() != 0) vfail("depth: witness missing in positive dimension");
        if (depth != static_cast<long long>(a.count()) ||
            on_side.size() != a.count())
            vfail("depth: dimension-0 depth must count every point");
        ctx.note("dimension 0: the whole space is the only halfspace; depth = count");
        return;
    }
    QVec normal = jvec(jw.at("normal"), "witness normal");
    Rat offset = jrat(jw.at("offset"), "witness offset");
    if (normal.size() != a.dim()) vfail("depth: witness normal has the wrong length");
    if (is_zero_vec(normal)) vfail("depth: zero witness normal");
    if (dot(normal, x) != offset) vfail("depth: witness halfspace misses the query point");
    std::set<int> claimed(on_side.begin(), on_side.end());
    for (std::size_t i = 0; i < a.count(); ++i) {
        bool inside = dot(normal, a.at(i)) >= offset;
        if (inside != (claimed.count(a.label_at(i)) > 0))
            vfail("depth: on_side disagrees with the halfspace at label " +
                  std::to_string(a.label_at(i)));
    }
    if (static_cast<long long>(on_side.size()) != depth)
        vfail("depth: on_side size differs from the claimed depth");
    ctx.note("witness halfspace through the query point contains exactly the claimed "
             "labels, depth many");
    ctx.note("note: minimality over all halfspaces is not substitution-checkable; the "
             "check suites cover it");
}

void verify_tverberg(const ParsedConfig& in, const Json& cert, VerifyContext& ctx) {
    if (!in.is_points) vfail("tverberg: input is not a point configuration");
    const PointConfiguration& a = *in.points;
    const Json& res = cert.at("result");
    if (static_cast<std::size_t>(jint(res.at("dim"), "dim")) != a.dim() ||
        static_cast<std::size_t>(jint(res.at("count"), "count")) != a.count())
        vfail("tverberg: result shape mismatch");
    QVec x = jvec(res.at("point"), "query point");
    if (x.size() != a.dim()) vfail("tverberg: query point has the wrong dimension");

    // Translated configuration {s_i - x} as a vector configuration.
    std::vector<QVec> vecs;
    for (std::size_t i = 0; i < a.count(); ++i) vecs.push_back(sub(a.at(i), x));
    std::vector<int> labels = a.labels();
    std::size_t r = rank_of_rows(vecs, a.dim());
    VectorConfiguration v = [&] {
        if (r == a.dim())
            return VectorConfiguration::trusted(std::move(labels), std::move(vecs), a.dim());
        // Degenerate query: re-embed in the span so the rank invariant holds.
        Rref rr = rref(QMatrix::from_rows(vecs, a.dim()));
        std::vector<QVec> rows;
        for (const QVec& w : vecs) {
            QVec e(rr.pivots.size());
            for (std::size_t k = 0; k < rr.pivots.size(); ++k) {
                QVec basis_row(rr.mat.cols);
                for (std::size_t j = 0; j < rr.mat.cols; ++j) basis_row[j] = rr.mat.at(k, j);
                e[k] = dot(basis_row, w);
            }
            rows.push_back(std::move(e));
        }
        return VectorConfiguration::trusted(std::move(labels), std::move(rows), r);
    }();

    const Json& parts = res.at("parts");
    if (!parts.is_array()) vfail("tverberg: malformed parts");
    if (jint(res.at("order"), "order") != static_cast<long long>(parts.size()))
        vfail("tverberg: order differs from the number of parts");
    std::set<int> used;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        std::vector<int> part = jlabels(parts[i].at("labels"), "part labels");
        // Closure acceptance: a nonnegative nonzero combination suffices for
        // x to lie in conv(part).
        check_part_positive(v, part, jdep(parts[i].at("dependence"), "part dependence"),
                            true, "tverberg part " + std::to_string(i));
        for (int l : part)
            if (!used.insert(l).second)
                vfail("tverberg part " + std::to_string(i) + ": label " + std::to_string(l) +
                      " reused");
    }
    std::vector<int> unused = jlabels(res.at("unused"), "unused");
    std::vector<int> expect;
    for (int l : a.labels())
        if (!used.count(l)) expect.push_back(l);
    std::sort(expect.begin(), expect.end());
    if (unused != expect) vfail("tverberg: unused is not the complement of the parts");
    ctx.note("parts: pairwise disjoint, each with a nonnegative nonzero zero-sum "
             "combination of the translated points (x in every hull)");
    ctx.note("note: maximality of the partition is not substitution-checkable; the check "
             "suites cover it");
}

} // namespace

VerifyReport verify_certificate(const std::string& input_text, const Json& cert) {
    VerifyReport rep;
    VerifyContext ctx{&rep};
    try {
        if (!cert.is_object()) vfail("certificate is not a JSON object");
        if (cert.at("format") != "galedeg-certificate") vfail("unknown certificate format");
        if (cert.at("version") != 1) vfail("unsupported certificate version");
        std::string command = jstr(cert.at("command"), "command");

        ParsedConfig in = parse_config_text(input_text);
        const Json& jin = cert.at("input");
        if (jin.at("kind") != (in.is_points ? "points" : "vectors"))
            vfail("input kind mismatch");
        if (static_cast<std::size_t>(
                jint(jin.at(in.is_points ? "dim" : "rank"), "input shape")) != in.ambient())
            vfail("input dimension/rank mismatch");
        if (static_cast<std::size_t>(jint(jin.at("count"), "input count")) != in.count())
            vfail("input count mismatch");
        if (jin.at("fnv1a64") != fnv1a64_hex(input_text))
            vfail("input hash mismatch: certificate belongs to a different input");
        ctx.note("input identity: kind, shape and fnv1a64 hash match");

        if (command == "analyze") verify_analyze(in, cert, ctx);
        else if (command == "gale") verify_gale(in, cert, ctx);
        else if (command == "circuits") verify_circuits(in, cert, ctx);
        else if (command == "cayley") verify_cayley(in, cert, ctx);
        else if (command == "classify") verify_classify(in, cert, ctx);
        else if (command == "depth") verify_depth(in, cert, ctx);
        else if (command == "tverberg") verify_tverberg(in, cert, ctx);
        else vfail("unknown command '" + command + "'");
        rep.ok = true;
    } catch (const VerifyFail& f) {
        rep.ok = false;
        rep.failure = f.msg;
    } catch (const std::exception& e) {
        rep.ok = false;
        rep.failure = std::string("malformed certificate: ") + e.what();
    }
    return rep;
}

Json check_result_json(const CheckResult& r) {
    Json j;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["instances"] = r.instances;
    j["checks"] = r.checks;
    j["ok"] = r.ok;
    Json fails = Json::array();
    for (const CheckFailure& f : r.failures) {
        Json jf;
        jf["what"] = f.what;
        jf["instance"] = f.instance;
        fails.push_back(std::move(jf));
    }
    j["failures"] = std::move(fails);
    Json finds = Json::array();
    for (const std::string& s : r.findings) finds.push_back(s);
    j["findings"] = std::move(finds);
    return j;
}

} // namespace galedeg
