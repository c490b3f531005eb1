// Text format round-trips and line-numbered parse errors; command runners
// with their frozen reports; certificate envelopes, verification, and
// tamper rejection.
#include "doctest.h"

#include <string>

#include "galedeg/certificate.hpp"
#include "galedeg/generators.hpp"
#include "galedeg/io.hpp"

using namespace galedeg;

namespace {

const char* SQUARE = "points 2 4\n0 0\n1 0\n1 1\n0 1\n";

std::string pentagon_text() { return serialize_points(pentagon_config()); }
std::string lifted_text() { return serialize_points(lifted_config(2)); }

} // namespace

TEST_CASE("serialization round-trips") {
    PointConfiguration pent = pentagon_config();
    std::string text = serialize_points(pent);
    CHECK(text == "points 2 5\n0 0\n4 0\n5 3\n2 5\n-1 3\n");
    ParsedConfig back = parse_config_text(text);
    REQUIRE(back.is_points);
    CHECK(back.points->coords() == pent.coords());
    CHECK(back.points->dim() == 2);
    CHECK(back.points->labels() == pent.labels());

    VectorConfiguration g = gale_dual(lifted_config(2));
    ParsedConfig vb = parse_config_text(serialize_vectors(g));
    REQUIRE_FALSE(vb.is_points);
    CHECK(vb.vectors->coords() == g.coords());
    CHECK(vb.vectors->rank() == g.rank());

    // dimension 0: blank rows
    PointConfiguration dot = PointConfiguration::checked({0}, {QVec{}}, 0);
    ParsedConfig db = parse_config_text(serialize_points(dot));
    REQUIRE(db.is_points);
    CHECK(db.points->dim() == 0);
    CHECK(db.points->count() == 1);
}

TEST_CASE("parsing accepts comments and rationals") {
    ParsedConfig a = parse_config_text(
        "# leading comment\npoints 2 3\n0 0\n# interior comment\n1/2 -3/4\n0 1\n");
    REQUIRE(a.is_points);
    CHECK(a.points->count() == 3);
    CHECK(a.points->at(1) == QVec{Rat(1, 2), Rat(-3, 4)});

    ParsedConfig v = parse_config_text("vectors 2 3\n1 0\n0 1\n-1 -1\n");
    REQUIRE_FALSE(v.is_points);
    CHECK(v.vectors->rank() == 2);
    CHECK(v.vectors->labels() == std::vector<int>{0, 1, 2});
}

TEST_CASE("parse errors carry one-based line numbers") {
    CHECK_THROWS_WITH_AS(parse_config_text("simplices 2 3\n0 0\n"),
                         "line 1: unknown configuration kind 'simplices'", input_error);
    CHECK_THROWS_WITH_AS(parse_config_text("points 2 3\n0 0\n1 0\n"),
                         "unexpected end of input: expected 3 rows, found 2", input_error);
    CHECK_THROWS_WITH_AS(parse_config_text("points 2 2\n0 0\n1 0 3\n"),
                         "line 3: expected 2 coordinates, found 3", input_error);
    CHECK_THROWS_WITH_AS(parse_config_text("points 2 2\n0 0\n1/0 2\n"),
                         "line 3: zero denominator in rational '1/0'", input_error);
    CHECK_THROWS_WITH_AS(parse_config_text("points 2 3\n0 0\n1 0\n0 1\n5 5\n"),
                         "line 5: unexpected content after the last row", input_error);
    CHECK_THROWS_WITH_AS(parse_config_text("vectors 2 2\n1 0\nx 1\n"),
                         "line 3: bad character in rational 'x'", input_error);
    CHECK_THROWS_WITH_AS(parse_config_text(""), "empty input: expected a header line",
                         input_error);
    // declared span failures surface as input errors too
    CHECK_THROWS_AS(parse_config_text("points 2 2\n0 0\n1 0\n"), input_error);
}

TEST_CASE("query point parsing") {
    CHECK(parse_point_text("100/31 60/31", 2) == QVec{Rat(100, 31), Rat(60, 31)});
    CHECK(parse_point_text("  -1   2 ", 2) == QVec{Rat(-1), Rat(2)});
    CHECK(parse_point_text("", 0) == QVec{});
    CHECK_THROWS_AS(parse_point_text("1 2 3", 2), input_error);
    CHECK_THROWS_AS(parse_point_text("1", 2), input_error);
    CHECK_THROWS_AS(parse_point_text("a b", 2), input_error);
}

TEST_CASE("frozen command reports") {
    CHECK(run_analyze(pentagon_text()).text ==
          "points: dim 2, count 5, distinct 5\n"
          "multiplicities: none\n"
          "pyramid apices: none\n"
          "degree: 1\n"
          "codegree: 2\n"
          "interior face witness: {0 2}\n"
          "facets: 5\n");

    CHECK(run_gale(SQUARE).text == "vectors 1 4\n1\n-1\n1\n-1\n");
    // the Gale report is itself loadable
    ParsedConfig g = parse_config_text(run_gale(SQUARE).text);
    REQUIRE_FALSE(g.is_points);
    CHECK(g.vectors->rank() == 1);

    std::string circuits_text = run_circuits(pentagon_text()).text;
    CHECK(circuits_text ==
          "gale dual: rank 2, count 5\n"
          "circuits: 10, positive: 5\n"
          "  0: pos {0 1 2} neg {} :: 0=11 1=19 2=12\n"
          "  1: pos {0 1} neg {3} :: 0=3 1=3 3=-2\n"
          "  2: pos {0 1 4} neg {} :: 0=19 1=11 4=12\n"
          "  3: pos {0} neg {2 3} :: 0=12 2=-18 3=-19\n"
          "  4: pos {0 4} neg {2} :: 0=20 2=-11 4=19\n"
          "  5: pos {0 3 4} neg {} :: 0=12 3=11 4=18\n"
          "  6: pos {1 2 3} neg {} :: 1=12 2=18 3=11\n"
          "  7: pos {1 2} neg {4} :: 1=20 2=19 4=-11\n"
          "  8: pos {1} neg {3 4} :: 1=12 3=-19 4=-18\n"
          "  9: pos {2 3 4} neg {} :: 2=3 3=5 4=3\n");

    CHECK(run_cayley(lifted_text()).text ==
          "gale dual: rank 3, count 7\n"
          "weak cayley length: 2\n"
          "  factor 0: {0 3 5}\n"
          "  factor 1: {1 2 4 6}\n"
          "residual: {}\n"
          "combinatorial cayley length: 2\n"
          "  part 0: {0 3 5}\n"
          "  part 1: {1 2 4 6}\n"
          "face supports: verified\n");

    CHECK(run_classify(lifted_text()).text ==
          "points: dim 3, count 7, distinct 7\n"
          "multiplicities: none\n"
          "kind: NOT_DEG_LE_1\n"
          "degree: 2\n"
          "interior face witness: {3 6}\n");

    CHECK(run_depth(pentagon_text(), "100/31 60/31").text ==
          "point: (100/31, 60/31)\n"
          "depth: 2\n"
          "witness halfspace: normal (0, -1), offset -60/31\n"
          "on side: {0 1}\n");

    CHECK(run_tverberg(pentagon_text(), "100/31 60/31").text ==
          "point: (100/31, 60/31)\n"
          "order: 2\n"
          "  part 0: {0 2}\n"
          "  part 1: {1 3}\n"
          "unused: {4}\n");
}

TEST_CASE("certificate envelopes and verification") {
    struct Case {
        const char* command;
        CommandOutput out;
        std::string input;
    };
    std::vector<Case> cases;
    cases.push_back({"analyze", run_analyze(pentagon_text()), pentagon_text()});
    cases.push_back({"gale", run_gale(SQUARE), SQUARE});
    cases.push_back({"circuits", run_circuits(pentagon_text()), pentagon_text()});
    cases.push_back({"circuits", run_circuits(serialize_vectors(gale_dual(pentagon_config()))),
                     serialize_vectors(gale_dual(pentagon_config()))});
    cases.push_back({"cayley", run_cayley(lifted_text()), lifted_text()});
    cases.push_back({"classify", run_classify(lifted_text()), lifted_text()});
    cases.push_back({"classify", run_classify(serialize_points(prism_config(3))),
                     serialize_points(prism_config(3))});
    cases.push_back({"depth", run_depth(pentagon_text(), "100/31 60/31"), pentagon_text()});
    cases.push_back({"tverberg", run_tverberg(pentagon_text(), "100/31 60/31"), pentagon_text()});

    for (const Case& c : cases) {
        INFO(c.command);
        CHECK(c.out.cert.at("format") == "galedeg-certificate");
        CHECK(c.out.cert.at("version") == 1);
        CHECK(c.out.cert.at("command") == c.command);
        const Json& in = c.out.cert.at("input");
        CHECK(in.at("fnv1a64") == fnv1a64_hex(c.input));
        VerifyReport vr = verify_certificate(c.input, c.out.cert);
        INFO(vr.failure);
        CHECK(vr.ok);
        CHECK(vr.failure.empty());
        CHECK(!vr.checked.empty());
    }

    // determinism: the same command twice gives byte-identical output
    CHECK(run_cayley(lifted_text()).cert.dump() == run_cayley(lifted_text()).cert.dump());
    CHECK(run_analyze(pentagon_text()).text == run_analyze(pentagon_text()).text);

    // the verifier is explicit about what a witness cannot certify
    VerifyReport vr = verify_certificate(lifted_text(), run_cayley(lifted_text()).cert);
    REQUIRE(!vr.checked.empty());
    bool has_note = false;
    for (const std::string& line : vr.checked)
        if (line.find("maximality") != std::string::npos) has_note = true;
    CHECK(has_note);
}

TEST_CASE("tampered certificates are rejected") {
    std::string input = lifted_text();
    Json good = run_cayley(input).cert;

    auto expect_reject = [&](Json bad, const std::string& wrong_input = "") {
        VerifyReport vr =
            verify_certificate(wrong_input.empty() ? input : wrong_input, bad);
        CHECK_FALSE(vr.ok);
        CHECK_FALSE(vr.failure.empty());
    };

    Json t1 = good;
    t1["result"]["weak"]["length"] = 3;
    expect_reject(t1);

    Json t2 = good;
    t2["result"]["weak"]["factors"][0]["dependence"][0][1] = "2";
    expect_reject(t2);

    Json t3 = good;
    t3["witnesses"]["face_supports"][0]["normal"][0] = "5";
    expect_reject(t3);

    Json t4 = good;
    t4["result"]["combinatorial"]["parts"][0] = Json::array({0, 3});
    expect_reject(t4);

    Json t5 = good;
    t5["input"]["fnv1a64"] = "0000000000000000";
    expect_reject(t5);

    // right certificate, wrong input
    expect_reject(good, std::string(SQUARE));

    Json t6 = run_classify(input).cert;
    t6["result"]["classification"]["degree"] = 1;
    expect_reject(t6);

    Json t6b = run_classify(input).cert;
    t6b["result"]["classification"]["witness_face"] = Json::array({3});
    expect_reject(t6b);

    Json t7 = run_depth(pentagon_text(), "100/31 60/31").cert;
    t7["result"]["depth"] = 3;
    VerifyReport vd = verify_certificate(pentagon_text(), t7);
    CHECK_FALSE(vd.ok);

    Json t8 = run_analyze(pentagon_text()).cert;
    t8["result"]["codegree"] = 1;
    VerifyReport va = verify_certificate(pentagon_text(), t8);
    CHECK_FALSE(va.ok);

    // malformed: not even the right envelope
    VerifyReport ve = verify_certificate(input, Json::object());
    CHECK_FALSE(ve.ok);
}
