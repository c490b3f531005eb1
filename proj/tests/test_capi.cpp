// The C API, exercised through the shared library alone: status codes,
// result accessors, generation, checking, and certificate verification.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "galedeg.h"

namespace {

const char* SQUARE = "points 2 4\n0 0\n1 0\n1 1\n0 1\n";
const char* PENTAGON = "points 2 5\n0 0\n4 0\n5 3\n2 5\n-1 3\n";

struct Result {
    gd_result* r = nullptr;
    ~Result() { gd_result_free(r); }
    const char* text() const { return gd_result_text(r); }
    const char* cert() const { return gd_result_cert(r); }
    const char* error() const { return gd_result_error(r); }
};

} // namespace

TEST_CASE("version string") {
    REQUIRE(gd_version() != nullptr);
    CHECK(std::strlen(gd_version()) > 0);
}

TEST_CASE("analysis returns text and certificate") {
    Result res;
    CHECK(gd_analyze(PENTAGON, &res.r) == GD_OK);
    REQUIRE(res.r != nullptr);
    std::string text = res.text();
    CHECK(text.find("degree: 1") != std::string::npos);
    CHECK(text.find("codegree: 2") != std::string::npos);
    std::string cert = res.cert();
    CHECK(cert.find("\"format\": \"galedeg-certificate\"") != std::string::npos);
    CHECK(std::string(res.error()).empty());
}

TEST_CASE("the Gale dual report is exact") {
    Result res;
    CHECK(gd_gale(SQUARE, &res.r) == GD_OK);
    CHECK(std::string(res.text()) == "vectors 1 4\n1\n-1\n1\n-1\n");
}

TEST_CASE("status codes for bad input") {
    // points that do not span the declared dimension
    Result r1;
    CHECK(gd_analyze("points 2 2\n0 0\n1 0\n", &r1.r) == GD_ERR_INPUT);
    REQUIRE(r1.r != nullptr);
    CHECK(std::strlen(r1.error()) > 0);

    Result r2;
    CHECK(gd_circuits("garbage 1 2\n", &r2.r) == GD_ERR_INPUT);

    // null arguments never crash
    Result r3;
    CHECK(gd_analyze(nullptr, &r3.r) == GD_ERR_INPUT);
    // a null out handle discards the strings but still reports the status
    CHECK(gd_analyze(PENTAGON, nullptr) == GD_OK);
    CHECK(gd_analyze("points x", nullptr) == GD_ERR_INPUT);

    // a query point of the wrong dimension
    Result r4;
    CHECK(gd_depth(PENTAGON, "1 2 3", &r4.r) == GD_ERR_INPUT);
}

TEST_CASE("point queries") {
    Result d;
    CHECK(gd_depth(PENTAGON, "100/31 60/31", &d.r) == GD_OK);
    CHECK(std::string(d.text()).find("depth: 2") != std::string::npos);

    Result t;
    CHECK(gd_tverberg(PENTAGON, "100/31 60/31", &t.r) == GD_OK);
    CHECK(std::string(t.text()).find("order: 2") != std::string::npos);
}

TEST_CASE("generation by name") {
    const char* args[] = {"2"};
    Result res;
    CHECK(gd_generate("lifted", args, 1, 1, &res.r) == GD_OK);
    std::string text = res.text();
    CHECK(text.rfind("points 3 7\n", 0) == 0);

    Result bad;
    CHECK(gd_generate("no-such-family", nullptr, 0, 1, &bad.r) == GD_ERR_INPUT);
}

TEST_CASE("decomposition and classification round through the C surface") {
    const char* args[] = {"2"};
    Result gen;
    REQUIRE(gd_generate("lifted", args, 1, 1, &gen.r) == GD_OK);
    std::string input = gen.text();

    Result cay;
    CHECK(gd_cayley(input.c_str(), &cay.r) == GD_OK);
    std::string text = cay.text();
    CHECK(text.find("weak cayley length: 2") != std::string::npos);
    CHECK(text.find("combinatorial cayley length: 2") != std::string::npos);

    Result cls;
    CHECK(gd_classify(input.c_str(), &cls.r) == GD_OK);
    CHECK(std::string(cls.text()).find("NOT_DEG_LE_1") != std::string::npos);
}

TEST_CASE("certificate verification") {
    Result cay;
    REQUIRE(gd_cayley(PENTAGON, &cay.r) == GD_OK);
    std::string cert = cay.cert();

    Result ok;
    CHECK(gd_verify(PENTAGON, cert.c_str(), &ok.r) == GD_OK);
    CHECK(std::string(ok.text()).find("verification: ok") != std::string::npos);

    // against the wrong input: the identity check fails
    Result wrong;
    CHECK(gd_verify(SQUARE, cert.c_str(), &wrong.r) == GD_CHECK_FAILED);
    CHECK(std::string(wrong.text()).find("verification: FAILED") != std::string::npos);
    CHECK(std::strlen(wrong.error()) > 0);

    // a tampered claim is caught
    std::string tampered = cert;
    std::size_t at = tampered.find("\"length\": ");
    REQUIRE(at != std::string::npos);
    tampered.replace(at, 12, "\"length\": 9,");
    Result bad;
    CHECK(gd_verify(PENTAGON, tampered.c_str(), &bad.r) == GD_CHECK_FAILED);

    // not even JSON
    Result njs;
    CHECK(gd_verify(PENTAGON, "{ nope", &njs.r) == GD_ERR_INPUT);
}

TEST_CASE("check suites through the C surface") {
    Result ok;
    CHECK(gd_check("deg1", 3, 20, 8, 3, 0, &ok.r) == GD_OK);
    std::string text = ok.text();
    CHECK(text.find("check deg1: ok") != std::string::npos);

    Result corrupt;
    CHECK(gd_check("primal-dual", 5, 20, 8, 3, 1, &corrupt.r) == GD_CHECK_FAILED);
    CHECK(std::string(corrupt.text()).find("FAIL") != std::string::npos);
    CHECK(std::strlen(corrupt.error()) > 0);

    Result unknown;
    CHECK(gd_check("nope", 1, 0, 0, 0, 0, &unknown.r) == GD_ERR_INPUT);
}

TEST_CASE("freeing a null result is harmless") {
    gd_result_free(nullptr);
}
