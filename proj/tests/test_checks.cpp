// The self-check suites: naming, determinism, tiny-budget runs of every
// suite, JSON rendering, and the deliberate oracle-corruption self-test.
#include "doctest.h"

#include <algorithm>

#include "galedeg/certificate.hpp"
#include "galedeg/checks.hpp"
#include "galedeg/errors.hpp"

using namespace galedeg;

namespace {

CheckOptions tiny(std::uint64_t seed) {
    CheckOptions o;
    o.seed = seed;
    o.trials = 20;
    o.max_n = 8;
    o.max_dim = 3;
    return o;
}

} // namespace

TEST_CASE("suite naming and expansion") {
    std::vector<std::string> names = check_suite_names();
    CHECK(names == std::vector<std::string>{"primal-dual", "deg1", "cayley-bound",
                                            "core-tverberg", "lawrence", "pyramid-bound",
                                            "section-quotient", "conjecture"});

    std::vector<CheckResult> all = run_check_suites("all", tiny(7));
    REQUIRE(all.size() == names.size());
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].suite == names[i]);

    std::vector<CheckResult> one = run_check_suites("deg1", tiny(7));
    REQUIRE(one.size() == 1);
    CHECK(one[0].suite == "deg1");

    CHECK_THROWS_AS(run_check_suite("nope", tiny(7)), input_error);
    try {
        run_check_suite("nope", tiny(7));
    } catch (const input_error& e) {
        // the error names every valid suite
        std::string msg = e.what();
        for (const std::string& n : names)
            CHECK(msg.find(n) != std::string::npos);
    }
}

TEST_CASE("every suite passes on a small budget and records its work") {
    for (const std::string& name : check_suite_names()) {
        INFO(name);
        CheckResult r = run_check_suite(name, tiny(3));
        CHECK(r.suite == name);
        CHECK(r.seed == 3);
        CHECK(r.ok);
        CHECK(r.failures.empty());
        CHECK(r.instances > 0);
        CHECK(r.checks > 0);
    }
}

TEST_CASE("identical options give byte-identical results") {
    for (const std::string& name : {std::string("primal-dual"), std::string("conjecture")}) {
        CheckResult a = run_check_suite(name, tiny(42));
        CheckResult b = run_check_suite(name, tiny(42));
        CHECK(check_result_json(a).dump() == check_result_json(b).dump());
        // a different seed explores different instances but stays well formed
        CheckResult c = run_check_suite(name, tiny(43));
        CHECK(c.seed == 43);
    }
}

TEST_CASE("corrupting an oracle value is caught") {
    CheckOptions o = tiny(5);
    o.corrupt_oracle = true;
    CheckResult r = run_check_suite("primal-dual", o);
    CHECK_FALSE(r.ok);
    REQUIRE(!r.failures.empty());
    CHECK_FALSE(r.failures[0].what.empty());
    // the offending instance is serialized for replay
    CHECK_FALSE(r.failures[0].instance.empty());
}

TEST_CASE("the conjecture suite reports findings, never failures") {
    CheckResult r = run_check_suite("conjecture", tiny(9));
    CHECK(r.ok);
    CHECK_FALSE(r.findings.empty());
}

TEST_CASE("check results serialize to JSON with all counters") {
    CheckResult r = run_check_suite("deg1", tiny(11));
    Json j = check_result_json(r);
    CHECK(j.at("suite") == "deg1");
    CHECK(j.at("seed") == 11);
    CHECK(j.at("ok") == true);
    CHECK(j.at("instances").get<std::size_t>() == r.instances);
    CHECK(j.at("checks").get<std::size_t>() == r.checks);
    CHECK(j.at("failures").is_array());
    CHECK(j.at("failures").empty());
}
