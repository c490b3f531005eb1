// Command-line front end over the C API: configuration files in, reports or
// JSON certificates out, plus the example generators and the theorem-check
// harness. Exit codes: 0 success, 1 check failure, 2 input error, 3 internal
// assertion. Output is byte-identical for identical (input, flags, seed).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "galedeg.h"

namespace {

struct Result {
    gd_result* h = nullptr;
    ~Result() { gd_result_free(h); }
    gd_result** slot() { return &h; }
    const char* text() const { return gd_result_text(h); }
    const char* cert() const { return gd_result_cert(h); }
    const char* error() const { return gd_result_error(h); }
};

int fail(int status, const char* message) {
    std::fprintf(stderr, "galedeg: %s\n", message);
    return status;
}

// "-" reads standard input; anything else is a path.
bool slurp(const std::string& file, std::string& out, std::string& error) {
    if (file == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        out = ss.str();
        return true;
    }
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        error = "cannot open '" + file + "'";
        return false;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

// Shared tail of every certificate-producing command: print the report (or
// the certificate with --json), then optionally re-verify the certificate
// against the input. A failed self-verification is an internal fault.
int finish_command(int status, Result& res, const std::string& input, bool as_json, bool verify) {
    if (status != GD_OK) return fail(status, res.error());
    std::fputs(as_json ? res.cert() : res.text(), stdout);
    if (verify) {
        Result check;
        int vs = gd_verify(input.c_str(), res.cert(), check.slot());
        if (vs != GD_OK)
            return fail(GD_ERR_INTERNAL,
                        (std::string("certificate failed self-verification: ") + check.error())
                            .c_str());
    }
    return GD_OK;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact degree, Gale duality, Cayley decompositions, depth and Tverberg order "
                 "of rational point and vector configurations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", gd_version());

    std::string file = "-";
    std::string point_text;
    bool as_json = false;
    bool verify = false;

    struct FileCommand {
        const char* name;
        const char* help;
        bool takes_point;
        int (*plain)(const char*, gd_result**);
        int (*pointed)(const char*, const char*, gd_result**);
    };
    const std::vector<FileCommand> commands = {
        {"analyze", "degree, codegree, witness face and shape of a points file", false,
         gd_analyze, nullptr},
        {"gale", "canonical Gale dual of a points file (prints a vectors file)", false, gd_gale,
         nullptr},
        {"circuits", "oriented-matroid circuits (of the Gale dual for points input)", false,
         gd_circuits, nullptr},
        {"cayley", "maximum weak and combinatorial Cayley decompositions", false, gd_cayley,
         nullptr},
        {"classify", "complete classification of degree <= 1 configurations", false, gd_classify,
         nullptr},
        {"depth", "exact halfspace depth of --point", true, nullptr, gd_depth},
        {"tverberg", "Tverberg order of --point with a witness partition", true, nullptr,
         gd_tverberg},
    };
    for (const FileCommand& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("file", file, "configuration file, or - for standard input");
        if (c.takes_point)
            sub->add_option("--point", point_text, "query point, whitespace-separated rationals")
                ->required();
        sub->add_flag("--json", as_json, "print the JSON certificate instead of the report");
        sub->add_flag("--verify", verify, "re-verify the certificate after printing");
    }

    std::string gen_name;
    std::vector<std::string> gen_args;
    std::uint64_t seed = 1;
    CLI::App* gen = app.add_subcommand(
        "gen", "generate an example family: pentagon | pentagon-join k | lifted d | prism d | "
               "edge-simplex d | lawrence r n | random n d");
    gen->add_option("name", gen_name, "family name")->required();
    gen->add_option("args", gen_args, "numeric family arguments");
    gen->add_option("--seed", seed, "random seed");

    std::string suite = "all";
    long trials = 0;
    std::string sizes;
    bool corrupt_oracle = false;
    CLI::App* check = app.add_subcommand("check", "run seeded theorem-check suites");
    check->add_option("suite", suite,
                      "primal-dual, deg1, cayley-bound, core-tverberg, lawrence, pyramid-bound, "
                      "section-quotient, conjecture, or all");
    check->add_option("--seed", seed, "random seed");
    check->add_option("--trials", trials, "instances per suite (0 keeps per-suite defaults)");
    check->add_option("--sizes", sizes, "max_n,max_dim bounds as two comma-separated integers");
    check->add_flag("--json", as_json, "print the JSON report");
    check->add_flag("--corrupt-oracle", corrupt_oracle, "deliberately mis-set one oracle value")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return GD_ERR_INPUT;
    }

    for (const FileCommand& c : commands) {
        if (!app.got_subcommand(c.name)) continue;
        std::string input, err;
        if (!slurp(file, input, err)) return fail(GD_ERR_INPUT, err.c_str());
        Result res;
        int status = c.takes_point ? c.pointed(input.c_str(), point_text.c_str(), res.slot())
                                   : c.plain(input.c_str(), res.slot());
        return finish_command(status, res, input, as_json, verify);
    }

    if (app.got_subcommand("gen")) {
        std::vector<const char*> raw;
        for (const std::string& a : gen_args) raw.push_back(a.c_str());
        Result res;
        int status = gd_generate(gen_name.c_str(), raw.empty() ? nullptr : raw.data(),
                                 static_cast<int>(raw.size()), seed, res.slot());
        if (status != GD_OK) return fail(status, res.error());
        std::fputs(res.text(), stdout);
        return GD_OK;
    }

    // check
    long max_n = 0, max_dim = 0;
    if (!sizes.empty()) {
        char extra = 0;
        if (std::sscanf(sizes.c_str(), "%ld,%ld%c", &max_n, &max_dim, &extra) != 2 || max_n <= 0 ||
            max_dim <= 0)
            return fail(GD_ERR_INPUT, "--sizes expects two positive integers as n,d");
    }
    Result res;
    int status =
        gd_check(suite.c_str(), seed, trials, max_n, max_dim, corrupt_oracle ? 1 : 0, res.slot());
    if (status == GD_OK || status == GD_CHECK_FAILED) {
        std::fputs(as_json ? res.cert() : res.text(), stdout);
        if (status == GD_CHECK_FAILED) std::fprintf(stderr, "galedeg: %s\n", res.error());
        return status;
    }
    return fail(status, res.error());
}
