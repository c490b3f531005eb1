// C API implementation: an exception-to-status shim over the core. Each call
// funnels through guarded(), which owns the status mapping of the shared
// error taxonomy and always hands the caller a result handle.

#include "galedeg.h"

#include <new>
#include <string>
#include <utility>
#include <vector>

#include "galedeg/certificate.hpp"
#include "galedeg/checks.hpp"
#include "galedeg/errors.hpp"
#include "galedeg/generators.hpp"

struct gd_result {
    std::string text;
    std::string cert;
    std::string error;
};

namespace {

using namespace galedeg;

constexpr const char* kVersion = "1.0.0";

int finish(gd_result** out, gd_result&& r, int status) {
    if (!out) return status;
    *out = new (std::nothrow) gd_result(std::move(r));
    return *out ? status : GD_ERR_INTERNAL;
}

template <typename Fn>
int guarded(gd_result** out, Fn&& fn) {
    gd_result r;
    try {
        int status = fn(r);
        return finish(out, std::move(r), status);
    } catch (const input_error& e) {
        r.error = e.what();
        return finish(out, std::move(r), GD_ERR_INPUT);
    } catch (const check_failure& e) {
        r.error = e.what();
        return finish(out, std::move(r), GD_CHECK_FAILED);
    } catch (const std::exception& e) {
        r.error = e.what();
        return finish(out, std::move(r), GD_ERR_INTERNAL);
    }
}

const char* require_text(const char* s, const char* what) {
    if (!s) throw input_error(std::string("null ") + what);
    return s;
}

int command(gd_result& r, CommandOutput&& c) {
    r.text = std::move(c.text);
    r.cert = c.cert.dump(2);
    r.cert += '\n';
    return GD_OK;
}

// One canonical text rendering of suite results, shared by report and CLI:
// a status line per suite, failures with their serialized instances
// indented, findings, and a summary line.
std::string render_checks(const std::vector<CheckResult>& results) {
    std::string out;
    std::size_t passed = 0;
    for (const CheckResult& r : results) {
        out += "check " + r.suite + ": " + (r.ok ? "ok" : "FAIL") + " (seed " +
               std::to_string(r.seed) + ", instances " + std::to_string(r.instances) +
               ", checks " + std::to_string(r.checks) + ")\n";
        for (const CheckFailure& f : r.failures) {
            out += "  failure: " + f.what + "\n";
            if (!f.instance.empty()) {
                out += "  instance:\n";
                std::size_t start = 0;
                while (start < f.instance.size()) {
                    std::size_t stop = f.instance.find('\n', start);
                    if (stop == std::string::npos) stop = f.instance.size();
                    out += "    " + f.instance.substr(start, stop - start) + "\n";
                    start = stop + 1;
                }
            }
        }
        for (const std::string& s : r.findings) out += "  finding: " + s + "\n";
        if (r.ok) ++passed;
    }
    out += "check summary: " + std::to_string(passed) + "/" + std::to_string(results.size()) +
           " suites ok\n";
    return out;
}

} // namespace

extern "C" {

const char* gd_version(void) { return kVersion; }

int gd_analyze(const char* input_text, gd_result** out) {
    return guarded(out, [&](gd_result& r) {
        return command(r, run_analyze(require_text(input_text, "input")));
    });
}

int gd_gale(const char* input_text, gd_result** out) {
    return guarded(out, [&](gd_result& r) {
        return command(r, run_gale(require_text(input_text, "input")));
    });
}

int gd_circuits(const char* input_text, gd_result** out) {
    return guarded(out, [&](gd_result& r) {
        return command(r, run_circuits(require_text(input_text, "input")));
    });
}

int gd_cayley(const char* input_text, gd_result** out) {
    return guarded(out, [&](gd_result& r) {
        return command(r, run_cayley(require_text(input_text, "input")));
    });
}

int gd_classify(const char* input_text, gd_result** out) {
    return guarded(out, [&](gd_result& r) {
        return command(r, run_classify(require_text(input_text, "input")));
    });
}

int gd_depth(const char* input_text, const char* point_text, gd_result** out) {
    return guarded(out, [&](gd_result& r) {
        return command(r, run_depth(require_text(input_text, "input"),
                                    require_text(point_text, "point")));
    });
}

int gd_tverberg(const char* input_text, const char* point_text, gd_result** out) {
    return guarded(out, [&](gd_result& r) {
        return command(r, run_tverberg(require_text(input_text, "input"),
                                       require_text(point_text, "point")));
    });
}

int gd_generate(const char* name, const char* const* args, int nargs, uint64_t seed,
                gd_result** out) {
    return guarded(out, [&](gd_result& r) {
        require_input(nargs >= 0, "negative argument count");
        std::vector<std::string> a;
        for (int i = 0; i < nargs; ++i) a.emplace_back(require_text(args ? args[i] : nullptr, "argument"));
        r.text = generate(require_text(name, "generator name"), a, seed);
        return GD_OK;
    });
}

int gd_check(const char* suites, uint64_t seed, long trials, long max_n, long max_dim,
             int corrupt_oracle, gd_result** out) {
    return guarded(out, [&](gd_result& r) {
        CheckOptions opts;
        opts.seed = seed;
        if (trials > 0) opts.trials = static_cast<std::size_t>(trials);
        if (max_n > 0) opts.max_n = static_cast<std::size_t>(max_n);
        if (max_dim > 0) opts.max_dim = static_cast<std::size_t>(max_dim);
        opts.corrupt_oracle = corrupt_oracle != 0;
        std::vector<CheckResult> results =
            run_check_suites(require_text(suites, "suite name"), opts);
        r.text = render_checks(results);
        Json arr = Json::array();
        for (const CheckResult& cr : results) arr.push_back(check_result_json(cr));
        r.cert = arr.dump(2);
        r.cert += '\n';
        bool all_ok = true;
        for (const CheckResult& cr : results) all_ok = all_ok && cr.ok;
        if (!all_ok) {
            r.error = "one or more check suites failed";
            return GD_CHECK_FAILED;
        }
        return GD_OK;
    });
}

int gd_verify(const char* input_text, const char* certificate_json, gd_result** out) {
    return guarded(out, [&](gd_result& r) {
        Json cert;
        try {
            cert = Json::parse(require_text(certificate_json, "certificate"));
        } catch (const nlohmann::json::parse_error& e) {
            throw input_error(std::string("certificate is not valid JSON: ") + e.what());
        }
        VerifyReport report = verify_certificate(require_text(input_text, "input"), cert);
        for (const std::string& line : report.checked) r.text += "checked: " + line + "\n";
        if (!report.ok) {
            r.text += "verification: FAILED: " + report.failure + "\n";
            r.error = report.failure;
            return GD_CHECK_FAILED;
        }
        r.text += "verification: ok\n";
        return GD_OK;
    });
}

const char* gd_result_text(const gd_result* r) { return r ? r->text.c_str() : ""; }
const char* gd_result_cert(const gd_result* r) { return r ? r->cert.c_str() : ""; }
const char* gd_result_error(const gd_result* r) { return r ? r->error.c_str() : ""; }

void gd_result_free(gd_result* r) { delete r; }

} // extern "C"
