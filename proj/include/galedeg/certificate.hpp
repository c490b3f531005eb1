#pragma once
// Command runners producing a human-readable report plus a JSON certificate,
// and the certificate verifier. Certificates share one envelope:
//
//   { "format": "galedeg-certificate", "version": 1, "command": ...,
//     "input": { "kind", "dim" | "rank", "count", "fnv1a64" },
//     "result": ..., "witnesses": ... }
//
// Rationals are canonical strings ("a" or "a/b"), labels are integers. The
// verifier re-reads the original input text and checks every claim that a
// witness can certify by substitution (evaluating functionals, summing
// dependences, replaying charts, comparing ranks of explicitly named
// subsets); it never re-runs a search. Claims of completeness or optimality
// (the facet list is complete, no longer decomposition exists) are exactly
// the ones a witness cannot certify; they are covered by the check suites
// instead, and the verifier documents this in its notes.

#include <string>
#include <vector>

#include "json.hpp"

#include "galedeg/checks.hpp"

namespace galedeg {

using Json = nlohmann::ordered_json;

struct CommandOutput {
    std::string text;  // human-readable report
    Json cert;         // machine-checkable certificate
};

// Point-configuration summary: shape, multiplicities, pyramid apices, degree
// and codegree with the interior-face witness, facet count.
CommandOutput run_analyze(const std::string& input_text);

// Canonical Gale dual of a point configuration; the text form is itself a
// loadable vectors file.
CommandOutput run_gale(const std::string& input_text);

// Oriented-matroid circuits: of the vectors themselves, or of the canonical
// Gale dual when the input is a point configuration.
CommandOutput run_circuits(const std::string& input_text);

// Maximum weak and combinatorial Cayley decompositions (of the Gale dual when
// the input is points, with primal face witnesses in that case).
CommandOutput run_cayley(const std::string& input_text);

// Complete classification for degree <= 1, interior-face witness otherwise.
CommandOutput run_classify(const std::string& input_text);

// Halfspace depth / Tverberg order of a query point against a point
// configuration. point_text holds the whitespace-separated coordinates.
CommandOutput run_depth(const std::string& input_text, const std::string& point_text);
CommandOutput run_tverberg(const std::string& input_text, const std::string& point_text);

struct VerifyReport {
    bool ok = false;
    std::vector<std::string> checked;  // one line per verified property
    std::string failure;               // first failed property, empty when ok
};
VerifyReport verify_certificate(const std::string& input_text, const Json& cert);

// Check-suite outcome as JSON (suite, seed, counts, failures, findings).
Json check_result_json(const CheckResult& r);

} // namespace galedeg
