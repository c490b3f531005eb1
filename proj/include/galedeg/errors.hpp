#pragma once
// Error taxonomy shared by the core, the C API and the CLI.
// input_error -> status 2, check_failure -> status 1, internal_error -> status 3.

#include <stdexcept>
#include <string>

namespace galedeg {

// Malformed or out-of-contract caller input (parse errors, dimension
// mismatches, unmet operation preconditions).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A violated internal invariant; never expected on any input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// A theorem-backed runtime check failed. Raised by the structural assertions
// inside reductions and by the randomized check suites.
struct check_failure : std::runtime_error {
    explicit check_failure(const std::string& what) : std::runtime_error(what) {}
};

inline void require_input(bool ok, const std::string& msg) {
    if (!ok) throw input_error(msg);
}

inline void require_internal(bool ok, const std::string& msg) {
    if (!ok) throw internal_error(msg);
}

inline void require_check(bool ok, const std::string& msg) {
    if (!ok) throw check_failure(msg);
}

} // namespace galedeg
