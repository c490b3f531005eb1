#pragma once
// Configuration text format. Header line "points d n" or "vectors r n", then
// exactly n rows of whitespace-separated rationals ("a/b" or integers).
// Lines whose first non-blank character is '#' are comments and are skipped
// anywhere; rows are blank only in dimension 0. Labels are 0..n-1 in file
// order. Parse errors carry 1-based line numbers.

#include <optional>
#include <string>

#include "galedeg/configuration.hpp"

namespace galedeg {

struct ParsedConfig {
    bool is_points = false;
    std::optional<PointConfiguration> points;
    std::optional<VectorConfiguration> vectors;

    std::size_t ambient() const { return is_points ? points->dim() : vectors->rank(); }
    std::size_t count() const { return is_points ? points->count() : vectors->count(); }
};

ParsedConfig parse_config_text(const std::string& text);

std::string serialize_points(const PointConfiguration& a);
std::string serialize_vectors(const VectorConfiguration& v);

// Whitespace-separated rationals, exactly dim of them.
QVec parse_point_text(const std::string& text, std::size_t dim);

} // namespace galedeg
