// Configuration text parsing and serialization.

#include "galedeg/io.hpp"

#include <sstream>
#include <vector>

#include "galedeg/errors.hpp"

namespace galedeg {

namespace {

struct Line {
    std::size_t number = 0; // 1-based position in the original text
    std::string text;
};

bool is_comment_or_padding(const std::string& s, bool dim_zero_rows_pending) {
    // '#' lines are comments everywhere. Blank lines are padding except when a
    // dimension-0 row is still expected, in which case the caller consumes them
    // as rows.
    std::size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i < s.size() && s[i] == '#') return true;
    if (i == s.size()) return !dim_zero_rows_pending;
    return false;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

[[noreturn]] void fail_at(std::size_t line, const std::string& msg) {
    throw input_error("line " + std::to_string(line) + ": " + msg);
}

} // namespace

ParsedConfig parse_config_text(const std::string& text) {
    std::vector<Line> lines;
    {
        std::size_t number = 1;
        std::string cur;
        for (char ch : text) {
            if (ch == '\n') {
                if (!cur.empty() && cur.back() == '\r') cur.pop_back();
                lines.push_back(Line{number, cur});
                cur.clear();
                ++number;
            } else {
                cur.push_back(ch);
            }
        }
        if (!cur.empty()) {
            if (cur.back() == '\r') cur.pop_back();
            lines.push_back(Line{number, cur});
        }
    }

    std::size_t pos = 0;
    auto next_line = [&](bool dim_zero_rows_pending) -> const Line* {
        while (pos < lines.size()) {
            if (is_comment_or_padding(lines[pos].text, dim_zero_rows_pending)) {
                ++pos;
                continue;
            }
            return &lines[pos++];
        }
        return nullptr;
    };

    const Line* header = next_line(false);
    if (header == nullptr) throw input_error("empty input: expected a header line");

    std::vector<std::string> head = split_ws(header->text);
    if (head.size() != 3)
        fail_at(header->number, "header must be 'points <dim> <count>' or 'vectors <rank> <count>'");
    bool is_points;
    if (head[0] == "points") {
        is_points = true;
    } else if (head[0] == "vectors") {
        is_points = false;
    } else {
        fail_at(header->number, "unknown configuration kind '" + head[0] + "'");
    }

    auto parse_size = [&](const std::string& tok, const char* what) -> std::size_t {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            fail_at(header->number, std::string(what) + " must be a non-negative integer, got '" + tok + "'");
        try {
            return static_cast<std::size_t>(std::stoull(tok));
        } catch (const std::exception&) {
            fail_at(header->number, std::string(what) + " out of range: '" + tok + "'");
        }
    };
    std::size_t ambient = parse_size(head[1], is_points ? "dimension" : "rank");
    std::size_t count = parse_size(head[2], "count");
    if (count == 0) fail_at(header->number, "count must be at least 1");
    if (count > 100000) fail_at(header->number, "count too large");
    if (ambient > 1000) fail_at(header->number, is_points ? "dimension too large" : "rank too large");

    std::vector<QVec> rows;
    rows.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const Line* row = next_line(ambient == 0);
        if (row == nullptr)
            throw input_error("unexpected end of input: expected " + std::to_string(count) +
                              " rows, found " + std::to_string(i));
        std::vector<std::string> toks = split_ws(row->text);
        if (toks.size() != ambient)
            fail_at(row->number, "expected " + std::to_string(ambient) + " coordinates, found " +
                                     std::to_string(toks.size()));
        QVec v;
        v.reserve(ambient);
        for (const std::string& tok : toks) {
            try {
                v.push_back(parse_rational(tok));
            } catch (const input_error& e) {
                fail_at(row->number, e.what());
            }
        }
        rows.push_back(std::move(v));
    }

    const Line* extra = next_line(false);
    if (extra != nullptr) fail_at(extra->number, "unexpected content after the last row");

    std::vector<int> labels(count);
    for (std::size_t i = 0; i < count; ++i) labels[i] = static_cast<int>(i);

    ParsedConfig out;
    out.is_points = is_points;
    if (is_points) {
        out.points = PointConfiguration::checked(std::move(labels), std::move(rows), ambient);
    } else {
        out.vectors = VectorConfiguration::checked(std::move(labels), std::move(rows), ambient);
    }
    return out;
}

namespace {

std::string serialize_rows(const std::string& kind, std::size_t ambient,
                           const std::vector<QVec>& rows) {
    std::ostringstream out;
    out << kind << ' ' << ambient << ' ' << rows.size() << '\n';
    for (const QVec& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j > 0) out << ' ';
            out << rat_to_string(row[j]);
        }
        out << '\n';
    }
    return out.str();
}

} // namespace

std::string serialize_points(const PointConfiguration& a) {
    return serialize_rows("points", a.dim(), a.coords());
}

std::string serialize_vectors(const VectorConfiguration& v) {
    return serialize_rows("vectors", v.rank(), v.coords());
}

QVec parse_point_text(const std::string& text, std::size_t dim) {
    std::vector<std::string> toks = split_ws(text);
    if (toks.size() != dim)
        throw input_error("query point: expected " + std::to_string(dim) +
                          " coordinates, found " + std::to_string(toks.size()));
    QVec v;
    v.reserve(dim);
    for (const std::string& tok : toks) v.push_back(parse_rational(tok));
    return v;
}

} // namespace galedeg
