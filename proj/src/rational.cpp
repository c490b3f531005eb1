#include "galedeg/rational.hpp"

#include <cctype>

namespace galedeg {

int sign_of(const Rat& x) { return sgn(x); }

Rat parse_rational(const std::string& token) {
    require_input(!token.empty(), "empty rational token");
    // mpq_class accepts forms we do not want (whitespace, hex); pre-validate.
    std::size_t slashes = 0;
    for (std::size_t i = 0; i < token.size(); ++i) {
        char ch = token[i];
        if (ch == '/') {
            ++slashes;
            continue;
        }
        if (ch == '-') {
            bool at_start = (i == 0) || (token[i - 1] == '/');
            require_input(at_start, "misplaced sign in rational '" + token + "'");
            continue;
        }
        require_input(std::isdigit(static_cast<unsigned char>(ch)) != 0,
                      "bad character in rational '" + token + "'");
    }
    require_input(slashes <= 1, "too many '/' in rational '" + token + "'");
    require_input(token.back() != '/' && token.front() != '/',
                  "malformed rational '" + token + "'");

    Rat x;
    try {
        x = Rat(token, 10);
    } catch (const std::invalid_argument&) {
        throw input_error("malformed rational '" + token + "'");
    }
    require_input(sgn(x.get_den()) != 0, "zero denominator in rational '" + token + "'");
    x.canonicalize();
    return x;
}

std::string rat_to_string(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    return c.get_str();
}

bool is_zero_vec(const QVec& v) {
    for (const Rat& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

Rat dot(const QVec& a, const QVec& b) {
    require_internal(a.size() == b.size(), "dot: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

QVec sub(const QVec& a, const QVec& b) {
    require_internal(a.size() == b.size(), "sub: length mismatch");
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

void make_primitive(QVec& v) {
    Int den_lcm = 1;
    bool any = false;
    for (const Rat& x : v) {
        if (sgn(x) == 0) continue;
        any = true;
        Int d = x.get_den();
        den_lcm = lcm(den_lcm, d);
    }
    if (!any) return;
    Int num_gcd = 0;
    std::vector<Int> scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i] * Rat(den_lcm);
        require_internal(s.get_den() == 1, "make_primitive: scaling failed");
        scaled[i] = s.get_num();
        num_gcd = gcd(num_gcd, scaled[i]);
    }
    int lead = 0;
    for (std::size_t i = 0; i < v.size() && lead == 0; ++i) lead = sgn(scaled[i]);
    if (lead < 0) num_gcd = -num_gcd;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rat(scaled[i] / num_gcd);
}

QMatrix QMatrix::from_rows(const std::vector<QVec>& rws, std::size_t c) {
    QMatrix m(rws.size(), c);
    for (std::size_t i = 0; i < rws.size(); ++i) {
        require_internal(rws[i].size() == c, "from_rows: ragged input");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rws[i][j];
    }
    return m;
}

QMatrix QMatrix::from_cols(const std::vector<QVec>& cls, std::size_t r) {
    QMatrix m(r, cls.size());
    for (std::size_t j = 0; j < cls.size(); ++j) {
        require_internal(cls[j].size() == r, "from_cols: ragged input");
        for (std::size_t i = 0; i < r; ++i) m.at(i, j) = cls[j][i];
    }
    return m;
}

Rref rref(QMatrix m) {
    Rref out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t piv = row;
        while (piv < m.rows && sgn(m.at(piv, col)) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
        Rat inv = 1 / m.at(row, col);
        for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || sgn(m.at(i, col)) == 0) continue;
            Rat f = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j) {
                Rat t = m.at(i, j) - f * m.at(row, j);
                m.at(i, j) = t;
            }
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.mat = std::move(m);
    return out;
}

std::size_t rank_of(const QMatrix& m) { return rref(m).pivots.size(); }

std::size_t rank_of_rows(const std::vector<QVec>& rws, std::size_t c) {
    return rank_of(QMatrix::from_rows(rws, c));
}

std::vector<QVec> kernel_basis(const QMatrix& m) {
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        QVec v(m.cols, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) {
            Rat t = -r.mat.at(i, f);
            v[r.pivots[i]] = t;
        }
        make_primitive(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVec> solve_linear(const QMatrix& a, const QVec& b) {
    require_internal(b.size() == a.rows, "solve_linear: rhs length mismatch");
    QMatrix aug(a.rows, a.cols + 1);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = b[i];
    }
    Rref r = rref(std::move(aug));
    for (std::size_t p : r.pivots)
        if (p == a.cols) return std::nullopt;  // pivot in rhs column: inconsistent
    QVec x(a.cols, Rat(0));
    for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.mat.at(i, a.cols);
    return x;
}

bool lex_less(const QVec& a, const QVec& b) {
    require_internal(a.size() == b.size(), "lex_less: length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace galedeg
