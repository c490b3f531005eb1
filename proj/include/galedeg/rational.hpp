#pragma once
// Exact rational scalars, vectors and matrices, plus the elimination kernels
// (RREF, rank, right kernel, linear solve) everything else is built on.
// No floating point anywhere; results are canonical and deterministic.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "galedeg/errors.hpp"

namespace galedeg {

using Int = mpz_class;
using Rat = mpq_class;  // kept canonical: lowest terms, positive denominator
using QVec = std::vector<Rat>;

int sign_of(const Rat& x);  // -1, 0, +1

// Parses "a/b" or "a" (optional leading '-'). Canonicalizes; rejects zero
// denominators and garbage.
Rat parse_rational(const std::string& token);

// Canonical text form: "a" when the denominator is 1, else "a/b".
std::string rat_to_string(const Rat& x);

bool is_zero_vec(const QVec& v);
Rat dot(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);

// Scales v in place to coprime integer entries with the first nonzero entry
// positive. The zero vector is left unchanged.
void make_primitive(QVec& v);

struct QMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Rat> data;  // row-major

    QMatrix() = default;
    QMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    Rat& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    // Rows must all have length c.
    static QMatrix from_rows(const std::vector<QVec>& rws, std::size_t c);
    // Columns must all have length r.
    static QMatrix from_cols(const std::vector<QVec>& cls, std::size_t r);
};

struct Rref {
    QMatrix mat;                      // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each pivot row, ascending
};

// Deterministic Gauss-Jordan: pivot = first row with a nonzero entry in the
// current column.
Rref rref(QMatrix m);

std::size_t rank_of(const QMatrix& m);
std::size_t rank_of_rows(const std::vector<QVec>& rws, std::size_t c);

// Right kernel in canonical form: one basis vector per RREF free column, in
// ascending column order, each primitive with first nonzero entry positive.
std::vector<QVec> kernel_basis(const QMatrix& m);

// One solution x of A x = b (free variables set to 0), or nullopt when
// inconsistent.
std::optional<QVec> solve_linear(const QMatrix& a, const QVec& b);

// Lexicographic comparison, entrywise.
bool lex_less(const QVec& a, const QVec& b);

// FNV-1a 64-bit of raw bytes, as 16 hex digits. Used to tie certificates to
// their input files.
std::string fnv1a64_hex(const std::string& bytes);

} // namespace galedeg
