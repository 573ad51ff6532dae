#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "steiner/field.hpp"

namespace steiner {

/// Dense exact matrix over a single FieldSpec, row-major.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const FieldSpec& f);

    static Matrix identity(std::size_t n, const FieldSpec& f);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, const FieldSpec& f);
    /// Keeps the column count explicit so empty row lists stay well-typed.
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols,
                            const FieldSpec& f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }

    std::vector<Scalar> row(std::size_t r) const;
    void set_row(std::size_t r, const std::vector<Scalar>& v);

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const;
    Matrix vstack(const Matrix& below) const;

    bool operator==(const Matrix& o) const;
    bool is_zero() const;

    /// Reduce this matrix mod p entrywise (rational matrices only).
    Matrix reduced_mod(std::int64_t p) const;

private:
    std::size_t rows_, cols_;
    FieldSpec field_;
    std::vector<Scalar> e_;
};

/// Row-reduced echelon form: pivot = leftmost nonzero column, first nonzero
/// row; pivots normalized to 1 and cleared above and below. Deterministic.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots; // pivot column per nonzero row
};

Echelon rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Particular solution of A x = b, or nullopt when inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b);

} // namespace steiner
