#include "steiner/matrix.hpp"

namespace steiner {

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldSpec& f)
    : rows_(rows), cols_(cols), field_(f), e_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(std::size_t n, const FieldSpec& f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, const FieldSpec& f) {
    return from_rows(rows, rows.empty() ? 0 : rows.front().size(), f);
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols,
                         const FieldSpec& f) {
    Matrix m(rows.size(), cols, f);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw Error("from_rows: ragged rows");
        m.set_row(i, rows[i]);
    }
    return m;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
    return std::vector<Scalar>(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
}

void Matrix::set_row(std::size_t r, const std::vector<Scalar>& v) {
    if (v.size() != cols_)
        throw Error("set_row: length mismatch");
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].field() != field_)
            throw FieldMismatchError("set_row: entry field differs from matrix field");
        at(r, c) = v[c];
    }
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m.at(c, r) = at(r, c);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (field_ != o.field_)
        throw FieldMismatchError("matrix product across fields");
    if (cols_ != o.rows_)
        throw Error("matrix product: inner dimensions differ");
    Matrix m(rows_, o.cols_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& x = at(r, k);
            if (x.is_zero())
                continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                m.at(r, c) += x * o.at(k, c);
        }
    return m;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    Matrix m(rs.size(), cs.size(), field_);
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j)
            m.at(i, j) = at(rs[i], cs[j]);
    return m;
}

Matrix Matrix::vstack(const Matrix& below) const {
    if (below.cols_ != cols_ || below.field_ != field_)
        throw Error("vstack: incompatible matrices");
    Matrix m(rows_ + below.rows_, cols_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m.at(r, c) = at(r, c);
    for (std::size_t r = 0; r < below.rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m.at(rows_ + r, c) = below.at(r, c);
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
        return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i])
            return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const Scalar& s : e_)
        if (!s.is_zero())
            return false;
    return true;
}

Matrix Matrix::reduced_mod(std::int64_t p) const {
    Matrix m(rows_, cols_, FieldSpec::prime_field(p));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m.at(r, c) = at(r, c).reduced_mod(p);
    return m;
}

Echelon rref(const Matrix& m) {
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pr = row;
        while (pr < a.rows() && a.at(pr, col).is_zero())
            ++pr;
        if (pr == a.rows())
            continue;
        if (pr != row)
            for (std::size_t c = 0; c < a.cols(); ++c)
                std::swap(a.at(row, c), a.at(pr, c));
        Scalar inv = a.at(row, col).inverse();
        for (std::size_t c = col; c < a.cols(); ++c)
            a.at(row, c) = a.at(row, c) * inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a.at(r, col).is_zero())
                continue;
            Scalar f = a.at(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                a.at(r, c) -= f * a.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return Echelon{std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    return rref(m).pivots.size();
}

std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b) {
    if (b.size() != a.rows())
        throw Error("solve: rhs length mismatch");
    Matrix aug(a.rows(), a.cols() + 1, a.field());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    Echelon e = rref(aug);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        if (e.pivots[i] == a.cols())
            return std::nullopt; // pivot in the rhs column
    std::vector<Scalar> x(a.cols(), Scalar::zero(a.field()));
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        x[e.pivots[i]] = e.reduced.at(i, a.cols());
    return x;
}

} // namespace steiner
