#include "steiner/subspace.hpp"

namespace steiner {

Subspace Subspace::from_rows(const Matrix& spanning) {
    Echelon e = rref(spanning);
    std::size_t r = e.pivots.size();
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < r; ++i)
        keep.push_back(i);
    std::vector<std::size_t> allc;
    for (std::size_t c = 0; c < spanning.cols(); ++c)
        allc.push_back(c);
    return Subspace(e.reduced.submatrix(keep, allc));
}

Subspace Subspace::zero(std::size_t ambient, const FieldSpec& f) {
    return Subspace(Matrix(0, ambient, f));
}

Subspace Subspace::full(std::size_t ambient, const FieldSpec& f) {
    return Subspace(Matrix::identity(ambient, f));
}

Subspace Subspace::from_rref_unchecked(Matrix basis) {
    return Subspace(std::move(basis));
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
    if (v.size() != ambient_)
        throw Error("contains: ambient mismatch");
    std::vector<Scalar> r = v;
    // Reduce by each basis row at its pivot; membership iff residual is zero.
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t piv = 0;
        while (piv < ambient_ && basis_.at(i, piv).is_zero())
            ++piv;
        if (piv == ambient_)
            continue;
        if (r[piv].is_zero())
            continue;
        Scalar f = r[piv];
        for (std::size_t c = piv; c < ambient_; ++c)
            r[c] -= f * basis_.at(i, c);
    }
    for (const Scalar& s : r)
        if (!s.is_zero())
            return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        throw Error("contains: ambient mismatch");
    for (std::size_t i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i)))
            return false;
    return true;
}

bool Subspace::operator<(const Subspace& o) const {
    if (dim() != o.dim())
        return dim() < o.dim();
    if (ambient_ != o.ambient_)
        return ambient_ < o.ambient_;
    const bool ratf = field().is_rationals();
    for (std::size_t r = 0; r < basis_.rows(); ++r)
        for (std::size_t c = 0; c < ambient_; ++c) {
            const Scalar &x = basis_.at(r, c), &y = o.basis_.at(r, c);
            if (x == y)
                continue;
            if (ratf)
                return x.rat() < y.rat();
            return x.residue() < y.residue();
        }
    return false;
}

Subspace kernel(const Matrix& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : e.pivots)
        is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Scalar> v(m.cols(), Scalar::zero(m.field()));
        v[free] = Scalar::one(m.field());
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            v[e.pivots[i]] = -e.reduced.at(i, free);
        basis.push_back(std::move(v));
    }
    return Subspace::from_rows(Matrix::from_rows(basis, m.cols(), m.field()));
}

Subspace row_space(const Matrix& m) {
    return Subspace::from_rows(m);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw Error("intersect: ambient mismatch");
    if (a.field() != b.field())
        throw FieldMismatchError("intersect: fields differ");
    const std::size_t m = a.ambient_dim();
    // Zassenhaus block [[A A],[B 0]]: rows whose left half reduces to zero
    // carry an intersection basis in the right half.
    Matrix block(a.dim() + b.dim(), 2 * m, a.field());
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < m; ++c) {
            block.at(r, c) = a.basis().at(r, c);
            block.at(r, m + c) = a.basis().at(r, c);
        }
    for (std::size_t r = 0; r < b.dim(); ++r)
        for (std::size_t c = 0; c < m; ++c)
            block.at(a.dim() + r, c) = b.basis().at(r, c);
    Echelon e = rref(block);
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] < m)
            continue;
        std::vector<Scalar> v(m, Scalar::zero(a.field()));
        for (std::size_t c = 0; c < m; ++c)
            v[c] = e.reduced.at(r, m + c);
        rows.push_back(std::move(v));
    }
    return Subspace::from_rows(Matrix::from_rows(rows, m, a.field()));
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw Error("sum: ambient mismatch");
    return Subspace::from_rows(a.basis().vstack(b.basis()));
}

Subspace preimage_rows(const Matrix& phi, const Subspace& target) {
    if (phi.cols() != target.ambient_dim())
        throw Error("preimage_rows: ambient mismatch");
    // v in target iff v . c = 0 for all kernel columns c of the target basis.
    Subspace ann = kernel(target.basis());
    Matrix c = ann.basis().transpose(); // cols x (cols - dim)
    Matrix prod = phi * c;              // rows x (cols - dim)
    return kernel(prod.transpose());    // {y : y prod = 0}
}

} // namespace steiner
