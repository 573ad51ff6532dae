#pragma once

#include "steiner/matrix.hpp"

namespace steiner {

/// Linear subspace of K^n, stored as a reduced-echelon basis so equal
/// subspaces compare equal entrywise.
class Subspace {
public:
    /// Canonicalizes the given spanning rows (zero rows dropped).
    static Subspace from_rows(const Matrix& spanning);
    static Subspace zero(std::size_t ambient, const FieldSpec& f);
    static Subspace full(std::size_t ambient, const FieldSpec& f);
    /// Trusts that `basis` is already in reduced echelon form with no zero rows.
    static Subspace from_rref_unchecked(Matrix basis);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const FieldSpec& field() const { return basis_.field(); }
    const Matrix& basis() const { return basis_; }

    bool contains(const std::vector<Scalar>& v) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
    /// Lexicographic on (dim, basis entries); a stable order for reports.
    bool operator<(const Subspace& o) const;

private:
    explicit Subspace(Matrix basis) : ambient_(basis.cols()), basis_(std::move(basis)) {}
    std::size_t ambient_;
    Matrix basis_;
};

/// Right kernel {x : m x = 0} as a subspace of K^cols.
Subspace kernel(const Matrix& m);

/// Row space of m as a subspace of K^cols.
Subspace row_space(const Matrix& m);

/// Exact intersection (Zassenhaus); ambient dimensions must agree.
Subspace intersect(const Subspace& a, const Subspace& b);

Subspace sum(const Subspace& a, const Subspace& b);

/// {y in K^rows : y * phi lies in target}, for phi acting on row vectors.
Subspace preimage_rows(const Matrix& phi, const Subspace& target);

} // namespace steiner
