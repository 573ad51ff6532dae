#pragma once

#include <map>
#include <vector>

#include "steiner/matrix.hpp"

namespace steiner {

/// Sparse multivariate polynomial over a FieldSpec; exponent vectors have a
/// fixed length. Only what the determinantal equations need.
class Polynomial {
public:
    Polynomial(int nvars, const FieldSpec& f) : nvars_(nvars), field_(f) {}

    static Polynomial zero(int nvars, const FieldSpec& f) { return Polynomial(nvars, f); }
    static Polynomial constant(int nvars, const Scalar& c);
    /// c * x_i
    static Polynomial linear(int nvars, int i, const Scalar& c);

    int nvars() const { return nvars_; }
    const FieldSpec& field() const { return field_; }
    const std::map<std::vector<int>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;

    Scalar eval(const std::vector<Scalar>& x) const;
    /// Entrywise coefficient reduction mod p (rational polynomials only).
    Polynomial reduced_mod(std::int64_t p) const;

    std::string str() const;

private:
    int nvars_;
    FieldSpec field_;
    std::map<std::vector<int>, Scalar> terms_; // zero coefficients never stored

    void add_term(const std::vector<int>& e, const Scalar& c);
};

/// Determinant by Laplace expansion along the first row; fine for the tiny
/// minor sizes used here.
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m);

} // namespace steiner
