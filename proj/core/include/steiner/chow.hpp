#pragma once

#include <map>

#include <gmpxx.h>

#include "steiner/partition.hpp"

namespace steiner::chow {

/// Target Grassmannian G(k,n) of projective k-planes in P^n; Schubert classes
/// live in the (k+1) x (n-k) box.
struct Grassmannian {
    int k = 0;
    int n = 1;

    Grassmannian(int k_, int n_);
    int box_rows() const { return k + 1; }
    int box_cols() const { return n - k; }
    int dim() const { return (k + 1) * (n - k); }
    bool operator==(const Grassmannian&) const = default;
};

/// Element of the Chow ring of G(k,n) in the Schubert basis, with rational
/// coefficients. Possibly inhomogeneous (Chern polynomials are).
class ChowClass {
public:
    explicit ChowClass(const Grassmannian& g) : g_(g) {}

    static ChowClass unit(const Grassmannian& g); // sigma_empty
    static ChowClass schubert(const Grassmannian& g, const Partition& lambda);
    /// Total Chern class of the universal quotient: 1 + sigma_1 + ... + sigma_{n-k}.
    static ChowClass chern_quotient(const Grassmannian& g);

    const Grassmannian& grassmannian() const { return g_; }
    const std::map<Partition, mpq_class>& terms() const { return terms_; }

    void add_term(const Partition& lambda, const mpq_class& coeff);
    mpq_class coefficient(const Partition& lambda) const;
    bool is_zero() const { return terms_.empty(); }
    /// Common degree of all terms, or -1 when inhomogeneous / zero.
    int homogeneous_degree() const;
    ChowClass homogeneous_part(int degree) const;

    ChowClass operator+(const ChowClass& o) const;
    ChowClass operator*(const mpq_class& c) const;
    bool operator==(const ChowClass& o) const { return g_ == o.g_ && terms_ == o.terms_; }

    std::string str() const;

private:
    Grassmannian g_;
    std::map<Partition, mpq_class> terms_; // zero coefficients never stored
};

/// Pieri rule: multiply by the special class sigma_i, dropping terms that
/// leave the box. Requires 0 <= i <= n-k.
ChowClass pieri(const ChowClass& c, int i);

/// Ring product, computed by expanding Giambelli determinants into special
/// classes and applying pieri.
ChowClass multiply(const ChowClass& a, const ChowClass& b);

/// Expected degeneracy class for an (s,t)-map on G(k,n): the homogeneous
/// degree-(r+1) component of c(Q)^s with r = t - s(k+1); the zero class when
/// r+1 exceeds dim G(k,n). Requires r >= 0.
ChowClass porteous_class(int k, int n, int s, int t);

/// min((k+1)(n-k), (n-k) s): lower bound for the rank of a nontrivial bundle.
long rank_bound(int k, int n, int s);

} // namespace steiner::chow
