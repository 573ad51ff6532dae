#pragma once

#include <map>

#include "steiner/polynomial.hpp"
#include "steiner/steiner_map.hpp"

namespace steiner {

/// Fiber data at a point a of P(S*): the intersection (<a> tensor H0) with
/// the row space of phi, identified with a subspace of H0(U-dual).
struct FiberData {
    Subspace a;     // dim 1 in K^s
    Subspace fiber; // subspace of K^{n+1}
    int fiber_dim = 0;

    bool is_jumping(int k) const { return fiber_dim >= k + 1; }
};

/// A jumping pair (a, gamma) with its preimage lambda inside the reduced
/// domain T0*; phi maps lambda isomorphically onto a tensor gamma.
struct JumpingPair {
    Subspace a;      // dim 1 in K^s
    Subspace gamma;  // dim k+1 in K^{n+1}
    Subspace lambda; // dim k+1 in K^{t'} of the reduced map
};

/// Span of a tensor g over the rows g of gamma, inside K^{s(n+1)}.
Subspace tensor_product_subspace(const Subspace& a, const Subspace& gamma);

FiberData jumping_fiber(const SteinerMap& sm, const Subspace& a);
/// Same, with the row space of phi precomputed (hoisted out of point scans).
FiberData jumping_fiber(const SteinerMap& sm, const Subspace& a, const Subspace& row_space_of_phi);

/// All jumping first factors over P(S*)(F_p). Rational maps are reduced mod p
/// first. Point budget guards the scan.
std::vector<FiberData> sigma_enumerate(const SteinerMap& sm, std::int64_t p,
                                       const mpz_class& budget = mpz_class(2000000));

/// All jumping pairs over F_p: for each jumping a, every (k+1)-subspace of
/// its fiber. Pair lambdas refer to the reduced map's domain coordinates;
/// the (a, gamma) sets depend only on the row space of phi.
std::vector<JumpingPair> jumping_enumerate(const SteinerMap& sm, std::int64_t p,
                                           const mpz_class& budget = mpz_class(2000000));

/// The (n-k+1)-minors of the linear matrix M(a) : H0(U-dual) -> coker(phi),
/// homogeneous of degree n-k+1 in the coordinates of a; their common zero
/// locus is the set of jumping first factors. Empty when the cokernel is too
/// small to constrain anything. Requires a reduced map.
std::vector<Polynomial> sigma_equations(const SteinerMap& sm);

/// Adapted data for the tangent-space computation at a jumping pair: bases
/// with phi_i(u_j) = delta_ij v1, the linear constraint system on
/// Hom(Lambda, T0*/Lambda), and the exact solution dimension.
struct TangentSystem {
    Matrix lambda_basis;     // (k+1) x t', rows lambda_i
    Matrix u_basis;          // (n+1) x (n+1), columns u_j
    std::vector<Scalar> v1;  // distinguished vector spanning a
    Matrix constraint_matrix;
    long tangent_dim = 0;
};

/// Exact dimension of the tangent space to the jumping variety at jp.
/// Requires a reduced map and a valid pair.
TangentSystem tangent_system(const SteinerMap& sm, const JumpingPair& jp);

/// Closed-form dimension bounds for the jumping variety: the expected
/// dimension of the defining intersection from below and the tangent-space
/// bound from above (the upper bound is meaningful for s >= k+2).
struct DimBounds {
    long lower = 0;
    long upper = 0;
};

DimBounds dim_bounds(const SteinerMap& sm);

/// Quotient by a jumping pair: domain by lambda, codomain by <a> tensor H0.
/// The result has type (s-1, t-k-1) and may fail to be reduced; it is
/// returned as-is with a flag. Requires a reduced map and s >= 2.
struct InduceResult {
    SteinerMap map;
    bool reduced = false;
};

InduceResult induce(const SteinerMap& sm, const JumpingPair& jp);

/// Per-prime enumeration summary used to estimate dim J~ by local tangent
/// dimensions and compare against the closed-form bounds.
struct PrimeJumpingReport {
    std::int64_t prime = 0;
    bool valid = false;
    std::vector<FiberData> sigma;
    mpz_class pair_count;
    std::map<long, long> tangent_hist;
    DimBounds bounds;
    long dim_estimate = -1; // max tangent dim over pairs; -1 when no pairs
    bool maximal = false;   // valid, nonempty, every tangent equals the upper bound
};

struct MaximalityReport {
    std::vector<PrimeJumpingReport> per_prime;
    bool maximal = false; // conjunction over primes
};

/// Validity is certified exhaustively when G(k,n)(F_p) is desk-sized
/// (<= 50000 points) and by seeded sampling beyond that.
MaximalityReport maximality_report(const SteinerMap& sm, const std::vector<std::int64_t>& primes,
                                   const mpz_class& budget = mpz_class(2000000));

} // namespace steiner
