#pragma once

#include <optional>
#include <variant>

#include "steiner/fp_enum.hpp"
#include "steiner/subspace.hpp"

namespace steiner {

/// The linear map phi : T* -> S* tensor H0(U-dual) presenting an (s,t)-type
/// bundle on G(k,n). Row i of phi is the image of the i-th basis vector of
/// T*, an s x (n+1) tensor flattened row-major: slot alpha*(n+1) + j pairs
/// the alpha-th basis vector of S* with the j-th of H0(U-dual).
struct SteinerMap {
    int k, n, s, t;
    Matrix phi; // t x s(n+1)

    SteinerMap(int k, int n, int s, int t, Matrix phi);

    const FieldSpec& field() const { return phi.field(); }
    int tensor_cols() const { return s * (n + 1); }
    /// t - s(k+1); nonnegative for maps that can present a bundle.
    long bundle_rank() const { return static_cast<long>(t) - static_cast<long>(s) * (k + 1); }

    /// Row i reshaped to the s x (n+1) tensor it encodes.
    Matrix row_tensor(std::size_t i) const;

    static SteinerMap full_map(int k, int n, int s, const FieldSpec& f);
};

/// A point of G(k,n): a (k+1)-dimensional subspace of H0(U-dual)* = K^{n+1}.
struct GrassmannPoint {
    int k, n;
    Subspace gamma; // dim k+1 in K^{n+1}

    GrassmannPoint(int k, int n, Subspace gamma);
};

/// The t x s(k+1) matrix of phi restricted to the point: row i holds the
/// s x (k+1) matrix of phi(e_i) applied to the point's basis, flattened.
Matrix fiber_map(const SteinerMap& sm, const GrassmannPoint& p);

struct ExhaustiveMode {
    std::int64_t prime;
    mpz_class budget = mpz_class(2000000);
};

struct SampledMode {
    std::int64_t trials;
    std::uint64_t seed;
};

using CheckMode = std::variant<ExhaustiveMode, SampledMode>;

struct CheckResult {
    bool valid = false;
    std::optional<GrassmannPoint> witness; // a failing point when invalid
    unsigned long points_checked = 0;
};

/// Surjectivity of every (k+1)-point restriction of phi. Exhaustive mode
/// enumerates all of G(k,n)(F_p) (reducing a rational map mod p first);
/// sampled mode draws seeded random points in the map's own field.
CheckResult check_pk(const SteinerMap& sm, const CheckMode& mode);

struct ReduceResult {
    SteinerMap map;        // t' = rank(phi) rows, canonical echelon basis of the row space
    int trivial_count = 0; // t - t'
};

/// Splits off the trivial summand: the reduced map presents the same row
/// space with independent rows. Idempotent.
ReduceResult reduce(const SteinerMap& sm);

bool is_reduced(const SteinerMap& sm);

/// Entrywise reduction mod p; throws BadReductionError on bad denominators.
SteinerMap reduce_mod_p(const SteinerMap& sm, std::int64_t p);

/// Transposes each row tensor: an (s,t)-map on G(k,n) becomes an
/// (n+1,t)-map on G(k,s-1). Requires s >= k+2 so the target is a genuine
/// Grassmannian. An involution.
SteinerMap dualize(const SteinerMap& sm);

struct TrivialRangeReport {
    bool valid = false;     // check_pk verdict of the reduced map
    int t_reduced = 0;      // rank of phi
    int t_expected = 0;     // s(n+1)
    int trivial_count = 0;
    bool pass = false;      // valid implies t_reduced == t_expected
};

/// For s <= k+1, a valid reduced map must fill all of S* tensor H0(U-dual).
/// Exhaustive verification over F_p. Requires s <= k+1.
TrivialRangeReport verify_trivial_range(const SteinerMap& sm, std::int64_t prime);

} // namespace steiner
