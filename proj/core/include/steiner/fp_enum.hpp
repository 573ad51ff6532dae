#pragma once

#include <cstdint>
#include <functional>

#include <gmpxx.h>

#include "steiner/subspace.hpp"

namespace steiner {

/// Gaussian binomial [m r]_p: number of r-dimensional subspaces of F_p^m.
mpz_class gaussian_binomial(int m, int r, std::int64_t p);

/// (p^dim - 1)/(p - 1): number of points of P^{dim-1}(F_p).
mpz_class projective_point_count(int dim, std::int64_t p);

/// Visits every point of P(F_p^dim) once, as a normalized coordinate vector
/// (first nonzero entry equal to 1). Deterministic order: position of the
/// leading 1 ascending, then remaining coordinates counting up. Return false
/// from the callback to stop; the function reports whether it ran to the end.
bool for_each_projective_point(int dim, std::int64_t p,
                               const std::function<bool(const std::vector<Scalar>&)>& fn);

/// Visits every r-dimensional subspace of F_p^m once via reduced-echelon
/// cells: pivot-column sets in lexicographic order, free entries counting up.
/// The Subspace handed to the callback is already canonical. Return false to
/// stop early.
bool for_each_subspace(int m, int r, std::int64_t p,
                       const std::function<bool(const Subspace&)>& fn);

} // namespace steiner
