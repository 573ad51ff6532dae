#pragma once

// Test-only brute-force oracle for Schubert products: represent each class by
// its Schur polynomial in a fixed number of variables, multiply by raw
// monomial expansion, and re-express in the Schur basis by triangular
// elimination on leading exponents. Independent of the Pieri/Giambelli path
// it cross-checks.

#include <map>
#include <vector>

#include <gmpxx.h>

#include "steiner/partition.hpp"

namespace schur_oracle {

using ExpVec = std::vector<int>;
using Poly = std::map<ExpVec, mpz_class>;

/// Monomial expansion of s_lambda(x_1..x_nvars) via semistandard tableaux.
Poly schur_polynomial(const steiner::chow::Partition& lambda, int nvars);

Poly poly_mul(const Poly& a, const Poly& b);

/// Writes a symmetric polynomial as a sum of Schur polynomials.
std::map<steiner::chow::Partition, mpz_class> schur_expand(Poly p, int nvars);

/// s_lambda * s_mu in nvars variables, truncated to parts <= box_cols.
std::map<steiner::chow::Partition, mpz_class>
multiply(const steiner::chow::Partition& lambda, const steiner::chow::Partition& mu, int nvars,
         int box_cols);

} // namespace schur_oracle
