#pragma once

#include <cstdint>
#include <random>

#include "steiner/matrix.hpp"

namespace steiner {

/// Deterministic RNG wrapper. Draws go through the raw mt19937_64 stream so
/// results are identical across platforms (std distributions are not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform-ish integer in [0, bound); bound must be positive.
    std::int64_t below(std::int64_t bound) {
        return static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(bound));
    }

    /// Entry for a random matrix: residues for F_p, small integers for Q.
    Scalar scalar(const FieldSpec& f) {
        if (f.is_prime_field())
            return Scalar::integer(below(f.p), f);
        return Scalar::integer(below(7) - 3, f);
    }

private:
    std::mt19937_64 eng_;
};

Matrix random_matrix(std::size_t rows, std::size_t cols, const FieldSpec& f, Rng& rng);

/// Random matrix of full row rank (rows <= cols); redraws until independent.
Matrix random_full_row_rank(std::size_t rows, std::size_t cols, const FieldSpec& f, Rng& rng);

} // namespace steiner
