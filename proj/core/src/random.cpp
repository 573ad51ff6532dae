#include "steiner/random.hpp"

namespace steiner {

Matrix random_matrix(std::size_t rows, std::size_t cols, const FieldSpec& f, Rng& rng) {
    Matrix m(rows, cols, f);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = rng.scalar(f);
    return m;
}

Matrix random_full_row_rank(std::size_t rows, std::size_t cols, const FieldSpec& f, Rng& rng) {
    if (rows > cols)
        throw Error("random_full_row_rank: rows > cols");
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Matrix m = random_matrix(rows, cols, f, rng);
        if (rank(m) == rows)
            return m;
    }
    throw Error("random_full_row_rank: no full-rank draw in 1000 attempts");
}

} // namespace steiner
