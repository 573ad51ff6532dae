#include "steiner/fp_enum.hpp"

namespace steiner {

mpz_class gaussian_binomial(int m, int r, std::int64_t p) {
    if (r < 0 || r > m)
        return 0;
    // q-Pascal recursion [m r] = [m-1 r-1] + p^r [m-1 r].
    std::vector<std::vector<mpz_class>> g(m + 1, std::vector<mpz_class>(r + 1, 0));
    mpz_class pz(static_cast<long>(p));
    for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= std::min(i, r); ++j) {
            if (j == 0 || j == i) {
                g[i][j] = 1;
                continue;
            }
            mpz_class pr;
            mpz_pow_ui(pr.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(j));
            g[i][j] = g[i - 1][j - 1] + pr * g[i - 1][j];
        }
    }
    return g[m][r];
}

mpz_class projective_point_count(int dim, std::int64_t p) {
    return gaussian_binomial(dim, 1, p);
}

bool for_each_projective_point(int dim, std::int64_t p,
                               const std::function<bool(const std::vector<Scalar>&)>& fn) {
    const FieldSpec f = FieldSpec::prime_field(p);
    std::vector<Scalar> v(dim, Scalar::zero(f));
    for (int lead = 0; lead < dim; ++lead) {
        for (int c = 0; c < dim; ++c)
            v[c] = Scalar::zero(f);
        v[lead] = Scalar::one(f);
        const int nfree = dim - lead - 1;
        std::vector<std::int64_t> odo(nfree, 0);
        while (true) {
            for (int i = 0; i < nfree; ++i)
                v[lead + 1 + i] = Scalar::mod_p(odo[i], p);
            if (!fn(v))
                return false;
            int i = nfree - 1;
            while (i >= 0 && odo[i] == p - 1)
                odo[i--] = 0;
            if (i < 0)
                break;
            ++odo[i];
        }
    }
    return true;
}

bool for_each_subspace(int m, int r, std::int64_t p,
                       const std::function<bool(const Subspace&)>& fn) {
    if (r < 0 || r > m)
        return true;
    const FieldSpec f = FieldSpec::prime_field(p);
    if (r == 0)
        return fn(Subspace::zero(m, f));

    std::vector<int> piv(r);
    for (int i = 0; i < r; ++i)
        piv[i] = i;
    while (true) {
        // Free slots of this echelon cell: (i, j) with j > piv[i], j not a pivot.
        std::vector<bool> is_piv(m, false);
        for (int c : piv)
            is_piv[c] = true;
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < r; ++i)
            for (int j = piv[i] + 1; j < m; ++j)
                if (!is_piv[j])
                    slots.emplace_back(i, j);

        Matrix basis(r, m, f);
        for (int i = 0; i < r; ++i)
            basis.at(i, piv[i]) = Scalar::one(f);

        std::vector<std::int64_t> odo(slots.size(), 0);
        while (true) {
            for (std::size_t s = 0; s < slots.size(); ++s)
                basis.at(slots[s].first, slots[s].second) = Scalar::mod_p(odo[s], p);
            if (!fn(Subspace::from_rref_unchecked(basis)))
                return false;
            int i = static_cast<int>(slots.size()) - 1;
            while (i >= 0 && odo[i] == p - 1)
                odo[i--] = 0;
            if (i < 0)
                break;
            ++odo[i];
        }

        // Next pivot combination in lexicographic order.
        int i = r - 1;
        while (i >= 0 && piv[i] == m - r + i)
            --i;
        if (i < 0)
            break;
        ++piv[i];
        for (int j = i + 1; j < r; ++j)
            piv[j] = piv[j - 1] + 1;
    }
    return true;
}

} // namespace steiner
