#include "schur_oracle.hpp"

#include <algorithm>

namespace schur_oracle {

using steiner::chow::Partition;

namespace {

// Fill the tableau cell by cell: rows weakly increase, columns strictly.
void fill(const std::vector<int>& shape, std::vector<std::vector<int>>& t, std::size_t row,
          std::size_t col, int nvars, Poly& out) {
    if (row == shape.size()) {
        ExpVec e(nvars, 0);
        for (const auto& r : t)
            for (int v : r)
                ++e[v - 1];
        ++out[e];
        return;
    }
    if (col == static_cast<std::size_t>(shape[row])) {
        fill(shape, t, row + 1, 0, nvars, out);
        return;
    }
    int lo = 1;
    if (col > 0)
        lo = std::max(lo, t[row][col - 1]);
    if (row > 0)
        lo = std::max(lo, t[row - 1][col] + 1);
    for (int v = lo; v <= nvars; ++v) {
        t[row][col] = v;
        fill(shape, t, row, col + 1, nvars, out);
    }
}

} // namespace

Poly schur_polynomial(const Partition& lambda, int nvars) {
    Poly out;
    if (lambda.empty()) {
        out[ExpVec(nvars, 0)] = 1;
        return out;
    }
    if (static_cast<int>(lambda.length()) > nvars)
        return out; // vanishes in too few variables
    std::vector<int> shape = lambda.parts();
    std::vector<std::vector<int>> t(shape.size());
    for (std::size_t i = 0; i < shape.size(); ++i)
        t[i].assign(shape[i], 0);
    fill(shape, t, 0, 0, nvars, out);
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            ExpVec e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
            if (out[e] == 0)
                out.erase(e);
        }
    return out;
}

std::map<Partition, mpz_class> schur_expand(Poly p, int nvars) {
    std::map<Partition, mpz_class> out;
    for (auto it = p.begin(); it != p.end();)
        it = it->second == 0 ? p.erase(it) : std::next(it);
    while (!p.empty()) {
        // The lex-greatest exponent of a symmetric polynomial is dominant,
        // hence weakly decreasing.
        auto lead = std::max_element(p.begin(), p.end(),
                                     [](const auto& a, const auto& b) { return a.first < b.first; });
        ExpVec e = lead->first;
        mpz_class c = lead->second;
        std::vector<int> sorted = e;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        if (sorted != e)
            throw steiner::Error("schur_expand: polynomial is not symmetric");
        Partition lam(sorted);
        out[lam] += c;
        Poly s = schur_polynomial(lam, nvars);
        for (const auto& [es, cs] : s) {
            p[es] -= c * cs;
            if (p[es] == 0)
                p.erase(es);
        }
    }
    return out;
}

std::map<Partition, mpz_class> multiply(const Partition& lambda, const Partition& mu, int nvars,
                                        int box_cols) {
    Poly prod = poly_mul(schur_polynomial(lambda, nvars), schur_polynomial(mu, nvars));
    std::map<Partition, mpz_class> full = schur_expand(std::move(prod), nvars);
    std::map<Partition, mpz_class> out;
    for (const auto& [lam, c] : full)
        if (lam.empty() || lam.parts().front() <= box_cols)
            out[lam] = c;
    return out;
}

} // namespace schur_oracle
