#include "steiner/chow.hpp"

#include <algorithm>

namespace steiner::chow {

Grassmannian::Grassmannian(int k_, int n_) : k(k_), n(n_) {
    if (k < 0 || n <= k)
        throw Error("Grassmannian requires 0 <= k < n");
}

ChowClass ChowClass::unit(const Grassmannian& g) {
    ChowClass c(g);
    c.add_term(Partition{}, 1);
    return c;
}

ChowClass ChowClass::schubert(const Grassmannian& g, const Partition& lambda) {
    if (!lambda.fits_in_box(g.box_rows(), g.box_cols()))
        throw Error("partition " + lambda.str() + " does not fit the Schubert box");
    ChowClass c(g);
    c.add_term(lambda, 1);
    return c;
}

ChowClass ChowClass::chern_quotient(const Grassmannian& g) {
    ChowClass c(g);
    for (int i = 0; i <= g.box_cols(); ++i)
        c.add_term(i == 0 ? Partition{} : Partition{i}, 1);
    return c;
}

void ChowClass::add_term(const Partition& lambda, const mpq_class& coeff) {
    if (!lambda.fits_in_box(g_.box_rows(), g_.box_cols()))
        throw Error("partition " + lambda.str() + " does not fit the Schubert box");
    mpq_class& v = terms_[lambda];
    v += coeff;
    if (v == 0)
        terms_.erase(lambda);
}

mpq_class ChowClass::coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

int ChowClass::homogeneous_degree() const {
    int deg = -1;
    for (const auto& [lam, c] : terms_) {
        if (deg == -1)
            deg = lam.size();
        else if (deg != lam.size())
            return -1;
    }
    return deg;
}

ChowClass ChowClass::homogeneous_part(int degree) const {
    ChowClass out(g_);
    for (const auto& [lam, c] : terms_)
        if (lam.size() == degree)
            out.add_term(lam, c);
    return out;
}

ChowClass ChowClass::operator+(const ChowClass& o) const {
    if (!(g_ == o.g_))
        throw Error("ChowClass sum across Grassmannians");
    ChowClass out = *this;
    for (const auto& [lam, c] : o.terms_)
        out.add_term(lam, c);
    return out;
}

ChowClass ChowClass::operator*(const mpq_class& c) const {
    ChowClass out(g_);
    if (c == 0)
        return out;
    for (const auto& [lam, v] : terms_)
        out.add_term(lam, v * c);
    return out;
}

std::string ChowClass::str() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [lam, c] : terms_) {
        if (!s.empty())
            s += " + ";
        s += c.get_str() + "*s" + lam.str();
    }
    return s;
}

namespace {

// All horizontal-strip extensions of lambda by i boxes inside the box.
void strip_extensions(const Partition& lambda, int i, int box_rows, int box_cols,
                      std::vector<Partition>& out) {
    std::vector<int> mu;
    // Row j may grow to at most min(box_cols, mu_{j-1} is enforced by order)
    // and at least lambda_j; the strip condition caps it at lambda_{j-1}.
    auto rec = [&](auto&& self, int row, int remaining) -> void {
        if (row == box_rows) {
            if (remaining == 0)
                out.emplace_back(mu);
            return;
        }
        int lo = lambda.part(row);
        int hi = row == 0 ? box_cols : std::min(lambda.part(row - 1), mu[row - 1]);
        for (int v = lo; v <= hi; ++v) {
            if (v - lo > remaining)
                break;
            mu.push_back(v);
            self(self, row + 1, remaining - (v - lo));
            mu.pop_back();
        }
    };
    rec(rec, 0, i);
}

} // namespace

ChowClass pieri(const ChowClass& c, int i) {
    const Grassmannian& g = c.grassmannian();
    if (i < 0 || i > g.box_cols())
        throw Error("pieri: degree out of range");
    if (i == 0)
        return c;
    ChowClass out(g);
    std::vector<Partition> mus;
    for (const auto& [lam, coeff] : c.terms()) {
        mus.clear();
        strip_extensions(lam, i, g.box_rows(), g.box_cols(), mus);
        for (const Partition& mu : mus)
            out.add_term(mu, coeff);
    }
    return out;
}

namespace {

// sigma_lambda * x via the Giambelli determinant det(sigma_{lambda_i + j - i})
// expanded over permutations; entries outside [0, n-k] vanish.
ChowClass giambelli_times(const Partition& lambda, const ChowClass& x) {
    const Grassmannian& g = x.grassmannian();
    const int l = static_cast<int>(lambda.length());
    ChowClass acc(g);
    if (l == 0)
        return x;
    std::vector<int> perm(l);
    for (int i = 0; i < l; ++i)
        perm[i] = i;
    do {
        int sign = 1;
        std::vector<int> degs(l);
        bool zero = false;
        for (int i = 0; i < l; ++i) {
            degs[i] = lambda.part(i) + perm[i] - i;
            if (degs[i] < 0 || degs[i] > g.box_cols()) {
                zero = true;
                break;
            }
        }
        // Permutation sign by inversion count.
        for (int i = 0; i < l && !zero; ++i)
            for (int j = i + 1; j < l; ++j)
                if (perm[i] > perm[j])
                    sign = -sign;
        if (zero)
            continue;
        ChowClass term = x;
        for (int d : degs)
            if (d > 0)
                term = pieri(term, d);
        acc = acc + term * mpq_class(sign);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

} // namespace

ChowClass multiply(const ChowClass& a, const ChowClass& b) {
    if (!(a.grassmannian() == b.grassmannian()))
        throw Error("multiply: Grassmannian mismatch");
    ChowClass out(a.grassmannian());
    for (const auto& [lam, coeff] : a.terms())
        out = out + giambelli_times(lam, b) * coeff;
    return out;
}

ChowClass porteous_class(int k, int n, int s, int t) {
    Grassmannian g(k, n);
    long r = static_cast<long>(t) - static_cast<long>(s) * (k + 1);
    if (r < 0)
        throw Error("porteous_class requires t >= s(k+1)");
    ChowClass out(g);
    if (r + 1 > g.dim())
        return out; // beyond the top degree
    ChowClass power = ChowClass::unit(g);
    ChowClass chern = ChowClass::chern_quotient(g);
    for (int i = 0; i < s; ++i)
        power = multiply(power, chern);
    return power.homogeneous_part(static_cast<int>(r) + 1);
}

long rank_bound(int k, int n, int s) {
    if (k < 0 || n <= k || s < 1)
        throw Error("rank_bound requires 0 <= k < n and s >= 1");
    return std::min<long>(static_cast<long>(k + 1) * (n - k), static_cast<long>(n - k) * s);
}

} // namespace steiner::chow
