#include "steiner/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace steiner {

Polynomial Polynomial::constant(int nvars, const Scalar& c) {
    Polynomial p(nvars, c.field());
    p.add_term(std::vector<int>(nvars, 0), c);
    return p;
}

Polynomial Polynomial::linear(int nvars, int i, const Scalar& c) {
    Polynomial p(nvars, c.field());
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    p.add_term(e, c);
    return p;
}

void Polynomial::add_term(const std::vector<int>& e, const Scalar& c) {
    if (c.is_zero())
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial p = *this;
    for (const auto& [e, c] : o.terms_)
        p.add_term(e, c);
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial p = *this;
    for (const auto& [e, c] : o.terms_)
        p.add_term(e, -c);
    return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial p(nvars_, field_);
    std::vector<int> e(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i)
                e[i] = ea[i] + eb[i];
            p.add_term(e, ca * cb);
        }
    return p;
}

Scalar Polynomial::eval(const std::vector<Scalar>& x) const {
    Scalar acc = Scalar::zero(field_);
    for (const auto& [e, c] : terms_) {
        Scalar m = c;
        for (int i = 0; i < nvars_; ++i)
            for (int j = 0; j < e[i]; ++j)
                m *= x[i];
        acc += m;
    }
    return acc;
}

Polynomial Polynomial::reduced_mod(std::int64_t p) const {
    Polynomial out(nvars_, FieldSpec::prime_field(p));
    for (const auto& [e, c] : terms_)
        out.add_term(e, c.reduced_mod(p));
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty())
            s += " + ";
        s += c.str();
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) {
                s += "*a" + std::to_string(i);
                if (e[i] > 1)
                    s += "^" + std::to_string(e[i]);
            }
    }
    return s;
}

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m) {
    const std::size_t n = m.size();
    if (n == 0)
        throw Error("poly_det of empty matrix");
    if (n == 1)
        return m[0][0];
    Polynomial acc = Polynomial::zero(m[0][0].nvars(), m[0][0].field());
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Polynomial>> sub;
        sub.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j)
                    row.push_back(m[r][c]);
            sub.push_back(std::move(row));
        }
        Polynomial cof = m[0][j] * poly_det(sub);
        acc = (j % 2 == 0) ? acc + cof : acc - cof;
    }
    return acc;
}

} // namespace steiner
