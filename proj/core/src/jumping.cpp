#include "steiner/jumping.hpp"

#include <algorithm>

namespace steiner {

namespace {

std::size_t leading_index(const Matrix& basis, std::size_t row) {
    for (std::size_t c = 0; c < basis.cols(); ++c)
        if (!basis.at(row, c).is_zero())
            return c;
    throw Error("zero basis row");
}

SteinerMap at_prime(const SteinerMap& sm, std::int64_t p) {
    if (sm.field().is_rationals())
        return reduce_mod_p(sm, p);
    if (sm.field() != FieldSpec::prime_field(p))
        throw BadReductionError("map lives in " + sm.field().str() + ", not F" + std::to_string(p));
    return sm;
}

} // namespace

Subspace tensor_product_subspace(const Subspace& a, const Subspace& gamma) {
    const int s = static_cast<int>(a.ambient_dim());
    const int m = static_cast<int>(gamma.ambient_dim());
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t r = 0; r < gamma.dim(); ++r) {
            std::vector<Scalar> v(static_cast<std::size_t>(s) * m, Scalar::zero(a.field()));
            for (int al = 0; al < s; ++al)
                for (int j = 0; j < m; ++j)
                    v[al * m + j] = a.basis().at(i, al) * gamma.basis().at(r, j);
            rows.push_back(std::move(v));
        }
    return Subspace::from_rows(Matrix::from_rows(rows, static_cast<std::size_t>(s) * m, a.field()));
}

FiberData jumping_fiber(const SteinerMap& sm, const Subspace& a) {
    return jumping_fiber(sm, a, row_space(sm.phi));
}

FiberData jumping_fiber(const SteinerMap& sm, const Subspace& a, const Subspace& t0) {
    if (a.dim() != 1 || a.ambient_dim() != static_cast<std::size_t>(sm.s))
        throw Error("jumping_fiber: a must be a line in K^s");
    if (a.field() != sm.field())
        throw FieldMismatchError("jumping_fiber: field mismatch");
    if (t0.ambient_dim() != sm.phi.cols())
        throw Error("jumping_fiber: row-space ambient mismatch");
    const int m = sm.n + 1;
    // <a> tensor H0(U-dual), spanned by a (x) e_j.
    std::vector<std::vector<Scalar>> rows;
    for (int j = 0; j < m; ++j) {
        std::vector<Scalar> v(static_cast<std::size_t>(sm.s) * m, Scalar::zero(sm.field()));
        for (int al = 0; al < sm.s; ++al)
            v[al * m + j] = a.basis().at(0, al);
        rows.push_back(std::move(v));
    }
    Subspace line_block = Subspace::from_rows(Matrix::from_rows(rows, sm.field()));
    Subspace inter = intersect(line_block, t0);
    // Every element factors as a tensor w; read w off the block where the
    // normalized generator of a has its leading 1.
    std::size_t a0 = leading_index(a.basis(), 0);
    std::vector<std::vector<Scalar>> wrows;
    for (std::size_t r = 0; r < inter.dim(); ++r) {
        std::vector<Scalar> w(m, Scalar::zero(sm.field()));
        for (int j = 0; j < m; ++j)
            w[j] = inter.basis().at(r, a0 * m + j);
        wrows.push_back(std::move(w));
    }
    Subspace fiber = Subspace::from_rows(Matrix::from_rows(wrows, m, sm.field()));
    return FiberData{a, fiber, static_cast<int>(fiber.dim())};
}

std::vector<FiberData> sigma_enumerate(const SteinerMap& sm, std::int64_t p, const mpz_class& budget) {
    SteinerMap work = at_prime(sm, p);
    mpz_class total = projective_point_count(work.s, p);
    if (total > budget)
        throw BudgetError("sigma_enumerate: " + total.get_str() + " points exceed budget");
    std::vector<FiberData> out;
    Subspace t0 = row_space(work.phi);
    for_each_projective_point(work.s, p, [&](const std::vector<Scalar>& pt) {
        Subspace a = Subspace::from_rows(Matrix::from_rows({pt}, work.field()));
        FiberData fd = jumping_fiber(work, a, t0);
        if (fd.is_jumping(work.k))
            out.push_back(std::move(fd));
        return true;
    });
    return out;
}

std::vector<JumpingPair> jumping_enumerate(const SteinerMap& sm, std::int64_t p, const mpz_class& budget) {
    SteinerMap reduced = reduce(at_prime(sm, p)).map;
    std::vector<FiberData> sigma = sigma_enumerate(reduced, p, budget);
    mpz_class total = 0;
    for (const FiberData& fd : sigma)
        total += gaussian_binomial(fd.fiber_dim, reduced.k + 1, p);
    if (total > budget)
        throw BudgetError("jumping_enumerate: " + total.get_str() + " pairs exceed budget");

    std::vector<JumpingPair> out;
    const int kp1 = reduced.k + 1;
    for (const FiberData& fd : sigma) {
        for_each_subspace(fd.fiber_dim, kp1, p, [&](const Subspace& coords) {
            // Coordinates inside the fiber -> an actual subspace of K^{n+1}.
            Matrix gamma_rows = coords.basis() * fd.fiber.basis();
            Subspace gamma = Subspace::from_rows(gamma_rows);
            Subspace target = tensor_product_subspace(fd.a, gamma);
            Subspace lambda = preimage_rows(reduced.phi, target);
            if (lambda.dim() != static_cast<std::size_t>(kp1))
                throw Error("jumping_enumerate: preimage dimension anomaly");
            out.push_back(JumpingPair{fd.a, std::move(gamma), std::move(lambda)});
            return true;
        });
    }
    return out;
}

std::vector<Polynomial> sigma_equations(const SteinerMap& sm) {
    if (!is_reduced(sm))
        throw Error("sigma_equations requires a reduced map");
    const int m = sm.n + 1;
    const int q = sm.s * m - sm.t;
    if (q == 0)
        return {};
    const int minor = sm.n - sm.k + 1;
    if (minor > q)
        return {}; // cokernel too small to force any condition

    Echelon e = rref(sm.phi);
    std::vector<bool> is_piv(sm.phi.cols(), false);
    for (std::size_t pc : e.pivots)
        is_piv[pc] = true;
    std::vector<std::size_t> nonpiv;
    for (std::size_t c = 0; c < sm.phi.cols(); ++c)
        if (!is_piv[c])
            nonpiv.push_back(c);

    // Class of e_x in coker(phi), read off at the non-pivot coordinates.
    auto quotient_coords = [&](std::size_t x) {
        std::vector<Scalar> v(sm.phi.cols(), Scalar::zero(sm.field()));
        v[x] = Scalar::one(sm.field());
        for (std::size_t i = 0; i < e.pivots.size(); ++i) {
            Scalar f = v[e.pivots[i]];
            if (f.is_zero())
                continue;
            for (std::size_t c = 0; c < sm.phi.cols(); ++c)
                v[c] -= f * e.reduced.at(i, c);
        }
        std::vector<Scalar> out;
        out.reserve(nonpiv.size());
        for (std::size_t c : nonpiv)
            out.push_back(v[c]);
        return out;
    };

    // M(a)[c][j] = sum_alpha a_alpha * (class of e_{alpha,j})[c].
    std::vector<std::vector<Polynomial>> M(
        q, std::vector<Polynomial>(m, Polynomial::zero(sm.s, sm.field())));
    for (int al = 0; al < sm.s; ++al)
        for (int j = 0; j < m; ++j) {
            std::vector<Scalar> cls = quotient_coords(static_cast<std::size_t>(al) * m + j);
            for (int c = 0; c < q; ++c)
                if (!cls[c].is_zero())
                    M[c][j] = M[c][j] + Polynomial::linear(sm.s, al, cls[c]);
        }

    // All minor determinants of size n-k+1.
    std::vector<Polynomial> eqs;
    std::vector<int> rsel(minor), csel(minor);
    for (int i = 0; i < minor; ++i)
        rsel[i] = i, csel[i] = i;
    auto next_comb = [](std::vector<int>& sel, int limit) {
        int r = static_cast<int>(sel.size());
        int i = r - 1;
        while (i >= 0 && sel[i] == limit - r + i)
            --i;
        if (i < 0)
            return false;
        ++sel[i];
        for (int j = i + 1; j < r; ++j)
            sel[j] = sel[j - 1] + 1;
        return true;
    };
    do {
        std::vector<int> cs(minor);
        for (int i = 0; i < minor; ++i)
            cs[i] = i;
        do {
            std::vector<std::vector<Polynomial>> sub(minor,
                std::vector<Polynomial>(minor, Polynomial::zero(sm.s, sm.field())));
            for (int r = 0; r < minor; ++r)
                for (int c = 0; c < minor; ++c)
                    sub[r][c] = M[rsel[r]][cs[c]];
            Polynomial d = poly_det(sub);
            if (!d.is_zero())
                eqs.push_back(std::move(d));
        } while (next_comb(cs, m));
    } while (next_comb(rsel, q));
    return eqs;
}

TangentSystem tangent_system(const SteinerMap& sm, const JumpingPair& jp) {
    if (!is_reduced(sm))
        throw Error("tangent_system requires a reduced map");
    const int kp1 = sm.k + 1, m = sm.n + 1;
    if (jp.a.dim() != 1 || jp.gamma.dim() != static_cast<std::size_t>(kp1))
        throw Error("tangent_system: malformed jumping pair");

    const FieldSpec f = sm.field();
    std::vector<Scalar> v1 = jp.a.basis().row(0);
    const std::size_t a0 = leading_index(jp.a.basis(), 0);

    // Adapted u-basis: u_i = e_{pivot_i} hits g_i(u_j) = delta_ij on the
    // echelon basis of gamma; the kernel completes it.
    Matrix u(m, m, f);
    const Matrix& G = jp.gamma.basis();
    for (int i = 0; i < kp1; ++i) {
        std::size_t piv = leading_index(G, i);
        u.at(piv, i) = Scalar::one(f);
    }
    Subspace ker = kernel(G);
    if (ker.dim() != static_cast<std::size_t>(m - kp1))
        throw Error("tangent_system: gamma basis is degenerate");
    for (std::size_t r = 0; r < ker.dim(); ++r)
        for (int c = 0; c < m; ++c)
            u.at(c, kp1 + r) = ker.basis().at(r, c);

    // Adapted lambda basis: phi(lambda_i) = v1 (x) g_i, solved exactly.
    Matrix phi_t = sm.phi.transpose();
    Matrix lambda(kp1, sm.t, f);
    for (int i = 0; i < kp1; ++i) {
        std::vector<Scalar> target(sm.phi.cols(), Scalar::zero(f));
        for (int al = 0; al < sm.s; ++al)
            for (int j = 0; j < m; ++j)
                target[al * m + j] = v1[al] * G.at(i, j);
        auto sol = solve(phi_t, target);
        if (!sol)
            throw Error("tangent_system: pair is not in the image of phi");
        lambda.set_row(i, *sol);
    }

    // VT[r][j] = (row tensor r) applied to u_j, a vector in K^s.
    std::vector<std::vector<std::vector<Scalar>>> vt(
        sm.t, std::vector<std::vector<Scalar>>(m, std::vector<Scalar>(sm.s, Scalar::zero(f))));
    for (int r = 0; r < sm.t; ++r)
        for (int j = 0; j < m; ++j)
            for (int al = 0; al < sm.s; ++al) {
                Scalar acc = Scalar::zero(f);
                for (int jj = 0; jj < m; ++jj)
                    acc += sm.phi.at(r, al * m + jj) * u.at(jj, j);
                vt[r][j][al] = acc;
            }

    // Rows: image of each lambda_i on ker(phi_i) must fall in <v1>, and the
    // diagonal values must agree mod v1 across consecutive i.
    const long nrows = static_cast<long>(kp1) * sm.n * (sm.s - 1) + static_cast<long>(sm.k) * (sm.s - 1);
    Matrix C(static_cast<std::size_t>(std::max(nrows, 0L)), static_cast<std::size_t>(kp1) * sm.t, f);
    std::size_t row = 0;
    auto off_line_coeff = [&](int r, int j, int beta) {
        return vt[r][j][beta] - v1[beta] * vt[r][j][static_cast<int>(a0)];
    };
    for (int i = 0; i < kp1; ++i)
        for (int j = 0; j < m; ++j) {
            if (j == i)
                continue;
            for (int beta = 0; beta < sm.s; ++beta) {
                if (beta == static_cast<int>(a0))
                    continue;
                for (int r = 0; r < sm.t; ++r)
                    C.at(row, static_cast<std::size_t>(i) * sm.t + r) = off_line_coeff(r, j, beta);
                ++row;
            }
        }
    for (int i = 0; i + 1 < kp1; ++i)
        for (int beta = 0; beta < sm.s; ++beta) {
            if (beta == static_cast<int>(a0))
                continue;
            for (int r = 0; r < sm.t; ++r) {
                C.at(row, static_cast<std::size_t>(i) * sm.t + r) = off_line_coeff(r, i, beta);
                C.at(row, static_cast<std::size_t>(i + 1) * sm.t + r) =
                    -off_line_coeff(r, i + 1, beta);
            }
            ++row;
        }

    long solution_dim = static_cast<long>(kp1) * sm.t - static_cast<long>(rank(C));
    TangentSystem ts{std::move(lambda), std::move(u), std::move(v1), std::move(C),
                     solution_dim - static_cast<long>(kp1) * kp1};
    return ts;
}

DimBounds dim_bounds(const SteinerMap& sm) {
    const long k = sm.k, n = sm.n, s = sm.s, t = sm.t;
    DimBounds b;
    b.lower = (k + 1) * (t - k - s * n - s + n) + s - 1;
    b.upper = (k + 1) * (t - (k + 1) * (s + n - k - 1) - k);
    return b;
}

InduceResult induce(const SteinerMap& sm, const JumpingPair& jp) {
    if (sm.s < 2)
        throw Error("induce requires s >= 2");
    if (!is_reduced(sm))
        throw Error("induce requires a reduced map");
    if (jp.lambda.dim() != static_cast<std::size_t>(sm.k + 1) ||
        jp.lambda.ambient_dim() != static_cast<std::size_t>(sm.t))
        throw Error("induce: lambda incompatible with this map");
    const int m = sm.n + 1;
    const std::size_t a0 = leading_index(jp.a.basis(), 0);
    const std::vector<Scalar> v1 = jp.a.basis().row(0);

    // Domain complement: coordinates away from lambda's pivots.
    std::vector<bool> lpiv(sm.t, false);
    for (std::size_t r = 0; r < jp.lambda.dim(); ++r)
        lpiv[leading_index(jp.lambda.basis(), r)] = true;
    std::vector<int> dom;
    for (int c = 0; c < sm.t; ++c)
        if (!lpiv[c])
            dom.push_back(c);

    const int s2 = sm.s - 1;
    const int t2 = sm.t - (sm.k + 1);
    if (static_cast<int>(dom.size()) != t2)
        throw Error("induce: domain complement has wrong size");
    if (t2 < 1)
        throw Error("induce: quotient domain is zero");

    Matrix out(t2, static_cast<std::size_t>(s2) * m, sm.field());
    for (int r = 0; r < t2; ++r) {
        Matrix tens = sm.row_tensor(dom[r]);
        int bp = 0;
        for (int beta = 0; beta < sm.s; ++beta) {
            if (beta == static_cast<int>(a0))
                continue;
            for (int j = 0; j < m; ++j)
                out.at(r, static_cast<std::size_t>(bp) * m + j) =
                    tens.at(beta, j) - v1[beta] * tens.at(a0, j);
            ++bp;
        }
    }
    SteinerMap induced(sm.k, sm.n, s2, t2, std::move(out));
    bool red = is_reduced(induced);
    return InduceResult{std::move(induced), red};
}

MaximalityReport maximality_report(const SteinerMap& sm, const std::vector<std::int64_t>& primes,
                                   const mpz_class& budget) {
    MaximalityReport rep;
    rep.maximal = !primes.empty();
    for (std::int64_t p : primes) {
        SteinerMap reduced = reduce(at_prime(sm, p)).map;
        PrimeJumpingReport pr;
        pr.prime = p;
        // Exhaustive validity when the point count is desk-sized, seeded
        // sampling otherwise (large primes are used for genericity probes).
        if (gaussian_binomial(reduced.n + 1, reduced.k + 1, p) <= mpz_class(50000))
            pr.valid = check_pk(reduced, ExhaustiveMode{p, budget}).valid;
        else
            pr.valid = check_pk(reduced, SampledMode{500, 0}).valid;
        pr.sigma = sigma_enumerate(reduced, p, budget);
        std::vector<JumpingPair> pairs = jumping_enumerate(reduced, p, budget);
        pr.pair_count = static_cast<long>(pairs.size());
        pr.bounds = dim_bounds(reduced);
        bool all_at_upper = !pairs.empty();
        for (const JumpingPair& jp : pairs) {
            long td = tangent_system(reduced, jp).tangent_dim;
            ++pr.tangent_hist[td];
            pr.dim_estimate = std::max(pr.dim_estimate, td);
            if (td != pr.bounds.upper)
                all_at_upper = false;
        }
        pr.maximal = pr.valid && all_at_upper;
        rep.maximal = rep.maximal && pr.maximal;
        rep.per_prime.push_back(std::move(pr));
    }
    return rep;
}

} // namespace steiner
