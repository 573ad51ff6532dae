#include "steiner/steiner_map.hpp"

#include "steiner/random.hpp"

namespace steiner {

SteinerMap::SteinerMap(int k_, int n_, int s_, int t_, Matrix phi_)
    : k(k_), n(n_), s(s_), t(t_), phi(std::move(phi_)) {
    if (k < 0 || n <= k)
        throw Error("SteinerMap requires 0 <= k < n");
    if (s < 1 || t < 1)
        throw Error("SteinerMap requires s >= 1 and t >= 1");
    if (phi.rows() != static_cast<std::size_t>(t) ||
        phi.cols() != static_cast<std::size_t>(s) * (n + 1))
        throw Error("SteinerMap: phi must be t x s(n+1)");
}

Matrix SteinerMap::row_tensor(std::size_t i) const {
    Matrix m(s, n + 1, field());
    for (int a = 0; a < s; ++a)
        for (int j = 0; j <= n; ++j)
            m.at(a, j) = phi.at(i, a * (n + 1) + j);
    return m;
}

SteinerMap SteinerMap::full_map(int k, int n, int s, const FieldSpec& f) {
    int t = s * (n + 1);
    return SteinerMap(k, n, s, t, Matrix::identity(t, f));
}

GrassmannPoint::GrassmannPoint(int k_, int n_, Subspace gamma_)
    : k(k_), n(n_), gamma(std::move(gamma_)) {
    if (gamma.ambient_dim() != static_cast<std::size_t>(n + 1))
        throw Error("GrassmannPoint: ambient dimension must be n+1");
    if (gamma.dim() != static_cast<std::size_t>(k + 1))
        throw Error("GrassmannPoint: subspace dimension must be k+1");
}

Matrix fiber_map(const SteinerMap& sm, const GrassmannPoint& p) {
    if (p.k != sm.k || p.n != sm.n)
        throw Error("fiber_map: (k,n) mismatch");
    if (p.gamma.field() != sm.field())
        throw FieldMismatchError("fiber_map: field mismatch");
    const int kp1 = sm.k + 1;
    Matrix out(sm.t, sm.s * kp1, sm.field());
    for (int i = 0; i < sm.t; ++i)
        for (int a = 0; a < sm.s; ++a)
            for (int c = 0; c < kp1; ++c) {
                Scalar acc = Scalar::zero(sm.field());
                for (int j = 0; j <= sm.n; ++j)
                    acc += sm.phi.at(i, a * (sm.n + 1) + j) * p.gamma.basis().at(c, j);
                out.at(i, a * kp1 + c) = acc;
            }
    return out;
}

namespace {

CheckResult check_exhaustive(const SteinerMap& sm, const ExhaustiveMode& mode) {
    SteinerMap work = sm.field().is_rationals() ? reduce_mod_p(sm, mode.prime) : sm;
    if (work.field() != FieldSpec::prime_field(mode.prime))
        throw Error("check_pk: map lives in " + work.field().str() + ", not F" +
                    std::to_string(mode.prime));
    mpz_class total = gaussian_binomial(work.n + 1, work.k + 1, mode.prime);
    if (total > mode.budget)
        throw BudgetError("check_pk: " + total.get_str() + " points exceed budget " +
                          mode.budget.get_str());
    const std::size_t want = static_cast<std::size_t>(work.s) * (work.k + 1);
    CheckResult res;
    res.valid = true;
    for_each_subspace(work.n + 1, work.k + 1, mode.prime, [&](const Subspace& gamma) {
        ++res.points_checked;
        GrassmannPoint pt(work.k, work.n, gamma);
        if (rank(fiber_map(work, pt)) != want) {
            res.valid = false;
            res.witness = pt;
            return false;
        }
        return true;
    });
    return res;
}

CheckResult check_sampled(const SteinerMap& sm, const SampledMode& mode) {
    Rng rng(mode.seed);
    const std::size_t want = static_cast<std::size_t>(sm.s) * (sm.k + 1);
    CheckResult res;
    res.valid = true;
    for (std::int64_t i = 0; i < mode.trials; ++i) {
        Matrix rows = random_matrix(sm.k + 1, sm.n + 1, sm.field(), rng);
        Subspace gamma = Subspace::from_rows(rows);
        if (gamma.dim() != static_cast<std::size_t>(sm.k + 1))
            continue; // dependent draw; try again
        ++res.points_checked;
        GrassmannPoint pt(sm.k, sm.n, gamma);
        if (rank(fiber_map(sm, pt)) != want) {
            res.valid = false;
            res.witness = pt;
            return res;
        }
    }
    return res;
}

} // namespace

CheckResult check_pk(const SteinerMap& sm, const CheckMode& mode) {
    if (std::holds_alternative<ExhaustiveMode>(mode))
        return check_exhaustive(sm, std::get<ExhaustiveMode>(mode));
    return check_sampled(sm, std::get<SampledMode>(mode));
}

ReduceResult reduce(const SteinerMap& sm) {
    Subspace rs = row_space(sm.phi);
    int t_red = static_cast<int>(rs.dim());
    if (t_red == 0)
        throw Error("reduce: zero map presents no bundle");
    return ReduceResult{SteinerMap(sm.k, sm.n, sm.s, t_red, rs.basis()), sm.t - t_red};
}

bool is_reduced(const SteinerMap& sm) {
    return rank(sm.phi) == static_cast<std::size_t>(sm.t);
}

SteinerMap reduce_mod_p(const SteinerMap& sm, std::int64_t p) {
    return SteinerMap(sm.k, sm.n, sm.s, sm.t, sm.phi.reduced_mod(p));
}

SteinerMap dualize(const SteinerMap& sm) {
    if (sm.s < sm.k + 2)
        throw Error("dualize: target G(" + std::to_string(sm.k) + "," +
                    std::to_string(sm.s - 1) + ") is degenerate; need s >= k+2");
    const int ns = sm.n + 1, nn = sm.s - 1;
    Matrix out(sm.t, ns * (nn + 1), sm.field());
    for (int i = 0; i < sm.t; ++i)
        for (int a = 0; a < sm.s; ++a)
            for (int j = 0; j <= sm.n; ++j)
                out.at(i, j * (nn + 1) + a) = sm.phi.at(i, a * (sm.n + 1) + j);
    return SteinerMap(sm.k, nn, ns, sm.t, std::move(out));
}

TrivialRangeReport verify_trivial_range(const SteinerMap& sm, std::int64_t prime) {
    if (sm.s > sm.k + 1)
        throw Error("verify_trivial_range requires s <= k+1");
    ReduceResult red = reduce(sm);
    CheckResult chk = check_pk(red.map, ExhaustiveMode{prime});
    TrivialRangeReport rep;
    rep.valid = chk.valid;
    rep.t_reduced = red.map.t;
    rep.t_expected = sm.s * (sm.n + 1);
    rep.trivial_count = red.trivial_count;
    rep.pass = !chk.valid || rep.t_reduced == rep.t_expected;
    return rep;
}

} // namespace steiner
