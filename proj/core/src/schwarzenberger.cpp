#include "steiner/schwarzenberger.hpp"

#include <algorithm>
#include <map>

#include "steiner/random.hpp"

namespace steiner::schw {

std::vector<std::vector<int>> monomial_basis(int nv, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(nv, 0);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nv - 1) {
            cur[var] = remaining;
            out.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[var] = e;
            self(self, var + 1, remaining - e);
        }
    };
    if (nv <= 0)
        throw Error("monomial_basis: need at least one variable");
    if (d < 0)
        return out; // no sections
    rec(rec, 0, d);
    return out;
}

namespace {

std::size_t monomial_index(const std::vector<std::vector<int>>& basis, const std::vector<int>& e) {
    auto it = std::lower_bound(basis.begin(), basis.end(), e,
                               [](const std::vector<int>& a, const std::vector<int>& b) { return a > b; });
    if (it == basis.end() || *it != e)
        throw Error("monomial not in basis");
    return static_cast<std::size_t>(it - basis.begin());
}

// Multiplication matrix of two monomial section spaces on P^{nv-1}.
Matrix monomial_mult(const std::vector<std::vector<int>>& lb, const std::vector<std::vector<int>>& mb,
                     const std::vector<std::vector<int>>& tb) {
    const FieldSpec f = FieldSpec::rationals();
    Matrix mult(lb.size() * mb.size(), tb.size(), f);
    std::vector<int> e;
    for (std::size_t a = 0; a < lb.size(); ++a)
        for (std::size_t j = 0; j < mb.size(); ++j) {
            e = lb[a];
            for (std::size_t v = 0; v < e.size(); ++v)
                e[v] += mb[j][v];
            mult.at(a * mb.size() + j, monomial_index(tb, e)) = Scalar::one(f);
        }
    return mult;
}

SchwTriple build_rnc(const RncSpec& sp) {
    if (sp.d < 1 || sp.n < 1)
        throw Error("rnc: degrees must be positive");
    SchwTriple tr;
    tr.family = "rnc";
    tr.base_dim = 1;
    auto lb = monomial_basis(2, sp.d), mb = monomial_basis(2, sp.n), tb = monomial_basis(2, sp.d + sp.n);
    tr.L = {"O(" + std::to_string(sp.d) + ")", static_cast<int>(lb.size())};
    tr.M = {"O(" + std::to_string(sp.n) + ")", static_cast<int>(mb.size())};
    tr.LM = {"O(" + std::to_string(sp.d + sp.n) + ")", static_cast<int>(tb.size())};
    tr.k = 0;
    tr.n = sp.n;
    tr.s = sp.d + 1;
    tr.t = sp.d + sp.n + 1;
    tr.mult = monomial_mult(lb, mb, tb);
    return tr;
}

SchwTriple build_veronese() {
    SchwTriple tr;
    tr.family = "veronese";
    tr.base_dim = 2;
    auto lb = monomial_basis(3, 1), tb = monomial_basis(3, 2);
    tr.L = {"O(1)", 3};
    tr.M = {"O(1)", 3};
    tr.LM = {"O(2)", 6};
    tr.k = 0;
    tr.n = 2;
    tr.s = 3;
    tr.t = 6;
    tr.mult = monomial_mult(lb, lb, tb);
    return tr;
}

SchwTriple build_splitp1(const SplitP1Spec& sp) {
    if (sp.degrees.empty())
        throw Error("splitp1: need at least one summand");
    for (int a : sp.degrees)
        if (a < 0)
            throw Error("splitp1: summand degrees must be nonnegative");
    SchwTriple tr;
    tr.family = "splitp1";
    tr.base_dim = 1;
    tr.k = 0;
    tr.n = 1;
    int s = 0, t = 0;
    for (int a : sp.degrees) {
        s += a;         // h0(O(a-1)) = a, zero summands contribute no sections
        t += a + 1;     // h0(O(a))
    }
    if (s == 0)
        throw Error("splitp1: no sections at all; need some degree >= 1");
    tr.s = s;
    tr.t = t;
    tr.L = {"E(-1)", s};
    tr.M = {"O(1)", 2};
    tr.LM = {"E", t};
    const FieldSpec f = FieldSpec::rationals();
    Matrix mult(static_cast<std::size_t>(s) * 2, t, f);
    auto mb = monomial_basis(2, 1);
    int lrow = 0, tcol = 0;
    for (int a : sp.degrees) {
        auto lb = monomial_basis(2, a - 1), tb = monomial_basis(2, a);
        for (std::size_t i = 0; i < lb.size(); ++i)
            for (std::size_t j = 0; j < mb.size(); ++j) {
                std::vector<int> e = lb[i];
                e[0] += mb[j][0];
                e[1] += mb[j][1];
                mult.at(static_cast<std::size_t>(lrow + i) * 2 + j,
                        tcol + monomial_index(tb, e)) = Scalar::one(f);
            }
        lrow += static_cast<int>(lb.size());
        tcol += static_cast<int>(tb.size());
    }
    tr.mult = std::move(mult);
    return tr;
}

SchwTriple build_caseiii(const CaseIIISpec& sp) {
    const int s = sp.k + 2;
    const int cols = s * (sp.n + 1);
    if (sp.k < 0 || sp.n <= sp.k)
        throw Error("caseiii: need 0 <= k < n");
    if (sp.t < 1 || sp.t > cols)
        throw Error("caseiii: need 1 <= t <= s(n+1) = " + std::to_string(cols));
    const int q = cols - sp.t;
    Matrix surj(0, cols, FieldSpec::rationals());
    if (sp.surjection) {
        surj = *sp.surjection;
        if (surj.rows() != static_cast<std::size_t>(q) || surj.cols() != static_cast<std::size_t>(cols))
            throw Error("caseiii: surjection must be q x s(n+1)");
        if (rank(surj) != static_cast<std::size_t>(q))
            throw Error("caseiii: surjection is not of full row rank");
    } else {
        Rng rng(sp.seed);
        const FieldSpec f = FieldSpec::prime_field(sp.prime);
        surj = q == 0 ? Matrix(0, cols, f) : random_full_row_rank(q, cols, f, rng);
    }
    Subspace tstar = kernel(surj);
    if (tstar.dim() != static_cast<std::size_t>(sp.t))
        throw Error("caseiii: kernel has unexpected dimension");
    SchwTriple tr;
    tr.family = "caseiii";
    tr.base_dim = sp.k + 1;
    tr.k = sp.k;
    tr.n = sp.n;
    tr.s = s;
    tr.t = sp.t;
    tr.L = {"O(1)", s};
    tr.M = {"dual-kernel(-1)", sp.n + 1};
    tr.LM = {"dual-kernel", sp.t};
    tr.mult = tstar.basis().transpose();
    return tr;
}

SchwTriple build_tangent_twist(const TangentTwistSpec& sp) {
    const int k = sp.k;
    if (k < 1)
        throw Error("tangent-twist: need k >= 1");
    SchwTriple tr;
    tr.family = "tangent-twist";
    tr.base_dim = k;
    const int s = k + 1;            // h0(O(1)) on P^k
    const int hM = k + 1;           // h0(T(-1)): classes of the coordinate fields
    const int hT = (k + 1) * (k + 1) - 1; // h0(T): endomorphisms mod identity
    tr.L = {"O(1)", s};
    tr.M = {"T(-1)", hM};
    tr.LM = {"T", hT};
    tr.k = k;
    tr.n = hM - 1; // the target the section counts dictate: n = k
    tr.s = s;
    tr.t = hT;
    tr.degenerate_target = true;
    tr.degeneracy_note = "h0(T(-1)) = k+1 puts the target at G(" + std::to_string(k) + "," +
                         std::to_string(k) + "), which is not a Grassmannian of k-planes";
    // Multiplication x_alpha * [d_j] = [E_{j,alpha}] in endomorphisms mod the
    // identity. Codomain basis: off-diagonal units (r,c) lex, then
    // D_i = [E_{ii}] for i < k; [E_{kk}] = -(D_0 + ... + D_{k-1}).
    const FieldSpec f = FieldSpec::rationals();
    std::map<std::pair<int, int>, int> off;
    int idx = 0;
    for (int r = 0; r <= k; ++r)
        for (int c = 0; c <= k; ++c)
            if (r != c)
                off[{r, c}] = idx++;
    Matrix mult(static_cast<std::size_t>(s) * hM, hT, f);
    for (int alpha = 0; alpha <= k; ++alpha)
        for (int j = 0; j <= k; ++j) {
            std::size_t row = static_cast<std::size_t>(alpha) * hM + j;
            if (j != alpha) {
                mult.at(row, off[{j, alpha}]) = Scalar::one(f);
            } else if (j < k) {
                mult.at(row, idx + j) = Scalar::one(f);
            } else {
                for (int l = 0; l < k; ++l)
                    mult.at(row, idx + l) = -Scalar::one(f);
            }
        }
    tr.mult = std::move(mult);
    return tr;
}

} // namespace

SchwTriple build_triple(const TripleSpec& spec) {
    return std::visit(
        [](const auto& sp) -> SchwTriple {
            using T = std::decay_t<decltype(sp)>;
            if constexpr (std::is_same_v<T, RncSpec>)
                return build_rnc(sp);
            else if constexpr (std::is_same_v<T, VeroneseSpec>)
                return build_veronese();
            else if constexpr (std::is_same_v<T, SplitP1Spec>)
                return build_splitp1(sp);
            else if constexpr (std::is_same_v<T, CaseIIISpec>)
                return build_caseiii(sp);
            else
                return build_tangent_twist(sp);
        },
        spec);
}

SteinerMap to_steiner(const SchwTriple& tr, const CheckMode& mode) {
    if (tr.degenerate_target)
        throw Error("to_steiner: " + tr.family + " flagged degenerate: " + tr.degeneracy_note);
    SteinerMap sm(tr.k, tr.n, tr.s, tr.t, tr.mult.transpose());
    CheckResult chk = check_pk(sm, mode);
    if (!chk.valid)
        throw InjectivityError("to_steiner: multiplication is not fiberwise injective on " +
                                   tr.family,
                               *chk.witness);
    return sm;
}

SteinerMap to_steiner(const SchwTriple& tr) {
    std::int64_t p = tr.mult.field().is_prime_field() ? tr.mult.field().p : 3;
    return to_steiner(tr, ExhaustiveMode{p});
}

std::vector<std::vector<std::int64_t>> rnc_parameterization(int d, std::int64_t p) {
    std::vector<std::vector<std::int64_t>> pts;
    for_each_projective_point(2, p, [&](const std::vector<Scalar>& xy) {
        std::vector<Scalar> v;
        Scalar x = xy[0], y = xy[1];
        for (int i = 0; i <= d; ++i) {
            Scalar m = Scalar::one(xy[0].field());
            for (int a = 0; a < d - i; ++a)
                m *= x;
            for (int a = 0; a < i; ++a)
                m *= y;
            v.push_back(m);
        }
        // Normalize to the leading-one representative.
        std::size_t lead = 0;
        while (v[lead].is_zero())
            ++lead;
        Scalar inv = v[lead].inverse();
        std::vector<std::int64_t> coords;
        for (const Scalar& c : v)
            coords.push_back((c * inv).residue());
        pts.push_back(std::move(coords));
        return true;
    });
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

namespace {

std::vector<std::int64_t> point_coords(const Subspace& a) {
    std::vector<std::int64_t> v;
    for (std::size_t c = 0; c < a.ambient_dim(); ++c)
        v.push_back(a.basis().at(0, c).residue());
    return v;
}

void family_predicates(const SchwTriple& tr, const SteinerMap& reduced_map, std::int64_t p,
                       const PrimeJumpingReport& jr, const std::vector<JumpingPair>& pairs,
                       std::vector<FamilyPredicate>& out) {
    auto add = [&](const std::string& name, bool ok, const std::string& detail = "") {
        out.push_back(FamilyPredicate{name, ok, detail});
    };
    const mpz_class sigma_count = static_cast<long>(jr.sigma.size());
    if (tr.family == "rnc") {
        add("type_t_eq_n_plus_s", tr.t == tr.n + tr.s);
        add("sigma_count_p_plus_1", sigma_count == mpz_class(static_cast<long>(p + 1)));
        std::vector<std::vector<std::int64_t>> got;
        for (const FiberData& fd : jr.sigma)
            got.push_back(point_coords(fd.a));
        std::sort(got.begin(), got.end());
        add("sigma_on_rnc", got == rnc_parameterization(tr.s - 1, p));
    } else if (tr.family == "veronese") {
        add("type_0_2_3_6", tr.k == 0 && tr.n == 2 && tr.s == 3 && tr.t == 6);
        add("sigma_all_of_p2", sigma_count == projective_point_count(3, p));
        bool fibers_one = true;
        for (const FiberData& fd : jr.sigma)
            fibers_one = fibers_one && fd.fiber_dim == 1;
        add("fibers_all_dim_1", fibers_one);
        std::vector<Subspace> gammas;
        for (const JumpingPair& jp : pairs)
            gammas.push_back(jp.gamma);
        std::sort(gammas.begin(), gammas.end());
        bool distinct = std::adjacent_find(gammas.begin(), gammas.end()) == gammas.end();
        add("graph_of_bijection", distinct && pairs.size() == jr.sigma.size());
    } else if (tr.family == "caseiii") {
        add("s_eq_k_plus_2", tr.s == tr.k + 2);
        std::map<std::vector<std::int64_t>, long> per_a;
        for (const JumpingPair& jp : pairs)
            ++per_a[point_coords(jp.a)];
        bool counts_ok = true;
        for (const FiberData& fd : jr.sigma) {
            mpz_class want = gaussian_binomial(fd.fiber_dim, tr.k + 1, p);
            counts_ok = counts_ok && mpz_class(per_a[point_coords(fd.a)]) == want;
        }
        add("grassmann_bundle_counts", counts_ok);
        const long formula = static_cast<long>(tr.k + 1) *
                             (reduced_map.t - (tr.k + 1) * (tr.n + 1) - tr.k);
        bool tangents_ok = !jr.tangent_hist.empty();
        for (const auto& [td, cnt] : jr.tangent_hist)
            tangents_ok = tangents_ok && td == formula;
        add("tangent_eq_formula", tangents_ok, "expected " + std::to_string(formula));
    } else if (tr.family == "splitp1") {
        add("n_eq_1", tr.n == 1);
    }
}

} // namespace

FamilyReport verify_family(const TripleSpec& spec, const std::vector<std::int64_t>& primes) {
    FamilyReport rep;
    SchwTriple tr;
    try {
        tr = build_triple(spec);
        rep.family = tr.family;
        rep.k = tr.k;
        rep.n = tr.n;
        rep.s = tr.s;
        rep.t = tr.t;
        std::int64_t p0 = tr.mult.field().is_prime_field() ? tr.mult.field().p
                          : primes.empty()                 ? 3
                                                           : primes.front();
        SteinerMap sm = to_steiner(tr, ExhaustiveMode{p0});
        rep.built_ok = true;
        rep.reduced = is_reduced(sm);
        rep.passed = rep.reduced;
        for (std::int64_t p : primes) {
            if (sm.field().is_prime_field() && sm.field().p != p)
                throw BadReductionError("instance lives in " + sm.field().str() + ", not F" +
                                        std::to_string(p));
            SteinerMap work = reduce(sm.field().is_rationals() ? reduce_mod_p(sm, p) : sm).map;
            PrimeFamilyReport pr;
            pr.prime = p;
            MaximalityReport mr = maximality_report(work, {p});
            pr.jumps = mr.per_prime.front();
            std::vector<JumpingPair> pairs = jumping_enumerate(work, p);
            pr.predicates.push_back(FamilyPredicate{"valid", pr.jumps.valid, ""});
            pr.predicates.push_back(FamilyPredicate{"maximal", pr.jumps.maximal, ""});
            family_predicates(tr, work, p, pr.jumps, pairs, pr.predicates);
            if (const auto* sp1 = std::get_if<SplitP1Spec>(&spec)) {
                int s_expect = 0, t_expect = 0;
                for (int a : sp1->degrees) {
                    s_expect += a;
                    t_expect += a + 1;
                }
                pr.predicates.push_back(FamilyPredicate{
                    "type_from_degrees", tr.s == s_expect && tr.t == t_expect, ""});
            }
            pr.passed = true;
            for (const FamilyPredicate& fp : pr.predicates)
                pr.passed = pr.passed && fp.ok;
            rep.passed = rep.passed && pr.passed;
            rep.per_prime.push_back(std::move(pr));
        }
    } catch (const InjectivityError& e) {
        rep.built_ok = false;
        rep.build_error = e.what();
        rep.passed = false;
    } catch (const Error& e) {
        rep.built_ok = false;
        rep.build_error = e.what();
        rep.passed = false;
    }
    return rep;
}

} // namespace steiner::schw
