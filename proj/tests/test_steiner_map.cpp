#include "doctest.h"

#include "steiner/random.hpp"
#include "steiner/schwarzenberger.hpp"
#include "steiner/steiner_map.hpp"

using namespace steiner;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F3 = FieldSpec::prime_field(3);

Matrix ints(const std::vector<std::vector<int>>& rows, const FieldSpec& f) {
    std::vector<std::vector<Scalar>> sr;
    for (const auto& r : rows) {
        std::vector<Scalar> row;
        for (int v : r)
            row.push_back(Scalar::integer(v, f));
        sr.push_back(std::move(row));
    }
    return Matrix::from_rows(sr, f);
}

// s=1, k=0, n=2 map whose rows span a 2-dimensional space of functionals:
// the fiber rank drops exactly at the annihilator point.
SteinerMap hyperplane_image_map(const FieldSpec& f) {
    return SteinerMap(0, 2, 1, 2, ints({{1, 0, 0}, {0, 1, 0}}, f));
}

} // namespace

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(SteinerMap(1, 1, 1, 1, Matrix(1, 2, Q)), Error);
    CHECK_THROWS_AS(SteinerMap(0, 2, 1, 2, Matrix(2, 4, Q)), Error); // phi must be 2x3
    SteinerMap sm = SteinerMap::full_map(1, 2, 1, Q);
    CHECK(sm.t == 3);
    CHECK(sm.bundle_rank() == 1);
}

TEST_CASE("fiber_map on the full map has full rank everywhere") {
    SteinerMap sm = SteinerMap::full_map(1, 2, 2, F3);
    std::size_t count = 0;
    for_each_subspace(3, 2, 3, [&](const Subspace& gamma) {
        GrassmannPoint pt(1, 2, gamma);
        CHECK(rank(fiber_map(sm, pt)) == 4);
        ++count;
        return true;
    });
    CHECK(mpz_class(static_cast<long>(count)) == gaussian_binomial(3, 2, 3));
}

TEST_CASE("fiber rank drops exactly at the annihilator point") {
    SteinerMap sm = hyperplane_image_map(FieldSpec::prime_field(5));
    Subspace ann = kernel(sm.phi); // (0,0,1)
    REQUIRE(ann.dim() == 1);
    int drops = 0;
    for_each_projective_point(3, 5, [&](const std::vector<Scalar>& pt) {
        Subspace gamma = Subspace::from_rows(Matrix::from_rows({pt}, sm.field()));
        std::size_t r = rank(fiber_map(sm, GrassmannPoint(0, 2, gamma)));
        if (r < 1) {
            ++drops;
            CHECK(gamma == ann);
        }
        return true;
    });
    CHECK(drops == 1);

    CheckResult chk = check_pk(sm, ExhaustiveMode{5});
    CHECK_FALSE(chk.valid);
    REQUIRE(chk.witness.has_value());
    CHECK(chk.witness->gamma == ann);
}

TEST_CASE("check_pk on Schwarzenberger instances") {
    SteinerMap rnc12 = schw::to_steiner(schw::build_triple(schw::RncSpec{1, 2}), ExhaustiveMode{3});
    CheckResult c7 = check_pk(rnc12, ExhaustiveMode{7});
    CHECK(c7.valid);
    CHECK(c7.points_checked == 57); // all of P^2(F_7)

    SteinerMap rnc23 = schw::to_steiner(schw::build_triple(schw::RncSpec{2, 3}), ExhaustiveMode{3});
    CHECK(check_pk(rnc23, ExhaustiveMode{5}).valid);
}

TEST_CASE("check_pk sampled over Q finds the failing point") {
    SteinerMap sm = hyperplane_image_map(Q);
    CheckResult chk = check_pk(sm, SampledMode{500, 11});
    CHECK_FALSE(chk.valid); // (0,0,1) appears among 500 small random draws
}

TEST_CASE("check_pk budget") {
    SteinerMap sm = SteinerMap::full_map(1, 5, 1, Q);
    ExhaustiveMode mode{3};
    mode.budget = 10;
    CHECK_THROWS_AS(check_pk(sm, mode), BudgetError);
}

TEST_CASE("reduce") {
    SteinerMap full = SteinerMap::full_map(0, 2, 1, Q);
    ReduceResult r = reduce(full);
    CHECK(r.trivial_count == 0);
    CHECK(r.map.phi == full.phi);

    Matrix padded = full.phi.vstack(Matrix(2, 3, Q));
    SteinerMap sm(0, 2, 1, 5, padded);
    ReduceResult r2 = reduce(sm);
    CHECK(r2.trivial_count == 2);
    CHECK(r2.map.t == 3);
    CHECK(is_reduced(r2.map));

    Rng rng(3);
    for (int i = 0; i < 5; ++i) {
        Matrix rows = random_matrix(3, 6, FieldSpec::prime_field(5), rng);
        Matrix mix = random_matrix(2, 3, FieldSpec::prime_field(5), rng);
        SteinerMap deficient(0, 2, 2, 5, rows.vstack(mix * rows));
        ReduceResult red = reduce(deficient);
        CHECK(red.trivial_count >= 2);
        ReduceResult again = reduce(red.map);
        CHECK(again.trivial_count == 0);
        CHECK(again.map.phi == red.map.phi);
    }
}

TEST_CASE("dualize") {
    SteinerMap rnc12 = schw::to_steiner(schw::build_triple(schw::RncSpec{1, 2}), ExhaustiveMode{3});
    REQUIRE(rnc12.s == 2);
    SteinerMap dual = dualize(rnc12); // (k,n,s,t) = (0,1,3,4)
    CHECK(dual.k == 0);
    CHECK(dual.n == 1);
    CHECK(dual.s == 3);
    CHECK(dual.t == 4);
    CHECK(check_pk(rnc12, ExhaustiveMode{7}).valid);
    CHECK(check_pk(dual, ExhaustiveMode{7}).valid);

    SteinerMap dd = dualize(dual);
    CHECK(dd.phi == rnc12.phi);

    SteinerMap full = SteinerMap::full_map(0, 2, 3, Q);
    SteinerMap dfull = dualize(full);
    CHECK(dfull.s == 3);
    CHECK(dfull.n == 2);
    CHECK(is_reduced(dfull));
    CHECK(check_pk(dfull, ExhaustiveMode{3}).valid);

    SteinerMap trivial_range = SteinerMap::full_map(1, 2, 2, Q); // s = k+1
    CHECK_THROWS_AS(dualize(trivial_range), Error);
}

TEST_CASE("verdict is invariant under row-basis change") {
    Rng rng(17);
    for (int i = 0; i < 6; ++i) {
        Matrix phi = random_matrix(4, 6, F3, rng);
        SteinerMap sm(0, 2, 2, 4, phi);
        Matrix mix = random_full_row_rank(4, 4, F3, rng); // invertible
        SteinerMap sm2(0, 2, 2, 4, mix * phi);
        CHECK(check_pk(sm, ExhaustiveMode{3}).valid == check_pk(sm2, ExhaustiveMode{3}).valid);
    }
}

TEST_CASE("a valid map stays valid for smaller k") {
    SteinerMap sm = SteinerMap::full_map(1, 3, 1, F3);
    CHECK(check_pk(sm, ExhaustiveMode{3}).valid);
    SteinerMap down(0, sm.n, sm.s, sm.t, sm.phi);
    CHECK(check_pk(down, ExhaustiveMode{3}).valid);

    // A nontrivial k=1 instance: the same phi reinterpreted on single points
    // still surjects onto every 1-point restriction.
    SteinerMap c3 =
        schw::to_steiner(schw::build_triple(schw::CaseIIISpec{1, 2, 8, std::nullopt, 5, 1}),
                         ExhaustiveMode{5});
    REQUIRE(check_pk(c3, ExhaustiveMode{5}).valid);
    SteinerMap down2(0, c3.n, c3.s, c3.t, c3.phi);
    CHECK(check_pk(down2, ExhaustiveMode{5}).valid);
}

TEST_CASE("trivial range") {
    // Full map with s=1, k=1, n=3: t' = 4 = s(n+1).
    SteinerMap full = SteinerMap::full_map(1, 3, 1, F3);
    TrivialRangeReport rep = verify_trivial_range(full, 3);
    CHECK(rep.valid);
    CHECK(rep.pass);
    CHECK(rep.t_reduced == 4);

    // Proper 3-dimensional image: the check must fail somewhere.
    Rng rng(23);
    Matrix phi = random_full_row_rank(3, 4, F3, rng);
    SteinerMap sub(1, 3, 1, 3, phi);
    TrivialRangeReport rep2 = verify_trivial_range(sub, 3);
    CHECK_FALSE(rep2.valid);
    CHECK(rep2.pass); // vacuous: invalid maps carry no claim

    SteinerMap full2 = SteinerMap::full_map(1, 3, 2, F3);
    TrivialRangeReport rep3 = verify_trivial_range(full2, 3);
    CHECK(rep3.valid);
    CHECK(rep3.pass);
    CHECK(rep3.trivial_count == 0);

    CHECK_THROWS_AS(verify_trivial_range(SteinerMap::full_map(1, 3, 3, F3), 3), Error);
}

TEST_CASE("subspace enumeration counts match Gaussian binomials") {
    for (auto [m, r, p] : {std::tuple<int, int, std::int64_t>{4, 2, 3},
                           {5, 2, 3},
                           {4, 1, 5},
                           {4, 3, 3}}) {
        long count = 0;
        for_each_subspace(m, r, p, [&](const Subspace&) {
            ++count;
            return true;
        });
        CHECK(mpz_class(count) == gaussian_binomial(m, r, p));
    }
    CHECK(gaussian_binomial(4, 2, 3) == 130);
    CHECK(projective_point_count(3, 7) == 57);
}
