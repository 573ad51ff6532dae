#include "doctest.h"

#include "steiner/random.hpp"
#include "steiner/schwarzenberger.hpp"

using namespace steiner;
using namespace steiner::schw;

TEST_CASE("monomial bases are lexicographically descending") {
    auto b = monomial_basis(2, 3);
    CHECK(b == std::vector<std::vector<int>>{{3, 0}, {2, 1}, {1, 2}, {0, 3}});
    CHECK(monomial_basis(3, 1) == std::vector<std::vector<int>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(monomial_basis(3, 2).size() == 6);
}

TEST_CASE("binary multiplication matrix has the Hankel layout") {
    SchwTriple tr = build_triple(RncSpec{1, 2});
    CHECK(tr.s == 2);
    CHECK(tr.n == 2);
    CHECK(tr.t == 4);
    REQUIRE(tr.mult.rows() == 6);
    REQUIRE(tr.mult.cols() == 4);
    // Row (alpha, j): x^{1-alpha} y^{alpha} times x^{2-j} y^{j} lands in
    // column alpha + j of (x^3, x^2 y, x y^2, y^3).
    for (int alpha = 0; alpha < 2; ++alpha)
        for (int j = 0; j < 3; ++j)
            for (int c = 0; c < 4; ++c) {
                bool expect = c == alpha + j;
                CHECK(tr.mult.at(alpha * 3 + j, c).is_zero() == !expect);
            }
}

TEST_CASE("mult entries carry exactly the monomial-product support") {
    for (const TripleSpec& spec :
         {TripleSpec{RncSpec{2, 3}}, TripleSpec{VeroneseSpec{}}, TripleSpec{RncSpec{3, 2}}}) {
        SchwTriple tr = build_triple(spec);
        int nv = tr.base_dim + 1;
        int dl = tr.family == "veronese" ? 1 : std::get<RncSpec>(spec).d;
        int dm = tr.family == "veronese" ? 1 : std::get<RncSpec>(spec).n;
        auto lb = monomial_basis(nv, dl), mb = monomial_basis(nv, dm), tb = monomial_basis(nv, dl + dm);
        for (std::size_t a = 0; a < lb.size(); ++a)
            for (std::size_t j = 0; j < mb.size(); ++j)
                for (std::size_t c = 0; c < tb.size(); ++c) {
                    std::vector<int> prod = lb[a];
                    for (std::size_t v = 0; v < prod.size(); ++v)
                        prod[v] += mb[j][v];
                    const Scalar& e = tr.mult.at(a * mb.size() + j, c);
                    if (prod == tb[c])
                        CHECK(e.is_one());
                    else
                        CHECK(e.is_zero());
                }
    }
}

TEST_CASE("veronese is reduced because its multiplication is surjective") {
    SchwTriple tr = build_triple(VeroneseSpec{});
    CHECK(tr.s == 3);
    CHECK(tr.n == 2);
    CHECK(tr.t == 6);
    CHECK(rank(tr.mult) == 6); // surjective onto H0(O(2))
    SteinerMap sm = to_steiner(tr, ExhaustiveMode{3});
    CHECK(is_reduced(sm));
}

TEST_CASE("twisted binary family has type (s, n+s)") {
    for (int d = 1; d <= 4; ++d)
        for (int n = 2; n <= 5; ++n) {
            SchwTriple tr = build_triple(RncSpec{d, n});
            CHECK(tr.s == d + 1);
            CHECK(tr.t == tr.s + n);
            SteinerMap sm = to_steiner(tr, ExhaustiveMode{3});
            CHECK(is_reduced(sm));
        }
}

TEST_CASE("split pencils over the line") {
    SchwTriple tr = build_triple(SplitP1Spec{{2, 1}});
    CHECK(tr.s == 3);
    CHECK(tr.t == 5);
    SteinerMap sm = to_steiner(tr, ExhaustiveMode{3});
    CHECK(is_reduced(sm));
    CHECK(check_pk(sm, ExhaustiveMode{5}).valid);

    // All degrees one: the multiplication is an isomorphism, the full map.
    SchwTriple full = build_triple(SplitP1Spec{{1, 1, 1}});
    SteinerMap fm = to_steiner(full, ExhaustiveMode{3});
    CHECK(fm.t == fm.tensor_cols());
    CHECK(is_reduced(fm));

    // A zero summand contributes a trivial direction: the map stays valid
    // but is no longer reduced, and the family predicates reject it.
    SchwTriple degen = build_triple(SplitP1Spec{{1, 0}});
    CHECK(degen.s == 1);
    CHECK(degen.t == 3);
    SteinerMap dm = to_steiner(degen, ExhaustiveMode{3});
    CHECK(check_pk(dm, ExhaustiveMode{3}).valid);
    CHECK_FALSE(is_reduced(dm));
    CHECK(reduce(dm).trivial_count == 1);
    FamilyReport fr = verify_family(SplitP1Spec{{1, 0}}, {3});
    CHECK_FALSE(fr.passed);
    CHECK_FALSE(fr.reduced);
}

TEST_CASE("caseiii construction and validation") {
    CHECK_THROWS_AS(build_triple(CaseIIISpec{1, 2, 10, std::nullopt, 5, 0}), Error); // t > s(n+1)

    CaseIIISpec sp{1, 2, 8, std::nullopt, 5, 1};
    SchwTriple tr = build_triple(sp);
    CHECK(tr.s == 3);
    CHECK(tr.mult.rows() == 9);
    CHECK(tr.mult.cols() == 8);
    SteinerMap sm = to_steiner(tr, ExhaustiveMode{5});
    CHECK(sm.field() == FieldSpec::prime_field(5));
    CHECK(is_reduced(sm));

    // Zero cokernel: t = s(n+1) gives the full map.
    CaseIIISpec fullsp{1, 2, 9, std::nullopt, 5, 0};
    SteinerMap fm = to_steiner(build_triple(fullsp), ExhaustiveMode{5});
    CHECK(fm.t == 9);
    CHECK(check_pk(fm, ExhaustiveMode{5}).valid);
}

TEST_CASE("fiberwise injectivity violation returns the witness") {
    // A surjection functional of tensor rank two: its kernel fails the point
    // check exactly at the plane spanned by the two contracted directions.
    const FieldSpec F5 = FieldSpec::prime_field(5);
    Matrix surj(1, 9, F5);
    surj.at(0, 0 * 3 + 0) = Scalar::one(F5); // v_0 (x) u_0
    surj.at(0, 1 * 3 + 1) = Scalar::one(F5); // v_1 (x) u_1
    CaseIIISpec sp{1, 2, 8, surj, 5, 0};
    SchwTriple tr = build_triple(sp);
    try {
        to_steiner(tr, ExhaustiveMode{5});
        FAIL("expected an injectivity violation");
    } catch (const InjectivityError& e) {
        Matrix expect(2, 3, F5);
        expect.at(0, 0) = Scalar::one(F5);
        expect.at(1, 1) = Scalar::one(F5);
        CHECK(e.witness.gamma == Subspace::from_rows(expect));
    }
}

TEST_CASE("tangent-twist triples are flagged degenerate") {
    SchwTriple tr = build_triple(TangentTwistSpec{1});
    CHECK(tr.degenerate_target);
    CHECK(tr.s == 2);
    CHECK(tr.M.dim == 2);  // forces n = k
    CHECK(tr.t == 3);
    REQUIRE(tr.mult.rows() == 4);
    REQUIRE(tr.mult.cols() == 3);
    // Rows are (x_0,d_0), (x_0,d_1), (x_1,d_0), (x_1,d_1); columns E_{01},
    // E_{10}, D_0. Diagonal products land on D_0 with the trace relation.
    CHECK(tr.mult.at(0, 2).is_one());                                  // x_0 d_0 -> D_0
    CHECK(tr.mult.at(1, 1).is_one());                                  // x_0 d_1 -> E_{10}
    CHECK(tr.mult.at(2, 0).is_one());                                  // x_1 d_0 -> E_{01}
    CHECK(tr.mult.at(3, 2) == -Scalar::one(FieldSpec::rationals()));   // x_1 d_1 -> -D_0
    CHECK_THROWS_AS(to_steiner(tr, ExhaustiveMode{3}), Error);

    SchwTriple tr2 = build_triple(TangentTwistSpec{2});
    CHECK(tr2.degenerate_target);
    CHECK(tr2.s == 3);
    CHECK(tr2.M.dim == 3);
    CHECK(tr2.t == 8);
}

TEST_CASE("reducedness is surjectivity of the multiplication") {
    std::vector<std::pair<TripleSpec, std::int64_t>> cases = {
        {RncSpec{1, 2}, 3},  {RncSpec{2, 3}, 3},          {VeroneseSpec{}, 3},
        {SplitP1Spec{{2, 1}}, 3}, {SplitP1Spec{{1, 0}}, 3},
        {CaseIIISpec{1, 2, 8, std::nullopt, 5, 1}, 5}};
    for (const auto& [spec, p] : cases) {
        SchwTriple tr = build_triple(spec);
        SteinerMap sm = to_steiner(tr, ExhaustiveMode{p});
        CHECK(is_reduced(sm) == (rank(tr.mult) == static_cast<std::size_t>(tr.t)));
    }
}

TEST_CASE("family verification") {
    FamilyReport fi = verify_family(RncSpec{2, 3}, {5});
    CHECK(fi.passed);
    CHECK(fi.reduced);
    CHECK(fi.t == 6); // n + s

    FamilyReport fiv = verify_family(VeroneseSpec{}, {3});
    CHECK(fiv.passed);
    for (const PrimeFamilyReport& pr : fiv.per_prime) {
        CHECK(pr.jumps.pair_count == 13);
        CHECK(pr.jumps.bounds.upper == 2);
    }
}
