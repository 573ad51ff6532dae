#include "doctest.h"

#include "schur_oracle.hpp"
#include "steiner/chow.hpp"
#include "steiner/random.hpp"
#include "steiner/verify.hpp"

using namespace steiner;
using namespace steiner::chow;

namespace {

ChowClass sigma(const Grassmannian& g, std::initializer_list<int> parts) {
    return ChowClass::schubert(g, Partition(parts));
}

bool matches_oracle(const Grassmannian& g, const Partition& a, const Partition& b) {
    ChowClass got = multiply(ChowClass::schubert(g, a), ChowClass::schubert(g, b));
    auto want = schur_oracle::multiply(a, b, g.box_rows(), g.box_cols());
    for (auto it = want.begin(); it != want.end();)
        it = it->second == 0 ? want.erase(it) : std::next(it);
    if (got.terms().size() != want.size())
        return false;
    for (const auto& [lam, c] : got.terms()) {
        auto it = want.find(lam);
        if (it == want.end() || mpq_class(it->second) != c)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("partition rules") {
    CHECK_THROWS_AS(Partition({1, 2}), Error);
    CHECK(Partition({2, 1, 0, 0}) == Partition({2, 1}));
    CHECK(Partition({2, 2}).fits_in_box(2, 2));
    CHECK_FALSE(Partition({3}).fits_in_box(2, 2));
    CHECK(partitions_in_box(2, 2).size() == 6);
    CHECK(partitions_in_box(2, 3).size() == 10);
    CHECK(partitions_in_box(3, 2).size() == 10);
}

TEST_CASE("pieri in G(1,3)") {
    Grassmannian g(1, 3);
    ChowClass one = ChowClass::unit(g);
    for (int i = 0; i <= 2; ++i) {
        ChowClass si = pieri(one, i);
        CHECK(si == (i == 0 ? one : sigma(g, {i})));
    }
    CHECK(pieri(sigma(g, {1}), 1) == sigma(g, {2}) + sigma(g, {1, 1}));
    CHECK(pieri(sigma(g, {2}), 2) == sigma(g, {2, 2}));
    CHECK_THROWS_AS(pieri(one, 3), Error);
    CHECK_THROWS_AS(pieri(one, -1), Error);
}

TEST_CASE("multiply: unit and classical values") {
    Grassmannian g(1, 3);
    ChowClass s1 = sigma(g, {1});
    CHECK(multiply(ChowClass::unit(g), s1) == s1);

    ChowClass s14 = multiply(multiply(s1, s1), multiply(s1, s1));
    ChowClass expect = sigma(g, {2, 2}) * mpq_class(2);
    CHECK(s14 == expect); // degree of the Pluecker quadric

    Grassmannian g14(1, 4);
    CHECK(multiply(sigma(g14, {1, 1}), sigma(g14, {2})) == sigma(g14, {3, 1}));
    CHECK(multiply(sigma(g14, {2}), sigma(g14, {2})) ==
          sigma(g14, {3, 1}) + sigma(g14, {2, 2}));
}

TEST_CASE("multiply agrees with the Schur oracle up to the 3x3 box") {
    // G(1,3) is the 2x2 box, G(2,5) the full 3x3 box.
    for (auto [k, n] : {std::pair<int, int>{1, 3}, {2, 5}}) {
        Grassmannian g(k, n);
        auto ps = partitions_in_box(g.box_rows(), g.box_cols());
        for (const Partition& a : ps)
            for (const Partition& b : ps)
                CHECK(matches_oracle(g, a, b));
    }
}

TEST_CASE("grading, commutativity, associativity") {
    Grassmannian g(2, 4);
    auto ps = partitions_in_box(g.box_rows(), g.box_cols());
    Rng rng(5);
    for (int trial = 0; trial < 6; ++trial) {
        ChowClass a(g), b(g), c(g);
        for (int j = 0; j < 3; ++j) {
            a.add_term(ps[rng.below(ps.size())], mpq_class(1 + rng.below(4)));
            b.add_term(ps[rng.below(ps.size())], mpq_class(1 + rng.below(4)));
            c.add_term(ps[rng.below(ps.size())], mpq_class(1 + rng.below(4)));
        }
        CHECK(multiply(a, b) == multiply(b, a));
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
    // Homogeneous times homogeneous is homogeneous or zero.
    for (const Partition& a : ps)
        for (const Partition& b : ps) {
            ChowClass p = multiply(ChowClass::schubert(g, a), ChowClass::schubert(g, b));
            if (!p.is_zero())
                CHECK(p.homogeneous_degree() == a.size() + b.size());
        }
}

TEST_CASE("porteous classes") {
    // Degree-3 part of c(Q) on P^3 survives: the rank floor at work.
    ChowClass c = porteous_class(0, 3, 1, 3);
    CHECK_FALSE(c.is_zero());
    CHECK(c == ChowClass::schubert(Grassmannian(0, 3), Partition{3}));

    CHECK(porteous_class(0, 2, 2, 5).is_zero()); // r+1 = 4 > dim P^2
    CHECK(porteous_class(1, 3, 1, 7).is_zero()); // r+1 = 6 > dim G(1,3)
    CHECK_THROWS_AS(porteous_class(0, 2, 2, 1), Error); // r < 0

    // Hand-expanded degree-2 part of c(Q)^2 on G(1,3): sigma_1^2 + 2 sigma_2.
    ChowClass d2 = porteous_class(1, 3, 2, 5);
    Grassmannian g(1, 3);
    CHECK(d2.coefficient(Partition{2}) == 3);
    CHECK(d2.coefficient(Partition{1, 1}) == 1);
}

TEST_CASE("rank_bound closed form") {
    CHECK(rank_bound(0, 3, 2) == 3);
    CHECK(rank_bound(0, 4, 1) == 4);
    CHECK(rank_bound(1, 3, 5) == 4);
    CHECK_THROWS_AS(rank_bound(2, 2, 1), Error);
}

TEST_CASE("degeneracy vanishing matches the closed-form floor") {
    // porteous_class is nonzero exactly when r+1 <= min((k+1)(n-k),(n-k)s),
    // tying the Chern-power route to the stated minimum.
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k < n; ++k)
            for (int s = 1; s <= 3; ++s) {
                Grassmannian g(k, n);
                for (int r = 0; r <= g.dim() + 1; ++r) {
                    bool nonzero = !porteous_class(k, n, s, s * (k + 1) + r).is_zero();
                    CHECK(nonzero == (r + 1 <= rank_bound(k, n, s)));
                }
            }
}
