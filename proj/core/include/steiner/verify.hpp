#pragma once

#include "steiner/chow.hpp"
#include "steiner/jumping.hpp"
#include "steiner/schwarzenberger.hpp"

namespace steiner::verify {

/// Result of one batch verification; failures carry bounded human-readable
/// detail for the report.
struct SweepReport {
    std::string name;
    bool passed = false;
    long checked = 0;
    std::vector<std::string> failures;

    void fail(const std::string& msg) {
        if (failures.size() < 20)
            failures.push_back(msg);
        passed = false;
    }
};

/// Rank-bound reproduction over the small grid 0 <= k < n <= 4, 1 <= s <= 3:
/// the closed form agrees with min((k+1)(n-k),(n-k)s), and the expected
/// degeneracy class vanishes exactly when the degree exceeds the Grassmannian
/// dimension or the formal Chern-power coefficient dies.
SweepReport rank_bound_sweep();

/// Seeded duality batch: verdict transport between a map and its dual, and
/// double dualization returning the identical map.
SweepReport duality_sweep(int instances = 100, std::uint64_t seed0 = 1000);

/// Seeded rank-deficient batch: reduce is a fixpoint and enumeration sets do
/// not change under reduction.
SweepReport reduction_sweep(int instances = 100, std::uint64_t seed0 = 2000);

/// Seeded valid reduced batch with s >= k+2: every tangent dimension obeys
/// the closed-form upper bound, and a nonnegative expected dimension forces a
/// nonempty enumerated jumping set.
SweepReport bounds_sweep(int instances = 200, std::uint64_t seed0 = 3000);

/// s <= k+1 instances over F_3 for (k,n) in {(1,2),(1,3),(2,3)}: any map that
/// still checks out after reduction must fill the whole tensor space.
SweepReport trivial_range_sweep(std::uint64_t seed0 = 4000);

/// Quotient-induction on the Veronese instance over F_5: induced type and the
/// containment of jumping spaces.
SweepReport induction_check();

/// The classification families at their pinned primes.
SweepReport family_i_check();   // rnc d=2, n=3 over F_5, F_7
SweepReport family_iii_check(); // seeded caseiii k=1, n=2, t=8 over F_5
SweepReport family_iv_check();  // veronese over F_3, F_5

/// Everything above; the CI entry point behind `verify-all`. The instance
/// count scales the three seeded batches (duality and reduction run
/// `instances`, bounds runs twice that); the default matches the pinned
/// acceptance sizes.
std::vector<SweepReport> verify_all(int instances = 100);

/// Coefficient of y^d in (1 + y + ... + y^m)^s, by integer convolution.
/// Independent route for the degeneracy-class vanishing test.
unsigned long long formal_chern_coeff(int m, int s, int d);

/// The pinned seed for the family (iii) acceptance instance.
schw::CaseIIISpec acceptance_caseiii_spec();

} // namespace steiner::verify
