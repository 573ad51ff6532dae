#pragma once

#include <optional>
#include <string>
#include <variant>

#include "steiner/jumping.hpp"

namespace steiner::schw {

/// (P^1, O(d), O(n)): s = d+1 sections times n+1 sections multiplying into
/// binary forms of degree d+n.
struct RncSpec {
    int d = 1;
    int n = 2;
};

/// (P^2, O(1), O(1)).
struct VeroneseSpec {};

/// (P^1, E(-1), O(1)) with E the sum of line bundles of the given degrees.
struct SplitP1Spec {
    std::vector<int> degrees;
};

/// (P^{k+1}, O(1), dual-kernel twist): s = k+2 forced; the domain subspace
/// T* is the kernel of an explicit surjection, or of a seeded random one.
struct CaseIIISpec {
    int k = 1;
    int n = 2;
    int t = 8;
    std::optional<Matrix> surjection; // q x s(n+1), full row rank
    std::int64_t prime = 5;           // seeded generation field
    std::uint64_t seed = 0;
};

/// (P^k, O(1), T(-1)): the section counts force a degenerate target
/// Grassmannian; the constructor builds the multiplication anyway and flags it.
struct TangentTwistSpec {
    int k = 1;
};

using TripleSpec = std::variant<RncSpec, VeroneseSpec, SplitP1Spec, CaseIIISpec, TangentTwistSpec>;

struct SectionSpace {
    std::string name;
    int dim = 0;
};

/// A Schwarzenberger construction datum: section spaces of L, M, L tensor M
/// on the base, with the explicit multiplication matrix between them.
struct SchwTriple {
    std::string family;
    int base_dim = 0; // P^{base_dim}
    SectionSpace L, M, LM;
    int k = 0, n = 1, s = 1, t = 1;
    Matrix mult; // s(n+1) x t, row (alpha, j) = image of l_alpha * m_j
    bool degenerate_target = false;
    std::string degeneracy_note;

    SchwTriple() : mult(0, 0, FieldSpec::rationals()) {}
};

SchwTriple build_triple(const TripleSpec& spec);

/// Fiberwise injectivity fails at a specific point.
class InjectivityError : public Error {
public:
    InjectivityError(const std::string& what, GrassmannPoint witness)
        : Error(what), witness(std::move(witness)) {}
    GrassmannPoint witness;
};

/// phi is the transpose of the multiplication matrix. The fiberwise
/// injectivity requirement is verified through the induced point check;
/// a violation throws InjectivityError carrying the witness point.
SteinerMap to_steiner(const SchwTriple& tr, const CheckMode& mode);
SteinerMap to_steiner(const SchwTriple& tr); // exhaustive over a small default prime

/// Named boolean checks per classification family, evaluated by enumeration.
struct FamilyPredicate {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct PrimeFamilyReport {
    std::int64_t prime = 0;
    PrimeJumpingReport jumps;
    std::vector<FamilyPredicate> predicates;
    bool passed = false;
};

struct FamilyReport {
    std::string family;
    int k = 0, n = 0, s = 0, t = 0;
    bool built_ok = false;
    std::string build_error;
    bool reduced = false;
    std::vector<PrimeFamilyReport> per_prime;
    bool passed = false;
};

/// Builds the triple, converts it, and checks the family's structural
/// predicates exhaustively over each given prime.
FamilyReport verify_family(const TripleSpec& spec, const std::vector<std::int64_t>& primes);

/// Degree-d rational-normal-curve image of P^1(F_p): the normalized
/// coordinate vectors (x^d, x^{d-1} y, ..., y^d).
std::vector<std::vector<std::int64_t>> rnc_parameterization(int d, std::int64_t p);

/// Monomial exponent vectors of total degree d in nv variables,
/// lexicographically descending. The basis order behind every mult matrix.
std::vector<std::vector<int>> monomial_basis(int nv, int d);

} // namespace steiner::schw
