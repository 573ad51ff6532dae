#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "steiner/errors.hpp"

namespace steiner {

enum class FieldKind { rationals, prime_field };

/// Coefficient field: the rationals, or a prime field F_p with p prime.
struct FieldSpec {
    FieldKind kind = FieldKind::rationals;
    std::int64_t p = 0; // modulus, prime_field only

    static FieldSpec rationals() { return FieldSpec{FieldKind::rationals, 0}; }
    static FieldSpec prime_field(std::int64_t p);

    bool is_rationals() const { return kind == FieldKind::rationals; }
    bool is_prime_field() const { return kind == FieldKind::prime_field; }
    std::string str() const;

    bool operator==(const FieldSpec&) const = default;
};

/// Trial-division primality test; adequate for the word-sized moduli used here.
bool is_prime(std::int64_t m);

/// Exact scalar over a FieldSpec: arbitrary-precision rational or an element
/// of F_p stored canonically in [0, p). Values are immutable in spirit; all
/// arithmetic returns fresh scalars and mixing fields throws.
class Scalar {
public:
    Scalar() : field_(FieldSpec::rationals()) {}

    static Scalar zero(const FieldSpec& f) { return integer(0, f); }
    static Scalar one(const FieldSpec& f) { return integer(1, f); }
    static Scalar integer(std::int64_t v, const FieldSpec& f);
    static Scalar rational(const mpq_class& v);
    static Scalar mod_p(std::int64_t v, std::int64_t p);
    /// Parses "p", "-p" or "p/q" (rationals), or an integer (prime fields).
    static Scalar parse(const std::string& text, const FieldSpec& f);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// "p/q" or "p" for rationals; decimal residue for prime fields.
    std::string str() const;

    const mpq_class& rat() const;
    std::int64_t residue() const;

    /// Image under Q -> F_p; throws BadReductionError if p divides the denominator.
    Scalar reduced_mod(std::int64_t p) const;

private:
    FieldSpec field_;
    mpq_class rat_;          // kind == rationals
    std::int64_t val_ = 0;   // kind == prime_field, in [0, p)

    void check_same_field(const Scalar& o) const;
};

} // namespace steiner
