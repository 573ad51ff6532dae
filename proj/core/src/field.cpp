#include "steiner/field.hpp"

namespace steiner {

namespace {

std::int64_t mod_norm(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

// Extended Euclid; v must be nonzero mod p.
std::int64_t mod_inv(std::int64_t v, std::int64_t p) {
    std::int64_t a = mod_norm(v, p), b = p;
    std::int64_t x0 = 1, x1 = 0;
    while (b != 0) {
        std::int64_t q = a / b;
        std::int64_t tmp = a - q * b;
        a = b;
        b = tmp;
        tmp = x0 - q * x1;
        x0 = x1;
        x1 = tmp;
    }
    if (a != 1)
        throw Error("mod_inv: element not invertible");
    return mod_norm(x0, p);
}

} // namespace

bool is_prime(std::int64_t m) {
    if (m < 2)
        return false;
    for (std::int64_t d = 2; d * d <= m; ++d)
        if (m % d == 0)
            return false;
    return true;
}

FieldSpec FieldSpec::prime_field(std::int64_t p) {
    if (!is_prime(p))
        throw Error("prime_field: characteristic " + std::to_string(p) + " is not prime");
    return FieldSpec{FieldKind::prime_field, p};
}

std::string FieldSpec::str() const {
    return is_rationals() ? "Q" : "F" + std::to_string(p);
}

Scalar Scalar::integer(std::int64_t v, const FieldSpec& f) {
    Scalar s;
    s.field_ = f;
    if (f.is_rationals())
        s.rat_ = mpq_class(static_cast<long>(v));
    else
        s.val_ = mod_norm(v, f.p);
    return s;
}

Scalar Scalar::rational(const mpq_class& v) {
    Scalar s;
    s.field_ = FieldSpec::rationals();
    s.rat_ = v;
    s.rat_.canonicalize();
    return s;
}

Scalar Scalar::mod_p(std::int64_t v, std::int64_t p) {
    return integer(v, FieldSpec::prime_field(p));
}

Scalar Scalar::parse(const std::string& text, const FieldSpec& f) {
    try {
        if (f.is_rationals()) {
            mpq_class q(text);
            if (q.get_den() == 0)
                throw ParseError("scalar with zero denominator: " + text);
            q.canonicalize();
            return rational(q);
        }
        std::size_t pos = 0;
        std::int64_t v = std::stoll(text, &pos);
        if (pos != text.size())
            throw ParseError("bad prime-field scalar: " + text);
        return integer(v, f);
    } catch (const std::invalid_argument&) {
        throw ParseError("unparseable scalar: " + text);
    }
}

bool Scalar::is_zero() const {
    return field_.is_rationals() ? rat_ == 0 : val_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rationals() ? rat_ == 1 : val_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw FieldMismatchError("scalar fields differ: " + field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar r;
    r.field_ = field_;
    if (field_.is_rationals())
        r.rat_ = rat_ + o.rat_;
    else
        r.val_ = mod_norm(val_ + o.val_, field_.p);
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Scalar r;
    r.field_ = field_;
    if (field_.is_rationals())
        r.rat_ = rat_ - o.rat_;
    else
        r.val_ = mod_norm(val_ - o.val_, field_.p);
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar r;
    r.field_ = field_;
    if (field_.is_rationals())
        r.rat_ = rat_ * o.rat_;
    else
        r.val_ = mod_mul(val_, o.val_, field_.p);
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.field_ = field_;
    if (field_.is_rationals())
        r.rat_ = -rat_;
    else
        r.val_ = mod_norm(-val_, field_.p);
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw Error("inverse of zero");
    Scalar r;
    r.field_ = field_;
    if (field_.is_rationals())
        r.rat_ = 1 / rat_;
    else
        r.val_ = mod_inv(val_, field_.p);
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return field_.is_rationals() ? rat_ == o.rat_ : val_ == o.val_;
}

std::string Scalar::str() const {
    if (field_.is_rationals())
        return rat_.get_str();
    return std::to_string(val_);
}

const mpq_class& Scalar::rat() const {
    if (!field_.is_rationals())
        throw FieldMismatchError("rat() on a prime-field scalar");
    return rat_;
}

std::int64_t Scalar::residue() const {
    if (!field_.is_prime_field())
        throw FieldMismatchError("residue() on a rational scalar");
    return val_;
}

Scalar Scalar::reduced_mod(std::int64_t p) const {
    if (field_.is_prime_field()) {
        if (field_.p != p)
            throw BadReductionError("scalar already lives in " + field_.str());
        return *this;
    }
    mpz_class num = rat_.get_num(), den = rat_.get_den();
    mpz_class pz(static_cast<long>(p));
    if (mpz_divisible_p(den.get_mpz_t(), pz.get_mpz_t()))
        throw BadReductionError("denominator divisible by " + std::to_string(p));
    mpz_class nr = num % pz, dr = den % pz;
    std::int64_t nv = mod_norm(nr.get_si(), p);
    std::int64_t dv = mod_norm(dr.get_si(), p);
    return mod_p(mod_mul(nv, mod_inv(dv, p), p), p);
}

} // namespace steiner
