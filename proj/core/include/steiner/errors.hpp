#pragma once

#include <stdexcept>
#include <string>

namespace steiner {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Mixing scalars or matrices from different fields.
class FieldMismatchError : public Error {
public:
    using Error::Error;
};

/// Reduction mod p of a rational with denominator divisible by p.
class BadReductionError : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed its configured point budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// Malformed JSON input or schema violation.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace steiner
