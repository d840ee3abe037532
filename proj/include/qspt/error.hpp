#pragma once

// Exception types raised by the qspt library. Every error derives from
// qspt::Error so callers can catch the whole family at once.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qspt {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inversion of a series whose coefficient at the valuation is zero.
class LeadingZero : public Error {
public:
    using Error::Error;
};

/// A coefficient was requested at or beyond the series precision.
class OutOfPrecision : public Error {
public:
    using Error::Error;
};

/// A series is not supported on the progression an operator requires.
class BadSupport : public Error {
public:
    using Error::Error;
};

/// A modulus that should be an odd prime (or a prime >= 5) is not.
class BadModulus : public Error {
public:
    using Error::Error;
};

/// Brute-force enumeration requested beyond its guard.
class EnumerationLimit : public Error {
public:
    using Error::Error;
};

/// A series is not a combination of the B_m(j) basis.
class NotInSpan : public Error {
public:
    using Error::Error;
};

class UnknownName : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// A partition table does not reach an index that a formula consumes.
/// `required()` is the table size that would have sufficed.
class TableTooSmall : public Error {
public:
    TableTooSmall(const std::string& what, std::int64_t required)
        : Error(what + " (tables must reach n = " + std::to_string(required) + ")"),
          required_(required)
    {
    }

    std::int64_t required() const noexcept { return required_; }

private:
    std::int64_t required_;
};

} // namespace qspt
