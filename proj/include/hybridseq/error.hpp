#pragma once

#include <stdexcept>
#include <string>

namespace hybridseq {

/// Base of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class division_by_zero : public error {
public:
    division_by_zero() : error("division by zero") {}
};

class radicand_mismatch : public error {
public:
    radicand_mismatch() : error("quadratic-extension operands carry different radicands") {}
};

/// p^2 = q^2 * radicand: the extension splits and p + q*sqrt(radicand) is a zero divisor.
class degenerate_extension : public error {
public:
    using error::error;
};

class invalid_parameters : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    using error::error;
};

/// c^2 - ab - 2c + 1 vanishes; the closed-form partial sum is undefined.
class summation_denominator_zero : public error {
public:
    using error::error;
};

class unknown_family : public error {
public:
    using error::error;
};

}  // namespace hybridseq
