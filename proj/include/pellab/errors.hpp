#pragma once

#include <stdexcept>
#include <string>

namespace pellab {

/// Base class for every error raised by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// d < 2 or d is a perfect square: sqrt(d) has no periodic expansion and the
/// caller must use the factoring route instead.
class perfect_square_error : public error {
public:
    using error::error;
};

/// m = 0, or |m| outside the range a residue-set query supports (m^2 >= d).
class magnitude_error : public error {
public:
    using error::error;
};

/// gcd(a, b) != 1: the equation a x^2 - b y^2 = 1 is malformed for this API.
class not_coprime_error : public error {
public:
    using error::error;
};

/// The surd is not reduced; pure periodicity must not be assumed.
class not_reduced_error : public error {
public:
    using error::error;
};

/// (u, v) is not canonical for d (v does not divide d - u^2); scale the
/// triple first, see canonical_scaled().
class normalization_error : public error {
public:
    using error::error;
};

/// Signals an implementation bug, never invalid input.
class internal_error : public error {
public:
    using error::error;
};

/// Safety cap on period-detection iterations exceeded.
class period_overflow_error final : public internal_error {
public:
    using internal_error::internal_error;
};

/// An exact division required by a proven identity failed.
class divisibility_error final : public internal_error {
public:
    using internal_error::internal_error;
};

}  // namespace pellab
