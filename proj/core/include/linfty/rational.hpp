#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace linfty {

/// Exact rational scalar. Everything in this library computes over Q;
/// there is no floating point anywhere.
using Scalar = mpq_class;

/// Dense coefficient vector over a basis.
using Vec = std::vector<Scalar>;

/// Canonicalized rational from a numerator/denominator pair.
/// Throws std::invalid_argument on zero denominator.
Scalar scalar(long num, long den = 1);

/// Parses "p", "-p" or "p/q" with arbitrary-precision digits.
Scalar parse_scalar(const std::string& text);

/// Canonical text form: bare integer when the denominator is 1,
/// otherwise "p/q" with q > 0 and gcd(p, q) = 1.
std::string scalar_str(const Scalar& q);

inline bool is_zero(const Scalar& q) { return sgn(q) == 0; }

}  // namespace linfty
