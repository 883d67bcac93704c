#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hcf {

/// Arbitrary-precision integer. Counts ("naturals") are BigInt values that
/// are never negative; signed results (Vandermonde values, polynomial
/// coefficients) share the same type.
using BigInt = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using Exact = mpq_class;

/// Thrown when a value that must be an integer by theorem turns out not to be.
class NonIntegralResult : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Thrown when two evaluations of the same quantity disagree.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// k! for k >= 0, by iterated product. Throws std::invalid_argument for k < 0.
BigInt factorial(std::int64_t k);

/// 1/k!, with the convention 1/(-n)! = 0 for n > 0.
///
/// Every formula whose factorial argument can go negative goes through this
/// function; nothing else encodes the convention.
Exact reciprocal_factorial(std::int64_t k);

/// n choose k; zero outside 0 <= k <= n. Requires n >= 0.
BigInt binomial(std::int64_t n, std::int64_t k);

/// (sum parts)! / prod(parts_i!). Requires every part >= 0.
BigInt multinomial(std::span<const std::int64_t> parts);

/// prod_{i<j} (a_i - a_j). Weakly decreasing input gives a nonnegative value;
/// fewer than two values give 1.
BigInt vandermonde(std::span<const std::int64_t> values);

/// Canonicalized rational num/den. Throws std::domain_error on den == 0.
Exact make_exact(const BigInt& num, const BigInt& den = 1);

bool is_integral(const Exact& value);

/// Numerator of an integral rational; throws NonIntegralResult otherwise.
BigInt to_integer(const Exact& value, const char* what = "value");

std::string to_string(const BigInt& value);
/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Exact& value);

} // namespace hcf
