#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace howe {

using Integer = mpz_class;

/// Raised when a Scalar would have a zero denominator.
class ConstructionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact rational number in canonical form (gcd(num, den) = 1, den > 0).
///
/// Every coefficient in the library lives here: module parameters, basis
/// coefficients, closed-form products. There is no floating point path.
class Scalar {
public:
    Scalar() = default;
    Scalar(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Scalar(const Integer& num, const Integer& den);
    explicit Scalar(const mpq_class& q);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    const mpq_class& raw() const { return value_; }

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.value_ < b.value_; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return a.value_ > b.value_; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return a.value_ <= b.value_; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return a.value_ >= b.value_; }

private:
    mpq_class value_{0};
};

/// p/q reduced; throws ConstructionError when q == 0.
Scalar scalar(std::int64_t p, std::int64_t q = 1);

bool is_integer(const Scalar& s);

/// s (s - 1) ... (s - count + 1); the empty product is 1.
Scalar falling_product(const Scalar& s, std::int64_t count);

Integer factorial(std::int64_t k);
Integer binomial(std::int64_t n, std::int64_t k);

/// Parses "[-+]digits" or "[-+]digits/digits" into canonical form.
/// Throws std::invalid_argument on malformed input, ConstructionError on /0.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& s);
std::vector<std::string> to_strings(const std::vector<Scalar>& v);

}  // namespace howe
