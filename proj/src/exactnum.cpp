#include "howe/exactnum.hpp"

#include <cctype>

namespace howe {

Scalar::Scalar(std::int64_t value) {
    value_ = mpq_class(mpz_class(std::to_string(value)));
}

Scalar::Scalar(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw ConstructionError("scalar: zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Scalar::Scalar(const mpq_class& q) : value_(q) {
    value_.canonicalize();
}

std::string Scalar::to_string() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar Scalar::operator-() const {
    Scalar out;
    out.value_ = -value_;
    return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    value_ += rhs.value_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    if (rhs.is_zero()) {
        throw ConstructionError("scalar: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Scalar scalar(std::int64_t p, std::int64_t q) {
    if (q == 0) {
        throw ConstructionError("scalar: zero denominator");
    }
    return Scalar(Integer(std::to_string(p)), Integer(std::to_string(q)));
}

bool is_integer(const Scalar& s) { return s.is_integer(); }

Scalar falling_product(const Scalar& s, std::int64_t count) {
    if (count < 0) {
        throw std::invalid_argument("falling_product: negative count");
    }
    Scalar out(1);
    for (std::int64_t j = 0; j < count; ++j) {
        out *= s - Scalar(j);
    }
    return out;
}

Integer factorial(std::int64_t k) {
    Integer out = 1;
    for (std::int64_t j = 2; j <= k; ++j) {
        out *= static_cast<unsigned long>(j);
    }
    return out;
}

Integer binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    Integer p{std::string(num)};
    Integer q{std::string(den)};
    if (negative) {
        p = -p;
    }
    return Scalar(p, q);
}

std::string to_string(const Scalar& s) { return s.to_string(); }

std::vector<std::string> to_strings(const std::vector<Scalar>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& s : v) {
        out.push_back(s.to_string());
    }
    return out;
}

}  // namespace howe
