/**
 * Exact rational arithmetic over checked 64-bit integers.
 *
 * All curvature values in this library are rationals; nothing is ever
 * rounded to floating point. Overflow raises OverflowError instead of
 * wrapping. Denominators of curvature values divide 2*k0*k1*k2, which
 * fits comfortably for word lengths up to 10^6.
 */
#ifndef CHERN_RATIONAL_HPP
#define CHERN_RATIONAL_HPP

#include <cstdint>
#include <compare>
#include <numeric>
#include <ostream>
#include <string>

#include "chern/errors.hpp"

namespace chern {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer addition overflows 64 bits");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer subtraction overflows 64 bits");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer multiplication overflows 64 bits");
    return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

inline std::uint64_t magnitude(std::int64_t x) {
    return x < 0 ? std::uint64_t(0) - std::uint64_t(x) : std::uint64_t(x);
}

} // namespace detail

/// Reduced fraction p/q with q > 0 and gcd(|p|, q) = 1.
class Rational {
public:
    Rational() = default;

    Rational(std::int64_t numerator, std::int64_t denominator = 1)
        : num_(numerator), den_(denominator) {
        normalize();
    }

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    Rational operator-() const {
        Rational r;
        r.num_ = detail::checked_neg(num_);
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        // gcd-reduced cross sum keeps intermediates near the reduced result
        const std::int64_t g = std::gcd(den_, o.den_);
        const std::int64_t lhs = detail::checked_mul(num_, o.den_ / g);
        const std::int64_t rhs = detail::checked_mul(o.num_, den_ / g);
        num_ = detail::checked_add(lhs, rhs);
        den_ = detail::checked_mul(den_, o.den_ / g);
        normalize();
        return *this;
    }

    Rational& operator-=(const Rational& o) { return *this += -o; }

    Rational& operator*=(const Rational& o) {
        // cross-reduce before multiplying; both gcds fit in int64 because
        // they divide a positive denominator
        const auto g1 = std::int64_t(std::gcd(detail::magnitude(num_), std::uint64_t(o.den_)));
        const auto g2 = std::int64_t(std::gcd(detail::magnitude(o.num_), std::uint64_t(den_)));
        num_ = detail::checked_mul(num_ / g1, o.num_ / g2);
        den_ = detail::checked_mul(den_ / g2, o.den_ / g1);
        normalize();
        return *this;
    }

    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0)
            throw Error("division of rational by zero");
        Rational inv;
        inv.num_ = o.num_ < 0 ? detail::checked_neg(o.den_) : o.den_;
        inv.den_ = o.num_ < 0 ? detail::checked_neg(o.num_) : o.num_;
        return *this *= inv;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) = default;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // denominators are positive, so cross multiplication preserves order
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    /// Renders "p/q" reduced with q > 0, or a bare integer when q = 1.
    std::string str() const {
        if (den_ == 1)
            return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    void normalize() {
        if (den_ == 0)
            throw Error("rational with zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        const bool negative = (num_ < 0) != (den_ < 0);
        std::uint64_t un = detail::magnitude(num_);
        std::uint64_t ud = detail::magnitude(den_);
        const std::uint64_t g = std::gcd(un, ud);
        un /= g;
        ud /= g;
        const std::uint64_t max_mag = std::uint64_t(INT64_MAX) + (negative ? 1u : 0u);
        if (un > max_mag || ud > std::uint64_t(INT64_MAX))
            throw OverflowError("reduced rational exceeds 64 bits");
        den_ = std::int64_t(ud);
        num_ = negative ? std::int64_t(std::uint64_t(0) - un) : std::int64_t(un);
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace chern

#endif // CHERN_RATIONAL_HPP
