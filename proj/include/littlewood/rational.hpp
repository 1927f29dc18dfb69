#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "littlewood/errors.hpp"

namespace littlewood {

// Exact arbitrary-precision scalars. cpp_rational keeps gcd-reduced form with
// a positive denominator, which is exactly the canonical form we need.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// 2^-n as an exact rational.
inline Rational pow2_inv(int n) { return Rational(BigInt(1), BigInt(1) << n); }
inline Rational pow2(int n) { return Rational(BigInt(1) << n); }

BigInt rat_floor(const Rational& r);
BigInt rat_ceil(const Rational& r);

// Serialization: "p/q", or just "p" when q = 1. No decimal notation anywhere.
std::string rat_to_string(const Rational& r);
Rational rat_parse(std::string_view text);

// A rational extended with the two infinities; totally ordered.
class ExtendedRational {
public:
    ExtendedRational() : kind_(Kind::finite), value_(0) {}
    ExtendedRational(Rational v) : kind_(Kind::finite), value_(std::move(v)) {}
    ExtendedRational(int v) : kind_(Kind::finite), value_(v) {}

    static ExtendedRational plus_inf() { return ExtendedRational(Kind::plus_inf); }
    static ExtendedRational minus_inf() { return ExtendedRational(Kind::minus_inf); }

    bool is_finite() const { return kind_ == Kind::finite; }
    bool is_plus_inf() const { return kind_ == Kind::plus_inf; }
    bool is_minus_inf() const { return kind_ == Kind::minus_inf; }

    // Only valid for finite values.
    const Rational& value() const;

    ExtendedRational operator-() const;
    ExtendedRational abs() const;

    // +/- throw UndefinedInfinityArithmetic when the result would be inf - inf.
    friend ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b);
    friend ExtendedRational operator-(const ExtendedRational& a, const ExtendedRational& b);

    // Scaling adopts the simple-function convention 0 * inf = 0.
    ExtendedRational scaled(const Rational& c) const;

    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
    friend bool operator!=(const ExtendedRational& a, const ExtendedRational& b) { return !(a == b); }
    friend bool operator<(const ExtendedRational& a, const ExtendedRational& b);
    friend bool operator>(const ExtendedRational& a, const ExtendedRational& b) { return b < a; }
    friend bool operator<=(const ExtendedRational& a, const ExtendedRational& b) { return !(b < a); }
    friend bool operator>=(const ExtendedRational& a, const ExtendedRational& b) { return !(a < b); }

    std::string to_string() const;
    static ExtendedRational parse(std::string_view text);

private:
    enum class Kind { minus_inf, finite, plus_inf };
    explicit ExtendedRational(Kind k) : kind_(k), value_(0) {}

    Kind kind_;
    Rational value_;
};

ExtendedRational er_max(const ExtendedRational& a, const ExtendedRational& b);
ExtendedRational er_min(const ExtendedRational& a, const ExtendedRational& b);

}  // namespace littlewood
