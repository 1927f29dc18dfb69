#include "littlewood/rational.hpp"

#include <cctype>

namespace littlewood {

BigInt rat_floor(const Rational& r) {
    BigInt n = rat_num(r), d = rat_den(r);
    BigInt q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

BigInt rat_ceil(const Rational& r) { return -rat_floor(-r); }

std::string rat_to_string(const Rational& r) {
    BigInt d = rat_den(r);
    std::string s = rat_num(r).str();
    if (d != 1) s += "/" + d.str();
    return s;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigInt parse_int(std::string_view s, std::string_view whole) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw ParseError("invalid rational literal: '" + std::string(whole) + "'");
    BigInt v(std::string(s));
    return neg ? -v : v;
}

}  // namespace

Rational rat_parse(std::string_view text) {
    size_t a = text.find_first_not_of(" \t");
    size_t b = text.find_last_not_of(" \t");
    if (a == std::string_view::npos) throw ParseError("empty rational literal");
    std::string_view s = text.substr(a, b - a + 1);
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s, text));
    BigInt num = parse_int(s.substr(0, slash), text);
    std::string_view den_sv = s.substr(slash + 1);
    if (!all_digits(den_sv)) throw ParseError("invalid rational literal: '" + std::string(text) + "'");
    BigInt den((std::string(den_sv)));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

const Rational& ExtendedRational::value() const {
    if (kind_ != Kind::finite)
        throw UndefinedInfinityArithmetic("value() on an infinite extended rational");
    return value_;
}

ExtendedRational ExtendedRational::operator-() const {
    switch (kind_) {
        case Kind::plus_inf: return minus_inf();
        case Kind::minus_inf: return plus_inf();
        default: return ExtendedRational(-value_);
    }
}

ExtendedRational ExtendedRational::abs() const {
    if (!is_finite()) return plus_inf();
    return ExtendedRational(value_ < 0 ? -value_ : value_);
}

ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.is_finite() && b.is_finite()) return ExtendedRational(a.value_ + b.value_);
    if (a.is_plus_inf() && b.is_minus_inf()) throw UndefinedInfinityArithmetic("inf + (-inf)");
    if (a.is_minus_inf() && b.is_plus_inf()) throw UndefinedInfinityArithmetic("(-inf) + inf");
    return a.is_finite() ? b : a;
}

ExtendedRational operator-(const ExtendedRational& a, const ExtendedRational& b) { return a + (-b); }

ExtendedRational ExtendedRational::scaled(const Rational& c) const {
    if (is_finite()) return ExtendedRational(value_ * c);
    if (c == 0) return ExtendedRational(Rational(0));
    return (c > 0) == is_plus_inf() ? plus_inf() : minus_inf();
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != ExtendedRational::Kind::finite || a.value_ == b.value_;
}

bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
    return a.kind_ == ExtendedRational::Kind::finite && a.value_ < b.value_;
}

std::string ExtendedRational::to_string() const {
    switch (kind_) {
        case Kind::plus_inf: return "inf";
        case Kind::minus_inf: return "-inf";
        default: return rat_to_string(value_);
    }
}

ExtendedRational ExtendedRational::parse(std::string_view text) {
    size_t a = text.find_first_not_of(" \t");
    size_t b = text.find_last_not_of(" \t");
    if (a == std::string_view::npos) throw ParseError("empty extended rational literal");
    std::string_view s = text.substr(a, b - a + 1);
    if (s == "inf" || s == "+inf") return plus_inf();
    if (s == "-inf") return minus_inf();
    return ExtendedRational(rat_parse(s));
}

ExtendedRational er_max(const ExtendedRational& a, const ExtendedRational& b) { return a < b ? b : a; }
ExtendedRational er_min(const ExtendedRational& a, const ExtendedRational& b) { return b < a ? b : a; }

}  // namespace littlewood
