#ifndef WREP_RATIONAL_HPP
#define WREP_RATIONAL_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace wrep {

/// Library-wide error with a stable machine-readable code ("invalid_pyramid",
/// "not_standard", ...) plus a human detail message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

namespace detail {

using int128 = __int128;

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw Error("overflow", "integer overflow in addition");
    return r;
}

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("overflow", "integer overflow in multiplication");
    return r;
}

inline int128 iabs(int128 a) { return a < 0 ? -a : a; }

inline int128 igcd(int128 a, int128 b) {
    a = iabs(a);
    b = iabs(b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::string int128_to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // -2^127 cannot arise from reduced rationals we build, but stay safe.
    unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
    std::string s;
    while (u > 0) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
}

} // namespace detail

/// Exact rational number on 128-bit integers, always stored reduced with a
/// positive denominator. Arithmetic overflow throws rather than wrapping.
class Rational {
public:
    using Int = detail::int128;

    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(Int n, Int d) : num_(n), den_(d) { reduce(); }

    static Rational from_string(const std::string& s) {
        auto bad = [&] { throw Error("parse", "bad rational literal '" + s + "'"); };
        if (s.empty()) bad();
        std::size_t slash = s.find('/');
        auto parse_int = [&](const std::string& t) -> Int {
            if (t.empty() || t == "-" || t == "+") bad();
            std::size_t i = 0;
            bool neg = false;
            if (t[0] == '-' || t[0] == '+') { neg = t[0] == '-'; i = 1; }
            Int v = 0;
            for (; i < t.size(); ++i) {
                if (t[i] < '0' || t[i] > '9') bad();
                v = detail::checked_add(detail::checked_mul(v, 10), t[i] - '0');
            }
            return neg ? -v : v;
        };
        if (slash == std::string::npos) return Rational(parse_int(s), 1);
        Int d = parse_int(s.substr(slash + 1));
        if (d == 0) bad();
        return Rational(parse_int(s.substr(0, slash)), d);
    }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    /// true iff this is a non-negative integer (membership in N).
    bool is_natural() const { return den_ == 1 && num_ >= 0; }

    long long to_ll() const {
        if (den_ != 1) throw Error("integral_only", "rational " + to_string() + " is not an integer");
        if (num_ > (Int)INT64_MAX || num_ < (Int)INT64_MIN) throw Error("overflow", "integer too large");
        return (long long)num_;
    }

    /// floor(this) as a rational integer.
    Rational floor() const {
        Int q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return Rational(q, 1);
    }

    /// Canonical fractional part in [0,1); entries in the same Z-coset share it.
    Rational frac() const { return *this - floor(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Int g = detail::igcd(a.den_, b.den_);
        Int bd = b.den_ / g;
        Int n = detail::checked_add(detail::checked_mul(a.num_, bd), detail::checked_mul(b.num_, a.den_ / g));
        return Rational(n, detail::checked_mul(a.den_, bd));
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Int g1 = detail::igcd(a.num_, b.den_);
        Int g2 = detail::igcd(b.num_, a.den_);
        return Rational(detail::checked_mul(a.num_ / g1, b.num_ / g2),
                        detail::checked_mul(a.den_ / g2, b.den_ / g1), already_reduced{});
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw Error("overflow", "division by zero");
        return a * Rational(b.den_, b.num_);
    }
    Rational operator-() const { return Rational(-num_, den_, already_reduced{}); }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return detail::checked_mul(a.num_, b.den_) < detail::checked_mul(b.num_, a.den_);
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string to_string() const {
        std::string s = detail::int128_to_string(num_);
        if (den_ != 1) s += "/" + detail::int128_to_string(den_);
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    struct already_reduced {};
    Rational(Int n, Int d, already_reduced) : num_(n), den_(d) {}

    void reduce() {
        if (den_ == 0) throw Error("overflow", "zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        Int g = detail::igcd(num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    Int num_, den_;
};

/// Partial order on the ground field: a >= b iff a-b is a natural number.
inline bool field_geq(const Rational& a, const Rational& b) { return (a - b).is_natural(); }
inline bool field_gt(const Rational& a, const Rational& b) {
    Rational d = a - b;
    return d.is_natural() && !d.is_zero();
}
inline bool same_coset(const Rational& a, const Rational& b) { return (a - b).is_integer(); }

/// Total order refining field_geq comparability: sort by coset bucket
/// (canonical fractional part) first, then by value.
inline bool canonical_less(const Rational& a, const Rational& b) {
    Rational fa = a.frac(), fb = b.frac();
    if (fa != fb) return fa < fb;
    return a < b;
}

} // namespace wrep

#endif // WREP_RATIONAL_HPP
