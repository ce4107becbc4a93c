#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace n2sc {

// Exact rational over 64-bit integers. Always reduced, denominator > 0.
// Intermediate products go through 128 bits so desk-scale inputs never wrap.
class Rational {
public:
    constexpr Rational() = default;
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) { *this = make(n, d); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    // Representative in [0, 1).
    Rational mod_one() const { return *this - Rational(floor()); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(I128(a.num_) * b.den_ + I128(b.num_) * a.den_, I128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(I128(a.num_) * b.den_ - I128(b.num_) * a.den_, I128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(I128(a.num_) * b.num_, I128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("division by zero rational");
        return make(I128(a.num_) * b.den_, I128(a.den_) * b.num_);
    }
    Rational operator-() const { return make(-I128(num_), den_); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        I128 lhs = I128(a.num_) * b.den_;
        I128 rhs = I128(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    using I128 = __int128;

    static I128 gcd128(I128 a, I128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            I128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational make(I128 n, I128 d) {
        if (d == 0) throw std::domain_error("zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        I128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr I128 lo = INT64_MIN, hi = INT64_MAX;
        if (n < lo || n > hi || d > hi) throw std::overflow_error("rational out of 64-bit range");
        Rational r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }

    long long num_ = 0;
    long long den_ = 1;
};

// Parses "p" or "p/q"; returns nothing on malformed input.
inline std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto parse_ll = [](const std::string& s, long long& out) {
        if (s.empty()) return false;
        std::size_t pos = 0;
        try {
            out = std::stoll(s, &pos);
        } catch (const std::exception&) {
            return false;
        }
        return pos == s.size();
    };
    long long n = 0, d = 1;
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!parse_ll(text, n)) return std::nullopt;
        return Rational(n);
    }
    if (!parse_ll(text.substr(0, slash), n) || !parse_ll(text.substr(slash + 1), d) || d == 0)
        return std::nullopt;
    return Rational(n, d);
}

} // namespace n2sc
