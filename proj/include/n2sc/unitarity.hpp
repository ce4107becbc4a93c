#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "n2sc/labels.hpp"
#include "n2sc/rational.hpp"

namespace n2sc {

enum class UnitarityTag { NS1, NS2, NS3, NotUnitary };

inline const char* unitarity_tag_str(UnitarityTag t) {
    switch (t) {
        case UnitarityTag::NS1: return "NS1";
        case UnitarityTag::NS2: return "NS2";
        case UnitarityTag::NS3: return "NS3";
        default: return "NotUnitary";
    }
}

struct NS3Witness {
    int n = 0;
    int l = 0;
    int m = 0; // signed, |m| <= l, l+m even

    friend bool operator==(const NS3Witness&, const NS3Witness&) = default;
};

struct UnitarityClass {
    UnitarityTag tag = UnitarityTag::NotUnitary;
    std::optional<NS3Witness> witness; // set exactly when tag == NS3

    friend bool operator==(const UnitarityClass&, const UnitarityClass&) = default;
};

namespace detail {

inline std::optional<long long> isqrt_exact(long long v) {
    if (v < 0) return std::nullopt;
    auto r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(v))));
    auto sq = [](long long x) { return static_cast<__int128>(x) * x; };
    while (r > 0 && sq(r) > v) --r;
    while (sq(r + 1) <= v) ++r;
    if (sq(r) != v) return std::nullopt;
    return r;
}

inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r.is_negative()) return std::nullopt;
    auto sn = isqrt_exact(r.num());
    auto sd = isqrt_exact(r.den());
    if (!sn || !sd) return std::nullopt;
    return Rational(*sn, *sd);
}

// g(t) = A t^2 - q t + (2h - A) with A = (c-3)/12 is the ground-state energy
// bound at half-integer n = t/2; NS1 demands g >= 0 at every odd t.
inline Rational ns_quadratic(const Rational& A, const Rational& h, const Rational& q,
                             long long t) {
    Rational tt(t);
    return A * tt * tt - q * tt + Rational(2) * h - A;
}

inline long long odd_floor(const Rational& x) {
    long long f = x.floor();
    return (f % 2 != 0) ? f : f - 1;
}

inline bool ns1_holds(const Rational& c, const Rational& h, const Rational& q) {
    if (c < Rational(3)) return false;
    Rational A = (c - Rational(3)) / Rational(12);
    if (A.is_zero()) {
        // Linear in t: bounded below over all odd t only for q = 0.
        return q.is_zero() && h >= Rational(0);
    }
    // Convex quadratic: the infimum over odd t sits at one of the two odd
    // integers bracketing the real vertex t* = q / (2A).
    Rational vertex = q / (Rational(2) * A);
    long long t1 = odd_floor(vertex);
    return ns_quadratic(A, h, q, t1) >= Rational(0) &&
           ns_quadratic(A, h, q, t1 + 2) >= Rational(0);
}

// Odd integer roots of g, exact.
inline std::vector<long long> odd_roots(const Rational& A, const Rational& h,
                                        const Rational& q) {
    std::vector<long long> roots;
    auto push_if_odd_int = [&roots](const Rational& r) {
        if (r.is_integer() && r.num() % 2 != 0) roots.push_back(r.num());
    };
    if (A.is_zero()) {
        if (!q.is_zero()) push_if_odd_int(Rational(2) * h / q);
        return roots;
    }
    Rational disc = q * q - Rational(4) * A * (Rational(2) * h - A);
    if (disc.is_negative()) return roots;
    auto s = rational_sqrt(disc);
    if (!s) return roots;
    push_if_odd_int((q + *s) / (Rational(2) * A));
    if (!s->is_zero()) push_if_odd_int((q - *s) / (Rational(2) * A));
    return roots;
}

inline bool ns2_holds(const Rational& c, const Rational& h, const Rational& q) {
    if (c < Rational(3)) return false;
    Rational third = Rational(2) * (c / Rational(3) - Rational(1)) * h - q * q + c / Rational(3);
    if (third.is_negative()) return false;
    Rational A = (c - Rational(3)) / Rational(12);
    for (long long t : odd_roots(A, h, q)) {
        long long shifted = t + (t > 0 ? 2 : -2); // n + sgn(n) in half-integer units
        if (ns_quadratic(A, h, q, shifted) < Rational(0)) return true;
    }
    return false;
}

inline std::optional<NS3Witness> ns3_witness(const Rational& c, const Rational& h,
                                             const Rational& q) {
    // c = 3n/(n+2)  <=>  n = 2c/(3-c); only integral nonnegative n qualify.
    Rational den = Rational(3) - c;
    if (den <= Rational(0)) return std::nullopt;
    Rational nr = Rational(2) * c / den;
    if (!nr.is_integer() || nr.is_negative()) return std::nullopt;
    long long n = nr.num();
    // q fixes m, h then fixes l(l+2); both must land on integers in range.
    Rational mr = -q * Rational(n + 2);
    if (!mr.is_integer()) return std::nullopt;
    long long m = mr.num();
    if (m < -n || m > n) return std::nullopt;
    Rational lsq = Rational(4) * Rational(n + 2) * h + Rational(m) * Rational(m);
    if (!lsq.is_integer() || lsq.is_negative()) return std::nullopt;
    auto root = isqrt_exact(lsq.num() + 1); // l(l+2) = L  <=>  (l+1)^2 = L+1
    if (!root) return std::nullopt;
    long long l = *root - 1;
    if (l < 0 || l > n || std::llabs(m) > l || ((l ^ m) & 1) != 0) return std::nullopt;
    return NS3Witness{static_cast<int>(n), static_cast<int>(l), static_cast<int>(m)};
}

} // namespace detail

inline UnitarityClass unitarity_class(const Rational& c, const Rational& h, const Rational& q) {
    if (detail::ns1_holds(c, h, q)) return {UnitarityTag::NS1, std::nullopt};
    if (detail::ns2_holds(c, h, q)) return {UnitarityTag::NS2, std::nullopt};
    if (auto w = detail::ns3_witness(c, h, q)) return {UnitarityTag::NS3, w};
    return {UnitarityTag::NotUnitary, std::nullopt};
}

} // namespace n2sc
