#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "n2sc/rational.hpp"

namespace n2sc {

// Level n of the discrete series; central charge c = 3n/(n+2).
struct Level {
    int n = 0;

    explicit Level(int level) : n(level) {
        if (level < 0) throw std::invalid_argument("level must be a nonnegative integer");
    }

    // The charge label m lives in Z/(2n+4).
    int modulus() const { return 2 * n + 4; }

    friend bool operator==(Level a, Level b) { return a.n == b.n; }
};

inline Rational central_charge(Level level) {
    return Rational(3LL * level.n, level.n + 2);
}

// A sector label (l, m): 0 <= l <= n, 0 <= m < 2n+4, l = m (mod 2).
struct RawLabel {
    int l = 0;
    int m = 0;

    friend auto operator<=>(const RawLabel&, const RawLabel&) = default;
};

inline std::string label_str(RawLabel x) {
    return "(" + std::to_string(x.l) + "," + std::to_string(x.m) + ")";
}

inline bool is_valid(Level level, RawLabel x) {
    return x.l >= 0 && x.l <= level.n && x.m >= 0 && x.m < level.modulus() &&
           ((x.l ^ x.m) & 1) == 0;
}

inline void require_valid(Level level, RawLabel x) {
    if (x.l < 0 || x.l > level.n)
        throw std::invalid_argument("label " + label_str(x) + " violates 0 <= l <= " +
                                    std::to_string(level.n));
    if (x.m < 0 || x.m >= level.modulus())
        throw std::invalid_argument("label " + label_str(x) + " violates 0 <= m < " +
                                    std::to_string(level.modulus()));
    if (((x.l ^ x.m) & 1) != 0)
        throw std::invalid_argument("label " + label_str(x) +
                                    " violates the parity constraint l = m (mod 2)");
}

// The other representative under (l, m) ~ (n-l, m+n+2).
inline RawLabel partner_of(Level level, RawLabel x) {
    return RawLabel{level.n - x.l, (x.m + level.n + 2) % level.modulus()};
}

// An irreducible sector: the two-element orbit of a label under the
// identification. The identification is fixed-point free (n+2 is never 0 mod
// 2n+4), so canonical != partner always holds.
struct LabelOrbit {
    RawLabel canonical; // lexicographically smaller representative, (l, m) order
    RawLabel partner;

    friend bool operator==(const LabelOrbit& a, const LabelOrbit& b) {
        return a.canonical == b.canonical;
    }
    friend auto operator<=>(const LabelOrbit& a, const LabelOrbit& b) {
        return a.canonical <=> b.canonical;
    }
};

inline std::string orbit_str(const LabelOrbit& o) { return label_str(o.canonical); }

inline LabelOrbit canonicalize(Level level, RawLabel x) {
    require_valid(level, x);
    RawLabel p = partner_of(level, x);
    return x < p ? LabelOrbit{x, p} : LabelOrbit{p, x};
}

inline LabelOrbit vacuum_orbit(Level level) {
    return canonicalize(level, RawLabel{0, 0});
}

// All orbits, each exactly once, sorted by canonical representative.
// Count is (n+1)(n+2)/2.
inline std::vector<LabelOrbit> spectrum(Level level) {
    std::vector<LabelOrbit> orbits;
    orbits.reserve(static_cast<std::size_t>(level.n + 1) * (level.n + 2) / 2);
    for (int l = 0; l <= level.n; ++l) {
        for (int m = l % 2; m < level.modulus(); m += 2) {
            RawLabel x{l, m};
            RawLabel p = partner_of(level, x);
            if (x < p) orbits.push_back(LabelOrbit{x, p});
        }
    }
    return orbits;
}

// Conformal weight h = (l(l+2) - m^2) / (4(n+2)), taken on the stored
// representative with m in [0, 2n+4). Exact, may be negative.
inline Rational weight(Level level, RawLabel x) {
    require_valid(level, x);
    return Rational(static_cast<long long>(x.l) * (x.l + 2) -
                        static_cast<long long>(x.m) * x.m,
                    4LL * (level.n + 2));
}

inline Rational charge(Level level, RawLabel x) {
    require_valid(level, x);
    return Rational(-x.m, level.n + 2);
}

// Exponent t of a phase omega = exp(2 pi i t), exact rational in [0, 1).
struct PhaseExponent {
    Rational value;

    static PhaseExponent of(const Rational& r) { return PhaseExponent{r.mod_one()}; }
    bool is_zero() const { return value.is_zero(); }
    std::string str() const { return value.str(); }

    friend PhaseExponent operator+(const PhaseExponent& a, const PhaseExponent& b) {
        return of(a.value + b.value);
    }
    friend PhaseExponent operator-(const PhaseExponent& a, const PhaseExponent& b) {
        return of(a.value - b.value);
    }
    friend bool operator==(const PhaseExponent&, const PhaseExponent&) = default;
};

// Statistics phase of a written representative. The two representatives of an
// orbit give exponents differing by exactly 1/2 mod 1; orbit-level callers
// should use phase_pair and pick deliberately.
inline PhaseExponent statistics_phase(Level level, RawLabel x) {
    return PhaseExponent::of(weight(level, x));
}

inline std::pair<PhaseExponent, PhaseExponent> phase_pair(Level level, const LabelOrbit& o) {
    return {statistics_phase(level, o.canonical), statistics_phase(level, o.partner)};
}

// Quantum dimension sin((l+1)pi/(n+2)) / sin(pi/(n+2)); well defined on orbits
// since l and n-l give the same value.
inline double qdim(Level level, const LabelOrbit& o) {
    if (level.n == 0) return 1.0;
    const double step = std::numbers::pi / (level.n + 2);
    return std::sin((o.canonical.l + 1) * step) / std::sin(step);
}

// Exact unit test: dimension 1 iff l is 0 or n. Classification logic must use
// this, never the float.
inline bool is_unit(Level level, const LabelOrbit& o) {
    return o.canonical.l == 0 || o.canonical.l == level.n;
}

} // namespace n2sc
