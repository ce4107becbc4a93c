#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "n2sc/labels.hpp"

using namespace n2sc;

namespace {

LabelOrbit orb(Level level, int l, int m) { return canonicalize(level, RawLabel{l, m}); }

// Brute-force quotient: every raw label paired with its image, orbits counted
// as half the raw count once the pairing is checked to be a fixed-point-free
// involution.
long long quotient_orbit_count(Level level) {
    long long raw = 0;
    for (int l = 0; l <= level.n; ++l)
        for (int m = l % 2; m < level.modulus(); m += 2) {
            RawLabel x{l, m};
            RawLabel p = partner_of(level, x);
            REQUIRE(is_valid(level, p));
            REQUIRE(!(p == x));
            REQUIRE(partner_of(level, p) == x);
            ++raw;
        }
    REQUIRE(raw % 2 == 0);
    return raw / 2;
}

} // namespace

TEST_CASE("central charge") {
    CHECK(central_charge(Level(0)) == Rational(0));
    CHECK(central_charge(Level(1)) == Rational(1));
    CHECK(central_charge(Level(10)) == Rational(5, 2));
    CHECK_THROWS_AS(Level(-1), std::invalid_argument);
}

TEST_CASE("spectrum matches the quotient count for n <= 64") {
    for (int n = 0; n <= 64; ++n) {
        Level level(n);
        auto orbits = spectrum(level);
        long long expected = static_cast<long long>(n + 1) * (n + 2) / 2;
        CHECK(static_cast<long long>(orbits.size()) == expected);
        CHECK(quotient_orbit_count(level) == expected);
        std::set<LabelOrbit> distinct(orbits.begin(), orbits.end());
        CHECK(distinct.size() == orbits.size());
        for (std::size_t i = 1; i < orbits.size(); ++i)
            CHECK(orbits[i - 1].canonical < orbits[i].canonical);
    }
}

TEST_CASE("spectrum small cases") {
    Level one(1);
    auto s1 = spectrum(one);
    REQUIRE(s1.size() == 3);
    CHECK(s1[0].canonical == RawLabel{0, 0});
    CHECK(s1[1].canonical == RawLabel{0, 2});
    CHECK(s1[2].canonical == RawLabel{0, 4});

    CHECK(spectrum(Level(2)).size() == 6);

    auto s0 = spectrum(Level(0));
    REQUIRE(s0.size() == 1);
    CHECK(s0[0].canonical == RawLabel{0, 0});
    CHECK(s0[0].partner == RawLabel{0, 2});
}

TEST_CASE("canonicalize") {
    CHECK(orb(Level(1), 1, 1).canonical == RawLabel{0, 4});
    CHECK(orb(Level(10), 6, 12).canonical == RawLabel{4, 0});
    CHECK(orb(Level(2), 0, 0).canonical == RawLabel{0, 0});

    for (int n = 0; n <= 12; ++n) {
        Level level(n);
        for (int l = 0; l <= n; ++l)
            for (int m = l % 2; m < level.modulus(); m += 2) {
                RawLabel x{l, m};
                LabelOrbit o = canonicalize(level, x);
                CHECK(canonicalize(level, o.canonical) == o);
                CHECK(canonicalize(level, partner_of(level, x)) == o);
                CHECK(o.canonical < o.partner);
            }
    }
}

TEST_CASE("canonicalize rejects invalid labels") {
    Level two(2);
    CHECK_THROWS_AS(canonicalize(two, RawLabel{3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize(two, RawLabel{-1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize(two, RawLabel{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize(two, RawLabel{0, 8}), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize(two, RawLabel{0, -2}), std::invalid_argument);
}

TEST_CASE("weight and charge") {
    CHECK(weight(Level(1), RawLabel{1, 1}) == Rational(1, 6));
    CHECK(weight(Level(10), RawLabel{6, 0}) == Rational(1));
    CHECK(weight(Level(7), RawLabel{0, 0}) == Rational(0));

    CHECK(charge(Level(1), RawLabel{1, 1}) == Rational(-1, 3));
    CHECK(charge(Level(5), RawLabel{0, 0}) == Rational(0));
    CHECK(charge(Level(10), RawLabel{0, 12}) == Rational(-1));
}

TEST_CASE("statistics phase on written representatives") {
    CHECK(statistics_phase(Level(10), RawLabel{10, 0}) == PhaseExponent::of(Rational(1, 2)));
    CHECK(statistics_phase(Level(4), RawLabel{4, 0}) == PhaseExponent::of(Rational(0)));
    CHECK(statistics_phase(Level(10), RawLabel{6, 0}) == PhaseExponent::of(Rational(0)));
}

TEST_CASE("phase pairs") {
    auto [a0, a1] = phase_pair(Level(10), orb(Level(10), 10, 0));
    CHECK(((a0.value == Rational(1, 2) && a1.value == Rational(0)) ||
           (a0.value == Rational(0) && a1.value == Rational(1, 2))));

    auto [v0, v1] = phase_pair(Level(6), vacuum_orbit(Level(6)));
    CHECK(v0.value == Rational(0));
    CHECK(v1.value == Rational(1, 2));

    auto [b0, b1] = phase_pair(Level(1), orb(Level(1), 0, 2));
    CHECK(b0.value == Rational(2, 3));
    CHECK(b1.value == Rational(1, 6));
}

TEST_CASE("phase half-shift law, exact, n <= 64") {
    for (int n = 0; n <= 64; ++n) {
        Level level(n);
        for (const LabelOrbit& o : spectrum(level)) {
            auto [p0, p1] = phase_pair(level, o);
            CHECK((p0 - p1).value == Rational(1, 2));
        }
    }
}

TEST_CASE("m-shift by 2n+4 changes the weight by an integer") {
    for (int n = 0; n <= 20; ++n) {
        Level level(n);
        Rational denom(4LL * (n + 2));
        for (int l = 0; l <= n; ++l)
            for (int m = l % 2; m < level.modulus(); m += 2) {
                long long shifted = m + level.modulus();
                Rational diff = weight(level, RawLabel{l, m}) -
                                Rational(1LL * l * (l + 2) - shifted * shifted) / denom;
                CHECK(diff.is_integer());
            }
    }
}

TEST_CASE("quantum dimensions") {
    CHECK(qdim(Level(0), vacuum_orbit(Level(0))) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(qdim(Level(7), vacuum_orbit(Level(7))) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(qdim(Level(10), orb(Level(10), 6, 0)) ==
          doctest::Approx(2.0 + std::sqrt(3.0)).epsilon(1e-12));
    CHECK(qdim(Level(2), orb(Level(2), 1, 1)) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("qdim is orbit-invariant and the unit predicate matches it, n <= 64") {
    for (int n = 1; n <= 64; ++n) {
        Level level(n);
        double s = std::sin(std::numbers::pi / (n + 2));
        for (const LabelOrbit& o : spectrum(level)) {
            double from_partner = std::sin((o.partner.l + 1) * std::numbers::pi / (n + 2)) / s;
            CHECK(std::abs(qdim(level, o) - from_partner) < 1e-12);
            CHECK(is_unit(level, o) == (std::abs(qdim(level, o) - 1.0) < 1e-9));
        }
    }
}
