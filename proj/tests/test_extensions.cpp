#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include "n2sc/extensions.hpp"
#include "n2sc/json_io.hpp"

using namespace n2sc;

namespace {

LabelOrbit orb(Level level, int l, int m) { return canonicalize(level, RawLabel{l, m}); }

Sector sector_of(Level level, std::initializer_list<RawLabel> parts) {
    Sector s;
    for (RawLabel x : parts) s.add(canonicalize(level, x), 1);
    return s;
}

const Check& check_named(const ThetaReport& rep, const std::string& name) {
    for (const Check& c : rep.checks)
        if (c.name == name) return c;
    throw std::out_of_range("no check named " + name);
}

CurrentGroup group_from_forms(Level level, std::initializer_list<RawLabel> forms) {
    CurrentGroup g;
    for (RawLabel x : forms) g.elements.push_back(unit_element(level, x));
    std::sort(g.elements.begin(), g.elements.end());
    return g;
}

// Weight of the phase-1 written form of an orbit.
Rational integral_weight(Level level, const LabelOrbit& o) {
    for (RawLabel rep : {o.canonical, o.partner})
        if (statistics_phase(level, rep).is_zero()) return weight(level, rep);
    throw std::out_of_range("no phase-1 form for " + orbit_str(o));
}

} // namespace

TEST_CASE("theta from subgroups") {
    Level four(4);
    auto l4 = local_subgroups(four);
    REQUIRE(l4.size() == 2);

    Theta trivial = theta_from_subgroup(four, l4[0]);
    CHECK(trivial.sector == Sector::single(vacuum_orbit(four)));
    CHECK(trivial.index == 1.0);

    Theta z2 = theta_from_subgroup(four, l4[1]);
    CHECK(z2.sector == sector_of(four, {{0, 0}, {4, 0}}));
    CHECK(z2.index == 2.0);

    Level ten(10);
    Theta h10 = theta_from_subgroup(ten, local_subgroups(ten)[1]);
    CHECK(h10.sector == sector_of(ten, {{0, 0}, {0, 12}}));
}

TEST_CASE("theta_from_subgroup rejects bad subgroups") {
    // (2,0) at level 2 carries phase exponent 1/2.
    Level two(2);
    CurrentGroup obstructed = group_from_forms(two, {{0, 0}, {2, 0}});
    CHECK_THROWS_WITH_AS(theta_from_subgroup(two, obstructed),
                         doctest::Contains("statistics phase"), std::invalid_argument);

    // {(0,0),(0,12)} at level 16 is phase-1 but misses (0,24).
    Level sixteen(16);
    CurrentGroup open_set = group_from_forms(sixteen, {{0, 0}, {0, 12}});
    CHECK_THROWS_WITH_AS(theta_from_subgroup(sixteen, open_set),
                         doctest::Contains("not closed"), std::invalid_argument);
}

TEST_CASE("exceptional catalogue data") {
    auto cat = exceptional_catalogue();
    REQUIRE(cat.size() == 4);

    Level ten(10);
    Level twenty_eight(28);

    CHECK(cat[0].level.n == 10);
    CHECK(cat[0].sector == sector_of(ten, {{0, 0}, {6, 0}}));
    CHECK(cat[1].level.n == 10);
    CHECK(cat[1].sector == sector_of(ten, {{0, 0}, {0, 12}}));
    CHECK(cat[2].level.n == 10);
    CHECK(cat[2].sector == sector_of(ten, {{0, 0}, {6, 0}, {0, 12}, {6, 12}}));
    CHECK(cat[3].level.n == 28);
    CHECK(cat[3].sector == sector_of(twenty_eight, {{0, 0}, {10, 0}, {18, 0}, {28, 0}}));

    CHECK(std::abs(cat[0].index - (3.0 + std::sqrt(3.0))) < 1e-12);
    CHECK(std::abs(cat[1].index - 2.0) < 1e-12);
    CHECK(std::abs(cat[2].index - 2.0 * (3.0 + std::sqrt(3.0))) < 1e-12);
    double d10 = std::sin(11 * std::numbers::pi / 30) / std::sin(std::numbers::pi / 30);
    CHECK(std::abs(cat[3].index - (2.0 + 2.0 * d10)) < 1e-12);

    // (c) is the combination of (a) and (b): the sector product reproduces it.
    CHECK(fuse_sectors(ten, cat[0].sector, cat[1].sector) == cat[2].sector);

    // (c) is closed under fusion by the order-2 current (0,12).
    LabelOrbit z = orb(ten, 0, 12);
    for (const auto& [o, k] : cat[2].sector.terms) {
        Sector moved = fuse(ten, z, o);
        REQUIRE(moved.terms.size() == 1);
        CHECK(cat[2].sector.mult(moved.terms.begin()->first) == 1);
    }
}

TEST_CASE("exceptional constituents have integral weights in their phase-1 forms") {
    auto cat = exceptional_catalogue();
    Level ten(10);
    Level twenty_eight(28);

    CHECK(integral_weight(ten, orb(ten, 6, 0)) == Rational(1));
    CHECK(integral_weight(ten, orb(ten, 0, 12)) == Rational(-3));
    CHECK(integral_weight(ten, orb(ten, 6, 12)) == Rational(-2));
    CHECK(integral_weight(twenty_eight, orb(twenty_eight, 10, 0)) == Rational(1));
    CHECK(integral_weight(twenty_eight, orb(twenty_eight, 18, 0)) == Rational(3));
    CHECK(integral_weight(twenty_eight, orb(twenty_eight, 28, 0)) == Rational(7));

    for (const Theta& t : cat)
        for (const auto& [o, k] : t.sector.terms)
            CHECK(integral_weight(t.level, o).is_integer());
}

TEST_CASE("alpha_hom_matrix") {
    Level five(5);
    Theta trivial = theta_from_subgroup(five, local_subgroups(five)[0]);
    SpectrumTable t5(five);
    Matrix id = alpha_hom_matrix(five, trivial, t5);
    for (std::size_t i = 0; i < t5.size(); ++i)
        for (std::size_t j = 0; j < t5.size(); ++j) CHECK(id[i][j] == (i == j ? 1 : 0));

    Level ten(10);
    SpectrumTable t10(ten);
    Matrix Ma = alpha_hom_matrix(ten, exceptional_catalogue()[0], t10);
    CHECK(Ma[t10.at(orb(ten, 2, 0))][t10.at(orb(ten, 4, 0))] == 1);

    // At level 4 the Z_2 current (4,0) moves every orbit except the l = 2
    // ones, which it fixes: (4,0)(2,m) = (2,m). Those rows carry a single 2.
    Level four(4);
    SpectrumTable t4(four);
    Matrix Mz = alpha_hom_matrix(four, theta_from_subgroup(four, local_subgroups(four)[1]), t4);
    for (std::size_t i = 0; i < t4.size(); ++i) {
        std::vector<long long> nonzero;
        for (long long v : Mz[i])
            if (v != 0) nonzero.push_back(v);
        if (t4.orbits[i].canonical.l == 2)
            CHECK(nonzero == std::vector<long long>{2});
        else
            CHECK(nonzero == std::vector<long long>{1, 1});
    }
}

TEST_CASE("vacuum rows") {
    Level four(4);
    Theta z2 = theta_from_subgroup(four, local_subgroups(four)[1]);
    InvariantRow row = vacuum_row(four, z2);
    CHECK(row.at(vacuum_orbit(four)) == 1);
    CHECK(row.at(orb(four, 4, 0)) == 1);
    CHECK(row.at(orb(four, 0, 2)) == 0);

    Level ten(10);
    InvariantRow rc = vacuum_row(ten, exceptional_catalogue()[2]);
    CHECK(rc.entries.size() == 4);
    for (const LabelOrbit& o :
         {orb(ten, 0, 0), orb(ten, 6, 0), orb(ten, 0, 12), orb(ten, 6, 12)})
        CHECK(rc.at(o) == 1);
}

TEST_CASE("verify_theta passes on the real candidates") {
    for (const Theta& t : exceptional_catalogue()) {
        ThetaReport rep = verify_theta(t.level, t);
        CHECK(rep.checks.size() == 5);
        CHECK(rep.all_passed());
    }
    for (int n = 1; n <= 12; ++n) {
        Level level(n);
        for (const CurrentGroup& H : local_subgroups(level)) {
            ThetaReport rep = verify_theta(level, theta_from_subgroup(level, H));
            CHECK(rep.checks.size() == 6);
            CHECK(rep.all_passed());
        }
    }
}

TEST_CASE("verify_theta flags an inadmissible candidate") {
    // (1,1) at level 2 has dimension sqrt(2); neither written form has phase 1.
    Level two(2);
    Sector bad = sector_of(two, {{0, 0}, {1, 1}});
    Theta candidate{two, bad, ExceptionalId::a, bad.total_dim(two)};
    ThetaReport rep = verify_theta(two, candidate);
    CHECK(!rep.all_passed());
    CHECK(check_named(rep, "vacuum multiplicity is 1").passed);
    CHECK(!check_named(rep, "every constituent has a statistics-phase-1 written form").passed);
    CHECK(check_named(rep, "index is finite and matches the dimension sum").passed);

    Sector twice;
    twice.add(vacuum_orbit(two), 2);
    Theta doubled{two, twice, ExceptionalId::a, 2.0};
    CHECK(!check_named(verify_theta(two, doubled), "vacuum multiplicity is 1").passed);
}

TEST_CASE("induction matrix equals subgroup orbit counting, n <= 12") {
    for (int n = 1; n <= 12; ++n) {
        Level level(n);
        SpectrumTable table(level);
        for (const CurrentGroup& H : local_subgroups(level)) {
            Theta theta = theta_from_subgroup(level, H);
            Matrix M = alpha_hom_matrix(level, theta, table);
            for (std::size_t i = 0; i < table.size(); ++i) {
                long long row_sum = 0;
                for (std::size_t j = 0; j < table.size(); ++j) {
                    long long count = 0;
                    for (const UnitElement& sigma : H.elements) {
                        auto moved = raw_fuse(level, sigma.written_form, table.orbits[i].canonical);
                        REQUIRE(moved.size() == 1);
                        if (canonicalize(level, moved.front()) == table.orbits[j]) ++count;
                    }
                    CHECK(M[i][j] == count);
                    row_sum += M[i][j];
                }
                CHECK(row_sum == static_cast<long long>(H.order()));
            }
        }
    }
}

TEST_CASE("classification reports") {
    ClassificationReport r1 = classify(Level(1));
    CHECK(r1.entries.size() == 1);
    CHECK(r1.all_verified());

    ClassificationReport r4 = classify(Level(4));
    CHECK(r4.entries.size() == 2);
    CHECK(r4.all_verified());

    ClassificationReport r10 = classify(Level(10));
    REQUIRE(r10.entries.size() == 5);
    CHECK(r10.all_verified());
    std::vector<std::string> kinds;
    for (const auto& e : r10.entries) kinds.push_back(e.label());
    CHECK(kinds[2] == "exceptional a");
    CHECK(kinds[3] == "exceptional b");
    CHECK(kinds[4] == "exceptional c");

    ClassificationReport r28 = classify(Level(28));
    REQUIRE(r28.entries.size() == 3);
    CHECK(r28.all_verified());
    CHECK(r28.entries.back().label() == "exceptional d");

    ClassificationReport r12 = classify(Level(12));
    for (const auto& e : r12.entries) CHECK(e.theta.is_simple_current());

    CHECK_THROWS_AS(classify(Level(0)), std::invalid_argument);
}

TEST_CASE("vacuum row equals the vacuum row of the induction matrix") {
    std::vector<int> levels = {1, 2, 3, 4, 5, 6, 10, 28};
    for (int n : levels) {
        Level level(n);
        SpectrumTable table(level);
        std::size_t vac = table.at(vacuum_orbit(level));
        for (const ClassificationEntry& e : classify(level).entries) {
            Matrix M = alpha_hom_matrix(level, e.theta, table);
            for (std::size_t j = 0; j < table.size(); ++j)
                CHECK(M[vac][j] == e.row.at(table.orbits[j]));
        }
    }
}

TEST_CASE("every theta emitted by classify has integral constituent weights") {
    std::vector<int> levels;
    for (int n = 1; n <= 12; ++n) levels.push_back(n);
    levels.push_back(28);
    for (int n : levels) {
        Level level(n);
        for (const ClassificationEntry& e : classify(level).entries)
            for (const auto& [o, k] : e.theta.sector.terms)
                CHECK(integral_weight(level, o).is_integer());
    }
}

TEST_CASE("exceptional entries carry the necessary-conditions-only note") {
    ClassificationReport r10 = classify(Level(10));
    CHECK(r10.entries[0].verification.notes.empty());
    CHECK(r10.entries[2].verification.notes.size() == 1);
}

TEST_CASE("classification payload is deterministic") {
    auto p1 = io::make_classify_payload(classify(Level(10)));
    auto p2 = io::make_classify_payload(classify(Level(10)));
    CHECK(p1 == p2);
    nlohmann::json j1 = p1, j2 = p2;
    CHECK(j1.dump() == j2.dump());
}
