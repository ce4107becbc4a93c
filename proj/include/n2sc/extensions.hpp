#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "n2sc/currents.hpp"
#include "n2sc/fusion.hpp"
#include "n2sc/labels.hpp"

namespace n2sc {

enum class ExceptionalId { a, b, c, d };

inline char exceptional_letter(ExceptionalId id) {
    switch (id) {
        case ExceptionalId::a: return 'a';
        case ExceptionalId::b: return 'b';
        case ExceptionalId::c: return 'c';
        default: return 'd';
    }
}

using ThetaProvenance = std::variant<CurrentGroup, ExceptionalId>;

// Candidate dual canonical endomorphism: a sector with vacuum multiplicity 1,
// plus where it came from.
struct Theta {
    Level level;
    Sector sector;
    ThetaProvenance provenance;
    double index = 0.0; // sum of mult * qdim

    bool is_simple_current() const { return std::holds_alternative<CurrentGroup>(provenance); }
};

// Vacuum row Z_{0,mu} of the modular invariant: multiplicity of mu in theta.
struct InvariantRow {
    std::map<LabelOrbit, long long> entries; // nonzero entries only

    long long at(const LabelOrbit& o) const {
        auto it = entries.find(o);
        return it == entries.end() ? 0 : it->second;
    }
    friend bool operator==(const InvariantRow&, const InvariantRow&) = default;
};

inline Theta theta_from_subgroup(Level level, const CurrentGroup& H) {
    Sector s;
    for (const UnitElement& e : H.elements) {
        if (!is_unit_form(level, e.written_form))
            throw std::invalid_argument("subgroup element " + label_str(e.written_form) +
                                        " is not a simple current at level " +
                                        std::to_string(level.n));
        if (!e.phase.is_zero())
            throw std::invalid_argument("subgroup element " + label_str(e.written_form) +
                                        " has statistics phase exponent " + e.phase.str() +
                                        ", not 0");
        s.add(canonicalize(level, e.written_form), 1);
    }
    for (const UnitElement& x : H.elements)
        for (const UnitElement& y : H.elements)
            if (!H.contains_form(written_product(level, x.written_form, y.written_form)))
                throw std::invalid_argument("subgroup is not closed under fusion");
    if (s.mult(vacuum_orbit(level)) != 1)
        throw std::invalid_argument("subgroup does not contain the vacuum exactly once");
    return Theta{level, s, H, static_cast<double>(H.order())};
}

// The four exceptional extensions: E6-type at level 10, E8-type at level 28.
inline std::vector<Theta> exceptional_catalogue() {
    auto make = [](ExceptionalId id, int n, std::initializer_list<RawLabel> parts) {
        Level level(n);
        Sector s;
        double index = 0.0;
        for (RawLabel w : parts) {
            LabelOrbit o = canonicalize(level, w);
            s.add(o, 1);
            index += qdim(level, o);
        }
        return Theta{level, s, id, index};
    };
    return {
        make(ExceptionalId::a, 10, {{0, 0}, {6, 0}}),
        make(ExceptionalId::b, 10, {{0, 0}, {0, 12}}),
        make(ExceptionalId::c, 10, {{0, 0}, {6, 0}, {0, 12}, {6, 12}}),
        make(ExceptionalId::d, 28, {{0, 0}, {10, 0}, {18, 0}, {28, 0}}),
    };
}

// <alpha_lambda, alpha_mu> = <theta lambda, mu>, as a matrix over the spectrum.
inline Matrix alpha_hom_matrix(Level level, const Theta& theta, const SpectrumTable& table) {
    Matrix M(table.size(), std::vector<long long>(table.size(), 0));
    for (std::size_t i = 0; i < table.size(); ++i) {
        Sector s = fuse_sectors(level, theta.sector, Sector::single(table.orbits[i]));
        for (const auto& [o, k] : s.terms) M[i][table.at(o)] = k;
    }
    return M;
}

inline Matrix alpha_hom_matrix(Level level, const Theta& theta) {
    return alpha_hom_matrix(level, theta, SpectrumTable(level));
}

inline InvariantRow vacuum_row(Level level, const Theta& theta) {
    (void)level;
    return InvariantRow{theta.sector.terms};
}

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ThetaReport {
    std::vector<Check> checks;
    std::vector<std::string> notes; // caveats that are not pass/fail checks

    bool all_passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }
};

// Necessary multiplicity-level conditions only; existence and uniqueness of an
// algebra structure on theta is not decided here.
inline ThetaReport verify_theta(Level level, const Theta& theta) {
    ThetaReport rep;
    auto add = [&rep](std::string name, bool ok, std::string detail) {
        rep.checks.push_back(Check{std::move(name), ok, std::move(detail)});
    };

    long long vac = theta.sector.mult(vacuum_orbit(level));
    add("vacuum multiplicity is 1", vac == 1, "multiplicity " + std::to_string(vac));

    std::string offenders;
    for (const auto& [o, k] : theta.sector.terms) {
        auto [p0, p1] = phase_pair(level, o);
        if (!p0.is_zero() && !p1.is_zero()) {
            if (!offenders.empty()) offenders += ", ";
            offenders += orbit_str(o) + " phases {" + p0.str() + ", " + p1.str() + "}";
        }
    }
    add("every constituent has a statistics-phase-1 written form", offenders.empty(),
        offenders.empty() ? "all constituents admit exponent 0" : offenders);

    bool conj_closed = true;
    for (const auto& [o, k] : theta.sector.terms)
        if (theta.sector.mult(conjugate(level, o)) != k) conj_closed = false;
    add("constituent set is conjugate-closed", conj_closed, "");

    long long self = hom_dim(theta.sector, theta.sector);
    long long square = hom_dim(fuse_sectors(level, theta.sector, theta.sector), theta.sector);
    add("dim Hom(theta^2, theta) >= dim Hom(theta, theta)", square >= self,
        std::to_string(square) + " >= " + std::to_string(self));

    double dim_sum = theta.sector.total_dim(level);
    bool index_ok = std::isfinite(theta.index) && theta.index > 0.0 &&
                    std::abs(theta.index - dim_sum) < 1e-9;
    add("index is finite and matches the dimension sum", index_ok,
        "index " + std::to_string(theta.index));

    if (const auto* H = std::get_if<CurrentGroup>(&theta.provenance)) {
        SpectrumTable table(level);
        Matrix M = alpha_hom_matrix(level, theta, table);
        bool match = true;
        for (std::size_t i = 0; i < table.size() && match; ++i) {
            for (std::size_t j = 0; j < table.size() && match; ++j) {
                long long count = 0;
                for (const UnitElement& sigma : H->elements) {
                    std::vector<RawLabel> prod =
                        raw_fuse(level, sigma.written_form, table.orbits[i].canonical);
                    if (canonicalize(level, prod.front()) == table.orbits[j]) ++count;
                }
                if (M[i][j] != count) match = false;
            }
        }
        add("induction matrix matches subgroup orbit counting", match, "");
    }
    if (std::holds_alternative<ExceptionalId>(theta.provenance))
        rep.notes.push_back("checks are necessary multiplicity-level conditions; the conformal "
                            "embedding origin is not decidable at this level");
    return rep;
}

struct ClassificationEntry {
    Theta theta;
    InvariantRow row;
    ThetaReport verification;

    std::string label() const {
        if (const auto* id = std::get_if<ExceptionalId>(&theta.provenance))
            return std::string("exceptional ") + exceptional_letter(*id);
        const auto& H = std::get<CurrentGroup>(theta.provenance);
        std::string gens;
        for (RawLabel g : H.generators) gens += (gens.empty() ? "" : ", ") + label_str(g);
        if (gens.empty()) gens = "trivial";
        return "simple current " + H.structure.str() + " <" + gens + ">";
    }
};

struct ClassificationReport {
    Level level;
    std::vector<ClassificationEntry> entries;

    bool all_verified() const {
        return std::all_of(entries.begin(), entries.end(),
                           [](const ClassificationEntry& e) { return e.verification.all_passed(); });
    }
};

// Every local simple-current subgroup, plus the exceptional entries at levels
// 10 and 28; each with its vacuum row and verification report.
inline ClassificationReport classify(Level level) {
    if (level.n < 1) throw std::invalid_argument("classify wants level n >= 1");
    ClassificationReport rep{level, {}};
    for (const CurrentGroup& H : local_subgroups(level)) {
        Theta theta = theta_from_subgroup(level, H);
        rep.entries.push_back(
            {theta, vacuum_row(level, theta), verify_theta(level, theta)});
    }
    for (const Theta& theta : exceptional_catalogue()) {
        if (theta.level.n != level.n) continue;
        rep.entries.push_back(
            {theta, vacuum_row(level, theta), verify_theta(level, theta)});
    }
    return rep;
}

} // namespace n2sc
