#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "n2sc/fusion.hpp"
#include "n2sc/labels.hpp"

namespace n2sc {

// A simple current in a chosen written form. Every dimension-1 orbit carries
// two written forms, (0, m) and (n, m+n+2), whose phase exponents differ by
// 1/2; group-theoretic work below tracks the forms, not just the orbits.
struct UnitElement {
    LabelOrbit orbit;
    RawLabel written_form;
    PhaseExponent phase;

    friend bool operator==(const UnitElement& a, const UnitElement& b) {
        return a.written_form == b.written_form;
    }
    friend auto operator<=>(const UnitElement& a, const UnitElement& b) {
        return a.written_form <=> b.written_form;
    }
};

inline bool is_unit_form(Level level, RawLabel x) {
    return is_valid(level, x) && (x.l == 0 || x.l == level.n);
}

inline UnitElement unit_element(Level level, RawLabel written) {
    if (!is_unit_form(level, written))
        throw std::invalid_argument("label " + label_str(written) + " is not a simple current");
    return UnitElement{canonicalize(level, written), written, statistics_phase(level, written)};
}

// Product of written forms; for simple currents the fusion formula has a
// single output.
inline RawLabel written_product(Level level, RawLabel a, RawLabel b) {
    if (!is_unit_form(level, a) || !is_unit_form(level, b))
        throw std::invalid_argument("written_product wants simple-current forms");
    return RawLabel{a.l == b.l ? 0 : level.n, (a.m + b.m) % level.modulus()};
}

inline RawLabel written_power(Level level, RawLabel a, int k) {
    RawLabel acc{0, 0};
    for (int i = 0; i < k; ++i) acc = written_product(level, acc, a);
    return acc;
}

// Z_a x Z_b in invariant-factor form (b divides a, b == 1 means cyclic).
struct GroupStructure {
    long long a = 1;
    long long b = 1;

    bool cyclic() const { return b == 1; }
    long long order() const { return a * b; }
    std::string str() const {
        return cyclic() ? "Z_" + std::to_string(a)
                        : "Z_" + std::to_string(a) + " x Z_" + std::to_string(b);
    }
    friend bool operator==(const GroupStructure&, const GroupStructure&) = default;
};

struct CurrentGroup {
    std::vector<UnitElement> elements; // sorted by written form, closed under fusion
    GroupStructure structure;
    std::vector<RawLabel> generators;

    std::size_t order() const { return elements.size(); }

    bool contains_form(RawLabel x) const {
        return std::any_of(elements.begin(), elements.end(),
                           [&x](const UnitElement& e) { return e.written_form == x; });
    }

    friend bool operator==(const CurrentGroup& a, const CurrentGroup& b) {
        return a.elements == b.elements;
    }
};

// All simple currents: both written forms of every orbit with l in {0, n}.
// 2(n+2) elements covering n+2 orbits, sorted orbit-major.
inline std::vector<UnitElement> units(Level level) {
    if (level.n < 1) throw std::invalid_argument("units wants level n >= 1");
    std::vector<UnitElement> out;
    for (const LabelOrbit& o : spectrum(level)) {
        if (!is_unit(level, o)) continue;
        out.push_back(UnitElement{o, o.canonical, statistics_phase(level, o.canonical)});
        out.push_back(UnitElement{o, o.partner, statistics_phase(level, o.partner)});
    }
    return out;
}

namespace detail {

inline std::set<RawLabel> closure(Level level, const std::vector<RawLabel>& generators) {
    std::set<RawLabel> elems{RawLabel{0, 0}};
    std::vector<RawLabel> frontier(elems.begin(), elems.end());
    while (!frontier.empty()) {
        std::vector<RawLabel> next;
        for (RawLabel x : frontier)
            for (RawLabel g : generators) {
                RawLabel y = written_product(level, x, g);
                if (elems.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return elems;
}

inline int element_order(Level level, RawLabel x) {
    RawLabel acc = x;
    int k = 1;
    while (!(acc == RawLabel{0, 0})) {
        acc = written_product(level, acc, x);
        ++k;
    }
    return k;
}

// Abelian of rank <= 2, so (order, exponent) pins the isomorphism type.
inline GroupStructure structure_of(Level level, const std::set<RawLabel>& elems) {
    long long exponent = 1;
    for (RawLabel x : elems) exponent = std::max<long long>(exponent, element_order(level, x));
    return GroupStructure{exponent, static_cast<long long>(elems.size()) / exponent};
}

// Deterministic generating set: smallest element of maximal order, plus the
// smallest element outside its span when the group is not cyclic.
inline std::vector<RawLabel> canonical_generators(Level level, const std::set<RawLabel>& elems) {
    if (elems.size() == 1) return {};
    RawLabel g1{0, 0};
    int best = 0;
    for (RawLabel x : elems) {
        int ord = element_order(level, x);
        if (ord > best) {
            best = ord;
            g1 = x;
        }
    }
    std::set<RawLabel> span = closure(level, {g1});
    if (span.size() == elems.size()) return {g1};
    for (RawLabel x : elems)
        if (!span.contains(x)) return {g1, x};
    throw std::logic_error("generator search exhausted the group");
}

inline CurrentGroup make_group(Level level, const std::set<RawLabel>& elems,
                               std::vector<RawLabel> generators) {
    CurrentGroup g;
    for (RawLabel x : elems) g.elements.push_back(unit_element(level, x));
    g.structure = structure_of(level, elems);
    g.generators = std::move(generators);
    return g;
}

} // namespace detail

// The group of all simple-current written forms, with the odd/even generators
// and the brute-force order/structure check.
inline CurrentGroup unit_group_structure(Level level) {
    if (level.n < 1) throw std::invalid_argument("unit_group_structure wants level n >= 1");
    std::vector<RawLabel> gens;
    if (level.n % 2 == 1)
        gens = {RawLabel{level.n, 1}};
    else
        gens = {RawLabel{0, 2}, RawLabel{level.n, 0}};
    std::set<RawLabel> elems = detail::closure(level, gens);
    if (elems.size() != static_cast<std::size_t>(2 * (level.n + 2)))
        throw std::logic_error("simple-current group closure has unexpected order");
    return detail::make_group(level, elems, gens);
}

// Everything the case analysis produces, including the branch data that a
// caller may want to audit.
struct MaxCyclicReport {
    char case_tag = 'A';    // 'A' n odd, 'B' n = 0 mod 4, 'C' n = 2 mod 4
    int minimal = 0;        // p for (A)/(B), M for (C)
    CurrentGroup group;

    // Case C only.
    std::optional<PhaseExponent> omega_m_half;      // of (0, M/2), formal
    std::optional<PhaseExponent> omega_n_m_half;    // of (n, M/2), formal
    bool half_label_parity_ok = true;               // (0, M/2) satisfies l = m (mod 2)
    bool eq_premise_half_n_odd = false;             // n/2 odd
    bool eq_premise_ratio_odd = false;              // M^2 / (8(n+2)) an odd integer
    bool eq_value_is_one = false;                   // exp(n/2 pi i - M^2/(8(n+2)) pi i) == 1
    std::string branch;                             // "minus_one" or "pm_i"
};

inline MaxCyclicReport max_cyclic_report(Level level) {
    if (level.n < 1) throw std::invalid_argument("max_cyclic wants level n >= 1");
    const int n = level.n;
    MaxCyclicReport rep;

    if (n % 2 == 1) {
        rep.case_tag = 'A';
        RawLabel sigma{n, 1};
        int p = 1;
        RawLabel acc = sigma;
        while (!statistics_phase(level, acc).is_zero()) {
            acc = written_product(level, acc, sigma);
            ++p;
        }
        rep.minimal = p;
        rep.group = detail::make_group(level, detail::closure(level, {acc}), {acc});
        return rep;
    }

    if (n % 4 == 0) {
        rep.case_tag = 'B';
        int p = 1;
        while (!statistics_phase(level, RawLabel{0, (2 * p) % level.modulus()}).is_zero()) ++p;
        rep.minimal = p;
        RawLabel g1{0, (2 * p) % level.modulus()};
        RawLabel g2{n, 0};
        rep.group = detail::make_group(level, detail::closure(level, {g1, g2}), {g1, g2});
        return rep;
    }

    rep.case_tag = 'C';
    int M = 2;
    while (!statistics_phase(level, RawLabel{0, M % level.modulus()}).is_zero()) M += 2;
    rep.minimal = M;
    const int half = M / 2;

    // Formal phase of (0, M/2) and (n, M/2) by the weight formula, whether or
    // not the parity constraint admits them as labels.
    Rational denom(4LL * (n + 2));
    rep.omega_m_half = PhaseExponent::of(Rational(-1LL * half * half) / denom);
    rep.omega_n_m_half =
        PhaseExponent::of(Rational(1LL * n * (n + 2) - 1LL * half * half) / denom);
    rep.half_label_parity_ok = (half % 2 == 0);

    rep.eq_premise_half_n_odd = ((n / 2) % 2 == 1);
    Rational ratio(1LL * M * M, 8LL * (n + 2));
    rep.eq_premise_ratio_odd = ratio.is_integer() && (ratio.num() % 2 != 0);
    // exp(pi i x) = 1 iff x is an even integer.
    rep.eq_value_is_one = ((Rational(n, 2) - ratio) / Rational(2)).mod_one() == Rational(0);

    if (*rep.omega_m_half == PhaseExponent::of(Rational(1, 2)) && rep.half_label_parity_ok) {
        rep.branch = "minus_one";
        RawLabel g{n, half};
        rep.group = detail::make_group(level, detail::closure(level, {g}), {g});
    } else {
        rep.branch = "pm_i";
        RawLabel g{0, M % level.modulus()};
        rep.group = detail::make_group(level, detail::closure(level, {g}), {g});
    }
    return rep;
}

inline CurrentGroup max_cyclic(Level level) { return max_cyclic_report(level).group; }

// All subgroups of the simple-current group whose elements, in the recorded
// written forms, all have statistics phase 1. Two forms of one orbit differ by
// a half phase, so each returned subgroup is the unique phase-1 lift of its
// orbit projection. Sorted by order, then elements.
inline std::vector<CurrentGroup> local_subgroups(Level level) {
    if (level.n < 1) throw std::invalid_argument("local_subgroups wants level n >= 1");
    std::vector<RawLabel> forms;
    for (const UnitElement& u : units(level)) forms.push_back(u.written_form);

    // Rank <= 2, so pairs of generators reach every subgroup.
    std::set<std::set<RawLabel>> subgroups;
    subgroups.insert(detail::closure(level, {}));
    for (RawLabel g : forms) subgroups.insert(detail::closure(level, {g}));
    for (RawLabel g : forms)
        for (RawLabel h : forms) {
            if (!(g < h)) continue;
            subgroups.insert(detail::closure(level, {g, h}));
        }

    std::vector<CurrentGroup> out;
    for (const auto& elems : subgroups) {
        bool all_phase_one = std::all_of(elems.begin(), elems.end(), [&](RawLabel x) {
            return statistics_phase(level, x).is_zero();
        });
        if (!all_phase_one) continue;
        out.push_back(detail::make_group(level, elems, detail::canonical_generators(level, elems)));
    }
    std::sort(out.begin(), out.end(), [](const CurrentGroup& a, const CurrentGroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements < b.elements;
    });
    return out;
}

// Scalar monodromy: phase(sigma x) - phase(sigma) - phase(x) on written forms,
// with sigma x the single fusion output of the two forms.
inline PhaseExponent monodromy_exponent(Level level, const UnitElement& sigma, RawLabel x) {
    require_valid(level, x);
    if (!is_unit_form(level, sigma.written_form))
        throw std::invalid_argument("monodromy_exponent wants a simple current");
    std::vector<RawLabel> prod = raw_fuse(level, sigma.written_form, x);
    if (prod.size() != 1) throw std::logic_error("simple-current product is not irreducible");
    return statistics_phase(level, prod.front()) - sigma.phase - statistics_phase(level, x);
}

} // namespace n2sc
