#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "n2sc/labels.hpp"

namespace n2sc {

// Formal nonnegative-integer combination of orbits: an element of the fusion
// ring. No zero multiplicities are stored; iteration order is canonical.
struct Sector {
    std::map<LabelOrbit, long long> terms;

    static Sector single(const LabelOrbit& o) {
        Sector s;
        s.add(o, 1);
        return s;
    }

    void add(const LabelOrbit& o, long long k) {
        if (k == 0) return;
        auto [it, inserted] = terms.try_emplace(o, 0);
        it->second += k;
        if (it->second == 0) terms.erase(it);
    }

    long long mult(const LabelOrbit& o) const {
        auto it = terms.find(o);
        return it == terms.end() ? 0 : it->second;
    }

    bool empty() const { return terms.empty(); }

    double total_dim(Level level) const {
        double sum = 0.0;
        for (const auto& [o, k] : terms) sum += static_cast<double>(k) * qdim(level, o);
        return sum;
    }

    std::string str() const {
        if (terms.empty()) return "0";
        std::string out;
        for (const auto& [o, k] : terms) {
            if (!out.empty()) out += " + ";
            if (k != 1) out += std::to_string(k);
            out += orbit_str(o);
        }
        return out;
    }

    friend bool operator==(const Sector&, const Sector&) = default;
};

// Raw outputs of (l1,m1)(l2,m2) = sum over |l1-l2| <= l <= min(l1+l2, 2n-l1-l2),
// l+l1+l2 even, of (l, m1+m2). Not canonicalized.
inline std::vector<RawLabel> raw_fuse(Level level, RawLabel a, RawLabel b) {
    require_valid(level, a);
    require_valid(level, b);
    int lo = std::abs(a.l - b.l);
    int hi = std::min(a.l + b.l, 2 * level.n - a.l - b.l);
    int m = (a.m + b.m) % level.modulus();
    std::vector<RawLabel> out;
    for (int l = lo; l <= hi; l += 2) out.push_back(RawLabel{l, m});
    return out;
}

inline Sector fuse(Level level, const LabelOrbit& a, const LabelOrbit& b) {
    Sector s;
    for (RawLabel x : raw_fuse(level, a.canonical, b.canonical))
        s.add(canonicalize(level, x), 1);
    return s;
}

inline Sector fuse_sectors(Level level, const Sector& a, const Sector& b) {
    Sector out;
    for (const auto& [oa, ka] : a.terms)
        for (const auto& [ob, kb] : b.terms)
            for (RawLabel x : raw_fuse(level, oa.canonical, ob.canonical))
                out.add(canonicalize(level, x), ka * kb);
    return out;
}

inline Sector power(Level level, const LabelOrbit& a, int k) {
    if (k < 0) throw std::invalid_argument("fusion power wants a nonnegative exponent");
    Sector acc = Sector::single(vacuum_orbit(level));
    for (int i = 0; i < k; ++i) acc = fuse_sectors(level, acc, Sector::single(a));
    return acc;
}

// The unique b with <a b, vacuum> = 1: negate m.
inline LabelOrbit conjugate(Level level, const LabelOrbit& a) {
    int m = a.canonical.m == 0 ? 0 : level.modulus() - a.canonical.m;
    return canonicalize(level, RawLabel{a.canonical.l, m});
}

inline long long hom_dim(const Sector& a, const Sector& b) {
    long long sum = 0;
    for (const auto& [o, k] : a.terms) sum += k * b.mult(o);
    return sum;
}

using Matrix = std::vector<std::vector<long long>>;

// Spectrum with an index lookup, for matrix work.
struct SpectrumTable {
    std::vector<LabelOrbit> orbits;
    std::map<LabelOrbit, std::size_t> index;

    explicit SpectrumTable(Level level) : orbits(spectrum(level)) {
        for (std::size_t i = 0; i < orbits.size(); ++i) index[orbits[i]] = i;
    }

    std::size_t at(const LabelOrbit& o) const { return index.at(o); }
    std::size_t size() const { return orbits.size(); }
};

// Regular representation: N_a[x][y] = <a x, y>.
inline Matrix fusion_matrix(Level level, const LabelOrbit& a, const SpectrumTable& table) {
    Matrix N(table.size(), std::vector<long long>(table.size(), 0));
    for (std::size_t i = 0; i < table.size(); ++i) {
        Sector s = fuse(level, a, table.orbits[i]);
        for (const auto& [o, k] : s.terms) N[i][table.at(o)] = k;
    }
    return N;
}

inline Matrix fusion_matrix(Level level, const LabelOrbit& a) {
    return fusion_matrix(level, a, SpectrumTable(level));
}

} // namespace n2sc
