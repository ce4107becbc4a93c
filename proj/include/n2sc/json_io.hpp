#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "n2sc/extensions.hpp"
#include "n2sc/labels.hpp"
#include "n2sc/unitarity.hpp"

// Wire format. Orbits serialize as {"l", "m", "partner"}, rationals as
// {"num", "den"}; no floats appear in classification-critical fields.
namespace n2sc {

inline void to_json(nlohmann::json& j, const RawLabel& x) { j = nlohmann::json{x.l, x.m}; }
inline void from_json(const nlohmann::json& j, RawLabel& x) {
    x.l = j.at(0).get<int>();
    x.m = j.at(1).get<int>();
}

inline void to_json(nlohmann::json& j, const LabelOrbit& o) {
    j = nlohmann::json{{"l", o.canonical.l},
                       {"m", o.canonical.m},
                       {"partner", nlohmann::json{o.partner.l, o.partner.m}}};
}
inline void from_json(const nlohmann::json& j, LabelOrbit& o) {
    o.canonical.l = j.at("l").get<int>();
    o.canonical.m = j.at("m").get<int>();
    j.at("partner").get_to(o.partner);
}

inline void to_json(nlohmann::json& j, const Rational& r) {
    j = nlohmann::json{{"num", r.num()}, {"den", r.den()}};
}
inline void from_json(const nlohmann::json& j, Rational& r) {
    r = Rational(j.at("num").get<long long>(), j.at("den").get<long long>());
}

inline void to_json(nlohmann::json& j, const PhaseExponent& p) { to_json(j, p.value); }
inline void from_json(const nlohmann::json& j, PhaseExponent& p) { from_json(j, p.value); }

namespace io {

struct SpectrumEntry {
    LabelOrbit orbit;
    Rational h;
    Rational q;
    PhaseExponent omega_canonical;
    PhaseExponent omega_partner;
    double dim = 0.0;
    bool unit = false;

    friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};
using SpectrumPayload = std::vector<SpectrumEntry>;

inline void to_json(nlohmann::json& j, const SpectrumEntry& e) {
    j = nlohmann::json{{"orbit", e.orbit},
                       {"h", e.h},
                       {"q", e.q},
                       {"omega", nlohmann::json{e.omega_canonical, e.omega_partner}},
                       {"dim", e.dim},
                       {"unit", e.unit}};
}
inline void from_json(const nlohmann::json& j, SpectrumEntry& e) {
    j.at("orbit").get_to(e.orbit);
    j.at("h").get_to(e.h);
    j.at("q").get_to(e.q);
    j.at("omega").at(0).get_to(e.omega_canonical);
    j.at("omega").at(1).get_to(e.omega_partner);
    e.dim = j.at("dim").get<double>();
    e.unit = j.at("unit").get<bool>();
}

inline SpectrumPayload make_spectrum_payload(Level level) {
    SpectrumPayload rows;
    for (const LabelOrbit& o : spectrum(level)) {
        auto [w0, w1] = phase_pair(level, o);
        rows.push_back(SpectrumEntry{o, weight(level, o.canonical), charge(level, o.canonical),
                                     w0, w1, qdim(level, o), is_unit(level, o)});
    }
    return rows;
}

struct SectorTerm {
    LabelOrbit orbit;
    long long mult = 0;

    friend bool operator==(const SectorTerm&, const SectorTerm&) = default;
};

inline void to_json(nlohmann::json& j, const SectorTerm& t) {
    j = nlohmann::json{{"orbit", t.orbit}, {"mult", t.mult}};
}
inline void from_json(const nlohmann::json& j, SectorTerm& t) {
    j.at("orbit").get_to(t.orbit);
    t.mult = j.at("mult").get<long long>();
}

inline std::vector<SectorTerm> sector_terms(const Sector& s) {
    std::vector<SectorTerm> out;
    for (const auto& [o, k] : s.terms) out.push_back(SectorTerm{o, k});
    return out;
}

inline std::vector<SectorTerm> row_terms(const InvariantRow& r) {
    std::vector<SectorTerm> out;
    for (const auto& [o, k] : r.entries) out.push_back(SectorTerm{o, k});
    return out;
}

struct CheckIo {
    std::string name;
    bool passed = false;
    std::string detail;

    friend bool operator==(const CheckIo&, const CheckIo&) = default;
};

inline void to_json(nlohmann::json& j, const CheckIo& c) {
    j = nlohmann::json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
}
inline void from_json(const nlohmann::json& j, CheckIo& c) {
    c.name = j.at("name").get<std::string>();
    c.passed = j.at("passed").get<bool>();
    c.detail = j.at("detail").get<std::string>();
}

inline std::vector<CheckIo> check_list(const ThetaReport& rep) {
    std::vector<CheckIo> out;
    for (const Check& c : rep.checks) out.push_back(CheckIo{c.name, c.passed, c.detail});
    return out;
}

struct ClassifyEntry {
    std::string kind; // "simple-current" or "exceptional"
    std::string id;   // group structure or exceptional letter
    std::vector<RawLabel> generators;
    std::vector<SectorTerm> theta;
    double index = 0.0;
    std::vector<SectorTerm> vacuum_row;
    std::vector<CheckIo> checks;
    std::vector<std::string> notes;

    friend bool operator==(const ClassifyEntry&, const ClassifyEntry&) = default;
};

inline void to_json(nlohmann::json& j, const ClassifyEntry& e) {
    j = nlohmann::json{{"kind", e.kind},         {"id", e.id},
                       {"generators", e.generators}, {"theta", e.theta},
                       {"index", e.index},       {"vacuum_row", e.vacuum_row},
                       {"checks", e.checks},     {"notes", e.notes}};
}
inline void from_json(const nlohmann::json& j, ClassifyEntry& e) {
    e.kind = j.at("kind").get<std::string>();
    e.id = j.at("id").get<std::string>();
    j.at("generators").get_to(e.generators);
    j.at("theta").get_to(e.theta);
    e.index = j.at("index").get<double>();
    j.at("vacuum_row").get_to(e.vacuum_row);
    j.at("checks").get_to(e.checks);
    j.at("notes").get_to(e.notes);
}

struct ClassifyPayload {
    std::vector<ClassifyEntry> entries;

    friend bool operator==(const ClassifyPayload&, const ClassifyPayload&) = default;
};

inline void to_json(nlohmann::json& j, const ClassifyPayload& p) {
    j = nlohmann::json{{"entries", p.entries}};
}
inline void from_json(const nlohmann::json& j, ClassifyPayload& p) {
    j.at("entries").get_to(p.entries);
}

inline ClassifyEntry make_classify_entry(const ClassificationEntry& entry) {
    ClassifyEntry e;
    if (const auto* id = std::get_if<ExceptionalId>(&entry.theta.provenance)) {
        e.kind = "exceptional";
        e.id = std::string(1, exceptional_letter(*id));
    } else {
        const auto& H = std::get<CurrentGroup>(entry.theta.provenance);
        e.kind = "simple-current";
        e.id = H.structure.str();
        e.generators = H.generators;
    }
    e.theta = sector_terms(entry.theta.sector);
    e.index = entry.theta.index;
    e.vacuum_row = row_terms(entry.row);
    e.checks = check_list(entry.verification);
    e.notes = entry.verification.notes;
    return e;
}

inline ClassifyPayload make_classify_payload(const ClassificationReport& rep) {
    ClassifyPayload p;
    for (const ClassificationEntry& e : rep.entries) p.entries.push_back(make_classify_entry(e));
    return p;
}

struct InvariantPayload {
    std::vector<SectorTerm> theta;
    double index = 0.0;
    std::vector<LabelOrbit> spectrum;
    std::vector<std::vector<long long>> matrix;
    std::vector<SectorTerm> vacuum_row;
    std::vector<CheckIo> checks;
    std::vector<std::string> notes;

    friend bool operator==(const InvariantPayload&, const InvariantPayload&) = default;
};

inline void to_json(nlohmann::json& j, const InvariantPayload& p) {
    j = nlohmann::json{{"theta", p.theta},           {"index", p.index},
                       {"spectrum", p.spectrum},     {"matrix", p.matrix},
                       {"vacuum_row", p.vacuum_row}, {"checks", p.checks},
                       {"notes", p.notes}};
}
inline void from_json(const nlohmann::json& j, InvariantPayload& p) {
    j.at("theta").get_to(p.theta);
    p.index = j.at("index").get<double>();
    j.at("spectrum").get_to(p.spectrum);
    j.at("matrix").get_to(p.matrix);
    j.at("vacuum_row").get_to(p.vacuum_row);
    j.at("checks").get_to(p.checks);
    j.at("notes").get_to(p.notes);
}

inline InvariantPayload make_invariant_payload(Level level, const Theta& theta) {
    InvariantPayload p;
    p.theta = sector_terms(theta.sector);
    p.index = theta.index;
    SpectrumTable table(level);
    p.spectrum = table.orbits;
    p.matrix = alpha_hom_matrix(level, theta, table);
    p.vacuum_row = row_terms(vacuum_row(level, theta));
    ThetaReport report = verify_theta(level, theta);
    p.checks = check_list(report);
    p.notes = report.notes;
    return p;
}

inline constexpr const char* schema_version = "1.0.0";

// Envelope around every JSON payload. Keys serialize alphabetically, so the
// byte stream is a pure function of the contents.
inline nlohmann::json make_envelope(const std::string& command, const nlohmann::json& level,
                                    nlohmann::json payload,
                                    const std::vector<std::string>& warnings) {
    return nlohmann::json{{"schema_version", schema_version},
                          {"command", command},
                          {"level", level},
                          {"payload", std::move(payload)},
                          {"warnings", warnings}};
}

} // namespace io
} // namespace n2sc
