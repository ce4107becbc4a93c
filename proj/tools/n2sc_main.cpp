// Command-line front end: every library operation as a subcommand, with
// deterministic table and JSON output.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "n2sc/currents.hpp"
#include "n2sc/extensions.hpp"
#include "n2sc/fusion.hpp"
#include "n2sc/json_io.hpp"
#include "n2sc/labels.hpp"
#include "n2sc/unitarity.hpp"

namespace {

using namespace n2sc;
using nlohmann::json;

struct Output {
    std::string format = "table";
    bool quiet = false;
    std::vector<std::string> warnings;

    void warn(std::string msg) { warnings.push_back(std::move(msg)); }

    void emit(const std::string& command, const json& level, json payload,
              const std::string& table) const {
        if (format == "json") {
            std::cout << io::make_envelope(command, level, std::move(payload), warnings).dump(2)
                      << "\n";
        } else {
            std::cout << table;
        }
        if (!quiet)
            for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
    }
};

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

std::string orbit_pair_str(const LabelOrbit& o) {
    return label_str(o.canonical) + " ~ " + label_str(o.partner);
}

std::string terms_str(const std::vector<io::SectorTerm>& terms) {
    std::string out;
    for (const auto& t : terms) {
        if (!out.empty()) out += "  ";
        out += orbit_str(t.orbit) + ":" + std::to_string(t.mult);
    }
    return out.empty() ? "(empty)" : out;
}

std::string checks_str(const std::vector<io::CheckIo>& checks, std::vector<std::string>* fails) {
    std::size_t passed = 0;
    for (const auto& c : checks) {
        if (c.passed) {
            ++passed;
        } else if (fails) {
            fails->push_back(c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
        }
    }
    return std::to_string(passed) + "/" + std::to_string(checks.size()) + " passed";
}

int cmd_spectrum(int n, Output& out) {
    Level level(n);
    io::SpectrumPayload rows = io::make_spectrum_payload(level);

    std::string table = "level " + std::to_string(n) + ": c = " + central_charge(level).str() +
                        ", " + std::to_string(rows.size()) + " sectors\n";
    table += pad("(l,m)", 9) + pad("partner", 10) + pad("h", 9) + pad("q", 8) +
             pad("omega", 8) + pad("omega~", 8) + pad("d", 16) + "unit\n";
    for (const auto& r : rows) {
        table += pad(label_str(r.orbit.canonical), 9) + pad(label_str(r.orbit.partner), 10) +
                 pad(r.h.str(), 9) + pad(r.q.str(), 8) + pad(r.omega_canonical.str(), 8) +
                 pad(r.omega_partner.str(), 8) + pad(fmt_double(r.dim), 16) +
                 (r.unit ? "*" : "") + "\n";
    }
    out.emit("spectrum", n, rows, table);
    return 0;
}

int cmd_fuse(int n, int l1, int m1, int l2, int m2, Output& out) {
    Level level(n);
    LabelOrbit a = canonicalize(level, RawLabel{l1, m1});
    LabelOrbit b = canonicalize(level, RawLabel{l2, m2});
    Sector s = fuse(level, a, b);

    json payload{{"factors", json{a, b}}, {"terms", io::sector_terms(s)}};
    std::string table = label_str(RawLabel{l1, m1}) + " x " + label_str(RawLabel{l2, m2}) +
                        " = " + s.str() + "\n";
    for (const auto& [o, k] : s.terms)
        table += "  " + orbit_pair_str(o) + "  mult " + std::to_string(k) + "\n";
    out.emit("fuse", n, payload, table);
    return 0;
}

int cmd_classify(int n, Output& out) {
    Level level(n);
    ClassificationReport rep = classify(level);
    io::ClassifyPayload payload = io::make_classify_payload(rep);

    std::string table =
        "level " + std::to_string(n) + ": " + std::to_string(rep.entries.size()) + " extensions\n";
    for (std::size_t i = 0; i < rep.entries.size(); ++i) {
        const auto& entry = rep.entries[i];
        const auto& e = payload.entries[i];
        std::vector<std::string> fails;
        table += "-- " + entry.label() + " --\n";
        table += "  theta      = " + entry.theta.sector.str() + "\n";
        for (const auto& t : e.theta)
            table += "               " + orbit_pair_str(t.orbit) + "  mult " +
                     std::to_string(t.mult) + "\n";
        table += "  index      = " + fmt_double(e.index) + "\n";
        table += "  vacuum row = " + terms_str(e.vacuum_row) + "\n";
        table += "  checks     = " + checks_str(e.checks, &fails) + "\n";
        for (const std::string& f : fails) {
            table += "    failed: " + f + "\n";
            out.warn("entry '" + entry.label() + "': check failed: " + f);
        }
        for (const std::string& note : e.notes) table += "  note: " + note + "\n";
    }
    out.emit("classify", n, payload, table);
    return rep.all_verified() ? 0 : 1;
}

int cmd_simple_currents(int n, Output& out) {
    Level level(n);
    std::vector<UnitElement> all = units(level);

    json payload = json::array();
    std::string table = "level " + std::to_string(n) + ": " + std::to_string(all.size() / 2) +
                        " simple currents (two written forms each)\n";
    table += pad("orbit", 9) + pad("form", 9) + pad("omega", 9) + pad("form~", 9) + "omega~\n";
    for (std::size_t i = 0; i + 1 < all.size(); i += 2) {
        const UnitElement& u0 = all[i];
        const UnitElement& u1 = all[i + 1];
        payload.push_back(json{{"orbit", u0.orbit},
                               {"forms", json{json{{"form", u0.written_form}, {"omega", u0.phase}},
                                              json{{"form", u1.written_form}, {"omega", u1.phase}}}}});
        table += pad(orbit_str(u0.orbit), 9) + pad(label_str(u0.written_form), 9) +
                 pad(u0.phase.str(), 9) + pad(label_str(u1.written_form), 9) + u1.phase.str() +
                 "\n";
    }
    out.emit("simple-currents", n, payload, table);
    return 0;
}

int cmd_max_cyclic(int n, Output& out) {
    Level level(n);
    MaxCyclicReport rep = max_cyclic_report(level);

    json elements = json::array();
    for (const UnitElement& e : rep.group.elements)
        elements.push_back(json{{"form", e.written_form}, {"omega", e.phase}});
    json payload{{"case", std::string(1, rep.case_tag)},
                 {"minimal", rep.minimal},
                 {"structure", rep.group.structure.str()},
                 {"generators", rep.group.generators},
                 {"elements", elements}};
    std::string table = "level " + std::to_string(n) + ": case " + rep.case_tag +
                        ", maximal cyclic group " + rep.group.structure.str() + " of order " +
                        std::to_string(rep.group.order()) + "\n";
    std::string gens;
    for (RawLabel g : rep.group.generators) gens += (gens.empty() ? "" : ", ") + label_str(g);
    table += "  " + std::string(rep.case_tag == 'C' ? "M" : "p") + " = " +
             std::to_string(rep.minimal) + ", generators: " + (gens.empty() ? "none" : gens) +
             "\n";
    for (const UnitElement& e : rep.group.elements)
        table += "  " + pad(label_str(e.written_form), 9) + "omega exponent " + e.phase.str() +
                 "\n";

    if (rep.case_tag == 'C') {
        payload["branch"] = rep.branch;
        payload["omega_m_half"] = *rep.omega_m_half;
        payload["omega_n_m_half"] = *rep.omega_n_m_half;
        payload["half_label_parity_ok"] = rep.half_label_parity_ok;
        payload["eq6"] = json{{"half_n_odd", rep.eq_premise_half_n_odd},
                              {"ratio_odd", rep.eq_premise_ratio_odd},
                              {"value_is_one", rep.eq_value_is_one}};
        table += "  branch " + rep.branch + ": omega(0," + std::to_string(rep.minimal / 2) +
                 ") exponent " + rep.omega_m_half->str() + ", omega(" + std::to_string(n) + "," +
                 std::to_string(rep.minimal / 2) + ") exponent " + rep.omega_n_m_half->str() +
                 "\n";
        if (!rep.half_label_parity_ok)
            out.warn("(0," + std::to_string(rep.minimal / 2) +
                     ") violates the parity constraint l = m (mod 2); phase evaluated formally");
    }
    out.emit("max-cyclic", n, payload, table);
    return 0;
}

std::optional<RawLabel> parse_label_pair(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) return std::nullopt;
    try {
        std::size_t p1 = 0, p2 = 0;
        std::string left = text.substr(0, comma), right = text.substr(comma + 1);
        int l = std::stoi(left, &p1);
        int m = std::stoi(right, &p2);
        if (p1 != left.size() || p2 != right.size()) return std::nullopt;
        return RawLabel{l, m};
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

int cmd_invariant(int n, const std::vector<std::string>& subgroup_args,
                  const std::string& exceptional_arg, Output& out) {
    Level level(n);
    if (subgroup_args.empty() == exceptional_arg.empty()) {
        std::cerr << "invariant wants exactly one of --subgroup or --exceptional\n";
        return 2;
    }

    std::optional<Theta> theta;
    if (!exceptional_arg.empty()) {
        for (const Theta& t : exceptional_catalogue()) {
            if (t.level.n == n &&
                std::string(1, exceptional_letter(std::get<ExceptionalId>(t.provenance))) ==
                    exceptional_arg)
                theta = t;
        }
        if (!theta) {
            std::cerr << "no exceptional extension '" << exceptional_arg << "' at level " << n
                      << "\n";
            return 2;
        }
    } else {
        std::vector<RawLabel> gens;
        for (const std::string& arg : subgroup_args) {
            auto g = parse_label_pair(arg);
            if (!g) {
                std::cerr << "cannot parse generator '" << arg << "' (want l,m)\n";
                return 2;
            }
            if (!is_unit_form(level, *g)) {
                std::cerr << "generator " << label_str(*g) << " is not a simple current at level "
                          << n << "\n";
                return 2;
            }
            gens.push_back(*g);
        }
        // Generators are canonicalized to orbits; the extension uses the
        // statistics-phase-1 lift of the generated orbit group when one exists.
        std::set<LabelOrbit> wanted;
        for (RawLabel x : detail::closure(level, gens)) wanted.insert(canonicalize(level, x));
        for (const CurrentGroup& H : local_subgroups(level)) {
            std::set<LabelOrbit> have;
            for (const UnitElement& e : H.elements) have.insert(e.orbit);
            if (have == wanted) theta = theta_from_subgroup(level, H);
        }
        if (!theta) {
            out.warn("generated subgroup has no statistics-phase-1 lift; extension is not local");
            out.emit("invariant", n, json(nullptr),
                     "no local extension for the given subgroup\n");
            return 1;
        }
    }

    io::InvariantPayload payload = io::make_invariant_payload(level, *theta);
    std::vector<std::string> fails;
    std::string checks = checks_str(payload.checks, &fails);
    for (const std::string& f : fails) out.warn("check failed: " + f);

    std::string table = "level " + std::to_string(n) + " invariant\n";
    table += "  theta      = " + theta->sector.str() + "\n";
    for (const auto& t : payload.theta)
        table += "               " + orbit_pair_str(t.orbit) + "  mult " +
                 std::to_string(t.mult) + "\n";
    table += "  index      = " + fmt_double(payload.index) + "\n";
    table += "  vacuum row = " + terms_str(payload.vacuum_row) + "\n";
    table += "  checks     = " + checks + "\n";
    for (const std::string& note : payload.notes) table += "  note: " + note + "\n";
    table += "  <theta lambda, mu> over " + std::to_string(payload.spectrum.size()) +
             " sectors:\n";
    for (std::size_t i = 0; i < payload.matrix.size(); ++i) {
        table += "  " + pad(orbit_str(payload.spectrum[i]), 9);
        for (long long v : payload.matrix[i]) table += " " + std::to_string(v);
        table += "\n";
    }
    out.emit("invariant", n, payload, table);
    return fails.empty() ? 0 : 1;
}

int cmd_unitarity(const std::string& c_str, const std::string& h_str, const std::string& q_str,
                  Output& out) {
    auto c = parse_rational(c_str);
    auto h = parse_rational(h_str);
    auto q = parse_rational(q_str);
    if (!c || !h || !q) {
        std::cerr << "unitarity wants exact rationals (p or p/q) for c, h, q\n";
        return 2;
    }
    UnitarityClass result = unitarity_class(*c, *h, *q);

    json payload{{"class", unitarity_tag_str(result.tag)}, {"witness", json(nullptr)}};
    std::string table = std::string("class: ") + unitarity_tag_str(result.tag) + "\n";
    json level(nullptr);
    if (result.witness) {
        payload["witness"] = json{{"n", result.witness->n},
                                  {"l", result.witness->l},
                                  {"m", result.witness->m}};
        level = result.witness->n;
        table += "witness: n=" + std::to_string(result.witness->n) +
                 " l=" + std::to_string(result.witness->l) +
                 " m=" + std::to_string(result.witness->m) + "\n";
    }
    out.emit("unitarity", level, payload, table);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact sector data, fusion rules and extension classification for the "
                 "N=2 superconformal discrete series"};
    app.require_subcommand(1);

    Output out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    app.add_flag("--quiet", out.quiet, "suppress diagnostics on stderr");

    int n = 0;
    int l1 = 0, m1 = 0, l2 = 0, m2 = 0;
    std::vector<std::string> subgroup_args;
    std::string exceptional_arg;
    std::string c_str, h_str, q_str;

    CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "list all sectors of a level");
    spectrum_cmd->fallthrough();
    spectrum_cmd->add_option("n", n, "level")->required();

    CLI::App* fuse_cmd = app.add_subcommand("fuse", "fuse two sectors");
    fuse_cmd->fallthrough();
    fuse_cmd->add_option("n", n, "level")->required();
    fuse_cmd->add_option("l1", l1)->required();
    fuse_cmd->add_option("m1", m1)->required();
    fuse_cmd->add_option("l2", l2)->required();
    fuse_cmd->add_option("m2", m2)->required();

    CLI::App* classify_cmd = app.add_subcommand("classify", "list all extensions of a level");
    classify_cmd->fallthrough();
    classify_cmd->add_option("n", n, "level")->required();

    CLI::App* currents_cmd =
        app.add_subcommand("simple-currents", "list the dimension-1 sectors with both phases");
    currents_cmd->fallthrough();
    currents_cmd->add_option("n", n, "level")->required();

    CLI::App* max_cmd = app.add_subcommand("max-cyclic", "maximal cyclic group of local currents");
    max_cmd->fallthrough();
    max_cmd->add_option("n", n, "level")->required();

    CLI::App* invariant_cmd =
        app.add_subcommand("invariant", "induction matrix and vacuum row of an extension");
    invariant_cmd->fallthrough();
    invariant_cmd->add_option("n", n, "level")->required();
    invariant_cmd->add_option("--subgroup", subgroup_args, "subgroup generators as l,m pairs");
    invariant_cmd->add_option("--exceptional", exceptional_arg, "exceptional id a|b|c|d")
        ->check(CLI::IsMember({"a", "b", "c", "d"}));

    CLI::App* unitarity_cmd =
        app.add_subcommand("unitarity", "classify (c, h, q) against the unitarity conditions");
    unitarity_cmd->fallthrough();
    unitarity_cmd->add_option("c", c_str, "central charge, exact rational")->required();
    unitarity_cmd->add_option("weight", h_str, "conformal weight h, exact rational")->required();
    unitarity_cmd->add_option("charge", q_str, "U(1) charge q, exact rational")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << e.what() << "\n";
        std::cerr << "run with --help for usage\n";
        return 2;
    }

    try {
        if (spectrum_cmd->parsed()) return cmd_spectrum(n, out);
        if (fuse_cmd->parsed()) return cmd_fuse(n, l1, m1, l2, m2, out);
        if (classify_cmd->parsed()) return cmd_classify(n, out);
        if (currents_cmd->parsed()) return cmd_simple_currents(n, out);
        if (max_cmd->parsed()) return cmd_max_cyclic(n, out);
        if (invariant_cmd->parsed())
            return cmd_invariant(n, subgroup_args, exceptional_arg, out);
        if (unitarity_cmd->parsed()) return cmd_unitarity(c_str, h_str, q_str, out);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
