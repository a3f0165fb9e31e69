#include "rsp/trace_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace rsp {

namespace {

using nlohmann::json;

json complex_to_json(const Complex& z) {
    return json::array({z.real(), z.imag()});
}

json amps_to_json(const std::vector<Complex>& amps) {
    json arr = json::array();
    for (const Complex& z : amps) arr.push_back(complex_to_json(z));
    return arr;
}

json matrix_to_json(const UnitaryMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.dim(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.dim(); ++c) row.push_back(complex_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Human-readable label for a qubit correction: the Pauli set up to global phase.
std::string correction_label_d2(const UnitaryMatrix& m) {
    struct Named {
        const char* name;
        UnitaryMatrix u;
    };
    static const Named named[] = {{"I", UnitaryMatrix::identity(2)},
                                  {"sigma_x", UnitaryMatrix::sigma_x()},
                                  {"sigma_z", UnitaryMatrix::sigma_z()},
                                  {"sigma_z*sigma_x", UnitaryMatrix::sigma_z() * UnitaryMatrix::sigma_x()}};
    for (const Named& n : named) {
        // match up to a global phase: find the first sizable entry and align phases
        Complex phase(0.0, 0.0);
        bool match = true;
        for (int r = 0; r < 2 && match; ++r)
            for (int c = 0; c < 2 && match; ++c) {
                const Complex a = m.at(r, c), b = n.u.at(r, c);
                if (std::abs(b) < 0.5 && std::abs(a) < 1e-9) continue;
                if (std::abs(b) < 0.5 || std::abs(a) < 1e-9) {
                    match = false;
                    break;
                }
                const Complex ratio = a / b;
                if (std::abs(phase) == 0.0)
                    phase = ratio;
                else if (std::abs(ratio - phase) > 1e-9)
                    match = false;
            }
        if (match) return n.name;
    }
    return "monomial";
}

}  // namespace

json params_to_json(const AnglesVariant& params) {
    json j;
    if (std::holds_alternative<Angles2>(params)) {
        const Angles2& a = std::get<Angles2>(params);
        j["theta"] = a.theta;
        j["phi"] = a.phi;
    } else if (std::holds_alternative<Angles4>(params)) {
        const Angles4& a = std::get<Angles4>(params);
        j["gamma1"] = a.gamma1;
        j["gamma2"] = a.gamma2;
        j["gamma3"] = a.gamma3;
        j["alpha1"] = a.alpha1;
        j["alpha2"] = a.alpha2;
        j["alpha3"] = a.alpha3;
    } else {
        const Angles8& a = std::get<Angles8>(params);
        j["thetas"] = a.thetas;
        j["phis"] = a.phis;
    }
    return j;
}

json trace_to_json(const ProtocolTrace& t) {
    json j;
    j["protocol"] = t.protocol;
    j["parameters"] = params_to_json(t.params);
    j["outcomes"] = t.outcomes;
    j["probability"] = t.probability;
    json msgs = json::array();
    for (const ClassicalMessage& m : t.messages)
        msgs.push_back(json{{"from", to_string(m.from)},
                            {"to", to_string(m.to)},
                            {"outcome", m.outcome},
                            {"bit_cost", m.bit_cost}});
    j["messages"] = std::move(msgs);
    json corr = json::array();
    for (const AppliedCorrection& c : t.corrections)
        corr.push_back(json{{"party", to_string(c.party)},
                            {"label", c.label},
                            {"matrix", matrix_to_json(c.matrix)}});
    j["corrections"] = std::move(corr);
    j["final_state"] = amps_to_json(t.final_state.amps);
    j["fidelity"] = t.fidelity;
    j["total_bits"] = t.total_bits;
    return j;
}

std::string traces_to_json(const std::vector<ProtocolTrace>& traces) {
    json arr = json::array();
    for (const ProtocolTrace& t : traces) arr.push_back(trace_to_json(t));
    return arr.dump(2) + "\n";
}

std::string traces_to_text(const std::vector<ProtocolTrace>& traces) {
    std::ostringstream out;
    if (traces.empty()) return "no traces\n";
    out << "protocol " << traces.front().protocol << ", " << traces.size() << " trace(s)\n";
    char line[160];
    std::snprintf(line, sizeof line, "%6s %6s %12s %-22s %-12s %s\n",
                  "out1", "out2", "probability", "correction", "fidelity", "bits");
    out << line;
    for (const ProtocolTrace& t : traces) {
        std::string label = "oracle";
        for (const AppliedCorrection& c : t.corrections) {
            if (c.label == "oracle") {
                label = c.matrix.dim() == 2 ? "oracle(" + correction_label_d2(c.matrix) + ")" : "oracle";
                break;
            }
        }
        std::snprintf(line, sizeof line, "%6d %6d %12.6f %-22s %-12.10f %d\n",
                      t.outcomes.size() > 0 ? t.outcomes[0] : -1,
                      t.outcomes.size() > 1 ? t.outcomes[1] : -1,
                      t.probability, label.c_str(), t.fidelity, t.total_bits);
        out << line;
    }
    return out.str();
}

json report_to_json(const CorrectionReport& r) {
    json j;
    j["protocol"] = r.protocol == AuditProtocol::qubit ? "qubit" : "d4";
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    json pairs = json::array();
    for (const CorrectionAudit& p : r.pairs)
        pairs.push_back(json{{"a_out", p.a_out},
                             {"b_out", p.b_out},
                             {"agree", p.agree},
                             {"max_fidelity_deficit", p.max_fidelity_deficit},
                             {"min_oracle_fidelity", p.min_oracle_fidelity},
                             {"table_matrix", matrix_to_json(p.table_matrix)},
                             {"oracle_matrix", matrix_to_json(p.oracle_matrix)}});
    j["pairs"] = std::move(pairs);
    json disc = json::array();
    for (const AuditDiscrepancy& d : r.discrepancies)
        disc.push_back(json{{"a_out", d.a_out},
                            {"b_out", d.b_out},
                            {"parameters", params_to_json(d.params)},
                            {"fidelity", d.fidelity}});
    j["discrepancies"] = std::move(disc);
    return j;
}

std::string report_to_json_text(const CorrectionReport& r) {
    return report_to_json(r).dump(2) + "\n";
}

std::string report_to_text(const CorrectionReport& r) {
    std::ostringstream out;
    out << "correction audit, protocol " << (r.protocol == AuditProtocol::qubit ? "qubit" : "d4")
        << ", " << r.samples << " sample(s), seed " << r.seed << "\n";
    char line[160];
    std::snprintf(line, sizeof line, "%6s %6s %-8s %-22s %s\n",
                  "a_out", "b_out", "agree", "max_fidelity_deficit", "min_oracle_fidelity");
    out << line;
    for (const CorrectionAudit& p : r.pairs) {
        std::snprintf(line, sizeof line, "%6d %6d %-8s %-22.3e %.12f\n",
                      p.a_out, p.b_out, p.agree ? "yes" : "NO", p.max_fidelity_deficit,
                      p.min_oracle_fidelity);
        out << line;
    }
    out << (r.clean() ? "no discrepancies\n"
                      : std::to_string(r.discrepancies.size()) + " discrepancy record(s)\n");
    return out.str();
}

std::string basis_report_to_text(const BasisCheckReport& r) {
    std::ostringstream out;
    out << "basis properties, d=" << r.d << ", " << r.samples << " sample(s), seed " << r.seed << "\n";
    for (const BasisCheckLine& l : r.lines) {
        out << "  " << l.name << ": ";
        if (!l.available)
            out << "unavailable (construction failed)";
        else
            out << (l.ok ? "ok" : "FAIL") << ", max deviation " << l.max_deviation;
        out << "\n";
    }
    return out.str();
}

AnglesVariant params_from_json(const json& j, const std::string& protocol) {
    if (protocol == "qubit") {
        Angles2 a;
        a.theta = j.at("theta").get<double>();
        a.phi = j.at("phi").get<double>();
        return a;
    }
    if (protocol == "d4") {
        Angles4 a;
        a.gamma1 = j.at("gamma1").get<double>();
        a.gamma2 = j.at("gamma2").get<double>();
        a.gamma3 = j.at("gamma3").get<double>();
        a.alpha1 = j.at("alpha1").get<double>();
        a.alpha2 = j.at("alpha2").get<double>();
        a.alpha3 = j.at("alpha3").get<double>();
        return a;
    }
    if (protocol == "d8") {
        Angles8 a;
        const auto thetas = j.at("thetas").get<std::vector<double>>();
        const auto phis = j.at("phis").get<std::vector<double>>();
        if (thetas.size() != 8 || phis.size() != 8)
            throw std::invalid_argument("d8 parameters need 8 thetas and 8 phis");
        std::copy(thetas.begin(), thetas.end(), a.thetas.begin());
        std::copy(phis.begin(), phis.end(), a.phis.begin());
        return a;
    }
    throw std::invalid_argument("unknown protocol '" + protocol + "'");
}

AnglesVariant params_from_json_file(const std::string& path, const std::string& protocol) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open parameter file '" + path + "'");
    json j;
    in >> j;
    return params_from_json(j, protocol);
}

}  // namespace rsp
