/*
 * JSON and text emitters for traces and reports, plus parameter-file parsing.
 * Complex numbers serialize as two-element [re, im] arrays; identical input
 * produces byte-identical output (keys are emitted in sorted order and
 * doubles use shortest round-trip formatting).
 */
#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "rsp/bases.hpp"
#include "rsp/corrections.hpp"
#include "rsp/protocol.hpp"

namespace rsp {

nlohmann::json params_to_json(const AnglesVariant& params);
nlohmann::json trace_to_json(const ProtocolTrace& t);
nlohmann::json report_to_json(const CorrectionReport& r);

std::string traces_to_json(const std::vector<ProtocolTrace>& traces);
std::string traces_to_text(const std::vector<ProtocolTrace>& traces);
std::string report_to_json_text(const CorrectionReport& r);
std::string report_to_text(const CorrectionReport& r);
std::string basis_report_to_text(const BasisCheckReport& r);

/// Parse {"theta":..,"phi":..} / {"gamma1":..,..} / {"thetas":[8],"phis":[8]}
/// according to the protocol name ("qubit" | "d4" | "d8").
AnglesVariant params_from_json(const nlohmann::json& j, const std::string& protocol);
AnglesVariant params_from_json_file(const std::string& path, const std::string& protocol);

}  // namespace rsp
