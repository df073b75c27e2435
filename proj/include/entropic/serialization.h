#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "entropic/inequalities.h"
#include "entropic/prob_core.h"
#include "entropic/quantum_core.h"
#include "entropic/thermo.h"

// JSON forms:
//   ProbDist          {"probs": [...], "labels": [...]}
//   JointDist2/3      {"shape": [...], "probs": nested arrays}
//   DensityOperator   {"dims": [...], "re": [[...]], "im": [[...]]}
//   MeasurementSet    {"kind": "projective|povm|kraus", "dim": n,
//                      "operators": [{"re": [[...]], "im": [[...]]}, ...]}
//   InequalityReport  {"name", "lhs", "bound", "satisfied", "margin",
//                      "input_descriptor", "notes"}
//   ThermoConfig      {"k": ..., "h": ...}
// Decoders throw ValidationError on malformed documents.

namespace entropic {

using Json = nlohmann::json;

Json to_json_value(const ProbDist &d);
Json to_json_value(const JointDist2 &j);
Json to_json_value(const JointDist3 &j);
Json to_json_value(const DensityOperator &rho);
Json to_json_value(const MeasurementSet &m);
Json to_json_value(const InequalityReport &r);
Json to_json_value(const ThermoConfig &cfg);

ProbDist prob_dist_from_json(const Json &doc);
JointDist2 joint2_from_json(const Json &doc);
JointDist3 joint3_from_json(const Json &doc);
DensityOperator density_from_json(const Json &doc);
MeasurementSet measurement_from_json(const Json &doc);
InequalityReport report_from_json(const Json &doc);
// Missing fields keep their defaults.
ThermoConfig thermo_config_from_json(const Json &doc);

Json parse_json(const std::string &text);

// Serializes with every floating-point number printed to 17 significant
// digits. Non-finite numbers become the strings "inf", "-inf", "nan".
std::string dump_precise(const Json &doc, int indent = 2);

inline constexpr const char *kReportCsvHeader = "name,lhs,bound,satisfied,margin,input_descriptor,notes";
std::string to_csv_row(const InequalityReport &r);

}  // namespace entropic
