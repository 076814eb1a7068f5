#pragma once

// JSON, CSV and plain-text forms of curve specs, tail specs, embedding
// configs, filtrations and stability reports. Field names here are part of
// the command-line contract; see docs/schemas.md.

#include <optional>
#include <string>

#include <json.hpp>

#include "hmstab/curve_model.hpp"
#include "hmstab/filtration_engine.hpp"
#include "hmstab/linear_series.hpp"
#include "hmstab/monomial_engine.hpp"
#include "hmstab/stability_engine.hpp"

namespace hmstab {

inline constexpr const char* kCurveSchema = "hmstab.curve/1";
inline constexpr const char* kReportSchema = "hmstab.report/1";
inline constexpr const char* kTailSchema = "hmstab.tail/1";

struct CurveDocument {
  CurveGraph curve;
  std::optional<EmbeddingConfig> embedding;
};

/// Throws ParseError naming the offending line (for syntax errors) or field.
CurveDocument parse_curve_document(const std::string& text);
CurveDocument load_curve_document(const std::string& path);
nlohmann::json curve_to_json(const CurveGraph& curve);

nlohmann::json config_to_json(const EmbeddingConfig& config);
EmbeddingConfig config_from_json(const nlohmann::json& j);

ParamTail parse_tail(const std::string& text);
nlohmann::json tail_to_json(const ParamTail& tail);

nlohmann::json report_to_json(const StabilityReport& report);
StabilityReport report_from_json(const nlohmann::json& j);

std::string render_report_table(const StabilityReport& report);
/// "r,dim" header then one line per weight.
std::string filtration_csv(const WeightFiltration& f);
nlohmann::json filtration_to_json(const WeightFiltration& f);

/// Labels with their decorations, e.g. "C(g=2, nodes=0, cusps=1)".
std::string describe_curve(const CurveGraph& curve);

std::string read_file(const std::string& path);

}  // namespace hmstab
