#pragma once

#include "ordercert/bandwidth.hpp"
#include "ordercert/representations.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace ordercert {

inline constexpr const char* kSchemaVersion = "ordercert/1";

// FNV-1a 64 over the canonical edge-list text; stable across runs.
std::string graph_digest(const Graph& g);

nlohmann::json to_json(const IntervalModel& model);
nlohmann::json to_json(const Orientation& o, OrientMode mode);
nlohmann::json to_json(const FunctionDiagram& d);
nlohmann::json to_json(const LowerBounds& lb);

// Self-contained verdict for a recognition run. Positive certificates get
// the class-specific representation built from the witness ordering.
nlohmann::json certificate_for(const Graph& g, const Recognition& rec);

// Re-derive the verdict from the certificate and the graph alone.
// Positive certificates re-validate through the checker and the attached
// representation; negative ones are re-run.
bool verify_certificate(const Graph& g, const nlohmann::json& cert);

nlohmann::json exact_bandwidth_report(const Graph& g, const BandwidthResult& res);
nlohmann::json bound_bandwidth_report(const Graph& g, ClassId cls, const BoundedOrdering& bo);

} // namespace ordercert
