#pragma once

#include <chrono>
#include <cstddef>
#include <string>

#include <json.hpp>

#include "plumb/graph.hpp"

namespace plumb {

struct AnalyzeOptions {
  std::string theorem = "auto";  // a, b, c or auto (c, then b, then a)
  bool oracle = false;
  std::size_t max_cosets = 200'000;
  std::chrono::milliseconds max_time{30'000};
};

/// Structured analysis of a graph: summary, shape, hypothesis flags,
/// per-vertex verdicts with traces, the presentation, and optionally oracle
/// orders compared against the verdicts. Theorem failures are recorded in
/// the report, never thrown.
nlohmann::ordered_json analyze_report(const PlumbingGraph& g, const AnalyzeOptions& opt = {});

/// Plain-text rendering of a report.
std::string render_pretty(const nlohmann::ordered_json& report);

}  // namespace plumb
