#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "momentum/config.hpp"

namespace momentum::sim {

// Runs one simulation to completion and writes the full artifact set into
// `out_dir` (created if missing):
//   events.jsonl  - one SimEvent per line, fixed key order
//   summary.json  - the RunSummary document
//   reports.json  - the blockage report cache
//   report.txt    - human-readable rendering
//   report.pdf    - from-scratch PDF export of the same text
// Returns the summary document. Byte-reproducible given (config, seed) and a
// fixed_timestamp.
nlohmann::ordered_json write_run_outputs(const RunConfig& cfg, const std::string& out_dir);

} // namespace momentum::sim
