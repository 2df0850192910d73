#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "momentum/geometry.hpp"

namespace momentum::report {

struct BlockingObjectInfo {
    std::string name;
    Vec3 position = Vec3::Zero();
    Vec3 size = Vec3::Zero();
    std::string layer;
};

// One captured corridor blockage. The fields cover six groups: game context,
// player state, environment state, generation parameters, scanner context
// and the blocking objects themselves.
struct BlockageReport {
    // Game context
    std::string scene_name;
    std::string timestamp;  // ISO-8601
    std::int64_t tick = 0;
    // Player state
    Vec3 player_position = Vec3::Zero();
    double player_speed = 0.0;
    // Environment state
    int skybox_variant = 0;
    double latest_ground_z = 0.0;
    double tile_length = 0.0;
    // Generation parameters
    double spawn_percentage = 0.0;
    std::array<double, 2> x_range{0.0, 0.0};
    double clear_width = 0.0;
    double jitter = 0.0;
    double y_offset = 0.0;  // snap adjustment of the nearest blocker
    // Scanner context
    double tile_position = 0.0;  // scanned segment anchor
    Vec3 probe_position = Vec3::Zero();
    double ray_spacing = 0.0;
    int hit_count = 0;
    // Provenance
    std::string agent;  // "aerial" | "ground"
    bool removed = false;
    // Blocking objects
    std::vector<BlockingObjectInfo> blocking_objects;
};

// Run-lifetime, append-only store. Contents survive the run-to-summary
// transition untouched.
class ReportCache {
public:
    void append(BlockageReport report);
    std::size_t size() const { return reports_.size(); }
    bool empty() const { return reports_.empty(); }
    const BlockageReport& at(std::size_t i) const { return reports_.at(i); }
    const std::vector<BlockageReport>& all() const { return reports_; }

private:
    std::vector<BlockageReport> reports_;
};

// Validates and appends. Ground-agent reports are diagnostic by definition,
// so removed=true from that agent is rejected (std::invalid_argument).
void report_blockage(ReportCache& cache, BlockageReport report);

// Deterministic human-readable rendering, one section per report grouped by
// the six field categories. An empty cache renders the fallback message.
std::string render_text(const ReportCache& cache);

nlohmann::ordered_json report_to_json(const BlockageReport& report);
// Throws std::invalid_argument when the document does not match the schema.
BlockageReport report_from_json(const nlohmann::json& j);

nlohmann::ordered_json cache_to_json(const ReportCache& cache);
ReportCache cache_from_json(const nlohmann::json& j);

void export_json(const ReportCache& cache, const std::string& path);
ReportCache load_reports(const std::string& path);

} // namespace momentum::report
