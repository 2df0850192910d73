#pragma once

#include <cstdint>
#include <optional>

#include "momentum/config.hpp"
#include "momentum/geometry.hpp"
#include "momentum/navsurface.hpp"

namespace momentum::agents {

// Ground traversal evaluator. Bound to the walkable field of the latest
// completed bake; it steers greedily forward, so seam staleness shows up as
// stalled progress that the stuck/recovery machinery has to handle.
struct GroundAgentState {
    Vec3 position = Vec3::Zero();
    Vec3 velocity = Vec3::Zero();
    Vec3 target = Vec3::Zero();
    double next_scan_z = 0.0;
    std::int64_t window_start_tick = 0;
    double window_start_z = 0.0;
    double cooldown_until = 0.0;
    std::int64_t recoveries = 0;
    std::int64_t nav_sample_failures = 0;
    bool idle_until_bake = false;
    int observed_bake_version = 0;
    std::int64_t segments_scanned = 0;
};

// Re-targets (x_p, y_nav, z_p + d_lookahead) via nearest-walkable sampling.
// Returns false when sampling failed; the previous target is then retained
// and the failure counter advances.
bool ground_update_target(GroundAgentState& state, const nav::WalkableField& field,
                          double player_x, double player_z, const RunConfig& cfg);

// v_runner = max(min_speed, |v_pz|) + boost
double ground_speed(double player_vz, const RunConfig& cfg);

// Stuck iff the evaluation window has matured with z progress below the
// threshold while the agent's velocity is nearly zero, outside the recovery
// cooldown.
bool detect_stuck(const GroundAgentState& state, double now, std::int64_t tick,
                  const RunConfig& cfg);

struct RecoveryResult {
    bool ok = false;
    Vec3 from = Vec3::Zero();
    Vec3 to = Vec3::Zero();
};

// Steps forward by recovery_step and re-places the agent on the nearest
// walkable point, searching further forward up to the horizon. On success a
// cooldown is armed; on failure the agent idles until the next bake.
RecoveryResult recover(GroundAgentState& state, const nav::WalkableField& field, double now,
                       std::int64_t tick, const RunConfig& cfg);

// Center of the widest walkable x run at the given z row, if any.
std::optional<double> widest_gap_center(const nav::WalkableField& field, double z);

// One steering tick: forward towards the target at ground_speed, laterally
// nudged towards the widest walkable gap just ahead, constrained to walkable
// cells.
void ground_move(GroundAgentState& state, const nav::WalkableField& field, double player_vz,
                 const RunConfig& cfg);

} // namespace momentum::agents
