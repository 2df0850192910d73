#pragma once

#include <cstdint>

#include "momentum/config.hpp"
#include "momentum/geometry.hpp"

namespace momentum::agents {

// Flying corridor evaluator. Holds a fixed altitude, pursues a clamped
// look-ahead point with smoothed velocity, and scans one segment at a time
// through a strictly monotone gate (next_scan_z).
struct AerialState {
    Vec3 position = Vec3::Zero();
    Vec3 velocity_ref = Vec3::Zero();  // smoothing state carried across ticks
    double next_scan_z = 0.0;
    double last_scanned_z = 0.0;
    std::int64_t segments_scanned = 0;
};

// Target = (x_p + delta_x, h_f, min(z_p + delta_z, farthest tile anchor)).
Vec3 aerial_target(double player_x, double player_z, double frontier_anchor_z,
                   const RunConfig& cfg);

// Reference smoothed-velocity step (critically damped spring, omega = 2/T_s,
// exponential term approximated by 1/(1 + x + 0.48 x^2 + 0.235 x^3)), with a
// speed clamp and an overshoot guard that snaps onto the target.
Vec3 smooth_damp(const Vec3& current, const Vec3& target, Vec3& velocity, double smooth_time,
                 double max_speed, double dt);

void aerial_move(AerialState& state, const Vec3& target, const RunConfig& cfg);

} // namespace momentum::agents
