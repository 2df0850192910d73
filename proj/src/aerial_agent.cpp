#include "momentum/aerial_agent.hpp"

#include <algorithm>
#include <cmath>

namespace momentum::agents {

Vec3 aerial_target(double player_x, double player_z, double frontier_anchor_z,
                   const RunConfig& cfg) {
    const double z = std::min(player_z + cfg.delta_z_aerial, frontier_anchor_z);
    return Vec3(player_x + cfg.delta_x_aerial, cfg.aerial_altitude, z);
}

Vec3 smooth_damp(const Vec3& current, const Vec3& target, Vec3& velocity, double smooth_time,
                 double max_speed, double dt) {
    const double omega = 2.0 / smooth_time;
    const double x = omega * dt;
    const double exp_term = 1.0 / (1.0 + x + 0.48 * x * x + 0.235 * x * x * x);

    Vec3 change = current - target;
    const Vec3 original_target = target;

    const double max_change = max_speed * smooth_time;
    const double change_len = change.norm();
    if (change_len > max_change && change_len > 0.0) {
        change *= max_change / change_len;
    }
    const Vec3 clamped_target = current - change;

    const Vec3 temp = (velocity + omega * change) * dt;
    velocity = (velocity - omega * temp) * exp_term;
    Vec3 output = clamped_target + (change + temp) * exp_term;

    // Never drift past the target: snap and kill the velocity instead.
    if ((original_target - current).dot(output - original_target) > 0.0) {
        output = original_target;
        velocity = Vec3::Zero();
    }
    return output;
}

void aerial_move(AerialState& state, const Vec3& target, const RunConfig& cfg) {
    state.position = smooth_damp(state.position, target, state.velocity_ref,
                                 cfg.aerial_smooth_time, cfg.aerial_max_speed, cfg.dt);
}

} // namespace momentum::agents
