#include "momentum/ground_agent.hpp"

#include <algorithm>
#include <cmath>

namespace momentum::agents {

namespace {

constexpr double kSideRate = 3.0;       // m/s of lateral correction
constexpr double kGapLookahead = 2.0;   // metres ahead for the widest-gap probe

} // namespace

bool ground_update_target(GroundAgentState& state, const nav::WalkableField& field,
                          double player_x, double player_z, const RunConfig& cfg) {
    const Vec3 wanted(player_x, 0.0, player_z + cfg.d_lookahead_ground);
    const auto sampled = field.sample(wanted, cfg.nav_sample_radius);
    if (!sampled) {
        state.nav_sample_failures += 1;  // previous target retained
        return false;
    }
    state.target = *sampled;
    return true;
}

double ground_speed(double player_vz, const RunConfig& cfg) {
    return std::max(cfg.ground_min_speed, std::abs(player_vz)) + cfg.v_boost_ground;
}

bool detect_stuck(const GroundAgentState& state, double now, std::int64_t tick,
                  const RunConfig& cfg) {
    if (state.idle_until_bake || now < state.cooldown_until) {
        return false;
    }
    const double window_elapsed = (tick - state.window_start_tick) * cfg.dt;
    if (window_elapsed < cfg.stuck_window) {
        return false;
    }
    const double dz = std::abs(state.position.z() - state.window_start_z);
    return dz < cfg.stuck_z_threshold && state.velocity.norm() < cfg.speed_epsilon;
}

RecoveryResult recover(GroundAgentState& state, const nav::WalkableField& field, double now,
                       std::int64_t tick, const RunConfig& cfg) {
    RecoveryResult result;
    result.from = state.position;

    const double base_z = state.position.z() + cfg.recovery_step;
    std::optional<Vec3> placed;
    for (double forward = 0.0; forward <= cfg.recovery_search_horizon; forward += 1.0) {
        placed = field.sample(Vec3(state.position.x(), 0.0, base_z + forward),
                              cfg.nav_sample_radius);
        if (placed) {
            break;
        }
    }

    state.window_start_tick = tick;
    state.window_start_z = placed ? placed->z() : state.position.z();
    if (!placed) {
        state.idle_until_bake = true;
        result.ok = false;
        result.to = state.position;
        return result;
    }
    state.position = *placed;
    state.velocity = Vec3::Zero();
    state.cooldown_until = now + cfg.recovery_cooldown;
    state.recoveries += 1;
    result.ok = true;
    result.to = *placed;
    return result;
}

std::optional<double> widest_gap_center(const nav::WalkableField& field, double z) {
    if (!field.valid) {
        return std::nullopt;
    }
    const long ix_lo = field.x_index(field.x_min);
    const long ix_hi = field.x_index(field.x_max);
    const long iz = field.z_index(z);

    long best_start = 0;
    long best_len = 0;
    long run_start = 0;
    long run_len = 0;
    for (long ix = ix_lo; ix <= ix_hi; ++ix) {
        if (field.cell_walkable(ix, iz)) {
            if (run_len == 0) {
                run_start = ix;
            }
            ++run_len;
            if (run_len > best_len) {
                best_len = run_len;
                best_start = run_start;
            }
        } else {
            run_len = 0;
        }
    }
    if (best_len == 0) {
        return std::nullopt;
    }
    return (field.cell_x(best_start) + field.cell_x(best_start + best_len - 1)) / 2.0;
}

void ground_move(GroundAgentState& state, const nav::WalkableField& field, double player_vz,
                 const RunConfig& cfg) {
    if (state.idle_until_bake || !field.valid) {
        state.velocity = Vec3::Zero();
        return;
    }
    const Vec3 before = state.position;
    const double step = ground_speed(player_vz, cfg) * cfg.dt;
    const double dz = std::clamp(state.target.z() - state.position.z(), 0.0, step);

    const auto gap = widest_gap_center(field, state.position.z() + kGapLookahead);
    const double steer_x = gap ? *gap : state.target.x();
    const double dx =
        std::clamp(steer_x - state.position.x(), -kSideRate * cfg.dt, kSideRate * cfg.dt);

    const double x = state.position.x();
    const double z = state.position.z();
    const Vec3 candidates[] = {
        Vec3(x + dx, 0.0, z + dz),
        Vec3(x, 0.0, z + dz),
        Vec3(x + dx, 0.0, z),
    };
    for (const Vec3& c : candidates) {
        if (field.walkable(c.x(), c.z())) {
            state.position = Vec3(c.x(), field.surface_y, c.z());
            break;
        }
    }
    state.velocity = (state.position - before) / cfg.dt;
}

} // namespace momentum::agents
