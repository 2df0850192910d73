#include "momentum/kinematics.hpp"

#include <algorithm>
#include <cmath>

namespace momentum::kin {

namespace {

// Allowance for feet that penetrated the surface between ticks; they still
// count as grounded and get snapped back up.
constexpr double kPenetrationAllowance = 0.5;
constexpr double kProbeLift = 0.5;

} // namespace

double lerp(double a, double b, double t) {
    t = std::clamp(t, 0.0, 1.0);
    return a + (b - a) * t;
}

bool ground_check(PlayerState& p, std::span<const geom::Collider> colliders, const RunConfig& cfg) {
    geom::Ray probe;
    probe.origin = p.position + Vec3(0.0, kProbeLift, 0.0);
    probe.direction = Vec3(0.0, -1.0, 0.0);
    probe.max_distance = kProbeLift + cfg.ground_ray_length + kPenetrationAllowance;

    const auto hit = geom::raycast(probe, colliders, geom::LayerMask::of({geom::Layer::Ground}));
    bool grounded = false;
    if (hit) {
        const double gap = p.position.y() - hit->point.y();  // negative when penetrating
        grounded = gap <= cfg.ground_ray_length && gap >= -kPenetrationAllowance;
        if (grounded) {
            if (p.jumping && p.velocity.y() <= 0.0) {
                p.jumping = false;  // landing clears the jump state
            }
            if (!p.jumping && p.velocity.y() <= 0.0) {
                p.position.y() = hit->point.y();
                p.velocity.y() = 0.0;
            }
        }
    }
    p.grounded = grounded;
    return grounded;
}

void update_velocity(PlayerState& p, const PilotInput& input, const RunConfig& cfg) {
    const double dt = cfg.dt;
    const double damp = std::exp(-cfg.damping * dt);

    p.running = input.run;

    // Forward component.
    if (p.grounded && input.run) {
        p.velocity.z() = cfg.run_speed;
    } else if (p.grounded) {
        p.velocity.z() = lerp(p.velocity.z(), 0.0, 10.0 * dt);
    } else {
        p.velocity.z() *= damp;
    }

    // Lateral component.
    if (input.h != 0) {
        p.velocity.x() = static_cast<double>(input.h) * cfg.side_speed;
    } else {
        p.velocity.x() *= damp;
    }

    // Vertical component. Gravity keeps acting through the lift-off window
    // where the ground probe still reports contact.
    if (input.jump && p.grounded && !p.jumping) {
        p.velocity.y() = cfg.jump_force;
        if (input.run) {
            p.velocity.z() += cfg.jump_forward_boost;
        }
        p.jumping = true;
    } else if (!p.grounded || p.jumping) {
        p.velocity.y() -= cfg.gravity * dt;
    }
}

void integrate(PlayerState& p, double dt) {
    p.position += p.velocity * dt;
}

bool fallen(const PlayerState& p, const RunConfig& cfg) {
    return p.position.y() < cfg.fall_respawn_y;
}

RespawnOutcome apply_respawn(PlayerState& p, const RunConfig& cfg, const Vec3& target) {
    if (p.respawns_used >= cfg.max_respawns) {
        return RespawnOutcome::game_over;
    }
    p.respawns_used += 1;
    p.position = target;
    p.velocity = Vec3::Zero();
    p.jumping = false;
    p.grounded = true;
    return RespawnOutcome::respawned;
}

RespawnOutcome respawn_if_fallen(PlayerState& p, const RunConfig& cfg,
                                 const std::function<Vec3()>& respawn_target) {
    if (!fallen(p, cfg)) {
        return RespawnOutcome::none;
    }
    if (p.respawns_used >= cfg.max_respawns) {
        return RespawnOutcome::game_over;
    }
    return apply_respawn(p, cfg, respawn_target());
}

double score(const PlayerState& p, const RunConfig& cfg) {
    return std::max(0.0, p.position.z() - cfg.start_z);
}

} // namespace momentum::kin
