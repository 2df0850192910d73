#pragma once

#include <functional>
#include <span>

#include "momentum/config.hpp"
#include "momentum/geometry.hpp"

namespace momentum::kin {

struct PlayerState {
    Vec3 position = Vec3::Zero();  // feet
    Vec3 velocity = Vec3::Zero();
    bool grounded = true;
    bool jumping = false;
    bool running = false;
    int respawns_used = 0;
    Vec3 spawn_point = Vec3::Zero();
};

struct PilotInput {
    bool run = true;
    int h = 0;  // -1 left, 0 none, +1 right
    bool jump = false;
};

// Downward probe from the feet; grounded iff a Ground-layer surface lies
// within `cfg.ground_ray_length` below them (closed boundary). Landing clears
// the jump state; standing support snaps the feet onto the surface and zeroes
// any residual downward velocity so the player rests on the tile instead of
// sinking through it.
bool ground_check(PlayerState& p, std::span<const geom::Collider> colliders, const RunConfig& cfg);

// One velocity update:
//   running & grounded   -> v_z = run_speed (direct assignment)
//   grounded, not running-> v_z approaches 0 via lerp(v_z, 0, 10 dt)
//   lateral input        -> v_x = h * side_speed; otherwise v_x decays
//   jump (grounded, not already jumping) -> v_y = jump_force, plus the
//   forward boost while running
//   airborne or mid-jump -> gravity; unforced horizontals decay by e^(-c dt)
void update_velocity(PlayerState& p, const PilotInput& input, const RunConfig& cfg);

// position += velocity * dt (semi-implicit order: call after update_velocity).
void integrate(PlayerState& p, double dt);

enum class RespawnOutcome { none, respawned, game_over };

bool fallen(const PlayerState& p, const RunConfig& cfg);

// Teleports to `target`, zeroes velocity and spends one respawn. The attempt
// after the budget is exhausted yields game_over without moving the player.
RespawnOutcome apply_respawn(PlayerState& p, const RunConfig& cfg, const Vec3& target);

// Trigger rule + budget for the fall case; `respawn_target` is only invoked
// when a respawn actually happens (placement needs world context).
RespawnOutcome respawn_if_fallen(PlayerState& p, const RunConfig& cfg,
                                 const std::function<Vec3()>& respawn_target);

// max(0, z - start_z); with the default start_z = -45 this is max(0, z + 45).
double score(const PlayerState& p, const RunConfig& cfg);

double lerp(double a, double b, double t);

} // namespace momentum::kin
