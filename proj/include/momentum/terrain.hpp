#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "momentum/config.hpp"
#include "momentum/geometry.hpp"
#include "momentum/rng.hpp"

namespace momentum::terrain {

// A streamed ground tile. `z` anchors the near edge; the tile covers
// [z, z + length] on the z axis and the full x_range laterally, with its top
// surface at y = 0.
struct Tile {
    std::uint64_t id = 0;
    double z = 0.0;
    double length = 96.0;
    int theme_index = 0;
    std::int64_t spawned_tick = 0;
    std::optional<double> destroy_deadline;  // absolute seconds, set once scheduled

    double far_edge() const { return z + length; }
    geom::GroundSpan span() const { return geom::GroundSpan{z, z + length, 0.0}; }
};

geom::Collider tile_collider(const Tile& tile, const RunConfig& cfg);

// Theme cycling state. `recent_stack` holds the variants shown since the last
// reset; a variant is never re-picked until the stack has seen them all.
struct ThemeState {
    int current_index = 0;
    double next_change_z = 0.0;
    std::vector<int> recent_stack;
    int variant_count = 1;
};

ThemeState make_theme_state(const RunConfig& cfg);

// dt_spawn = clamp(dt_max - gamma * v_p, dt_min, dt_max)
double spawn_interval(double player_speed, const RunConfig& cfg);

// Spawns at most one tile: requires the timer elapsed and the frontier not
// already `spawn_suspend_ahead` past the player. Appends to `tiles` and
// updates `t_last_spawn`.
std::optional<Tile> maybe_spawn_tile(std::vector<Tile>& tiles, double& t_last_spawn, double now,
                                     double player_z, double player_speed, int theme_index,
                                     std::int64_t tick, std::uint64_t& next_id,
                                     const RunConfig& cfg);

// Schedules tiles the player has left `tile_cleanup_distance` behind, then
// removes those whose grace delay has elapsed. Returns the removed tiles.
std::vector<Tile> cleanup_tiles(std::vector<Tile>& tiles, double player_z, double now,
                                const RunConfig& cfg);

// Picks a fresh variant when the player crosses the next threshold.
std::optional<int> advance_theme(ThemeState& theme, double player_z, RandomStream& rng,
                                 const RunConfig& cfg);

} // namespace momentum::terrain
