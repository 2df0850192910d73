#include "momentum/terrain.hpp"

#include <algorithm>

namespace momentum::terrain {

geom::Collider tile_collider(const Tile& tile, const RunConfig& cfg) {
    geom::Collider c;
    const double x_center = (cfg.x_min + cfg.x_max) / 2.0;
    const double half_width = (cfg.x_max - cfg.x_min) / 2.0;
    c.aabb.center = Vec3(x_center, -0.5, tile.z + tile.length / 2.0);
    c.aabb.half_extents = Vec3(half_width, 0.5, tile.length / 2.0);  // top face at y = 0
    c.layer = geom::Layer::Ground;
    c.owner_id = tile.id;
    c.root_name = "tile_" + std::to_string(tile.id);
    return c;
}

ThemeState make_theme_state(const RunConfig& cfg) {
    ThemeState t;
    t.current_index = 0;
    t.variant_count = cfg.theme_variant_count;
    t.next_change_z = cfg.start_z + cfg.theme_interval;
    t.recent_stack.clear();  // tracks change events only; the initial display is not one
    return t;
}

double spawn_interval(double player_speed, const RunConfig& cfg) {
    const double raw = cfg.dt_spawn_max - cfg.gamma * player_speed;
    return std::clamp(raw, cfg.dt_spawn_min, cfg.dt_spawn_max);
}

std::optional<Tile> maybe_spawn_tile(std::vector<Tile>& tiles, double& t_last_spawn, double now,
                                     double player_z, double player_speed, int theme_index,
                                     std::int64_t tick, std::uint64_t& next_id,
                                     const RunConfig& cfg) {
    if (tiles.empty()) {
        return std::nullopt;
    }
    const double interval = spawn_interval(player_speed, cfg);
    if (now <= t_last_spawn + interval) {
        return std::nullopt;
    }
    const Tile& frontier = tiles.back();
    if (frontier.z > player_z + cfg.spawn_suspend_ahead) {
        return std::nullopt;  // far enough ahead; spawning suspended
    }
    Tile tile;
    tile.id = next_id++;
    tile.z = frontier.z + cfg.tile_length;
    tile.length = cfg.tile_length;
    tile.theme_index = theme_index;
    tile.spawned_tick = tick;
    tiles.push_back(tile);
    t_last_spawn = now;
    return tile;
}

std::vector<Tile> cleanup_tiles(std::vector<Tile>& tiles, double player_z, double now,
                                const RunConfig& cfg) {
    for (Tile& t : tiles) {
        if (!t.destroy_deadline && player_z > t.z + cfg.tile_cleanup_distance) {
            t.destroy_deadline = now + cfg.tile_destroy_delay;
        }
    }
    std::vector<Tile> removed;
    auto expired = [&](const Tile& t) {
        return t.destroy_deadline && now >= *t.destroy_deadline;
    };
    for (const Tile& t : tiles) {
        if (expired(t)) {
            removed.push_back(t);
        }
    }
    if (!removed.empty()) {
        tiles.erase(std::remove_if(tiles.begin(), tiles.end(), expired), tiles.end());
    }
    return removed;
}

std::optional<int> advance_theme(ThemeState& theme, double player_z, RandomStream& rng,
                                 const RunConfig& cfg) {
    if (player_z < theme.next_change_z) {
        return std::nullopt;
    }
    theme.next_change_z += cfg.theme_interval;

    std::vector<int> candidates;
    for (int i = 0; i < theme.variant_count; ++i) {
        if (std::find(theme.recent_stack.begin(), theme.recent_stack.end(), i) ==
            theme.recent_stack.end()) {
            candidates.push_back(i);
        }
    }
    if (candidates.empty()) {
        // Degenerate single-variant world: the only option is a repeat.
        theme.recent_stack.clear();
        theme.recent_stack.push_back(theme.current_index);
        return theme.current_index;
    }
    const int pick = candidates[static_cast<std::size_t>(rng.next_below(candidates.size()))];
    theme.recent_stack.push_back(pick);
    if (static_cast<int>(theme.recent_stack.size()) >= theme.variant_count) {
        theme.recent_stack.clear();  // all variants shown; cycle restarts
    }
    theme.current_index = pick;
    return pick;
}

} // namespace momentum::terrain
