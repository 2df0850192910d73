#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "momentum/aerial_agent.hpp"
#include "momentum/config.hpp"
#include "momentum/geometry.hpp"
#include "momentum/ground_agent.hpp"
#include "momentum/kinematics.hpp"
#include "momentum/metrics.hpp"
#include "momentum/navsurface.hpp"
#include "momentum/reporter.hpp"
#include "momentum/rng.hpp"
#include "momentum/spawner.hpp"
#include "momentum/terrain.hpp"

namespace momentum::sim {

// Complete state of one simulation. Value-semantic: copying a WorldState
// forks the run. A world is never shared mutably across threads; independent
// runs parallelize by owning independent worlds.
struct WorldState {
    RunConfig config;
    spawn::Catalog catalog;

    std::int64_t tick = 0;
    bool game_over = false;
    std::string game_over_reason;

    kin::PlayerState player;
    std::vector<terrain::Tile> tiles;
    std::vector<spawn::SpawnedObject> objects;
    terrain::ThemeState theme;
    nav::NavState nav;
    agents::AerialState aerial;
    agents::GroundAgentState ground;

    metrics::MetricsAccumulator metrics;
    report::ReportCache reports;

    RandomStream rng_terrain;
    RandomStream rng_spawner;
    RandomStream rng_pilot;

    double t_last_tile_spawn = 0.0;
    double prev_player_z = 0.0;
    double pilot_target_x = 0.0;
    double next_wander_time = 0.0;
    std::uint64_t next_entity_id = 1;
    std::string timestamp_base;

    // Collider caches mirroring `tiles` / `objects`; rebuilt on mutation.
    std::vector<geom::Collider> tile_colliders;
    std::vector<geom::Collider> object_colliders;

    double time() const { return static_cast<double>(tick) * config.dt; }
    double score() const { return kin::score(player, config); }
    double frontier_anchor_z() const { return tiles.empty() ? config.start_z : tiles.back().z; }
    double frontier_far_edge() const {
        return tiles.empty() ? config.start_z : tiles.back().far_edge();
    }
    std::vector<geom::GroundSpan> ground_spans() const;
};

} // namespace momentum::sim
