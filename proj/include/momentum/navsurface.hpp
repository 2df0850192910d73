#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "momentum/config.hpp"
#include "momentum/geometry.hpp"
#include "momentum/spawner.hpp"
#include "momentum/terrain.hpp"

namespace momentum::nav {

// Obstacle footprint captured at bake time, already inflated by the agent
// radius.
struct ObstacleRect {
    double x_center = 0.0;
    double z_center = 0.0;
    double half_x = 0.0;
    double half_z = 0.0;

    bool blocks(double x, double z) const {
        return std::abs(x - x_center) <= half_x && std::abs(z - z_center) <= half_z;
    }
};

struct NavSnapshot {
    std::vector<geom::GroundSpan> tiles;
    std::vector<ObstacleRect> obstacles;
};

// Walkable-surface surrogate: queries are quantized to a fixed lateral x
// longitudinal grid and answered from the bake-time snapshot, never from the
// live world. That staleness is deliberate; it reproduces the seam artefacts
// of runtime-baked navigation.
struct WalkableField {
    bool valid = false;
    int bake_version = 0;
    double z_lo = 0.0;
    double z_hi = 0.0;
    double x_min = 0.0;
    double x_max = 0.0;
    double cell = 0.25;
    double surface_y = 0.0;
    NavSnapshot snap;

    long x_index(double x) const { return static_cast<long>(std::floor((x - x_min) / cell)); }
    long z_index(double z) const { return static_cast<long>(std::floor(z / cell)); }
    double cell_x(long ix) const { return x_min + (static_cast<double>(ix) + 0.5) * cell; }
    double cell_z(long iz) const { return (static_cast<double>(iz) + 0.5) * cell; }

    bool cell_walkable(long ix, long iz) const;
    // Quantizes to the containing cell and answers for its center.
    bool walkable(double x, double z) const;

    // `p` itself when already walkable; otherwise the nearest walkable cell
    // center within `radius`. Queries outside [z_lo, z_hi] return nothing.
    std::optional<Vec3> sample(const Vec3& p, double radius) const;
};

enum class RebakeTrigger { none, time, count, position };

const char* trigger_name(RebakeTrigger t);

struct PendingBake {
    std::int64_t issue_tick = 0;
    std::int64_t done_tick = 0;
    double player_z_at_issue = 0.0;
    NavSnapshot snap;
};

struct NavState {
    WalkableField field;
    std::optional<PendingBake> pending;
    double last_bake_time = 0.0;
    double baked_at_player_z = 0.0;
    int tiles_since_bake = 0;
    int bake_version = 0;
};

// First firing trigger in (time, count, position) order; none while a job is
// pending.
RebakeTrigger should_rebake(const NavState& nav, double now, double player_z,
                            const RunConfig& cfg);

NavSnapshot capture_snapshot(std::span<const terrain::Tile> tiles,
                             std::span<const spawn::SpawnedObject> objects,
                             const RunConfig& cfg);

// Issues an asynchronous bake job over a snapshot of the current scene.
// Returns false (busy) while another job is in flight.
bool begin_rebake(NavState& nav, std::span<const terrain::Tile> tiles,
                  std::span<const spawn::SpawnedObject> objects, std::int64_t now_tick,
                  double now_time, double player_z, const RunConfig& cfg);

// Swaps in the finished field once the job's done_tick has arrived. Returns
// the new bake version, or nothing if no job was due.
std::optional<int> complete_rebake(NavState& nav, std::int64_t now_tick, const RunConfig& cfg);

} // namespace momentum::nav
