#include "momentum/navsurface.hpp"

#include <algorithm>
#include <cmath>

namespace momentum::nav {

const char* trigger_name(RebakeTrigger t) {
    switch (t) {
        case RebakeTrigger::none: return "none";
        case RebakeTrigger::time: return "time";
        case RebakeTrigger::count: return "count";
        case RebakeTrigger::position: return "position";
    }
    return "none";
}

bool WalkableField::cell_walkable(long ix, long iz) const {
    if (!valid) {
        return false;
    }
    const double x = cell_x(ix);
    const double z = cell_z(iz);
    if (z < z_lo || z > z_hi || x < x_min || x > x_max) {
        return false;
    }
    bool covered = false;
    for (const geom::GroundSpan& s : snap.tiles) {
        if (z >= s.z_begin && z <= s.z_end) {
            covered = true;
            break;
        }
    }
    if (!covered) {
        return false;
    }
    for (const ObstacleRect& o : snap.obstacles) {
        if (o.blocks(x, z)) {
            return false;
        }
    }
    return true;
}

bool WalkableField::walkable(double x, double z) const {
    return cell_walkable(x_index(x), z_index(z));
}

std::optional<Vec3> WalkableField::sample(const Vec3& p, double radius) const {
    if (!valid || p.z() < z_lo || p.z() > z_hi) {
        return std::nullopt;
    }
    if (walkable(p.x(), p.z())) {
        return Vec3(p.x(), surface_y, p.z());
    }
    const long iz_lo = z_index(p.z() - radius);
    const long iz_hi = z_index(p.z() + radius);
    const long ix_lo = x_index(std::max(p.x() - radius, x_min));
    const long ix_hi = x_index(std::min(p.x() + radius, x_max));
    const double r2 = radius * radius;

    bool found = false;
    double best_d2 = 0.0;
    long best_ix = 0;
    long best_iz = 0;
    for (long iz = iz_lo; iz <= iz_hi; ++iz) {
        for (long ix = ix_lo; ix <= ix_hi; ++ix) {
            const double dx = cell_x(ix) - p.x();
            const double dz = cell_z(iz) - p.z();
            const double d2 = dx * dx + dz * dz;
            if (d2 > r2) {
                continue;
            }
            if (!cell_walkable(ix, iz)) {
                continue;
            }
            // Ties break towards the lower (iz, ix) pair for determinism.
            if (!found || d2 < best_d2 ||
                (d2 == best_d2 && (iz < best_iz || (iz == best_iz && ix < best_ix)))) {
                found = true;
                best_d2 = d2;
                best_ix = ix;
                best_iz = iz;
            }
        }
    }
    if (!found) {
        return std::nullopt;
    }
    return Vec3(cell_x(best_ix), surface_y, cell_z(best_iz));
}

RebakeTrigger should_rebake(const NavState& nav, double now, double player_z,
                            const RunConfig& cfg) {
    if (nav.pending) {
        return RebakeTrigger::none;  // wait until the in-flight job completes
    }
    if (now - nav.last_bake_time >= cfg.nav_time_trigger) {
        return RebakeTrigger::time;
    }
    const double advance = player_z - nav.baked_at_player_z;
    if (nav.tiles_since_bake >= cfg.nav_tile_trigger || advance > 2.0 * cfg.tile_length) {
        return RebakeTrigger::count;
    }
    if (advance > cfg.nav_position_trigger) {
        return RebakeTrigger::position;
    }
    return RebakeTrigger::none;
}

NavSnapshot capture_snapshot(std::span<const terrain::Tile> tiles,
                             std::span<const spawn::SpawnedObject> objects,
                             const RunConfig& cfg) {
    NavSnapshot snap;
    snap.tiles.reserve(tiles.size());
    for (const terrain::Tile& t : tiles) {
        snap.tiles.push_back(t.span());
    }
    snap.obstacles.reserve(objects.size());
    for (const spawn::SpawnedObject& o : objects) {
        ObstacleRect r;
        r.x_center = o.collider.aabb.center.x();
        r.z_center = o.collider.aabb.center.z();
        r.half_x = o.collider.aabb.half_extents.x() + cfg.nav_agent_radius;
        r.half_z = o.collider.aabb.half_extents.z() + cfg.nav_agent_radius;
        snap.obstacles.push_back(r);
    }
    return snap;
}

bool begin_rebake(NavState& nav, std::span<const terrain::Tile> tiles,
                  std::span<const spawn::SpawnedObject> objects, std::int64_t now_tick,
                  double now_time, double player_z, const RunConfig& cfg) {
    if (nav.pending) {
        return false;
    }
    PendingBake job;
    job.issue_tick = now_tick;
    job.done_tick = now_tick + cfg.rebake_latency;
    job.player_z_at_issue = player_z;
    job.snap = capture_snapshot(tiles, objects, cfg);
    nav.pending = std::move(job);
    nav.tiles_since_bake = 0;
    nav.last_bake_time = now_time;
    nav.baked_at_player_z = player_z;
    return true;
}

std::optional<int> complete_rebake(NavState& nav, std::int64_t now_tick, const RunConfig& cfg) {
    if (!nav.pending || now_tick < nav.pending->done_tick) {
        return std::nullopt;
    }
    WalkableField field;
    field.valid = true;
    field.bake_version = ++nav.bake_version;
    field.z_lo = nav.pending->player_z_at_issue - cfg.d_behind;
    field.z_hi = nav.pending->player_z_at_issue + cfg.d_ahead;
    field.x_min = cfg.x_min;
    field.x_max = cfg.x_max;
    field.cell = cfg.nav_cell_size;
    field.surface_y = 0.0;
    field.snap = std::move(nav.pending->snap);
    nav.field = std::move(field);
    nav.pending.reset();
    return nav.bake_version;
}

} // namespace momentum::nav
