#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "momentum/config.hpp"
#include "momentum/geometry.hpp"
#include "momentum/rng.hpp"
#include "momentum/terrain.hpp"

namespace momentum::spawn {

enum class SnapMode { snap, sink, floating };

const char* snap_mode_name(SnapMode mode);
std::optional<SnapMode> snap_mode_from_name(const std::string& name);

// Vertical adjustment applied on top of the ground hit for each snap mode.
double snap_y_offset(SnapMode mode);

struct PrefabSpec {
    std::string id;
    int theme_index = 0;
    Vec3 half_extents = Vec3(0.5, 0.5, 0.5);
    SnapMode snap_mode = SnapMode::snap;
};

// Obstacle prefab catalog, grouped by theme with a fallback to the whole
// catalog when a theme has no entries of its own.
struct Catalog {
    std::vector<PrefabSpec> prefabs;

    std::vector<std::size_t> indices_for_theme(int theme_index) const;
    std::size_t class_count() const { return prefabs.size(); }
    std::size_t class_count_for_themes(std::span<const int> themes) const;
    const PrefabSpec* find(const std::string& id) const;
};

Catalog default_catalog();
Catalog catalog_from_json_text(const std::string& text);
Catalog load_catalog(const std::string& path);
std::string catalog_to_json_text(const Catalog& catalog);

// One-dimensional placement grid across the tile's x extent.
struct TileGrid {
    double x_min = 0.0;
    double x_max = 0.0;
    double width = 0.0;
    int cells = 0;
    std::vector<int> clear_cells;  // ascending indices with |center| < clear_half_width

    double cell_width() const { return width / cells; }
    double cell_center(int i) const { return x_min + (i + 0.5) * cell_width(); }
    bool is_clear(int i) const;
};

// W = x_max - x_min; N = max(ceil(W), 12); clear cells excluded from placement.
TileGrid build_grid(const RunConfig& cfg);

// K = clamp(floor(N * p / 100), 0, N)
int intended_count(int cells, double p_spawn);

struct SpawnedObject {
    std::uint64_t id = 0;
    std::string prefab_id;
    Vec3 position = Vec3::Zero();  // base point (x = cell center, y after snap, z jittered)
    geom::Collider collider;
    double tile_z = 0.0;
    int cell_index = 0;
    double y_offset = 0.0;  // the snap-mode adjustment recorded for crash reports
};

struct SpawnStats {
    double tile_z = 0.0;
    int intended = 0;
    int realized = 0;
    int attempts = 0;
};

// Constraint-driven placement on one tile. Per attempt the draw order is
// fixed: cell index, then z jitter, then (only after a valid ground hit) the
// prefab pick. A successful placement marks cells i-1, i, i+1 occupied.
// Attempts are capped at 5 * N.
std::vector<SpawnedObject> place_objects(const TileGrid& grid, int intended,
                                         const terrain::Tile& tile, int theme_index,
                                         const Catalog& catalog, RandomStream& rng,
                                         std::span<const geom::GroundSpan> ground,
                                         const RunConfig& cfg, std::uint64_t& next_id,
                                         SpawnStats& stats);

// Removes every object the player has passed by more than `threshold`
// (strict inequality). Returns the removed objects in their stored order.
std::vector<SpawnedObject> despawn_objects(std::vector<SpawnedObject>& objects, double player_z,
                                           double threshold);

// Maximum number of objects that can coexist on one tile: the maximum
// independent set over non-clear cells where adjacency means consecutive
// indices. Closed form: sum of ceil(len/2) over contiguous candidate runs.
int saturation_bound(const TileGrid& grid);

// Smallest p_spawn (percent) whose intended count reaches the saturation
// bound: 100 * bound / N.
double saturation_threshold_percent(const TileGrid& grid);

} // namespace momentum::spawn
