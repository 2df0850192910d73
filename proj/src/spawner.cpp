#include "momentum/spawner.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace momentum::spawn {

namespace {

constexpr double kSinkDepth = 0.3;
constexpr double kFloatGap = 0.5;
constexpr int kAttemptsPerCell = 5;

} // namespace

const char* snap_mode_name(SnapMode mode) {
    switch (mode) {
        case SnapMode::snap: return "snap-to-ground";
        case SnapMode::sink: return "sink";
        case SnapMode::floating: return "float";
    }
    return "snap-to-ground";
}

std::optional<SnapMode> snap_mode_from_name(const std::string& name) {
    if (name == "snap-to-ground" || name == "snap") return SnapMode::snap;
    if (name == "sink") return SnapMode::sink;
    if (name == "float" || name == "floating") return SnapMode::floating;
    return std::nullopt;
}

double snap_y_offset(SnapMode mode) {
    switch (mode) {
        case SnapMode::snap: return 0.0;
        case SnapMode::sink: return -kSinkDepth;
        case SnapMode::floating: return kFloatGap;
    }
    return 0.0;
}

std::vector<std::size_t> Catalog::indices_for_theme(int theme_index) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < prefabs.size(); ++i) {
        if (prefabs[i].theme_index == theme_index) {
            out.push_back(i);
        }
    }
    if (out.empty()) {
        // Fallback: a theme without prefabs of its own draws from everything.
        out.resize(prefabs.size());
        for (std::size_t i = 0; i < prefabs.size(); ++i) {
            out[i] = i;
        }
    }
    return out;
}

std::size_t Catalog::class_count_for_themes(std::span<const int> themes) const {
    std::size_t count = 0;
    for (const PrefabSpec& p : prefabs) {
        if (std::find(themes.begin(), themes.end(), p.theme_index) != themes.end()) {
            ++count;
        }
    }
    return count == 0 ? prefabs.size() : count;
}

const PrefabSpec* Catalog::find(const std::string& id) const {
    for (const PrefabSpec& p : prefabs) {
        if (p.id == id) {
            return &p;
        }
    }
    return nullptr;
}

Catalog default_catalog() {
    // Wide entries (trunk / ribcage / wall, x half-extent > 1.5 m) exceed the
    // ~0.98 m cell width by enough to intrude into the clear lane from the
    // cells bordering it; they are what makes blockages possible at all.
    Catalog c;
    c.prefabs = {
        {"PF0_rock", 0, Vec3(0.80, 0.80, 0.60), SnapMode::snap},
        {"PF0_tree", 0, Vec3(0.50, 2.50, 0.50), SnapMode::sink},
        {"PF0_trunk", 0, Vec3(2.30, 0.60, 0.45), SnapMode::snap},
        {"PF0_crystal", 0, Vec3(0.60, 0.90, 0.60), SnapMode::floating},
        {"PF1_cactus", 1, Vec3(0.45, 1.80, 0.45), SnapMode::snap},
        {"PF1_boulder", 1, Vec3(1.70, 1.10, 0.90), SnapMode::snap},
        {"PF1_ribcage", 1, Vec3(2.20, 1.20, 0.50), SnapMode::snap},
        {"PF1_barrel", 1, Vec3(0.50, 0.70, 0.50), SnapMode::snap},
        {"PF2_pillar", 2, Vec3(0.50, 3.00, 0.50), SnapMode::snap},
        {"PF2_slab", 2, Vec3(1.90, 0.80, 0.60), SnapMode::snap},
        {"PF2_urn", 2, Vec3(0.55, 0.70, 0.55), SnapMode::snap},
        {"PF2_wall", 2, Vec3(2.40, 1.50, 0.40), SnapMode::snap},
    };
    return c;
}

Catalog catalog_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("invalid-catalog: not valid JSON: ") + e.what());
    }
    if (!j.is_array()) {
        throw ConfigError("invalid-catalog: document root must be a JSON array");
    }
    Catalog c;
    for (const auto& entry : j) {
        if (!entry.is_object()) {
            throw ConfigError("invalid-catalog: entries must be objects");
        }
        PrefabSpec p;
        try {
            p.id = entry.at("id").get<std::string>();
            p.theme_index = entry.at("theme_index").get<int>();
            const auto he = entry.at("half_extents");
            if (!he.is_array() || he.size() != 3) {
                throw ConfigError("invalid-catalog: half_extents must be a 3-element array");
            }
            p.half_extents = Vec3(he[0].get<double>(), he[1].get<double>(), he[2].get<double>());
            const auto mode = snap_mode_from_name(entry.at("snap_mode").get<std::string>());
            if (!mode) {
                throw ConfigError("invalid-catalog: unknown snap_mode for prefab '" + p.id + "'");
            }
            p.snap_mode = *mode;
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(std::string("invalid-catalog: missing or mistyped field: ") + e.what());
        }
        if (p.half_extents.x() <= 0.0 || p.half_extents.y() <= 0.0 || p.half_extents.z() <= 0.0) {
            throw ConfigError("invalid-catalog: half_extents must be positive for '" + p.id + "'");
        }
        c.prefabs.push_back(std::move(p));
    }
    if (c.prefabs.empty()) {
        throw ConfigError("invalid-catalog: catalog must contain at least one prefab");
    }
    return c;
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("invalid-catalog: cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return catalog_from_json_text(buf.str());
}

std::string catalog_to_json_text(const Catalog& catalog) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const PrefabSpec& p : catalog.prefabs) {
        nlohmann::ordered_json e;
        e["id"] = p.id;
        e["theme_index"] = p.theme_index;
        e["half_extents"] = {p.half_extents.x(), p.half_extents.y(), p.half_extents.z()};
        e["snap_mode"] = snap_mode_name(p.snap_mode);
        out.push_back(e);
    }
    return out.dump(2);
}

bool TileGrid::is_clear(int i) const {
    return std::binary_search(clear_cells.begin(), clear_cells.end(), i);
}

TileGrid build_grid(const RunConfig& cfg) {
    TileGrid g;
    g.x_min = cfg.x_min;
    g.x_max = cfg.x_max;
    g.width = cfg.x_max - cfg.x_min;
    g.cells = std::max(static_cast<int>(std::ceil(g.width)), 12);
    for (int i = 0; i < g.cells; ++i) {
        if (std::abs(g.cell_center(i)) < cfg.clear_half_width) {
            g.clear_cells.push_back(i);
        }
    }
    return g;
}

int intended_count(int cells, double p_spawn) {
    const int raw = static_cast<int>(std::floor(cells * p_spawn / 100.0));
    return std::clamp(raw, 0, cells);
}

std::vector<SpawnedObject> place_objects(const TileGrid& grid, int intended,
                                         const terrain::Tile& tile, int theme_index,
                                         const Catalog& catalog, RandomStream& rng,
                                         std::span<const geom::GroundSpan> ground,
                                         const RunConfig& cfg, std::uint64_t& next_id,
                                         SpawnStats& stats) {
    stats = SpawnStats{};
    stats.tile_z = tile.z;
    stats.intended = intended;

    std::vector<SpawnedObject> placed;
    if (grid.cells <= 0) {
        return placed;
    }
    const auto theme_prefabs = catalog.indices_for_theme(theme_index);
    std::vector<bool> occupied(static_cast<std::size_t>(grid.cells), false);
    const double tile_center_z = tile.z + tile.length / 2.0;
    const int max_attempts = grid.cells * kAttemptsPerCell;

    int attempts = 0;
    while (static_cast<int>(placed.size()) < intended && attempts < max_attempts) {
        ++attempts;
        const int cell = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(grid.cells)));
        // Jitter is drawn before any validity check so the stream advances
        // identically for failed and successful attempts.
        const double jitter = rng.uniform(-cfg.z_jitter, cfg.z_jitter);
        if (occupied[static_cast<std::size_t>(cell)] || grid.is_clear(cell)) {
            continue;
        }
        const double x = grid.cell_center(cell);
        const double z = tile_center_z + jitter;
        const auto ground_y = geom::ground_height(x, z, ground, cfg.x_min, cfg.x_max);
        if (!ground_y) {
            continue;  // no valid ground hit; the attempt is skipped
        }
        const PrefabSpec& prefab =
            catalog.prefabs[theme_prefabs[rng.next_below(theme_prefabs.size())]];
        const double y_offset = snap_y_offset(prefab.snap_mode);

        SpawnedObject obj;
        obj.id = next_id++;
        obj.prefab_id = prefab.id;
        obj.position = Vec3(x, *ground_y + y_offset, z);
        obj.collider.aabb.center = Vec3(x, *ground_y + y_offset + prefab.half_extents.y(), z);
        obj.collider.aabb.half_extents = prefab.half_extents;
        obj.collider.layer = geom::Layer::Obstacles;
        obj.collider.owner_id = obj.id;
        obj.collider.root_name = prefab.id;
        obj.tile_z = tile.z;
        obj.cell_index = cell;
        obj.y_offset = y_offset;
        placed.push_back(std::move(obj));

        occupied[static_cast<std::size_t>(cell)] = true;
        if (cell > 0) {
            occupied[static_cast<std::size_t>(cell - 1)] = true;
        }
        if (cell + 1 < grid.cells) {
            occupied[static_cast<std::size_t>(cell + 1)] = true;
        }
    }

    stats.realized = static_cast<int>(placed.size());
    stats.attempts = attempts;
    return placed;
}

std::vector<SpawnedObject> despawn_objects(std::vector<SpawnedObject>& objects, double player_z,
                                           double threshold) {
    auto passed = [&](const SpawnedObject& o) { return player_z - o.position.z() > threshold; };
    std::vector<SpawnedObject> removed;
    for (const SpawnedObject& o : objects) {
        if (passed(o)) {
            removed.push_back(o);
        }
    }
    if (!removed.empty()) {
        objects.erase(std::remove_if(objects.begin(), objects.end(), passed), objects.end());
    }
    return removed;
}

int saturation_bound(const TileGrid& grid) {
    int bound = 0;
    int run = 0;
    for (int i = 0; i < grid.cells; ++i) {
        if (grid.is_clear(i)) {
            bound += (run + 1) / 2;  // ceil(run / 2)
            run = 0;
        } else {
            ++run;
        }
    }
    bound += (run + 1) / 2;
    return bound;
}

double saturation_threshold_percent(const TileGrid& grid) {
    if (grid.cells <= 0) {
        return 0.0;
    }
    return 100.0 * saturation_bound(grid) / grid.cells;
}

} // namespace momentum::spawn
