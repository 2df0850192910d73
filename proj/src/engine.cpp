#include "momentum/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>

#include "momentum/scan.hpp"

namespace momentum::sim {

namespace {

void rebuild_tile_colliders(WorldState& w) {
    w.tile_colliders.clear();
    w.tile_colliders.reserve(w.tiles.size());
    for (const terrain::Tile& t : w.tiles) {
        w.tile_colliders.push_back(terrain::tile_collider(t, w.config));
    }
}

void rebuild_object_colliders(WorldState& w) {
    w.object_colliders.clear();
    w.object_colliders.reserve(w.objects.size());
    for (const spawn::SpawnedObject& o : w.objects) {
        w.object_colliders.push_back(o.collider);
    }
}

geom::Aabb player_box(const WorldState& w) {
    geom::Aabb box;
    box.center = w.player.position + Vec3(0.0, w.config.player_height / 2.0, 0.0);
    box.half_extents = Vec3(w.config.player_half_width, w.config.player_height / 2.0,
                            w.config.player_half_depth);
    return box;
}

Vec3 find_respawn_target(const WorldState& w, double from_z) {
    const RunConfig& cfg = w.config;
    if (cfg.literal_respawn) {
        return w.player.spawn_point;
    }
    const auto spans = w.ground_spans();
    const auto obstacle_mask = geom::LayerMask::of({geom::Layer::Obstacles});
    for (double z = from_z; z <= from_z + 50.0; z += 0.5) {
        const auto h = geom::ground_height(0.0, z, spans, cfg.x_min, cfg.x_max);
        if (!h) {
            continue;
        }
        geom::Aabb box;
        box.center = Vec3(0.0, *h + cfg.player_height / 2.0, z);
        box.half_extents =
            Vec3(cfg.player_half_width, cfg.player_height / 2.0, cfg.player_half_depth);
        if (geom::overlap_box(box, w.object_colliders, obstacle_mask).empty()) {
            return Vec3(0.0, *h, z);
        }
    }
    return w.player.spawn_point;  // nothing safe nearby
}

void do_respawn(WorldState& w, std::vector<SimEvent>& events, const char* cause) {
    if (w.player.respawns_used >= w.config.max_respawns) {
        w.game_over = true;
        w.game_over_reason = std::string(cause) + ":respawn-budget-exhausted";
        SimEvent e{w.tick, EventKind::game_over, {}};
        e.data["reason"] = w.game_over_reason;
        e.data["respawns_used"] = w.player.respawns_used;
        events.push_back(std::move(e));
        return;
    }
    const Vec3 target = find_respawn_target(w, w.player.position.z());
    kin::apply_respawn(w.player, w.config, target);
    w.metrics.respawns += 1;
    SimEvent e{w.tick, EventKind::respawn, {}};
    e.data["cause"] = cause;
    e.data["x"] = target.x();
    e.data["z"] = target.z();
    e.data["respawns_used"] = w.player.respawns_used;
    events.push_back(std::move(e));
}

kin::PilotInput compute_pilot(WorldState& w) {
    const RunConfig& cfg = w.config;
    const double now = w.time();
    if (cfg.pilot_wander_amplitude > 0.0 && now >= w.next_wander_time) {
        w.pilot_target_x =
            w.rng_pilot.uniform(-cfg.pilot_wander_amplitude, cfg.pilot_wander_amplitude);
        w.next_wander_time = now + cfg.pilot_wander_period;
    }
    kin::PilotInput input;
    input.run = true;
    const double dx = w.pilot_target_x - w.player.position.x();
    input.h = std::abs(dx) > cfg.pilot_deadband ? (dx > 0.0 ? 1 : -1) : 0;
    input.jump = cfg.pilot_jump;
    return input;
}

bool segment_covered(const WorldState& w, double segment_z) {
    if (w.tiles.empty()) {
        return false;
    }
    return segment_z >= w.tiles.front().z &&
           segment_z + w.config.seg_length <= w.tiles.back().far_edge();
}

report::BlockageReport make_report(const WorldState& w, const scan::ScanSegmentResult& res,
                                   bool aerial, bool removed) {
    const RunConfig& cfg = w.config;
    report::BlockageReport r;
    r.scene_name = cfg.run_label;
    r.timestamp = w.timestamp_base;
    r.tick = w.tick;
    r.player_position = w.player.position;
    r.player_speed = w.player.velocity.norm();
    r.skybox_variant = w.theme.current_index;
    r.latest_ground_z = w.frontier_anchor_z();
    r.tile_length = cfg.tile_length;
    r.spawn_percentage = cfg.p_spawn;
    r.x_range = {cfg.x_min, cfg.x_max};
    r.clear_width = 2.0 * cfg.clear_half_width;
    r.jitter = cfg.z_jitter;
    r.tile_position = res.segment_z;
    r.probe_position = Vec3(cfg.lane_center(), cfg.aerial_altitude, res.segment_z);
    r.ray_spacing = cfg.x_step;
    r.hit_count = res.hit_count;
    r.agent = aerial ? "aerial" : "ground";
    r.removed = removed;

    // Y offset: the snap adjustment of the blocker nearest to the probe.
    double best_d2 = 0.0;
    const spawn::SpawnedObject* nearest = nullptr;
    for (const scan::BlockerInfo& b : res.blockers) {
        for (const spawn::SpawnedObject& o : w.objects) {
            if (o.id != b.owner_id) {
                continue;
            }
            const double d2 = (o.position - r.probe_position).squaredNorm();
            if (!nearest || d2 < best_d2) {
                nearest = &o;
                best_d2 = d2;
            }
        }
    }
    r.y_offset = nearest ? nearest->y_offset : 0.0;

    for (const scan::BlockerInfo& b : res.blockers) {
        report::BlockingObjectInfo info;
        info.name = b.root_name;
        info.position = b.position;
        info.size = b.size;
        info.layer = geom::layer_name(b.layer);
        r.blocking_objects.push_back(std::move(info));
    }
    return r;
}

void run_agent_scans(WorldState& w, std::vector<SimEvent>& events, bool aerial) {
    const RunConfig& cfg = w.config;
    double& next_scan_z = aerial ? w.aerial.next_scan_z : w.ground.next_scan_z;
    const double agent_z = aerial ? w.aerial.position.z() : w.ground.position.z();

    while (!w.game_over && agent_z >= next_scan_z && segment_covered(w, next_scan_z)) {
        scan::ScanParams params = scan::ScanParams::from_config(cfg);
        const scan::ScanSegmentResult res =
            scan::scan_corridor(next_scan_z, w.object_colliders, params);

        auto& acc = w.metrics;
        acc.s_total += 1;
        acc.rays_total += res.rays;
        acc.overlap_queries += 1;
        acc.max_rays_per_segment = std::max<std::int64_t>(acc.max_rays_per_segment, res.rays);
        if (aerial) {
            acc.s_total_aerial += 1;
            w.aerial.segments_scanned += 1;
            w.aerial.last_scanned_z = next_scan_z;
        } else {
            acc.s_total_ground += 1;
            w.ground.segments_scanned += 1;
        }

        SimEvent scan_event{w.tick, EventKind::scan, {}};
        scan_event.data["agent"] = aerial ? "aerial" : "ground";
        scan_event.data["segment_z"] = res.segment_z;
        scan_event.data["rows"] = res.rows;
        scan_event.data["rays"] = res.rays;
        scan_event.data["hit_count"] = res.hit_count;
        scan_event.data["overlap_hits"] = res.overlap_hits;
        scan_event.data["passable"] = res.passable;
        nlohmann::ordered_json blocker_ids = nlohmann::ordered_json::array();
        for (const scan::BlockerInfo& b : res.blockers) {
            blocker_ids.push_back(b.owner_id);
        }
        scan_event.data["blockers"] = std::move(blocker_ids);
        events.push_back(std::move(scan_event));

        if (!res.passable) {
            acc.s_blocked += 1;
            if (aerial) {
                acc.s_blocked_aerial += 1;
            } else {
                acc.s_blocked_ground += 1;
            }
            const bool removed = aerial && cfg.auto_remove;
            for (const scan::BlockerInfo& b : res.blockers) {
                acc.b_detected.insert(b.owner_id);
                (aerial ? acc.aerial_blockers : acc.ground_blockers).insert(b.owner_id);
            }
            report::report_blockage(w.reports, make_report(w, res, aerial, removed));

            SimEvent blockage_event{w.tick, EventKind::blockage, {}};
            blockage_event.data["agent"] = aerial ? "aerial" : "ground";
            blockage_event.data["segment_z"] = res.segment_z;
            blockage_event.data["report_index"] = w.reports.size() - 1;
            blockage_event.data["blocker_count"] = res.blockers.size();
            events.push_back(std::move(blockage_event));

            if (removed) {
                for (const scan::BlockerInfo& b : res.blockers) {
                    const auto before = w.objects.size();
                    w.objects.erase(std::remove_if(w.objects.begin(), w.objects.end(),
                                                   [&](const spawn::SpawnedObject& o) {
                                                       return o.id == b.owner_id;
                                                   }),
                                    w.objects.end());
                    if (w.objects.size() != before) {
                        acc.b_removed.insert(b.owner_id);
                        SimEvent removal_event{w.tick, EventKind::removal, {}};
                        removal_event.data["object_id"] = b.owner_id;
                        removal_event.data["name"] = b.root_name;
                        removal_event.data["segment_z"] = res.segment_z;
                        events.push_back(std::move(removal_event));
                    }
                }
                rebuild_object_colliders(w);
            }
        }
        next_scan_z += cfg.seg_length;
    }
}

void spawn_objects_on_tile(WorldState& w, const terrain::Tile& tile,
                           std::vector<SimEvent>* events) {
    const RunConfig& cfg = w.config;
    const spawn::TileGrid grid = spawn::build_grid(cfg);
    const int intended = spawn::intended_count(grid.cells, cfg.p_spawn);
    spawn::SpawnStats stats;
    const auto spans = w.ground_spans();
    auto placed = spawn::place_objects(grid, intended, tile, tile.theme_index, w.catalog,
                                       w.rng_spawner, spans, cfg, w.next_entity_id, stats);
    w.metrics.tiles.push_back({tile.z, stats.intended, stats.realized});
    for (auto& obj : placed) {
        w.metrics.prefab_histogram[obj.prefab_id] += 1;
        if (events != nullptr) {
            SimEvent e{w.tick, EventKind::object_spawned, {}};
            e.data["object_id"] = obj.id;
            e.data["prefab"] = obj.prefab_id;
            e.data["cell"] = obj.cell_index;
            e.data["x"] = obj.position.x();
            e.data["y"] = obj.position.y();
            e.data["z"] = obj.position.z();
            e.data["tile_z"] = obj.tile_z;
            events->push_back(std::move(e));
        }
        w.objects.push_back(std::move(obj));
    }
    if (!placed.empty()) {
        rebuild_object_colliders(w);
    }
}

} // namespace

std::string iso_timestamp_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

std::vector<geom::GroundSpan> WorldState::ground_spans() const {
    std::vector<geom::GroundSpan> spans;
    spans.reserve(tiles.size());
    for (const terrain::Tile& t : tiles) {
        spans.push_back(t.span());
    }
    return spans;
}

WorldState new_run(const RunConfig& cfg) {
    spawn::Catalog catalog =
        cfg.catalog_path.empty() ? spawn::default_catalog() : spawn::load_catalog(cfg.catalog_path);
    return new_run(cfg, std::move(catalog));
}

WorldState new_run(const RunConfig& cfg, spawn::Catalog catalog) {
    cfg.validate();
    if (catalog.prefabs.empty()) {
        throw ConfigError("invalid-catalog: catalog must contain at least one prefab");
    }

    WorldState w;
    w.config = cfg;
    w.catalog = std::move(catalog);
    w.rng_terrain = RandomStream(cfg.seed, "terrain");
    w.rng_spawner = RandomStream(cfg.seed, "spawner");
    w.rng_pilot = RandomStream(cfg.seed, "pilot");
    w.timestamp_base = cfg.fixed_timestamp.empty() ? iso_timestamp_now() : cfg.fixed_timestamp;

    // Initial tiles cover [-tile_length, +tile_length] (extended backwards if
    // the start position sits further back).
    const auto first_anchor = static_cast<std::int64_t>(
        std::min(-1.0, std::floor(cfg.start_z / cfg.tile_length)));
    for (std::int64_t k = first_anchor; k <= 0; ++k) {
        terrain::Tile tile;
        tile.id = w.next_entity_id++;
        tile.z = static_cast<double>(k) * cfg.tile_length;
        tile.length = cfg.tile_length;
        tile.theme_index = 0;
        tile.spawned_tick = 0;
        w.tiles.push_back(tile);
    }
    rebuild_tile_colliders(w);

    w.theme = terrain::make_theme_state(cfg);
    w.metrics.themes_active.insert(w.theme.current_index);

    w.player.position = Vec3(0.0, 0.0, cfg.start_z);
    w.player.spawn_point = w.player.position;
    w.player.grounded = true;
    w.prev_player_z = cfg.start_z;

    for (const terrain::Tile& tile : std::vector<terrain::Tile>(w.tiles)) {
        spawn_objects_on_tile(w, tile, nullptr);
    }

    // Initial synchronous bake so agents start on a valid surface.
    nav::begin_rebake(w.nav, w.tiles, w.objects, 0, 0.0, cfg.start_z, cfg);
    if (w.nav.pending) {
        w.nav.pending->done_tick = 0;
    }
    nav::complete_rebake(w.nav, 0, cfg);
    w.metrics.bakes_completed += 1;

    w.aerial.position = Vec3(cfg.delta_x_aerial, cfg.aerial_altitude, cfg.start_z);
    w.aerial.next_scan_z = cfg.start_z;
    w.aerial.last_scanned_z = cfg.start_z - cfg.seg_length;

    w.ground.position = Vec3(0.0, 0.0, cfg.start_z);
    w.ground.target = Vec3(0.0, 0.0, cfg.start_z + cfg.d_lookahead_ground);
    w.ground.next_scan_z = cfg.start_z;
    w.ground.window_start_tick = 0;
    w.ground.window_start_z = cfg.start_z;
    w.ground.observed_bake_version = w.nav.bake_version;

    return w;
}

std::vector<SimEvent> step(WorldState& w) {
    std::vector<SimEvent> events;
    if (w.game_over) {
        return events;
    }
    const RunConfig& cfg = w.config;
    const double now = w.time();

    // 1. Pilot input.
    const kin::PilotInput input = compute_pilot(w);

    // 2. Kinematics.
    kin::ground_check(w.player, w.tile_colliders, cfg);
    kin::update_velocity(w.player, input, cfg);
    kin::integrate(w.player, cfg.dt);
    if (kin::fallen(w.player, cfg)) {
        do_respawn(w, events, "fall");
        if (w.game_over) {
            w.tick += 1;
            return events;
        }
    }

    // 3. Terrain streaming.
    const double player_z = w.player.position.z();
    const double player_speed_est = std::abs(player_z - w.prev_player_z) / cfg.dt;
    w.prev_player_z = player_z;

    const auto new_tile =
        terrain::maybe_spawn_tile(w.tiles, w.t_last_tile_spawn, now, player_z, player_speed_est,
                                  w.theme.current_index, w.tick, w.next_entity_id, cfg);
    if (new_tile) {
        rebuild_tile_colliders(w);
        w.nav.tiles_since_bake += 1;
        SimEvent e{w.tick, EventKind::tile_spawned, {}};
        e.data["tile_id"] = new_tile->id;
        e.data["z"] = new_tile->z;
        e.data["theme"] = new_tile->theme_index;
        events.push_back(std::move(e));
    }
    const auto destroyed = terrain::cleanup_tiles(w.tiles, player_z, now, cfg);
    if (!destroyed.empty()) {
        rebuild_tile_colliders(w);
        for (const terrain::Tile& t : destroyed) {
            SimEvent e{w.tick, EventKind::tile_destroyed, {}};
            e.data["tile_id"] = t.id;
            e.data["z"] = t.z;
            events.push_back(std::move(e));
        }
    }
    const auto theme_pick = terrain::advance_theme(w.theme, player_z, w.rng_terrain, cfg);
    if (theme_pick) {
        w.metrics.theme_changes += 1;
        w.metrics.themes_active.insert(*theme_pick);
        SimEvent e{w.tick, EventKind::theme_change, {}};
        e.data["theme"] = *theme_pick;
        e.data["z"] = player_z;
        events.push_back(std::move(e));
    }

    // 4. Object spawn/despawn.
    if (new_tile) {
        spawn_objects_on_tile(w, *new_tile, &events);
    }
    const auto despawned =
        spawn::despawn_objects(w.objects, player_z, cfg.object_despawn_distance);
    if (!despawned.empty()) {
        rebuild_object_colliders(w);
        for (const spawn::SpawnedObject& o : despawned) {
            SimEvent e{w.tick, EventKind::object_despawned, {}};
            e.data["object_id"] = o.id;
            e.data["prefab"] = o.prefab_id;
            events.push_back(std::move(e));
        }
    }

    // 5. Navigation surface: complete due jobs, then maybe issue a new one.
    if (const auto version = nav::complete_rebake(w.nav, w.tick, cfg)) {
        w.metrics.bakes_completed += 1;
        SimEvent e{w.tick, EventKind::rebake_done, {}};
        e.data["version"] = *version;
        e.data["z_lo"] = w.nav.field.z_lo;
        e.data["z_hi"] = w.nav.field.z_hi;
        events.push_back(std::move(e));
    }
    const auto trigger = nav::should_rebake(w.nav, now, player_z, cfg);
    if (trigger != nav::RebakeTrigger::none) {
        nav::begin_rebake(w.nav, w.tiles, w.objects, w.tick, now, player_z, cfg);
        SimEvent e{w.tick, EventKind::rebake_begin, {}};
        e.data["trigger"] = nav::trigger_name(trigger);
        e.data["issue_tick"] = w.tick;
        e.data["done_tick"] = w.nav.pending->done_tick;
        events.push_back(std::move(e));
        if (const auto version = nav::complete_rebake(w.nav, w.tick, cfg)) {
            w.metrics.bakes_completed += 1;
            SimEvent done{w.tick, EventKind::rebake_done, {}};
            done.data["version"] = *version;
            done.data["z_lo"] = w.nav.field.z_lo;
            done.data["z_hi"] = w.nav.field.z_hi;
            events.push_back(std::move(done));
        }
    }

    // 6. Aerial agent.
    const Vec3 target =
        agents::aerial_target(w.player.position.x(), player_z, w.frontier_anchor_z(), cfg);
    agents::aerial_move(w.aerial, target, cfg);
    run_agent_scans(w, events, /*aerial=*/true);

    // 7. Ground agent.
    {
        agents::GroundAgentState& g = w.ground;
        if (g.idle_until_bake && w.nav.bake_version > g.observed_bake_version) {
            g.idle_until_bake = false;
            g.window_start_tick = w.tick;
            g.window_start_z = g.position.z();
        }
        ground_update_target(g, w.nav.field, w.player.position.x(), player_z, cfg);
        agents::ground_move(g, w.nav.field, w.player.velocity.z(), cfg);
        if (agents::detect_stuck(g, now, w.tick, cfg)) {
            const auto rr = agents::recover(g, w.nav.field, now, w.tick, cfg);
            if (rr.ok) {
                w.metrics.recoveries += 1;
            } else {
                g.observed_bake_version = w.nav.bake_version;
            }
            SimEvent e{w.tick, EventKind::recovery, {}};
            e.data["ok"] = rr.ok;
            e.data["from_z"] = rr.from.z();
            e.data["to_z"] = rr.to.z();
            e.data["recoveries"] = g.recoveries;
            events.push_back(std::move(e));
        } else if ((w.tick - g.window_start_tick) * cfg.dt >= cfg.stuck_window) {
            g.window_start_tick = w.tick;
            g.window_start_z = g.position.z();
        }
        run_agent_scans(w, events, /*aerial=*/false);
    }

    // 8. Encounter check.
    {
        const auto hits = geom::overlap_box(player_box(w), w.object_colliders,
                                            geom::LayerMask::of({geom::Layer::Obstacles}));
        if (!hits.empty()) {
            const geom::Collider* rep = *std::min_element(
                hits.begin(), hits.end(), [](const geom::Collider* a, const geom::Collider* b) {
                    return a->owner_id < b->owner_id;
                });
            w.metrics.encounters += 1;
            SimEvent e{w.tick, EventKind::encounter, {}};
            e.data["object_id"] = rep->owner_id;
            e.data["name"] = rep->root_name;
            e.data["z"] = w.player.position.z();
            events.push_back(std::move(e));
            do_respawn(w, events, "encounter");
        }
    }

    // 9. Metrics sampling.
    w.metrics.distance = w.score();
    w.metrics.nav_sample_failures = w.ground.nav_sample_failures;

    w.tick += 1;
    return events;
}

nlohmann::ordered_json summarize_run(const WorldState& w) {
    metrics::RunInfo info;
    info.ticks = w.tick;
    info.completed = !w.game_over && w.score() >= w.config.run_length;
    info.game_over_reason = w.game_over_reason;
    info.respawns_used = w.player.respawns_used;
    std::vector<int> themes(w.metrics.themes_active.begin(), w.metrics.themes_active.end());
    info.catalog_classes = w.catalog.class_count_for_themes(themes);
    return metrics::summarize(w.metrics, w.config, info);
}

RunResult run_to_completion(WorldState& w, const std::function<void(const SimEvent&)>& sink) {
    RunResult result;
    const RunConfig& cfg = w.config;
    // Safety net against a wedged run; generous enough never to bind at a
    // sane average speed.
    const auto tick_cap =
        static_cast<std::int64_t>((cfg.run_length / 0.5 + 3600.0) / cfg.dt);

    std::chrono::steady_clock::time_point t0;
    while (!w.game_over && w.score() < cfg.run_length && w.tick < tick_cap) {
        if (cfg.measure_frame_times) {
            t0 = std::chrono::steady_clock::now();
        }
        auto events = step(w);
        if (cfg.measure_frame_times) {
            const auto t1 = std::chrono::steady_clock::now();
            w.metrics.frame_ms.push_back(
                std::chrono::duration<double, std::milli>(t1 - t0).count());
        }
        for (auto& e : events) {
            if (sink) {
                sink(e);
            }
            result.events.push_back(std::move(e));
        }
    }
    if (!w.game_over && w.tick >= tick_cap && w.score() < cfg.run_length) {
        w.game_over = true;
        w.game_over_reason = "tick-budget-exhausted";
    }
    result.completed = !w.game_over && w.score() >= cfg.run_length;
    result.summary = summarize_run(w);
    return result;
}

nlohmann::ordered_json world_to_json(const WorldState& w) {
    nlohmann::ordered_json j;
    j["tick"] = w.tick;
    j["game_over"] = w.game_over;
    j["score"] = w.score();
    nlohmann::ordered_json player;
    player["position"] = {w.player.position.x(), w.player.position.y(), w.player.position.z()};
    player["velocity"] = {w.player.velocity.x(), w.player.velocity.y(), w.player.velocity.z()};
    player["grounded"] = w.player.grounded;
    player["jumping"] = w.player.jumping;
    player["respawns_used"] = w.player.respawns_used;
    j["player"] = std::move(player);
    nlohmann::ordered_json tiles = nlohmann::ordered_json::array();
    for (const terrain::Tile& t : w.tiles) {
        tiles.push_back({{"id", t.id}, {"z", t.z}, {"theme", t.theme_index}});
    }
    j["tiles"] = std::move(tiles);
    nlohmann::ordered_json objects = nlohmann::ordered_json::array();
    for (const spawn::SpawnedObject& o : w.objects) {
        objects.push_back({{"id", o.id},
                           {"prefab", o.prefab_id},
                           {"x", o.position.x()},
                           {"y", o.position.y()},
                           {"z", o.position.z()}});
    }
    j["objects"] = std::move(objects);
    j["theme"] = {{"current", w.theme.current_index}, {"next_change_z", w.theme.next_change_z}};
    j["nav"] = {{"version", w.nav.bake_version},
                {"z_lo", w.nav.field.z_lo},
                {"z_hi", w.nav.field.z_hi},
                {"pending", w.nav.pending.has_value()}};
    j["aerial"] = {{"z", w.aerial.position.z()}, {"next_scan_z", w.aerial.next_scan_z}};
    j["ground"] = {{"z", w.ground.position.z()},
                   {"next_scan_z", w.ground.next_scan_z},
                   {"recoveries", w.ground.recoveries}};
    j["rng"] = {{"terrain", w.rng_terrain.state()},
                {"spawner", w.rng_spawner.state()},
                {"pilot", w.rng_pilot.state()}};
    j["reports"] = w.reports.size();
    return j;
}

std::uint64_t state_fingerprint(const WorldState& w) {
    return RandomStream::fnv1a(world_to_json(w).dump());
}

} // namespace momentum::sim
