#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <nlohmann/json_fwd.hpp>

namespace momentum {

// Raised when a RunConfig violates an invariant. The message names the
// offending field so CLI users can fix the config document directly.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Every tunable of a run. A (RunConfig, seed) pair fully determines the
// simulation: all randomness flows through named streams derived from `seed`,
// and the tick pipeline order is fixed.
struct RunConfig {
    // Run shape
    double dt = 0.02;              // seconds per tick
    double run_length = 2000.0;    // metres of forward progress to complete
    std::uint64_t seed = 1;
    std::string run_label = "momentum";

    // Terrain streaming
    double tile_length = 96.0;
    double x_min = -7.1;
    double x_max = 10.55;
    double spawn_suspend_ahead = 1000.0;   // suspend tile spawning when frontier leads player by more
    double tile_cleanup_distance = 500.0;  // schedule tile destruction once player leads by more
    double tile_destroy_delay = 5.0;       // seconds between scheduling and removal
    double dt_spawn_min = 0.5;
    double dt_spawn_max = 2.0;
    double gamma = 0.01;                   // seconds of interval contraction per m/s of player speed

    // Theme cycling
    double theme_interval = 2000.0;
    int theme_variant_count = 3;

    // Object spawning
    double p_spawn = 40.0;                 // percent, 0..100
    double clear_half_width = 2.0;
    double z_jitter = 3.0;
    double object_despawn_distance = 50.0;
    std::string catalog_path;              // empty -> built-in default catalog

    // Navigation surface
    double d_ahead = 600.0;
    double d_behind = 50.0;
    double nav_time_trigger = 1.0;         // seconds between time-based rebakes
    int nav_tile_trigger = 5;              // tiles spawned since last bake
    double nav_position_trigger = 50.0;    // metres of player advance since last bake
    int rebake_latency = 25;               // ticks between bake issue and completion
    double nav_cell_size = 0.25;
    double nav_agent_radius = 0.5;
    double nav_sample_radius = 5.0;

    // Aerial agent
    double delta_z_aerial = 200.0;
    double delta_x_aerial = 0.0;
    double aerial_altitude = 15.0;         // flight height; also the scan-ray origin height
    double aerial_smooth_time = 0.3;
    double aerial_max_speed = 60.0;
    bool auto_remove = false;

    // Corridor scanning
    double seg_length = 10.0;
    double row_gap = 0.5;
    double x_step = 0.05;
    double sweep_width = 2.15;
    double w_clear = 2.0;

    // Ground agent
    double d_lookahead_ground = 300.0;
    double ground_min_speed = 10.0;
    double v_boost_ground = 5.0;
    double stuck_window = 1.0;
    double stuck_z_threshold = 0.1;
    double speed_epsilon = 0.01;
    double recovery_step = 5.0;
    double recovery_cooldown = 2.0;
    double recovery_search_horizon = 30.0;

    // Player kinematics
    double run_speed = 12.0;       // not in the source material; documented default
    double side_speed = 6.0;       // not in the source material; documented default
    double jump_force = 7.0;       // not in the source material; documented default
    double jump_forward_boost = 2.0;
    double gravity = 9.81;
    double damping = 2.0;          // 1/s, applied to unforced horizontal velocity
    double fall_respawn_y = -8.0;
    double ground_ray_length = 0.3;
    int max_respawns = 9;
    bool literal_respawn = false;  // teleport to the initial spawn point instead of the local lane centre
    double player_half_width = 0.4;
    double player_height = 1.8;
    double player_half_depth = 0.4;
    double start_z = -45.0;

    // Scripted pilot
    double pilot_wander_amplitude = 0.0;   // 0 -> hold the lane centre
    double pilot_wander_period = 2.0;
    bool pilot_jump = false;
    double pilot_deadband = 0.15;

    // Instrumentation
    bool measure_frame_times = false;      // off by default to keep summary.json byte-reproducible
    std::string fixed_timestamp;           // ISO-8601 string used verbatim in reports when set

    // Throws ConfigError naming the first violated field.
    void validate() const;

    double x_width() const { return x_max - x_min; }
    double lane_center() const { return 0.0; }
};

RunConfig config_from_json(const nlohmann::json& j);
RunConfig load_config(const std::string& path);
nlohmann::ordered_json config_to_json(const RunConfig& cfg);

} // namespace momentum
