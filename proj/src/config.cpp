#include "momentum/config.hpp"

#include <fstream>
#include <functional>
#include <map>

#include <nlohmann/json.hpp>

namespace momentum {

namespace {

void require(bool ok, const char* message) {
    if (!ok) {
        throw ConfigError(message);
    }
}

} // namespace

void RunConfig::validate() const {
    require(dt > 0.0, "invalid-config: dt must be > 0");
    require(run_length >= 0.0, "invalid-config: run_length must be >= 0");
    require(tile_length > 0.0, "invalid-config: tile_length must be > 0");
    require(x_min < x_max, "invalid-config: x_range requires x_min < x_max");
    require(p_spawn >= 0.0 && p_spawn <= 100.0, "invalid-config: p_spawn must be in [0, 100]");
    require(clear_half_width >= 0.0, "invalid-config: clear_half_width must be >= 0");
    require(clear_half_width < (x_max - x_min) / 2.0,
            "invalid-config: clear_half_width must be < (x_max - x_min) / 2");
    require(z_jitter >= 0.0, "invalid-config: z_jitter must be >= 0");
    require(dt_spawn_min <= dt_spawn_max, "invalid-config: dt_spawn_min must be <= dt_spawn_max");
    require(dt_spawn_min >= 0.0, "invalid-config: dt_spawn_min must be >= 0");
    require(gamma >= 0.0, "invalid-config: gamma must be >= 0");
    require(spawn_suspend_ahead >= 0.0, "invalid-config: spawn_suspend_ahead must be >= 0");
    require(tile_cleanup_distance >= 0.0, "invalid-config: tile_cleanup_distance must be >= 0");
    require(tile_destroy_delay >= 0.0, "invalid-config: tile_destroy_delay must be >= 0");
    require(theme_interval > 0.0, "invalid-config: theme_interval must be > 0");
    require(theme_variant_count >= 1, "invalid-config: theme_variant_count must be >= 1");
    require(object_despawn_distance >= 0.0, "invalid-config: object_despawn_distance must be >= 0");
    require(d_ahead >= 0.0, "invalid-config: d_ahead must be >= 0");
    require(d_behind >= 0.0, "invalid-config: d_behind must be >= 0");
    require(nav_time_trigger > 0.0, "invalid-config: nav_time_trigger must be > 0");
    require(nav_tile_trigger >= 1, "invalid-config: nav_tile_trigger must be >= 1");
    require(nav_position_trigger > 0.0, "invalid-config: nav_position_trigger must be > 0");
    require(rebake_latency >= 0, "invalid-config: rebake_latency must be >= 0");
    require(nav_cell_size > 0.0, "invalid-config: nav_cell_size must be > 0");
    require(nav_agent_radius >= 0.0, "invalid-config: nav_agent_radius must be >= 0");
    require(nav_sample_radius > 0.0, "invalid-config: nav_sample_radius must be > 0");
    require(delta_z_aerial >= 0.0, "invalid-config: delta_z_aerial must be >= 0");
    require(aerial_altitude > 0.0, "invalid-config: aerial_altitude must be > 0");
    require(aerial_smooth_time > 0.0, "invalid-config: aerial_smooth_time must be > 0");
    require(aerial_max_speed > 0.0, "invalid-config: aerial_max_speed must be > 0");
    require(seg_length > 0.0, "invalid-config: seg_length must be > 0");
    require(row_gap > 0.0, "invalid-config: row_gap must be > 0");
    require(x_step > 0.0, "invalid-config: x_step must be > 0");
    require(sweep_width > 0.0, "invalid-config: sweep_width must be > 0");
    require(w_clear >= 0.0, "invalid-config: w_clear must be >= 0");
    require(d_lookahead_ground >= 0.0, "invalid-config: d_lookahead_ground must be >= 0");
    require(ground_min_speed >= 0.0, "invalid-config: ground_min_speed must be >= 0");
    require(v_boost_ground >= 0.0, "invalid-config: v_boost_ground must be >= 0");
    require(stuck_window > 0.0, "invalid-config: stuck_window must be > 0");
    require(stuck_z_threshold >= 0.0, "invalid-config: stuck_z_threshold must be >= 0");
    require(speed_epsilon >= 0.0, "invalid-config: speed_epsilon must be >= 0");
    require(recovery_step >= 0.0, "invalid-config: recovery_step must be >= 0");
    require(recovery_cooldown >= 0.0, "invalid-config: recovery_cooldown must be >= 0");
    require(recovery_search_horizon >= 0.0, "invalid-config: recovery_search_horizon must be >= 0");
    require(run_speed >= 0.0, "invalid-config: run_speed must be >= 0");
    require(side_speed >= 0.0, "invalid-config: side_speed must be >= 0");
    require(jump_force >= 0.0, "invalid-config: jump_force must be >= 0");
    require(jump_forward_boost >= 0.0, "invalid-config: jump_forward_boost must be >= 0");
    require(gravity >= 0.0, "invalid-config: gravity must be >= 0");
    require(damping >= 0.0, "invalid-config: damping must be >= 0");
    require(ground_ray_length > 0.0, "invalid-config: ground_ray_length must be > 0");
    require(max_respawns >= 0, "invalid-config: max_respawns must be >= 0");
    require(player_half_width > 0.0, "invalid-config: player_half_width must be > 0");
    require(player_height > 0.0, "invalid-config: player_height must be > 0");
    require(player_half_depth > 0.0, "invalid-config: player_half_depth must be > 0");
    require(pilot_wander_amplitude >= 0.0, "invalid-config: pilot_wander_amplitude must be >= 0");
    require(pilot_wander_period > 0.0, "invalid-config: pilot_wander_period must be > 0");
    require(pilot_deadband >= 0.0, "invalid-config: pilot_deadband must be >= 0");
}

namespace {

// Field table shared by the reader and the writer so the JSON schema and the
// struct cannot drift apart.
struct FieldBinding {
    std::function<void(RunConfig&, const nlohmann::json&)> read;
    std::function<nlohmann::ordered_json(const RunConfig&)> write;
};

template <typename T, typename Member>
FieldBinding field_of(Member member) {
    return FieldBinding{
        [member](RunConfig& cfg, const nlohmann::json& v) { cfg.*member = v.get<T>(); },
        [member](const RunConfig& cfg) { return nlohmann::ordered_json(cfg.*member); },
    };
}

const std::vector<std::pair<std::string, FieldBinding>>& field_table() {
    static const std::vector<std::pair<std::string, FieldBinding>> table = {
        {"dt", field_of<double>(&RunConfig::dt)},
        {"run_length", field_of<double>(&RunConfig::run_length)},
        {"seed", field_of<std::uint64_t>(&RunConfig::seed)},
        {"run_label", field_of<std::string>(&RunConfig::run_label)},
        {"tile_length", field_of<double>(&RunConfig::tile_length)},
        {"x_min", field_of<double>(&RunConfig::x_min)},
        {"x_max", field_of<double>(&RunConfig::x_max)},
        {"spawn_suspend_ahead", field_of<double>(&RunConfig::spawn_suspend_ahead)},
        {"tile_cleanup_distance", field_of<double>(&RunConfig::tile_cleanup_distance)},
        {"tile_destroy_delay", field_of<double>(&RunConfig::tile_destroy_delay)},
        {"dt_spawn_min", field_of<double>(&RunConfig::dt_spawn_min)},
        {"dt_spawn_max", field_of<double>(&RunConfig::dt_spawn_max)},
        {"gamma", field_of<double>(&RunConfig::gamma)},
        {"theme_interval", field_of<double>(&RunConfig::theme_interval)},
        {"theme_variant_count", field_of<int>(&RunConfig::theme_variant_count)},
        {"p_spawn", field_of<double>(&RunConfig::p_spawn)},
        {"clear_half_width", field_of<double>(&RunConfig::clear_half_width)},
        {"z_jitter", field_of<double>(&RunConfig::z_jitter)},
        {"object_despawn_distance", field_of<double>(&RunConfig::object_despawn_distance)},
        {"catalog_path", field_of<std::string>(&RunConfig::catalog_path)},
        {"d_ahead", field_of<double>(&RunConfig::d_ahead)},
        {"d_behind", field_of<double>(&RunConfig::d_behind)},
        {"nav_time_trigger", field_of<double>(&RunConfig::nav_time_trigger)},
        {"nav_tile_trigger", field_of<int>(&RunConfig::nav_tile_trigger)},
        {"nav_position_trigger", field_of<double>(&RunConfig::nav_position_trigger)},
        {"rebake_latency", field_of<int>(&RunConfig::rebake_latency)},
        {"nav_cell_size", field_of<double>(&RunConfig::nav_cell_size)},
        {"nav_agent_radius", field_of<double>(&RunConfig::nav_agent_radius)},
        {"nav_sample_radius", field_of<double>(&RunConfig::nav_sample_radius)},
        {"delta_z_aerial", field_of<double>(&RunConfig::delta_z_aerial)},
        {"delta_x_aerial", field_of<double>(&RunConfig::delta_x_aerial)},
        {"aerial_altitude", field_of<double>(&RunConfig::aerial_altitude)},
        {"aerial_smooth_time", field_of<double>(&RunConfig::aerial_smooth_time)},
        {"aerial_max_speed", field_of<double>(&RunConfig::aerial_max_speed)},
        {"auto_remove", field_of<bool>(&RunConfig::auto_remove)},
        {"seg_length", field_of<double>(&RunConfig::seg_length)},
        {"row_gap", field_of<double>(&RunConfig::row_gap)},
        {"x_step", field_of<double>(&RunConfig::x_step)},
        {"sweep_width", field_of<double>(&RunConfig::sweep_width)},
        {"w_clear", field_of<double>(&RunConfig::w_clear)},
        {"d_lookahead_ground", field_of<double>(&RunConfig::d_lookahead_ground)},
        {"ground_min_speed", field_of<double>(&RunConfig::ground_min_speed)},
        {"v_boost_ground", field_of<double>(&RunConfig::v_boost_ground)},
        {"stuck_window", field_of<double>(&RunConfig::stuck_window)},
        {"stuck_z_threshold", field_of<double>(&RunConfig::stuck_z_threshold)},
        {"speed_epsilon", field_of<double>(&RunConfig::speed_epsilon)},
        {"recovery_step", field_of<double>(&RunConfig::recovery_step)},
        {"recovery_cooldown", field_of<double>(&RunConfig::recovery_cooldown)},
        {"recovery_search_horizon", field_of<double>(&RunConfig::recovery_search_horizon)},
        {"run_speed", field_of<double>(&RunConfig::run_speed)},
        {"side_speed", field_of<double>(&RunConfig::side_speed)},
        {"jump_force", field_of<double>(&RunConfig::jump_force)},
        {"jump_forward_boost", field_of<double>(&RunConfig::jump_forward_boost)},
        {"gravity", field_of<double>(&RunConfig::gravity)},
        {"damping", field_of<double>(&RunConfig::damping)},
        {"fall_respawn_y", field_of<double>(&RunConfig::fall_respawn_y)},
        {"ground_ray_length", field_of<double>(&RunConfig::ground_ray_length)},
        {"max_respawns", field_of<int>(&RunConfig::max_respawns)},
        {"literal_respawn", field_of<bool>(&RunConfig::literal_respawn)},
        {"player_half_width", field_of<double>(&RunConfig::player_half_width)},
        {"player_height", field_of<double>(&RunConfig::player_height)},
        {"player_half_depth", field_of<double>(&RunConfig::player_half_depth)},
        {"start_z", field_of<double>(&RunConfig::start_z)},
        {"pilot_wander_amplitude", field_of<double>(&RunConfig::pilot_wander_amplitude)},
        {"pilot_wander_period", field_of<double>(&RunConfig::pilot_wander_period)},
        {"pilot_jump", field_of<bool>(&RunConfig::pilot_jump)},
        {"pilot_deadband", field_of<double>(&RunConfig::pilot_deadband)},
        {"measure_frame_times", field_of<bool>(&RunConfig::measure_frame_times)},
        {"fixed_timestamp", field_of<std::string>(&RunConfig::fixed_timestamp)},
    };
    return table;
}

} // namespace

RunConfig config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw ConfigError("invalid-config: document root must be a JSON object");
    }
    RunConfig cfg;
    std::map<std::string, const FieldBinding*> lookup;
    for (const auto& [name, binding] : field_table()) {
        lookup.emplace(name, &binding);
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        auto found = lookup.find(it.key());
        if (found == lookup.end()) {
            throw ConfigError("invalid-config: unknown field '" + it.key() + "'");
        }
        try {
            found->second->read(cfg, it.value());
        } catch (const nlohmann::json::exception&) {
            throw ConfigError("invalid-config: field '" + it.key() + "' has the wrong type");
        }
    }
    cfg.validate();
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("invalid-config: cannot open '" + path + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("invalid-config: '" + path + "' is not valid JSON: " + e.what());
    }
    return config_from_json(j);
}

nlohmann::ordered_json config_to_json(const RunConfig& cfg) {
    nlohmann::ordered_json out;
    for (const auto& [name, binding] : field_table()) {
        out[name] = binding.write(cfg);
    }
    return out;
}

} // namespace momentum
