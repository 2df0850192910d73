#include "momentum/reporter.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace momentum::report {

namespace {

nlohmann::ordered_json vec3_to_json(const Vec3& v) {
    return nlohmann::ordered_json{v.x(), v.y(), v.z()};
}

Vec3 vec3_from_json(const nlohmann::json& j, const char* field) {
    if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() ||
        !j[2].is_number()) {
        throw std::invalid_argument(std::string("report field '") + field +
                                    "' must be a 3-number array");
    }
    return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

void format_number(std::ostream& os, double v) {
    // Fixed 3-decimal formatting keeps the text render byte-stable.
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    os << buf;
}

void format_vec(std::ostream& os, const Vec3& v) {
    os << "(";
    format_number(os, v.x());
    os << ", ";
    format_number(os, v.y());
    os << ", ";
    format_number(os, v.z());
    os << ")";
}

} // namespace

void ReportCache::append(BlockageReport report) {
    reports_.push_back(std::move(report));
}

void report_blockage(ReportCache& cache, BlockageReport report) {
    if (report.agent != "aerial" && report.agent != "ground") {
        throw std::invalid_argument("report agent must be 'aerial' or 'ground'");
    }
    if (report.agent == "ground" && report.removed) {
        throw std::invalid_argument("ground-agent reports are diagnostic; removed=true is invalid");
    }
    cache.append(std::move(report));
}

std::string render_text(const ReportCache& cache) {
    std::ostringstream os;
    os << "MOMENTUM BLOCKAGE REPORT\n";
    os << "========================\n\n";
    if (cache.empty()) {
        os << "No blockage data is available - there are no reports to display.\n";
        os << "Possible reasons: no detected blockages, data loss, or a cache reset.\n";
        return os.str();
    }
    os << "Captured reports: " << cache.size() << "\n\n";
    for (std::size_t i = 0; i < cache.size(); ++i) {
        const BlockageReport& r = cache.at(i);
        os << "--- Report " << (i + 1) << " of " << cache.size() << " ---\n";
        os << "Game context\n";
        os << "  Scene name: " << r.scene_name << "\n";
        os << "  Timestamp: " << r.timestamp << " (tick " << r.tick << ")\n";
        os << "Player state\n";
        os << "  Position: ";
        format_vec(os, r.player_position);
        os << "\n  Speed: ";
        format_number(os, r.player_speed);
        os << " m/s\n";
        os << "Environment state\n";
        os << "  Skybox variant: " << r.skybox_variant << "\n";
        os << "  Latest ground position: ";
        format_number(os, r.latest_ground_z);
        os << "\n  Tile length: ";
        format_number(os, r.tile_length);
        os << "\n";
        os << "Generation parameters\n";
        os << "  Spawn percentage: ";
        format_number(os, r.spawn_percentage);
        os << "\n  X range: [";
        format_number(os, r.x_range[0]);
        os << ", ";
        format_number(os, r.x_range[1]);
        os << "]\n  Clear width: ";
        format_number(os, r.clear_width);
        os << "\n  Jitter: ";
        format_number(os, r.jitter);
        os << "\n  Y offset: ";
        format_number(os, r.y_offset);
        os << "\n";
        os << "Scanner context\n";
        os << "  Agent: " << r.agent << "\n";
        os << "  Tile position: ";
        format_number(os, r.tile_position);
        os << "\n  Probe position: ";
        format_vec(os, r.probe_position);
        os << "\n  Ray spacing: ";
        format_number(os, r.ray_spacing);
        os << "\n  Hit count: " << r.hit_count << "\n";
        os << "  Removed: " << (r.removed ? "yes" : "no") << "\n";
        os << "Blocking objects\n";
        if (r.blocking_objects.empty()) {
            os << "  (none recorded)\n";
        }
        for (const BlockingObjectInfo& b : r.blocking_objects) {
            os << "  - " << b.name << " at ";
            format_vec(os, b.position);
            os << ", size ";
            format_vec(os, b.size);
            os << ", layer " << b.layer << "\n";
        }
        os << "\n";
    }
    return os.str();
}

nlohmann::ordered_json report_to_json(const BlockageReport& r) {
    nlohmann::ordered_json j;
    j["scene_name"] = r.scene_name;
    j["timestamp"] = r.timestamp;
    j["tick"] = r.tick;
    j["player_position"] = vec3_to_json(r.player_position);
    j["player_speed"] = r.player_speed;
    j["skybox_variant"] = r.skybox_variant;
    j["latest_ground_z"] = r.latest_ground_z;
    j["tile_length"] = r.tile_length;
    j["spawn_percentage"] = r.spawn_percentage;
    j["x_range"] = {r.x_range[0], r.x_range[1]};
    j["clear_width"] = r.clear_width;
    j["jitter"] = r.jitter;
    j["y_offset"] = r.y_offset;
    j["tile_position"] = r.tile_position;
    j["probe_position"] = vec3_to_json(r.probe_position);
    j["ray_spacing"] = r.ray_spacing;
    j["hit_count"] = r.hit_count;
    j["agent"] = r.agent;
    j["removed"] = r.removed;
    nlohmann::ordered_json blockers = nlohmann::ordered_json::array();
    for (const BlockingObjectInfo& b : r.blocking_objects) {
        nlohmann::ordered_json e;
        e["name"] = b.name;
        e["position"] = vec3_to_json(b.position);
        e["size"] = vec3_to_json(b.size);
        e["layer"] = b.layer;
        blockers.push_back(std::move(e));
    }
    j["blocking_objects"] = std::move(blockers);
    return j;
}

BlockageReport report_from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw std::invalid_argument("report must be a JSON object");
    }
    auto need = [&](const char* key) -> const nlohmann::json& {
        auto it = j.find(key);
        if (it == j.end()) {
            throw std::invalid_argument(std::string("report is missing field '") + key + "'");
        }
        return *it;
    };
    BlockageReport r;
    try {
        r.scene_name = need("scene_name").get<std::string>();
        r.timestamp = need("timestamp").get<std::string>();
        r.tick = need("tick").get<std::int64_t>();
        r.player_position = vec3_from_json(need("player_position"), "player_position");
        r.player_speed = need("player_speed").get<double>();
        r.skybox_variant = need("skybox_variant").get<int>();
        r.latest_ground_z = need("latest_ground_z").get<double>();
        r.tile_length = need("tile_length").get<double>();
        r.spawn_percentage = need("spawn_percentage").get<double>();
        const auto& xr = need("x_range");
        if (!xr.is_array() || xr.size() != 2) {
            throw std::invalid_argument("report field 'x_range' must be a 2-element array");
        }
        r.x_range = {xr[0].get<double>(), xr[1].get<double>()};
        r.clear_width = need("clear_width").get<double>();
        r.jitter = need("jitter").get<double>();
        r.y_offset = need("y_offset").get<double>();
        r.tile_position = need("tile_position").get<double>();
        r.probe_position = vec3_from_json(need("probe_position"), "probe_position");
        r.ray_spacing = need("ray_spacing").get<double>();
        r.hit_count = need("hit_count").get<int>();
        r.agent = need("agent").get<std::string>();
        r.removed = need("removed").get<bool>();
        const auto& blockers = need("blocking_objects");
        if (!blockers.is_array()) {
            throw std::invalid_argument("report field 'blocking_objects' must be an array");
        }
        for (const auto& e : blockers) {
            BlockingObjectInfo b;
            b.name = e.at("name").get<std::string>();
            b.position = vec3_from_json(e.at("position"), "blocking_objects.position");
            b.size = vec3_from_json(e.at("size"), "blocking_objects.size");
            b.layer = e.at("layer").get<std::string>();
            r.blocking_objects.push_back(std::move(b));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("report does not match the schema: ") + e.what());
    }
    if (r.agent != "aerial" && r.agent != "ground") {
        throw std::invalid_argument("report agent must be 'aerial' or 'ground'");
    }
    if (r.agent == "ground" && r.removed) {
        throw std::invalid_argument("ground-agent reports cannot carry removed=true");
    }
    return r;
}

nlohmann::ordered_json cache_to_json(const ReportCache& cache) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const BlockageReport& r : cache.all()) {
        arr.push_back(report_to_json(r));
    }
    return arr;
}

ReportCache cache_from_json(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw std::invalid_argument("reports document must be a JSON array");
    }
    ReportCache cache;
    for (const auto& e : j) {
        cache.append(report_from_json(e));
    }
    return cache;
}

void export_json(const ReportCache& cache, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write reports to '" + path + "'");
    }
    out << cache_to_json(cache).dump(2) << "\n";
    if (!out) {
        throw std::runtime_error("I/O failure while writing '" + path + "'");
    }
}

ReportCache load_reports(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open reports file '" + path + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("reports file is not valid JSON: ") + e.what());
    }
    return cache_from_json(j);
}

} // namespace momentum::report
