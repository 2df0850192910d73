#include "momentum/events.hpp"

namespace momentum::sim {

const char* kind_name(EventKind kind) {
    switch (kind) {
        case EventKind::tile_spawned: return "tile-spawned";
        case EventKind::object_spawned: return "object-spawned";
        case EventKind::object_despawned: return "object-despawned";
        case EventKind::tile_destroyed: return "tile-destroyed";
        case EventKind::rebake_begin: return "rebake-begin";
        case EventKind::rebake_done: return "rebake-done";
        case EventKind::scan: return "scan";
        case EventKind::blockage: return "blockage";
        case EventKind::removal: return "removal";
        case EventKind::recovery: return "recovery";
        case EventKind::respawn: return "respawn";
        case EventKind::encounter: return "encounter";
        case EventKind::theme_change: return "theme-change";
        case EventKind::game_over: return "game-over";
    }
    return "unknown";
}

nlohmann::ordered_json event_to_json(const SimEvent& event) {
    nlohmann::ordered_json j;
    j["tick"] = event.tick;
    j["kind"] = kind_name(event.kind);
    j["data"] = event.data;
    return j;
}

std::string event_to_line(const SimEvent& event) {
    return event_to_json(event).dump();
}

} // namespace momentum::sim
