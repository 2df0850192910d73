#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

namespace momentum::sim {

enum class EventKind {
    tile_spawned,
    object_spawned,
    object_despawned,
    tile_destroyed,
    rebake_begin,
    rebake_done,
    scan,
    blockage,
    removal,
    recovery,
    respawn,
    encounter,
    theme_change,
    game_over,
};

const char* kind_name(EventKind kind);

// One pipeline event. Events are totally ordered by (tick, emission order)
// and serialize to a byte-stable JSON line for a given seed.
struct SimEvent {
    std::int64_t tick = 0;
    EventKind kind = EventKind::tile_spawned;
    nlohmann::ordered_json data;
};

nlohmann::ordered_json event_to_json(const SimEvent& event);
std::string event_to_line(const SimEvent& event);

} // namespace momentum::sim
