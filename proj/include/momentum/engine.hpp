#pragma once

#include <functional>
#include <vector>

#include <nlohmann/json.hpp>

#include "momentum/events.hpp"
#include "momentum/world.hpp"

namespace momentum::sim {

// Builds the initial world: player at the scored start position, tiles
// seeded to cover [-tile_length, +tile_length], objects placed on them, a
// completed synchronous initial bake, all counters zeroed and the RNG
// streams derived from the seed by stable labels.
WorldState new_run(const RunConfig& cfg);
WorldState new_run(const RunConfig& cfg, spawn::Catalog catalog);

// Advances one tick through the fixed pipeline:
//   pilot input -> kinematics -> terrain spawn/cleanup -> object
//   spawn/despawn -> nav triggers/completion -> aerial agent -> ground agent
//   -> encounter check -> metrics sampling.
// The order is part of the determinism contract.
std::vector<SimEvent> step(WorldState& world);

struct RunResult {
    nlohmann::ordered_json summary;
    std::vector<SimEvent> events;
    bool completed = false;
};

// Steps until run_length is covered or the run game-overs. `sink`, when set,
// observes every event in order (the events are also returned).
RunResult run_to_completion(WorldState& world,
                            const std::function<void(const SimEvent&)>& sink = nullptr);

nlohmann::ordered_json summarize_run(const WorldState& world);

// Debug serialization of the core state, and an FNV-1a fingerprint of it.
nlohmann::ordered_json world_to_json(const WorldState& world);
std::uint64_t state_fingerprint(const WorldState& world);

// Current wall-clock time as ISO-8601 UTC, used when fixed_timestamp is not
// configured.
std::string iso_timestamp_now();

} // namespace momentum::sim
