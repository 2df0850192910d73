#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "momentum/config.hpp"

namespace momentum::metrics {

struct TileSpawnRecord {
    double tile_z = 0.0;
    int intended = 0;
    int realized = 0;
};

// Counters feeding the rate/entropy/overlap formulas and the run summary.
// Everything here is recomputable offline from the event log.
struct MetricsAccumulator {
    std::int64_t s_total = 0;
    std::int64_t s_blocked = 0;
    std::int64_t s_total_aerial = 0;
    std::int64_t s_blocked_aerial = 0;
    std::int64_t s_total_ground = 0;
    std::int64_t s_blocked_ground = 0;
    std::int64_t rays_total = 0;
    std::int64_t overlap_queries = 0;
    std::int64_t max_rays_per_segment = 0;

    std::set<std::uint64_t> b_detected;
    std::set<std::uint64_t> b_removed;
    std::set<std::uint64_t> aerial_blockers;
    std::set<std::uint64_t> ground_blockers;

    std::int64_t recoveries = 0;
    std::int64_t nav_sample_failures = 0;
    double distance = 0.0;

    std::vector<TileSpawnRecord> tiles;
    std::map<std::string, std::int64_t> prefab_histogram;
    std::set<int> themes_active;

    std::vector<double> frame_ms;

    std::int64_t encounters = 0;
    std::int64_t respawns = 0;
    std::int64_t theme_changes = 0;
    std::int64_t bakes_completed = 0;
};

struct Rates {
    std::optional<double> r_block;
    std::optional<double> r_pass;
    std::optional<double> r_remove;
    std::optional<double> r_recover;
    std::optional<double> rho_spawn;
};

// Eqs. over the accumulated counters. Undefined denominators yield empty
// optionals ("not available"), never zero.
Rates rates(const MetricsAccumulator& acc);

// Fraction of samples strictly above tau (ms); empty input -> not available.
std::optional<double> frame_violation(std::span<const double> samples_ms, double tau_ms);

struct EntropyResult {
    std::optional<double> h;
    std::optional<double> h_norm;
};

// Shannon entropy (bits) of the spawned-prefab distribution, normalised by
// log2 of the catalog class count (not merely the observed classes).
EntropyResult prefab_entropy(const std::map<std::string, std::int64_t>& histogram,
                             std::size_t catalog_classes);

struct JaccardResult {
    std::optional<double> j;
    std::optional<double> c_unique;
};

JaccardResult jaccard(const std::set<std::uint64_t>& a, const std::set<std::uint64_t>& b);

struct RunInfo {
    std::int64_t ticks = 0;
    bool completed = false;
    std::string game_over_reason;
    std::size_t catalog_classes = 0;
    int respawns_used = 0;
};

// The per-run summary document, metrics grouped by research question.
nlohmann::ordered_json summarize(const MetricsAccumulator& acc, const RunConfig& cfg,
                                 const RunInfo& info);

} // namespace momentum::metrics
