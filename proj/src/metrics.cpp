#include "momentum/metrics.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

namespace momentum::metrics {

namespace {

nlohmann::ordered_json opt_json(const std::optional<double>& v) {
    if (!v) {
        return nullptr;
    }
    return *v;
}

} // namespace

Rates rates(const MetricsAccumulator& acc) {
    Rates r;
    if (acc.s_total > 0) {
        r.r_block = static_cast<double>(acc.s_blocked) / static_cast<double>(acc.s_total);
        r.r_pass = 1.0 - *r.r_block;
    }
    if (!acc.b_detected.empty()) {
        r.r_remove = static_cast<double>(acc.b_removed.size()) /
                     static_cast<double>(acc.b_detected.size());
    }
    if (acc.distance > 0.0) {
        r.r_recover = static_cast<double>(acc.recoveries) / acc.distance;
    }
    std::int64_t intended = 0;
    std::int64_t realized = 0;
    for (const TileSpawnRecord& t : acc.tiles) {
        intended += t.intended;
        realized += t.realized;
    }
    if (intended > 0) {
        r.rho_spawn = static_cast<double>(realized) / static_cast<double>(intended);
    }
    return r;
}

std::optional<double> frame_violation(std::span<const double> samples_ms, double tau_ms) {
    if (samples_ms.empty()) {
        return std::nullopt;
    }
    std::int64_t over = 0;
    for (double f : samples_ms) {
        if (f > tau_ms) {  // strictly greater; a sample exactly at tau is not a violation
            ++over;
        }
    }
    return static_cast<double>(over) / static_cast<double>(samples_ms.size());
}

EntropyResult prefab_entropy(const std::map<std::string, std::int64_t>& histogram,
                             std::size_t catalog_classes) {
    EntropyResult out;
    std::int64_t total = 0;
    for (const auto& [id, count] : histogram) {
        total += count;
    }
    if (total <= 0 || catalog_classes < 1) {
        return out;
    }
    double h = 0.0;
    for (const auto& [id, count] : histogram) {
        if (count <= 0) {
            continue;  // 0 * log(0) = 0
        }
        const double p = static_cast<double>(count) / static_cast<double>(total);
        h -= p * std::log2(p);
    }
    out.h = h;
    if (catalog_classes > 1) {
        out.h_norm = h / std::log2(static_cast<double>(catalog_classes));
    }
    return out;
}

JaccardResult jaccard(const std::set<std::uint64_t>& a, const std::set<std::uint64_t>& b) {
    JaccardResult out;
    if (a.empty() && b.empty()) {
        return out;
    }
    std::int64_t inter = 0;
    for (std::uint64_t id : a) {
        if (b.count(id) > 0) {
            ++inter;
        }
    }
    const std::int64_t uni =
        static_cast<std::int64_t>(a.size()) + static_cast<std::int64_t>(b.size()) - inter;
    out.j = static_cast<double>(inter) / static_cast<double>(uni);
    out.c_unique = 1.0 - *out.j;
    return out;
}

nlohmann::ordered_json summarize(const MetricsAccumulator& acc, const RunConfig& cfg,
                                 const RunInfo& info) {
    const Rates r = rates(acc);
    const EntropyResult entropy = prefab_entropy(acc.prefab_histogram, info.catalog_classes);
    const JaccardResult overlap = jaccard(acc.aerial_blockers, acc.ground_blockers);

    nlohmann::ordered_json run;
    run["label"] = cfg.run_label;
    run["seed"] = cfg.seed;
    run["dt"] = cfg.dt;
    run["run_length"] = cfg.run_length;
    run["auto_remove"] = cfg.auto_remove;
    run["ticks"] = info.ticks;
    run["distance"] = acc.distance;
    run["completed"] = info.completed;
    run["game_over_reason"] = info.game_over_reason;
    run["respawns_used"] = info.respawns_used;

    nlohmann::ordered_json rq1;
    rq1["s_total"] = acc.s_total;
    rq1["s_blocked"] = acc.s_blocked;
    rq1["s_total_aerial"] = acc.s_total_aerial;
    rq1["s_blocked_aerial"] = acc.s_blocked_aerial;
    rq1["s_total_ground"] = acc.s_total_ground;
    rq1["s_blocked_ground"] = acc.s_blocked_ground;
    rq1["r_block"] = opt_json(r.r_block);
    rq1["r_pass"] = opt_json(r.r_pass);
    rq1["b_detected"] = acc.b_detected.size();
    rq1["b_removed"] = acc.b_removed.size();
    rq1["r_remove"] = opt_json(r.r_remove);
    rq1["player_encountered_blockages"] = acc.encounters;
    rq1["respawns"] = acc.respawns;

    nlohmann::ordered_json per_tile = nlohmann::ordered_json::array();
    std::int64_t intended_total = 0;
    std::int64_t realized_total = 0;
    for (const TileSpawnRecord& t : acc.tiles) {
        nlohmann::ordered_json e;
        e["tile_z"] = t.tile_z;
        e["intended"] = t.intended;
        e["realized"] = t.realized;
        per_tile.push_back(std::move(e));
        intended_total += t.intended;
        realized_total += t.realized;
    }
    nlohmann::ordered_json rq2;
    rq2["p_spawn"] = cfg.p_spawn;
    rq2["o_intended_total"] = intended_total;
    rq2["o_spawned_total"] = realized_total;
    rq2["rho_spawn"] = opt_json(r.rho_spawn);
    rq2["tiles"] = acc.tiles.size();
    rq2["per_tile"] = std::move(per_tile);
    nlohmann::ordered_json histogram;
    for (const auto& [id, count] : acc.prefab_histogram) {
        histogram[id] = count;
    }
    rq2["prefab_histogram"] = std::move(histogram);
    rq2["catalog_classes"] = info.catalog_classes;
    rq2["h_prefab"] = opt_json(entropy.h);
    rq2["h_norm"] = opt_json(entropy.h_norm);

    nlohmann::ordered_json rq3;
    rq3["frame_samples"] = acc.frame_ms.size();
    if (acc.frame_ms.empty()) {
        rq3["mean_ms"] = nullptr;
        rq3["p95_ms"] = nullptr;
        rq3["p99_ms"] = nullptr;
    } else {
        double sum = 0.0;
        for (double f : acc.frame_ms) {
            sum += f;
        }
        std::vector<double> sorted(acc.frame_ms.begin(), acc.frame_ms.end());
        std::sort(sorted.begin(), sorted.end());
        auto quantile = [&](double q) {
            const auto idx = static_cast<std::size_t>(
                std::min<double>(std::ceil(q * static_cast<double>(sorted.size())) - 1.0,
                                 static_cast<double>(sorted.size() - 1)));
            return sorted[std::max<std::size_t>(idx, 0)];
        };
        rq3["mean_ms"] = sum / static_cast<double>(sorted.size());
        rq3["p95_ms"] = quantile(0.95);
        rq3["p99_ms"] = quantile(0.99);
    }
    rq3["v_16_66"] = opt_json(frame_violation(acc.frame_ms, 16.66));
    rq3["v_33_33"] = opt_json(frame_violation(acc.frame_ms, 33.33));
    rq3["rays_total"] = acc.rays_total;
    rq3["overlap_queries"] = acc.overlap_queries;
    rq3["max_rays_per_segment"] = acc.max_rays_per_segment;

    nlohmann::ordered_json rq4;
    rq4["aerial_blockers"] = acc.aerial_blockers.size();
    rq4["ground_blockers"] = acc.ground_blockers.size();
    rq4["jaccard"] = opt_json(overlap.j);
    rq4["c_unique"] = opt_json(overlap.c_unique);
    rq4["recoveries"] = acc.recoveries;
    rq4["r_recover"] = opt_json(r.r_recover);
    rq4["nav_sample_failures"] = acc.nav_sample_failures;
    rq4["bakes_completed"] = acc.bakes_completed;
    rq4["theme_changes"] = acc.theme_changes;

    nlohmann::ordered_json out;
    out["run"] = std::move(run);
    out["rq1_playability"] = std::move(rq1);
    out["rq2_controllability_diversity"] = std::move(rq2);
    out["rq3_performance"] = std::move(rq3);
    out["rq4_complementarity"] = std::move(rq4);
    return out;
}

} // namespace momentum::metrics
