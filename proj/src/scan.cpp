#include "momentum/scan.hpp"

#include <algorithm>
#include <cmath>

namespace momentum::scan {

namespace {

std::vector<Interval> clip_and_merge(std::span<const Interval> intervals, const Interval& lane) {
    std::vector<Interval> clipped;
    for (const Interval& iv : intervals) {
        const double lo = std::max(iv.lo, lane.lo);
        const double hi = std::min(iv.hi, lane.hi);
        if (lo <= hi) {
            clipped.push_back(Interval{lo, hi});
        }
    }
    std::sort(clipped.begin(), clipped.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> merged;
    for (const Interval& iv : clipped) {
        if (!merged.empty() && iv.lo <= merged.back().hi) {
            merged.back().hi = std::max(merged.back().hi, iv.hi);
        } else {
            merged.push_back(iv);
        }
    }
    return merged;
}

} // namespace

double max_clear_gap(std::span<const Interval> hit_intervals, const Interval& lane) {
    const auto merged = clip_and_merge(hit_intervals, lane);
    double best = 0.0;
    double cursor = lane.lo;
    for (const Interval& iv : merged) {
        best = std::max(best, iv.lo - cursor);
        cursor = std::max(cursor, iv.hi);
    }
    best = std::max(best, lane.hi - cursor);
    return best;
}

bool row_passable(std::span<const Interval> hit_intervals, const Interval& lane, double w_clear) {
    return max_clear_gap(hit_intervals, lane) >= w_clear;
}

ScanParams ScanParams::from_config(const RunConfig& cfg) {
    ScanParams p;
    p.seg_length = cfg.seg_length;
    p.row_gap = cfg.row_gap;
    p.x_step = cfg.x_step;
    p.sweep_width = cfg.sweep_width;
    p.w_clear = cfg.w_clear;
    p.lane_center = cfg.lane_center();
    p.scan_height = cfg.aerial_altitude;
    return p;
}

ScanSegmentResult scan_corridor(double segment_z, std::span<const geom::Collider> colliders,
                                const ScanParams& params) {
    ScanSegmentResult result;
    result.segment_z = segment_z;
    result.rows = params.rows();

    const Interval lane{params.lane_center - params.sweep_width / 2.0,
                        params.lane_center + params.sweep_width / 2.0};
    const int rays_per_row = params.rays_per_row();

    // Narrow the candidate set once per segment; rays only vary in x and z
    // within [segment_z, segment_z + seg_length].
    std::vector<const geom::Collider*> candidates;
    for (const geom::Collider& c : colliders) {
        if (!params.mask.contains(c.layer)) {
            continue;
        }
        const double lo = c.aabb.center.z() - c.aabb.half_extents.z();
        const double hi = c.aabb.center.z() + c.aabb.half_extents.z();
        if (hi >= segment_z && lo <= segment_z + params.seg_length) {
            candidates.push_back(&c);
        }
    }

    std::vector<std::uint64_t> seen;  // blocker dedup across rows and the overlap query
    auto note_blocker = [&](const geom::Collider& c) {
        if (std::find(seen.begin(), seen.end(), c.owner_id) != seen.end()) {
            return;
        }
        seen.push_back(c.owner_id);
        BlockerInfo b;
        b.owner_id = c.owner_id;
        b.root_name = c.root_name;
        b.position = c.aabb.center;
        b.size = c.aabb.half_extents * 2.0;
        b.layer = c.layer;
        result.blockers.push_back(std::move(b));
    };

    bool all_rows_passable = true;
    for (int row = 0; row < result.rows; ++row) {
        const double z_row = segment_z + row * params.row_gap;

        std::vector<Interval> discovered;       // x extents of colliders struck in this row
        std::vector<std::uint64_t> row_owners;  // avoids duplicate intervals per row
        bool verdict_known = false;
        bool verdict = true;
        // Consecutive clear samples bound a collider-free interval: any
        // ray-discoverable collider overlapping it would contain one of its
        // sampled points. So a clear run spanning w_clear proves the row
        // passable even against rays not yet cast.
        double clear_run_start = lane.lo;
        bool in_clear_run = false;

        for (int j = 0; j < rays_per_row; ++j) {
            const double x = lane.lo + j * params.x_step;
            geom::Ray ray;
            ray.origin = Vec3(x, params.scan_height, z_row);
            ray.direction = Vec3(0.0, -1.0, 0.0);
            ray.max_distance = params.scan_height + 5.0;
            ++result.rays;

            const geom::Collider* struck = nullptr;
            double best_t = 0.0;
            for (const geom::Collider* c : candidates) {
                const auto t = geom::ray_aabb(ray, c->aabb);
                if (t && (!struck || *t < best_t ||
                          (*t == best_t && c->owner_id < struck->owner_id))) {
                    struck = c;
                    best_t = *t;
                }
            }

            bool new_interval = false;
            if (struck) {
                ++result.hit_count;
                note_blocker(*struck);
                if (std::find(row_owners.begin(), row_owners.end(), struck->owner_id) ==
                    row_owners.end()) {
                    row_owners.push_back(struck->owner_id);
                    discovered.push_back(
                        Interval{struck->aabb.center.x() - struck->aabb.half_extents.x(),
                                 struck->aabb.center.x() + struck->aabb.half_extents.x()});
                    new_interval = true;
                }
                in_clear_run = false;
            } else {
                if (!in_clear_run) {
                    clear_run_start = x;
                    in_clear_run = true;
                }
                if (params.early_exit && x - clear_run_start >= params.w_clear) {
                    verdict_known = true;
                    verdict = true;
                    break;
                }
            }
            // Future rays can only add intervals, so once even the current
            // best-case gap is too narrow the row is blocked for certain.
            if (params.early_exit && new_interval &&
                max_clear_gap(discovered, lane) < params.w_clear) {
                verdict_known = true;
                verdict = false;
                break;
            }
        }

        if (!verdict_known) {
            verdict = row_passable(discovered, lane, params.w_clear);
        }
        all_rows_passable = all_rows_passable && verdict;
    }
    result.passable = all_rows_passable;

    // One volumetric query per segment: it catches colliders narrow enough to
    // slip between ray samples. It feeds the blocker list, not the row verdict.
    geom::Aabb sweep_box;
    sweep_box.center = Vec3(params.lane_center, params.scan_height / 2.0,
                            segment_z + params.seg_length / 2.0);
    sweep_box.half_extents =
        Vec3(params.sweep_width / 2.0, params.scan_height / 2.0, params.seg_length / 2.0);
    const auto overlapping = geom::overlap_box(sweep_box, colliders, params.mask);
    result.overlap_hits = static_cast<int>(overlapping.size());
    for (const geom::Collider* c : overlapping) {
        note_blocker(*c);
    }
    return result;
}

} // namespace momentum::scan
