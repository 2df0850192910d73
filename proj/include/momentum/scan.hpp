#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "momentum/config.hpp"
#include "momentum/geometry.hpp"

namespace momentum::scan {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

// Longest interval of the lane not covered by any hit interval (closed
// complement; intervals are clipped to the lane and merged first).
double max_clear_gap(std::span<const Interval> hit_intervals, const Interval& lane);

// True iff the lane's complement of the hit intervals contains a closed
// interval of length >= w_clear (inclusive boundary).
bool row_passable(std::span<const Interval> hit_intervals, const Interval& lane, double w_clear);

struct BlockerInfo {
    std::uint64_t owner_id = 0;
    std::string root_name;
    Vec3 position = Vec3::Zero();
    Vec3 size = Vec3::Zero();  // full extents
    geom::Layer layer = geom::Layer::Obstacles;
};

struct ScanSegmentResult {
    double segment_z = 0.0;
    int rows = 0;
    int rays = 0;
    int hit_count = 0;      // rays that struck an obstacle, summed over rows
    int overlap_hits = 0;   // colliders returned by the single volumetric query
    bool passable = true;
    std::vector<BlockerInfo> blockers;  // deduplicated by owner_id, ray and overlap hits combined
};

struct ScanParams {
    double seg_length = 10.0;
    double row_gap = 0.5;
    double x_step = 0.05;
    double sweep_width = 2.15;
    double w_clear = 2.0;
    double lane_center = 0.0;
    double scan_height = 15.0;   // ray origin altitude
    geom::LayerMask mask = geom::LayerMask::of({geom::Layer::Obstacles});
    bool early_exit = true;

    static ScanParams from_config(const RunConfig& cfg);

    // Tolerant rounding: ratios like 2.15/0.05 are integers mathematically
    // but land one ulp short in binary.
    int rows() const {
        return static_cast<int>(std::ceil(seg_length / row_gap - 1e-9)) + 1;
    }
    int rays_per_row() const {
        return static_cast<int>(std::floor(sweep_width / x_step + 1e-9)) + 1;
    }
    int ray_budget() const { return rows() * rays_per_row(); }
};

// Scans the segment [segment_z, segment_z + seg_length]: `rows()` probe rows
// of downward rays across the sweep lane, plus exactly one volumetric
// overlap query covering the corridor window. Early exit stops a row as soon
// as its verdict is certain and never changes the passable/blocked outcome
// relative to a full sweep.
ScanSegmentResult scan_corridor(double segment_z, std::span<const geom::Collider> colliders,
                                const ScanParams& params);

} // namespace momentum::scan
