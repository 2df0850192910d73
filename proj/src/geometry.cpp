#include "momentum/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace momentum::geom {

const char* layer_name(Layer layer) {
    switch (layer) {
        case Layer::Ground: return "Ground";
        case Layer::Obstacles: return "Obstacles";
        case Layer::Agent: return "Agent";
        case Layer::Other: return "Other";
    }
    return "Other";
}

std::optional<double> ray_aabb(const Ray& ray, const Aabb& box) {
    constexpr double kParallelEps = 1e-12;
    double t_min = 0.0;
    double t_max = ray.max_distance;
    const Vec3 lo = box.min();
    const Vec3 hi = box.max();
    for (int axis = 0; axis < 3; ++axis) {
        const double o = ray.origin[axis];
        const double d = ray.direction[axis];
        if (std::abs(d) < kParallelEps) {
            // Parallel to the slab: inclusive containment or miss.
            if (o < lo[axis] || o > hi[axis]) {
                return std::nullopt;
            }
            continue;
        }
        double t1 = (lo[axis] - o) / d;
        double t2 = (hi[axis] - o) / d;
        if (t1 > t2) {
            std::swap(t1, t2);
        }
        t_min = std::max(t_min, t1);
        t_max = std::min(t_max, t2);
        if (t_min > t_max) {
            return std::nullopt;
        }
    }
    return t_min;
}

std::optional<Hit> raycast(const Ray& ray, std::span<const Collider> colliders, LayerMask mask) {
    std::optional<Hit> best;
    for (const Collider& c : colliders) {
        if (!mask.contains(c.layer)) {
            continue;
        }
        const auto t = ray_aabb(ray, c.aabb);
        if (!t) {
            continue;
        }
        const bool closer =
            !best || *t < best->distance ||
            (*t == best->distance && c.owner_id < best->collider->owner_id);
        if (closer) {
            best = Hit{ray.origin + ray.direction * *t, *t, &c};
        }
    }
    return best;
}

std::vector<const Collider*> overlap_box(const Aabb& box, std::span<const Collider> colliders,
                                         LayerMask mask) {
    std::vector<const Collider*> out;
    for (const Collider& c : colliders) {
        if (mask.contains(c.layer) && box.intersects(c.aabb)) {
            out.push_back(&c);
        }
    }
    return out;
}

std::optional<double> ground_height(double x, double z, std::span<const GroundSpan> spans,
                                    double x_min, double x_max) {
    if (x < x_min || x > x_max) {
        return std::nullopt;
    }
    for (const GroundSpan& s : spans) {
        if (z >= s.z_begin && z <= s.z_end) {
            return s.top_y;
        }
    }
    return std::nullopt;
}

} // namespace momentum::geom
