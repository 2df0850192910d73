#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace momentum {

using Vec3 = Eigen::Vector3d;

namespace geom {

enum class Layer : std::uint8_t { Ground = 0, Obstacles = 1, Agent = 2, Other = 3 };

const char* layer_name(Layer layer);

struct LayerMask {
    std::uint32_t bits = 0;

    static LayerMask of(std::initializer_list<Layer> layers) {
        LayerMask m;
        for (Layer l : layers) {
            m.bits |= 1u << static_cast<unsigned>(l);
        }
        return m;
    }
    static LayerMask all() { return LayerMask{0xFu}; }

    bool contains(Layer l) const { return (bits & (1u << static_cast<unsigned>(l))) != 0; }
};

// Axis-aligned box. All boundary semantics in this module are closed:
// grazing contact on a face counts as a hit/overlap.
struct Aabb {
    Vec3 center = Vec3::Zero();
    Vec3 half_extents = Vec3::Zero();

    Vec3 min() const { return center - half_extents; }
    Vec3 max() const { return center + half_extents; }

    bool contains(const Vec3& p) const {
        const Vec3 lo = min();
        const Vec3 hi = max();
        return p.x() >= lo.x() && p.x() <= hi.x() && p.y() >= lo.y() && p.y() <= hi.y() &&
               p.z() >= lo.z() && p.z() <= hi.z();
    }

    bool intersects(const Aabb& other) const {
        return std::abs(center.x() - other.center.x()) <= half_extents.x() + other.half_extents.x() &&
               std::abs(center.y() - other.center.y()) <= half_extents.y() + other.half_extents.y() &&
               std::abs(center.z() - other.center.z()) <= half_extents.z() + other.half_extents.z();
    }
};

struct Collider {
    Aabb aabb;
    Layer layer = Layer::Other;
    std::uint64_t owner_id = 0;
    std::string root_name;
};

struct Ray {
    Vec3 origin = Vec3::Zero();
    Vec3 direction = Vec3::UnitZ();  // unit length
    double max_distance = 1.0;
};

struct Hit {
    Vec3 point = Vec3::Zero();
    double distance = 0.0;
    const Collider* collider = nullptr;
};

// Slab-method ray/AABB intersection. Returns the entry distance in
// [0, ray.max_distance], or nullopt. A ray starting inside hits at 0.
std::optional<double> ray_aabb(const Ray& ray, const Aabb& box);

// Nearest mask-passing intersection. Distance ties are broken towards the
// lower owner_id so results do not depend on container order.
std::optional<Hit> raycast(const Ray& ray, std::span<const Collider> colliders, LayerMask mask);

// All mask-passing colliders whose AABB intersects `box` (closed intervals).
std::vector<const Collider*> overlap_box(const Aabb& box, std::span<const Collider> colliders,
                                         LayerMask mask);

// A tile's walkable top surface projected on the z axis.
struct GroundSpan {
    double z_begin = 0.0;
    double z_end = 0.0;
    double top_y = 0.0;
};

// Top surface height of the span containing (x, z) within [x_min, x_max],
// if any. Spans are assumed non-overlapping; the first match wins.
std::optional<double> ground_height(double x, double z, std::span<const GroundSpan> spans,
                                    double x_min, double x_max);

} // namespace geom
} // namespace momentum
