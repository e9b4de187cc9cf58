#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ktaxi {

// Points are doubles throughout: a real coordinate on the line metric, an
// integer-valued index for explicit/HST metrics, and fresh integer ids for
// virtual points added by augmented metrics.
using Point = double;

using Configuration = std::vector<Point>;

using DistFn = std::function<double(Point, Point)>;

inline constexpr double kTol = 1e-9;
inline constexpr double kTightTol = 1e-12;

struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ProtocolError : std::runtime_error {
    explicit ProtocolError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

inline bool approx_eq(double a, double b, double tol = kTol) {
    return std::abs(a - b) <= tol;
}

inline bool is_point_index(Point p) {
    return p >= 0 && std::floor(p) == p;
}

inline int point_index(Point p) {
    if (!is_point_index(p)) throw InputError("point id is not a valid index");
    return static_cast<int>(p);
}

inline Configuration sorted(Configuration c) {
    std::sort(c.begin(), c.end());
    return c;
}

// Multiset containment: every element of `sub` appears in `super` with at
// least the same multiplicity.
inline bool multiset_subset(Configuration sub, Configuration super) {
    std::sort(sub.begin(), sub.end());
    std::sort(super.begin(), super.end());
    size_t j = 0;
    for (double v : sub) {
        while (j < super.size() && super[j] < v) ++j;
        if (j == super.size() || super[j] != v) return false;
        ++j;
    }
    return true;
}

inline bool multiset_contains(const Configuration& cfg, Point p) {
    for (Point q : cfg)
        if (q == p) return true;
    return false;
}

// Removes one occurrence of p; throws if absent.
inline void multiset_remove_one(Configuration& cfg, Point p) {
    for (auto it = cfg.begin(); it != cfg.end(); ++it) {
        if (*it == p) {
            cfg.erase(it);
            return;
        }
    }
    throw InputError("multiset_remove_one: point not present");
}

}  // namespace ktaxi
