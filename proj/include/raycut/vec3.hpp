#pragma once

#include <cmath>

namespace raycut {

// 3-component float vector. All simulation math is single precision;
// reductions that need it accumulate in double on top of these.
struct Vec3 {
    float x = 0.0f;
    float y = 0.0f;
    float z = 0.0f;

    float operator[](int axis) const { return axis == 0 ? x : (axis == 1 ? y : z); }
    float& operator[](int axis) { return axis == 0 ? x : (axis == 1 ? y : z); }
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(const Vec3& a, float s) { return {a.x * s, a.y * s, a.z * s}; }
inline Vec3 operator*(float s, const Vec3& a) { return a * s; }

inline float dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline float length_squared(const Vec3& a) { return dot(a, a); }
inline float length(const Vec3& a) { return std::sqrt(length_squared(a)); }

// Ternary min/max compile to single instructions; inputs are never NaN in
// the hot paths (positions are validated up front).
inline float fmin1(float a, float b) { return a < b ? a : b; }
inline float fmax1(float a, float b) { return a > b ? a : b; }

inline Vec3 min3(const Vec3& a, const Vec3& b) {
    return {fmin1(a.x, b.x), fmin1(a.y, b.y), fmin1(a.z, b.z)};
}
inline Vec3 max3(const Vec3& a, const Vec3& b) {
    return {fmax1(a.x, b.x), fmax1(a.y, b.y), fmax1(a.z, b.z)};
}

inline bool finite(const Vec3& a) {
    return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

// Squared distance, evaluated the same way everywhere so that the cutoff
// predicate (dist2 < cutoff^2) is bit-identical across every method and the
// brute-force reference.
inline float dist_squared(const Vec3& a, const Vec3& b) {
    const float dx = a.x - b.x;
    const float dy = a.y - b.y;
    const float dz = a.z - b.z;
    return dx * dx + dy * dy + dz * dz;
}

}  // namespace raycut
