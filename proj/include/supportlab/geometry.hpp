#pragma once

#include <array>
#include <cmath>
#include <vector>

namespace supportlab {

struct Vec2 {
    double x = 0.0, y = 0.0;
    bool operator==(const Vec2&) const = default;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
    bool operator==(const Vec3&) const = default;
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalized(Vec3 a) { return (1.0 / norm(a)) * a; }

// Row-major 3×3 rotation.
struct Mat3 {
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

    static Mat3 identity() { return {}; }
    static Mat3 rotation_y(double angle);
    // Rodrigues rotation about a unit axis.
    static Mat3 rotation(Vec3 axis, double angle);

    Vec3 operator*(Vec3 v) const {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z, m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }
    Mat3 operator*(const Mat3& o) const;
    bool operator==(const Mat3&) const = default;
};

// Rigid transform: world = rotation · local + translation.
struct Pose {
    Mat3 rotation;
    Vec3 translation;

    Vec3 apply(Vec3 local) const { return rotation * local + translation; }
    bool operator==(const Pose&) const = default;
};

using Polygon = std::vector<Vec2>;

// Counter-clockwise convex polygon area (signed; positive for CCW).
double polygon_area(const Polygon& poly);
// Sutherland–Hodgman clip of `subject` against the convex CCW `clip` polygon.
Polygon clip_convex(const Polygon& subject, const Polygon& clip);
// Signed distance of p outside edge i (a_i -> a_{i+1}) of a CCW polygon;
// positive means p is on the outer side.
double outside_distance(const Polygon& poly, std::size_t edge, Vec2 p);
// Euclidean distance from p to the segment of edge i.
double segment_distance(const Polygon& poly, std::size_t edge, Vec2 p);

}  // namespace supportlab
