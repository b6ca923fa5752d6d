#pragma once

#include <cmath>
#include <vector>

namespace symrig {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline Vec2 operator-(Vec2 v) { return {-v.x, -v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }

// counter-clockwise quarter turn of v
inline Vec2 perp(Vec2 v) { return {-v.y, v.x}; }

// 2x2 real matrix, row major
struct Mat2 {
    double a = 1.0, b = 0.0;
    double c = 0.0, d = 1.0;

    Vec2 apply(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Mat2 transpose() const { return {a, c, b, d}; }
};

Mat2 operator*(const Mat2& lhs, const Mat2& rhs);

Mat2 rotation_matrix(double angle);
Mat2 reflection_y();  // (x, y) -> (-x, y)
Mat2 quarter_turn();
Mat2 identity2();

// R_k^gamma, the rotation through angle 2*pi*gamma/k
struct RotationPower {
    int k = 1;
    int gamma = 0;

    int canonical_gamma() const;  // residue in [0, k)
    double angle() const;
    bool is_identity() const;
    bool is_order_two() const;
    Mat2 matrix() const;
    // canonical square root: rotation through pi*gamma/k with gamma in [0, k)
    Mat2 half_matrix() const;
    Mat2 inverse_half_matrix() const;
};

// unit direction vector, normalized on construction
class DirectionVec {
public:
    DirectionVec() : v_{1.0, 0.0} {}
    explicit DirectionVec(Vec2 v);
    DirectionVec(double x, double y) : DirectionVec(Vec2{x, y}) {}

    Vec2 vec() const { return v_; }
    double x() const { return v_.x; }
    double y() const { return v_.y; }
    DirectionVec rotated_perp() const { return DirectionVec(perp(v_)); }

private:
    Vec2 v_;
};

// v* = half-rotation of v-perp; the other square root gives the negated vector
DirectionVec vstar(const DirectionVec& v, const RotationPower& r);

// direction of the line { p : (R - I) p is a multiple of v* }
DirectionVec solve_rotation_locus(const RotationPower& r, const DirectionVec& vstar_dir);

// scale factor of the projection from line(v) to line(w) along v*;
// throws std::domain_error when w is parallel to v*
double scale_factor(const DirectionVec& v, const DirectionVec& w, const RotationPower& r);

// product of scale factors along the closed chain v1 -> v2 -> ... -> vn -> v1
double composite_scale(const std::vector<DirectionVec>& vs,
                       const std::vector<RotationPower>& rots);

}  // namespace symrig
