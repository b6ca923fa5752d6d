#include "symrig/geometry.hpp"

#include <numbers>
#include <stdexcept>

namespace symrig {

namespace {
constexpr double kDegenerate = 1e-12;
}

Mat2 operator*(const Mat2& lhs, const Mat2& rhs) {
    return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
            lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
}

Mat2 rotation_matrix(double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c, -s, s, c};
}

Mat2 reflection_y() { return {-1.0, 0.0, 0.0, 1.0}; }

Mat2 quarter_turn() { return {0.0, -1.0, 1.0, 0.0}; }

Mat2 identity2() { return {}; }

int RotationPower::canonical_gamma() const {
    if (k <= 0) throw std::invalid_argument("rotation order must be positive");
    int g = gamma % k;
    if (g < 0) g += k;
    return g;
}

double RotationPower::angle() const {
    return 2.0 * std::numbers::pi * canonical_gamma() / k;
}

bool RotationPower::is_identity() const { return canonical_gamma() == 0; }

bool RotationPower::is_order_two() const {
    const int g = canonical_gamma();
    return g != 0 && (2 * g) % k == 0;
}

Mat2 RotationPower::matrix() const { return rotation_matrix(angle()); }

Mat2 RotationPower::half_matrix() const {
    return rotation_matrix(std::numbers::pi * canonical_gamma() / k);
}

Mat2 RotationPower::inverse_half_matrix() const {
    return rotation_matrix(-std::numbers::pi * canonical_gamma() / k);
}

DirectionVec::DirectionVec(Vec2 v) {
    const double len = norm(v);
    if (len < kDegenerate) throw std::invalid_argument("direction vector must be nonzero");
    v_ = {v.x / len, v.y / len};
}

DirectionVec vstar(const DirectionVec& v, const RotationPower& r) {
    return DirectionVec(r.half_matrix().apply(perp(v.vec())));
}

DirectionVec solve_rotation_locus(const RotationPower& r, const DirectionVec& vstar_dir) {
    if (r.is_identity()) throw std::invalid_argument("rotation must be nontrivial");
    const Mat2 m = quarter_turn() * r.inverse_half_matrix();
    return DirectionVec(m.apply(vstar_dir.vec()));
}

double scale_factor(const DirectionVec& v, const DirectionVec& w, const RotationPower& r) {
    if (r.is_identity()) throw std::invalid_argument("rotation must be nontrivial");
    const Vec2 vs = vstar(v, r).vec();
    const double den = dot(w.vec(), perp(vs));
    if (std::abs(den) < kDegenerate)
        throw std::domain_error("projection undefined: w is parallel to v*");
    return dot(v.vec(), perp(vs)) / den;
}

double composite_scale(const std::vector<DirectionVec>& vs,
                       const std::vector<RotationPower>& rots) {
    if (vs.empty() || vs.size() != rots.size())
        throw std::invalid_argument("composite_scale needs one rotation per vector");
    double product = 1.0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const DirectionVec& from = vs[i];
        const DirectionVec& to = vs[(i + 1) % vs.size()];
        product *= scale_factor(from, to, rots[i]);
    }
    return product;
}

}  // namespace symrig
