#pragma once

#include "physlab/core/vec3.hpp"

#include <array>
#include <cmath>

namespace physlab {

// Column-major-free 3x3 matrix, indexed m[row][col].
struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    static Mat3 identity() {
        Mat3 r;
        r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
        return r;
    }

    static Mat3 diagonal(const Vec3& d) {
        Mat3 r;
        r.m[0][0] = d.x;
        r.m[1][1] = d.y;
        r.m[2][2] = d.z;
        return r;
    }

    Vec3 operator*(const Vec3& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }

    Mat3 transposed() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
        return r;
    }
};

struct Quat {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

    constexpr Quat() = default;
    constexpr Quat(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

    Quat operator*(const Quat& q) const {
        return {w * q.w - x * q.x - y * q.y - z * q.z,
                w * q.x + x * q.w + y * q.z - z * q.y,
                w * q.y - x * q.z + y * q.w + z * q.x,
                w * q.z + x * q.y - y * q.x + z * q.w};
    }

    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

    void normalize() {
        double n = norm();
        if (n > 0.0) {
            w /= n;
            x /= n;
            y /= n;
            z /= n;
        } else {
            *this = Quat{};
        }
    }

    static Quat from_axis_angle(const Vec3& axis, double angle) {
        Vec3 a = normalized(axis);
        double h = 0.5 * angle;
        double s = std::sin(h);
        return {std::cos(h), a.x * s, a.y * s, a.z * s};
    }

    Mat3 to_matrix() const {
        Mat3 r;
        double xx = x * x, yy = y * y, zz = z * z;
        double xy = x * y, xz = x * z, yz = y * z;
        double wx = w * x, wy = w * y, wz = w * z;
        r.m[0] = {1 - 2 * (yy + zz), 2 * (xy - wz), 2 * (xz + wy)};
        r.m[1] = {2 * (xy + wz), 1 - 2 * (xx + zz), 2 * (yz - wx)};
        r.m[2] = {2 * (xz - wy), 2 * (yz + wx), 1 - 2 * (xx + yy)};
        return r;
    }

    Vec3 rotate(const Vec3& v) const {
        // q v q* expanded via the cross-product form.
        Vec3 u{x, y, z};
        Vec3 t = 2.0 * cross(u, v);
        return v + w * t + cross(u, t);
    }
};

// dq/dt = 0.5 * (0, omega) * q, integrated explicitly then renormalized.
inline Quat integrate_orientation(const Quat& q, const Vec3& omega, double dt) {
    Quat wq{0.0, omega.x, omega.y, omega.z};
    Quat dq = wq * q;
    Quat out{q.w + 0.5 * dt * dq.w, q.x + 0.5 * dt * dq.x, q.y + 0.5 * dt * dq.y,
             q.z + 0.5 * dt * dq.z};
    out.normalize();
    return out;
}

}  // namespace physlab
