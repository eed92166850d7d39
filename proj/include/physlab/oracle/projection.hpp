#pragma once

#include "physlab/core/error.hpp"
#include "physlab/core/vec3.hpp"

namespace physlab::oracle {

// Full second-order state of a point in camera coordinates (x right, y down,
// z forward; z > 0 in front of the camera).
struct Kinematics3D {
    Vec3 pos;    // m
    Vec3 vel;    // m/s
    Vec3 accel;  // m/s^2
};

struct ProjectedKinematics {
    double du = 0.0;   // px/s
    double dv = 0.0;   // px/s
    double ddu = 0.0;  // px/s^2
    double ddv = 0.0;  // px/s^2
};

// Analytic image-plane velocity/acceleration of a moving 3D point under a
// pinhole camera with focal length f (pixels):
//   du  = (f/z) (dx - (x/z) dz)
//   ddu = (f/z) (ddx - (x/z) ddz) - (f/z^2) (dz dx - (x/z) dz^2)
// and the same for v with y in place of x.
inline ProjectedKinematics project_kinematics(const Kinematics3D& k, double focal_px) {
    if (k.pos.z <= 0.0) throw ConfigError("project_kinematics: point must have z > 0");
    double z = k.pos.z, dz = k.vel.z, ddz = k.accel.z;
    double fz = focal_px / z;
    double fz2 = focal_px / (z * z);
    ProjectedKinematics out;
    out.du = fz * (k.vel.x - (k.pos.x / z) * dz);
    out.dv = fz * (k.vel.y - (k.pos.y / z) * dz);
    out.ddu = fz * (k.accel.x - (k.pos.x / z) * ddz) -
              fz2 * (dz * k.vel.x - (k.pos.x / z) * dz * dz);
    out.ddv = fz * (k.accel.y - (k.pos.y / z) * ddz) -
              fz2 * (dz * k.vel.y - (k.pos.y / z) * dz * dz);
    return out;
}

// Projectile in a vertical plane, expressed in camera coordinates with the
// image v-axis pointing down: launch position (x0, y0) px-free meters, depth
// z0, speed v0 at angle theta above the horizontal. World "up" maps to -y,
// so gravity acts along +y here. depth_rate adds a constant camera-z drift
// for the non-fronto-parallel case.
struct ProjectileParams {
    double x0 = 0.0;
    double y0 = 0.0;
    double z0 = 5.0;
    double speed = 5.0;
    double theta = 0.9;     // rad above horizontal
    double gravity = 9.81;  // m/s^2
    double depth_rate = 0.0;
};

inline Kinematics3D projectile_state(const ProjectileParams& p, double t) {
    if (t < 0.0) throw ConfigError("projectile_state: t must be >= 0");
    Kinematics3D k;
    double vx = p.speed * std::cos(p.theta);
    double vy_up = p.speed * std::sin(p.theta) - p.gravity * t;  // world-up component
    k.pos = {p.x0 + p.speed * std::cos(p.theta) * t,
             p.y0 - (p.speed * std::sin(p.theta) * t - 0.5 * p.gravity * t * t),
             p.z0 + p.depth_rate * t};
    k.vel = {vx, -vy_up, p.depth_rate};
    k.accel = {0.0, p.gravity, 0.0};
    return k;
}

// Pixel position under the pinhole model; the companion of project_kinematics.
inline void project_point_camera(const Vec3& p, double focal_px, double cx, double cy,
                                 double& u, double& v) {
    u = focal_px * p.x / p.z + cx;
    v = focal_px * p.y / p.z + cy;
}

}  // namespace physlab::oracle
