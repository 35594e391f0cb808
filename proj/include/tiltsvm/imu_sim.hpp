#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tiltsvm/dataset.hpp"

// Forward model of a static tilt platform instrumented with a 9-axis MEMS
// unit (accelerometer, gyroscope, magnetometer), plus a seeded noise layer
// and a labeled-dataset generator.
//
// Conventions (fixed; see README):
//  * Navigation frame is ENU (x east, y north, z up).
//  * rotation_matrix(e) is the body-to-navigation matrix built intrinsically
//    Z-Y-X: R = Rz(yaw) * Ry(pitch) * Rx(roll).
//  * The accelerometer reports specific force, so a level platform at rest
//    reads +g along body z: accel = R^T * (0, 0, g).
//  * The gyroscope reads zero on the static platform; the magnetometer reads
//    the Earth field rotated into the body frame: mag = R^T * mag_field.

namespace tiltsvm {

struct EulerAngles {
  double roll = 0.0;   // about body x, radians
  double pitch = 0.0;  // about body y, radians
  double yaw = 0.0;    // about body z, radians
};

// Row-major 3x3 matrix.
using Mat3 = std::array<double, 9>;
using Vec3 = std::array<double, 3>;

struct FieldConfig {
  double gravity_magnitude = 9.81;  // m/s^2
  // Earth magnetic field in the navigation frame, uT.  Default: 50 uT at
  // 60 degrees inclination, zero declination -> 25 north, 43.3 down.
  Vec3 mag_field{0.0, 25.0, -43.301270189221931};
};

struct NoiseProfile {
  double accel_sigma = 0.02 * 9.81;       // m/s^2 per axis
  double accel_bias_bound = 0.01 * 9.81;  // m/s^2, uniform +-bound per axis
  double gyro_sigma = 0.5 * kDegToRad;    // rad/s
  double gyro_bias_bound = 1.0 * kDegToRad;
  double mag_sigma = 1.0;  // uT
  std::uint64_t seed = 0;

  static constexpr double kDegToRad = 0.017453292519943295;
};

struct SensorSample {
  Vec3 accel{};  // m/s^2
  Vec3 gyro{};   // rad/s
  Vec3 mag{};    // uT
  int label = -1;  // -1 = unlabeled
};

enum class TiltAxis { x, y };  // x tilt = roll, y tilt = pitch

struct GenConfig {
  std::vector<double> angle_levels_deg{0, 5, 10, 15, 20, 25, 30};
  std::vector<TiltAxis> axes{TiltAxis::x, TiltAxis::y};
  int samples_per_class = 100;
  NoiseProfile noise;
  FieldConfig fields;
};

// Body-to-navigation rotation, intrinsic Z-Y-X.  R^T R = I, det R = +1.
// Throws InvalidInput on non-finite angles.
Mat3 rotation_matrix(const EulerAngles& e);

// Noiseless static-platform reading (unlabeled).
SensorSample ideal_reading(const EulerAngles& e, const FieldConfig& f);

// Adds the per-dataset constant bias (uniform +-bound per axis, drawn from
// the seed alone on stream kStreamDatasetBias) plus independent zero-mean
// Gaussian noise per component.  Pure function of (sample, profile,
// stream_index); callers give each sample its own stream_index.
SensorSample apply_noise(const SensorSample& s, const NoiseProfile& n,
                         std::uint64_t stream_index);

// Class scheme: one shared class for level 0 (when present), then one class
// per (axis, nonzero level) in axis order, levels ascending.  Default config
// gives 13 classes.  Rows are emitted class-major; sample s of class c is
// noised on stream kStreamSampleBase + (c<<32|s).
Dataset generate_dataset(const GenConfig& cfg);

// Number of classes the config produces (shared 0-degree class deduplicated).
int class_count(const GenConfig& cfg);

// Euler angles of class `id` under the config's scheme.
EulerAngles class_angles(const GenConfig& cfg, int id);

}  // namespace tiltsvm
