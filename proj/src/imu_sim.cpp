#include "tiltsvm/imu_sim.hpp"

#include <cmath>
#include <string>

#include "tiltsvm/errors.hpp"
#include "tiltsvm/rng.hpp"

namespace tiltsvm {

namespace {

bool finite3(const Vec3& v) {
  return std::isfinite(v[0]) && std::isfinite(v[1]) && std::isfinite(v[2]);
}

// w = R^T * v
Vec3 rotate_into_body(const Mat3& r, const Vec3& v) {
  return {r[0] * v[0] + r[3] * v[1] + r[6] * v[2],
          r[1] * v[0] + r[4] * v[1] + r[7] * v[2],
          r[2] * v[0] + r[5] * v[1] + r[8] * v[2]};
}

void validate_fields(const FieldConfig& f) {
  if (!std::isfinite(f.gravity_magnitude) || f.gravity_magnitude <= 0.0) {
    throw InvalidInput("field config: gravity must be finite and > 0");
  }
  if (!finite3(f.mag_field)) {
    throw InvalidInput("field config: non-finite mag field");
  }
  const double norm2 = f.mag_field[0] * f.mag_field[0] +
                       f.mag_field[1] * f.mag_field[1] +
                       f.mag_field[2] * f.mag_field[2];
  if (norm2 <= 0.0) throw InvalidInput("field config: zero mag field");
}

void validate_noise(const NoiseProfile& n) {
  for (double v : {n.accel_sigma, n.accel_bias_bound, n.gyro_sigma,
                   n.gyro_bias_bound, n.mag_sigma}) {
    if (!std::isfinite(v) || v < 0.0) {
      throw InvalidInput("noise profile: sigmas and bias bounds must be >= 0");
    }
  }
}

// Constant per-dataset bias, a function of the seed only.
// Components 0..2 accel, 3..5 gyro; the magnetometer has no bias term.
std::array<double, 6> dataset_bias(const NoiseProfile& n) {
  std::array<double, 6> b{};
  for (int i = 0; i < 3; ++i) {
    const double u = rng::uniform01(n.seed, rng::kStreamDatasetBias, i);
    b[i] = (2.0 * u - 1.0) * n.accel_bias_bound;
  }
  for (int i = 0; i < 3; ++i) {
    const double u = rng::uniform01(n.seed, rng::kStreamDatasetBias, 3 + i);
    b[3 + i] = (2.0 * u - 1.0) * n.gyro_bias_bound;
  }
  return b;
}

}  // namespace

Mat3 rotation_matrix(const EulerAngles& e) {
  if (!std::isfinite(e.roll) || !std::isfinite(e.pitch) ||
      !std::isfinite(e.yaw)) {
    throw InvalidInput("rotation_matrix: non-finite angle");
  }
  const double cr = std::cos(e.roll), sr = std::sin(e.roll);
  const double cp = std::cos(e.pitch), sp = std::sin(e.pitch);
  const double cy = std::cos(e.yaw), sy = std::sin(e.yaw);
  return {cy * cp, cy * sp * sr - sy * cr, cy * sp * cr + sy * sr,
          sy * cp, sy * sp * sr + cy * cr, sy * sp * cr - cy * sr,
          -sp,     cp * sr,               cp * cr};
}

SensorSample ideal_reading(const EulerAngles& e, const FieldConfig& f) {
  validate_fields(f);
  const Mat3 r = rotation_matrix(e);
  SensorSample s;
  s.accel = rotate_into_body(r, {0.0, 0.0, f.gravity_magnitude});
  s.gyro = {0.0, 0.0, 0.0};
  s.mag = rotate_into_body(r, f.mag_field);
  return s;
}

SensorSample apply_noise(const SensorSample& s, const NoiseProfile& n,
                         std::uint64_t stream_index) {
  validate_noise(n);
  const std::array<double, 6> bias = dataset_bias(n);
  SensorSample out = s;
  for (int i = 0; i < 3; ++i) {
    out.accel[i] = s.accel[i] + bias[i] +
                   n.accel_sigma * rng::gaussian(n.seed, stream_index, i);
  }
  for (int i = 0; i < 3; ++i) {
    out.gyro[i] = s.gyro[i] + bias[3 + i] +
                  n.gyro_sigma * rng::gaussian(n.seed, stream_index, 3 + i);
  }
  for (int i = 0; i < 3; ++i) {
    out.mag[i] =
        s.mag[i] + n.mag_sigma * rng::gaussian(n.seed, stream_index, 6 + i);
  }
  return out;
}

namespace {

struct ClassDef {
  TiltAxis axis;
  double level_deg;
};

std::vector<ClassDef> class_table(const GenConfig& cfg) {
  if (cfg.angle_levels_deg.empty() || cfg.axes.empty()) {
    throw InvalidConfig("gen config: empty levels or axes");
  }
  for (std::size_t i = 0; i < cfg.angle_levels_deg.size(); ++i) {
    const double lv = cfg.angle_levels_deg[i];
    if (!std::isfinite(lv) || lv < 0.0 || lv > 30.0) {
      throw InvalidConfig("gen config: levels must lie in [0, 30] degrees");
    }
    if (i > 0 && lv <= cfg.angle_levels_deg[i - 1]) {
      throw InvalidConfig("gen config: levels must be strictly ascending");
    }
  }
  for (std::size_t i = 0; i < cfg.axes.size(); ++i) {
    for (std::size_t j = i + 1; j < cfg.axes.size(); ++j) {
      if (cfg.axes[i] == cfg.axes[j]) {
        throw InvalidConfig("gen config: duplicate axis");
      }
    }
  }
  if (cfg.samples_per_class < 1) {
    throw InvalidConfig("gen config: samples_per_class must be >= 1");
  }

  // Level 0 tilts every axis identically, so it forms one shared class.
  std::vector<ClassDef> table;
  const bool has_zero = cfg.angle_levels_deg.front() == 0.0;
  if (has_zero) table.push_back({cfg.axes.front(), 0.0});
  for (TiltAxis axis : cfg.axes) {
    for (double lv : cfg.angle_levels_deg) {
      if (lv == 0.0) continue;
      table.push_back({axis, lv});
    }
  }
  if (table.empty()) throw InvalidConfig("gen config: no classes");
  return table;
}

}  // namespace

int class_count(const GenConfig& cfg) {
  return static_cast<int>(class_table(cfg).size());
}

EulerAngles class_angles(const GenConfig& cfg, int id) {
  const auto table = class_table(cfg);
  if (id < 0 || id >= static_cast<int>(table.size())) {
    throw InvalidInput("class_angles: id out of range");
  }
  const ClassDef& def = table[static_cast<std::size_t>(id)];
  const double rad = def.level_deg * NoiseProfile::kDegToRad;
  EulerAngles e;
  if (def.axis == TiltAxis::x) {
    e.roll = rad;
  } else {
    e.pitch = rad;
  }
  return e;
}

Dataset generate_dataset(const GenConfig& cfg) {
  const auto table = class_table(cfg);
  validate_fields(cfg.fields);
  validate_noise(cfg.noise);

  const std::size_t n_classes = table.size();
  const std::size_t m = static_cast<std::size_t>(cfg.samples_per_class);
  std::vector<double> feats;
  feats.reserve(n_classes * m * 9);
  std::vector<int> labels;
  labels.reserve(n_classes * m);

  for (std::size_t c = 0; c < n_classes; ++c) {
    const EulerAngles e = class_angles(cfg, static_cast<int>(c));
    const SensorSample ideal = ideal_reading(e, cfg.fields);
    for (std::size_t s = 0; s < m; ++s) {
      const std::uint64_t stream =
          rng::kStreamSampleBase + ((static_cast<std::uint64_t>(c) << 32) | s);
      const SensorSample noisy = apply_noise(ideal, cfg.noise, stream);
      feats.insert(feats.end(), noisy.accel.begin(), noisy.accel.end());
      feats.insert(feats.end(), noisy.gyro.begin(), noisy.gyro.end());
      feats.insert(feats.end(), noisy.mag.begin(), noisy.mag.end());
      labels.push_back(static_cast<int>(c));
    }
  }
  return Dataset(std::move(feats), 9, std::move(labels), kSensorColumns);
}

}  // namespace tiltsvm
