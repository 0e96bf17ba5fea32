#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace radardet {

// Object classes supported by the datasets and the detector.
enum class ObjectClass : int { kCar = 0, kPedestrian = 1, kCyclist = 2 };

inline constexpr int kNumClasses = 3;

const char* class_name(ObjectClass c);
ObjectClass class_from_name(const std::string& name);  // throws ValidationError

// One radar return in the sensor/ego frame (x forward, y left, z up).
// v is the absolute Doppler velocity, v_r the ego-motion-relative one,
// rcs the reflectivity in dBsm.
struct RadarPoint {
  float x = 0.f;
  float y = 0.f;
  float z = 0.f;
  float v = 0.f;
  float v_r = 0.f;
  float rcs = 0.f;

  bool all_finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z) &&
           std::isfinite(v) && std::isfinite(v_r) && std::isfinite(rcs);
  }
};

// Oriented 3D box: center, size (l along heading, w across, h up), yaw
// about +z in (-pi, pi].
struct Box3D {
  double cx = 0.0;
  double cy = 0.0;
  double cz = 0.0;
  double l = 0.0;
  double w = 0.0;
  double h = 0.0;
  double yaw = 0.0;
  ObjectClass class_id = ObjectClass::kCar;
};

// Normalizes an angle into (-pi, pi].
double wrap_angle(double a);

// One radar sweep with its ground-truth labels. N may be zero.
struct RadarFrame {
  std::string frame_id;
  std::vector<RadarPoint> points;
  std::vector<Box3D> boxes;
  double ego_speed = 0.0;  // consumed only by the synthetic generator
};

// A scored detection emitted by the head.
struct Detection {
  Box3D box;
  ObjectClass class_id = ObjectClass::kCar;
  double score = 0.0;
};

}  // namespace radardet
