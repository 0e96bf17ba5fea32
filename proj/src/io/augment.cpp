#include "radardet/io/augment.hpp"

#include "radardet/core/error.hpp"

namespace radardet::io {

void AugmentSpec::validate() const {
  if (flip_probability < 0.0 || flip_probability > 1.0) {
    throw ConfigError("flip probability outside [0, 1]");
  }
  if (!(scale_min > 0.0) || scale_max < scale_min) throw ConfigError("bad scale range");
}

RadarFrame flip_frame(const RadarFrame& frame) {
  RadarFrame out = frame;
  for (RadarPoint& p : out.points) p.y = -p.y;
  for (Box3D& b : out.boxes) {
    b.cy = -b.cy;
    b.yaw = wrap_angle(-b.yaw);
  }
  return out;
}

RadarFrame scale_frame(const RadarFrame& frame, double s) {
  RadarFrame out = frame;
  const float fs = static_cast<float>(s);
  for (RadarPoint& p : out.points) {
    p.x *= fs;
    p.y *= fs;
    p.z *= fs;
    p.v *= fs;
    p.v_r *= fs;
  }
  for (Box3D& b : out.boxes) {
    b.cx *= s;
    b.cy *= s;
    b.cz *= s;
    b.l *= s;
    b.w *= s;
    b.h *= s;
  }
  return out;
}

RadarFrame augment(const RadarFrame& frame, const AugmentSpec& spec, std::mt19937_64& rng) {
  spec.validate();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const bool flip = unit(rng) < spec.flip_probability;
  const double s = spec.scale_min + (spec.scale_max - spec.scale_min) * unit(rng);
  RadarFrame out = flip ? flip_frame(frame) : frame;
  if (s != 1.0) out = scale_frame(out, s);
  return out;
}

}  // namespace radardet::io
