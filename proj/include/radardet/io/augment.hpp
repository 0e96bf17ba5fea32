#pragma once

#include <random>

#include "radardet/core/types.hpp"

namespace radardet::io {

// Training-time augmentation: random flip around the x axis and global
// rescale within [scale_min, scale_max]. No translation or per-object
// rotation is ever applied.
struct AugmentSpec {
  double flip_probability = 0.5;
  double scale_min = 0.95;
  double scale_max = 1.05;

  void validate() const;  // throws ConfigError
};

// Flip: y -> -y for points and box centers, yaw -> -yaw; Doppler channels
// are unchanged (radial speed magnitude is reflection-invariant).
RadarFrame flip_frame(const RadarFrame& frame);

// Uniform world rescale by s: coordinates, box centers and sizes, and both
// Doppler channels multiply by s.
RadarFrame scale_frame(const RadarFrame& frame, double s);

RadarFrame augment(const RadarFrame& frame, const AugmentSpec& spec, std::mt19937_64& rng);

}  // namespace radardet::io
