#pragma once

#include <array>
#include <cstdint>

#include "radardet/core/types.hpp"
#include "radardet/projection/grid.hpp"

namespace radardet::io {

// Synthetic radar scene generator. Objects are planted as oriented boxes
// supported by points sampled inside them; object points carry Doppler
// consistent with a sampled object velocity projected on the radial
// direction, plus class-dependent RCS offsets above background clutter.
struct SynthConfig {
  proj::GridSpec grid;  // detection range the scene must stay inside (BEV view)

  int objects_min = 1;
  int objects_max = 3;
  std::array<double, 3> class_weights = {0.5, 0.25, 0.25};  // car, pedestrian, cyclist

  // Object center placement; must leave room for the box extent inside the
  // grid's x/y range.
  double x_min = 6.0;
  double x_max = 45.0;
  double y_min = -20.0;
  double y_max = 20.0;

  int points_per_object_min = 6;
  int points_per_object_max = 16;

  int clutter_min = 24;
  int clutter_max = 64;

  double clutter_rcs_mean = -5.0;
  double clutter_rcs_std = 2.0;
  // RCS offset above clutter mean per class (car, pedestrian, cyclist).
  std::array<double, 3> object_rcs_offset = {16.0, 6.0, 10.0};
  double object_rcs_std = 1.0;

  double object_speed_min = 2.0;
  double object_speed_max = 10.0;
  double doppler_noise_std = 0.15;

  double ego_speed_min = 0.0;
  double ego_speed_max = 8.0;

  double size_jitter = 0.08;  // relative jitter on canonical class sizes

  void validate() const;  // throws ConfigError
};

RadarFrame synth_scene(std::uint64_t seed, const SynthConfig& config);

// Canonical class sizes (l, w, h) and z center used by the generator and
// the default anchor tables.
struct ClassGeometry {
  double l, w, h, z_center;
};
ClassGeometry canonical_geometry(ObjectClass c);

}  // namespace radardet::io
