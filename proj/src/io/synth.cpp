#include "radardet/io/synth.hpp"

#include <cmath>
#include <random>

#include "radardet/core/error.hpp"
#include "radardet/geom/box_geom.hpp"

namespace radardet::io {

namespace {

double max_half_diag(const SynthConfig& c) {
  double best = 0.0;
  for (int k = 0; k < kNumClasses; ++k) {
    const ClassGeometry g = canonical_geometry(static_cast<ObjectClass>(k));
    const double scale = 1.0 + c.size_jitter;
    best = std::max(best, 0.5 * std::hypot(g.l * scale, g.w * scale));
  }
  return best;
}

}  // namespace

ClassGeometry canonical_geometry(ObjectClass c) {
  switch (c) {
    case ObjectClass::kCar: return {3.9, 1.6, 1.56, -1.0};
    case ObjectClass::kPedestrian: return {0.8, 0.6, 1.73, -0.6};
    case ObjectClass::kCyclist: return {1.76, 0.6, 1.73, -0.6};
  }
  throw ArgumentError("unknown class");
}

void SynthConfig::validate() const {
  grid.validate();
  if (grid.view != proj::View::kBev) throw ConfigError("synth grid must be a BEV spec");
  if (objects_min < 0 || objects_max < objects_min) throw ConfigError("bad object count range");
  if (points_per_object_min < 5) throw ConfigError("objects need at least 5 supporting points");
  if (points_per_object_max < points_per_object_min) throw ConfigError("bad points-per-object range");
  if (clutter_min < 0 || clutter_max < clutter_min) throw ConfigError("bad clutter count range");
  if (object_speed_max < object_speed_min || object_speed_min < 0.0) throw ConfigError("bad speed range");
  if (ego_speed_max < ego_speed_min || ego_speed_min < 0.0) throw ConfigError("bad ego speed range");
  if (size_jitter < 0.0 || size_jitter >= 0.5) throw ConfigError("size jitter outside [0, 0.5)");
  double wsum = 0.0;
  for (double w : class_weights) {
    if (w < 0.0) throw ConfigError("negative class weight");
    wsum += w;
  }
  if (wsum <= 0.0) throw ConfigError("class weights sum to zero");

  const double margin = max_half_diag(*this);
  if (x_min - margin < grid.axes[0].min || x_max + margin > grid.axes[0].max ||
      y_min - margin < grid.axes[1].min || y_max + margin > grid.axes[1].max) {
    throw ConfigError("object placement range (plus box extent) exceeds the detection range");
  }
  if (x_max < x_min || y_max < y_min) throw ConfigError("degenerate placement range");
  for (int k = 0; k < kNumClasses; ++k) {
    const ClassGeometry g = canonical_geometry(static_cast<ObjectClass>(k));
    const double hh = 0.5 * g.h * (1.0 + size_jitter);
    if (g.z_center - hh < grid.axes[2].min || g.z_center + hh > grid.axes[2].max) {
      throw ConfigError("class z extent exceeds the detection z range");
    }
  }
}

RadarFrame synth_scene(std::uint64_t seed, const SynthConfig& config) {
  config.validate();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  RadarFrame frame;
  frame.frame_id = "synth_" + std::to_string(seed);
  frame.ego_speed = config.ego_speed_min + (config.ego_speed_max - config.ego_speed_min) * unit(rng);
  const Eigen::Vector3d v_ego(frame.ego_speed, 0.0, 0.0);

  const auto radial = [](double x, double y, double z) {
    const double r = std::sqrt(x * x + y * y + z * z);
    return r > 1e-9 ? Eigen::Vector3d(x / r, y / r, z / r) : Eigen::Vector3d::Zero().eval();
  };

  // Objects.
  const int n_obj = config.objects_min +
                    static_cast<int>(std::floor(unit(rng) * (config.objects_max - config.objects_min + 1)));
  std::vector<Eigen::Vector3d> velocities;
  for (int o = 0; o < n_obj; ++o) {
    // Class from the configured mix.
    double wsum = 0.0;
    for (double w : config.class_weights) wsum += w;
    double draw = unit(rng) * wsum;
    int cls = 0;
    for (; cls < kNumClasses - 1; ++cls) {
      draw -= config.class_weights[static_cast<size_t>(cls)];
      if (draw < 0.0) break;
    }
    const ClassGeometry geo = canonical_geometry(static_cast<ObjectClass>(cls));

    Box3D box;
    box.class_id = static_cast<ObjectClass>(cls);
    const auto jitter = [&] { return 1.0 + config.size_jitter * (2.0 * unit(rng) - 1.0); };
    box.l = geo.l * jitter();
    box.w = geo.w * jitter();
    box.h = geo.h * jitter();
    box.cz = geo.z_center;
    box.yaw = wrap_angle(unit(rng) * 2.0 * M_PI);

    // Non-overlapping placement; congested scenes may plant fewer objects.
    bool placed = false;
    for (int attempt = 0; attempt < 100 && !placed; ++attempt) {
      box.cx = config.x_min + (config.x_max - config.x_min) * unit(rng);
      box.cy = config.y_min + (config.y_max - config.y_min) * unit(rng);
      placed = true;
      for (const Box3D& other : frame.boxes) {
        if (geom::rotated_iou(box, other, geom::IouMode::kBev) > 0.0 ||
            std::hypot(box.cx - other.cx, box.cy - other.cy) < 1.5) {
          placed = false;
          break;
        }
      }
    }
    if (!placed) continue;
    frame.boxes.push_back(box);

    const double speed = config.object_speed_min +
                         (config.object_speed_max - config.object_speed_min) * unit(rng);
    const Eigen::Vector3d v_obj(speed * std::cos(box.yaw), speed * std::sin(box.yaw), 0.0);
    velocities.push_back(v_obj);

    const int n_pts = config.points_per_object_min +
                      static_cast<int>(std::floor(unit(rng) *
                          (config.points_per_object_max - config.points_per_object_min + 1)));
    const double c = std::cos(box.yaw), s = std::sin(box.yaw);
    for (int p = 0; p < n_pts; ++p) {
      // Strictly inside the box so the support guarantee survives float
      // truncation on disk.
      const double lu = 0.92 * box.l * (unit(rng) - 0.5);
      const double lv = 0.92 * box.w * (unit(rng) - 0.5);
      const double lw = 0.92 * box.h * (unit(rng) - 0.5);
      RadarPoint pt;
      pt.x = static_cast<float>(box.cx + c * lu - s * lv);
      pt.y = static_cast<float>(box.cy + s * lu + c * lv);
      pt.z = static_cast<float>(box.cz + lw);
      const Eigen::Vector3d r = radial(pt.x, pt.y, pt.z);
      pt.v = static_cast<float>(v_obj.dot(r) + config.doppler_noise_std * gauss(rng));
      pt.v_r = static_cast<float>((v_obj - v_ego).dot(r) + config.doppler_noise_std * gauss(rng));
      pt.rcs = static_cast<float>(config.clutter_rcs_mean +
                                  config.object_rcs_offset[static_cast<size_t>(cls)] +
                                  config.object_rcs_std * gauss(rng));
      frame.points.push_back(pt);
    }
  }

  // Background clutter: static world, so absolute Doppler is noise around
  // zero and the ego-relative channel sees the projected ego motion.
  const int n_clutter = config.clutter_min +
                        static_cast<int>(std::floor(unit(rng) * (config.clutter_max - config.clutter_min + 1)));
  const auto& gx = config.grid.axes[0];
  const auto& gy = config.grid.axes[1];
  const auto& gz = config.grid.axes[2];
  for (int i = 0; i < n_clutter; ++i) {
    RadarPoint pt;
    for (int attempt = 0; attempt < 100; ++attempt) {
      pt.x = static_cast<float>(gx.min + (gx.max - gx.min) * 0.999 * unit(rng));
      pt.y = static_cast<float>(gy.min + (gy.max - gy.min) * 0.999 * unit(rng));
      pt.z = static_cast<float>(gz.min + (gz.max - gz.min) * 0.999 * unit(rng));
      bool inside_object = false;
      for (const Box3D& b : frame.boxes) {
        if (geom::point_in_box(pt.x, pt.y, pt.z, b)) {
          inside_object = true;
          break;
        }
      }
      if (!inside_object) break;
    }
    const Eigen::Vector3d r = radial(pt.x, pt.y, pt.z);
    pt.v = static_cast<float>(config.doppler_noise_std * gauss(rng));
    pt.v_r = static_cast<float>(-v_ego.dot(r) + config.doppler_noise_std * gauss(rng));
    pt.rcs = static_cast<float>(config.clutter_rcs_mean + config.clutter_rcs_std * gauss(rng));
    frame.points.push_back(pt);
  }

  return frame;
}

}  // namespace radardet::io
