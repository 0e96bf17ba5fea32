#pragma once

#include <string>

namespace radardet::proj {

enum class View { kBev, kCyl };

struct AxisSpec {
  double min = 0.0;
  double max = 0.0;
  double cell = 0.0;
};

// Grid over one view. BEV axes are (x, y, z) with (x, y) gridded and a
// single z bin; CYL axes are (rho, phi, zp) with (phi, zp) gridded and a
// single rho bin. The pseudo-image is grid_h x grid_w over the gridded
// axes: BEV (x, y), CYL (phi, zp).
struct GridSpec {
  View view = View::kBev;
  AxisSpec axes[3];

  int cells(int axis) const;  // ceil(range / cell), >= 1
  int grid_h() const;
  int grid_w() const;
  void validate() const;  // throws ConfigError
};

GridSpec make_bev_grid(AxisSpec x, AxisSpec y, AxisSpec z);
GridSpec make_cyl_grid(AxisSpec rho, AxisSpec phi, AxisSpec zp);

// Both views of one dataset preset.
struct GridPreset {
  GridSpec bev;
  GridSpec cyl;
};

// Named presets: "vod" and "astyx" carry the published network parameters;
// "desk" is a coarse small-scale profile for CPU experiments.
GridPreset grid_preset(const std::string& name);

}  // namespace radardet::proj
