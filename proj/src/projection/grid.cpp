#include "radardet/projection/grid.hpp"

#include <cmath>

#include "radardet/core/error.hpp"

namespace radardet::proj {

int GridSpec::cells(int axis) const {
  const AxisSpec& a = axes[axis];
  // Guard against 51.2/0.16 style quotients landing a hair above the
  // intended integer.
  const int n = static_cast<int>(std::ceil((a.max - a.min) / a.cell - 1e-9));
  return n < 1 ? 1 : n;
}

int GridSpec::grid_h() const { return view == View::kBev ? cells(0) : cells(1); }
int GridSpec::grid_w() const { return view == View::kBev ? cells(1) : cells(2); }

void GridSpec::validate() const {
  for (int i = 0; i < 3; ++i) {
    if (!(axes[i].cell > 0.0)) throw ConfigError("grid cell size must be positive");
    if (!(axes[i].max > axes[i].min)) throw ConfigError("grid axis range is degenerate");
  }
}

GridSpec make_bev_grid(AxisSpec x, AxisSpec y, AxisSpec z) {
  GridSpec g;
  g.view = View::kBev;
  g.axes[0] = x;
  g.axes[1] = y;
  g.axes[2] = z;
  g.validate();
  return g;
}

GridSpec make_cyl_grid(AxisSpec rho, AxisSpec phi, AxisSpec zp) {
  GridSpec g;
  g.view = View::kCyl;
  g.axes[0] = rho;
  g.axes[1] = phi;
  g.axes[2] = zp;
  g.validate();
  return g;
}

GridPreset grid_preset(const std::string& name) {
  const double pi = M_PI;
  if (name == "vod") {
    GridPreset p;
    p.bev = make_bev_grid({0.0, 51.2, 0.16}, {-25.6, 25.6, 0.16}, {-3.0, 2.0, 5.0});
    p.cyl = make_cyl_grid({0.0, 72.4, 72.4}, {0.0, pi, pi / 1280.0}, {-3.0, 2.0, 0.05});
    return p;
  }
  if (name == "astyx") {
    GridPreset p;
    p.bev = make_bev_grid({0.0, 99.84, 0.16}, {-39.68, 39.68, 0.16}, {-3.0, 1.0, 4.0});
    p.cyl = make_cyl_grid({0.0, 100.6, 100.6}, {0.0, pi, pi / 1280.0}, {-3.0, 1.0, 0.04});
    return p;
  }
  if (name == "desk") {
    GridPreset p;
    p.bev = make_bev_grid({0.0, 51.2, 0.8}, {-25.6, 25.6, 0.8}, {-3.0, 2.0, 5.0});
    p.cyl = make_cyl_grid({0.0, 72.4, 72.4}, {0.0, pi, pi / 64.0}, {-3.0, 2.0, 0.25});
    return p;
  }
  throw ConfigError("unknown grid preset '" + name + "'");
}

}  // namespace radardet::proj
