#pragma once

#include <Eigen/Dense>
#include <vector>

#include "radardet/core/types.hpp"
#include "radardet/projection/grid.hpp"

namespace radardet::proj {

using Matrix = Eigen::MatrixXd;

// (x, y, z) -> (rho, phi, z') with rho = sqrt(x^2+y^2), phi = atan2(y, x)
// in (-pi, pi] (phi = 0 at the origin), z' = z.
Matrix cartesian_to_cylinder(const Matrix& xyz);

// Coordinates consumed by the CYL grid: (rho, phi', z') with
// phi' = atan2(y, x) + pi/2, so the front hemisphere covers [0, pi] and
// rear points fall outside the grid range.
Matrix cylinder_grid_coords(const Matrix& xyz);

// Bidirectional point <-> pillar index structure for one view.
struct PillarMapping {
  GridSpec spec;
  std::vector<int> point_to_pillar;  // flat cell id, or -1 for dropped
  std::vector<char> kept_mask;
  std::vector<int> occupied_cells;                // flat ids, ascending
  std::vector<std::vector<int>> pillar_to_points; // aligned with occupied_cells
  std::vector<int> point_to_occupied;             // index into occupied_cells, or -1

  int num_points() const { return static_cast<int>(point_to_pillar.size()); }
  int num_occupied() const { return static_cast<int>(occupied_cells.size()); }
};

// Assigns points (in the grid's native coordinates: Cartesian for BEV,
// cylinder_grid_coords output for CYL) to pillars. Cells are half-open
// [min, max) per axis; points outside any axis range are dropped.
PillarMapping build_pillar_mapping(const Matrix& coords, const GridSpec& spec);

// Decorated per-point features for the pillar encoder: the 6 raw fields
// [x, y, z, v, v_r, rcs], the offset from the pillar centroid (3, in grid
// coordinates) and the offset from the geometric cell center (2, gridded
// axes). Dropped points get zero rows. N x 11.
Matrix decorate_points(const Matrix& raw6, const Matrix& grid_coords, const PillarMapping& mapping);

inline constexpr int kDecoratedWidth = 11;

// Gathers per-pillar features back to points: each kept point receives the
// row of its occupied pillar; dropped points receive zeros.
// cell_features is num_occupied x C, aligned with mapping.occupied_cells.
Matrix gather_point_features(const Matrix& cell_features, const PillarMapping& mapping);

// Gathers from a dense feature image laid out row-major (H*W) x C.
Matrix gather_point_features_dense(const Matrix& image_hw_by_c, const PillarMapping& mapping);

}  // namespace radardet::proj
