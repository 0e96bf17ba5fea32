#include "radardet/projection/pillars.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "radardet/core/error.hpp"

namespace radardet::proj {

Matrix cartesian_to_cylinder(const Matrix& xyz) {
  Matrix out(xyz.rows(), 3);
  for (int i = 0; i < xyz.rows(); ++i) {
    const double x = xyz(i, 0);
    const double y = xyz(i, 1);
    out(i, 0) = std::hypot(x, y);
    out(i, 1) = (x == 0.0 && y == 0.0) ? 0.0 : std::atan2(y, x);
    out(i, 2) = xyz(i, 2);
  }
  return out;
}

Matrix cylinder_grid_coords(const Matrix& xyz) {
  Matrix out = cartesian_to_cylinder(xyz);
  for (int i = 0; i < out.rows(); ++i) out(i, 1) += M_PI / 2.0;
  return out;
}

PillarMapping build_pillar_mapping(const Matrix& coords, const GridSpec& spec) {
  spec.validate();
  if (coords.cols() != 3) throw ContractError("pillar mapping expects N x 3 coordinates");

  const int n = static_cast<int>(coords.rows());
  const int ga = spec.view == View::kBev ? 0 : 1;  // first gridded axis
  const int gb = spec.view == View::kBev ? 1 : 2;  // second gridded axis
  const int na = spec.view == View::kBev ? spec.cells(0) : spec.cells(1);
  const int nb = spec.view == View::kBev ? spec.cells(1) : spec.cells(2);

  PillarMapping m;
  m.spec = spec;
  m.point_to_pillar.assign(static_cast<size_t>(n), -1);
  m.kept_mask.assign(static_cast<size_t>(n), 0);
  m.point_to_occupied.assign(static_cast<size_t>(n), -1);

  std::map<int, std::vector<int>> cells;
  for (int i = 0; i < n; ++i) {
    bool in_range = true;
    for (int a = 0; a < 3; ++a) {
      const double c = coords(i, a);
      if (!(c >= spec.axes[a].min && c < spec.axes[a].max)) {
        in_range = false;
        break;
      }
    }
    if (!in_range) continue;
    const int ia = static_cast<int>(std::floor((coords(i, ga) - spec.axes[ga].min) / spec.axes[ga].cell));
    const int ib = static_cast<int>(std::floor((coords(i, gb) - spec.axes[gb].min) / spec.axes[gb].cell));
    // Range checks above admit coords whose floor lands one past the last
    // cell when cell counts were rounded down; treat those as dropped too.
    if (ia < 0 || ia >= na || ib < 0 || ib >= nb) continue;
    const int flat = ia * nb + ib;
    m.point_to_pillar[static_cast<size_t>(i)] = flat;
    m.kept_mask[static_cast<size_t>(i)] = 1;
    cells[flat].push_back(i);
  }

  m.occupied_cells.reserve(cells.size());
  m.pillar_to_points.reserve(cells.size());
  for (auto& [flat, pts] : cells) {
    const int occ = static_cast<int>(m.occupied_cells.size());
    for (int p : pts) m.point_to_occupied[static_cast<size_t>(p)] = occ;
    m.occupied_cells.push_back(flat);
    m.pillar_to_points.push_back(std::move(pts));
  }
  return m;
}

Matrix decorate_points(const Matrix& raw6, const Matrix& grid_coords, const PillarMapping& mapping) {
  const int n = mapping.num_points();
  if (raw6.rows() != n || grid_coords.rows() != n) {
    throw ContractError("decorate_points: raw fields, grid coordinates and mapping disagree on N");
  }
  if (raw6.cols() != 6) throw ContractError("decorate_points expects 6 raw fields per point");

  const GridSpec& spec = mapping.spec;
  const int ga = spec.view == View::kBev ? 0 : 1;
  const int gb = spec.view == View::kBev ? 1 : 2;
  const int nb = spec.view == View::kBev ? spec.cells(1) : spec.cells(2);

  // Per-pillar centroid in grid coordinates.
  Matrix centroids = Matrix::Zero(mapping.num_occupied(), 3);
  for (int s = 0; s < mapping.num_occupied(); ++s) {
    const auto& members = mapping.pillar_to_points[static_cast<size_t>(s)];
    for (int p : members) centroids.row(s) += grid_coords.row(p);
    centroids.row(s) /= static_cast<double>(members.size());
  }

  Matrix out = Matrix::Zero(n, kDecoratedWidth);
  for (int i = 0; i < n; ++i) {
    if (!mapping.kept_mask[static_cast<size_t>(i)]) continue;
    const int occ = mapping.point_to_occupied[static_cast<size_t>(i)];
    const int flat = mapping.occupied_cells[static_cast<size_t>(occ)];
    const int ia = flat / nb;
    const int ib = flat % nb;
    const double center_a = spec.axes[ga].min + (ia + 0.5) * spec.axes[ga].cell;
    const double center_b = spec.axes[gb].min + (ib + 0.5) * spec.axes[gb].cell;

    out.block<1, 6>(i, 0) = raw6.row(i);
    out.block<1, 3>(i, 6) = grid_coords.row(i) - centroids.row(occ);
    out(i, 9) = grid_coords(i, ga) - center_a;
    out(i, 10) = grid_coords(i, gb) - center_b;
  }
  return out;
}

Matrix gather_point_features(const Matrix& cell_features, const PillarMapping& mapping) {
  if (cell_features.rows() != mapping.num_occupied()) {
    throw ContractError("gather: cell feature rows do not match occupied pillar count");
  }
  Matrix out = Matrix::Zero(mapping.num_points(), cell_features.cols());
  for (int i = 0; i < mapping.num_points(); ++i) {
    const int occ = mapping.point_to_occupied[static_cast<size_t>(i)];
    if (occ >= 0) out.row(i) = cell_features.row(occ);
  }
  return out;
}

Matrix gather_point_features_dense(const Matrix& image_hw_by_c, const PillarMapping& mapping) {
  const long expected = static_cast<long>(mapping.spec.grid_h()) * mapping.spec.grid_w();
  if (image_hw_by_c.rows() != expected) {
    throw ContractError("gather: feature image is not spatially congruent with the mapping grid");
  }
  Matrix out = Matrix::Zero(mapping.num_points(), image_hw_by_c.cols());
  for (int i = 0; i < mapping.num_points(); ++i) {
    const int flat = mapping.point_to_pillar[static_cast<size_t>(i)];
    if (flat >= 0) out.row(i) = image_hw_by_c.row(flat);
  }
  return out;
}

}  // namespace radardet::proj
