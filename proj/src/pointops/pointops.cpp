#include "radardet/pointops/pointops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "radardet/core/error.hpp"

namespace radardet::pointops {

namespace {

inline double sq_dist(const Matrix& a, int i, const Matrix& b, int j) {
  const double dx = a(i, 0) - b(j, 0);
  const double dy = a(i, 1) - b(j, 1);
  const double dz = a(i, 2) - b(j, 2);
  return dx * dx + dy * dy + dz * dz;
}

}  // namespace

std::vector<std::vector<int>> knn_indices(const Matrix& coords, int k) {
  const int n = static_cast<int>(coords.rows());
  if (n == 0) throw ArgumentError("knn on an empty point set");
  if (k < 1) throw ArgumentError("knn requires k >= 1");
  k = std::min(k, n);

  std::vector<std::vector<int>> out(static_cast<size_t>(n));
  std::vector<std::pair<double, int>> dist(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) dist[static_cast<size_t>(j)] = {sq_dist(coords, i, coords, j), j};
    std::partial_sort(dist.begin(), dist.begin() + k, dist.end());
    auto& nb = out[static_cast<size_t>(i)];
    nb.resize(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) nb[static_cast<size_t>(j)] = dist[static_cast<size_t>(j)].second;
  }
  return out;
}

Matrix knn_centers(const Matrix& coords, int k) {
  const auto nbrs = knn_indices(coords, k);
  const int n = static_cast<int>(coords.rows());
  Matrix centers(n, 3);
  for (int i = 0; i < n; ++i) {
    Eigen::RowVector3d acc = Eigen::RowVector3d::Zero();
    for (int j : nbrs[static_cast<size_t>(i)]) acc += coords.row(j);
    centers.row(i) = acc / static_cast<double>(nbrs[static_cast<size_t>(i)].size());
  }
  return centers;
}

std::vector<int> fps(const Matrix& coords, int m, int seed_index) {
  const int n = static_cast<int>(coords.rows());
  if (n == 0) throw ArgumentError("fps on an empty point set");
  if (m < 1 || m > n) throw ArgumentError("fps requires 1 <= m <= N");
  if (seed_index < 0 || seed_index >= n) throw ArgumentError("fps seed index out of range");

  std::vector<int> selected;
  selected.reserve(static_cast<size_t>(m));
  selected.push_back(seed_index);

  std::vector<double> min_d(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) min_d[static_cast<size_t>(j)] = sq_dist(coords, j, coords, seed_index);

  for (int step = 1; step < m; ++step) {
    int best = -1;
    double best_d = -1.0;
    for (int j = 0; j < n; ++j) {
      const double d = min_d[static_cast<size_t>(j)];
      if (d > best_d) {  // ties keep the lower index
        best_d = d;
        best = j;
      }
    }
    selected.push_back(best);
    for (int j = 0; j < n; ++j) {
      min_d[static_cast<size_t>(j)] = std::min(min_d[static_cast<size_t>(j)], sq_dist(coords, j, coords, best));
    }
  }
  return selected;
}

IdwPlan idw_plan(const Matrix& src_coords, const Matrix& query_coords, int k) {
  const int n = static_cast<int>(src_coords.rows());
  const int q = static_cast<int>(query_coords.rows());
  if (n == 0) throw ArgumentError("idw with an empty source set");
  if (k < 1) throw ArgumentError("idw requires k >= 1");
  k = std::min(k, n);

  constexpr double kEps = 1e-8;
  constexpr double kExact = 1e-12;

  IdwPlan plan;
  plan.pulls.resize(static_cast<size_t>(q));
  std::vector<std::pair<double, int>> dist(static_cast<size_t>(n));
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < n; ++j) dist[static_cast<size_t>(j)] = {sq_dist(query_coords, i, src_coords, j), j};
    std::partial_sort(dist.begin(), dist.begin() + k, dist.end());

    auto& pulls = plan.pulls[static_cast<size_t>(i)];
    if (std::sqrt(dist[0].first) < kExact) {
      pulls.push_back({dist[0].second, 1.0});
      continue;
    }
    double wsum = 0.0;
    pulls.reserve(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) {
      const double w = 1.0 / (dist[static_cast<size_t>(j)].first + kEps);
      pulls.push_back({dist[static_cast<size_t>(j)].second, w});
      wsum += w;
    }
    for (auto& p : pulls) p.second /= wsum;
  }
  return plan;
}

Matrix idw_apply(const IdwPlan& plan, const Matrix& src_features) {
  const int q = static_cast<int>(plan.pulls.size());
  Matrix out = Matrix::Zero(q, src_features.cols());
  for (int i = 0; i < q; ++i) {
    for (const auto& [idx, w] : plan.pulls[static_cast<size_t>(i)]) {
      out.row(i) += w * src_features.row(idx);
    }
  }
  return out;
}

Matrix idw_interpolate(const Matrix& src_coords, const Matrix& src_features,
                       const Matrix& query_coords, int k) {
  if (src_features.rows() != src_coords.rows()) {
    throw ContractError("idw source features and coordinates disagree on row count");
  }
  return idw_apply(idw_plan(src_coords, query_coords, k), src_features);
}

}  // namespace radardet::pointops
