#pragma once

#include <Eigen/Dense>
#include <vector>

namespace radardet::pointops {

using Matrix = Eigen::MatrixXd;

// Neighbor indices of every point: the k nearest by Euclidean distance,
// the point itself included, distance ties broken by lower index. k is
// clamped to N. Throws ArgumentError on an empty set.
std::vector<std::vector<int>> knn_indices(const Matrix& coords, int k);

// Centroid of each point's k-nearest neighborhood (self included), N x 3.
Matrix knn_centers(const Matrix& coords, int k);

// Greedy farthest point sampling. Starts at seed_index; every subsequent
// pick maximizes the minimum distance to the already selected set, ties by
// lower index. Returns m indices in selection order.
std::vector<int> fps(const Matrix& coords, int m, int seed_index);

// Inverse-squared-distance interpolation of source features onto query
// coordinates using the k nearest sources. A query closer than 1e-12 to a
// source returns that source's feature row exactly.
// Also exposes the (index, weight) pulls per query so callers can replay
// the same linear map elsewhere.
struct IdwPlan {
  // per query: up to k (source index, weight) pairs, weights sum to 1
  std::vector<std::vector<std::pair<int, double>>> pulls;
};

IdwPlan idw_plan(const Matrix& src_coords, const Matrix& query_coords, int k);
Matrix idw_interpolate(const Matrix& src_coords, const Matrix& src_features,
                       const Matrix& query_coords, int k);
Matrix idw_apply(const IdwPlan& plan, const Matrix& src_features);

}  // namespace radardet::pointops
