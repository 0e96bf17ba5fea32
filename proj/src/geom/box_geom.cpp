#include "radardet/geom/box_geom.hpp"

#include <algorithm>
#include <cmath>

namespace radardet::geom {

std::array<Vec2, 4> bev_corners(const Box3D& b) {
  const double c = std::cos(b.yaw);
  const double s = std::sin(b.yaw);
  const double hl = 0.5 * b.l;
  const double hw = 0.5 * b.w;
  // Local corners CCW: (+l,+w), (-l,+w), (-l,-w), (+l,-w).
  const double lx[4] = {hl, -hl, -hl, hl};
  const double ly[4] = {hw, hw, -hw, -hw};
  std::array<Vec2, 4> out;
  for (int i = 0; i < 4; ++i) {
    out[i].x = b.cx + c * lx[i] - s * ly[i];
    out[i].y = b.cy + s * lx[i] + c * ly[i];
  }
  return out;
}

bool point_in_box(double x, double y, double z, const Box3D& b) {
  if (std::abs(z - b.cz) > 0.5 * b.h) return false;
  const double dx = x - b.cx;
  const double dy = y - b.cy;
  const double c = std::cos(b.yaw);
  const double s = std::sin(b.yaw);
  const double local_x = c * dx + s * dy;   // along heading
  const double local_y = -s * dx + c * dy;  // across
  return std::abs(local_x) <= 0.5 * b.l && std::abs(local_y) <= 0.5 * b.w;
}

double polygon_area(const std::vector<Vec2>& poly) {
  const int n = static_cast<int>(poly.size());
  if (n < 3) return 0.0;
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vec2& p = poly[i];
    const Vec2& q = poly[(i + 1) % n];
    acc += p.x * q.y - q.x * p.y;
  }
  return 0.5 * std::abs(acc);
}

namespace {

// Signed distance of p to the clip edge (a -> b); >= 0 means inside for a
// CCW clip polygon.
inline double edge_side(const Vec2& a, const Vec2& b, const Vec2& p) {
  return (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
}

inline Vec2 segment_intersection(const Vec2& p1, const Vec2& p2, const Vec2& a, const Vec2& b) {
  const double x1 = p1.x, y1 = p1.y, x2 = p2.x, y2 = p2.y;
  const double x3 = a.x, y3 = a.y, x4 = b.x, y4 = b.y;
  const double den = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4);
  // Caller only asks for intersections of edges that straddle the clip
  // line, so den is nonzero up to roundoff.
  const double t = ((x1 - x3) * (y3 - y4) - (y1 - y3) * (x3 - x4)) / den;
  return Vec2{x1 + t * (x2 - x1), y1 + t * (y2 - y1)};
}

}  // namespace

std::vector<Vec2> clip_convex(const std::vector<Vec2>& subject, const std::vector<Vec2>& clip) {
  std::vector<Vec2> output = subject;
  const int m = static_cast<int>(clip.size());
  for (int i = 0; i < m && !output.empty(); ++i) {
    const Vec2& a = clip[i];
    const Vec2& b = clip[(i + 1) % m];
    std::vector<Vec2> input;
    input.swap(output);
    const int n = static_cast<int>(input.size());
    for (int j = 0; j < n; ++j) {
      const Vec2& cur = input[j];
      const Vec2& prev = input[(j + n - 1) % n];
      const double side_cur = edge_side(a, b, cur);
      const double side_prev = edge_side(a, b, prev);
      if (side_cur >= 0.0) {
        if (side_prev < 0.0) output.push_back(segment_intersection(prev, cur, a, b));
        output.push_back(cur);
      } else if (side_prev >= 0.0) {
        output.push_back(segment_intersection(prev, cur, a, b));
      }
    }
  }
  return output;
}

double bev_intersection_area(const Box3D& a, const Box3D& b) {
  const auto ca = bev_corners(a);
  const auto cb = bev_corners(b);
  const std::vector<Vec2> pa(ca.begin(), ca.end());
  const std::vector<Vec2> pb(cb.begin(), cb.end());
  return polygon_area(clip_convex(pa, pb));
}

double rotated_iou(const Box3D& a, const Box3D& b, IouMode mode) {
  const double area_a = a.l * a.w;
  const double area_b = b.l * b.w;
  if (mode == IouMode::kBev) {
    if (area_a <= 0.0 || area_b <= 0.0) return 0.0;
    const double inter = bev_intersection_area(a, b);
    const double uni = area_a + area_b - inter;
    if (uni <= 0.0) return 0.0;
    return std::clamp(inter / uni, 0.0, 1.0);
  }
  const double vol_a = area_a * a.h;
  const double vol_b = area_b * b.h;
  if (vol_a <= 0.0 || vol_b <= 0.0) return 0.0;
  const double z_lo = std::max(a.cz - 0.5 * a.h, b.cz - 0.5 * b.h);
  const double z_hi = std::min(a.cz + 0.5 * a.h, b.cz + 0.5 * b.h);
  const double z_overlap = std::max(0.0, z_hi - z_lo);
  const double inter = bev_intersection_area(a, b) * z_overlap;
  const double uni = vol_a + vol_b - inter;
  if (uni <= 0.0) return 0.0;
  return std::clamp(inter / uni, 0.0, 1.0);
}

}  // namespace radardet::geom
