#pragma once

#include <array>
#include <vector>

#include "radardet/core/types.hpp"

namespace radardet::geom {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

// BEV corners of the box footprint, counter-clockwise.
std::array<Vec2, 4> bev_corners(const Box3D& b);

// True iff (x, y, z) lies inside the box, boundaries inclusive.
bool point_in_box(double x, double y, double z, const Box3D& b);

// Area of a convex polygon given in order (shoelace, absolute value).
double polygon_area(const std::vector<Vec2>& poly);

// Intersection of two convex polygons via Sutherland-Hodgman clipping.
std::vector<Vec2> clip_convex(const std::vector<Vec2>& subject, const std::vector<Vec2>& clip);

// Overlap area of the two rotated BEV footprints.
double bev_intersection_area(const Box3D& a, const Box3D& b);

enum class IouMode { kBev, k3d };

// Rotated IoU between two boxes. BEV mode uses footprint areas; 3D mode
// multiplies the footprint overlap by the z-extent overlap and divides by
// the volume union. Degenerate (zero-area) boxes give 0.
double rotated_iou(const Box3D& a, const Box3D& b, IouMode mode);

}  // namespace radardet::geom
