#pragma once

#include <vector>

#include "cgflow/grid.hpp"

namespace cgflow {

using Polyline = std::vector<Vec2>;

// Marching-squares extraction of {G = level} with linear interpolation along
// cell edges. Only the stored cells are contoured (no wrap-around cells), so
// non-periodic fields such as affine data produce no seam artifacts; fronts
// are expected to sit away from the domain boundary. Segments are chained
// into polylines; a closed polyline repeats its first vertex at the end.
// Returns an empty list if the level is not crossed.
std::vector<Polyline> extract_front(const Grid2& g, double level);

// Symmetric Hausdorff distance between two vertex sets under the torus
// metric; used to measure front displacement.
double hausdorff_distance(const std::vector<Polyline>& a,
                          const std::vector<Polyline>& b);

// Convenience: all vertices of all polylines.
std::vector<Vec2> vertices_of(const std::vector<Polyline>& ps);

}  // namespace cgflow
