#pragma once

#include <array>

#include "cgflow/flow.hpp"
#include "cgflow/geometry.hpp"

namespace cgflow {

// Landmarks of the cell geometry on [-pi, pi]^2.
inline constexpr Vec2 kCellCenter{kPi / 2, kPi / 2};  // P0, max of H on Q

// The four cells U_i = U_1 + q_i with U_1 = (0,pi)^2.
inline constexpr std::array<Vec2, 4> kCellOffsets = {
    Vec2{0.0, 0.0}, Vec2{-kPi, 0.0}, Vec2{0.0, -kPi}, Vec2{-kPi, -kPi}};

// Corners of the closed cell Q = [0,pi]^2.
inline constexpr std::array<Vec2, 4> kCellCorners = {
    Vec2{0.0, 0.0}, Vec2{kPi, 0.0}, Vec2{kPi, kPi}, Vec2{0.0, kPi}};

// Region predicates used by the reachability machinery. Membership follows
// the defining inequalities verbatim:
//   CellInterior    Q_mu  = {x in [0,pi]^2 : H(x) > mu}
//   BoundaryStrip   Gamma_mu, coordinate distance to the separatrix < mu
//                   (periodic extension of min{|x1|,|x2|,|x1-pi|,|x2-pi|} < mu)
//   Cross           Z_theta = ((theta,pi-theta)x[0,pi]) u ([0,pi]x(theta,pi-theta))
//   CornerBox       D_mu = [-mu,mu]^2
//   TranslatedCell  U_i = (0,pi)^2 + q_i, parameter selects i in {1..4}
struct CellRegion {
  enum class Kind { CellInterior, BoundaryStrip, Cross, CornerBox, TranslatedCell };

  Kind kind;
  double parameter = 0.0;

  static CellRegion cell_interior(double mu) { return {Kind::CellInterior, mu}; }
  static CellRegion boundary_strip(double mu) { return {Kind::BoundaryStrip, mu}; }
  static CellRegion cross(double theta) { return {Kind::Cross, theta}; }
  static CellRegion corner_box(double mu) { return {Kind::CornerBox, mu}; }
  static CellRegion translated_cell(int i) {
    return {Kind::TranslatedCell, static_cast<double>(i)};
  }

  bool contains(Vec2 x) const {
    switch (kind) {
      case Kind::CellInterior:
        return x.x >= 0.0 && x.x <= kPi && x.y >= 0.0 && x.y <= kPi &&
               stream(x) > parameter;
      case Kind::BoundaryStrip:
        return separatrix_distance(x) < parameter;
      case Kind::Cross: {
        const double t = parameter;
        const bool in_q =
            x.x >= 0.0 && x.x <= kPi && x.y >= 0.0 && x.y <= kPi;
        return in_q && ((x.x > t && x.x < kPi - t) || (x.y > t && x.y < kPi - t));
      }
      case Kind::CornerBox:
        return std::abs(x.x) <= parameter && std::abs(x.y) <= parameter;
      case Kind::TranslatedCell: {
        const Vec2 q = kCellOffsets[static_cast<int>(parameter) - 1];
        const Vec2 r = x - q;
        return r.x > 0.0 && r.x < kPi && r.y > 0.0 && r.y < kPi;
      }
    }
    return false;
  }
};

}  // namespace cgflow
