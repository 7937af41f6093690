#include "cgflow/contour.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>

namespace cgflow {

namespace {

struct Segment {
  Vec2 a, b;
};

// Quantized endpoint key for chaining segments into polylines.
std::uint64_t key_of(Vec2 p, double scale) {
  const auto qx = static_cast<std::int64_t>(std::llround(p.x * scale));
  const auto qy = static_cast<std::int64_t>(std::llround(p.y * scale));
  return (static_cast<std::uint64_t>(qx) << 32) ^
         (static_cast<std::uint64_t>(qy) & 0xffffffffull);
}

}  // namespace

std::vector<Polyline> extract_front(const Grid2& g, double level) {
  std::vector<Segment> segs;
  const double h1 = g.h1(), h2 = g.h2();

  for (int j = 0; j + 1 < g.n2(); ++j) {
    const int jp = j + 1;
    const double y0 = g.x2(j), y1 = y0 + h2;
    for (int i = 0; i + 1 < g.n1(); ++i) {
      const int ip = i + 1;
      const double x0 = g.x1(i), x1 = x0 + h1;

      const double f00 = g.raw(i, j) - level;
      const double f10 = g.raw(ip, j) - level;
      const double f01 = g.raw(i, jp) - level;
      const double f11 = g.raw(ip, jp) - level;

      const int c = (f00 >= 0) | ((f10 >= 0) << 1) | ((f11 >= 0) << 2) |
                    ((f01 >= 0) << 3);
      if (c == 0 || c == 15) continue;

      // Edge crossings by linear interpolation.
      auto bottom = [&] { return Vec2{x0 + h1 * f00 / (f00 - f10), y0}; };
      auto top = [&] { return Vec2{x0 + h1 * f01 / (f01 - f11), y1}; };
      auto left = [&] { return Vec2{x0, y0 + h2 * f00 / (f00 - f01)}; };
      auto right = [&] { return Vec2{x1, y0 + h2 * f10 / (f10 - f11)}; };

      switch (c) {
        case 1: case 14: segs.push_back({left(), bottom()}); break;
        case 2: case 13: segs.push_back({bottom(), right()}); break;
        case 4: case 11: segs.push_back({right(), top()}); break;
        case 8: case 7:  segs.push_back({top(), left()}); break;
        case 3: case 12: segs.push_back({left(), right()}); break;
        case 6: case 9:  segs.push_back({bottom(), top()}); break;
        case 5: case 10: {
          // Saddle; disambiguate with the cell-center average.
          const double fc = 0.25 * (f00 + f10 + f01 + f11);
          const bool join = (c == 5) == (fc >= 0);
          if (join) {
            segs.push_back({left(), bottom()});
            segs.push_back({right(), top()});
          } else {
            segs.push_back({left(), top()});
            segs.push_back({right(), bottom()});
          }
          break;
        }
      }
    }
  }

  // Chain segments into polylines by matching quantized endpoints.
  const double scale = 1.0 / (1e-9 * std::min(h1, h2));
  std::unordered_multimap<std::uint64_t, int> by_end;
  by_end.reserve(segs.size() * 2);
  for (int k = 0; k < static_cast<int>(segs.size()); ++k) {
    by_end.emplace(key_of(segs[k].a, scale), k);
    by_end.emplace(key_of(segs[k].b, scale), k);
  }

  std::vector<bool> used(segs.size(), false);
  std::vector<Polyline> out;

  auto next_unused_at = [&](Vec2 p, int exclude) -> int {
    auto [lo, hi] = by_end.equal_range(key_of(p, scale));
    for (auto it = lo; it != hi; ++it)
      if (!used[it->second] && it->second != exclude) return it->second;
    return -1;
  };

  for (int k0 = 0; k0 < static_cast<int>(segs.size()); ++k0) {
    if (used[k0]) continue;
    Polyline line{segs[k0].a, segs[k0].b};
    used[k0] = true;
    // Extend forward from the back, then backward from the front.
    for (int pass = 0; pass < 2; ++pass) {
      for (;;) {
        const Vec2 tip = line.back();
        const int k = next_unused_at(tip, -1);
        if (k < 0) break;
        used[k] = true;
        const bool from_a = key_of(segs[k].a, scale) == key_of(tip, scale);
        line.push_back(from_a ? segs[k].b : segs[k].a);
      }
      std::reverse(line.begin(), line.end());
    }
    out.push_back(std::move(line));
  }
  return out;
}

std::vector<Vec2> vertices_of(const std::vector<Polyline>& ps) {
  std::vector<Vec2> v;
  for (const auto& p : ps) v.insert(v.end(), p.begin(), p.end());
  return v;
}

double hausdorff_distance(const std::vector<Polyline>& a,
                          const std::vector<Polyline>& b) {
  const auto va = vertices_of(a);
  const auto vb = vertices_of(b);
  if (va.empty() || vb.empty())
    return va.empty() && vb.empty() ? 0.0
                                    : std::numeric_limits<double>::infinity();
  auto one_sided = [](const std::vector<Vec2>& p, const std::vector<Vec2>& q) {
    double worst = 0.0;
    for (Vec2 x : p) {
      double best = std::numeric_limits<double>::infinity();
      for (Vec2 y : q) best = std::min(best, torus_distance(x, y));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_sided(va, vb), one_sided(vb, va));
}

}  // namespace cgflow
