#pragma once

// paths shared by the unit tests and the acceptance run

#include <vector>

#include "nilcomplex/complex.hpp"

namespace nilcomplex::scenarios {

struct HalfPerimeters {
  std::vector<VertexId> top_right;    // UL along the top side, then down the right side
  std::vector<VertexId> left_bottom;  // UL down the left side, then along the bottom side
};

// the two boundary paths between opposite corners of the level-2 root tile
inline HalfPerimeters half_perimeters(const Complex& c) {
  const Tile& R = c.tile(c.planes()[0].root);
  return {{R.corner(Corner::UL), R.mid(Side::Top), R.corner(Corner::UR), R.mid(Side::Right), R.corner(Corner::DR)},
          {R.corner(Corner::UL), R.mid(Side::Left), R.corner(Corner::DL), R.mid(Side::Bottom), R.corner(Corner::DR)}};
}

// level 2: from UL down the left side, across the tile through C and B, out at the right midpoint
inline std::vector<VertexId> detour_level2(const Complex& c) {
  const Tile& R = c.tile(c.planes()[0].root);
  return {R.corner(Corner::UL), R.mid(Side::Left), R.corner(Corner::DL), R.c, R.b, R.mid(Side::Right)};
}

// level n: along the boundary from UL down the left side, across the bottom and up to the right midpoint
inline std::vector<VertexId> detour_boundary(const Complex& c) {
  const Tile& R = c.tile(c.planes()[0].root);
  std::vector<VertexId> path{R.corner(Corner::UL)};
  auto walk = [&](VertexId target) {
    const std::vector<int> d = c.bfs(target);
    while (path.back() != target) {
      const VertexId cur = path.back();
      VertexId next = kNone;
      for (EdgeId e : c.incident(cur)) {
        const VertexId o = c.other(e, cur);
        if (c.line(c.edge(e).line).index != 0 || !c.on_plane_boundary(0, o)) continue;
        if (d[o] < d[cur]) next = o;
      }
      if (next == kNone) throw Error("boundary walk is stuck");
      path.push_back(next);
    }
  };
  walk(R.corner(Corner::DL));
  walk(R.corner(Corner::DR));
  walk(R.mid(Side::Right));
  return path;
}

// the boundary cycle of one leaf face, starting and ending at its UL corner
inline std::vector<VertexId> face_cycle(const Complex& c, TileId t) {
  const Tile& T = c.tile(t);
  return {T.corner(Corner::UL), T.corner(Corner::UR), T.corner(Corner::DR), T.corner(Corner::DL), T.corner(Corner::UL)};
}

}  // namespace nilcomplex::scenarios
