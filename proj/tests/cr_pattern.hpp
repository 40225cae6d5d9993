#pragma once

// The BGG pattern for sl(4) with the first and last nodes crossed, written in
// the three-number node notation (x, y, z) used for the real form su(3,1).
// Converting a node to our label coordinates: (y - 2x, x, z).

#include "bgg/rootspace.hpp"

#include <array>
#include <vector>

namespace cr_pattern {

struct Arrow {
  int row, from, to;
  int order;  // -1 when the figure leaves it unlabeled
};

struct Pattern {
  std::vector<std::vector<bgg::Weight>> rows;  // labels in our coordinates
  std::vector<Arrow> arrows;
};

inline bgg::Weight node(int x, int y, int z) { return {y - 2 * x, x, z}; }

// Highest weight of the coefficient module in our fundamental coordinates.
inline bgg::Weight module_weight(int a, int b, int c) { return {c, b, a}; }

inline Pattern pattern(int a, int b, int c) {
  Pattern p;
  p.rows = {
      {node(b, a + 2 * b, c)},
      {node(b + c + 1, a + 2 * b + 2 * c + 2, -c - 2), node(a + b + 1, a + 2 * b, c)},
      {node(c, a + b + 2 * c + 1, -b - c - 3), node(a + b + c + 2, a + 2 * b + 2 * c + 2, -c - 2), node(a, a - b - 3, b + c + 1)},
      {node(c, b + 2 * c, -a - b - c - 4), node(a + b + c + 2, a + b + 2 * c + 1, -b - c - 3), node(a, a - b - c - 4, b)},
      {node(b + c + 1, b + 2 * c, -a - b - c - 4), node(a + b + 1, a + b - c - 2, -b - 2)},
      {node(b, b - c - 3, -a - b - 3)},
  };
  p.arrows = {
      {0, 0, 0, c + 1},         {0, 0, 1, a + 1},
      {1, 0, 0, b + 1},         {1, 0, 1, a + 1},         {1, 1, 1, c + 1}, {1, 1, 2, b + 1},
      {2, 0, 0, 2 * a + 2},     {2, 0, 1, a + b + 2},     {2, 1, 0, -1},    {2, 1, 1, 2 * b + 2},
      {2, 1, 2, b + c + 2},     {2, 2, 1, -1},            {2, 2, 2, 2 * c + 2},
      {3, 0, 0, b + 1},         {3, 1, 0, a + 1},         {3, 1, 1, c + 1}, {3, 2, 1, b + 1},
      {4, 0, 0, c + 1},         {4, 1, 0, a + 1},
  };
  return p;
}

}  // namespace cr_pattern
