// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <stdexcept>

namespace tdsnn {

enum class Boundary { open, toroidal };

/// 2-D neuron grid. Connections exist only between 4-neighbors (up, down,
/// left, right); with an open boundary edge neurons have 2-3 neighbors.
struct GridTopology {
  int rows = 10;
  int cols = 10;
  Boundary boundary = Boundary::open;

  int size() const { return rows * cols; }
  int index(int r, int c) const { return r * cols + c; }

  void validate() const {
    if (rows < 1 || cols < 1)
      throw std::invalid_argument("grid dimensions must be positive");
  }

  /// Neighbor indices in fixed (up, down, left, right) order, -1 if absent.
  std::array<int, 4> neighbors(int idx) const {
    const int r = idx / cols;
    const int c = idx % cols;
    std::array<int, 4> out{-1, -1, -1, -1};
    if (boundary == Boundary::toroidal) {
      out[0] = index((r + rows - 1) % rows, c);
      out[1] = index((r + 1) % rows, c);
      out[2] = index(r, (c + cols - 1) % cols);
      out[3] = index(r, (c + 1) % cols);
      // A 1-wide dimension would alias a neighbor onto the neuron itself.
      if (rows == 1) out[0] = out[1] = -1;
      if (cols == 1) out[2] = out[3] = -1;
      if (rows == 2) out[1] = -1;  // up and down collapse to the same cell
      if (cols == 2) out[3] = -1;
    } else {
      if (r > 0) out[0] = index(r - 1, c);
      if (r < rows - 1) out[1] = index(r + 1, c);
      if (c > 0) out[2] = index(r, c - 1);
      if (c < cols - 1) out[3] = index(r, c + 1);
    }
    return out;
  }
};

}  // namespace tdsnn
