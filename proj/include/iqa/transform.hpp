#pragma once

#include <vector>

#include "iqa/image.hpp"

namespace iqa {

/// One level of an orthonormal 2-D Haar analysis. For a 2x2 block
/// [[a, b], [c, d]]: LL = (a+b+c+d)/2, LH = (a-b+c-d)/2 (horizontal detail),
/// HL = (a+b-c-d)/2 (vertical detail), HH = (a-b-c+d)/2.
struct HaarLevel {
  Plane ll;
  Plane lh;
  Plane hl;
  Plane hh;
};

/// Decimated Haar DWT; level k+1 analyses level k's LL band. Odd trailing
/// rows/columns are dropped at each level (energy is conserved for inputs
/// whose sides are multiples of 2^levels).
std::vector<HaarLevel> haar_dwt(const Plane& plane, int levels);

/// Orthonormal DCT-II basis, row k = frequency k.
std::vector<double> dct_matrix(int size);

/// Blockwise orthonormal 2-D DCT-II over non-overlapping blocks; partial
/// border blocks are dropped.
struct BlockDct {
  int block = 8;
  int blocks_y = 0;
  int blocks_x = 0;
  /// Same layout as the (cropped) input: coefficient (m, n) of block (i, j)
  /// sits at (i * block + m, j * block + n).
  Plane coefficients;

  /// All (m, n) coefficients gathered into a blocks_y x blocks_x plane.
  Plane subband(int m, int n) const;
};

BlockDct dct2_blocks(const Plane& plane, int block = 8);

}  // namespace iqa
