#pragma once

#include <cstddef>
#include <vector>

#include "core/raster.hpp"

namespace roadvec {

struct ComponentLabeling {
  int width = 0;
  int height = 0;
  std::vector<std::int32_t> labels;   // 0 = background, 1..K component ids
  std::vector<std::size_t> counts;    // counts[k-1] = size of component k
  int componentCount() const { return static_cast<int>(counts.size()); }
};

// Throws DataError unless the raster is a single band of {0,1} values.
void requireBinaryMask(const ByteRaster& mask, const char* who);

ComponentLabeling connectedComponents(const ByteRaster& mask, int connectivity = 8);

ByteRaster removeSmallComponents(const ByteRaster& mask, std::size_t minArea = 100);

// 3x3 uniform structuring element. Dilation reads pixels outside the raster
// as background and erosion reads them as foreground; with this adjoint pair
// closeMask stays extensive and idempotent at the sheet edge (background on
// both sides would let the erosion eat foreground in the corners).
ByteRaster dilate3x3(const ByteRaster& mask);
ByteRaster erode3x3(const ByteRaster& mask);
ByteRaster closeMask(const ByteRaster& mask);

// Thins foreground to 1-px-wide lines: iterative directional removal of
// simple pixels (preserving endpoints), then removal of simple pixels inside
// residual 2x2 blocks. Deletion-only and topology-preserving, so the result
// is a subset of the input with the same 8-connected component count. A 2x2
// block whose four pixels each anchor a separate diagonal arm cannot be
// thinned without splitting the component and is left as is.
ByteRaster skeletonize(const ByteRaster& mask);

// True if any 2x2 all-foreground block exists (skeleton thinness check).
bool hasFullSquareBlock(const ByteRaster& mask);

}  // namespace roadvec
