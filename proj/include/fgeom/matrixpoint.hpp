// (n+1) x t matrices over F_q as points of the coset geometry.
#pragma once

#include <cstddef>

#include "fgeom/linalg.hpp"

namespace fgeom {

struct MatrixPoint {
  Matrix entries;

  friend bool operator==(const MatrixPoint&, const MatrixPoint&) = default;
  friend auto operator<=>(const MatrixPoint& a, const MatrixPoint& b) { return a.entries <=> b.entries; }
};

/// Row-major index with the first entry most significant; index order is
/// the row-major lexicographic matrix order.
std::size_t matrix_index(const Matrix& a, unsigned q);
Matrix matrix_from_index(std::size_t index, std::size_t rows, std::size_t cols, unsigned q);

}  // namespace fgeom
