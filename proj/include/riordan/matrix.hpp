#ifndef RIORDAN_MATRIX_HPP
#define RIORDAN_MATRIX_HPP

#include <vector>

#include "riordan/pair.hpp"

namespace riordan {

/// Lower-triangular (n+1)x(n+1) realization d[i][j] = [t^i] g*f^j.
struct Matrix {
  RingSpec ring;
  std::vector<std::vector<Int>> rows;  // rows[i][j], zero above diagonal

  std::size_t size() const { return rows.size(); }
  bool operator==(const Matrix&) const = default;
};

Matrix to_matrix(const Pair& p);

Matrix matmul(const Matrix& a, const Matrix& b);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace riordan

#endif
