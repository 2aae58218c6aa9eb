#include "riordan/matrix.hpp"

namespace riordan {

Matrix to_matrix(const Pair& p) {
  const std::size_t n = p.order();
  Matrix m{p.ring(), std::vector<std::vector<Int>>(n + 1, std::vector<Int>(n + 1))};
  TruncatedSeries col = p.g();
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t i = 0; i <= n; ++i) m.rows[i][j] = col.coeff(i);
    if (j < n) col = col * p.f();
  }
  return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (!(a.ring == b.ring) || a.size() != b.size())
    throw std::invalid_argument("ring/order mismatch");
  const std::size_t n = a.size();
  Matrix m{a.ring, std::vector<std::vector<Int>>(n, std::vector<Int>(n))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a.rows[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b.rows[k][j] == 0) continue;
        m.rows[i][j] = a.ring.reduce(m.rows[i][j] + a.rows[i][k] * b.rows[k][j]);
      }
    }
  return m;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  for (const auto& row : m.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << "\n";
  }
  return os;
}

}  // namespace riordan
