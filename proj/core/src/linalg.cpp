#include "quadriline/linalg.hpp"

namespace quadriline {

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Scalar inv = m[r][c].inverse();
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Scalar k = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= k * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<Vector> nullspace(Matrix m, std::size_t cols, const Field& field) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, field.zero());
    v[free] = field.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

}  // namespace quadriline
