#include "gbg/gf2.hpp"

namespace gbg {

int gf2_rank(GF2Matrix m) {
  int r = 0;
  for (int j = 0; j < m.cols && r < m.rows; ++j) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.get(i, j)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int k = 0; k < m.words; ++k)
      std::swap(m.bits[static_cast<size_t>(piv) * m.words + k],
                m.bits[static_cast<size_t>(r) * m.words + k]);
    for (int i = 0; i < m.rows; ++i)
      if (i != r && m.get(i, j)) m.xor_row(i, r);
    ++r;
  }
  return r;
}

std::optional<std::vector<char>> gf2_try_solve(const GF2Matrix& m, const std::vector<char>& b) {
  if (static_cast<int>(b.size()) != m.rows) fail(Errc::BadInput, "rhs size mismatch");
  // Augmented elimination.
  GF2Matrix w(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int k = 0; k < m.words; ++k)
      w.bits[static_cast<size_t>(i) * w.words + k] = m.bits[static_cast<size_t>(i) * m.words + k];
    // The copy above may spill into the augmented column's word; rewrite it.
    for (int j = m.cols; j < w.cols; ++j) w.set(i, j, false);
    w.set(i, m.cols, b[i] != 0);
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int j = 0; j < m.cols && r < m.rows; ++j) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (w.get(i, j)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int k = 0; k < w.words; ++k)
      std::swap(w.bits[static_cast<size_t>(piv) * w.words + k],
                w.bits[static_cast<size_t>(r) * w.words + k]);
    for (int i = 0; i < m.rows; ++i)
      if (i != r && w.get(i, j)) w.xor_row(i, r);
    pivot_col.push_back(j);
    ++r;
  }
  for (int i = r; i < m.rows; ++i)
    if (w.get(i, m.cols)) return std::nullopt;
  std::vector<char> x(m.cols, 0);
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = w.get(i, m.cols) ? 1 : 0;
  return x;
}

std::vector<char> gf2_solve(const GF2Matrix& m, const std::vector<char>& b) {
  auto x = gf2_try_solve(m, b);
  if (!x) fail(Errc::NoSolution, "inconsistent GF(2) system");
  return *x;
}

std::vector<std::vector<char>> gf2_nullspace(const GF2Matrix& m_in) {
  GF2Matrix m = m_in;
  std::vector<int> pivot_col;
  std::vector<char> is_pivot(m.cols, 0);
  int r = 0;
  for (int j = 0; j < m.cols && r < m.rows; ++j) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.get(i, j)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int k = 0; k < m.words; ++k)
      std::swap(m.bits[static_cast<size_t>(piv) * m.words + k],
                m.bits[static_cast<size_t>(r) * m.words + k]);
    for (int i = 0; i < m.rows; ++i)
      if (i != r && m.get(i, j)) m.xor_row(i, r);
    pivot_col.push_back(j);
    is_pivot[j] = 1;
    ++r;
  }
  std::vector<std::vector<char>> basis;
  for (int j = 0; j < m.cols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<char> x(m.cols, 0);
    x[j] = 1;
    for (int i = 0; i < r; ++i)
      if (m.get(i, j)) x[pivot_col[i]] = 1;
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace gbg
