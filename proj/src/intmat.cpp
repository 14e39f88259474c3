#include "gbg/intmat.hpp"

#include <algorithm>
#include <cstdlib>

namespace gbg {

long long checked_add(long long x, long long y) {
  long long r;
  if (__builtin_add_overflow(x, y, &r)) fail(Errc::Overflow, "integer add overflow");
  return r;
}

long long checked_mul(long long x, long long y) {
  long long r;
  if (__builtin_mul_overflow(x, y, &r)) fail(Errc::Overflow, "integer mul overflow");
  return r;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
  if (cols != o.rows) fail(Errc::BadInput, "matrix size mismatch");
  IntMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      long long x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols; ++j)
        if (o.at(k, j) != 0) r.at(i, j) = checked_add(r.at(i, j), checked_mul(x, o.at(k, j)));
    }
  return r;
}

bool IntMatrix::is_zero() const {
  for (long long x : a)
    if (x) return false;
  return true;
}

namespace {

struct SnfWork {
  IntMatrix m, u, v;
  bool with_transforms;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
    if (with_transforms)
      for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
    if (with_transforms)
      for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  void add_row(int dst, int src, long long f) {  // row dst += f*row src
    if (f == 0) return;
    for (int c = 0; c < m.cols; ++c)
      m.at(dst, c) = checked_add(m.at(dst, c), checked_mul(f, m.at(src, c)));
    if (with_transforms)
      for (int c = 0; c < u.cols; ++c)
        u.at(dst, c) = checked_add(u.at(dst, c), checked_mul(f, u.at(src, c)));
  }
  void add_col(int dst, int src, long long f) {
    if (f == 0) return;
    for (int r = 0; r < m.rows; ++r)
      m.at(r, dst) = checked_add(m.at(r, dst), checked_mul(f, m.at(r, src)));
    if (with_transforms)
      for (int r = 0; r < v.rows; ++r)
        v.at(r, dst) = checked_add(v.at(r, dst), checked_mul(f, v.at(r, src)));
  }
  void negate_row(int i) {
    for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
    if (with_transforms)
      for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& a, bool with_transforms) {
  SnfWork w{a, IntMatrix::identity(a.rows), IntMatrix::identity(a.cols), with_transforms};
  int t = 0;
  int lim = std::min(a.rows, a.cols);
  while (t < lim) {
    // Pivot: minimal absolute value in the working block.
    int pi = -1, pj = -1;
    long long best = 0;
    for (int i = t; i < a.rows; ++i)
      for (int j = t; j < a.cols; ++j) {
        long long x = w.m.at(i, j);
        if (x == 0) continue;
        if (pi < 0 || std::llabs(x) < best) {
          best = std::llabs(x);
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);
    bool clean = true;
    for (int i = t + 1; i < a.rows; ++i) {
      long long q = w.m.at(i, t) / w.m.at(t, t);
      w.add_row(i, t, -q);
      if (w.m.at(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < a.cols; ++j) {
      long long q = w.m.at(t, j) / w.m.at(t, t);
      w.add_col(j, t, -q);
      if (w.m.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders exist; re-pivot
    // Divisibility: fold any non-multiple into column t and redo.
    bool divides = true;
    for (int i = t + 1; i < a.rows && divides; ++i)
      for (int j = t + 1; j < a.cols && divides; ++j)
        if (w.m.at(i, j) % w.m.at(t, t) != 0) {
          w.add_row(t, i, 1);
          divides = false;
        }
    if (!divides) continue;
    if (w.m.at(t, t) < 0) w.negate_row(t);
    ++t;
  }
  SmithResult out;
  out.s = w.m;
  out.rank = t;
  for (int i = 0; i < t; ++i) out.diagonal.push_back(w.m.at(i, i));
  if (with_transforms) {
    out.u = w.u;
    out.v = w.v;
  }
  return out;
}

namespace {

// Invariant factors via sparse elimination with unit pivots; the leftover
// block without units goes through the dense routine. Unimodular ops only.
std::vector<long long> snf_diagonal_sparse(const IntMatrix& a) {
  int R = a.rows, C = a.cols;
  std::vector<std::vector<std::pair<int, long long>>> rows(R);
  std::vector<std::vector<int>> col_rows(C);
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < C; ++j)
      if (a.at(i, j) != 0) rows[i].push_back({j, a.at(i, j)});

  auto rebuild_cols = [&]() {
    for (auto& c : col_rows) c.clear();
    for (int i = 0; i < R; ++i)
      for (auto& [j, v] : rows[i]) col_rows[j].push_back(i);
  };
  auto get = [&](int i, int j) -> long long {
    for (auto& [jj, v] : rows[i])
      if (jj == j) return v;
    return 0;
  };
  std::vector<char> row_done(R, 0), col_done(C, 0);
  int units = 0;
  while (true) {
    rebuild_cols();
    int pi = -1, pj = -1;
    long long best_cost = -1;
    for (int i = 0; i < R; ++i) {
      if (row_done[i]) continue;
      for (auto& [j, v] : rows[i]) {
        if (col_done[j] || (v != 1 && v != -1)) continue;
        long long cost = static_cast<long long>(rows[i].size() - 1) *
                         (static_cast<long long>(col_rows[j].size()) - 1);
        if (best_cost < 0 || cost < best_cost) {
          best_cost = cost;
          pi = i;
          pj = j;
          if (cost == 0) break;
        }
      }
      if (best_cost == 0) break;
    }
    if (pi < 0) break;
    long long pv = get(pi, pj);
    for (int i : col_rows[pj]) {
      if (i == pi || row_done[i]) continue;
      long long f = -get(i, pj) * pv;  // pv is +-1
      // row i += f * row pi
      std::vector<std::pair<int, long long>> merged;
      size_t x = 0, y = 0;
      auto& ra = rows[i];
      auto& rb = rows[pi];
      std::sort(ra.begin(), ra.end());
      std::sort(rb.begin(), rb.end());
      while (x < ra.size() || y < rb.size()) {
        if (y == rb.size() || (x < ra.size() && ra[x].first < rb[y].first)) {
          merged.push_back(ra[x++]);
        } else if (x == ra.size() || rb[y].first < ra[x].first) {
          merged.push_back({rb[y].first, checked_mul(f, rb[y].second)});
          ++y;
        } else {
          long long s = checked_add(ra[x].second, checked_mul(f, rb[y].second));
          if (s != 0) merged.push_back({ra[x].first, s});
          ++x;
          ++y;
        }
      }
      rows[i] = std::move(merged);
    }
    row_done[pi] = 1;
    col_done[pj] = 1;
    rows[pi].clear();
    ++units;
  }
  // Dense tail.
  std::vector<int> rmap, cmap;
  for (int i = 0; i < R; ++i)
    if (!row_done[i] && !rows[i].empty()) rmap.push_back(i);
  std::vector<char> col_used(C, 0);
  for (int i : rmap)
    for (auto& [j, v] : rows[i]) col_used[j] = 1;
  for (int j = 0; j < C; ++j)
    if (col_used[j]) cmap.push_back(j);
  std::vector<long long> diag(units, 1);
  if (!rmap.empty()) {
    IntMatrix tail(static_cast<int>(rmap.size()), static_cast<int>(cmap.size()));
    for (size_t i = 0; i < rmap.size(); ++i)
      for (auto& [j, v] : rows[rmap[i]]) {
        int jj = static_cast<int>(std::lower_bound(cmap.begin(), cmap.end(), j) - cmap.begin());
        tail.at(static_cast<int>(i), jj) = v;
      }
    SmithResult tail_snf = smith_normal_form(tail, false);
    for (long long x : tail_snf.diagonal) diag.push_back(x);
  }
  std::sort(diag.begin(), diag.end());
  return diag;
}

}  // namespace

int rank_of(const IntMatrix& a) {
  if (static_cast<long long>(a.rows) * a.cols > 90'000)
    return static_cast<int>(snf_diagonal_sparse(a).size());
  return smith_normal_form(a, false).rank;
}

HomologySummary homology(const IntMatrix& d_k, const IntMatrix& d_k1, int dimension) {
  if (d_k.cols != d_k1.rows) fail(Errc::BadInput, "boundary matrices do not compose");
  if (!d_k.mul(d_k1).is_zero()) fail(Errc::NotAChainComplex, "d_k * d_k1 != 0");
  std::vector<long long> high = snf_diagonal_sparse(d_k1);
  HomologySummary out;
  out.dimension = dimension;
  out.betti = d_k.cols - rank_of(d_k) - static_cast<int>(high.size());
  for (long long x : high)
    if (x > 1) out.torsion.push_back(x);
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

}  // namespace gbg
