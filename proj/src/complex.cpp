#include "gbg/complex.hpp"

#include <algorithm>
#include <climits>

namespace gbg {

namespace {

// Closure occupancy of a cell as a flat vector.
std::vector<char> occupancy(const EmbeddedTree& t, const Cell& c) {
  std::vector<char> occ(t.vertex_count(), 0);
  for (int e : c.edges) occ[t.tau(e)] = occ[t.iota(e)] = 1;
  for (int v : c.verts) occ[v] = 1;
  return occ;
}

}  // namespace

bool is_blocked(const EmbeddedTree& t, const Cell& c, int v) {
  bool present = std::binary_search(c.verts.begin(), c.verts.end(), v);
  if (!present) fail(Errc::VertexNotInCell, "vertex " + std::to_string(v));
  if (v == 0) return true;
  int p = t.parent[v];
  for (int e : c.edges)
    if (t.tau(e) == p || t.iota(e) == p) return true;
  return std::binary_search(c.verts.begin(), c.verts.end(), p);
}

bool is_order_respecting(const EmbeddedTree& t, const Cell& c, int e) {
  if (std::find(c.edges.begin(), c.edges.end(), e) == c.edges.end())
    fail(Errc::EdgeNotInCell, "edge " + std::to_string(e));
  if (t.is_deleted(e)) return false;
  int lo = t.tau(e), hi = t.iota(e);
  for (int v : c.verts)
    if (v > lo && v < hi && t.graph.adjacent(lo, v)) return false;
  return true;
}

CellClass classify(const EmbeddedTree& t, const Cell& c) {
  int min_or_iota = INT_MAX;
  for (int e : c.edges)
    if (is_order_respecting(t, c, e)) min_or_iota = std::min(min_or_iota, t.iota(e));
  int min_unblocked = INT_MAX;
  for (int v : c.verts)
    if (!is_blocked(t, c, v)) {
      min_unblocked = v;
      break;
    }
  CellClass out;
  if (min_unblocked < min_or_iota) {
    out.tag = CellClass::Redundant;
    out.smallest_unblocked = min_unblocked;
  } else if (min_or_iota != INT_MAX) {
    out.tag = CellClass::Collapsible;
  } else {
    out.tag = CellClass::Critical;
  }
  return out;
}

std::optional<Cell> matching_W(const EmbeddedTree& t, const Cell& c) {
  CellClass cl = classify(t, c);
  if (cl.tag != CellClass::Redundant) return std::nullopt;
  int v = cl.smallest_unblocked;
  Cell up = c;
  up.verts.erase(std::find(up.verts.begin(), up.verts.end(), v));
  up.edges.push_back(t.parent_edge[v]);
  return make_cell(t, up.edges, up.verts);
}

Cell shift_V(const EmbeddedTree& t, const Cell& c) {
  CellClass cl = classify(t, c);
  if (cl.tag != CellClass::Redundant) return c;
  int v = cl.smallest_unblocked;
  Cell out = c;
  *std::find(out.verts.begin(), out.verts.end(), v) = t.parent[v];
  return make_cell(t, out.edges, out.verts);
}

Cell stabilized_V(const EmbeddedTree& t, const Cell& c) {
  Cell cur = c;
  for (long long i = 0; i <= 2LL * t.vertex_count() * (c.n() + 1); ++i) {
    Cell next = shift_V(t, cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  fail(Errc::NonStabilizing, "V iteration did not reach a fixed point");
}

namespace {

void enumerate_rec(const EmbeddedTree& t, int n, int dim, Cell& partial,
                   std::vector<char>& occ, int next_edge, int next_vert,
                   const std::function<void(const Cell&)>& sink, long long* count) {
  if (partial.dim() < dim) {
    for (int e = next_edge; e < t.graph.edge_count(); ++e) {
      int a = t.tau(e), b = t.iota(e);
      if (occ[a] || occ[b]) continue;
      occ[a] = occ[b] = 1;
      partial.edges.push_back(e);
      enumerate_rec(t, n, dim, partial, occ, e + 1, 0, sink, count);
      partial.edges.pop_back();
      occ[a] = occ[b] = 0;
    }
    return;
  }
  int need = n - dim - static_cast<int>(partial.verts.size());
  if (need == 0) {
    if (count) ++*count;
    if (sink) sink(make_cell(t, partial.edges, partial.verts));
    return;
  }
  for (int v = next_vert; v + need <= t.vertex_count(); ++v) {
    if (occ[v]) continue;
    occ[v] = 1;
    partial.verts.push_back(v);
    enumerate_rec(t, n, dim, partial, occ, next_edge, v + 1, sink, count);
    partial.verts.pop_back();
    occ[v] = 0;
  }
}

}  // namespace

void enumerate_cells(const EmbeddedTree& t, int n, int dim,
                     const std::function<void(const Cell&)>& sink) {
  if (t.vertex_count() < n) fail(Errc::TooFewVertices, "need at least n vertices");
  if (dim < 0 || dim > n) return;
  Cell partial;
  std::vector<char> occ(t.vertex_count(), 0);
  enumerate_rec(t, n, dim, partial, occ, 0, 0, sink, nullptr);
}

long long count_cells(const EmbeddedTree& t, int n, int dim) {
  if (t.vertex_count() < n) fail(Errc::TooFewVertices, "need at least n vertices");
  if (dim < 0 || dim > n) return 0;
  Cell partial;
  std::vector<char> occ(t.vertex_count(), 0);
  long long count = 0;
  enumerate_rec(t, n, dim, partial, occ, 0, 0, nullptr, &count);
  return count;
}

namespace {

// Vertex fill for critical-cell enumeration: every chosen vertex must be
// blocked given the fixed edge set, and each non-deleted edge needs a witness
// vertex making it non-order-respecting.
struct CriticalSearch {
  const EmbeddedTree& t;
  int n;
  std::vector<Cell>& out;
  std::vector<char> occ;
  std::vector<int> edges;
  std::vector<int> verts;

  CriticalSearch(const EmbeddedTree& t_, int n_, std::vector<Cell>& out_)
      : t(t_), n(n_), out(out_), occ(t_.vertex_count(), 0) {}

  bool blocked_now(int v) const {
    if (v == 0) return true;
    return occ[t.parent[v]] != 0;
  }

  bool edges_witnessed() const {
    for (int e : edges) {
      if (t.is_deleted(e)) continue;
      int lo = t.tau(e), hi = t.iota(e);
      bool ok = false;
      for (int v : verts)
        if (v > lo && v < hi && t.graph.adjacent(lo, v)) ok = true;
      if (!ok) return false;
    }
    return true;
  }

  void fill(int need, int from) {
    if (need == 0) {
      if (edges_witnessed()) out.push_back(make_cell(t, edges, verts));
      return;
    }
    for (int v = from; v < t.vertex_count(); ++v) {
      if (occ[v] || !blocked_now(v)) continue;
      occ[v] = 1;
      verts.push_back(v);
      fill(need - 1, v + 1);
      verts.pop_back();
      occ[v] = 0;
    }
  }

  void pick_edges(int dim, int from) {
    if (dim == 0) {
      fill(n - static_cast<int>(edges.size()), 0);
      return;
    }
    for (int e = from; e < t.graph.edge_count(); ++e) {
      int a = t.tau(e), b = t.iota(e);
      if (occ[a] || occ[b]) continue;
      if (!t.is_deleted(e)) {
        // A tree edge can only fail to respect the order when tau(e) has a
        // neighbor numbered strictly inside the interval.
        bool possible = false;
        for (int v = a + 1; v < b && !possible; ++v)
          if (t.graph.adjacent(a, v)) possible = true;
        if (!possible) continue;
      }
      occ[a] = occ[b] = 1;
      edges.push_back(e);
      pick_edges(dim - 1, e + 1);
      edges.pop_back();
      occ[a] = occ[b] = 0;
    }
  }
};

}  // namespace

std::vector<Cell> critical_cells(const EmbeddedTree& t, int n, int dim) {
  if (t.vertex_count() < n) fail(Errc::TooFewVertices, "need at least n vertices");
  std::vector<Cell> out;
  if (dim < 0 || dim > n) return out;
  CriticalSearch s(t, n, out);
  s.pick_edges(dim, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gbg
