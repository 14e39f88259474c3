#include "gbg/tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace gbg {

int EmbeddedTree::deleted_label(int e) const {
  for (size_t i = 0; i < deleted.size(); ++i)
    if (deleted[i] == e) return static_cast<int>(i) + 1;
  return 0;
}

int EmbeddedTree::meet(int v, int w) const {
  // Subtree intervals are consecutive, so the meet is the deepest common
  // ancestor: walk the larger id up.
  while (v != w) {
    if (v > w) v = parent[v];
    else w = parent[w];
  }
  return v;
}

int EmbeddedTree::branch(int v, int w) const {
  if (v == w) return 0;
  if (!in_subtree(v, w)) return 0;
  for (size_t k = 0; k < children[v].size(); ++k)
    if (in_subtree(children[v][k], w)) return static_cast<int>(k) + 1;
  return 0;
}

void EmbeddedTree::check_invariants() const {
  graph.validate();
  if (static_cast<int>(in_tree.size()) != graph.edge_count())
    fail(Errc::BadInput, "tree flag size mismatch");
  int tree_edges = 0;
  for (char f : in_tree) tree_edges += f ? 1 : 0;
  if (tree_edges != graph.vertex_count - 1) fail(Errc::BadInput, "not a spanning tree");
  for (int e = 0; e < graph.edge_count(); ++e) {
    if (!in_tree[e]) continue;
    if (parent[iota(e)] != tau(e)) fail(Errc::BadInput, "orientation violates numbering");
  }
  if (tree_valency(0) != 1) fail(Errc::BaseNotValencyOne, "base must have tree valency 1");
}

EmbeddedTree order_vertices(const Graph& g, const std::vector<char>& tree_edge, int base) {
  g.validate();
  if (static_cast<int>(tree_edge.size()) != g.edge_count())
    fail(Errc::BadInput, "tree flag size mismatch");
  int base_val = 0;
  for (int e = 0; e < g.edge_count(); ++e)
    if (tree_edge[e]) {
      if (g.edges[e].first == base) ++base_val;
      if (g.edges[e].second == base) ++base_val;
    }
  if (base_val != 1) fail(Errc::BaseNotValencyOne, "base must have exactly one tree edge");

  auto rot = g.effective_rotation();
  // Clockwise boundary walk of a regular neighborhood of the tree: depart
  // along the rotation successor of the arrival end, skipping deleted edges.
  std::vector<int> order(g.vertex_count, -1);
  std::vector<int> walk_parent(g.vertex_count, -1), walk_parent_edge(g.vertex_count, -1);
  std::vector<std::vector<int>> walk_children(g.vertex_count);
  int next_id = 0;
  order[base] = next_id++;

  auto tree_pos = [&](int v) {
    std::vector<int> ends;
    for (int end : rot[v])
      if (tree_edge[end / 2]) ends.push_back(end);
    return ends;
  };
  std::vector<std::vector<int>> tr(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) tr[v] = tree_pos(v);

  int depart = tr[base][0];
  long long guard = 0;
  while (true) {
    if (++guard > 8LL * g.edge_count() + 16) fail(Errc::BadInput, "boundary walk did not close");
    int arrive = g.other_end(depart);
    int v = g.end_vertex(arrive);
    int u = g.end_vertex(depart);
    if (order[v] < 0) {
      order[v] = next_id++;
      walk_parent[v] = u;
      walk_parent_edge[v] = depart / 2;
      walk_children[u].push_back(v);
    }
    // Next departure: rotation successor of the arrival end among tree ends.
    const auto& ends = tr[v];
    int pos = -1;
    for (size_t i = 0; i < ends.size(); ++i)
      if (ends[i] == arrive) pos = static_cast<int>(i);
    if (pos < 0) fail(Errc::BadInput, "arrival end missing from rotation");
    depart = ends[(pos + 1) % ends.size()];
    if (v == base && depart == tr[base][0]) break;
  }
  if (next_id != g.vertex_count) fail(Errc::NotConnected, "tree does not span the graph");

  // Canonical relabel: vertex id = order; edges sorted by (tau, iota, input id).
  EmbeddedTree t;
  t.graph.vertex_count = g.vertex_count;
  t.orig_vertex.resize(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) t.orig_vertex[order[v]] = v;
  std::vector<int> edge_order(g.edge_count());
  std::iota(edge_order.begin(), edge_order.end(), 0);
  auto key = [&](int e) {
    int a = order[g.edges[e].first], b = order[g.edges[e].second];
    return std::tuple<int, int, int>(std::min(a, b), std::max(a, b), e);
  };
  std::sort(edge_order.begin(), edge_order.end(),
            [&](int x, int y) { return key(x) < key(y); });
  std::vector<int> edge_new(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    int e = edge_order[i];
    edge_new[e] = i;
    int a = order[g.edges[e].first], b = order[g.edges[e].second];
    t.graph.edges.emplace_back(std::min(a, b), std::max(a, b));
    t.in_tree.push_back(tree_edge[e]);
  }
  t.graph.base = 0;
  // Rotations carried over (flipping an end when the relabel swapped the
  // endpoint order).
  t.graph.rotation.assign(g.vertex_count, {});
  for (int v = 0; v < g.vertex_count; ++v) {
    for (int end : rot[v]) {
      int e = end / 2;
      int ne = edge_new[e];
      int new_end;
      if (t.graph.edges[ne].first == t.graph.edges[ne].second)
        new_end = 2 * ne + (end % 2);
      else
        new_end = 2 * ne + (order[v] == t.graph.edges[ne].first ? 0 : 1);
      t.graph.rotation[order[v]].push_back(new_end);
    }
  }
  t.parent.assign(g.vertex_count, -1);
  t.parent_edge.assign(g.vertex_count, -1);
  t.children.assign(g.vertex_count, {});
  for (int v = 0; v < g.vertex_count; ++v) {
    if (v == base) continue;
    t.parent[order[v]] = order[walk_parent[v]];
    t.parent_edge[order[v]] = edge_new[walk_parent_edge[v]];
  }
  for (int v = 0; v < g.vertex_count; ++v)
    for (int c : walk_children[v]) t.children[order[v]].push_back(order[c]);
  for (auto& ch : t.children) std::sort(ch.begin(), ch.end());
  t.subtree_size.assign(g.vertex_count, 1);
  for (int v = g.vertex_count - 1; v >= 1; --v) t.subtree_size[t.parent[v]] += t.subtree_size[v];
  for (int e = 0; e < t.graph.edge_count(); ++e)
    if (!t.in_tree[e]) t.deleted.push_back(e);
  std::sort(t.deleted.begin(), t.deleted.end(), [&](int x, int y) {
    return std::make_pair(t.tau(x), t.iota(x)) < std::make_pair(t.tau(y), t.iota(y));
  });
  t.graph.tree_edges = std::vector<int>{};
  for (int e = 0; e < t.graph.edge_count(); ++e)
    if (t.in_tree[e]) t.graph.tree_edges->push_back(e);
  t.check_invariants();
  return t;
}

EmbeddedTree choose_maximal_tree(const Graph& g, TreeStrategy strategy) {
  g.validate();
  if (!g.is_connected()) fail(Errc::NotConnected, "tree choice needs a connected graph");
  auto arcs = arc_decomposition(g);
  std::vector<char> tree_edge(g.edge_count(), 1);
  std::vector<int> cut_ends;
  for (const auto& a : arcs) {
    if (!a.closer) continue;
    int del = -1;
    if (strategy == TreeStrategy::Valency2Ends) {
      if (a.length() < 3)
        fail(Errc::NotSubdivided, "cycle arc too short for valency-2 deletion ends");
      del = a.edge_list[a.length() / 2];
    } else {
      del = a.edge_list.front();
    }
    tree_edge[del] = 0;
    cut_ends.push_back(g.edges[del].first);
    cut_ends.push_back(g.edges[del].second);
  }
  // Base: the smallest valency-1 vertex, else the smallest cut end that has
  // tree valency 1.
  int base = -1;
  for (int v = 0; v < g.vertex_count && base < 0; ++v)
    if (g.valency(v) == 1) base = v;
  if (base < 0) {
    std::sort(cut_ends.begin(), cut_ends.end());
    for (int v : cut_ends) {
      int tv = 0;
      for (int e = 0; e < g.edge_count(); ++e)
        if (tree_edge[e] && (g.edges[e].first == v || g.edges[e].second == v)) ++tv;
      if (tv == 1) {
        base = v;
        break;
      }
    }
  }
  if (base < 0) fail(Errc::BadInput, "no admissible base vertex");
  return order_vertices(g, tree_edge, base);
}

std::vector<RestrictivePair> detect_restrictive_pairs(const EmbeddedTree& t, int n) {
  const Graph& g = t.graph;
  std::vector<RestrictivePair> out;
  if (t.deleted.empty()) return out;
  auto arcs = arc_decomposition(g);
  // Pairwise distances between essential vertices.
  auto dist_from = [&](int s) {
    std::vector<int> d(g.vertex_count, -1);
    std::deque<int> q{s};
    d[s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (const auto& e : g.edges) {
        int u = -1;
        if (e.first == v) u = e.second;
        else if (e.second == v) u = e.first;
        if (u >= 0 && d[u] < 0) {
          d[u] = d[v] + 1;
          q.push_back(u);
        }
      }
    }
    return d;
  };
  for (const auto& a : arcs) {
    if (a.length() != n - 1) continue;
    if (g.valency(a.from) < 3 || g.valency(a.to) < 3) continue;
    for (int e : a.edge_list) {
      if (!t.is_deleted(e)) continue;
      for (int b : {a.from, a.to}) {
        if (g.edges[e].first != b && g.edges[e].second != b) continue;
        int other = (b == a.from) ? a.to : a.from;
        auto d = dist_from(other);
        if (d[b] != n - 1) continue;
        RestrictivePair rp;
        rp.a = other;
        rp.b = b;
        rp.deleted_edge = e;
        out.push_back(rp);
      }
    }
  }
  return out;
}

}  // namespace gbg
