#pragma once

#include <string>
#include <vector>

#include "gbg/graph.hpp"

namespace gbg {

// Spanning tree of a canonically numbered graph. Vertices are identified
// with their boundary-walk order: 0 is the base, every tree edge e has
// tau(e) < iota(e), and each subtree occupies a consecutive id interval.
struct EmbeddedTree {
  Graph graph;
  std::vector<char> in_tree;   // per edge
  std::vector<int> deleted;    // deleted edge ids, label order d1, d2, ...
  std::vector<int> parent;      // -1 for the base
  std::vector<int> parent_edge;
  std::vector<std::vector<int>> children;  // clockwise
  std::vector<int> subtree_size;
  std::vector<int> orig_vertex;  // canonical id -> input id
  bool canonical_no_s0 = false;

  int vertex_count() const { return graph.vertex_count; }
  int tau(int e) const { return std::min(graph.edges[e].first, graph.edges[e].second); }
  int iota(int e) const { return std::max(graph.edges[e].first, graph.edges[e].second); }
  bool is_deleted(int e) const { return !in_tree[e]; }
  int deleted_label(int e) const;  // 1-based position in `deleted`, 0 if tree edge
  int tree_valency(int v) const {
    return static_cast<int>(children[v].size()) + (v == 0 ? 0 : 1);
  }
  bool in_subtree(int root, int w) const { return w >= root && w < root + subtree_size[root]; }

  // First intersection of the tree paths from v and w to the base.
  int meet(int v, int w) const;
  // Branch of v containing w, counted clockwise from the branch toward the
  // base (which is branch 0). For w in the k-th child subtree this is k.
  int branch(int v, int w) const;
  int branch_first(int v, int k) const { return children[v][k - 1]; }

  void check_invariants() const;
};

enum class TreeStrategy { Valency2Ends, BranchIncident };

// Boundary-walk numbering of a chosen spanning tree. `tree_edge` flags which
// edges of g form the tree; the base must have tree valency 1.
EmbeddedTree order_vertices(const Graph& g, const std::vector<char>& tree_edge, int base);

EmbeddedTree choose_maximal_tree(const Graph& g, TreeStrategy strategy);

struct RestrictivePair {
  int a = -1, b = -1;       // valency >= 3 endpoints; deleted edge ends at b
  int deleted_edge = -1;
};

std::vector<RestrictivePair> detect_restrictive_pairs(const EmbeddedTree& t, int n);

}  // namespace gbg
