#pragma once

#include <string>
#include <vector>

#include "gbg/tree.hpp"

namespace gbg {

// Open cell of UD_n: edges plus vertices with pairwise disjoint closures.
// Edges are kept sorted by iota, vertices ascending; both are vertex ids of
// the canonical numbering.
struct Cell {
  std::vector<int> edges;
  std::vector<int> verts;

  int dim() const { return static_cast<int>(edges.size()); }
  int n() const { return static_cast<int>(edges.size() + verts.size()); }
  bool operator==(const Cell& o) const { return edges == o.edges && verts == o.verts; }
  bool operator<(const Cell& o) const;
};

Cell make_cell(const EmbeddedTree& t, std::vector<int> edges, std::vector<int> verts);
bool cell_valid(const EmbeddedTree& t, const Cell& c);
std::string cell_name(const EmbeddedTree& t, const Cell& c);
Cell parse_cell(const EmbeddedTree& t, const std::string& name);

struct CellKeyHash {
  size_t operator()(const Cell& c) const {
    size_t h = 1469598103934665603ull;
    auto mix = [&h](int x) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    };
    for (int e : c.edges) mix(e);
    mix(-7);
    for (int v : c.verts) mix(v);
    return h;
  }
};

struct BranchTerm {
  int vertex = -1;            // valency >= 3 vertex A in the tree
  int k = 0;                  // branch carrying the edge
  std::vector<int> a;         // blocked vertex counts per branch, size mu-1
};

struct ANotation {
  std::vector<BranchTerm> branch_terms;
  std::vector<int> deleted_edges;       // edge ids
  std::vector<int> blocked_by_deleted;  // vertex ids
  int s = 0;
};

ANotation encode_a_notation(const EmbeddedTree& t, const Cell& c);
Cell decode_a_notation(const EmbeddedTree& t, const ANotation& a, int n);
std::string a_notation_name(const EmbeddedTree& t, const ANotation& a);

}  // namespace gbg
