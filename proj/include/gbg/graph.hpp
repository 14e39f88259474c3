#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gbg/error.hpp"

namespace gbg {

// Finite multigraph. Loops and parallel edges are allowed until subdivision
// removes them. Edge-end i of edge e is addressed as 2*e+i; the rotation
// lists, when present, give the clockwise cyclic order of edge-ends around
// each vertex.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> rotation;  // empty when absent
  std::optional<int> base;
  std::optional<std::vector<int>> tree_edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  int end_vertex(int end) const {
    const auto& e = edges[end / 2];
    return (end % 2 == 0) ? e.first : e.second;
  }
  int other_end(int end) const { return end ^ 1; }

  void validate() const;
  int valency(int v) const;
  std::vector<std::vector<int>> incident_ends() const;  // per vertex, sorted
  // Rotation if present, else incident ends in input order.
  std::vector<std::vector<int>> effective_rotation() const;
  bool is_connected() const;
  bool adjacent(int u, int v) const;
  int girth() const;  // length of shortest cycle, INT_MAX if forest
};

enum class SubdivisionMode { Strict, Minimal };

// Maximal run of edges whose interior vertices all have valency 2. A cycle
// through no essential vertex is reported with from == to and is_closed_cycle.
struct Arc {
  int from = -1, to = -1;
  std::vector<int> edge_list;     // in path order from 'from'
  std::vector<int> inner;         // interior vertices in path order
  bool closer = false;            // designated cycle-closing arc
  int length() const { return static_cast<int>(edge_list.size()); }
};

// Decomposes g into arcs between vertices of valency != 2 and marks, per
// independent cycle, one deterministic closing arc.
std::vector<Arc> arc_decomposition(const Graph& g);

Graph subdivide_for_index(const Graph& g, int n, SubdivisionMode mode);
bool is_sufficiently_subdivided(const Graph& g, int n, SubdivisionMode mode);

enum class PatternName { T0, S0, Theta, T1, T2, T3, T3p, T3pp, T3ppp, K5, K33 };

struct Pattern {
  PatternName name;
  Graph graph;
};

Pattern pattern(PatternName name);
Pattern pattern(const std::string& name);
std::string pattern_name(PatternName name);

// Witness of a topological-minor embedding: branch vertices of the pattern
// mapped to vertices of g, pattern edges to internally disjoint paths.
struct MinorWitness {
  std::vector<int> vertex_image;               // per pattern vertex
  std::vector<std::vector<int>> edge_paths;    // per pattern edge, vertex lists
};

bool contains_subdivision(const Graph& g, const Pattern& p,
                          MinorWitness* witness = nullptr);
bool contains_subdivision(const Graph& g, const Graph& p,
                          MinorWitness* witness = nullptr);

bool is_planar(const Graph& g);

}  // namespace gbg
