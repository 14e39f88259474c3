#include "gbg/cell.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gbg {

bool Cell::operator<(const Cell& o) const {
  if (edges.size() != o.edges.size()) return edges.size() < o.edges.size();
  if (edges != o.edges) return edges < o.edges;
  return verts < o.verts;
}

Cell make_cell(const EmbeddedTree& t, std::vector<int> edges, std::vector<int> verts) {
  std::sort(edges.begin(), edges.end(),
            [&](int a, int b) { return t.iota(a) < t.iota(b); });
  std::sort(verts.begin(), verts.end());
  return Cell{std::move(edges), std::move(verts)};
}

bool cell_valid(const EmbeddedTree& t, const Cell& c) {
  std::vector<char> occ(t.vertex_count(), 0);
  for (int e : c.edges) {
    if (e < 0 || e >= t.graph.edge_count()) return false;
    if (occ[t.tau(e)] || occ[t.iota(e)]) return false;
    occ[t.tau(e)] = occ[t.iota(e)] = 1;
  }
  for (int v : c.verts) {
    if (v < 0 || v >= t.vertex_count()) return false;
    if (occ[v]) return false;
    occ[v] = 1;
  }
  for (size_t i = 0; i + 1 < c.edges.size(); ++i)
    if (t.iota(c.edges[i]) >= t.iota(c.edges[i + 1])) return false;
  for (size_t i = 0; i + 1 < c.verts.size(); ++i)
    if (c.verts[i] >= c.verts[i + 1]) return false;
  return true;
}

std::string cell_name(const EmbeddedTree& t, const Cell& c) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : c.edges) {
    if (!first) os << ',';
    first = false;
    if (t.is_deleted(e)) {
      if (t.deleted.size() == 1) os << 'd';
      else os << 'd' << t.deleted_label(e);
    } else {
      os << t.tau(e) << '-' << t.iota(e);
    }
  }
  for (int v : c.verts) {
    if (!first) os << ',';
    first = false;
    os << v;
  }
  os << '}';
  return os.str();
}

Cell parse_cell(const EmbeddedTree& t, const std::string& name) {
  std::string s = name;
  std::erase_if(s, [](char ch) { return ch == '{' || ch == '}' || ch == ' '; });
  std::vector<int> edges, verts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    if (tok[0] == 'd') {
      int label = tok.size() == 1 ? 1 : std::stoi(tok.substr(1));
      if (label < 1 || label > static_cast<int>(t.deleted.size()))
        fail(Errc::BadInput, "unknown deleted edge in cell name: " + tok);
      edges.push_back(t.deleted[label - 1]);
      continue;
    }
    auto dash = tok.find('-');
    if (dash != std::string::npos) {
      int a = std::stoi(tok.substr(0, dash));
      int b = std::stoi(tok.substr(dash + 1));
      int found = -1;
      for (int e = 0; e < t.graph.edge_count(); ++e)
        if (t.tau(e) == std::min(a, b) && t.iota(e) == std::max(a, b)) found = e;
      if (found < 0) fail(Errc::BadInput, "unknown edge in cell name: " + tok);
      edges.push_back(found);
    } else {
      verts.push_back(std::stoi(tok));
    }
  }
  Cell c = make_cell(t, edges, verts);
  if (!cell_valid(t, c)) fail(Errc::BadInput, "cell name violates disjointness: " + name);
  return c;
}

namespace {

// Chain root of a blocked vertex: the occupied element of the cell whose
// closure contains the parent. -1 marks an unblocked parent slot.
struct Chains {
  // For each cell vertex: 0 = base run, 1 = tree-edge term, 2 = deleted edge
  // chain; and the anchor (edge id for 1/2).
  std::vector<int> kind, anchor;
};

}  // namespace

ANotation encode_a_notation(const EmbeddedTree& t, const Cell& c) {
  ANotation out;
  std::vector<int> vert_owner(c.verts.size(), -2);
  // Occupancy map: vertex -> index of the cell element whose closure holds it.
  std::map<int, std::pair<char, int>> occ;  // vertex -> (is_edge, idx)
  for (size_t i = 0; i < c.edges.size(); ++i) {
    occ[t.tau(c.edges[i])] = {1, static_cast<int>(i)};
    occ[t.iota(c.edges[i])] = {1, static_cast<int>(i)};
  }
  for (size_t i = 0; i < c.verts.size(); ++i) occ[c.verts[i]] = {0, static_cast<int>(i)};

  // Roots: follow blocking parents down to a stable anchor.
  // anchor kinds: 0 = base (s-run), 1 = tree edge term, 2 = deleted edge.
  std::vector<int> kind(c.verts.size(), -1), anchor(c.verts.size(), -1);
  std::vector<int> vpos(t.vertex_count(), -1);
  for (size_t i = 0; i < c.verts.size(); ++i) vpos[c.verts[i]] = static_cast<int>(i);
  for (size_t i = 0; i < c.verts.size(); ++i) {
    int v = c.verts[i];
    // Walk down through cell vertices until hitting the base or an edge.
    while (true) {
      if (v == 0) {
        kind[i] = 0;
        break;
      }
      int p = t.parent[v];
      auto it = occ.find(p);
      if (it == occ.end()) fail(Errc::InconsistentNotation, "unblocked vertex in critical cell");
      if (it->second.first) {
        int e = c.edges[it->second.second];
        kind[i] = t.is_deleted(e) ? 2 : 1;
        anchor[i] = e;
        break;
      }
      v = p;
      if (v == 0) {
        kind[i] = 0;
        break;
      }
    }
  }
  (void)vert_owner;
  // Base run size.
  out.s = 0;
  for (size_t i = 0; i < c.verts.size(); ++i)
    if (kind[i] == 0) ++out.s;
  for (int e : c.edges)
    if (t.is_deleted(e)) out.deleted_edges.push_back(e);
  for (size_t i = 0; i < c.verts.size(); ++i)
    if (kind[i] == 2) out.blocked_by_deleted.push_back(c.verts[i]);

  for (int e : c.edges) {
    if (t.is_deleted(e)) continue;
    BranchTerm term;
    term.vertex = t.tau(e);
    int mu = t.tree_valency(term.vertex);
    term.k = t.branch(term.vertex, t.iota(e));
    term.a.assign(std::max(mu - 1, 0), 0);
    for (size_t i = 0; i < c.verts.size(); ++i) {
      if (kind[i] != 1 || anchor[i] != e) continue;
      int b = t.branch(term.vertex, c.verts[i]);
      if (b < 1 || b > mu - 1) fail(Errc::InconsistentNotation, "blocked vertex outside branches");
      term.a[b - 1] += 1;
    }
    term.a[term.k - 1] += 1;  // the edge itself counts in a_k
    out.branch_terms.push_back(term);
  }
  std::sort(out.branch_terms.begin(), out.branch_terms.end(),
            [](const BranchTerm& x, const BranchTerm& y) { return x.vertex < y.vertex; });
  std::sort(out.blocked_by_deleted.begin(), out.blocked_by_deleted.end());
  return out;
}

Cell decode_a_notation(const EmbeddedTree& t, const ANotation& a, int n) {
  std::vector<int> edges = a.deleted_edges;
  std::vector<int> verts;
  std::vector<char> occ(t.vertex_count(), 0);
  auto occupy_vertex = [&](int v) {
    if (v < 0 || v >= t.vertex_count() || occ[v])
      fail(Errc::InconsistentNotation, "vertex placement collision");
    occ[v] = 1;
    verts.push_back(v);
  };
  auto occupy_edge = [&](int e) {
    if (occ[t.tau(e)] || occ[t.iota(e)])
      fail(Errc::InconsistentNotation, "edge placement collision");
    occ[t.tau(e)] = occ[t.iota(e)] = 1;
  };
  for (int e : a.deleted_edges) occupy_edge(e);
  for (const auto& term : a.branch_terms) {
    int mu = t.tree_valency(term.vertex);
    if (term.k < 1 || term.k > mu - 1 || static_cast<int>(term.a.size()) != mu - 1 ||
        term.a[term.k - 1] < 1)
      fail(Errc::InconsistentNotation, "invalid branch term");
    int first = t.branch_first(term.vertex, term.k);
    int e = t.parent_edge[first];
    edges.push_back(e);
    occupy_edge(e);
    for (int b = 1; b <= mu - 1; ++b) {
      int cnt = term.a[b - 1] - (b == term.k ? 1 : 0);
      int v = (b == term.k) ? first : t.branch_first(term.vertex, b) - 1;
      // Chain of consecutive ids starting at the first free slot of branch b.
      for (int j = 0; j < cnt; ++j) occupy_vertex(v + j + 1);
      if (cnt > 0 && !t.in_subtree(t.branch_first(term.vertex, b), v + cnt))
        fail(Errc::InconsistentNotation, "branch capacity exceeded");
    }
  }
  for (int v : a.blocked_by_deleted) occupy_vertex(v);
  int placed = static_cast<int>(edges.size() + verts.size());
  int s = n - placed;
  if (s < 0) fail(Errc::InconsistentNotation, "more objects than particles");
  int v = 0;
  for (int j = 0; j < s; ++j) {
    while (v < t.vertex_count() && occ[v]) ++v;
    if (v >= t.vertex_count()) fail(Errc::InconsistentNotation, "no room for base run");
    // The base run must stay consecutive from the bottom, skipping only
    // closures of deleted edges incident to it.
    occupy_vertex(v);
  }
  return make_cell(t, std::move(edges), std::move(verts));
}

std::string a_notation_name(const EmbeddedTree& t, const ANotation& a) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&]() {
    if (!first) os << "*";
    first = false;
  };
  for (const auto& term : a.branch_terms) {
    sep();
    os << 'v' << term.vertex << '_' << term.k << '(';
    for (size_t i = 0; i < term.a.size(); ++i) {
      if (i) os << ',';
      os << term.a[i];
    }
    os << ')';
  }
  for (int e : a.deleted_edges) {
    sep();
    os << 'd' << t.deleted_label(e);
  }
  if (!a.blocked_by_deleted.empty()) {
    sep();
    os << "b(";
    for (size_t i = 0; i < a.blocked_by_deleted.size(); ++i) {
      if (i) os << ',';
      os << a.blocked_by_deleted[i];
    }
    os << ')';
  }
  sep();
  os << "0_" << a.s;
  return os.str();
}

}  // namespace gbg
