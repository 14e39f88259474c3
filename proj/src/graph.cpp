#include "gbg/graph.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace gbg {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotConnected: return "NotConnected";
    case Errc::NotSubdivided: return "NotSubdivided";
    case Errc::UnknownFixture: return "UnknownFixture";
    case Errc::BaseNotValencyOne: return "BaseNotValencyOne";
    case Errc::TooFewVertices: return "TooFewVertices";
    case Errc::VertexNotInCell: return "VertexNotInCell";
    case Errc::EdgeNotInCell: return "EdgeNotInCell";
    case Errc::InconsistentNotation: return "InconsistentNotation";
    case Errc::NotAChainComplex: return "NotAChainComplex";
    case Errc::NoSolution: return "NoSolution";
    case Errc::NotInCommutatorSubgroup: return "NotInCommutatorSubgroup";
    case Errc::NotCommutatorRelated: return "NotCommutatorRelated";
    case Errc::NotTwoCell: return "NotTwoCell";
    case Errc::NotLinearStarBouquet: return "NotLinearStarBouquet";
    case Errc::EmbeddingConditionViolated: return "EmbeddingConditionViolated";
    case Errc::ScriptStepInapplicable: return "ScriptStepInapplicable";
    case Errc::NonStabilizing: return "NonStabilizing";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::PreconditionS0: return "PreconditionS0";
    case Errc::BasisExpressionFailed: return "BasisExpressionFailed";
    case Errc::Overflow: return "Overflow";
    case Errc::BadInput: return "BadInput";
  }
  return "Unknown";
}

void Graph::validate() const {
  for (const auto& e : edges) {
    if (e.first < 0 || e.first >= vertex_count || e.second < 0 || e.second >= vertex_count)
      fail(Errc::BadInput, "edge endpoint out of range");
  }
  if (base && (*base < 0 || *base >= vertex_count)) fail(Errc::BadInput, "base out of range");
  if (!rotation.empty()) {
    if (static_cast<int>(rotation.size()) != vertex_count)
      fail(Errc::BadInput, "rotation size mismatch");
    std::vector<char> seen(2 * edges.size(), 0);
    for (int v = 0; v < vertex_count; ++v) {
      for (int end : rotation[v]) {
        if (end < 0 || end >= 2 * edge_count()) fail(Errc::BadInput, "rotation end out of range");
        if (end_vertex(end) != v) fail(Errc::BadInput, "rotation lists foreign edge-end");
        if (seen[end]) fail(Errc::BadInput, "rotation repeats edge-end");
        seen[end] = 1;
      }
    }
    for (char s : seen)
      if (!s) fail(Errc::BadInput, "rotation misses an edge-end");
  }
}

int Graph::valency(int v) const {
  int d = 0;
  for (const auto& e : edges) {
    if (e.first == v) ++d;
    if (e.second == v) ++d;
  }
  return d;
}

std::vector<std::vector<int>> Graph::incident_ends() const {
  std::vector<std::vector<int>> out(vertex_count);
  for (int e = 0; e < edge_count(); ++e) {
    out[edges[e].first].push_back(2 * e);
    out[edges[e].second].push_back(2 * e + 1);
  }
  return out;
}

std::vector<std::vector<int>> Graph::effective_rotation() const {
  if (!rotation.empty()) return rotation;
  return incident_ends();
}

bool Graph::is_connected() const {
  if (vertex_count == 0) return true;
  std::vector<char> vis(vertex_count, 0);
  std::deque<int> q{0};
  vis[0] = 1;
  int cnt = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (const auto& e : edges) {
      int u = -1;
      if (e.first == v) u = e.second;
      else if (e.second == v) u = e.first;
      if (u >= 0 && !vis[u]) {
        vis[u] = 1;
        ++cnt;
        q.push_back(u);
      }
    }
  }
  return cnt == vertex_count;
}

bool Graph::adjacent(int u, int v) const {
  for (const auto& e : edges)
    if ((e.first == u && e.second == v) || (e.first == v && e.second == u)) return true;
  return false;
}

int Graph::girth() const {
  int best = INT_MAX;
  std::map<std::pair<int, int>, int> mult;
  for (const auto& e : edges) {
    if (e.first == e.second) best = std::min(best, 1);
    else ++mult[{std::min(e.first, e.second), std::max(e.first, e.second)}];
  }
  for (const auto& [k, m] : mult)
    if (m >= 2) best = std::min(best, 2);
  // Simple part: BFS from every vertex.
  std::vector<std::vector<int>> adj(vertex_count);
  for (const auto& [k, m] : mult) {
    adj[k.first].push_back(k.second);
    adj[k.second].push_back(k.first);
  }
  for (int s = 0; s < vertex_count; ++s) {
    std::vector<int> dist(vertex_count, -1), par(vertex_count, -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int u : adj[v]) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          par[u] = v;
          q.push_back(u);
        } else if (u != par[v] && !(par[u] == v)) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  return best;
}

namespace {

std::vector<int> essential_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count; ++v)
    if (g.valency(v) != 2) out.push_back(v);
  return out;
}

}  // namespace

std::vector<Arc> arc_decomposition(const Graph& g) {
  g.validate();
  if (!g.is_connected()) fail(Errc::NotConnected, "arc decomposition needs a connected graph");
  std::vector<int> ess = essential_vertices(g);
  if (ess.empty()) fail(Errc::BadInput, "graph is a bare cycle; no essential vertices");
  std::vector<char> is_ess(g.vertex_count, 0);
  for (int v : ess) is_ess[v] = 1;

  auto inc = g.incident_ends();
  std::vector<char> end_used(2 * g.edge_count(), 0);
  std::vector<Arc> arcs;
  // Walk every arc starting from an essential vertex; edge ends scanned in
  // ascending order keeps the result deterministic.
  for (int v : ess) {
    for (int end : inc[v]) {
      if (end_used[end]) continue;
      Arc a;
      a.from = v;
      int cur_end = end;
      while (true) {
        end_used[cur_end] = 1;
        int e = cur_end / 2;
        a.edge_list.push_back(e);
        int far_end = g.other_end(cur_end);
        end_used[far_end] = 1;
        int w = g.end_vertex(far_end);
        if (is_ess[w]) {
          a.to = w;
          break;
        }
        a.inner.push_back(w);
        int next_end = -1;
        for (int cand : inc[w])
          if (cand != far_end) next_end = cand;
        cur_end = next_end;
      }
      arcs.push_back(std::move(a));
    }
  }
  // Deduplicate: each open arc was discovered from both ends unless a loop.
  std::vector<Arc> uniq;
  std::set<int> taken;
  for (auto& a : arcs) {
    int fe = a.edge_list.front();
    int le = a.edge_list.back();
    int key = std::min(fe, le);
    if (taken.count(key)) continue;
    taken.insert(key);
    uniq.push_back(std::move(a));
  }
  // Closer designation: spanning structure over arcs, Kruskal by
  // (length, first edge id). Self-loops are always closers.
  std::vector<int> order(uniq.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    if (uniq[x].length() != uniq[y].length()) return uniq[x].length() < uniq[y].length();
    return uniq[x].edge_list.front() < uniq[y].edge_list.front();
  });
  std::vector<int> uf(g.vertex_count);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (int idx : order) {
    Arc& a = uniq[idx];
    int ra = find(a.from), rb = find(a.to);
    if (ra == rb) a.closer = true;
    else uf[ra] = rb;
  }
  // Stable output order by first edge id.
  std::stable_sort(uniq.begin(), uniq.end(),
                   [](const Arc& x, const Arc& y) { return x.edge_list.front() < y.edge_list.front(); });
  return uniq;
}

namespace {

int required_length(const Arc& a, int n, SubdivisionMode mode) {
  if (mode == SubdivisionMode::Strict && a.closer) return std::max(n, 3);
  (void)a;
  return std::max(n - 1, 1);
}

// Rebuild g with each arc stretched to the prescribed length. Original
// vertex ids survive; new subdivision points are appended.
Graph rebuild_with_lengths(const Graph& g, const std::vector<Arc>& arcs,
                           const std::vector<int>& lengths) {
  Graph out;
  out.vertex_count = g.vertex_count;
  out.base = g.base;
  std::vector<char> keep_vertex(g.vertex_count, 0);
  std::vector<char> ess(g.vertex_count, 0);
  for (int v = 0; v < g.vertex_count; ++v)
    if (g.valency(v) != 2) {
      ess[v] = 1;
      keep_vertex[v] = 1;
    }
  // Arc interiors keep ids when the length is unchanged, otherwise the arc is
  // rebuilt from fresh interior vertices appended at the end.
  struct NewArc {
    std::vector<int> verts;  // from .. to inclusive
    int first_edge = -1, last_edge = -1;
  };
  std::vector<NewArc> na(arcs.size());
  std::vector<std::pair<int, int>> new_edges;
  for (size_t i = 0; i < arcs.size(); ++i) {
    const Arc& a = arcs[i];
    std::vector<int> vs;
    vs.push_back(a.from);
    if (lengths[i] == a.length()) {
      for (int v : a.inner) {
        vs.push_back(v);
        keep_vertex[v] = 1;
      }
    } else {
      for (int j = 0; j < lengths[i] - 1; ++j) vs.push_back(out.vertex_count++);
    }
    vs.push_back(a.to);
    na[i].verts = vs;
    na[i].first_edge = static_cast<int>(new_edges.size());
    for (size_t j = 0; j + 1 < vs.size(); ++j) new_edges.emplace_back(vs[j], vs[j + 1]);
    na[i].last_edge = static_cast<int>(new_edges.size()) - 1;
  }
  out.edges = new_edges;
  // Rotation: essential vertices inherit the cyclic order of arc attachments.
  auto rot = g.effective_rotation();
  // Map old edge-end -> arc and side (0 = from-side end, 1 = to-side end).
  std::vector<std::pair<int, int>> end_arc(2 * g.edge_count(), {-1, -1});
  for (size_t i = 0; i < arcs.size(); ++i) {
    const Arc& a = arcs[i];
    int fe = a.edge_list.front();
    int from_end = (g.edges[fe].first == a.from) ? 2 * fe : 2 * fe + 1;
    // Loops attached twice at the same vertex: the front end is the from-side.
    if (a.from == a.to && a.edge_list.size() == 1) {
      end_arc[2 * fe] = {static_cast<int>(i), 0};
      end_arc[2 * fe + 1] = {static_cast<int>(i), 1};
      continue;
    }
    end_arc[from_end] = {static_cast<int>(i), 0};
    int le = a.edge_list.back();
    int to_end = (g.edges[le].first == a.to) ? 2 * le : 2 * le + 1;
    if (a.from == a.to) {
      // Loop arc with interior: the two ends at the shared vertex.
      if (to_end == from_end) to_end = g.other_end(from_end);
    }
    end_arc[to_end] = {static_cast<int>(i), 1};
  }
  out.rotation.assign(out.vertex_count, {});
  for (int v = 0; v < g.vertex_count; ++v) {
    if (!ess[v]) continue;
    for (int end : rot[v]) {
      auto [ai, side] = end_arc[end];
      if (ai < 0) continue;
      int e = (side == 0) ? na[ai].first_edge : na[ai].last_edge;
      int which = -1;
      if (out.edges[e].first == v && out.edges[e].second == v)
        which = (side == 0) ? 2 * e : 2 * e + 1;
      else
        which = (out.edges[e].first == v) ? 2 * e : 2 * e + 1;
      out.rotation[v].push_back(which);
    }
  }
  for (int v = 0; v < out.vertex_count; ++v) {
    if (v < g.vertex_count && ess[v]) continue;
    for (int e = 0; e < out.edge_count(); ++e) {
      if (out.edges[e].first == v) out.rotation[v].push_back(2 * e);
      if (out.edges[e].second == v) out.rotation[v].push_back(2 * e + 1);
    }
  }
  (void)keep_vertex;
  return out;
}

}  // namespace

Graph subdivide_for_index(const Graph& g, int n, SubdivisionMode mode) {
  if (n < 1) fail(Errc::BadInput, "braid index must be positive");
  if (!g.is_connected()) fail(Errc::NotConnected, "subdivision needs a connected graph");
  auto arcs = arc_decomposition(g);
  std::vector<int> len(arcs.size());
  bool changed = false;
  for (size_t i = 0; i < arcs.size(); ++i) {
    len[i] = std::max(arcs[i].length(), required_length(arcs[i], n, mode));
    if (len[i] != arcs[i].length()) changed = true;
  }
  // Grow closing arcs until no simple cycle is shorter than n+1.
  while (true) {
    Graph trial = changed ? rebuild_with_lengths(g, arcs, len) : g;
    int gi = trial.girth();
    if (gi == INT_MAX || gi >= n + 1) {
      if (!changed) return g;
      return trial;
    }
    // Extend the first closer arc on some short cycle; with all arcs on
    // cycles being closers-or-tree this terminates quickly.
    int pick = -1;
    for (size_t i = 0; i < arcs.size(); ++i)
      if (arcs[i].closer) {
        pick = static_cast<int>(i);
        break;
      }
    if (pick < 0) fail(Errc::BadInput, "girth deficit without any cycle arc");
    len[pick] += (n + 1 - gi);
    changed = true;
  }
}

bool is_sufficiently_subdivided(const Graph& g, int n, SubdivisionMode mode) {
  if (n < 1) fail(Errc::BadInput, "braid index must be positive");
  if (!g.is_connected()) fail(Errc::NotConnected, "check needs a connected graph");
  if (g.vertex_count < n) return false;
  std::vector<int> ess = essential_vertices(g);
  if (ess.empty()) return g.girth() >= n + 1 && g.vertex_count >= n;
  auto arcs = arc_decomposition(g);
  for (const auto& a : arcs)
    if (a.length() < std::max(n - 1, 1)) return false;
  int gi = g.girth();
  if (gi != INT_MAX && gi < n + 1) return false;
  if (mode == SubdivisionMode::Strict) {
    for (const auto& a : arcs)
      if (a.closer && a.length() < std::max(n, 3)) return false;
  }
  return true;
}

std::string pattern_name(PatternName name) {
  switch (name) {
    case PatternName::T0: return "T0";
    case PatternName::S0: return "S0";
    case PatternName::Theta: return "Theta";
    case PatternName::T1: return "T1";
    case PatternName::T2: return "T2";
    case PatternName::T3: return "T3";
    case PatternName::T3p: return "T3p";
    case PatternName::T3pp: return "T3pp";
    case PatternName::T3ppp: return "T3ppp";
    case PatternName::K5: return "K5";
    case PatternName::K33: return "K33";
  }
  return "?";
}

Pattern pattern(PatternName name) {
  Graph g;
  auto E = [&](int a, int b) { g.edges.emplace_back(a, b); };
  switch (name) {
    case PatternName::T0:
      // Center 0 with arms 1,2,3; each arm vertex carries two leaves.
      g.vertex_count = 10;
      E(0, 1); E(0, 2); E(0, 3);
      E(1, 4); E(1, 5); E(2, 6); E(2, 7); E(3, 8); E(3, 9);
      break;
    case PatternName::S0:
      // Circle through 1,2 (parallel arcs) with hairs at both circle vertices.
      g.vertex_count = 4;
      E(0, 1); E(1, 2); E(1, 2); E(2, 3);
      break;
    case PatternName::Theta:
      g.vertex_count = 2;
      E(0, 1); E(0, 1); E(0, 1);
      break;
    case PatternName::T1:
      g.vertex_count = 8;
      E(0, 1); E(0, 2); E(0, 3);
      E(1, 4); E(1, 5);          // leaf pair
      E(2, 2);                   // loop
      E(3, 6); E(3, 7);          // leaf pair
      break;
    case PatternName::T2:
      g.vertex_count = 6;
      E(0, 1); E(0, 2); E(0, 3);
      E(1, 4); E(1, 5);
      E(2, 2); E(3, 3);
      break;
    case PatternName::T3:
      g.vertex_count = 4;
      E(0, 1); E(0, 2); E(0, 3);
      E(1, 1); E(2, 2); E(3, 3);
      break;
    case PatternName::T3p:
      g.vertex_count = 5;
      E(0, 1); E(0, 2); E(0, 3);
      E(1, 1); E(2, 2); E(3, 3);
      E(0, 4);
      break;
    case PatternName::T3pp:
      g.vertex_count = 5;
      E(0, 1); E(0, 2); E(0, 3);
      E(1, 1); E(2, 2); E(3, 3);
      E(1, 4);
      break;
    case PatternName::T3ppp:
      // Hair on the interior of one arm.
      g.vertex_count = 6;
      E(0, 4); E(4, 1); E(0, 2); E(0, 3);
      E(1, 1); E(2, 2); E(3, 3);
      E(4, 5);
      break;
    case PatternName::K5:
      g.vertex_count = 5;
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) E(i, j);
      break;
    case PatternName::K33:
      g.vertex_count = 6;
      for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) E(i, j);
      break;
  }
  return Pattern{name, std::move(g)};
}

Pattern pattern(const std::string& name) {
  for (PatternName p : {PatternName::T0, PatternName::S0, PatternName::Theta, PatternName::T1,
                        PatternName::T2, PatternName::T3, PatternName::T3p, PatternName::T3pp,
                        PatternName::T3ppp, PatternName::K5, PatternName::K33})
    if (pattern_name(p) == name) return pattern(p);
  fail(Errc::UnknownFixture, "unknown pattern " + name);
}

namespace {

// Smoothed pattern: essential vertices and the arcs between them.
struct SmoothPattern {
  std::vector<int> branch;               // original ids of essential vertices
  std::vector<int> degree;               // in the smooth multigraph
  std::vector<std::pair<int, int>> arcs;  // indices into branch; loops allowed
};

SmoothPattern smooth(const Graph& p) {
  SmoothPattern sp;
  std::vector<int> idx(p.vertex_count, -1);
  for (int v = 0; v < p.vertex_count; ++v)
    if (p.valency(v) != 2) {
      idx[v] = static_cast<int>(sp.branch.size());
      sp.branch.push_back(v);
    }
  if (sp.branch.empty()) return sp;  // cycle pattern
  for (const auto& a : arc_decomposition(p)) sp.arcs.emplace_back(idx[a.from], idx[a.to]);
  sp.degree.assign(sp.branch.size(), 0);
  for (auto& a : sp.arcs) {
    sp.degree[a.first]++;
    sp.degree[a.second]++;
  }
  return sp;
}

struct SubdivSearch {
  const Graph& g;
  const SmoothPattern& sp;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, edge)
  std::vector<int> image;                              // branch -> g vertex
  std::vector<char> used_vertex;
  std::vector<char> used_edge;
  std::vector<std::vector<int>> paths;
  std::vector<std::vector<int>> ready;  // arcs routable once branch bi is set
  long long steps = 0;

  SubdivSearch(const Graph& g_, const SmoothPattern& sp_) : g(g_), sp(sp_) {
    adj.resize(g.vertex_count);
    for (int e = 0; e < g.edge_count(); ++e) {
      adj[g.edges[e].first].emplace_back(g.edges[e].second, e);
      if (g.edges[e].first != g.edges[e].second)
        adj[g.edges[e].second].emplace_back(g.edges[e].first, e);
    }
    image.assign(sp.branch.size(), -1);
    used_vertex.assign(g.vertex_count, 0);
    used_edge.assign(g.edge_count(), 0);
    paths.resize(sp.arcs.size());
    ready.resize(sp.branch.size());
    for (size_t a = 0; a < sp.arcs.size(); ++a)
      ready[std::max(sp.arcs[a].first, sp.arcs[a].second)].push_back(static_cast<int>(a));
  }

  void bump() {
    if (++steps > 50'000'000LL) fail(Errc::BudgetExceeded, "subdivision search exceeded budget");
  }

  // Route the queued arcs one after another, then move to the next branch
  // vertex. Interior vertices stay marked while later work proceeds.
  bool route(size_t bi, size_t qi) {
    if (qi == ready[bi].size()) return assign(bi + 1);
    int arc_i = ready[bi][qi];
    int s = image[sp.arcs[arc_i].first];
    int t = image[sp.arcs[arc_i].second];
    std::vector<int> path{s};
    return extend(bi, qi, s, t, path);
  }

  bool extend(size_t bi, size_t qi, int v, int t, std::vector<int>& path) {
    bump();
    int arc_i = ready[bi][qi];
    for (auto [w, e] : adj[v]) {
      if (used_edge[e]) continue;
      if (w == t) {
        // Loop arcs may close immediately only through a genuine loop edge.
        if (v == t && path.size() == 1 && g.edges[e].first != g.edges[e].second) continue;
        used_edge[e] = 1;
        path.push_back(w);
        paths[arc_i] = path;
        if (route(bi, qi + 1)) return true;
        path.pop_back();
        used_edge[e] = 0;
        continue;
      }
      if (used_vertex[w]) continue;
      used_edge[e] = 1;
      used_vertex[w] = 1;
      path.push_back(w);
      if (extend(bi, qi, w, t, path)) return true;
      path.pop_back();
      used_vertex[w] = 0;
      used_edge[e] = 0;
    }
    return false;
  }

  bool assign(size_t bi) {
    bump();
    if (bi == sp.branch.size()) return true;
    for (int v = 0; v < g.vertex_count; ++v) {
      if (used_vertex[v]) continue;
      if (g.valency(v) < sp.degree[bi]) continue;
      image[bi] = v;
      used_vertex[v] = 1;
      if (route(bi, 0)) return true;
      used_vertex[v] = 0;
      image[bi] = -1;
    }
    return false;
  }
};

}  // namespace

bool contains_subdivision(const Graph& g, const Graph& p, MinorWitness* witness) {
  g.validate();
  p.validate();
  if (p.vertex_count == 0) return true;
  if (g.vertex_count == 0) return false;
  if (p.edge_count() == 0) {
    // Isolated pattern vertices only need distinct hosts.
    if (g.vertex_count < p.vertex_count) return false;
    if (witness) {
      witness->vertex_image.resize(p.vertex_count);
      for (int i = 0; i < p.vertex_count; ++i) witness->vertex_image[i] = i;
      witness->edge_paths.clear();
    }
    return true;
  }
  if (!p.is_connected()) fail(Errc::BadInput, "pattern must be connected");
  bool has_ess = false;
  for (int v = 0; v < p.vertex_count; ++v)
    if (p.valency(v) != 2) has_ess = true;
  if (!has_ess) {
    // The pattern is a bare cycle; any cycle in g hosts it.
    return g.girth() != INT_MAX;
  }
  SmoothPattern sp = smooth(p);
  SubdivSearch search(g, sp);
  if (!search.assign(0)) return false;
  if (witness) {
    witness->vertex_image.assign(p.vertex_count, -1);
    for (size_t i = 0; i < sp.branch.size(); ++i)
      witness->vertex_image[sp.branch[i]] = search.image[i];
    witness->edge_paths = search.paths;
  }
  return true;
}

bool contains_subdivision(const Graph& g, const Pattern& p, MinorWitness* witness) {
  return contains_subdivision(g, p.graph, witness);
}

bool is_planar(const Graph& g) {
  // Kuratowski: subdivisions of K5 / K3,3 are the only obstructions.
  if (g.vertex_count <= 4) {
    // Loops and parallels never obstruct planarity.
    return true;
  }
  // Quick density bound on the simplified graph.
  std::set<std::pair<int, int>> simple;
  for (const auto& e : g.edges)
    if (e.first != e.second)
      simple.insert({std::min(e.first, e.second), std::max(e.first, e.second)});
  if (g.vertex_count >= 3 && static_cast<int>(simple.size()) > 3 * g.vertex_count - 6)
    return false;
  return !contains_subdivision(g, pattern(PatternName::K5)) &&
         !contains_subdivision(g, pattern(PatternName::K33));
}

}  // namespace gbg
