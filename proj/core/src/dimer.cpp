#include "alexdimer/dimer.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace alexdimer {

int FCGraph::find_edge(int crossing, int region, int quadrant) const {
  for (size_t i = 0; i < edges.size(); ++i) {
    const GraphEdge& e = edges[i];
    if (e.crossing == crossing && e.region == region &&
        e.quadrant == quadrant)
      return static_cast<int>(i);
  }
  return -1;
}

FCGraph build_fc_graph(const LinkDiagram& d) {
  FCGraph g;
  for (const auto& [cid, cr] : d.crossings()) {
    g.blacks.push_back(cid);
    for (int q = 0; q < 4; ++q)
      g.edges.push_back({cid, d.region_at(cid, q), q, 1, 0});
  }
  for (const Region& r : d.regions()) g.whites.push_back(r.id);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

FCGraph truncate(const LinkDiagram& d, FCGraph g, int segment) {
  const auto [r1, r2] = d.adjacent_regions(segment);
  if (r1 == r2)
    throw DegenerateError("segment " + std::to_string(segment) +
                          " has the same region on both sides");
  g.absent_regions = {std::min(r1, r2), std::max(r1, r2)};
  g.distinguished_segment = segment;
  std::erase_if(g.whites, [&](int w) { return w == r1 || w == r2; });
  std::erase_if(g.edges, [&](const GraphEdge& e) {
    return e.region == r1 || e.region == r2;
  });
  return g;
}

FCGraph assign_weights(const LinkDiagram& d, FCGraph g) {
  for (GraphEdge& e : g.edges) {
    const bool positive = d.crossing_sign(e.crossing) > 0;
    if (e.quadrant == 2) {  // between the two outgoing darts
      e.sign = 1;
      e.dexp = positive ? 1 : -1;
    } else if (e.quadrant == 0) {  // between the two incoming darts
      e.sign = -1;
      e.dexp = positive ? -1 : 1;
    } else {
      e.sign = 1;
      e.dexp = 0;
    }
  }
  return g;
}

FCGraph truncated_graph(const LinkDiagram& d, int segment) {
  return assign_weights(d, truncate(d, build_fc_graph(d), segment));
}

FCGraph relabel_regions(FCGraph g, const std::map<int, int>& region_map) {
  for (int& w : g.whites) w = region_map.at(w);
  for (int& w : g.absent_regions) w = region_map.at(w);
  for (GraphEdge& e : g.edges) e.region = region_map.at(e.region);
  std::sort(g.whites.begin(), g.whites.end());
  std::sort(g.absent_regions.begin(), g.absent_regions.end());
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::vector<FCGraph> components_of(const FCGraph& g) {
  // Union-find over blacks and whites; whites offset to keep ids disjoint.
  std::map<int, int> parent;
  auto key_b = [](int b) { return 2 * b; };
  auto key_w = [](int w) { return 2 * w + 1; };
  for (int b : g.blacks) parent[key_b(b)] = key_b(b);
  for (int w : g.whites) parent[key_w(w)] = key_w(w);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const GraphEdge& e : g.edges) {
    const int a = find(key_b(e.crossing)), b = find(key_w(e.region));
    if (a != b) parent[a] = b;
  }
  std::map<int, FCGraph> comps;
  for (int b : g.blacks) comps[find(key_b(b))].blacks.push_back(b);
  for (int w : g.whites) comps[find(key_w(w))].whites.push_back(w);
  for (const GraphEdge& e : g.edges)
    comps[find(key_b(e.crossing))].edges.push_back(e);
  std::vector<FCGraph> out;
  for (auto& [root, comp] : comps) out.push_back(std::move(comp));
  std::sort(out.begin(), out.end(), [](const FCGraph& a, const FCGraph& b) {
    const int ka = a.blacks.empty() ? INT32_MAX : a.blacks.front();
    const int kb = b.blacks.empty() ? INT32_MAX : b.blacks.front();
    return ka < kb;
  });
  return out;
}

namespace {

struct Enumerator {
  const FCGraph& g;
  const Caps& caps;
  std::vector<Matching> out;
  std::map<int, std::vector<int>> at_black;  // black -> edge indices
  std::map<int, std::vector<int>> at_white;
  std::map<int, int> black_deg, white_deg;  // live degrees
  std::map<int, int> black_match, white_match;  // vertex -> edge idx or -1
  std::vector<char> edge_dead;
  std::vector<int> chosen;

  explicit Enumerator(const FCGraph& graph, const Caps& c)
      : g(graph), caps(c), edge_dead(graph.edges.size(), 0) {
    for (size_t i = 0; i < g.edges.size(); ++i) {
      at_black[g.edges[i].crossing].push_back(static_cast<int>(i));
      at_white[g.edges[i].region].push_back(static_cast<int>(i));
    }
    for (int b : g.blacks) {
      black_match[b] = -1;
      black_deg[b] = static_cast<int>(at_black[b].size());
    }
    for (int w : g.whites) {
      white_match[w] = -1;
      white_deg[w] = static_cast<int>(at_white[w].size());
    }
  }

  // Removes an edge from the live graph; returns false on a dead end
  // (an unmatched vertex lost its last edge).
  bool kill_edge(int i, std::vector<int>& undo) {
    if (edge_dead[i]) return true;
    edge_dead[i] = 1;
    undo.push_back(i);
    const GraphEdge& e = g.edges[i];
    const bool b_ok = --black_deg[e.crossing] > 0 ||
                      black_match[e.crossing] != -1;
    const bool w_ok = --white_deg[e.region] > 0 || white_match[e.region] != -1;
    return b_ok && w_ok;
  }

  bool take_edge(int i, std::vector<int>& undo_edges,
                 std::vector<int>& undo_taken) {
    const GraphEdge& e = g.edges[i];
    black_match[e.crossing] = i;
    white_match[e.region] = i;
    chosen.push_back(i);
    undo_taken.push_back(i);
    for (int j : at_black[e.crossing])
      if (!kill_edge(j, undo_edges)) return false;
    for (int j : at_white[e.region])
      if (!kill_edge(j, undo_edges)) return false;
    return true;
  }

  void untake(const std::vector<int>& undo_edges,
              const std::vector<int>& undo_taken) {
    for (int i : undo_edges) {
      edge_dead[i] = 0;
      ++black_deg[g.edges[i].crossing];
      ++white_deg[g.edges[i].region];
    }
    for (int i : undo_taken) {
      black_match[g.edges[i].crossing] = -1;
      white_match[g.edges[i].region] = -1;
      chosen.pop_back();
    }
  }

  int forced_vertex_edge() const {
    for (const auto& [b, deg] : black_deg)
      if (black_match.at(b) == -1 && deg == 1)
        for (int i : at_black.at(b))
          if (!edge_dead[i]) return i;
    for (const auto& [w, deg] : white_deg)
      if (white_match.at(w) == -1 && deg == 1)
        for (int i : at_white.at(w))
          if (!edge_dead[i]) return i;
    return -1;
  }

  void emit() {
    if (static_cast<std::int64_t>(out.size()) >= caps.max_matchings)
      throw ResourceCapError("matching count exceeds cap of " +
                             std::to_string(caps.max_matchings));
    Matching m;
    m.edge_idx = chosen;
    std::sort(m.edge_idx.begin(), m.edge_idx.end());
    for (int i : m.edge_idx) {
      m.sign *= g.edges[i].sign;
      m.dexp += g.edges[i].dexp;
    }
    out.push_back(std::move(m));
  }

  void run() {
    std::vector<int> undo_edges, undo_taken;
    // Propagate forced choices before branching.
    bool dead = false;
    for (int i = forced_vertex_edge(); i != -1; i = forced_vertex_edge()) {
      if (!take_edge(i, undo_edges, undo_taken)) {
        dead = true;
        break;
      }
    }
    if (!dead) {
      int branch = -1;
      for (int b : g.blacks) {
        if (black_match[b] == -1) {
          branch = b;
          break;
        }
      }
      if (branch == -1) {
        emit();
      } else {
        for (int i : at_black[branch]) {
          if (edge_dead[i]) continue;
          std::vector<int> ue, ut;
          if (take_edge(i, ue, ut)) run();
          untake(ue, ut);
        }
      }
    }
    untake(undo_edges, undo_taken);
  }
};

}  // namespace

std::vector<Matching> enumerate_matchings(const FCGraph& g, const Caps& caps) {
  if (static_cast<int>(g.blacks.size()) > caps.max_crossings)
    throw ResourceCapError("diagram exceeds the crossing cap of " +
                           std::to_string(caps.max_crossings));
  if (g.blacks.size() != g.whites.size()) return {};
  if (g.blacks.empty()) return {Matching{}};
  Enumerator en(g, caps);
  en.run();
  return std::move(en.out);
}

LaurentPoly state_sum_of_graph(const FCGraph& g, const Caps& caps) {
  LaurentPoly sum;
  for (const Matching& m : enumerate_matchings(g, caps))
    sum.add_term(m.dexp, m.sign);
  return sum;
}

LaurentPoly state_sum(const LinkDiagram& d, int segment, const Caps& caps) {
  const LaurentPoly sum = state_sum_of_graph(truncated_graph(d, segment), caps);
  if (d.is_connected() && !sum.is_zero()) {
    if (sum.max_dexp() != -sum.min_dexp() || !uniform_parity(sum))
      throw InternalError("state sum support is not centered");
  }
  return sum;
}

LaurentPoly state_sum(const LinkDiagram& d) {
  return state_sum(d, d.canonical_segment());
}

bool sign_coherent(const std::vector<Matching>& ms) {
  std::map<int, int> sign_at;
  for (const Matching& m : ms) {
    auto [it, inserted] = sign_at.try_emplace(m.dexp, m.sign);
    if (!inserted && it->second != m.sign) return false;
  }
  return true;
}

namespace {

LaurentPoly det_bareiss(std::vector<std::vector<LaurentPoly>> m) {
  const size_t n = m.size();
  LaurentPoly det_sign = LaurentPoly::constant(1);
  LaurentPoly prev = LaurentPoly::constant(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap_row = k;
      for (size_t j = k + 1; j < n; ++j) {
        if (!m[j][k].is_zero()) {
          swap_row = j;
          break;
        }
      }
      if (swap_row == k) return {};  // whole column zero: singular
      std::swap(m[k], m[swap_row]);
      det_sign = -det_sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = divexact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  return det_sign * m[n - 1][n - 1];
}

}  // namespace

LaurentPoly determinant_oracle(const FCGraph& g) {
  if (g.blacks.size() != g.whites.size()) return {};
  const size_t n = g.blacks.size();
  std::map<int, size_t> brow, wcol;
  for (size_t i = 0; i < n; ++i) brow[g.blacks[i]] = i;
  for (size_t i = 0; i < n; ++i) wcol[g.whites[i]] = i;
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
  for (const GraphEdge& e : g.edges)
    m[brow[e.crossing]][wcol[e.region]].add_term(e.dexp, 1);
  return det_bareiss(std::move(m));
}

LaurentPoly determinant_oracle(const LinkDiagram& d, int segment) {
  return determinant_oracle(truncated_graph(d, segment));
}

std::map<int, LaurentPoly> per_segment_sums(const LinkDiagram& d,
                                            const Caps& caps) {
  std::map<int, LaurentPoly> sums;
  for (const auto& [e, s] : d.segments()) sums[e] = state_sum(d, e, caps);
  return sums;
}

bool segment_independence_check(const LinkDiagram& d, const Caps& caps) {
  const auto sums = per_segment_sums(d, caps);
  return std::all_of(sums.begin(), sums.end(), [&](const auto& kv) {
    return kv.second == sums.begin()->second;
  });
}

}  // namespace alexdimer
