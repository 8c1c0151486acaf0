#include "alexdimer/murasugi.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace alexdimer {

namespace {

int positive_mod(int a, int n) { return ((a % n) + n) % n; }

struct EdgeUnion {
  std::map<int, int> parent;

  int find(int x) {
    if (parent.try_emplace(x, x).second) return x;
    int root = x;
    while (parent[root] != root) root = parent[root];
    while (parent[x] != root) {
      const int next = parent[x];
      parent[x] = root;
      x = next;
    }
    return root;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
  }
};

// Seifert-smooth every crossing on side `remove`; kept crossings keep their
// ids, edges collapse to the smallest id of their merged class, and pure
// loops disappear.  Returns the diagram and the image of `track_edge`.
std::pair<LinkDiagram, int> smooth_side(const LinkDiagram& d,
                                        const std::map<int, Side>& sides,
                                        Side remove, const char* suffix,
                                        int track_edge) {
  EdgeUnion uf;
  for (const auto& [cid, cr] : d.crossings()) {
    if (sides.at(cid) != remove) continue;
    for (int p = 0; p < 4; ++p)
      if (cr.darts[p].dir == Dir::In)
        uf.unite(cr.darts[p].edge,
                 cr.darts[d.paired_out_slot(cid, p)].edge);
  }
  std::map<int, int> least;  // class root -> smallest member
  for (const auto& [e, seg] : d.segments()) {
    const int root = uf.find(e);
    auto [it, fresh] = least.try_emplace(root, e);
    if (!fresh && e < it->second) it->second = e;
  }
  const auto rep = [&](int e) { return least.at(uf.find(e)); };
  std::map<int, Crossing> kept;
  for (const auto& [cid, cr] : d.crossings()) {
    if (sides.at(cid) == remove) continue;
    Crossing k = cr;
    for (Dart& dart : k.darts) dart.edge = rep(dart.edge);
    kept.emplace(cid, k);
  }
  return {LinkDiagram(d.name() + suffix, std::move(kept)), rep(track_edge)};
}

std::map<std::pair<int, int>, int> corner_index(const FCGraph& g) {
  std::map<std::pair<int, int>, int> m;
  for (std::size_t k = 0; k < g.edges.size(); ++k)
    m[{g.edges[k].crossing, g.edges[k].quadrant}] = static_cast<int>(k);
  return m;
}

void sort_graph(FCGraph& g) {
  std::sort(g.blacks.begin(), g.blacks.end());
  std::sort(g.whites.begin(), g.whites.end());
  std::sort(g.edges.begin(), g.edges.end());
}

void append_graph(FCGraph& dst, const FCGraph& part) {
  dst.blacks.insert(dst.blacks.end(), part.blacks.begin(), part.blacks.end());
  dst.whites.insert(dst.whites.end(), part.whites.begin(), part.whites.end());
  dst.edges.insert(dst.edges.end(), part.edges.begin(), part.edges.end());
}

struct FlockIndexSets {
  std::set<int> prime;   // indices of flock edges at r'_j whites
  std::set<int> dprime;  // indices of flock edges at r''_j whites
};

FlockIndexSets flock_indices(const FCGraph& g, const MurasugiSplit& s) {
  FlockIndexSets fs;
  for (const FlockEdge& f : s.flock) {
    const int idx = g.find_edge(f.crossing, f.region, f.quadrant);
    if (idx < 0)
      throw InternalError("flock edge missing from the truncated graph");
    (f.region_side == Side::RPrime ? fs.prime : fs.dprime).insert(idx);
  }
  return fs;
}

std::pair<int, int> flock_counts(const Matching& m, const FlockIndexSets& fs) {
  int cp = 0, cd = 0;
  for (const int idx : fs.prime)
    if (std::binary_search(m.edge_idx.begin(), m.edge_idx.end(), idx)) ++cp;
  for (const int idx : fs.dprime)
    if (std::binary_search(m.edge_idx.begin(), m.edge_idx.end(), idx)) ++cd;
  return {cp, cd};
}

int t2_count(const LinkDiagram& d) {
  int k = 0;
  for (const SeifertCircle& c : d.seifert_circles())
    if (d.circle_type(c) == CircleType::T2) ++k;
  return k;
}

}  // namespace

MurasugiSplit split_along(const LinkDiagram& d, int circle_id) {
  if (!d.is_connected())
    throw ValidationError("split requires a connected diagram");
  const auto& circles = d.seifert_circles();
  if (circle_id < 0 || circle_id >= static_cast<int>(circles.size()))
    throw ValidationError("no Seifert circle with id " +
                          std::to_string(circle_id));
  const SeifertCircle& c = circles[static_cast<std::size_t>(circle_id)];
  if (d.circle_type(c) != CircleType::T2)
    throw ValidationError("circle " + std::to_string(circle_id) +
                          " is one-sided");
  const int n = static_cast<int>(c.crossings_on.size());
  std::map<int, int> pos_on_circle;
  for (int k = 0; k < n; ++k) pos_on_circle[c.crossings_on[k]] = k;
  if (static_cast<int>(pos_on_circle.size()) != n)
    throw ValidationError("circle " + std::to_string(circle_id) +
                          " passes through a crossing twice");

  const auto colors = d.side_classification(c);
  const int l = d.t2_length(c);
  if (l == 0) throw LengthZeroError("circle has no mixed segments");
  const auto mixed = d.mixed_segments(c, colors);
  const int i = *std::min_element(mixed.begin(), mixed.end());
  int k0 = -1;
  for (int k = 0; k < n; ++k)
    if (c.segments[k] == i) k0 = k;

  // Side of every crossing: majority of quadrant colors on the circle,
  // the unanimous color elsewhere.
  std::map<int, Side> sides;
  for (const auto& [cid, cr] : d.crossings()) {
    if (pos_on_circle.count(cid)) {
      sides[cid] = d.belongs_to(c, colors, cid);
      continue;
    }
    const Side s0 = colors.at(d.region_at(cid, 0));
    for (int q = 1; q < 4; ++q)
      if (colors.at(d.region_at(cid, q)) != s0)
        throw InternalError("off-circle crossing with mixed quadrant sides");
    sides[cid] = s0;
  }

  // Walk the circle starting at the distinguished segment, in whichever
  // direction meets a prime-side crossing first.
  const int head = c.crossings_on[k0];
  const int tail = c.crossings_on[positive_mod(k0 - 1, n)];
  if (sides.at(head) == sides.at(tail))
    throw InternalError("distinguished segment is not mixed");
  const bool forward = sides.at(head) == Side::RPrime;
  std::vector<int> trace(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p)
    trace[static_cast<std::size_t>(p)] =
        c.crossings_on[positive_mod(forward ? k0 + p : k0 - 1 - p, n)];

  std::vector<std::vector<int>> runs;
  for (int p = 0; p < n; ++p) {
    const int x = trace[static_cast<std::size_t>(p)];
    if (p > 0 && sides.at(x) == sides.at(trace[static_cast<std::size_t>(p - 1)]))
      runs.back().push_back(x);
    else
      runs.push_back({x});
  }
  if (static_cast<int>(runs.size()) != 2 * l)
    throw InternalError("run count disagrees with the mixed-segment count");
  std::vector<std::vector<int>> x_runs, y_runs;
  for (std::size_t j = 0; j < runs.size(); ++j) {
    const Side expect = j % 2 == 0 ? Side::RPrime : Side::RDoublePrime;
    if (sides.at(runs[j][0]) != expect)
      throw InternalError("runs do not alternate sides");
    (j % 2 == 0 ? x_runs : y_runs).push_back(std::move(runs[j]));
  }

  // Each run turns into a single region across the circle.
  const auto turn_q = [&](int x) {
    const int k = pos_on_circle.at(x);
    return quadrant_between(c.in_slot[static_cast<std::size_t>(k)],
                            c.out_slot[static_cast<std::size_t>(k)]);
  };
  const auto common_turn_region = [&](const std::vector<int>& run) {
    const int r = d.region_at(run[0], turn_q(run[0]));
    for (const int x : run)
      if (d.region_at(x, turn_q(x)) != r)
        throw InternalError("turn region varies along a run");
    return r;
  };
  std::vector<int> bridge_dprime, bridge_prime;
  for (const auto& run : x_runs) bridge_dprime.push_back(common_turn_region(run));
  for (const auto& run : y_runs) bridge_prime.push_back(common_turn_region(run));

  const auto [ra, rb] = d.adjacent_regions(i);
  if (std::set<int>{ra, rb} !=
      std::set<int>{bridge_dprime.front(), bridge_prime.back()})
    throw InternalError("bridge regions do not flank the distinguished segment");
  for (std::size_t j = 1; j < bridge_dprime.size(); ++j)
    if (bridge_dprime[j] == ra || bridge_dprime[j] == rb)
      throw InternalError("interior bridge region is absent");
  for (std::size_t j = 0; j + 1 < bridge_prime.size(); ++j)
    if (bridge_prime[j] == ra || bridge_prime[j] == rb)
      throw InternalError("interior bridge region is absent");

  std::vector<FlockEdge> flock;
  for (std::size_t j = 1; j < x_runs.size(); ++j)
    for (const int x : x_runs[j])
      flock.push_back({0, x, bridge_dprime[j], turn_q(x), Side::RDoublePrime});
  for (std::size_t j = 0; j + 1 < y_runs.size(); ++j)
    for (const int y : y_runs[j])
      flock.push_back({0, y, bridge_prime[j], turn_q(y), Side::RPrime});
  std::map<int, int> trace_pos;
  for (int p = 0; p < n; ++p) trace_pos[trace[static_cast<std::size_t>(p)]] = p;
  std::sort(flock.begin(), flock.end(),
            [&](const FlockEdge& a, const FlockEdge& b) {
              return trace_pos.at(a.crossing) < trace_pos.at(b.crossing);
            });
  for (std::size_t t = 0; t < flock.size(); ++t)
    flock[t].number = static_cast<int>(t) + 1;

  auto prime_pair = smooth_side(d, sides, Side::RDoublePrime, "'", i);
  auto dprime_pair = smooth_side(d, sides, Side::RPrime, "''", i);
  if (!prime_pair.first.is_connected() || !dprime_pair.first.is_connected())
    throw InternalError("summand diagram is disconnected");

  return MurasugiSplit{circle_id,
                       l,
                       i,
                       std::move(trace),
                       std::move(x_runs),
                       std::move(y_runs),
                       std::move(bridge_dprime),
                       std::move(bridge_prime),
                       std::move(flock),
                       std::move(sides),
                       std::move(prime_pair.first),
                       std::move(dprime_pair.first),
                       prime_pair.second,
                       dprime_pair.second};
}

std::optional<int> lowest_t2_circle(const LinkDiagram& d) {
  for (const SeifertCircle& c : d.seifert_circles())
    if (d.circle_type(c) == CircleType::T2) return c.id;
  return std::nullopt;
}

MurasugiSplit split_lowest(const LinkDiagram& d) {
  const auto c = lowest_t2_circle(d);
  if (!c) throw LengthZeroError("diagram has no two-sided circle");
  return split_along(d, *c);
}

StateSumDecomposition decompose_state_sum(const LinkDiagram& d,
                                          const MurasugiSplit& s,
                                          const Caps& caps) {
  const FCGraph g = truncated_graph(d, s.segment);
  const FlockIndexSets fs = flock_indices(g, s);
  StateSumDecomposition dec;
  for (const Matching& m : enumerate_matchings(g, caps)) {
    const auto [cp, cd] = flock_counts(m, fs);
    if (cp != cd)
      throw InternalError("matching uses the bridge families unequally");
    dec.strata[cp + cd] += m.weight();
    ++dec.stratum_sizes[cp + cd];
  }
  for (const auto& [k, p] : dec.strata) dec.total += p;
  if (const auto it = dec.strata.find(0); it != dec.strata.end())
    dec.p0 = it->second;
  if (s.length >= 2) {
    const int kmax = 2 * (s.length - 1);
    if (const auto it = dec.strata.find(kmax); it != dec.strata.end())
      dec.pmax = it->second;
  }
  dec.remainder = dec.total - dec.p0 - dec.pmax;
  return dec;
}

std::pair<FCGraph, FCGraph> build_tilde_graphs(const LinkDiagram& d,
                                               const MurasugiSplit& s) {
  if (s.length < 2)
    throw LengthError("tilde graphs need a split of length >= 2");
  const FCGraph g = truncated_graph(d, s.segment);
  std::set<int> bridges;
  for (std::size_t j = 1; j < s.bridge_dprime.size(); ++j)
    bridges.insert(s.bridge_dprime[j]);
  for (std::size_t j = 0; j + 1 < s.bridge_prime.size(); ++j)
    bridges.insert(s.bridge_prime[j]);
  std::set<std::tuple<int, int, int>> fl;
  for (const FlockEdge& f : s.flock)
    fl.insert({f.crossing, f.region, f.quadrant});

  FCGraph cut = g;
  std::erase_if(cut.edges, [&](const GraphEdge& e) {
    return bridges.count(e.region) > 0 &&
           fl.count({e.crossing, e.region, e.quadrant}) == 0;
  });

  FCGraph gp, gpp;
  gp.absent_regions = gpp.absent_regions = g.absent_regions;
  gp.distinguished_segment = gpp.distinguished_segment =
      g.distinguished_segment;
  for (const FCGraph& part : components_of(cut)) {
    if (part.blacks.empty())
      throw InternalError("tilde component without crossings");
    const Side side = s.sides.at(part.blacks[0]);
    for (const int b : part.blacks)
      if (s.sides.at(b) != side)
        throw InternalError("tilde component mixes sides");
    append_graph(side == Side::RPrime ? gp : gpp, part);
  }
  if (gp.blacks.size() + gpp.blacks.size() != g.blacks.size() ||
      gp.whites.size() + gpp.whites.size() != g.whites.size())
    throw InternalError("tilde components do not cover the graph");
  sort_graph(gp);
  sort_graph(gpp);
  return {std::move(gp), std::move(gpp)};
}

namespace {

// Cut the image of the split circle into one loop per run: the in-dart at
// each run's first crossing and the out-dart at its last are rewired onto a
// fresh edge, id base + run index.
std::optional<LinkDiagram> cut_into_loops(
    const LinkDiagram& sub, int seg,
    const std::vector<std::vector<int>>& groups, int base,
    const char* suffix) {
  const SeifertCircle& c = sub.circle_of_edge(seg);
  const int n = static_cast<int>(c.crossings_on.size());
  std::map<int, int> grp;
  for (std::size_t j = 0; j < groups.size(); ++j)
    for (const int x : groups[j]) grp[x] = static_cast<int>(j);
  std::size_t total = 0;
  for (const auto& run : groups) total += run.size();
  if (static_cast<std::size_t>(n) != total)
    throw InternalError("circle image size disagrees with the runs");
  for (const int x : c.crossings_on)
    if (!grp.count(x))
      throw InternalError("crossing on the circle image without a run");

  auto crossings = sub.crossings();
  int boundaries = 0;
  for (int p = 0; p < n; ++p) {
    const int prev = positive_mod(p - 1, n);
    const int head = c.crossings_on[static_cast<std::size_t>(p)];
    const int tail = c.crossings_on[static_cast<std::size_t>(prev)];
    if (grp.at(head) == grp.at(tail)) continue;
    ++boundaries;
    crossings.at(head).darts[static_cast<std::size_t>(
        c.in_slot[static_cast<std::size_t>(p)])].edge = base + grp.at(head);
    crossings.at(tail).darts[static_cast<std::size_t>(
        c.out_slot[static_cast<std::size_t>(prev)])].edge =
        base + grp.at(tail);
  }
  if (boundaries != static_cast<int>(groups.size()))
    throw InternalError("runs are not contiguous on the circle image");
  try {
    return LinkDiagram(sub.name() + suffix, std::move(crossings));
  } catch (const ValidationError&) {
    return std::nullopt;
  }
}

}  // namespace

TildeDiagrams swap_move_diagrams(const LinkDiagram& d,
                                 const MurasugiSplit& s) {
  if (s.length < 2)
    throw LengthError("swap moves need a split of length >= 2");
  const int base = d.segments().rbegin()->first + 1;
  TildeDiagrams out;
  out.segment_prime = base;                  // loop around X_1
  out.segment_dprime = base + s.length - 1;  // loop around Y_l
  out.prime = cut_into_loops(s.prime, s.segment_prime, s.x_runs, base, "~");
  out.dprime = cut_into_loops(s.dprime, s.segment_dprime, s.y_runs, base, "~");
  return out;
}

bool graphs_match_by_corners(const FCGraph& a, const FCGraph& b,
                             std::map<int, int>* white_map) {
  if (a.blacks != b.blacks) return false;
  if (a.whites.size() != b.whites.size() || a.edges.size() != b.edges.size())
    return false;
  const auto ca = corner_index(a);
  const auto cb = corner_index(b);
  std::map<int, int> fwd, rev;
  for (const int x : a.blacks) {
    for (int q = 0; q < 4; ++q) {
      const auto ia = ca.find({x, q});
      const auto ib = cb.find({x, q});
      if ((ia == ca.end()) != (ib == cb.end())) return false;
      if (ia == ca.end()) continue;
      const GraphEdge& ea = a.edges[static_cast<std::size_t>(ia->second)];
      const GraphEdge& eb = b.edges[static_cast<std::size_t>(ib->second)];
      if (ea.sign != eb.sign || ea.dexp != eb.dexp) return false;
      const auto [fit, fnew] = fwd.try_emplace(ea.region, eb.region);
      if (!fnew && fit->second != eb.region) return false;
      const auto [rit, rnew] = rev.try_emplace(eb.region, ea.region);
      if (!rnew && rit->second != ea.region) return false;
    }
  }
  if (fwd.size() != a.whites.size()) return false;
  if (white_map) *white_map = fwd;
  return true;
}

bool verify_flock_deletion(const LinkDiagram& d, const MurasugiSplit& s) {
  const FCGraph g = truncated_graph(d, s.segment);
  std::set<std::tuple<int, int, int>> fl;
  for (const FlockEdge& f : s.flock)
    fl.insert({f.crossing, f.region, f.quadrant});
  FCGraph cut = g;
  std::erase_if(cut.edges, [&](const GraphEdge& e) {
    return fl.count({e.crossing, e.region, e.quadrant}) > 0;
  });
  FCGraph up, upp;
  up.absent_regions = upp.absent_regions = g.absent_regions;
  up.distinguished_segment = upp.distinguished_segment =
      g.distinguished_segment;
  for (const FCGraph& part : components_of(cut)) {
    if (part.blacks.empty()) return false;
    const Side side = s.sides.at(part.blacks[0]);
    for (const int b : part.blacks)
      if (s.sides.at(b) != side) return false;
    append_graph(side == Side::RPrime ? up : upp, part);
  }
  sort_graph(up);
  sort_graph(upp);
  return graphs_match_by_corners(up, truncated_graph(s.prime,
                                                     s.segment_prime)) &&
         graphs_match_by_corners(upp, truncated_graph(s.dprime,
                                                      s.segment_dprime));
}

std::map<int, std::size_t> flock_histogram(const LinkDiagram& d,
                                           const MurasugiSplit& s,
                                           const Caps& caps) {
  const FCGraph g = truncated_graph(d, s.segment);
  const FlockIndexSets fs = flock_indices(g, s);
  std::map<int, std::size_t> hist;
  for (const Matching& m : enumerate_matchings(g, caps)) {
    const auto [cp, cd] = flock_counts(m, fs);
    if (cp != cd)
      throw InternalError("matching uses the bridge families unequally");
    ++hist[cp + cd];
  }
  return hist;
}

bool verify_flock_parity(const LinkDiagram& d, const MurasugiSplit& s,
                         const Caps& caps) {
  const FCGraph g = truncated_graph(d, s.segment);
  const FlockIndexSets fs = flock_indices(g, s);
  for (const auto& family : {fs.prime, fs.dprime})
    for (const int idx : family) {
      const GraphEdge& e = g.edges[static_cast<std::size_t>(idx)];
      if (e.sign != 1 || e.dexp != 0) return false;
    }
  for (const Matching& m : enumerate_matchings(g, caps)) {
    const auto [cp, cd] = flock_counts(m, fs);
    if (cp != cd) return false;
  }
  return true;
}

bool verify_product_stratum(const MurasugiSplit& s,
                            const StateSumDecomposition& dec,
                            const Caps& caps) {
  return dec.p0 == state_sum(s.prime, s.segment_prime, caps) *
                       state_sum(s.dprime, s.segment_dprime, caps);
}

bool verify_saturated_stratum(const LinkDiagram& d, const MurasugiSplit& s,
                              const StateSumDecomposition& dec,
                              const Caps& caps) {
  if (s.length < 2) return true;
  const auto [gp, gpp] = build_tilde_graphs(d, s);
  return dec.pmax ==
         state_sum_of_graph(gp, caps) * state_sum_of_graph(gpp, caps);
}

bool verify_tilde_diagrams(const LinkDiagram& d, const MurasugiSplit& s) {
  if (s.length < 2) return true;
  const auto [gp, gpp] = build_tilde_graphs(d, s);
  const TildeDiagrams td = swap_move_diagrams(d, s);
  bool ok = true;
  if (td.prime && td.prime->is_connected())
    ok = ok && graphs_match_by_corners(
                   truncated_graph(*td.prime, td.segment_prime), gp);
  if (td.dprime && td.dprime->is_connected())
    ok = ok && graphs_match_by_corners(
                   truncated_graph(*td.dprime, td.segment_dprime), gpp);
  return ok;
}

bool verify_summand_structure(const LinkDiagram& d, const MurasugiSplit& s) {
  if (d.is_alternating() &&
      !(s.prime.is_alternating() && s.dprime.is_alternating()))
    return false;
  const SeifertCircle& cp = s.prime.circle_of_edge(s.segment_prime);
  const SeifertCircle& cd = s.dprime.circle_of_edge(s.segment_dprime);
  if (s.prime.circle_type(cp) != CircleType::T1) return false;
  if (s.dprime.circle_type(cd) != CircleType::T1) return false;
  return t2_count(s.prime) + t2_count(s.dprime) == t2_count(d) - 1;
}

bool verify_noncanceling(const MurasugiSplit& s,
                         const StateSumDecomposition& dec, const Caps& caps) {
  if (!is_noncanceling_sum({dec.p0, dec.pmax, dec.remainder})) return false;
  LaurentPoly rhs = abs_poly(state_sum(s.prime, s.segment_prime, caps)) *
                    abs_poly(state_sum(s.dprime, s.segment_dprime, caps));
  if (s.length >= 2) rhs += abs_poly(dec.pmax);
  const LaurentPoly lhs = abs_poly(dec.total);
  for (const int e : support(rhs))
    if (lhs.coeff(e) < rhs.coeff(e)) return false;
  return true;
}

bool verify_support(const StateSumDecomposition& dec) {
  return support(dec.total) == support(dec.p0);
}

namespace {

using Kind = TrapezoidCertificate::Kind;

void check_shape(TrapezoidCertificate& node) {
  if (node.poly.is_zero()) {
    node.trapezoidal = node.centered = true;
    return;
  }
  node.centered = node.poly.max_dexp() == -node.poly.min_dexp() &&
                  uniform_parity(node.poly);
  node.trapezoidal = is_trapezoidal(coeff_seq(abs_poly(node.poly)));
  if (!node.centered || !node.trapezoidal)
    throw InternalError("certificate shape check failed for " + node.diagram);
}

void check_part_shape(const LaurentPoly& p, const char* what) {
  if (p.is_zero()) return;
  if (p.max_dexp() != -p.min_dexp() || !uniform_parity(p) ||
      !is_trapezoidal(coeff_seq(abs_poly(p))))
    throw InternalError(std::string(what) +
                        " stratum is not a centered trapezoid");
}

TrapezoidCertificate tilde_child(const FCGraph& g,
                                 const std::optional<LinkDiagram>& t, int seg,
                                 const Caps& caps) {
  const LaurentPoly sum = state_sum_of_graph(g, caps);
  if (t && t->is_connected()) {
    if (!graphs_match_by_corners(truncated_graph(*t, seg), g))
      throw InternalError("tilde diagram does not reproduce its graph");
    TrapezoidCertificate child = certify_trapezoid(*t, caps);
    if (child.poly != sum)
      throw InternalError("tilde diagram sum differs from the graph sum");
    return child;
  }
  TrapezoidCertificate leaf;
  leaf.kind = Kind::GraphLeaf;
  leaf.diagram = t ? t->name() : "(unrealizable)";
  leaf.poly = sum;
  if (sum.is_zero()) {
    leaf.trapezoidal = leaf.centered = true;
  } else {
    leaf.centered =
        sum.max_dexp() == -sum.min_dexp() && uniform_parity(sum);
    leaf.trapezoidal = is_trapezoidal(coeff_seq(abs_poly(sum)));
  }
  return leaf;
}

}  // namespace

TrapezoidCertificate certify_trapezoid(const LinkDiagram& d,
                                       const Caps& caps) {
  if (!d.is_alternating())
    throw HypothesisError("diagram " + d.name() + " is not alternating");
  TrapezoidCertificate node;
  node.diagram = d.name();
  if (!d.is_connected()) {
    node.kind = Kind::Zero;
    node.poly =
        state_sum_of_graph(truncated_graph(d, d.canonical_segment()), caps);
    if (!node.poly.is_zero())
      throw InternalError("split diagram with nonzero state sum");
    check_shape(node);
    return node;
  }
  node.poly = state_sum(d, d.canonical_segment(), caps);
  check_shape(node);
  const auto c = lowest_t2_circle(d);
  if (!c) {
    node.kind = Kind::OneSided;
    return node;
  }
  const MurasugiSplit s = split_along(d, *c);
  node.circle = *c;
  node.length = s.length;
  if (s.length >= 3)
    throw HypothesisError("diagram " + d.name() + " splits with length " +
                          std::to_string(s.length));
  const StateSumDecomposition dec = decompose_state_sum(d, s, caps);
  if (!verify_product_stratum(s, dec, caps))
    throw InternalError("flock-free stratum is not the summand product");
  TrapezoidCertificate left = certify_trapezoid(s.prime, caps);
  TrapezoidCertificate right = certify_trapezoid(s.dprime, caps);
  if (left.poly * right.poly != dec.p0)
    throw InternalError("certified summands do not multiply to the stratum");
  if (s.length == 1) {
    node.kind = Kind::Product;
    if (dec.p0 != node.poly)
      throw InternalError("length-1 split is not a plain product");
    node.parts = {left.poly, right.poly};
    node.children.push_back(std::move(left));
    node.children.push_back(std::move(right));
    return node;
  }
  node.kind = Kind::TwoTerm;
  if (!dec.remainder.is_zero())
    throw InternalError("length-2 split with middle strata");
  if (!verify_saturated_stratum(d, s, dec, caps))
    throw InternalError("saturated stratum is not the tilde product");
  if (!is_noncanceling_sum({dec.p0, dec.pmax}))
    throw InternalError("the two strata cancel");
  check_part_shape(dec.p0, "flock-free");
  check_part_shape(dec.pmax, "saturated");
  node.parts = {dec.p0, dec.pmax};
  node.children.push_back(std::move(left));
  node.children.push_back(std::move(right));
  const auto [gp, gpp] = build_tilde_graphs(d, s);
  const TildeDiagrams td = swap_move_diagrams(d, s);
  node.children.push_back(tilde_child(gp, td.prime, td.segment_prime, caps));
  node.children.push_back(
      tilde_child(gpp, td.dprime, td.segment_dprime, caps));
  return node;
}

std::vector<FlockSubsetRow> explore_flock_subsets(const LinkDiagram& d,
                                                  const MurasugiSplit& s,
                                                  const Caps& caps) {
  const FCGraph g = truncated_graph(d, s.segment);
  std::map<int, int> number_of_idx;
  for (const FlockEdge& f : s.flock) {
    const int idx = g.find_edge(f.crossing, f.region, f.quadrant);
    if (idx < 0)
      throw InternalError("flock edge missing from the truncated graph");
    number_of_idx[idx] = f.number;
  }
  std::map<std::vector<int>, FlockSubsetRow> rows;
  for (const Matching& m : enumerate_matchings(g, caps)) {
    std::vector<int> sub;
    for (const int ei : m.edge_idx)
      if (const auto it = number_of_idx.find(ei); it != number_of_idx.end())
        sub.push_back(it->second);
    std::sort(sub.begin(), sub.end());
    FlockSubsetRow& row = rows[sub];
    row.subset = sub;
    ++row.matchings;
    row.sum += m.weight();
  }
  std::vector<FlockSubsetRow> out;
  out.reserve(rows.size());
  for (auto& [key, row] : rows) out.push_back(std::move(row));
  return out;
}

std::map<std::string, ExploreNode> explore_tree(const LinkDiagram& d,
                                                const MurasugiSplit& s,
                                                const Caps& caps) {
  const FCGraph g = truncated_graph(d, s.segment);
  std::map<int, int> number_of_idx;
  for (const FlockEdge& f : s.flock) {
    const int idx = g.find_edge(f.crossing, f.region, f.quadrant);
    if (idx < 0)
      throw InternalError("flock edge missing from the truncated graph");
    number_of_idx[idx] = f.number;
  }
  const std::size_t m_count = s.flock.size();
  std::map<std::string, ExploreNode> nodes;
  for (const Matching& m : enumerate_matchings(g, caps)) {
    std::string bits(m_count, '0');
    for (const int ei : m.edge_idx)
      if (const auto it = number_of_idx.find(ei); it != number_of_idx.end())
        bits[static_cast<std::size_t>(it->second - 1)] = '1';
    for (std::size_t k = 0; k <= m_count; ++k) {
      ExploreNode& nd = nodes[bits.substr(0, k)];
      ++nd.matchings;
      nd.sum += m.weight();
    }
  }
  return nodes;
}

RemainderObservation remainder_observation(const LinkDiagram& d,
                                           const Caps& caps) {
  RemainderObservation o;
  const auto c = lowest_t2_circle(d);
  if (!c) return o;
  o.applicable = true;
  o.circle = *c;
  const MurasugiSplit s = split_along(d, *c);
  o.length = s.length;
  const StateSumDecomposition dec = decompose_state_sum(d, s, caps);
  o.remainder = dec.remainder;
  o.remainder_zero = dec.remainder.is_zero();
  o.noncanceling = is_noncanceling_sum({dec.p0, dec.pmax, dec.remainder});
  return o;
}

}  // namespace alexdimer
