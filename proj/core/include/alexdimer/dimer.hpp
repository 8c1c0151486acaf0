#pragma once

#include <cstdint>
#include <vector>

#include "alexdimer/diagram.hpp"
#include "alexdimer/laurent.hpp"

namespace alexdimer {

// One incidence of a crossing with the region in one of its quadrants,
// carrying the weight monomial sign * t^(dexp/2).  Parallel incidences
// (same crossing and region through different quadrants) stay distinct.
struct GraphEdge {
  int crossing = 0;
  int region = 0;
  int quadrant = 0;
  int sign = 1;
  int dexp = 0;
  auto operator<=>(const GraphEdge&) const = default;
};

// Bipartite crossing-region incidence graph; truncation removes the two
// regions flanking the distinguished segment.
struct FCGraph {
  std::vector<int> blacks;         // crossing ids, ascending
  std::vector<int> whites;         // region ids, ascending
  std::vector<GraphEdge> edges;    // sorted by (crossing, region, quadrant)
  std::vector<int> absent_regions; // the deleted regions (empty before truncation)
  int distinguished_segment = 0;   // 0 before truncation

  bool operator==(const FCGraph&) const = default;
  // Index into edges, or -1.
  int find_edge(int crossing, int region, int quadrant) const;
};

struct Matching {
  std::vector<int> edge_idx;  // ascending indices into FCGraph::edges
  int sign = 1;
  int dexp = 0;

  LaurentPoly weight() const { return LaurentPoly::monomial(sign, dexp); }
};

struct Caps {
  std::int64_t max_matchings = 10'000'000;
  int max_crossings = 24;
};

FCGraph build_fc_graph(const LinkDiagram& d);

// DegenerateError if the segment's two flanking regions coincide.
FCGraph truncate(const LinkDiagram& d, FCGraph g, int segment);

// Quadrant rule: at a positive crossing the all-out quadrant weighs t^(1/2)
// and the all-in quadrant -t^(-1/2); at a negative crossing t^(-1/2) and
// -t^(1/2); the two mixed quadrants weigh 1.
FCGraph assign_weights(const LinkDiagram& d, FCGraph g);

FCGraph truncated_graph(const LinkDiagram& d, int segment);

// Rewrites region ids (vertices, edges, absent list) through the map.
FCGraph relabel_regions(FCGraph g, const std::map<int, int>& region_map);

// Connected components, ordered by smallest black id.
std::vector<FCGraph> components_of(const FCGraph& g);

// All perfect matchings in a deterministic order: branch on the lowest
// unmatched black vertex, try its edges by (region, quadrant), propagate
// forced degree-1 choices first.  ResourceCapError beyond the caps.
std::vector<Matching> enumerate_matchings(const FCGraph& g,
                                          const Caps& caps = {});

LaurentPoly state_sum_of_graph(const FCGraph& g, const Caps& caps = {});

// Sum of matching weights of the truncated graph at `segment`.  For a
// connected diagram the result's support is checked to be centered.
LaurentPoly state_sum(const LinkDiagram& d, int segment,
                      const Caps& caps = {});
// Uses the diagram's canonical segment (smallest edge id).
LaurentPoly state_sum(const LinkDiagram& d);

// All matchings of equal exponent carry equal sign (guaranteed for
// connected alternating diagrams).
bool sign_coherent(const std::vector<Matching>& ms);

// Determinant of the crossings x present-regions matrix whose entries are
// the unsigned weight sums of parallel incidences, computed exactly by
// fraction-free elimination.  Equals the state sum up to +-t^(m/2).
LaurentPoly determinant_oracle(const FCGraph& g);
LaurentPoly determinant_oracle(const LinkDiagram& d, int segment);

// state_sum agrees exactly across every choice of distinguished segment.
std::map<int, LaurentPoly> per_segment_sums(const LinkDiagram& d,
                                            const Caps& caps = {});
bool segment_independence_check(const LinkDiagram& d, const Caps& caps = {});

}  // namespace alexdimer
