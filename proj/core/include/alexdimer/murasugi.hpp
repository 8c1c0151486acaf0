#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alexdimer/diagram.hpp"
#include "alexdimer/dimer.hpp"
#include "alexdimer/laurent.hpp"

namespace alexdimer {

// A corner incidence singled out by the split: the turn corner of an
// on-circle crossing into the bridge region shared by its run.  Deleting
// all of them disconnects the two sides of the truncated graph.
struct FlockEdge {
  int number = 0;  // 1-based rank by crossing position along the trace
  int crossing = 0;
  int region = 0;
  int quadrant = 0;
  Side region_side = Side::RPrime;  // side of `region`
  auto operator<=>(const FlockEdge&) const = default;
};

// Decomposition of a connected diagram along a two-sided Seifert circle.
// The on-circle crossings form 2l maximal same-side runs X_1,Y_1,..,X_l,Y_l
// (X on the prime side), read from the distinguished segment so that X_1
// comes first.  Smoothing every double-prime crossing yields `prime`, and
// vice versa; both keep their parent crossing ids.
struct MurasugiSplit {
  int circle = 0;
  int length = 0;   // l
  int segment = 0;  // smallest mixed segment of the circle
  std::vector<int> trace;                // on-circle crossings in walk order
  std::vector<std::vector<int>> x_runs;  // prime-side runs X_1..X_l
  std::vector<std::vector<int>> y_runs;  // double-prime-side runs Y_1..Y_l
  std::vector<int> bridge_dprime;        // r''_j: common turn region of X_j
  std::vector<int> bridge_prime;         // r'_j: common turn region of Y_j
  std::vector<FlockEdge> flock;
  std::map<int, Side> sides;  // side of every crossing of the diagram
  LinkDiagram prime;
  LinkDiagram dprime;
  int segment_prime = 0;   // image of `segment` in prime
  int segment_dprime = 0;  // image of `segment` in dprime
};

// ValidationError if the circle is one-sided or the diagram disconnected.
MurasugiSplit split_along(const LinkDiagram& d, int circle_id);

// Lowest-id two-sided circle, if any.
std::optional<int> lowest_t2_circle(const LinkDiagram& d);
// split_along at the lowest two-sided circle; LengthZeroError if none.
MurasugiSplit split_lowest(const LinkDiagram& d);

// Strata of the state sum by the number of flock edges a matching uses.
// Every matching uses equally many on both bridge families, so the keys
// are even; p0 is the flock-free stratum and pmax (for l >= 2) the one
// saturating all 2(l-1) present bridge regions.
struct StateSumDecomposition {
  LaurentPoly total;
  LaurentPoly p0;
  LaurentPoly pmax;
  LaurentPoly remainder;  // total - p0 - pmax (zero when l <= 2)
  std::map<int, LaurentPoly> strata;
  std::map<int, std::size_t> stratum_sizes;
};

StateSumDecomposition decompose_state_sum(const LinkDiagram& d,
                                          const MurasugiSplit& s,
                                          const Caps& caps = {});

// Subgraphs forcing every bridge region onto a flock edge: delete the
// non-flock edges at all bridge whites; the rest splits by side.  Requires
// l >= 2 (LengthError otherwise).
std::pair<FCGraph, FCGraph> build_tilde_graphs(const LinkDiagram& d,
                                               const MurasugiSplit& s);

// Diagram realizations of the tilde graphs: in each summand the split
// circle's image is cut into one loop per same-side run (fresh edge ids).
// A side is absent when the surgered diagram fails validation.
struct TildeDiagrams {
  std::optional<LinkDiagram> prime;
  std::optional<LinkDiagram> dprime;
  int segment_prime = -1;   // loop edge around X_1
  int segment_dprime = -1;  // loop edge around Y_l
};

TildeDiagrams swap_move_diagrams(const LinkDiagram& d, const MurasugiSplit& s);

// Labeled equality of two incidence graphs: identical black sets, matching
// per-corner edges and weights, and a consistent bijective correspondence
// of white vertices.  Fills *white_map (a-region -> b-region) on success.
bool graphs_match_by_corners(const FCGraph& a, const FCGraph& b,
                             std::map<int, int>* white_map = nullptr);

// Deleting the flock splits the truncated graph into the two summands'
// truncated graphs, matched corner by corner.
bool verify_flock_deletion(const LinkDiagram& d, const MurasugiSplit& s);

// Histogram of matchings by flock count; InternalError if some matching
// uses unequal numbers on the two bridge families.
std::map<int, std::size_t> flock_histogram(const LinkDiagram& d,
                                           const MurasugiSplit& s,
                                           const Caps& caps = {});
// True when every matching is balanced across the families (hence every
// flock count even) and every flock edge carries weight 1.
bool verify_flock_parity(const LinkDiagram& d, const MurasugiSplit& s,
                         const Caps& caps = {});

// p0 equals the product of the two summand state sums (recomputed from the
// summand diagrams themselves).
bool verify_product_stratum(const MurasugiSplit& s,
                            const StateSumDecomposition& dec,
                            const Caps& caps = {});
// pmax equals the product of the two tilde graph sums (l >= 2; vacuous
// otherwise).
bool verify_saturated_stratum(const LinkDiagram& d, const MurasugiSplit& s,
                              const StateSumDecomposition& dec,
                              const Caps& caps = {});
// The truncated tilde diagrams reproduce the tilde graphs corner by corner
// (skipping a side whose surgered diagram is invalid or disconnected).
bool verify_tilde_diagrams(const LinkDiagram& d, const MurasugiSplit& s);

// Summands inherit alternation, the split circle's image is one-sided in
// both, and the number of two-sided circles drops by exactly one.
bool verify_summand_structure(const LinkDiagram& d, const MurasugiSplit& s);

// The strata never cancel, and |total| dominates |prime|*|dprime| plus (for
// l >= 2) |pmax| coefficientwise.
bool verify_noncanceling(const MurasugiSplit& s,
                         const StateSumDecomposition& dec,
                         const Caps& caps = {});
// Support of the state sum equals the support of the flock-free stratum.
bool verify_support(const StateSumDecomposition& dec);

// Mechanically checked recursion certifying that |state sum| is trapezoidal
// with centered support.  Zero: split diagram.  OneSided: no two-sided
// circle.  Product: split of length 1, poly = product of the children.
// TwoTerm: length 2, poly = p0 + pmax with noncanceling parts; children are
// the two summands followed by the two tilde sides (recursive certificates
// when the surgered diagram exists and is connected, GraphLeaf otherwise).
// HypothesisError on non-alternating input or a split of length >= 3;
// InternalError if any certified identity fails.
struct TrapezoidCertificate {
  enum class Kind { Zero, OneSided, Product, TwoTerm, GraphLeaf };
  Kind kind = Kind::Zero;
  std::string diagram;
  LaurentPoly poly;
  int circle = -1;
  int length = 0;
  std::vector<LaurentPoly> parts;  // factors (Product) or strata (TwoTerm)
  std::vector<TrapezoidCertificate> children;
  bool trapezoidal = false;
  bool centered = false;
};

TrapezoidCertificate certify_trapezoid(const LinkDiagram& d,
                                       const Caps& caps = {});

// One row per set of flock edges realized by some matching.
struct FlockSubsetRow {
  std::vector<int> subset;  // flock numbers, ascending
  std::size_t matchings = 0;
  LaurentPoly sum;
};

std::vector<FlockSubsetRow> explore_flock_subsets(const LinkDiagram& d,
                                                  const MurasugiSplit& s,
                                                  const Caps& caps = {});

// Binary refinement tree over the flock in number order: the node at prefix
// b_1..b_k collects the matchings using flock edge j exactly when b_j = 1.
// Every level partitions the matchings, so each level sums to the total.
struct ExploreNode {
  std::size_t matchings = 0;
  LaurentPoly sum;
};

std::map<std::string, ExploreNode> explore_tree(const LinkDiagram& d,
                                                const MurasugiSplit& s,
                                                const Caps& caps = {});

// Middle-strata summary for a diagram: what is left between the flock-free
// and saturated strata at its lowest two-sided circle.
struct RemainderObservation {
  bool applicable = false;  // diagram has a two-sided circle
  int circle = -1;
  int length = 0;
  LaurentPoly remainder;
  bool remainder_zero = true;
  bool noncanceling = true;
};

RemainderObservation remainder_observation(const LinkDiagram& d,
                                           const Caps& caps = {});

}  // namespace alexdimer
