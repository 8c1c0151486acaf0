#pragma once

#include <array>
#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "alexdimer/errors.hpp"

namespace alexdimer {

enum class Dir { In, Out };
enum class Strand { Over, Under };

// One of the four edge-ends meeting a crossing.
struct Dart {
  int edge = 0;
  Dir dir = Dir::In;
  Strand strand = Strand::Over;
};

// Darts in counterclockwise slot order.  Slots 0 and 2 carry one strand,
// slots 1 and 3 the other; each strand enters once and leaves once.
struct Crossing {
  std::array<Dart, 4> darts;
};

struct CornerRef {
  int crossing = 0;
  int pos = 0;  // slot (for a dart) or quadrant (for a region corner)
  auto operator<=>(const CornerRef&) const = default;
};

// An oriented edge of the diagram: tail is the corner holding its out-dart,
// head the corner holding its in-dart.
struct Segment {
  int edge = 0;
  CornerRef tail;
  CornerRef head;
};

// A face of the combinatorial map.  corners[k] = (crossing, quadrant) lists
// the quadrant occurrences in face-traversal order; boundary_edges[k] is the
// edge of the dart witnessing corners[k].
struct Region {
  int id = 0;
  std::vector<CornerRef> corners;
  std::vector<int> boundary_edges;
  std::set<int> edge_set;
};

// Oriented cycle traced through the orientation-respecting smoothing.
// crossings_on[k] is the crossing between segments[k] and segments[k+1];
// in_slot[k]/out_slot[k] are the arrival and departure slots there.
struct SeifertCircle {
  int id = 0;
  std::vector<int> segments;
  std::vector<int> crossings_on;
  std::vector<int> in_slot;
  std::vector<int> out_slot;
  std::set<int> segment_set;
};

enum class CircleType { T1, T2 };
enum class Side { RPrime, RDoublePrime };

// The quadrant flanked by two adjacent slots: {a,b} = {q, q+1 (mod 4)}.
int quadrant_between(int slot_a, int slot_b);

// Immutable oriented link diagram with all derived planar data computed at
// construction: segments, regions (faces), Seifert circles, connectivity.
// Crossing ids are the map keys (not required to be contiguous); region and
// circle ids are dense and deterministic.
class LinkDiagram {
 public:
  LinkDiagram(std::string name, std::map<int, Crossing> crossings);

  const std::string& name() const { return name_; }
  const std::map<int, Crossing>& crossings() const { return crossings_; }
  const std::map<int, Segment>& segments() const { return segments_; }
  const Segment& segment(int edge) const;
  const std::vector<Region>& regions() const { return regions_; }
  const Region& region(int id) const { return regions_.at(id); }
  const std::vector<SeifertCircle>& seifert_circles() const {
    return circles_;
  }
  const SeifertCircle& circle_of_edge(int edge) const;

  // Region occupying quadrant q of a crossing (between slots q and q+1).
  int region_at(int crossing, int quadrant) const;
  // The two regions flanking an edge (those adjacent to the segment).
  std::pair<int, int> adjacent_regions(int edge) const;

  bool is_connected() const { return num_components_ == 1; }
  int num_components() const { return num_components_; }

  int crossing_sign(int crossing) const;
  bool is_alternating() const;

  // For the in-dart at in_pos, the out-dart slot it smooths onto.
  int paired_out_slot(int crossing, int in_pos) const;

  CircleType circle_type(const SeifertCircle& c) const;

  // 2-coloring of all regions by the side of c they lie on; regions meet
  // across a segment of c with opposite colors, across any other segment
  // with equal colors.  The smallest region id is always colored RPrime.
  std::map<int, Side> side_classification(const SeifertCircle& c) const;

  // Side a crossing on c belongs to: the side holding the majority of its
  // four quadrant colors.  AmbiguityError on a 2/2 split.
  Side belongs_to(const SeifertCircle& c, const std::map<int, Side>& colors,
                  int crossing) const;
  Side belongs_to(const SeifertCircle& c, int crossing) const;

  // Segments of c whose endpoint crossings lie on opposite sides.
  std::vector<int> mixed_segments(const SeifertCircle& c,
                                  const std::map<int, Side>& colors) const;
  int t2_length(const SeifertCircle& c) const;

  // Smallest edge id whose two adjacent regions differ (always exists for
  // valid diagrams); the default distinguished segment.
  int canonical_segment() const;

 private:
  void validate() const;
  void derive();

  std::string name_;
  std::map<int, Crossing> crossings_;
  std::map<int, Segment> segments_;
  std::vector<Region> regions_;
  std::map<CornerRef, int> region_of_corner_;
  std::vector<SeifertCircle> circles_;
  std::map<int, int> circle_of_edge_;
  int num_components_ = 0;
};

}  // namespace alexdimer
