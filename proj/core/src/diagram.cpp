#include "alexdimer/diagram.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace alexdimer {

namespace {

std::string corner_str(const CornerRef& c) {
  std::ostringstream os;
  os << "(" << c.crossing << "," << c.pos << ")";
  return os.str();
}

}  // namespace

int quadrant_between(int slot_a, int slot_b) {
  if ((slot_a + 1) % 4 == slot_b) return slot_a;
  if ((slot_b + 1) % 4 == slot_a) return slot_b;
  throw InternalError("quadrant_between: slots not adjacent");
}

LinkDiagram::LinkDiagram(std::string name, std::map<int, Crossing> crossings)
    : name_(std::move(name)), crossings_(std::move(crossings)) {
  validate();
  derive();
}

void LinkDiagram::validate() const {
  if (crossings_.empty()) throw ValidationError("diagram has no crossings");
  for (const auto& [cid, cr] : crossings_) {
    const auto& d = cr.darts;
    for (const Dart& dart : d) {
      if (dart.edge <= 0)
        throw ValidationError("crossing " + std::to_string(cid) +
                              ": edge ids must be positive");
    }
    if (d[0].strand != d[2].strand || d[1].strand != d[3].strand ||
        d[0].strand == d[1].strand)
      throw ValidationError("crossing " + std::to_string(cid) +
                            ": opposite slots must share a strand");
    if (d[0].dir == d[2].dir || d[1].dir == d[3].dir)
      throw ValidationError("crossing " + std::to_string(cid) +
                            ": each strand needs one in and one out dart");
  }
}

void LinkDiagram::derive() {
  // Segments: every edge id must occur exactly once as out and once as in.
  std::map<int, std::vector<std::pair<CornerRef, Dir>>> ends;
  for (const auto& [cid, cr] : crossings_)
    for (int p = 0; p < 4; ++p)
      ends[cr.darts[p].edge].push_back({{cid, p}, cr.darts[p].dir});
  for (const auto& [e, occ] : ends) {
    if (occ.size() != 2)
      throw ValidationError("edge " + std::to_string(e) + " listed " +
                            std::to_string(occ.size()) + " times");
    if (occ[0].second == occ[1].second)
      throw ValidationError("edge " + std::to_string(e) +
                            " needs one in and one out end");
    Segment s;
    s.edge = e;
    s.tail = occ[0].second == Dir::Out ? occ[0].first : occ[1].first;
    s.head = occ[0].second == Dir::In ? occ[0].first : occ[1].first;
    segments_[e] = s;
  }

  // Connected components of the underlying 4-valent graph.
  std::map<int, int> parent;
  for (const auto& [cid, cr] : crossings_) parent[cid] = cid;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [e, s] : segments_) {
    const int a = find(s.tail.crossing), b = find(s.head.crossing);
    if (a != b) parent[a] = b;
  }
  std::set<int> roots;
  for (const auto& [cid, cr] : crossings_) roots.insert(find(cid));
  num_components_ = static_cast<int>(roots.size());

  // Faces: orbits of corner -> opposite end of the next slot's edge.
  // The orbit through dart (c,q) is the region filling quadrant q.
  auto alpha = [&](const CornerRef& c) {
    const Segment& s = segments_.at(crossings_.at(c.crossing).darts[c.pos].edge);
    return c == s.tail ? s.head : s.tail;
  };
  for (const auto& [cid, cr] : crossings_) {
    for (int q = 0; q < 4; ++q) {
      const CornerRef seed{cid, q};
      if (region_of_corner_.count(seed)) continue;
      Region r;
      r.id = static_cast<int>(regions_.size());
      CornerRef cur = seed;
      do {
        region_of_corner_[cur] = r.id;
        r.corners.push_back(cur);
        const int e = crossings_.at(cur.crossing).darts[cur.pos].edge;
        r.boundary_edges.push_back(e);
        r.edge_set.insert(e);
        cur = alpha({cur.crossing, (cur.pos + 1) % 4});
      } while (cur != seed);
      regions_.push_back(std::move(r));
    }
  }

  // Euler check per component (each face stays within one component).
  std::map<int, std::array<long, 3>> vef;  // root -> {V, E, F}
  for (const auto& [cid, cr] : crossings_) ++vef[find(cid)][0];
  for (const auto& [e, s] : segments_) ++vef[find(s.tail.crossing)][1];
  for (const Region& r : regions_) ++vef[find(r.corners[0].crossing)][2];
  for (const auto& [root, counts] : vef) {
    if (counts[0] - counts[1] + counts[2] != 2)
      throw ValidationError("diagram component is not planar: V=" +
                            std::to_string(counts[0]) + " E=" +
                            std::to_string(counts[1]) + " F=" +
                            std::to_string(counts[2]));
  }

  // Seifert circles: follow each in-dart onto the out-dart it smooths to.
  for (const auto& [start, s0] : segments_) {
    if (circle_of_edge_.count(start)) continue;
    SeifertCircle c;
    c.id = static_cast<int>(circles_.size());
    int e = start;
    do {
      circle_of_edge_[e] = c.id;
      c.segments.push_back(e);
      c.segment_set.insert(e);
      const CornerRef head = segments_.at(e).head;
      const int out = paired_out_slot(head.crossing, head.pos);
      c.crossings_on.push_back(head.crossing);
      c.in_slot.push_back(head.pos);
      c.out_slot.push_back(out);
      e = crossings_.at(head.crossing).darts[out].edge;
    } while (e != start);
    circles_.push_back(std::move(c));
  }
}

const Segment& LinkDiagram::segment(int edge) const {
  auto it = segments_.find(edge);
  if (it == segments_.end())
    throw ValidationError("no segment with edge id " + std::to_string(edge));
  return it->second;
}

const SeifertCircle& LinkDiagram::circle_of_edge(int edge) const {
  auto it = circle_of_edge_.find(edge);
  if (it == circle_of_edge_.end())
    throw ValidationError("no segment with edge id " + std::to_string(edge));
  return circles_.at(it->second);
}

int LinkDiagram::region_at(int crossing, int quadrant) const {
  auto it = region_of_corner_.find({crossing, quadrant});
  if (it == region_of_corner_.end())
    throw InternalError("region_at: unknown corner " +
                        corner_str({crossing, quadrant}));
  return it->second;
}

std::pair<int, int> LinkDiagram::adjacent_regions(int edge) const {
  const Segment& s = segment(edge);
  return {region_of_corner_.at(s.tail), region_of_corner_.at(s.head)};
}

int LinkDiagram::crossing_sign(int crossing) const {
  const auto& d = crossings_.at(crossing).darts;
  const int over0 = d[0].strand == Strand::Over ? 0 : 1;
  const int over_out = d[over0].dir == Dir::Out ? over0 : over0 + 2;
  const int under0 = 1 - over0;
  const int under_out = d[under0].dir == Dir::Out ? under0 : under0 + 2;
  return under_out == (over_out + 1) % 4 ? 1 : -1;
}

bool LinkDiagram::is_alternating() const {
  for (const auto& [e, s] : segments_) {
    const Strand at_tail =
        crossings_.at(s.tail.crossing).darts[s.tail.pos].strand;
    const Strand at_head =
        crossings_.at(s.head.crossing).darts[s.head.pos].strand;
    if (at_tail == at_head) return false;
  }
  return true;
}

int LinkDiagram::paired_out_slot(int crossing, int in_pos) const {
  const auto& d = crossings_.at(crossing).darts;
  if (d[in_pos].dir != Dir::In)
    throw InternalError("paired_out_slot: slot is not an in-dart");
  const int left = (in_pos + 1) % 4, right = (in_pos + 3) % 4;
  return d[left].dir == Dir::Out ? left : right;
}

CircleType LinkDiagram::circle_type(const SeifertCircle& c) const {
  for (const Region& r : regions_)
    if (r.edge_set == c.segment_set) return CircleType::T1;
  return CircleType::T2;
}

std::map<int, Side> LinkDiagram::side_classification(
    const SeifertCircle& c) const {
  if (!is_connected())
    throw ValidationError("side classification requires a connected diagram");
  std::map<int, Side> colors;
  colors[regions_.front().id] = Side::RPrime;
  std::queue<int> work;
  work.push(regions_.front().id);
  // Region adjacency via segments; crossing a segment of c flips the side.
  std::map<int, std::vector<std::pair<int, bool>>> adj;
  for (const auto& [e, s] : segments_) {
    const auto [r1, r2] = adjacent_regions(e);
    const bool flip = c.segment_set.count(e) > 0;
    adj[r1].push_back({r2, flip});
    adj[r2].push_back({r1, flip});
  }
  while (!work.empty()) {
    const int r = work.front();
    work.pop();
    for (const auto& [r2, flip] : adj[r]) {
      const Side want = flip == (colors.at(r) == Side::RPrime)
                            ? Side::RDoublePrime
                            : Side::RPrime;
      auto [it, inserted] = colors.try_emplace(r2, want);
      if (inserted) {
        work.push(r2);
      } else if (it->second != want) {
        throw InternalError("inconsistent two-coloring along circle " +
                            std::to_string(c.id));
      }
    }
  }
  if (colors.size() != regions_.size())
    throw InternalError("two-coloring did not reach every region");
  return colors;
}

Side LinkDiagram::belongs_to(const SeifertCircle& c,
                             const std::map<int, Side>& colors,
                             int crossing) const {
  if (std::find(c.crossings_on.begin(), c.crossings_on.end(), crossing) ==
      c.crossings_on.end())
    throw ValidationError("crossing " + std::to_string(crossing) +
                          " is not on circle " + std::to_string(c.id));
  int prime = 0;
  for (int q = 0; q < 4; ++q)
    if (colors.at(region_at(crossing, q)) == Side::RPrime) ++prime;
  if (prime >= 3) return Side::RPrime;
  if (prime <= 1) return Side::RDoublePrime;
  throw AmbiguityError("crossing " + std::to_string(crossing) +
                       " has a 2/2 quadrant split along circle " +
                       std::to_string(c.id));
}

Side LinkDiagram::belongs_to(const SeifertCircle& c, int crossing) const {
  return belongs_to(c, side_classification(c), crossing);
}

std::vector<int> LinkDiagram::mixed_segments(
    const SeifertCircle& c, const std::map<int, Side>& colors) const {
  std::vector<int> mixed;
  for (int e : c.segments) {
    const Segment& s = segment(e);
    if (belongs_to(c, colors, s.tail.crossing) !=
        belongs_to(c, colors, s.head.crossing))
      mixed.push_back(e);
  }
  return mixed;
}

int LinkDiagram::t2_length(const SeifertCircle& c) const {
  const auto colors = side_classification(c);
  return static_cast<int>(mixed_segments(c, colors).size()) / 2;
}

int LinkDiagram::canonical_segment() const {
  for (const auto& [e, s] : segments_) {
    const auto [r1, r2] = adjacent_regions(e);
    if (r1 != r2) return e;
  }
  throw DegenerateError("every segment has equal adjacent regions");
}

}  // namespace alexdimer
