#include <algorithm>

#include "alexdimer/braid.hpp"
#include "alexdimer/diagram.hpp"
#include "doctest.h"

using namespace alexdimer;

namespace {

LinkDiagram unknot1() { return braid_closure("unknot1", 2, {1}); }
LinkDiagram hopf() { return braid_closure("hopf", 2, {1, 1}); }
LinkDiagram trefoil() { return braid_closure("trefoil", 2, {1, 1, 1}); }
LinkDiagram fig8() { return braid_closure("fig8", 3, {1, -2, 1, -2}); }
LinkDiagram whitehead() {
  return braid_closure("whitehead", 3, {1, -2, 1, -2, 1});
}
LinkDiagram l3() { return braid_closure("l3", 3, {1, -2, 1, -2, 1, -2}); }

std::set<int> circle_edges(const LinkDiagram& d, int circle_id) {
  return d.seifert_circles().at(circle_id).segment_set;
}

}  // namespace

TEST_CASE("one-crossing kink") {
  const LinkDiagram d = unknot1();
  CHECK(d.crossings().size() == 1);
  CHECK(d.segments().size() == 2);
  CHECK(d.regions().size() == 3);
  CHECK(d.is_connected());
  CHECK(d.crossing_sign(0) == 1);
  CHECK(d.seifert_circles().size() == 2);
  for (const auto& c : d.seifert_circles())
    CHECK(d.circle_type(c) == CircleType::T1);
  CHECK(d.is_alternating());
  // The outer region fills the two quadrants between the loop lobes.
  CHECK(d.region_at(0, 0) == d.region_at(0, 2));
  CHECK(d.region_at(0, 1) != d.region_at(0, 3));
  CHECK(d.canonical_segment() == 1);
}

TEST_CASE("hopf link") {
  const LinkDiagram d = hopf();
  CHECK(d.crossings().size() == 2);
  CHECK(d.segments().size() == 4);
  CHECK(d.regions().size() == 4);
  CHECK(d.seifert_circles().size() == 2);
  CHECK(d.crossing_sign(0) == 1);
  CHECK(d.crossing_sign(1) == 1);
  CHECK(d.is_alternating());
  for (const auto& c : d.seifert_circles())
    CHECK(d.circle_type(c) == CircleType::T1);
  CHECK(circle_edges(d, 0) == std::set<int>{1, 3});
  CHECK(circle_edges(d, 1) == std::set<int>{2, 4});
}

TEST_CASE("trefoil") {
  const LinkDiagram d = trefoil();
  CHECK(d.crossings().size() == 3);
  CHECK(d.segments().size() == 6);
  CHECK(d.regions().size() == 5);
  CHECK(d.seifert_circles().size() == 2);
  CHECK(circle_edges(d, 0) == std::set<int>{1, 3, 5});
  CHECK(circle_edges(d, 1) == std::set<int>{2, 4, 6});
  for (const auto& c : d.seifert_circles())
    CHECK(d.circle_type(c) == CircleType::T1);
  CHECK(d.is_alternating());
  for (int k = 0; k < 3; ++k) CHECK(d.crossing_sign(k) == 1);
}

TEST_CASE("figure-eight diagram structure") {
  const LinkDiagram d = fig8();
  REQUIRE(d.crossings().size() == 4);
  REQUIRE(d.segments().size() == 8);
  REQUIRE(d.regions().size() == 6);
  CHECK(d.is_alternating());
  CHECK(d.crossing_sign(0) == 1);
  CHECK(d.crossing_sign(1) == -1);
  CHECK(d.crossing_sign(2) == 1);
  CHECK(d.crossing_sign(3) == -1);

  REQUIRE(d.seifert_circles().size() == 3);
  const auto& mid = d.seifert_circles()[0];
  CHECK(mid.segment_set == std::set<int>{1, 3, 5, 7});
  CHECK(circle_edges(d, 1) == std::set<int>{2, 6});
  CHECK(circle_edges(d, 2) == std::set<int>{4, 8});
  CHECK(d.circle_type(mid) == CircleType::T2);
  CHECK(d.circle_type(d.seifert_circles()[1]) == CircleType::T1);
  CHECK(d.circle_type(d.seifert_circles()[2]) == CircleType::T1);

  // Hand-computed face structure.
  CHECK(d.region(1).edge_set == std::set<int>{2, 6});
  CHECK(d.region(5).edge_set == std::set<int>{4, 8});
  CHECK(d.region_at(0, 3) == 3);
  CHECK(d.region_at(1, 1) == 2);
  CHECK(d.region_at(2, 3) == 4);
  CHECK(d.region_at(3, 1) == 0);

  const auto colors = d.side_classification(mid);
  for (int r : {0, 1, 2}) CHECK(colors.at(r) == Side::RPrime);
  for (int r : {3, 4, 5}) CHECK(colors.at(r) == Side::RDoublePrime);
  CHECK(d.belongs_to(mid, colors, 0) == Side::RPrime);
  CHECK(d.belongs_to(mid, colors, 2) == Side::RPrime);
  CHECK(d.belongs_to(mid, colors, 1) == Side::RDoublePrime);
  CHECK(d.belongs_to(mid, colors, 3) == Side::RDoublePrime);

  CHECK(d.mixed_segments(mid, colors) == std::vector<int>{1, 3, 5, 7});
  CHECK(d.t2_length(mid) == 2);

  // Crossings not on the small circles are rejected.
  CHECK_THROWS_AS(d.belongs_to(d.seifert_circles()[1], 1), ValidationError);
}

TEST_CASE("whitehead diagram structure") {
  const LinkDiagram d = whitehead();
  REQUIRE(d.crossings().size() == 5);
  REQUIRE(d.regions().size() == 7);
  CHECK(d.is_alternating());
  REQUIRE(d.seifert_circles().size() == 3);
  const auto& mid = d.seifert_circles()[0];
  CHECK(mid.segment_set == std::set<int>{1, 3, 5, 7, 9});
  CHECK(d.circle_type(mid) == CircleType::T2);
  CHECK(d.circle_type(d.seifert_circles()[1]) == CircleType::T1);
  CHECK(d.circle_type(d.seifert_circles()[2]) == CircleType::T1);

  const auto colors = d.side_classification(mid);
  for (int r : {0, 1, 2, 6}) CHECK(colors.at(r) == Side::RPrime);
  for (int r : {3, 4, 5}) CHECK(colors.at(r) == Side::RDoublePrime);
  for (int k : {0, 2, 4}) CHECK(d.belongs_to(mid, colors, k) == Side::RPrime);
  for (int k : {1, 3}) CHECK(d.belongs_to(mid, colors, k) == Side::RDoublePrime);
  CHECK(d.mixed_segments(mid, colors) == std::vector<int>{1, 3, 5, 7});
  CHECK(d.t2_length(mid) == 2);
}

TEST_CASE("length-three diagram structure") {
  const LinkDiagram d = l3();
  REQUIRE(d.crossings().size() == 6);
  REQUIRE(d.regions().size() == 8);
  CHECK(d.is_alternating());
  REQUIRE(d.seifert_circles().size() == 3);
  const auto& mid = d.seifert_circles()[0];
  CHECK(mid.segment_set == std::set<int>{1, 3, 5, 7, 9, 11});
  CHECK(d.circle_type(mid) == CircleType::T2);

  const auto colors = d.side_classification(mid);
  for (int r : {0, 1, 2, 6}) CHECK(colors.at(r) == Side::RPrime);
  for (int r : {3, 4, 5, 7}) CHECK(colors.at(r) == Side::RDoublePrime);
  for (int k : {0, 2, 4}) CHECK(d.belongs_to(mid, colors, k) == Side::RPrime);
  for (int k : {1, 3, 5})
    CHECK(d.belongs_to(mid, colors, k) == Side::RDoublePrime);
  // Every circle segment joins opposite sides.
  CHECK(d.mixed_segments(mid, colors).size() == 6);
  CHECK(d.t2_length(mid) == 3);
}

TEST_CASE("validation failures") {
  // Edge listed three times.
  std::map<int, Crossing> bad;
  bad[0].darts = {Dart{5, Dir::In, Strand::Over},
                  Dart{1, Dir::In, Strand::Under},
                  Dart{5, Dir::Out, Strand::Over},
                  Dart{5, Dir::Out, Strand::Under}};
  CHECK_THROWS_AS(LinkDiagram("bad", bad), ValidationError);

  // Same-strand slots must be opposite.
  std::map<int, Crossing> twist;
  twist[0].darts = {Dart{1, Dir::In, Strand::Over},
                    Dart{2, Dir::In, Strand::Over},
                    Dart{1, Dir::Out, Strand::Under},
                    Dart{2, Dir::Out, Strand::Under}};
  CHECK_THROWS_AS(LinkDiagram("twist", twist), ValidationError);

  // Torus wiring: structurally consistent but fails the planarity count.
  std::map<int, Crossing> torus;
  torus[0].darts = {Dart{3, Dir::In, Strand::Over},
                    Dart{4, Dir::In, Strand::Under},
                    Dart{1, Dir::Out, Strand::Over},
                    Dart{2, Dir::Out, Strand::Under}};
  torus[1].darts = {Dart{2, Dir::In, Strand::Over},
                    Dart{1, Dir::In, Strand::Under},
                    Dart{3, Dir::Out, Strand::Over},
                    Dart{4, Dir::Out, Strand::Under}};
  CHECK_THROWS_AS(LinkDiagram("torus", torus), ValidationError);

  CHECK_THROWS_AS(braid_closure("empty", 2, {}), ValidationError);
  CHECK_THROWS_AS(braid_closure("untouched", 3, {1}), ValidationError);
  CHECK_THROWS_AS(braid_closure("range", 2, {2}), ValidationError);
}

TEST_CASE("disconnected diagrams validate per component") {
  // Columns 1-2 and 3-4 never interact: two kinks side by side.
  const LinkDiagram d = braid_closure("two-kinks", 4, {1, 3});
  CHECK(d.crossings().size() == 2);
  CHECK_FALSE(d.is_connected());
  CHECK(d.num_components() == 2);
  CHECK(d.regions().size() == 6);  // each kink contributes its own 3 faces
  const auto& c = d.seifert_circles().front();
  CHECK_THROWS_AS(d.side_classification(c), ValidationError);
}

TEST_CASE("negative braid letters mirror the signs") {
  const LinkDiagram d = braid_closure("neg", 2, {-1, -1});
  CHECK(d.crossing_sign(0) == -1);
  CHECK(d.crossing_sign(1) == -1);
  CHECK(d.is_alternating());
}

TEST_CASE("pd code conversion") {
  const LinkDiagram d =
      from_pd_code("pd-trefoil", {{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}});
  CHECK(d.crossings().size() == 3);
  CHECK(d.regions().size() == 5);
  CHECK(d.is_alternating());
  CHECK(d.seifert_circles().size() == 2);

  CHECK_THROWS_AS(from_pd_code("empty", {}), ParseError);
  // Edge numbers that never run consecutively cannot be oriented.
  CHECK_THROWS_AS(from_pd_code("ambiguous", {{1, 3, 2, 5}, {2, 5, 1, 3}}),
                  Error);
}
