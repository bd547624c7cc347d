#include <doctest.h>

#include <algorithm>
#include <set>

#include "knotsphere/diagram.hpp"

using namespace knotsphere;

namespace {

const char* kTrefoil = "[[1,5,2,4],[3,1,4,6],[5,3,6,2]]";
const char* kKink = "[[1,2,2,1]]";

std::multiset<size_t> face_degrees(const Diagram& d) {
  std::multiset<size_t> out;
  for (const auto& b : faces(d).boundary) out.insert(b.size());
  return out;
}

}  // namespace

TEST_CASE("circle has two faces and no crossings") {
  Diagram d = Diagram::circle();
  CHECK(d.is_circle());
  CHECK(d.crossings() == 0);
  CHECK(faces(d).count == 2);
  CHECK(serialize_diagram(d) == "unknot");
  CHECK(parse_diagram("unknot").is_circle());
}

TEST_CASE("kink parses to one crossing and three faces") {
  Diagram d = parse_diagram(kKink);
  CHECK(d.crossings() == 1);
  FaceSet f = faces(d);
  CHECK(f.count == 3);
  CHECK(face_degrees(d) == std::multiset<size_t>{1, 1, 2});
}

TEST_CASE("trefoil parses to three crossings and five faces") {
  Diagram d = parse_diagram(kTrefoil);
  CHECK(d.crossings() == 3);
  FaceSet f = faces(d);
  CHECK(f.count == 5);
  CHECK(face_degrees(d) == std::multiset<size_t>{2, 2, 2, 3, 3});
  Curve c = underlying_curve(d);
  CHECK(faces(c.map).count == 5);
  CHECK(faces(c.map).boundary == f.boundary);
}

TEST_CASE("traversal covers every edge once and every crossing twice") {
  for (const char* code : {kKink, kTrefoil}) {
    Diagram d = parse_diagram(code);
    auto orbit = knot_orbit(d);
    CHECK(static_cast<int>(orbit.size()) == 2 * d.crossings());
    std::set<int> edges;
    std::vector<int> visits(d.crossings(), 0);
    for (int dd : orbit) {
      edges.insert(std::min(dd, d.mate(dd)));
      ++visits[dart_crossing(dd)];
    }
    CHECK(static_cast<int>(edges.size()) == 2 * d.crossings());
    for (int v : visits) CHECK(v == 2);
  }
}

TEST_CASE("parse diagnostics are distinct") {
  CHECK_THROWS_WITH_AS(parse_diagram("[[1,2,2]]"), doctest::Contains("3 edge labels"),
                       Error);
  CHECK_THROWS_AS(parse_diagram("[[1,5,2,4],[3,1,4,6],[5,3,6,7]]"), Error);
  try {
    parse_diagram("[[1,5,2,4],[3,1,4,6],[5,3,6,7]]");
  } catch (const Error& e) {
    CHECK(e.kind() == Errc::unmatched_edge);
  }
  try {
    parse_diagram("[[1,2,2,1],[3,4,4,3]]");
    FAIL("expected multiple components");
  } catch (const Error& e) {
    CHECK(e.kind() == Errc::multiple_components);
  }
  try {
    parse_diagram("[[1,5,4,2],[3,1,4,6],[5,3,6,2]]");
    FAIL("expected inconsistent traversal");
  } catch (const Error& e) {
    CHECK(e.kind() == Errc::inconsistent_traversal);
  }
}

TEST_CASE("non-spherical rotation systems are rejected") {
  // Two crossings glued into a genus-one map: valid involution and a single
  // component, but only two faces.
  std::vector<int> mate{4, 6, 5, 7, 0, 2, 1, 3};
  std::vector<uint8_t> over{0, 0};
  std::vector<uint8_t> outg(8, 0);
  for (int d : {0, 6, 3, 5}) outg[d] = 1;
  try {
    Diagram bad(mate, over, outg);
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.kind() == Errc::not_spherical);
  }
}

TEST_CASE("PD round trip is stable") {
  for (const char* code : {kKink, kTrefoil}) {
    Diagram d = parse_diagram(code);
    std::string s1 = serialize_diagram(d);
    Diagram d2 = parse_diagram(s1);
    CHECK(serialize_diagram(d2) == s1);
    CHECK(faces(d2).count == faces(d).count);
  }
}
