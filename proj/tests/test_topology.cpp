#include <doctest.h>

#include <algorithm>
#include <set>

#include "knotsphere/generators.hpp"
#include "knotsphere/topology.hpp"

using namespace knotsphere;

namespace {

std::multiset<int> normalized_values(const Curve& c) {
  Numbering n = alexander_numbering(c);
  int lo = *std::min_element(n.value.begin(), n.value.end());
  std::multiset<int> out;
  for (int v : n.value) out.insert(v - lo);
  return out;
}

std::vector<int> all_faces(const Diagram& d) {
  std::vector<int> out(faces(d).count);
  for (size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(i);
  return out;
}

void check_edge_rule(const Curve& c) {
  if (c.map.is_circle()) return;
  Numbering n = alexander_numbering(c);
  FaceSet f = faces(c.map);
  for (int d = 0; d < c.map.darts(); ++d) {
    if (!c.map.outgoing(d)) continue;
    CHECK(n.value[f.of_dart[d]] == n.value[f.of_dart[c.map.mate(d)]] + 1);
  }
}

}  // namespace

TEST_CASE("numbering of the circle") {
  Numbering n = alexander_numbering(underlying_curve(Diagram::circle()));
  CHECK(n.value == std::vector<int>{0, -1});
}

TEST_CASE("numbering multisets for kink and trefoil") {
  CHECK(normalized_values(underlying_curve(gen_kink())) == std::multiset<int>{0, 1, 2});
  CHECK(normalized_values(underlying_curve(gen_trefoil())) ==
        std::multiset<int>{0, 1, 1, 1, 2});
}

TEST_CASE("edge rule holds on random curves") {
  for (uint64_t seed = 1; seed <= 12; ++seed) {
    Diagram d = gen_random(static_cast<int>(seed % 6) + 1, seed);
    check_edge_rule(underlying_curve(d));
  }
}

TEST_CASE("annulus bound") {
  Curve tre = underlying_curve(gen_trefoil());
  Numbering n = alexander_numbering(tre);
  int lo_face = -1, hi_face = -1;
  for (size_t i = 0; i < n.value.size(); ++i) {
    if (lo_face < 0 || n.value[i] < n.value[lo_face]) lo_face = static_cast<int>(i);
    if (hi_face < 0 || n.value[i] > n.value[hi_face]) hi_face = static_cast<int>(i);
  }
  CHECK(annulus_bound(tre, lo_face, hi_face) == 1);
  CHECK(annulus_bound(tre, lo_face, lo_face) == 0);
  CHECK_THROWS_AS(annulus_bound(tre, 0, 99), Error);
}

TEST_CASE("cyclic word reduction and rotation") {
  CHECK(CyclicWord::reduced({1, -1}).trivial());
  CHECK(CyclicWord::reduced({1, 2, -2, -1}).trivial());
  CHECK(CyclicWord::reduced({2, 1}) == CyclicWord::reduced({1, 2}));
  CHECK(CyclicWord::reduced({-1, 2, 1}) == CyclicWord::reduced({2}));  // wrap cancellation
  CHECK(CyclicWord::reduced({1, 2}) != CyclicWord::reduced({2, -1}));
}

TEST_CASE("loop words") {
  Curve circle = underlying_curve(Diagram::circle());
  CHECK(loop_word(circle, build_arc_system(circle, {0})).trivial());
  ConjClass w = loop_word(circle, build_arc_system(circle, {0, 1}));
  CHECK(w == CyclicWord::reduced({1}));

  Curve kink = underlying_curve(gen_kink());
  CHECK(loop_word(kink, build_arc_system(kink, {1})).trivial());

  // Punctures at the two extreme faces: the curve is a double of the core.
  Numbering n = alexander_numbering(kink);
  int lo = 0, hi = 0;
  for (int i = 0; i < 3; ++i) {
    if (n.value[i] < n.value[lo]) lo = i;
    if (n.value[i] > n.value[hi]) hi = i;
  }
  ConjClass w2 = loop_word(kink, build_arc_system(kink, {lo, hi}));
  int sum = 0;
  for (int l : w2.letters) sum += l > 0 ? 1 : -1;
  CHECK(std::abs(sum) == 2);
}

TEST_CASE("exponent sum matches the numbering gap on two-punctured spheres") {
  for (uint64_t seed = 20; seed < 32; ++seed) {
    Diagram d = gen_random(static_cast<int>(seed % 5) + 1, seed);
    Curve c = underlying_curve(d);
    Numbering n = alexander_numbering(c);
    int nf = faces(d).count;
    int u = static_cast<int>(seed % nf);
    int v = static_cast<int>((seed / 3) % nf);
    if (u == v) continue;
    ConjClass w = loop_word(c, build_arc_system(c, {u, v}));
    int sum = 0;
    for (int l : w.letters) sum += l > 0 ? 1 : -1;
    CHECK(std::abs(sum) == std::abs(n.value[u] - n.value[v]));
  }
}

TEST_CASE("smoothed loops on the kink and trefoil") {
  Curve kink = underlying_curve(gen_kink());
  auto [a, b] = smoothed_loops(kink, build_arc_system(kink, all_faces(kink.map)), 0);
  CHECK(!a.trivial());
  CHECK(!b.trivial());
  CHECK(!(a == b));

  auto [t, u] = smoothed_loops(kink, build_arc_system(kink, {0}), 0);
  CHECK(t.trivial());
  CHECK(u.trivial());

  Curve tre = underlying_curve(gen_trefoil());
  ArcSystem arcs = build_arc_system(tre, all_faces(tre.map));
  for (int p = 0; p < 3; ++p) {
    auto [x, y] = smoothed_loops(tre, arcs, p);
    CHECK(!x.trivial());
    CHECK(!y.trivial());
  }
  CHECK_THROWS_AS(smoothed_loops(tre, arcs, 9), Error);
}

TEST_CASE("cobracket term counts") {
  Curve circle = underlying_curve(Diagram::circle());
  CHECK(cobracket(circle, {0, 1}).term_count() == 0);

  Curve kink = underlying_curve(gen_kink());
  CHECK(cobracket(kink, all_faces(kink.map)).term_count() == 2);
  CHECK(cobracket(kink, {0}).term_count() == 0);

  Curve tre = underlying_curve(gen_trefoil());
  CobracketElement el = cobracket(tre, all_faces(tre.map));
  CHECK(el.term_count() == 6);
  CHECK(cobracket_bound(tre, all_faces(tre.map)) == 3);
  for (const auto& [pair, coef] : el.terms) {
    auto it = el.terms.find({pair.second, pair.first});
    REQUIRE(it != el.terms.end());
    CHECK(it->second == -coef);
  }
}

TEST_CASE("full-puncture cobracket counts twice the crossings on random curves") {
  for (uint64_t seed = 40; seed < 52; ++seed) {
    Diagram d = gen_random(static_cast<int>(seed % 6) + 1, seed);
    Curve c = underlying_curve(d);
    CHECK(cobracket(c, all_faces(d)).term_count() == 2 * d.crossings());
    CHECK(cobracket_bound(c, all_faces(d)) == d.crossings());
  }
}

TEST_CASE("arc systems are deterministic") {
  Curve tre = underlying_curve(gen_trefoil());
  ArcSystem a = build_arc_system(tre, all_faces(tre.map));
  ArcSystem b = build_arc_system(tre, all_faces(tre.map));
  CHECK(a.root_face == b.root_face);
  CHECK(a.bundle == b.bundle);
  CHECK(a.arc_path == b.arc_path);
  CHECK(a.arc_path.size() == 4);
  CHECK_THROWS_AS(build_arc_system(tre, {}), Error);
}

TEST_CASE("two adjacent punctures give one arc over one edge") {
  Curve kink = underlying_curve(gen_kink());
  FaceSet f = faces(kink.map);
  // Faces 0 and 1 share the loop edge.
  ArcSystem a = build_arc_system(kink, {0, 1});
  REQUIRE(a.arc_path.size() == 1);
  CHECK(a.arc_path[0].size() == 2);
  CHECK(a.bundle.size() == 1);
}

TEST_CASE("combined lower bound") {
  Curve tre = underlying_curve(gen_trefoil());
  CHECK(lower_bound(tre, {}) == 0);
  CHECK(lower_bound(tre, {0}) == 0);
  CHECK(lower_bound(tre, all_faces(tre.map)) == 3);
  // Monotone under inclusion.
  for (uint64_t seed = 60; seed < 70; ++seed) {
    Diagram d = gen_random(static_cast<int>(seed % 5) + 1, seed);
    Curve c = underlying_curve(d);
    int nf = faces(d).count;
    std::vector<int> sub, big;
    for (int i = 0; i < nf; ++i) {
      if ((seed >> i) & 1) {
        big.push_back(i);
        if ((seed >> (i + 7)) & 1) sub.push_back(i);
      }
    }
    CHECK(lower_bound(c, sub) <= lower_bound(c, big));
  }
}
