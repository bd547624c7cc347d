#include <doctest.h>

#include <set>

#include "knotsphere/generators.hpp"
#include "knotsphere/moves.hpp"
#include "knotsphere/topology.hpp"

using namespace knotsphere;

namespace {

PuncturedState bare(const Diagram& d) { return PuncturedState{d, {}}; }

int count_kind(const std::vector<Move>& ms, MoveKind k) {
  int n = 0;
  for (const auto& m : ms) n += m.kind == k;
  return n;
}

}  // namespace

TEST_CASE("circle offers exactly four kink insertions") {
  auto ms = enumerate_moves(bare(Diagram::circle()));
  CHECK(ms.size() == 4);
  for (const auto& m : ms) CHECK(m.kind == MoveKind::r1_insert);
  for (const auto& m : ms) {
    PuncturedState s = apply_move(bare(Diagram::circle()), m);
    CHECK(s.diagram.crossings() == 1);
    CHECK(faces(s.diagram).count == 3);
  }
}

TEST_CASE("kink monogons delete unless punctured") {
  Diagram kink = gen_kink();
  CHECK(count_kind(enumerate_moves(bare(kink)), MoveKind::r1_delete) == 2);
  // A puncture inside a monogon face blocks that deletion.
  FaceSet f = faces(kink);
  int mono = -1;
  for (int i = 0; i < f.count; ++i)
    if (f.boundary[i].size() == 1) mono = i;
  PuncturedState blocked = make_state(kink, {mono});
  CHECK(count_kind(enumerate_moves(blocked), MoveKind::r1_delete) == 1);
}

TEST_CASE("r1 insert then delete returns to the original state") {
  for (uint64_t seed = 1; seed < 6; ++seed) {
    PuncturedState s = bare(gen_random(static_cast<int>(seed % 4) + 1, seed));
    std::string key = canonical_key(s);
    for (const Move& m : enumerate_moves(s)) {
      if (m.kind != MoveKind::r1_insert) continue;
      PuncturedState t = apply_move(s, m);
      CHECK(t.diagram.crossings() == s.diagram.crossings() + 1);
      bool restored = false;
      for (const Move& back : enumerate_moves(t)) {
        if (back.kind != MoveKind::r1_delete) continue;
        if (canonical_key(apply_move(t, back)) == key) restored = true;
      }
      CHECK(restored);
    }
  }
}

TEST_CASE("r2 insert then delete returns to the original state") {
  for (uint64_t seed = 6; seed < 10; ++seed) {
    PuncturedState s = bare(gen_random(static_cast<int>(seed % 3) + 1, seed));
    std::string key = canonical_key(s);
    int tried = 0;
    for (const Move& m : enumerate_moves(s)) {
      if (m.kind != MoveKind::r2_insert) continue;
      if (++tried > 25) break;  // plenty of sites per diagram
      PuncturedState t = apply_move(s, m);
      CHECK(t.diagram.crossings() == s.diagram.crossings() + 2);
      bool restored = false;
      for (const Move& back : enumerate_moves(t)) {
        if (back.kind != MoveKind::r2_delete) continue;
        if (canonical_key(apply_move(t, back)) == key) restored = true;
      }
      CHECK(restored);
    }
  }
}

TEST_CASE("r3 is an involution at the flipped triangle") {
  int found = 0;
  for (uint64_t seed = 10; seed < 60 && found < 6; ++seed) {
    PuncturedState s = bare(gen_random(static_cast<int>(seed % 4) + 3, seed));
    for (const Move& m : enumerate_moves(s)) {
      if (m.kind != MoveKind::r3) continue;
      ++found;
      PuncturedState t = apply_move(s, m);
      CHECK(t.diagram.crossings() == s.diagram.crossings());
      bool restored = false;
      for (const Move& back : enumerate_moves(t)) {
        if (back.kind != MoveKind::r3) continue;
        if (canonical_key(apply_move(t, back)) == canonical_key(s)) restored = true;
      }
      CHECK(restored);
    }
  }
  CHECK(found >= 1);
}

TEST_CASE("punctures survive every move with conserved labels") {
  for (uint64_t seed = 70; seed < 76; ++seed) {
    Diagram d = gen_random(static_cast<int>(seed % 4) + 1, seed);
    int nf = faces(d).count;
    std::vector<int> punct;
    for (int i = 0; i < nf; ++i)
      if ((seed >> i) & 1) punct.push_back(i);
    PuncturedState s = make_state(d, punct);
    for (const auto& nb : neighbor_moves(s, d.crossings() + 2)) {
      CHECK(nb.state.punctures.size() == s.punctures.size());
      FaceSet nfaces = faces(nb.state.diagram);
      for (int p : nb.state.punctures) {
        CHECK(p >= 0);
        CHECK(p < nfaces.count);
      }
    }
  }
}

TEST_CASE("neighbors respect the crossing cap") {
  PuncturedState circle = bare(Diagram::circle());
  CHECK(neighbors(circle, 0).empty());
  auto one = neighbors(circle, 1);
  CHECK(one.size() == 2);  // positive and negative kink
  for (const auto& s : one) CHECK(s.diagram.crossings() == 1);

  PuncturedState both = make_state(Diagram::circle(), {0, 1});
  CHECK(neighbors(both, 1).size() == 4);  // labeled punctures break the symmetry
}

TEST_CASE("stale moves are rejected") {
  PuncturedState kink = bare(gen_kink());
  Move del;
  for (const Move& m : enumerate_moves(kink))
    if (m.kind == MoveKind::r1_delete) del = m;
  PuncturedState tre = bare(gen_trefoil());
  CHECK_THROWS_AS(apply_move(tre, del), Error);
}

TEST_CASE("example1 state admits the documented bigon cancellation") {
  Example1 ex = gen_example1();
  bool has_r2_delete = false;
  for (const Move& m : enumerate_moves(ex.state))
    if (m.kind == MoveKind::r2_delete) has_r2_delete = true;
  CHECK(has_r2_delete);
}
