#pragma once
// Reidemeister moves on the punctured sphere. A move is legal only when its
// supporting disk carries no puncture: deletions require the pattern face
// (monogon, bigon, triangle) to be puncture-free, and insertions create their
// small faces empty. Puncture labels ride through every move along a defined
// face correspondence.

#include <string>
#include <vector>

#include "knotsphere/state.hpp"

namespace knotsphere {

enum class MoveKind { r1_delete, r1_insert, r2_delete, r2_insert, r3 };

const char* move_kind_name(MoveKind k);

struct Move {
  MoveKind kind;
  int a = -1;   // monogon dart / insertion side dart d1 / bigon dart / triangle dart
  int b = -1;   // second side dart d2 for r2_insert
  bool flag = false;      // r1_insert: over bit of the new crossing; r2_insert: first strand over
  int circle_face = -1;   // r1_insert on the circle: face receiving the kink
  std::vector<int> split;  // r2_insert: puncture labels sent to the piece anchored at d2

  bool operator==(const Move&) const = default;
};

// Complete deterministic move list for the state (insertions included
// regardless of any crossing cap; callers filter).
std::vector<Move> enumerate_moves(const PuncturedState& s);

// Applies a move enumerated on s. Throws Errc::stale_move when the site no
// longer matches.
PuncturedState apply_move(const PuncturedState& s, const Move& m);

struct Neighbor {
  Move move;
  PuncturedState state;
  std::string key;
};

// All neighbor states with at most cap crossings, deduplicated by canonical
// key and sorted by it. With deletions_only set, only r1/r2 deletions and r3
// moves are expanded.
std::vector<Neighbor> neighbor_moves(const PuncturedState& s, int cap,
                                     bool deletions_only = false);

std::vector<PuncturedState> neighbors(const PuncturedState& s, int cap);

}  // namespace knotsphere
