#pragma once
// Example and random diagram generators. example1 and dn are fixed
// reconstructions whose documented properties are pinned by the test suite.

#include <cstdint>
#include <map>
#include <string>

#include "knotsphere/state.hpp"

namespace knotsphere {

Diagram gen_circle();
Diagram gen_kink();
Diagram gen_trefoil();

// A 3-crossing unknot diagram (a kink with one strand pushed across the
// middle face) with five regions named R1..R5; R4 is the poke bigon and
// {R1, R5} realize Alexander numbering gap 2. The documented puncture set is
// {R1, R2, R3, R5}.
struct Example1 {
  PuncturedState state;                // punctures p0..p3 on R1, R2, R3, R5
  std::map<std::string, int> regions;  // R1..R5 -> face id
};
Example1 gen_example1();

// Ladder of n clasps: a straight strand crossed by n pokes of the returning
// strand, 2n crossings, 2n+2 faces. The puncture set holds everything except
// the n poke bigons, so every bigon-cancelling second move stays legal.
struct Dn {
  PuncturedState state;     // punctures on the n+2 non-bigon faces
  std::vector<int> bigons;  // the n bigon face ids, west to east
};
Dn gen_dn(int n);

// Seeded random unknot diagram built from the circle by legal insertions and
// triangle moves; exactly `crossings` crossings. Deterministic per seed.
Diagram gen_random(int crossings, uint64_t seed);

}  // namespace knotsphere
