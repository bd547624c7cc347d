#include "knotsphere/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "knotsphere/moves.hpp"
#include "knotsphere/topology.hpp"

namespace knotsphere {

Diagram gen_circle() { return Diagram::circle(); }

Diagram gen_kink() { return parse_diagram("[[1,2,2,1]]"); }

Diagram gen_trefoil() { return parse_diagram("[[1,5,2,4],[3,1,4,6],[5,3,6,2]]"); }

Example1 gen_example1() {
  // Kink on the circle, then one strand pushed across the middle face. The
  // pre-push extreme faces keep numbering gap 2, so puncturing everything but
  // the new bigon pins the restricted minimum at exactly one crossing.
  PuncturedState s{Diagram::circle(), {}};
  s = apply_move(s, Move{MoveKind::r1_insert, -1, -1, false, 1, {}});
  // Kink faces: 0 = middle {darts 0,2}, 1 = loop monogon {1}, 2 = far side {3}.
  Move push{MoveKind::r2_insert, 0, 2, true, -1, {}};
  PuncturedState d = apply_move(s, push);
  FaceSet f = faces(d.diagram);
  Example1 ex;
  int bigon = f.of_dart[4 + 2];       // corner of the first new crossing's MID slot
  int r1 = f.of_dart[1];              // old loop monogon
  int r5 = f.of_dart[3];              // old far side
  int r2 = f.of_dart[0];              // push-side piece of the middle face
  int r3 = f.of_dart[2];              // across-side piece
  ex.regions = {{"R1", r1}, {"R2", r2}, {"R3", r3}, {"R4", bigon}, {"R5", r5}};
  ex.state = make_state(d.diagram, {r1, r2, r3, r5});
  return ex;
}

Dn gen_dn(int n) {
  if (n < 1) throw Error(Errc::bad_params, "dn generator needs n >= 1");
  // Crossing 2k is the west end of clasp k, crossing 2k+1 its east end; slots
  // are E,N,W,S = 0..3. The straight strand runs west to east through all
  // MID edges; the return strand dips under it once per clasp.
  const int m = 2 * n;
  std::vector<int> mate(4 * m, -1);
  auto link = [&](int u, int v) {
    mate[u] = v;
    mate[v] = u;
  };
  for (int k = 0; k < n; ++k) {
    int b = 8 * k;
    link(b + 0, b + 6);  // MID_k
    link(b + 1, b + 5);  // TIP_k
    if (k + 1 < n) {
      link(b + 4, b + 8 + 2);   // straight strand to the next clasp
      link(b + 8 + 3, b + 7);   // return strand between the clasps
    }
  }
  link(2, 3);                        // west closure
  link(8 * (n - 1) + 4, 8 * (n - 1) + 7);  // east closure
  std::vector<uint8_t> over(m, 0);  // straight strand (slots 0,2) over everywhere
  std::vector<uint8_t> outg = propagate_orientation(mate, 0, true);
  Diagram d(std::move(mate), std::move(over), std::move(outg));
  FaceSet f = faces(d);
  Dn out;
  std::set<int> bigons;
  for (int k = 0; k < n; ++k) bigons.insert(f.of_dart[8 * k]);
  out.bigons.assign(bigons.begin(), bigons.end());
  std::vector<int> punct;
  for (int fc = 0; fc < f.count; ++fc)
    if (!bigons.count(fc)) punct.push_back(fc);
  out.state = make_state(std::move(d), std::move(punct));
  return out;
}

Diagram gen_random(int crossings, uint64_t seed) {
  if (crossings < 0) throw Error(Errc::bad_params, "crossing target must be >= 0");
  std::mt19937_64 rng(seed);
  PuncturedState s{Diagram::circle(), {}};
  while (s.diagram.crossings() < crossings) {
    std::vector<Move> all = enumerate_moves(s);
    std::vector<Move> usable;
    for (Move& mv : all) {
      int delta = mv.kind == MoveKind::r1_insert ? 1
                  : mv.kind == MoveKind::r2_insert ? 2
                  : mv.kind == MoveKind::r3 ? 0
                                            : -4;
      if (delta < 0) continue;  // insertions and triangle moves only
      if (s.diagram.crossings() + delta > crossings) continue;
      usable.push_back(std::move(mv));
    }
    s = apply_move(s, usable[rng() % usable.size()]);
  }
  return s.diagram;
}

}  // namespace knotsphere
