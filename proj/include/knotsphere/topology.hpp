#pragma once
// Curve topology on the punctured sphere: Alexander numbering, free homotopy
// classes of loops as cyclic words, the Turaev cobracket and the two lower
// bound engines.

#include <map>
#include <utility>
#include <vector>

#include "knotsphere/diagram.hpp"

namespace knotsphere {

struct Numbering {
  std::vector<int> value;  // face id -> integer, value[0] == 0
  int base_face = 0;
};

// Satisfies value[left] = value[right] + 1 across every edge, left/right taken
// with respect to the curve orientation; normalized to 0 at face 0.
Numbering alexander_numbering(const Curve& c);

// max(0, |a(u) - a(v)| - 1): a lower bound for the minimal self-intersection
// number of the curve homotoped on the annulus that keeps only faces u and v.
int annulus_bound(const Curve& c, int u, int v);

// Cyclically reduced word over generators 1..k and negatives for inverses,
// stored as the rank-minimal rotation so equal classes compare equal. The
// empty word is the trivial class.
struct CyclicWord {
  std::vector<int> letters;

  static CyclicWord reduced(std::vector<int> raw);
  bool trivial() const { return letters.empty(); }
  bool operator==(const CyclicWord&) const = default;
  bool operator<(const CyclicWord& o) const;
};

using ConjClass = CyclicWord;

// A cut system for the punctured sphere: the puncture in the smallest face is
// the root; every other puncture gets a dual-graph arc to the root. Arcs are
// BFS-shortest with ties broken by smallest face id then smallest edge id;
// arcs sharing a diagram edge are nested by subtree order. Crossing the arc of
// generator g from the right of a directed edge to its left reads g.
struct ArcSystem {
  int root_face = -1;
  std::vector<int> generator_face;  // generator i (1-based i+1... index 0 = g1) -> face id
  // Keyed by the side of the tree edge in the child face; the list holds
  // generator numbers in crossing order along that dart's walk direction.
  std::map<int, std::vector<int>> bundle;
  // Generator -> dual path as (face, crossed edge-side dart) steps, root last.
  std::vector<std::vector<std::pair<int, int>>> arc_path;
};

ArcSystem build_arc_system(const Curve& c, const std::vector<int>& puncture_faces);

// Free homotopy class of the whole curve on the punctured sphere.
ConjClass loop_word(const Curve& c, const ArcSystem& arcs);

// Classes of the two loops obtained by the orientation-respecting smoothing at
// a crossing; the first starts at the exit of the passage visited first by the
// traversal from the canonical base point.
std::pair<ConjClass, ConjClass> smoothed_loops(const Curve& c, const ArcSystem& arcs,
                                               int crossing);

struct CobracketElement {
  // Ordered class pair -> integer coefficient; antisymmetric, no trivial
  // classes, zero coefficients removed.
  std::map<std::pair<ConjClass, ConjClass>, int> terms;

  // Number of basis terms counted with multiplicity.
  int term_count() const;
};

CobracketElement cobracket(const Curve& c, const std::vector<int>& puncture_faces);

// Half the cobracket term count: a lower bound for the minimal
// self-intersection number of the curve on the punctured sphere.
int cobracket_bound(const Curve& c, const std::vector<int>& puncture_faces);

// Best available lower bound: annulus bounds over all puncture pairs combined
// with the cobracket bound; 0 when fewer than two punctured faces.
int lower_bound(const Curve& c, const std::vector<int>& puncture_faces);

}  // namespace knotsphere
