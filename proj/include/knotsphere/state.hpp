#pragma once
// Punctured states: a diagram plus labeled punctures assigned to faces, and
// the canonical key used for search deduplication.

#include <string>
#include <vector>

#include "knotsphere/diagram.hpp"

namespace knotsphere {

struct PuncturedState {
  Diagram diagram;
  // punctures[i] is the face id holding the puncture labeled p_i. Several
  // labels may share a face (this happens transiently under moves).
  std::vector<int> punctures;
};

PuncturedState make_state(Diagram d, std::vector<int> puncture_faces);

// Two states get equal keys exactly when an orientation-preserving sphere
// homeomorphism matches crossings, over/under data, knot orientation and
// puncture labels. Computed as the lexicographic minimum over deterministic
// relabeling traversals started from every dart.
std::string canonical_key(const PuncturedState& s);

// The relabeled copy realizing the canonical key.
PuncturedState canonicalize(const PuncturedState& s);

}  // namespace knotsphere
