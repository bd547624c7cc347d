#pragma once
// Restricted crossing number search: bounded breadth-first exploration of the
// move graph with canonical-key deduplication, certified against the
// curve-topology lower bounds; subset sweeps for the c_max/c_min profile and
// the threshold indices.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knotsphere/moves.hpp"
#include "knotsphere/state.hpp"
#include "knotsphere/topology.hpp"

namespace knotsphere {

struct SearchConfig {
  int headroom = 2;             // cap = initial crossings + headroom
  long long max_states = 500000;
  bool deterministic = true;
  int known_c = -1;             // classical crossing number of the knot, -1 if unknown
  int threads = 1;
};

struct CrossingResult {
  int initial_crossings = 0;
  int lower_bound = 0;  // best of the topological bounds and any known c(K) floor
  int min_found = 0;
  bool certified = false;  // min_found == lower_bound
  bool exhausted = false;  // the capped move graph was fully explored in budget
  long long explored = 0;
  long long violations = 0;  // visited states below the initial topological bound
  std::vector<Move> witness;  // replayable trace from the input state to a minimum
};

CrossingResult restricted_crossing_number(const PuncturedState& s, const SearchConfig& cfg);

struct IntInterval {
  int lo = 0;
  int hi = 0;
  bool certified() const { return lo == hi; }
};

enum class ThresholdKind { value, none, unknown };

struct Threshold {
  ThresholdKind kind = ThresholdKind::unknown;
  int n = -1;
};

struct SubsetEntry {
  std::vector<int> faces;
  CrossingResult result;
};

struct Profile {
  int m = 0;
  std::vector<IntInterval> cmax, cmin;  // index n = 0..m+2
  Threshold alpha, beta, gamma, delta;
  std::vector<SubsetEntry> subsets;  // sweep order: by size, then lexicographic
  long long total_explored = 0;
  long long violations = 0;
};

// Sweeps every puncture subset (guard: m <= 8). Per-subset results are cached
// by the canonical key of the punctured state.
Profile profile(const Diagram& d, const SearchConfig& cfg);

struct PairScan {
  int u = -1;
  int v = -1;
  int bound = 0;
};

// Scans the corner faces of each crossing for the widest Alexander numbering
// gap; any diagram with a crossing yields a pair with bound >= 1.
PairScan pair_scan(const Diagram& d);

}  // namespace knotsphere
