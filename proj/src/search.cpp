#include "knotsphere/search.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <set>

namespace knotsphere {

namespace {

struct VisitedEntry {
  PuncturedState state;
  std::string parent;  // empty for the root
  Move move;
};

struct BfsOutcome {
  int min_found;
  std::string min_key;
  bool exhausted;
  long long explored = 0;
  long long violations = 0;
  std::map<std::string, VisitedEntry> visited;
};

// Deterministic BFS over the move graph with crossings <= cap. Stops early
// once target_floor is reached; deletions_only restricts to non-increasing
// moves (a cheap simplification pass).
BfsOutcome bfs(const PuncturedState& start, int cap, int target_floor, long long max_states,
               int topological_lb, bool deletions_only) {
  BfsOutcome out{start.diagram.crossings(), canonical_key(start), true};
  out.visited.emplace(out.min_key, VisitedEntry{start, "", Move{}});
  out.explored = 1;
  if (start.diagram.crossings() < topological_lb) ++out.violations;
  if (out.min_found <= target_floor) return out;
  std::deque<std::string> frontier{out.min_key};
  while (!frontier.empty()) {
    std::string key = std::move(frontier.front());
    frontier.pop_front();
    const PuncturedState& cur = out.visited.at(key).state;
    for (auto& nb : neighbor_moves(cur, cap, deletions_only)) {
      if (out.visited.count(nb.key)) continue;
      if (out.explored >= max_states) {
        out.exhausted = false;
        return out;
      }
      ++out.explored;
      int cr = nb.state.diagram.crossings();
      if (cr < topological_lb) ++out.violations;
      out.visited.emplace(nb.key, VisitedEntry{nb.state, key, nb.move});
      if (cr < out.min_found) {
        out.min_found = cr;
        out.min_key = nb.key;
        if (out.min_found <= target_floor) return out;
      }
      frontier.push_back(nb.key);
    }
  }
  return out;
}

std::vector<Move> trace_witness(const BfsOutcome& o) {
  std::vector<Move> w;
  std::string key = o.min_key;
  while (true) {
    const VisitedEntry& e = o.visited.at(key);
    if (e.parent.empty()) break;
    w.push_back(e.move);
    key = e.parent;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace

CrossingResult restricted_crossing_number(const PuncturedState& s, const SearchConfig& cfg) {
  if (cfg.headroom < 0 || cfg.max_states < 1)
    throw Error(Errc::bad_params, "search config: headroom >= 0 and max_states >= 1 required");
  CrossingResult res;
  res.initial_crossings = s.diagram.crossings();
  int topo_lb = lower_bound(underlying_curve(s.diagram), s.punctures);
  res.lower_bound = std::max(topo_lb, cfg.known_c);
  const int cap = res.initial_crossings + cfg.headroom;

  // Non-increasing moves only: cheap, and sufficient whenever the lower bound
  // is attainable by pure simplification.
  BfsOutcome mono = bfs(s, res.initial_crossings, res.lower_bound, cfg.max_states, topo_lb,
                        /*deletions_only=*/true);
  res.explored = mono.explored;
  res.violations = mono.violations;
  if (mono.min_found <= res.lower_bound) {
    res.min_found = mono.min_found;
    res.certified = true;
    res.exhausted = false;
    res.witness = trace_witness(mono);
    return res;
  }

  BfsOutcome full = bfs(s, cap, res.lower_bound, cfg.max_states, topo_lb,
                        /*deletions_only=*/false);
  res.explored += full.explored;
  res.violations += full.violations;
  res.min_found = std::min(full.min_found, mono.min_found);
  res.exhausted = full.exhausted;
  if (full.min_found <= mono.min_found) {
    res.witness = trace_witness(full);
  } else {
    res.witness = trace_witness(mono);
  }
  res.certified = res.min_found == res.lower_bound;
  return res;
}

namespace {

void next_combination(std::vector<int>& comb, int nfaces, bool& done) {
  int k = static_cast<int>(comb.size());
  int i = k - 1;
  while (i >= 0 && comb[i] == nfaces - k + i) --i;
  if (i < 0) {
    done = true;
    return;
  }
  ++comb[i];
  for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
}

}  // namespace

Profile profile(const Diagram& d, const SearchConfig& cfg) {
  const int m = d.crossings();
  if (m > 8) throw Error(Errc::bad_params, "profile guard: more than 8 crossings");
  const int nfaces = m + 2;
  Profile p;
  p.m = m;
  p.cmax.assign(nfaces + 1, IntInterval{});
  p.cmin.assign(nfaces + 1, IntInterval{});

  std::map<std::string, CrossingResult> cache;
  const int batch = std::max(1, cfg.threads);

  for (int n = 0; n <= nfaces; ++n) {
    IntInterval cmax{0, 0}, cmin{0, 0};
    bool first = true;
    std::vector<int> comb(n);
    for (int i = 0; i < n; ++i) comb[i] = i;
    bool done = n > nfaces;
    std::vector<std::vector<int>> pending;
    auto flush = [&](std::vector<std::vector<int>>& subsets) {
      // Evaluate a batch. Cache lookups happen in sweep order before any
      // parallel work so the result stream is deterministic.
      std::vector<std::pair<std::string, std::optional<CrossingResult>>> slots(subsets.size());
      std::vector<std::pair<size_t, PuncturedState>> work;
      for (size_t i = 0; i < subsets.size(); ++i) {
        PuncturedState st = make_state(d, subsets[i]);
        slots[i].first = canonical_key(st);
        auto it = cache.find(slots[i].first);
        if (it != cache.end())
          slots[i].second = it->second;
        else
          work.push_back({i, std::move(st)});
      }
      std::vector<std::future<CrossingResult>> futs;
      for (auto& [idx, st] : work)
        futs.push_back(std::async(batch > 1 ? std::launch::async : std::launch::deferred,
                                  [&cfg](PuncturedState state) {
                                    return restricted_crossing_number(state, cfg);
                                  },
                                  st));
      for (size_t w = 0; w < work.size(); ++w) {
        CrossingResult r = futs[w].get();
        slots[work[w].first].second = r;
        cache[slots[work[w].first].first] = r;
        p.total_explored += r.explored;
        p.violations += r.violations;
      }
      for (size_t i = 0; i < subsets.size(); ++i) {
        const CrossingResult& r = *slots[i].second;
        int lo = r.certified ? r.min_found : r.lower_bound;
        int hi = r.min_found;
        if (first) {
          cmax = IntInterval{lo, hi};
          cmin = IntInterval{lo, hi};
          first = false;
        } else {
          cmax.lo = std::max(cmax.lo, lo);
          cmax.hi = std::max(cmax.hi, hi);
          cmin.lo = std::min(cmin.lo, lo);
          cmin.hi = std::min(cmin.hi, hi);
        }
        p.subsets.push_back(SubsetEntry{subsets[i], r});
      }
      subsets.clear();
    };
    while (!done) {
      pending.push_back(comb);
      if (static_cast<int>(pending.size()) >= batch) flush(pending);
      if (n == 0) break;
      next_combination(comb, nfaces, done);
    }
    if (!pending.empty()) flush(pending);
    p.cmax[n] = cmax;
    p.cmin[n] = cmin;
  }

  // Threshold indices from the interval table. c(D) is the n = 0 entry; C(D)
  // is the crossing count of the input.
  IntInterval cd = p.cmin[0];
  auto first_above = [&](const std::vector<IntInterval>& row) {
    for (int n = 0; n <= nfaces; ++n) {
      if (row[n].lo > cd.hi) return Threshold{ThresholdKind::value, n};
      if (row[n].hi > cd.lo) return Threshold{ThresholdKind::unknown, -1};
    }
    return Threshold{ThresholdKind::none, -1};
  };
  auto last_below = [&](const std::vector<IntInterval>& row) {
    for (int n = nfaces; n >= 0; --n) {
      if (row[n].hi < m) return Threshold{ThresholdKind::value, n};
      if (row[n].lo < m) return Threshold{ThresholdKind::unknown, -1};
    }
    return Threshold{ThresholdKind::none, -1};
  };
  p.alpha = first_above(p.cmax);
  p.beta = first_above(p.cmin);
  p.gamma = last_below(p.cmax);
  p.delta = last_below(p.cmin);
  return p;
}

PairScan pair_scan(const Diagram& d) {
  if (d.crossings() == 0) throw Error(Errc::bad_params, "pair_scan needs a crossing");
  Curve c = underlying_curve(d);
  Numbering num = alexander_numbering(c);
  FaceSet f = faces(d);
  PairScan best;
  for (int cr = 0; cr < d.crossings(); ++cr) {
    for (int s1 = 0; s1 < 4; ++s1)
      for (int s2 = s1 + 1; s2 < 4; ++s2) {
        int fu = f.of_dart[make_dart(cr, s1)];
        int fv = f.of_dart[make_dart(cr, s2)];
        int gap = std::abs(num.value[fu] - num.value[fv]);
        if (gap - 1 > best.bound) {
          best.bound = gap - 1;
          best.u = std::min(fu, fv);
          best.v = std::max(fu, fv);
        }
      }
  }
  return best;
}

}  // namespace knotsphere
