#include "knotsphere/topology.hpp"

#include <algorithm>
#include <set>

namespace knotsphere {

Numbering alexander_numbering(const Curve& c) {
  Numbering n;
  if (c.map.is_circle()) {
    n.value = {0, -1};  // left face is one greater than the right face
    return n;
  }
  FaceSet f = faces(c.map);
  n.value.assign(f.count, 0);
  std::vector<uint8_t> known(f.count, 0);
  known[0] = 1;
  // Propagate the edge rule a(left) = a(right) + 1 from face 0.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int d = 0; d < c.map.darts(); ++d) {
      if (!c.map.outgoing(d)) continue;
      int lf = f.of_dart[d], rf = f.of_dart[c.map.mate(d)];
      if (known[lf] && known[rf]) {
        if (n.value[lf] != n.value[rf] + 1)
          throw Error(Errc::internal, "Alexander numbering inconsistent");
      } else if (known[lf]) {
        n.value[rf] = n.value[lf] - 1;
        known[rf] = 1;
        changed = true;
      } else if (known[rf]) {
        n.value[lf] = n.value[rf] + 1;
        known[lf] = 1;
        changed = true;
      }
    }
  }
  for (int i = 0; i < f.count; ++i)
    if (!known[i]) throw Error(Errc::internal, "numbering did not reach face");
  return n;
}

int annulus_bound(const Curve& c, int u, int v) {
  Numbering n = alexander_numbering(c);
  if (u < 0 || v < 0 || u >= static_cast<int>(n.value.size()) ||
      v >= static_cast<int>(n.value.size()))
    throw Error(Errc::unknown_face, "annulus bound: unknown face id");
  int gap = std::abs(n.value[u] - n.value[v]);
  return std::max(0, gap - 1);
}

namespace {

int letter_rank(int l) { return 2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0); }

}  // namespace

CyclicWord CyclicWord::reduced(std::vector<int> raw) {
  std::vector<int> st;
  for (int l : raw) {
    if (!st.empty() && st.back() == -l)
      st.pop_back();
    else
      st.push_back(l);
  }
  // Wrap-around cancellation.
  size_t lo = 0, hi = st.size();
  while (hi - lo >= 2 && st[lo] == -st[hi - 1]) {
    ++lo;
    --hi;
  }
  std::vector<int> w(st.begin() + lo, st.begin() + hi);
  if (w.empty()) return CyclicWord{};
  // Rank-minimal rotation.
  auto less_rot = [&](size_t a, size_t b) {
    for (size_t i = 0; i < w.size(); ++i) {
      int ra = letter_rank(w[(a + i) % w.size()]);
      int rb = letter_rank(w[(b + i) % w.size()]);
      if (ra != rb) return ra < rb;
    }
    return false;
  };
  size_t best = 0;
  for (size_t i = 1; i < w.size(); ++i)
    if (less_rot(i, best)) best = i;
  std::vector<int> out(w.size());
  for (size_t i = 0; i < w.size(); ++i) out[i] = w[(best + i) % w.size()];
  return CyclicWord{std::move(out)};
}

bool CyclicWord::operator<(const CyclicWord& o) const {
  if (letters.size() != o.letters.size()) return letters.size() < o.letters.size();
  for (size_t i = 0; i < letters.size(); ++i) {
    int ra = letter_rank(letters[i]), rb = letter_rank(o.letters[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

ArcSystem build_arc_system(const Curve& c, const std::vector<int>& puncture_faces) {
  if (puncture_faces.empty())
    throw Error(Errc::empty_punctures, "arc system needs at least one puncture");
  std::set<int> punct(puncture_faces.begin(), puncture_faces.end());
  FaceSet f = faces(c.map);
  for (int p : punct)
    if (p < 0 || p >= f.count) throw Error(Errc::unknown_face, "puncture face out of range");

  ArcSystem a;
  a.root_face = *punct.begin();
  for (int p : punct)
    if (p != a.root_face) a.generator_face.push_back(p);
  if (c.map.is_circle()) {
    for (size_t g = 0; g < a.generator_face.size(); ++g)
      a.arc_path.push_back({{a.generator_face[g], -1}, {a.root_face, -1}});
    return a;
  }

  // BFS tree over the dual graph, ties broken by smallest face id then
  // smallest edge id. parent_dart[g] is the side of the tree edge in g.
  std::vector<int> dist(f.count, -1), parent_dart(f.count, -1), parent_face(f.count, -1);
  dist[a.root_face] = 0;
  std::vector<int> layer{a.root_face}, discovery{a.root_face};
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    std::vector<int> next;
    for (int fc : layer) {
      std::vector<int> sides = f.boundary[fc];
      std::sort(sides.begin(), sides.end(), [&](int x, int y) {
        return std::min(x, c.map.mate(x)) < std::min(y, c.map.mate(y));
      });
      for (int d : sides) {
        int g = f.of_dart[c.map.mate(d)];
        if (dist[g] >= 0) continue;
        dist[g] = dist[fc] + 1;
        parent_face[g] = fc;
        parent_dart[g] = c.map.mate(d);
        next.push_back(g);
        discovery.push_back(g);
      }
    }
    layer = std::move(next);
  }

  std::vector<int> gen_of_face(f.count, 0);
  for (size_t g = 0; g < a.generator_face.size(); ++g)
    gen_of_face[a.generator_face[g]] = static_cast<int>(g) + 1;

  // children_by_walk[fc]: child faces ordered by the position of their
  // connecting edge side along fc's boundary walk, starting just after the
  // parent side (or from the walk start for the root).
  std::vector<std::vector<int>> children_by_walk(f.count);
  std::vector<int> child_of_side(c.map.darts(), -1);
  for (int g = 0; g < f.count; ++g)
    if (parent_dart[g] >= 0) child_of_side[c.map.mate(parent_dart[g])] = g;
  for (int fc = 0; fc < f.count; ++fc) {
    const auto& walk = f.boundary[fc];
    int offset = 0;
    if (parent_dart[fc] >= 0) {
      for (size_t i = 0; i < walk.size(); ++i)
        if (walk[i] == parent_dart[fc]) offset = static_cast<int>(i) + 1;
    }
    for (size_t i = 0; i < walk.size(); ++i) {
      int d = walk[(offset + i) % walk.size()];
      if (child_of_side[d] >= 0) children_by_walk[fc].push_back(child_of_side[d]);
    }
  }

  // Leaves first: bundles through each tree edge, positions along the
  // child-side dart. Children merge in reverse walk order, the face's own
  // strand last; the double reversal across a face transit cancels.
  std::vector<std::vector<int>> order(f.count);
  for (auto it = discovery.rbegin(); it != discovery.rend(); ++it) {
    int fc = *it;
    std::vector<int> acc;
    const auto& kids = children_by_walk[fc];
    for (auto k = kids.rbegin(); k != kids.rend(); ++k)
      acc.insert(acc.end(), order[*k].begin(), order[*k].end());
    if (gen_of_face[fc] > 0) acc.push_back(gen_of_face[fc]);
    order[fc] = std::move(acc);
    if (parent_dart[fc] >= 0 && !order[fc].empty()) a.bundle[parent_dart[fc]] = order[fc];
  }

  for (size_t g = 0; g < a.generator_face.size(); ++g) {
    std::vector<std::pair<int, int>> path;
    int fc = a.generator_face[g];
    while (fc != a.root_face) {
      path.push_back({fc, parent_dart[fc]});
      fc = parent_face[fc];
    }
    path.push_back({a.root_face, -1});
    a.arc_path.push_back(std::move(path));
  }
  return a;
}

namespace {

// Letters read while walking the edge of outgoing dart d. An arc bundle is
// stored on the child-side dart of its tree edge and directed child->parent;
// crossing right-to-left of the walk reads the positive generator.
void append_edge_letters(const Curve& c, const ArcSystem& arcs, int d, std::vector<int>& out) {
  auto it = arcs.bundle.find(d);
  if (it != arcs.bundle.end()) {
    // Child face is on the left of the walk: arcs cross left-to-right.
    for (int g : it->second) out.push_back(-g);
    return;
  }
  it = arcs.bundle.find(c.map.mate(d));
  if (it != arcs.bundle.end()) {
    // Child face on the right; positions reverse along the opposite walk.
    for (auto g = it->second.rbegin(); g != it->second.rend(); ++g) out.push_back(*g);
  }
}

}  // namespace

ConjClass loop_word(const Curve& c, const ArcSystem& arcs) {
  if (c.map.is_circle()) {
    if (arcs.generator_face.empty()) return CyclicWord{};
    return CyclicWord::reduced({1});
  }
  std::vector<int> raw;
  for (int d : knot_orbit(c.map)) append_edge_letters(c, arcs, d, raw);
  return CyclicWord::reduced(std::move(raw));
}

std::pair<ConjClass, ConjClass> smoothed_loops(const Curve& c, const ArcSystem& arcs,
                                               int crossing) {
  if (c.map.is_circle() || crossing < 0 || crossing >= c.map.crossings())
    throw Error(Errc::unknown_crossing, "smoothed_loops: unknown crossing");
  auto orbit = knot_orbit(c.map);
  int j1 = -1, j2 = -1;
  for (int i = 0; i < static_cast<int>(orbit.size()); ++i) {
    if (dart_crossing(orbit[i]) != crossing) continue;
    (j1 < 0 ? j1 : j2) = i;
  }
  if (j1 < 0 || j2 < 0) throw Error(Errc::internal, "crossing not on traversal");
  std::vector<int> raw1, raw2;
  for (int i = j1; i < j2; ++i) append_edge_letters(c, arcs, orbit[i], raw1);
  for (int i = j2; i < j1 + static_cast<int>(orbit.size()); ++i)
    append_edge_letters(c, arcs, orbit[i % orbit.size()], raw2);
  return {CyclicWord::reduced(std::move(raw1)), CyclicWord::reduced(std::move(raw2))};
}

namespace {

// +1 when the second outgoing branch is the counterclockwise successor of the
// first at the crossing.
int crossing_sign(const std::vector<int>& orbit, int crossing) {
  int s1 = -1, s2 = -1;
  for (int d : orbit) {
    if (dart_crossing(d) != crossing) continue;
    (s1 < 0 ? s1 : s2) = dart_slot(d);
  }
  if (((s1 + 1) & 3) == s2) return 1;
  if (((s2 + 1) & 3) == s1) return -1;
  throw Error(Errc::internal, "crossing branches not transversal");
}

}  // namespace

int CobracketElement::term_count() const {
  int n = 0;
  for (const auto& [k, v] : terms) n += std::abs(v);
  return n;
}

CobracketElement cobracket(const Curve& c, const std::vector<int>& puncture_faces) {
  CobracketElement el;
  if (puncture_faces.empty())
    throw Error(Errc::empty_punctures, "cobracket needs a puncture set");
  if (c.map.is_circle()) return el;
  ArcSystem arcs = build_arc_system(c, puncture_faces);
  auto orbit = knot_orbit(c.map);
  for (int p = 0; p < c.map.crossings(); ++p) {
    auto [w1, w2] = smoothed_loops(c, arcs, p);
    if (w1.trivial() || w2.trivial()) continue;
    int eps = crossing_sign(orbit, p);
    el.terms[{w1, w2}] += eps;
    el.terms[{w2, w1}] -= eps;
  }
  for (auto it = el.terms.begin(); it != el.terms.end();) {
    if (it->second == 0)
      it = el.terms.erase(it);
    else
      ++it;
  }
  return el;
}

int cobracket_bound(const Curve& c, const std::vector<int>& puncture_faces) {
  if (puncture_faces.empty()) return 0;
  return cobracket(c, puncture_faces).term_count() / 2;
}

int lower_bound(const Curve& c, const std::vector<int>& puncture_faces) {
  std::set<int> punct(puncture_faces.begin(), puncture_faces.end());
  if (punct.size() <= 1) return 0;
  std::vector<int> ps(punct.begin(), punct.end());
  Numbering n = alexander_numbering(c);
  int best = 0;
  for (size_t i = 0; i < ps.size(); ++i)
    for (size_t j = i + 1; j < ps.size(); ++j)
      best = std::max(best, std::max(0, std::abs(n.value[ps[i]] - n.value[ps[j]]) - 1));
  best = std::max(best, cobracket_bound(c, ps));
  return best;
}

}  // namespace knotsphere
