#include "knotsphere/state.hpp"

#include <algorithm>
#include <map>

namespace knotsphere {

PuncturedState make_state(Diagram d, std::vector<int> puncture_faces) {
  FaceSet f = faces(d);
  for (int p : puncture_faces)
    if (p < 0 || p >= f.count)
      throw Error(Errc::unknown_face, "puncture face " + std::to_string(p) + " out of range");
  return PuncturedState{std::move(d), std::move(puncture_faces)};
}

namespace {

struct Relabeling {
  std::vector<int> cr_new;   // old crossing -> new id
  std::vector<int> cr_old;   // new id -> old crossing
  std::vector<int> rot_off;  // old crossing -> slot that becomes canonical slot 0
};

// Deterministic traversal labeling with the start dart mapped to (0, 0).
Relabeling relabel_from(const Diagram& d, int start) {
  const int m = d.crossings();
  Relabeling r;
  r.cr_new.assign(m, -1);
  r.rot_off.assign(m, 0);
  r.cr_old.reserve(m);
  auto discover = [&](int dart) {
    int c = dart_crossing(dart);
    if (r.cr_new[c] >= 0) return;
    r.cr_new[c] = static_cast<int>(r.cr_old.size());
    r.cr_old.push_back(c);
    r.rot_off[c] = dart_slot(dart);
  };
  discover(start);
  for (size_t q = 0; q < r.cr_old.size(); ++q) {
    int c = r.cr_old[q];
    for (int s = 0; s < 4; ++s) discover(d.mate(make_dart(c, (r.rot_off[c] + s) & 3)));
  }
  return r;
}

int map_dart(const Relabeling& r, int old) {
  int c = dart_crossing(old);
  return make_dart(r.cr_new[c], (dart_slot(old) - r.rot_off[c]) & 3);
}

std::string encode(const Diagram& d, const FaceSet& f, const std::vector<int>& punct,
                   const Relabeling& r) {
  const int m = d.crossings();
  std::string out;
  out.reserve(static_cast<size_t>(m) * 13 + punct.size() + 4);
  out.push_back(static_cast<char>(1));
  out.push_back(static_cast<char>(m));
  // Mates, over bits and orientation in canonical dart order.
  for (int ci = 0; ci < m; ++ci) {
    int c = r.cr_old[ci];
    for (int s = 0; s < 4; ++s) {
      int old = make_dart(c, (r.rot_off[c] + s) & 3);
      int md = map_dart(r, d.mate(old));
      out.push_back(static_cast<char>(dart_crossing(md)));
      out.push_back(static_cast<char>(dart_slot(md)));
      out.push_back(static_cast<char>(d.outgoing(old) ? 1 : 0));
    }
    bool over = d.over13(c) ^ ((r.rot_off[c] & 1) != 0);
    out.push_back(static_cast<char>(over ? 1 : 0));
  }
  // Canonical face ids: order old faces by their minimal canonical dart.
  std::vector<int> face_key(f.count, 1 << 30);
  for (int dd = 0; dd < d.darts(); ++dd)
    face_key[f.of_dart[dd]] = std::min(face_key[f.of_dart[dd]], map_dart(r, dd));
  std::vector<int> order(f.count);
  for (int i = 0; i < f.count; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return face_key[a] < face_key[b]; });
  std::vector<int> face_new(f.count);
  for (int i = 0; i < f.count; ++i) face_new[order[i]] = i;
  out.push_back(static_cast<char>(punct.size()));
  for (int p : punct) out.push_back(static_cast<char>(face_new[p]));
  return out;
}

}  // namespace

std::string canonical_key(const PuncturedState& s) {
  if (s.diagram.is_circle()) {
    std::string out;
    out.push_back(static_cast<char>(0));
    out.push_back(static_cast<char>(s.punctures.size()));
    for (int p : s.punctures) out.push_back(static_cast<char>(p));
    return out;
  }
  FaceSet f = faces(s.diagram);
  std::string best;
  for (int start = 0; start < s.diagram.darts(); ++start) {
    Relabeling r = relabel_from(s.diagram, start);
    std::string k = encode(s.diagram, f, s.punctures, r);
    if (best.empty() || k < best) best = std::move(k);
  }
  return best;
}

PuncturedState canonicalize(const PuncturedState& s) {
  if (s.diagram.is_circle()) return s;
  FaceSet f = faces(s.diagram);
  std::string best;
  int best_start = 0;
  for (int start = 0; start < s.diagram.darts(); ++start) {
    Relabeling r = relabel_from(s.diagram, start);
    std::string k = encode(s.diagram, f, s.punctures, r);
    if (best.empty() || k < best) {
      best = std::move(k);
      best_start = start;
    }
  }
  Relabeling r = relabel_from(s.diagram, best_start);
  const int m = s.diagram.crossings();
  std::vector<int> mate(4 * m);
  std::vector<uint8_t> over(m), outg(4 * m);
  for (int dd = 0; dd < 4 * m; ++dd) {
    int nd = map_dart(r, dd);
    mate[nd] = map_dart(r, s.diagram.mate(dd));
    outg[nd] = s.diagram.outgoing(dd) ? 1 : 0;
  }
  for (int c = 0; c < m; ++c)
    over[r.cr_new[c]] = (s.diagram.over13(c) ^ ((r.rot_off[c] & 1) != 0)) ? 1 : 0;
  Diagram nd(std::move(mate), std::move(over), std::move(outg));
  FaceSet nf = faces(nd);
  // Map each punctured face through any of its darts.
  std::vector<int> punct;
  punct.reserve(s.punctures.size());
  for (int p : s.punctures) {
    if (f.boundary[p].empty()) throw Error(Errc::internal, "face without boundary");
    punct.push_back(nf.of_dart[map_dart(r, f.boundary[p][0])]);
  }
  return PuncturedState{std::move(nd), std::move(punct)};
}

}  // namespace knotsphere
