#include "knotsphere/moves.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace knotsphere {

const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::r1_delete: return "R1-";
    case MoveKind::r1_insert: return "R1+";
    case MoveKind::r2_delete: return "R2-";
    case MoveKind::r2_insert: return "R2+";
    case MoveKind::r3: return "R3";
  }
  return "?";
}

namespace {

std::vector<std::vector<int>> punctures_by_face(const PuncturedState& s, int face_count) {
  std::vector<std::vector<int>> by(face_count);
  for (int i = 0; i < static_cast<int>(s.punctures.size()); ++i)
    by[s.punctures[i]].push_back(i);
  return by;
}

// Removes the crossings in xs, splicing strands through them. Valid only when
// at least one crossing survives and no deleted cycle is a separate component
// (guaranteed for knots).
struct Deletion {
  Diagram diagram{Diagram::circle()};
  std::vector<int> dart_map;  // old dart -> new dart, -1 for deleted
};

Deletion delete_crossings(const Diagram& d, const std::vector<int>& xs) {
  const int m = d.crossings();
  std::vector<uint8_t> gone(m, 0);
  for (int c : xs) gone[c] = 1;
  std::vector<int> cr_map(m, -1);
  int mm = 0;
  for (int c = 0; c < m; ++c)
    if (!gone[c]) cr_map[c] = mm++;
  Deletion out;
  out.dart_map.assign(4 * m, -1);
  for (int dd = 0; dd < 4 * m; ++dd)
    if (!gone[dart_crossing(dd)])
      out.dart_map[dd] = make_dart(cr_map[dart_crossing(dd)], dart_slot(dd));
  std::vector<int> mate(4 * mm, -1);
  std::vector<uint8_t> over(mm, 0), outg(4 * mm, 0);
  for (int dd = 0; dd < 4 * m; ++dd) {
    if (out.dart_map[dd] < 0) continue;
    int t = d.mate(dd);
    while (gone[dart_crossing(t)]) t = d.mate(through(t));
    mate[out.dart_map[dd]] = out.dart_map[t];
    outg[out.dart_map[dd]] = d.outgoing(dd) ? 1 : 0;
  }
  for (int c = 0; c < m; ++c)
    if (!gone[c]) over[cr_map[c]] = d.over13(c) ? 1 : 0;
  out.diagram = Diagram(std::move(mate), std::move(over), std::move(outg));
  return out;
}

int first_survivor(const std::vector<int>& boundary, const Deletion& del) {
  for (int dd : boundary)
    if (del.dart_map[dd] >= 0) return dd;
  return -1;
}

bool r2_pattern_ok(const Diagram& d, int x, int y) {
  if (dart_crossing(x) == dart_crossing(y)) return false;
  // Strand through x at its crossing continues through y+1 at the other; the
  // bigon cancels when that strand is over at both crossings (or under at
  // both, which makes the other strand over at both).
  bool over1 = d.strand_over(dart_crossing(x), dart_slot(x) & 1);
  bool over2 = d.strand_over(dart_crossing(y), (dart_slot(y) + 1) & 1);
  return over1 == over2;
}

struct TriangleInfo {
  int t[3];
  bool admissible = false;
};

TriangleInfo triangle_info(const Diagram& d, const std::vector<int>& boundary) {
  TriangleInfo ti;
  for (int i = 0; i < 3; ++i) ti.t[i] = boundary[i];
  int c0 = dart_crossing(ti.t[0]), c1 = dart_crossing(ti.t[1]), c2 = dart_crossing(ti.t[2]);
  if (c0 == c1 || c1 == c2 || c0 == c2) return ti;
  for (int i = 0; i < 3; ++i) {
    int ai = ti.t[i];
    int bj = rot(ti.t[(i + 1) % 3], 1);  // other end of side i
    bool o1 = d.strand_over(dart_crossing(ai), dart_slot(ai) & 1);
    bool o2 = d.strand_over(dart_crossing(bj), dart_slot(bj) & 1);
    if (o1 && o2) ti.admissible = true;
  }
  return ti;
}

PuncturedState apply_r1_delete(const PuncturedState& s, const Move& m, const FaceSet& f,
                               const std::vector<std::vector<int>>& punct_by_face) {
  const Diagram& d = s.diagram;
  int u = m.a;
  if (d.is_circle() || u < 0 || u >= d.darts() || d.mate(u) != rot(u, 1))
    throw Error(Errc::stale_move, "r1 delete: no monogon at site");
  int mono = f.of_dart[u];
  if (!punct_by_face[mono].empty()) throw Error(Errc::stale_move, "r1 delete: monogon punctured");

  std::vector<int> punct(s.punctures.size(), -1);
  if (d.crossings() == 1) {
    int o = d.outgoing(rot(u, 2)) ? rot(u, 2) : rot(u, 3);
    int left_old = f.of_dart[o];
    for (size_t i = 0; i < s.punctures.size(); ++i)
      punct[i] = s.punctures[i] == left_old ? 0 : 1;
    return PuncturedState{Diagram::circle(), std::move(punct)};
  }
  Deletion del = delete_crossings(d, {dart_crossing(u)});
  FaceSet nf = faces(del.diagram);
  for (size_t i = 0; i < s.punctures.size(); ++i) {
    int anchor = first_survivor(f.boundary[s.punctures[i]], del);
    if (anchor < 0) throw Error(Errc::internal, "r1 delete: punctured face lost");
    punct[i] = nf.of_dart[del.dart_map[anchor]];
  }
  return PuncturedState{del.diagram, std::move(punct)};
}

PuncturedState apply_r2_delete(const PuncturedState& s, const Move& m, const FaceSet& f,
                               const std::vector<std::vector<int>>& punct_by_face) {
  const Diagram& d = s.diagram;
  int x = m.a;
  if (d.is_circle() || x < 0 || x >= d.darts())
    throw Error(Errc::stale_move, "r2 delete: bad site");
  int bigon = f.of_dart[x];
  if (f.boundary[bigon].size() != 2) throw Error(Errc::stale_move, "r2 delete: no bigon");
  int y = f.boundary[bigon][0] == x ? f.boundary[bigon][1] : f.boundary[bigon][0];
  if (!r2_pattern_ok(d, x, y)) throw Error(Errc::stale_move, "r2 delete: not cancellable");
  if (!punct_by_face[bigon].empty()) throw Error(Errc::stale_move, "r2 delete: bigon punctured");

  std::vector<int> punct(s.punctures.size(), -1);
  if (d.crossings() == 2) {
    std::set<int> bigon_edge_darts{x, d.mate(x), y, d.mate(y)};
    for (size_t i = 0; i < s.punctures.size(); ++i) {
      int side = -1;
      for (int dd : f.boundary[s.punctures[i]])
        if (!bigon_edge_darts.count(dd)) {
          side = dd;
          break;
        }
      if (side < 0) throw Error(Errc::internal, "r2 delete: no surviving arc side");
      punct[i] = d.outgoing(side) ? 0 : 1;
    }
    return PuncturedState{Diagram::circle(), std::move(punct)};
  }
  Deletion del = delete_crossings(d, {dart_crossing(x), dart_crossing(y)});
  FaceSet nf = faces(del.diagram);
  // Pulling the strands apart opens a channel joining the bigon with the two
  // opposite corner faces at the vanished crossings.
  int o1 = f.of_dart[through(x)], o2 = f.of_dart[through(y)];
  int merged_anchor = first_survivor(f.boundary[o1], del);
  if (merged_anchor < 0) merged_anchor = first_survivor(f.boundary[o2], del);
  for (size_t i = 0; i < s.punctures.size(); ++i) {
    int fid = s.punctures[i];
    int anchor =
        (fid == bigon || fid == o1 || fid == o2) ? merged_anchor
                                                 : first_survivor(f.boundary[fid], del);
    if (anchor < 0) throw Error(Errc::internal, "r2 delete: punctured face lost");
    punct[i] = nf.of_dart[del.dart_map[anchor]];
  }
  return PuncturedState{del.diagram, std::move(punct)};
}

PuncturedState apply_r1_insert(const PuncturedState& s, const Move& m, const FaceSet& f) {
  const Diagram& d = s.diagram;
  if (d.is_circle()) {
    if (m.circle_face != 0 && m.circle_face != 1)
      throw Error(Errc::stale_move, "r1 insert: bad circle face");
    std::vector<int> mate{3, 2, 1, 0};
    std::vector<uint8_t> over{static_cast<uint8_t>(m.flag ? 1 : 0)};
    std::vector<uint8_t> outg(4, 0);
    if (m.circle_face == 1) {
      outg[2] = outg[3] = 1;  // kink pokes into the right face
    } else {
      outg[0] = outg[1] = 1;  // kink pokes into the left face
    }
    Diagram nd(std::move(mate), std::move(over), std::move(outg));
    FaceSet nf = faces(nd);
    int left_new = m.circle_face == 1 ? nf.of_dart[3] : nf.of_dart[0];
    int right_new = m.circle_face == 1 ? nf.of_dart[0] : nf.of_dart[3];
    std::vector<int> punct(s.punctures.size(), -1);
    for (size_t i = 0; i < s.punctures.size(); ++i)
      punct[i] = s.punctures[i] == 0 ? left_new : right_new;
    return PuncturedState{std::move(nd), std::move(punct)};
  }
  int dd = m.a;
  if (dd < 0 || dd >= d.darts()) throw Error(Errc::stale_move, "r1 insert: bad dart");
  int q = d.darts();
  int dbar = d.mate(dd);
  std::vector<int> mate = d.mates();
  mate.resize(q + 4);
  mate[dd] = q + 3;
  mate[q + 3] = dd;
  mate[dbar] = q + 0;
  mate[q + 0] = dbar;
  mate[q + 1] = q + 2;
  mate[q + 2] = q + 1;
  std::vector<uint8_t> over = d.over_bits();
  over.push_back(m.flag ? 1 : 0);
  std::vector<uint8_t> outg = d.outgoing_bits();
  outg.resize(q + 4, 0);
  if (d.outgoing(dd)) {
    outg[q + 0] = outg[q + 1] = 1;
  } else {
    outg[q + 2] = outg[q + 3] = 1;
  }
  Diagram nd(std::move(mate), std::move(over), std::move(outg));
  FaceSet nf = faces(nd);
  std::vector<int> punct(s.punctures.size(), -1);
  for (size_t i = 0; i < s.punctures.size(); ++i)
    punct[i] = nf.of_dart[f.boundary[s.punctures[i]][0]];
  return PuncturedState{std::move(nd), std::move(punct)};
}

PuncturedState apply_r2_insert(const PuncturedState& s, const Move& m, const FaceSet& f,
                               const std::vector<std::vector<int>>& punct_by_face) {
  const Diagram& d = s.diagram;
  int d1 = m.a, d2 = m.b;
  if (d.is_circle() || d1 == d2 || d1 < 0 || d2 < 0 || d1 >= d.darts() || d2 >= d.darts() ||
      f.of_dart[d1] != f.of_dart[d2])
    throw Error(Errc::stale_move, "r2 insert: sides not on a common face");
  int host = f.of_dart[d1];
  {
    std::set<int> allowed(punct_by_face[host].begin(), punct_by_face[host].end());
    for (int l : m.split)
      if (!allowed.count(l)) throw Error(Errc::stale_move, "r2 insert: split labels stale");
  }
  int p = d.darts(), r = d.darts() + 4;
  int m1 = d.mate(d1), m2 = d.mate(d2);
  std::vector<int> mate = d.mates();
  mate.resize(r + 4);
  auto link = [&](int u, int v) {
    mate[u] = v;
    mate[v] = u;
  };
  link(d1, p + 1);
  link(d2, r + 2);
  link(p + 2, r + 0);
  link(p + 3, r + 3);
  if (m1 == d2) {
    link(p + 0, r + 1);  // the pushed edge crosses itself
  } else {
    link(p + 0, m2);
    link(r + 1, m1);
  }
  std::vector<uint8_t> over = d.over_bits();
  over.push_back(m.flag ? 1 : 0);
  over.push_back(m.flag ? 1 : 0);
  std::vector<uint8_t> outg = propagate_orientation(mate, d1, d.outgoing(d1));
  Diagram nd(std::move(mate), std::move(over), std::move(outg));
  FaceSet nf = faces(nd);
  std::set<int> to_d2(m.split.begin(), m.split.end());
  std::vector<int> punct(s.punctures.size(), -1);
  for (size_t i = 0; i < s.punctures.size(); ++i) {
    int fid = s.punctures[i];
    if (fid == host)
      punct[i] = to_d2.count(static_cast<int>(i)) ? nf.of_dart[d2] : nf.of_dart[d1];
    else
      punct[i] = nf.of_dart[f.boundary[fid][0]];
  }
  return PuncturedState{std::move(nd), std::move(punct)};
}

PuncturedState apply_r3(const PuncturedState& s, const Move& m, const FaceSet& f,
                        const std::vector<std::vector<int>>& punct_by_face) {
  const Diagram& d = s.diagram;
  int t0 = m.a;
  if (d.is_circle() || t0 < 0 || t0 >= d.darts())
    throw Error(Errc::stale_move, "r3: bad site");
  int tri = f.of_dart[t0];
  if (f.boundary[tri].size() != 3) throw Error(Errc::stale_move, "r3: no triangle");
  TriangleInfo ti = triangle_info(d, f.boundary[tri]);
  if (!ti.admissible) throw Error(Errc::stale_move, "r3: triangle not admissible");
  if (!punct_by_face[tri].empty()) throw Error(Errc::stale_move, "r3: triangle punctured");

  int A[3], B[3], C[3], D[3];
  for (int i = 0; i < 3; ++i) {
    A[i] = ti.t[i];
    B[i] = rot(ti.t[i], 1);
    C[i] = rot(ti.t[i], 2);
    D[i] = rot(ti.t[i], 3);
  }
  std::map<int, int> relocate;  // old attachment slot -> new attachment slot
  for (int i = 0; i < 3; ++i) {
    relocate[C[i]] = B[(i + 1) % 3];
    relocate[D[i]] = A[(i + 2) % 3];
  }
  auto tau = [&](int dd) {
    auto it = relocate.find(dd);
    return it == relocate.end() ? dd : it->second;
  };
  std::vector<int> mate = d.mates();
  auto link = [&](int u, int v) {
    mate[u] = v;
    mate[v] = u;
  };
  for (int i = 0; i < 3; ++i) {
    link(C[i], D[(i + 1) % 3]);
    link(A[i], tau(d.mate(D[(i + 1) % 3])));
    link(B[i], tau(d.mate(C[(i + 2) % 3])));
  }
  for (int dd = 0; dd < d.darts(); ++dd)
    if (mate[mate[dd]] != dd) throw Error(Errc::internal, "r3 rewrite inconsistent");
  Diagram nd(std::move(mate), d.over_bits(), d.outgoing_bits());
  FaceSet nf = faces(nd);
  std::set<int> side_darts;
  for (int i = 0; i < 3; ++i) {
    side_darts.insert(A[i]);
    side_darts.insert(B[i]);
  }
  std::vector<int> punct(s.punctures.size(), -1);
  for (size_t i = 0; i < s.punctures.size(); ++i) {
    int anchor = -1;
    for (int dd : f.boundary[s.punctures[i]])
      if (!side_darts.count(dd)) {
        anchor = dd;
        break;
      }
    if (anchor < 0) throw Error(Errc::internal, "r3: punctured face without external side");
    punct[i] = nf.of_dart[tau(anchor)];
  }
  return PuncturedState{std::move(nd), std::move(punct)};
}

}  // namespace

std::vector<Move> enumerate_moves(const PuncturedState& s) {
  std::vector<Move> out;
  const Diagram& d = s.diagram;
  if (d.is_circle()) {
    for (int face = 0; face < 2; ++face)
      for (int chir = 0; chir < 2; ++chir)
        out.push_back(Move{MoveKind::r1_insert, -1, -1, chir == 1, face, {}});
    return out;
  }
  FaceSet f = faces(d);
  auto punct_by_face = punctures_by_face(s, f.count);

  for (int fc = 0; fc < f.count; ++fc)
    if (f.boundary[fc].size() == 1 && punct_by_face[fc].empty())
      out.push_back(Move{MoveKind::r1_delete, f.boundary[fc][0], -1, false, -1, {}});

  for (int dd = 0; dd < d.darts(); ++dd)
    for (int chir = 0; chir < 2; ++chir)
      out.push_back(Move{MoveKind::r1_insert, dd, -1, chir == 1, -1, {}});

  for (int fc = 0; fc < f.count; ++fc) {
    if (f.boundary[fc].size() != 2 || !punct_by_face[fc].empty()) continue;
    int x = f.boundary[fc][0], y = f.boundary[fc][1];
    if (r2_pattern_ok(d, x, y)) out.push_back(Move{MoveKind::r2_delete, std::min(x, y), -1, false, -1, {}});
  }

  for (int fc = 0; fc < f.count; ++fc) {
    const auto& walk = f.boundary[fc];
    const auto& labels = punct_by_face[fc];
    for (int d1 : walk)
      for (int d2 : walk) {
        if (d1 == d2) continue;
        for (int over = 0; over < 2; ++over) {
          for (int mask = 0; mask < (1 << labels.size()); ++mask) {
            std::vector<int> split;
            for (size_t k = 0; k < labels.size(); ++k)
              if (mask & (1 << k)) split.push_back(labels[k]);
            out.push_back(Move{MoveKind::r2_insert, d1, d2, over == 1, -1, std::move(split)});
          }
        }
      }
  }

  for (int fc = 0; fc < f.count; ++fc) {
    if (f.boundary[fc].size() != 3 || !punct_by_face[fc].empty()) continue;
    TriangleInfo ti = triangle_info(d, f.boundary[fc]);
    if (ti.admissible) out.push_back(Move{MoveKind::r3, f.boundary[fc][0], -1, false, -1, {}});
  }
  return out;
}

PuncturedState apply_move(const PuncturedState& s, const Move& m) {
  FaceSet f = faces(s.diagram);
  auto punct_by_face = punctures_by_face(s, f.count);
  switch (m.kind) {
    case MoveKind::r1_delete: return apply_r1_delete(s, m, f, punct_by_face);
    case MoveKind::r1_insert: return apply_r1_insert(s, m, f);
    case MoveKind::r2_delete: return apply_r2_delete(s, m, f, punct_by_face);
    case MoveKind::r2_insert: return apply_r2_insert(s, m, f, punct_by_face);
    case MoveKind::r3: return apply_r3(s, m, f, punct_by_face);
  }
  throw Error(Errc::bad_params, "unknown move kind");
}

std::vector<Neighbor> neighbor_moves(const PuncturedState& s, int cap, bool deletions_only) {
  if (cap < s.diagram.crossings())
    throw Error(Errc::bad_params, "neighbor cap below current crossing count");
  std::vector<Neighbor> out;
  std::set<std::string> seen;
  for (const Move& m : enumerate_moves(s)) {
    int delta = 0;
    switch (m.kind) {
      case MoveKind::r1_delete: delta = -1; break;
      case MoveKind::r1_insert: delta = 1; break;
      case MoveKind::r2_delete: delta = -2; break;
      case MoveKind::r2_insert: delta = 2; break;
      case MoveKind::r3: delta = 0; break;
    }
    if (deletions_only && delta > 0) continue;
    if (s.diagram.crossings() + delta > cap) continue;
    PuncturedState ns = apply_move(s, m);
    std::string key = canonical_key(ns);
    if (seen.insert(key).second) out.push_back(Neighbor{m, std::move(ns), std::move(key)});
  }
  std::sort(out.begin(), out.end(), [](const Neighbor& a, const Neighbor& b) {
    return a.key < b.key;
  });
  return out;
}

std::vector<PuncturedState> neighbors(const PuncturedState& s, int cap) {
  std::vector<PuncturedState> out;
  for (auto& n : neighbor_moves(s, cap)) out.push_back(std::move(n.state));
  return out;
}

}  // namespace knotsphere
