#include "knotsphere/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace knotsphere {

Diagram Diagram::circle() { return Diagram(); }

Diagram::Diagram(std::vector<int> mate, std::vector<uint8_t> over13,
                 std::vector<uint8_t> outgoing)
    : circle_(false), mate_(std::move(mate)), over13_(std::move(over13)),
      outgoing_(std::move(outgoing)) {
  validate();
}

void Diagram::validate() const {
  const int n = static_cast<int>(mate_.size());
  if (n == 0 || n % 4 != 0 || over13_.size() != static_cast<size_t>(n / 4) ||
      outgoing_.size() != static_cast<size_t>(n))
    throw Error(Errc::internal, "malformed diagram arrays");
  for (int d = 0; d < n; ++d) {
    int m = mate_[d];
    if (m < 0 || m >= n || m == d || mate_[m] != d)
      throw Error(Errc::internal, "edge involution broken at dart " + std::to_string(d));
  }
  // One outgoing dart per edge.
  for (int d = 0; d < n; ++d) {
    if (outgoing_[d] == outgoing_[mate_[d]])
      throw Error(Errc::inconsistent_traversal,
                  "edge with zero or two outgoing ends at dart " + std::to_string(d));
  }
  // The traversal d -> through(mate(d)) must have exactly two orbits (the two
  // directions of a single component), and outgoing flags must be constant on
  // each orbit.
  std::vector<int> orbit_of(n, -1);
  int orbits = 0;
  for (int d = 0; d < n; ++d) {
    if (orbit_of[d] >= 0) continue;
    int x = d;
    while (orbit_of[x] < 0) {
      orbit_of[x] = orbits;
      if (outgoing_[x] != outgoing_[d])
        throw Error(Errc::inconsistent_traversal, "orientation flags not traversal-invariant");
      x = through(mate_[x]);
    }
    ++orbits;
  }
  if (orbits != 2)
    throw Error(Errc::multiple_components,
                "diagram has " + std::to_string(orbits / 2) + " components");
  // Sphere check: faces must number crossings + 2.
  FaceSet f = faces(*this);
  if (f.count != crossings() + 2)
    throw Error(Errc::not_spherical, "map does not embed in the sphere: " +
                                         std::to_string(f.count) + " faces for " +
                                         std::to_string(crossings()) + " crossings");
}

Curve underlying_curve(const Diagram& d) {
  if (d.is_circle()) return Curve{Diagram::circle()};
  std::vector<uint8_t> over(d.crossings(), 0);
  return Curve{Diagram(d.mates(), over, d.outgoing_bits())};
}

FaceSet faces(const Diagram& d) {
  FaceSet f;
  if (d.is_circle()) {
    f.count = 2;
    f.boundary.resize(2);
    return f;
  }
  const int n = d.darts();
  f.of_dart.assign(n, -1);
  for (int start = 0; start < n; ++start) {
    if (f.of_dart[start] >= 0) continue;
    int id = f.count++;
    f.boundary.emplace_back();
    int x = start;
    while (f.of_dart[x] < 0) {
      f.of_dart[x] = id;
      f.boundary[id].push_back(x);
      x = rot(d.mate(x), 3);
    }
  }
  return f;
}

std::vector<int> knot_orbit(const Diagram& d) {
  std::vector<int> order;
  if (d.is_circle()) return order;
  int start = -1;
  for (int i = 0; i < d.darts(); ++i)
    if (d.outgoing(i)) {
      start = i;
      break;
    }
  int x = start;
  do {
    order.push_back(x);
    x = through(d.mate(x));
  } while (x != start);
  return order;
}

std::vector<uint8_t> propagate_orientation(const std::vector<int>& mate, int anchor,
                                           bool anchor_outgoing) {
  const int n = static_cast<int>(mate.size());
  std::vector<uint8_t> out(n, 2);
  int x = anchor;
  int visited = 0;
  do {
    out[x] = anchor_outgoing ? 1 : 0;
    x = through(mate[x]);
    ++visited;
  } while (x != anchor && visited <= n);
  if (visited != n / 2)
    throw Error(Errc::multiple_components, "traversal orbit does not cover one component");
  for (int dd = 0; dd < n; ++dd)
    if (out[dd] == 2) out[dd] = anchor_outgoing ? 0 : 1;
  return out;
}

namespace {

std::vector<std::vector<int>> parse_pd_rows(const std::string& text) {
  std::vector<std::vector<int>> rows;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '[')
    throw Error(Errc::bad_params, "expected '[' at start of PD code");
  ++i;
  skip_ws();
  while (i < text.size() && text[i] != ']') {
    if (text[i] != '[') throw Error(Errc::bad_params, "expected '[' starting a crossing row");
    ++i;
    std::vector<int> row;
    skip_ws();
    while (i < text.size() && text[i] != ']') {
      size_t j = i;
      while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])))) ++j;
      if (j == i) throw Error(Errc::bad_params, "expected edge label");
      row.push_back(std::stoi(text.substr(i, j - i)));
      i = j;
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw Error(Errc::bad_params, "unterminated crossing row");
    ++i;  // ']'
    rows.push_back(std::move(row));
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      skip_ws();
    }
  }
  if (i >= text.size()) throw Error(Errc::bad_params, "unterminated PD code");
  ++i;
  skip_ws();
  if (i != text.size()) throw Error(Errc::bad_params, "trailing input after PD code");
  return rows;
}

}  // namespace

Diagram parse_diagram(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t == "unknot" || t == "\"unknot\"") return Diagram::circle();

  auto rows = parse_pd_rows(text);
  const int m = static_cast<int>(rows.size());
  if (m == 0) throw Error(Errc::bad_params, "empty PD code (use \"unknot\" for the circle)");
  for (auto& r : rows)
    if (r.size() != 4)
      throw Error(Errc::non_quadrivalent,
                  "crossing record with " + std::to_string(r.size()) + " edge labels");

  // Each label 1..2m appears exactly twice; pair the occurrences into edges.
  std::map<int, std::vector<int>> occ;  // label -> darts
  for (int c = 0; c < m; ++c)
    for (int s = 0; s < 4; ++s) occ[rows[c][s]].push_back(make_dart(c, s));
  for (int l = 1; l <= 2 * m; ++l) {
    auto it = occ.find(l);
    if (it == occ.end() || it->second.size() != 2)
      throw Error(Errc::unmatched_edge, "edge label " + std::to_string(l) +
                                            " does not appear exactly twice");
  }
  if (static_cast<int>(occ.size()) != 2 * m)
    throw Error(Errc::unmatched_edge, "edge labels are not 1..2m");
  std::vector<int> mate(4 * m, -1);
  std::vector<int> label(4 * m, 0);
  for (auto& [l, darts] : occ) {
    mate[darts[0]] = darts[1];
    mate[darts[1]] = darts[0];
    label[darts[0]] = label[darts[1]] = l;
  }

  // Orientation: slot 0 is the incoming under-strand, slot 2 the outgoing one.
  // The orbit through dart (0,2) must contain every slot-2 dart and no slot-0
  // dart, and must meet each edge at the end where the traversal leaves it.
  std::vector<uint8_t> outgoing;
  try {
    outgoing = propagate_orientation(mate, make_dart(0, 2), true);
  } catch (const Error&) {
    throw Error(Errc::multiple_components, "PD code has more than one component");
  }
  for (int c = 0; c < m; ++c) {
    if (!outgoing[make_dart(c, 2)] || outgoing[make_dart(c, 0)])
      throw Error(Errc::inconsistent_traversal,
                  "under-strand direction inconsistent at crossing " + std::to_string(c));
  }
  // Labels must follow the traversal: walking from the edge labeled 1, labels
  // read 1,2,...,2m.
  {
    int start = -1;
    for (int dd = 0; dd < 4 * m; ++dd)
      if (outgoing[dd] && label[dd] == 1) start = dd;
    if (start < 0) throw Error(Errc::inconsistent_traversal, "no outgoing end labeled 1");
    int x = start;
    for (int expect = 1; expect <= 2 * m; ++expect) {
      if (label[x] != expect)
        throw Error(Errc::inconsistent_traversal,
                    "edge labels do not follow the traversal order");
      x = through(mate[x]);
    }
  }
  std::vector<uint8_t> over13(m, 1);  // under strand occupies slots {0,2}
  return Diagram(std::move(mate), std::move(over13), std::move(outgoing));
}

namespace {

// The incoming under-strand end at crossing c, the PD row anchor.
int pd_under_in(const Diagram& d, int c) {
  int parity = d.over13(c) ? 0 : 1;
  for (int s = parity; s < 4; s += 2)
    if (!d.outgoing(make_dart(c, s))) return make_dart(c, s);
  throw Error(Errc::internal, "no incoming under-strand end");
}

}  // namespace

std::string serialize_diagram(const Diagram& d) {
  if (d.is_circle()) return "unknot";
  const int m = d.crossings();
  std::vector<int> label(d.darts(), 0);
  auto orbit = knot_orbit(d);
  for (int i = 0; i < static_cast<int>(orbit.size()); ++i) {
    label[orbit[i]] = i + 1;
    label[d.mate(orbit[i])] = i + 1;
  }
  std::ostringstream os;
  os << "[";
  for (int c = 0; c < m; ++c) {
    int u = pd_under_in(d, c);
    os << (c ? "," : "") << "[";
    for (int k = 0; k < 4; ++k) os << (k ? "," : "") << label[rot(u, k)];
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<int> pd_relabel_map(const Diagram& d) {
  std::vector<int> map(d.darts());
  for (int c = 0; c < d.crossings(); ++c) {
    int u = dart_slot(pd_under_in(d, c));
    for (int s = 0; s < 4; ++s) map[make_dart(c, s)] = make_dart(c, (s - u) & 3);
  }
  return map;
}

}  // namespace knotsphere
