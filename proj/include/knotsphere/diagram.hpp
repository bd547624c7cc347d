#pragma once
// Combinatorial maps for knot diagrams on the 2-sphere.
//
// A diagram with m crossings lives on 4m darts; dart 4c+s is an edge end
// attached to crossing c at rotation slot s, slots numbered counterclockwise.
// Slots s and s+2 carry one transversal strand. The edge involution pairs
// darts; the per-dart outgoing flag records the knot orientation (exactly one
// dart of every edge is outgoing, and the outgoing darts form a single
// traversal orbit). The zero-crossing unknot is an explicit variant with two
// faces (0 = left of the orientation, 1 = right) and no darts.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotsphere {

enum class Errc {
  non_quadrivalent,
  unmatched_edge,
  inconsistent_traversal,
  multiple_components,
  not_spherical,
  unknown_face,
  unknown_crossing,
  empty_punctures,
  stale_move,
  bad_params,
  internal,
};

class Error : public std::runtime_error {
public:
  Error(Errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Errc kind() const { return kind_; }

private:
  Errc kind_;
};

inline int dart_crossing(int d) { return d >> 2; }
inline int dart_slot(int d) { return d & 3; }
inline int make_dart(int c, int s) { return 4 * c + (s & 3); }
// Same crossing, slot advanced by k counterclockwise.
inline int rot(int d, int k) { return (d & ~3) | ((d + k) & 3); }
// Opposite end of the strand passage through the crossing of d.
inline int through(int d) { return rot(d, 2); }

class Diagram {
public:
  // Default-constructs the zero-crossing circle.
  Diagram() = default;
  static Diagram circle();
  // Builds and validates an m-crossing diagram. over13[c] is true when the
  // strand through slots {1,3} passes over at crossing c.
  Diagram(std::vector<int> mate, std::vector<uint8_t> over13, std::vector<uint8_t> outgoing);

  bool is_circle() const { return circle_; }
  int crossings() const { return circle_ ? 0 : static_cast<int>(over13_.size()); }
  int darts() const { return static_cast<int>(mate_.size()); }
  int mate(int d) const { return mate_[d]; }
  bool outgoing(int d) const { return outgoing_[d] != 0; }
  bool over13(int c) const { return over13_[c] != 0; }
  // True when the strand occupying slots of the given parity is the over strand.
  bool strand_over(int c, int slot_parity) const {
    return over13_[c] ? slot_parity == 1 : slot_parity == 0;
  }
  const std::vector<int>& mates() const { return mate_; }
  const std::vector<uint8_t>& over_bits() const { return over13_; }
  const std::vector<uint8_t>& outgoing_bits() const { return outgoing_; }

  bool operator==(const Diagram& o) const = default;

private:
  bool circle_ = true;
  std::vector<int> mate_;
  std::vector<uint8_t> over13_;
  std::vector<uint8_t> outgoing_;
  void validate() const;
};

// A diagram with the over/under data forgotten; the map itself is unchanged.
struct Curve {
  Diagram map;
};

Curve underlying_curve(const Diagram& d);

struct FaceSet {
  int count = 0;
  std::vector<int> of_dart;             // dart -> face id
  std::vector<std::vector<int>> boundary;  // face id -> boundary darts in walk order

  int face_of(int dart) const { return of_dart[dart]; }
};

// Traces faces of the map. Walking out along dart d, the face on the left is
// the orbit of d under d -> rot(mate(d), 3); ids are assigned by first visit
// scanning darts in increasing order. A valid diagram has crossings()+2 faces.
FaceSet faces(const Diagram& d);

// Orientation helpers: walking the edge of an outgoing dart d along the knot
// orientation, the left face is faces.of_dart[d] and the right face is
// faces.of_dart[mate(d)].

// The outgoing darts in traversal order, starting from the smallest one.
std::vector<int> knot_orbit(const Diagram& d);

// Propagates orientation flags over a mate involution given one anchor dart
// whose flag is known. Throws unless the darts fall into exactly two
// traversal orbits (a single component traversed both ways).
std::vector<uint8_t> propagate_orientation(const std::vector<int>& mate, int anchor,
                                           bool anchor_outgoing);

// PD text form: "unknot", or rows [a,b,c,d] listing edge labels 1..2m
// counterclockwise from the incoming under-strand, edges labeled in traversal
// order. serialize_diagram(parse_diagram(t)) is stable.
Diagram parse_diagram(const std::string& text);
std::string serialize_diagram(const Diagram& d);

// Dart correspondence from d onto parse_diagram(serialize_diagram(d)):
// crossings keep their ids, slots rotate so the incoming under-strand end
// becomes slot 0.
std::vector<int> pd_relabel_map(const Diagram& d);

}  // namespace knotsphere
