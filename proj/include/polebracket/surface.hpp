#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polebracket/code.hpp"

namespace polebracket {

using Gf2Vector = boost::dynamic_bitset<std::uint64_t>;

/// A band end: slot `slot` in the rotation of vertex `vertex`.
struct End {
  int vertex = -1;
  int slot = -1;
  friend bool operator==(const End&, const End&) = default;
};

/// Rotation slot of a crossing end. Positive crossings read
/// (over-in, under-in, over-out, under-out) counterclockwise, negative ones
/// (over-in, under-out, over-out, under-in).
int rotation_slot(int sign, Role role, bool incoming);

/// Vertex of the ribbon graph: a crossing disk (degree 4) or the marker
/// disk placed on a crossing-free component (degree 2, slot 0 in, slot 1 out).
struct Vertex {
  int degree = 4;
  int crossing = 0;  // 1-based crossing id, 0 for a free-loop marker
  int sign = 1;
  int component = -1;  // owning component for free-loop markers
};

/// A band follows one diagram arc from the out-end `tail` to the in-end
/// `head`; `flip` is the bar parity of the arc.
struct Band {
  End tail;
  End head;
  bool flip = false;
  int component = 0;
};

/// The abstract link diagram as a ribbon graph with twisted bands.
///
/// Corners sit between consecutive slots: corner(v, i) lies between slot i
/// and slot i + 1 (mod degree), counterclockwise. Free loops contribute one
/// two-slot vertex and one band each, so Euler characteristic counts stay
/// uniform: chi(Sigma) = vertices - bands.
class RibbonComplex {
 public:
  static RibbonComplex build(const TwistedGaussCode& code);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Band>& bands() const { return bands_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_bands() const { return static_cast<int>(bands_.size()); }
  int num_disks() const { return num_disks_; }
  int num_free_loops() const { return num_vertices() - num_disks_; }
  int num_corners() const { return corner_offset_.back(); }

  int corner(int vertex, int slot) const;
  int corner(End e) const { return corner(e.vertex, e.slot); }
  End corner_vertex_slot(int corner) const;

  /// Band attached at an end and whether that end is the band's tail.
  std::pair<int, bool> band_at(End e) const;

  /// True when slot `slot` of vertex `v` is an incoming end.
  bool is_incoming(int vertex, int slot) const;

  /// In- and out-ends of the visit at token position `pos` (must be a visit).
  End in_end(TokenPos pos) const;
  End out_end(TokenPos pos) const;

  /// Vertex of crossing id (1-based).
  int crossing_vertex(int id) const { return id - 1; }
  /// Band leaving the token at `pos` (visit or bar) towards the next visit.
  int band_after(TokenPos pos) const;

  int euler_characteristic() const { return num_vertices() - num_bands(); }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Band> bands_;
  std::vector<int> corner_offset_;
  std::vector<std::pair<int, bool>> band_at_;  // indexed by corner id layout
  std::vector<std::vector<int>> band_after_;   // [component][offset]
  std::vector<std::vector<End>> in_end_, out_end_;
  int num_disks_ = 0;
};

/// One step of a closed curve running through the ribbon graph: traverse
/// `band` (tail to head when `forward`), arrive at `vertex` through
/// `in_slot`, leave it through `out_slot`. The step after it departs along
/// the band at `out_slot`.
struct CurveStep {
  int band = 0;
  bool forward = true;
  int vertex = 0;
  int in_slot = 0;
  int out_slot = 0;
};

/// A closed curve carried by the ribbon part of the surface. State curves
/// use each band at most once.
struct EmbeddedCurve {
  std::vector<CurveStep> steps;
  bool flip_parity = false;

  /// Corner on the left of the first departure, and the one on its right.
  std::pair<int, int> side_corners(const RibbonComplex& rc) const;
};

/// Connected component of the surface cut along some curves.
struct Region {
  int euler = 0;
  int boundary_circles = 0;
};

struct CutResult {
  std::vector<Region> regions;
  std::vector<int> corner_region;  // region of every corner id
  std::vector<std::pair<int, int>> curve_sides;  // (left, right) region per curve
};

struct SurfacePiece {
  bool orientable = true;
  int euler = 2;
  int genus = 0;      // orientable pieces
  int crosscaps = 0;  // non-orientable pieces
  int vertices = 0;
};

/// The canonical realization: the ribbon surface with every boundary circle
/// capped by a disk.
class ClosedSurface {
 public:
  static ClosedSurface cap(RibbonComplex rc);
  static ClosedSurface from_code(const TwistedGaussCode& code) { return cap(RibbonComplex::build(code)); }

  const RibbonComplex& base() const { return base_; }
  int euler() const { return base_.euler_characteristic() + num_caps(); }
  bool orientable() const;
  const std::vector<SurfacePiece>& pieces() const { return pieces_; }
  bool is_union_of_spheres() const;

  int num_caps() const { return static_cast<int>(cap_size_.size()); }
  int cap_of_corner(int corner) const { return corner_cap_[static_cast<std::size_t>(corner)]; }
  int cap_size(int cap) const { return cap_size_[static_cast<std::size_t>(cap)]; }
  int piece_of_vertex(int v) const { return vertex_piece_[static_cast<std::size_t>(v)]; }
  /// Local frame of a vertex relative to its piece's root (all equal on orientable pieces after the BFS).
  int frame_of_vertex(int v) const { return vertex_frame_[static_cast<std::size_t>(v)]; }

  /// Z/2 cycles (band indicator vectors) forming a basis of H_1(F; Z/2).
  const std::vector<Gf2Vector>& h1_basis() const { return h1_basis_; }
  int h1_rank() const { return static_cast<int>(h1_basis_.size()); }
  /// Mod-2 intersection numbers of basis cycles; symmetric.
  const std::vector<std::vector<std::uint8_t>>& intersection_form() const { return intersection_; }
  /// Orientation character on each basis cycle.
  const std::vector<std::uint8_t>& w1() const { return w1_; }

  /// Band indicator vector of a curve.
  Gf2Vector chain(const EmbeddedCurve& c) const;
  /// Coordinates of the curve's class in h1_basis.
  Gf2Vector homology_class(const EmbeddedCurve& c) const;
  /// Coordinates of a Z/2 cycle (band vector) in h1_basis.
  Gf2Vector homology_class(const Gf2Vector& cycle) const;
  /// Mod-2 intersection number of two curves, through their classes.
  int intersection(const Gf2Vector& class_a, const Gf2Vector& class_b) const;

  bool is_separating(const EmbeddedCurve& c) const;
  bool bounds_disk(const EmbeddedCurve& c) const;

  /// Cuts the surface along pairwise disjoint curves.
  CutResult cut(std::span<const EmbeddedCurve* const> curves) const;
  CutResult cut(std::span<const EmbeddedCurve> curves) const;

  /// Cocycle of the left push-off of a closed walk; pairing a cycle with it
  /// gives the mod-2 intersection number with the walk.
  Gf2Vector pushoff_cocycle(const EmbeddedCurve& walk) const;

  /// Closed walk for the fundamental cycle of basis element i.
  const EmbeddedCurve& basis_walk(int i) const { return basis_walks_[static_cast<std::size_t>(i)]; }

  std::string report_json() const;

 private:
  RibbonComplex base_;
  std::vector<int> corner_cap_;
  std::vector<int> cap_size_;
  std::vector<std::pair<int, int>> band_side_caps_;  // cap on the (left, right) side of each band, left relative to the tail
  std::vector<int> vertex_piece_;
  std::vector<int> vertex_frame_;
  std::vector<SurfacePiece> pieces_;

  struct EchelonRow {
    Gf2Vector vec;
    Gf2Vector tag;
    std::size_t pivot;
  };
  std::vector<EchelonRow> echelon_;
  std::vector<Gf2Vector> h1_basis_;
  std::vector<EmbeddedCurve> basis_walks_;
  std::vector<std::vector<std::uint8_t>> intersection_;
  std::vector<std::uint8_t> w1_;

  void classify_pieces();
  void compute_homology();
};

/// Union-find over small integer ranges.
class DisjointSets {
 public:
  explicit DisjointSets(int n = 0) { reset(n); }
  void reset(int n);
  int find(int x);
  void unite(int a, int b);

 private:
  std::vector<int> parent_;
};

}  // namespace polebracket
