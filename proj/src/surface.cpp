#include "polebracket/surface.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace polebracket {

void DisjointSets::reset(int n) {
  parent_.resize(static_cast<std::size_t>(n));
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::find(int x) {
  auto ux = static_cast<std::size_t>(x);
  while (parent_[ux] != static_cast<int>(ux)) {
    parent_[ux] = parent_[static_cast<std::size_t>(parent_[ux])];
    ux = static_cast<std::size_t>(parent_[ux]);
  }
  return static_cast<int>(ux);
}

void DisjointSets::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (a < b) std::swap(a, b);
  parent_[static_cast<std::size_t>(a)] = b;
}

int rotation_slot(int sign, Role role, bool incoming) {
  if (role == Role::Over) return incoming ? 0 : 2;
  if (sign > 0) return incoming ? 1 : 3;
  return incoming ? 3 : 1;
}

RibbonComplex RibbonComplex::build(const TwistedGaussCode& code) {
  RibbonComplex rc;
  const int c = code.num_crossings();
  for (int id = 1; id <= c; ++id) rc.vertices_.push_back(Vertex{4, id, code.sign(id), -1});
  rc.num_disks_ = c;
  rc.band_after_.resize(static_cast<std::size_t>(code.num_components()));
  rc.in_end_.resize(static_cast<std::size_t>(code.num_components()));
  rc.out_end_.resize(static_cast<std::size_t>(code.num_components()));

  for (int k = 0; k < code.num_components(); ++k) {
    const auto& comp = code.component(k);
    const auto n = comp.size();
    auto& after = rc.band_after_[static_cast<std::size_t>(k)];
    auto& ins = rc.in_end_[static_cast<std::size_t>(k)];
    auto& outs = rc.out_end_[static_cast<std::size_t>(k)];
    after.assign(n, -1);
    ins.assign(n, End{});
    outs.assign(n, End{});
    std::vector<std::size_t> visits;
    for (std::size_t i = 0; i < n; ++i) {
      const Token& t = comp[i];
      if (!t.is_visit()) continue;
      visits.push_back(i);
      ins[i] = End{t.crossing - 1, rotation_slot(t.sign, t.role, true)};
      outs[i] = End{t.crossing - 1, rotation_slot(t.sign, t.role, false)};
    }
    if (visits.empty()) {
      const int v = rc.num_vertices();
      rc.vertices_.push_back(Vertex{2, 0, 1, k});
      const bool flip = n % 2 == 1;  // only bars on a free loop
      const int b = rc.num_bands();
      rc.bands_.push_back(Band{End{v, 1}, End{v, 0}, flip, k});
      std::fill(after.begin(), after.end(), b);
      continue;
    }
    for (std::size_t a = 0; a < visits.size(); ++a) {
      const std::size_t from = visits[a];
      const std::size_t to = visits[(a + 1) % visits.size()];
      const int b = rc.num_bands();
      int bars = 0;
      for (std::size_t i = (from + 1) % n; i != to; i = (i + 1) % n) {
        ++bars;
        after[i] = b;
      }
      after[from] = b;
      rc.bands_.push_back(Band{outs[from], ins[to], bars % 2 == 1, k});
    }
  }

  rc.corner_offset_.assign(1, 0);
  for (const auto& v : rc.vertices_) rc.corner_offset_.push_back(rc.corner_offset_.back() + v.degree);
  rc.band_at_.assign(static_cast<std::size_t>(rc.num_corners()), {-1, false});
  for (int b = 0; b < rc.num_bands(); ++b) {
    const Band& band = rc.bands_[static_cast<std::size_t>(b)];
    rc.band_at_[static_cast<std::size_t>(rc.corner(band.tail))] = {b, true};
    rc.band_at_[static_cast<std::size_t>(rc.corner(band.head))] = {b, false};
  }
  return rc;
}

int RibbonComplex::corner(int vertex, int slot) const {
  const int deg = vertices_[static_cast<std::size_t>(vertex)].degree;
  slot = ((slot % deg) + deg) % deg;
  return corner_offset_[static_cast<std::size_t>(vertex)] + slot;
}

End RibbonComplex::corner_vertex_slot(int corner) const {
  const auto it = std::upper_bound(corner_offset_.begin(), corner_offset_.end(), corner);
  const int v = static_cast<int>(it - corner_offset_.begin()) - 1;
  return End{v, corner - corner_offset_[static_cast<std::size_t>(v)]};
}

std::pair<int, bool> RibbonComplex::band_at(End e) const { return band_at_[static_cast<std::size_t>(corner(e))]; }

bool RibbonComplex::is_incoming(int vertex, int slot) const {
  const Vertex& v = vertices_[static_cast<std::size_t>(vertex)];
  if (v.degree == 2) return slot == 0;
  return slot == 0 || slot == (v.sign > 0 ? 1 : 3);
}

End RibbonComplex::in_end(TokenPos pos) const {
  return in_end_[static_cast<std::size_t>(pos.component)][static_cast<std::size_t>(pos.offset)];
}

End RibbonComplex::out_end(TokenPos pos) const {
  return out_end_[static_cast<std::size_t>(pos.component)][static_cast<std::size_t>(pos.offset)];
}

int RibbonComplex::band_after(TokenPos pos) const {
  return band_after_[static_cast<std::size_t>(pos.component)][static_cast<std::size_t>(pos.offset)];
}

std::pair<int, int> EmbeddedCurve::side_corners(const RibbonComplex& rc) const {
  const CurveStep& last = steps.back();
  return {rc.corner(last.vertex, last.out_slot), rc.corner(last.vertex, last.out_slot - 1)};
}

ClosedSurface ClosedSurface::cap(RibbonComplex rc) {
  ClosedSurface f;
  f.base_ = std::move(rc);
  const RibbonComplex& r = f.base_;
  DisjointSets ds(r.num_corners());
  for (const Band& b : r.bands()) {
    const int ti = b.tail.slot, hj = b.head.slot;
    if (!b.flip) {
      ds.unite(r.corner(b.tail.vertex, ti), r.corner(b.head.vertex, hj - 1));
      ds.unite(r.corner(b.tail.vertex, ti - 1), r.corner(b.head.vertex, hj));
    } else {
      ds.unite(r.corner(b.tail.vertex, ti), r.corner(b.head.vertex, hj));
      ds.unite(r.corner(b.tail.vertex, ti - 1), r.corner(b.head.vertex, hj - 1));
    }
  }
  std::vector<int> root_cap(static_cast<std::size_t>(r.num_corners()), -1);
  f.corner_cap_.assign(static_cast<std::size_t>(r.num_corners()), -1);
  for (int k = 0; k < r.num_corners(); ++k) {
    int& cap = root_cap[static_cast<std::size_t>(ds.find(k))];
    if (cap < 0) {
      cap = static_cast<int>(f.cap_size_.size());
      f.cap_size_.push_back(0);
    }
    f.corner_cap_[static_cast<std::size_t>(k)] = cap;
    ++f.cap_size_[static_cast<std::size_t>(cap)];
  }
  for (const Band& b : r.bands())
    f.band_side_caps_.emplace_back(f.cap_of_corner(r.corner(b.tail.vertex, b.tail.slot)),
                                   f.cap_of_corner(r.corner(b.tail.vertex, b.tail.slot - 1)));
  f.classify_pieces();
  f.compute_homology();
  return f;
}

bool ClosedSurface::orientable() const {
  return std::all_of(pieces_.begin(), pieces_.end(), [](const SurfacePiece& p) { return p.orientable; });
}

bool ClosedSurface::is_union_of_spheres() const {
  return std::all_of(pieces_.begin(), pieces_.end(),
                     [](const SurfacePiece& p) { return p.orientable && p.euler == 2; });
}

void ClosedSurface::classify_pieces() {
  const RibbonComplex& r = base_;
  const int nv = r.num_vertices();
  vertex_piece_.assign(static_cast<std::size_t>(nv), -1);
  vertex_frame_.assign(static_cast<std::size_t>(nv), 0);
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(nv));
  for (int b = 0; b < r.num_bands(); ++b) {
    const Band& band = r.bands()[static_cast<std::size_t>(b)];
    incident[static_cast<std::size_t>(band.tail.vertex)].push_back(b);
    if (band.head.vertex != band.tail.vertex) incident[static_cast<std::size_t>(band.head.vertex)].push_back(b);
  }
  for (int root = 0; root < nv; ++root) {
    if (vertex_piece_[static_cast<std::size_t>(root)] >= 0) continue;
    const int piece = static_cast<int>(pieces_.size());
    SurfacePiece sp;
    std::vector<int> queue{root};
    vertex_piece_[static_cast<std::size_t>(root)] = piece;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int v = queue[q];
      ++sp.vertices;
      for (int b : incident[static_cast<std::size_t>(v)]) {
        const Band& band = r.bands()[static_cast<std::size_t>(b)];
        const int w = band.tail.vertex == v ? band.head.vertex : band.tail.vertex;
        const int want = vertex_frame_[static_cast<std::size_t>(v)] ^ (band.flip ? 1 : 0);
        if (vertex_piece_[static_cast<std::size_t>(w)] < 0) {
          vertex_piece_[static_cast<std::size_t>(w)] = piece;
          vertex_frame_[static_cast<std::size_t>(w)] = want;
          queue.push_back(w);
        } else if (vertex_frame_[static_cast<std::size_t>(w)] != want) {
          sp.orientable = false;
        }
      }
    }
    pieces_.push_back(sp);
  }
  std::vector<int> band_count(pieces_.size(), 0), cap_count(pieces_.size(), 0);
  for (const Band& band : r.bands()) ++band_count[static_cast<std::size_t>(piece_of_vertex(band.tail.vertex))];
  std::vector<int> cap_piece(cap_size_.size(), -1);
  for (int k = 0; k < r.num_corners(); ++k)
    cap_piece[static_cast<std::size_t>(cap_of_corner(k))] = piece_of_vertex(r.corner_vertex_slot(k).vertex);
  for (int p : cap_piece) ++cap_count[static_cast<std::size_t>(p)];
  for (std::size_t p = 0; p < pieces_.size(); ++p) {
    SurfacePiece& sp = pieces_[p];
    sp.euler = sp.vertices - band_count[p] + cap_count[p];
    if (sp.orientable)
      sp.genus = (2 - sp.euler) / 2;
    else
      sp.crosscaps = 2 - sp.euler;
  }
}

namespace {

std::size_t first_bit(const Gf2Vector& v) { return v.find_first(); }

}  // namespace

void ClosedSurface::compute_homology() {
  const RibbonComplex& r = base_;
  const auto ne = static_cast<std::size_t>(r.num_bands());
  const int nv = r.num_vertices();

  // Spanning forest.
  std::vector<int> parent_band(static_cast<std::size_t>(nv), -1), depth(static_cast<std::size_t>(nv), -1);
  std::vector<bool> tree(ne, false);
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(nv));
  for (int b = 0; b < r.num_bands(); ++b) {
    const Band& band = r.bands()[static_cast<std::size_t>(b)];
    incident[static_cast<std::size_t>(band.tail.vertex)].push_back(b);
    if (band.head.vertex != band.tail.vertex) incident[static_cast<std::size_t>(band.head.vertex)].push_back(b);
  }
  for (int root = 0; root < nv; ++root) {
    if (depth[static_cast<std::size_t>(root)] >= 0) continue;
    depth[static_cast<std::size_t>(root)] = 0;
    std::vector<int> queue{root};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int v = queue[q];
      for (int b : incident[static_cast<std::size_t>(v)]) {
        const Band& band = r.bands()[static_cast<std::size_t>(b)];
        const int w = band.tail.vertex == v ? band.head.vertex : band.tail.vertex;
        if (depth[static_cast<std::size_t>(w)] >= 0) continue;
        depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
        parent_band[static_cast<std::size_t>(w)] = b;
        tree[static_cast<std::size_t>(b)] = true;
        queue.push_back(w);
      }
    }
  }

  std::vector<int> candidates;
  for (int b = 0; b < r.num_bands(); ++b)
    if (!tree[static_cast<std::size_t>(b)]) candidates.push_back(b);
  const std::size_t ntag = candidates.size();

  auto insert = [&](Gf2Vector vec, Gf2Vector tag) -> bool {
    for (const auto& row : echelon_)
      if (vec.test(row.pivot)) {
        vec ^= row.vec;
        tag ^= row.tag;
      }
    if (vec.none()) return false;
    const std::size_t pivot = first_bit(vec);
    echelon_.push_back(EchelonRow{std::move(vec), std::move(tag), pivot});
    return true;
  };

  // Cap boundaries.
  std::vector<Gf2Vector> cap_boundary(cap_size_.size(), Gf2Vector(ne));
  for (std::size_t b = 0; b < ne; ++b) {
    cap_boundary[static_cast<std::size_t>(band_side_caps_[b].first)].flip(b);
    cap_boundary[static_cast<std::size_t>(band_side_caps_[b].second)].flip(b);
  }
  for (auto& v : cap_boundary) insert(v, Gf2Vector(ntag));

  auto traversal_walk = [&](int b) {
    // b forward, then the tree path from its head back to its tail.
    const Band& nb = r.bands()[static_cast<std::size_t>(b)];
    std::vector<std::pair<int, bool>> up_from_head, up_from_tail;
    int x = nb.head.vertex, y = nb.tail.vertex;
    while (depth[static_cast<std::size_t>(x)] > depth[static_cast<std::size_t>(y)]) {
      const int pb = parent_band[static_cast<std::size_t>(x)];
      const Band& band = r.bands()[static_cast<std::size_t>(pb)];
      up_from_head.emplace_back(pb, band.tail.vertex == x);
      x = band.tail.vertex == x ? band.head.vertex : band.tail.vertex;
    }
    while (depth[static_cast<std::size_t>(y)] > depth[static_cast<std::size_t>(x)]) {
      const int pb = parent_band[static_cast<std::size_t>(y)];
      const Band& band = r.bands()[static_cast<std::size_t>(pb)];
      up_from_tail.emplace_back(pb, band.tail.vertex == y);
      y = band.tail.vertex == y ? band.head.vertex : band.tail.vertex;
    }
    while (x != y) {
      int pb = parent_band[static_cast<std::size_t>(x)];
      const Band& bx = r.bands()[static_cast<std::size_t>(pb)];
      up_from_head.emplace_back(pb, bx.tail.vertex == x);
      x = bx.tail.vertex == x ? bx.head.vertex : bx.tail.vertex;
      pb = parent_band[static_cast<std::size_t>(y)];
      const Band& by = r.bands()[static_cast<std::size_t>(pb)];
      up_from_tail.emplace_back(pb, by.tail.vertex == y);
      y = by.tail.vertex == y ? by.head.vertex : by.tail.vertex;
    }
    std::vector<std::pair<int, bool>> seq{{b, true}};
    seq.insert(seq.end(), up_from_head.begin(), up_from_head.end());
    for (auto it = up_from_tail.rbegin(); it != up_from_tail.rend(); ++it) seq.emplace_back(it->first, !it->second);
    EmbeddedCurve walk;
    for (std::size_t k = 0; k < seq.size(); ++k) {
      const auto [band, fwd] = seq[k];
      const auto [next_band, next_fwd] = seq[(k + 1) % seq.size()];
      const Band& cur = r.bands()[static_cast<std::size_t>(band)];
      const Band& nxt = r.bands()[static_cast<std::size_t>(next_band)];
      const End arrive = fwd ? cur.head : cur.tail;
      const End depart = next_fwd ? nxt.tail : nxt.head;
      walk.steps.push_back(CurveStep{band, fwd, arrive.vertex, arrive.slot, depart.slot});
      walk.flip_parity ^= cur.flip;
    }
    return walk;
  };

  std::vector<int> basis_of_candidate(ntag, -1);
  std::vector<EmbeddedCurve> walks;
  for (std::size_t k = 0; k < ntag; ++k) {
    EmbeddedCurve walk = traversal_walk(candidates[k]);
    Gf2Vector vec = chain(walk);
    Gf2Vector tag(ntag);
    tag.set(k);
    if (insert(vec, tag)) {
      basis_of_candidate[k] = static_cast<int>(h1_basis_.size());
      h1_basis_.push_back(std::move(vec));
      basis_walks_.push_back(std::move(walk));
    }
  }
  // Re-express tags over basis indices.
  const std::size_t rank = h1_basis_.size();
  for (auto& row : echelon_) {
    Gf2Vector t(rank);
    for (std::size_t k = row.tag.find_first(); k != Gf2Vector::npos; k = row.tag.find_next(k))
      t.set(static_cast<std::size_t>(basis_of_candidate[k]));
    row.tag = std::move(t);
  }

  intersection_.assign(rank, std::vector<std::uint8_t>(rank, 0));
  w1_.assign(rank, 0);
  for (std::size_t j = 0; j < rank; ++j) {
    const Gf2Vector phi = pushoff_cocycle(basis_walks_[j]);
    for (std::size_t i = 0; i < rank; ++i)
      intersection_[i][j] = static_cast<std::uint8_t>((h1_basis_[i] & phi).count() % 2);
    std::size_t flips = 0;
    for (std::size_t b = h1_basis_[j].find_first(); b != Gf2Vector::npos; b = h1_basis_[j].find_next(b))
      flips += r.bands()[b].flip ? 1 : 0;
    w1_[j] = static_cast<std::uint8_t>(flips % 2);
  }
}

Gf2Vector ClosedSurface::chain(const EmbeddedCurve& c) const {
  Gf2Vector v(static_cast<std::size_t>(base_.num_bands()));
  for (const auto& s : c.steps) v.flip(static_cast<std::size_t>(s.band));
  return v;
}

Gf2Vector ClosedSurface::homology_class(const EmbeddedCurve& c) const { return homology_class(chain(c)); }

Gf2Vector ClosedSurface::homology_class(const Gf2Vector& cycle) const {
  Gf2Vector vec = cycle;
  Gf2Vector coords(h1_basis_.size());
  for (const auto& row : echelon_)
    if (vec.test(row.pivot)) {
      vec ^= row.vec;
      coords ^= row.tag;
    }
  if (vec.any()) throw std::logic_error("homology_class: chain is not a cycle");
  return coords;
}

int ClosedSurface::intersection(const Gf2Vector& a, const Gf2Vector& b) const {
  int sum = 0;
  for (std::size_t i = a.find_first(); i != Gf2Vector::npos; i = a.find_next(i))
    for (std::size_t j = b.find_first(); j != Gf2Vector::npos; j = b.find_next(j)) sum ^= intersection_[i][j];
  return sum;
}

bool ClosedSurface::is_separating(const EmbeddedCurve& c) const { return homology_class(c).none(); }

bool ClosedSurface::bounds_disk(const EmbeddedCurve& c) const {
  if (c.flip_parity) return false;
  const EmbeddedCurve* one[] = {&c};
  const CutResult cut_result = cut(one);
  const auto [left, right] = cut_result.curve_sides[0];
  if (left == right) return false;
  return cut_result.regions[static_cast<std::size_t>(left)].euler == 1 ||
         cut_result.regions[static_cast<std::size_t>(right)].euler == 1;
}

CutResult ClosedSurface::cut(std::span<const EmbeddedCurve> curves) const {
  std::vector<const EmbeddedCurve*> ptrs;
  for (const auto& c : curves) ptrs.push_back(&c);
  return cut(std::span<const EmbeddedCurve* const>(ptrs));
}

CutResult ClosedSurface::cut(std::span<const EmbeddedCurve* const> curves) const {
  const RibbonComplex& r = base_;
  const int nc = r.num_corners();
  DisjointSets ds(nc);
  std::vector<int> cap_rep(cap_size_.size(), -1);
  for (int k = 0; k < nc; ++k) {
    int& rep = cap_rep[static_cast<std::size_t>(cap_of_corner(k))];
    if (rep < 0)
      rep = k;
    else
      ds.unite(rep, k);
  }
  std::vector<bool> band_cut(static_cast<std::size_t>(r.num_bands()), false);
  std::vector<bool> singled(static_cast<std::size_t>(nc), false);
  for (const EmbeddedCurve* c : curves)
    for (const CurveStep& s : c->steps) {
      band_cut[static_cast<std::size_t>(s.band)] = true;
      const int deg = r.vertices()[static_cast<std::size_t>(s.vertex)].degree;
      if (deg == 2) {
        singled[static_cast<std::size_t>(r.corner(s.vertex, 0))] = true;
        singled[static_cast<std::size_t>(r.corner(s.vertex, 1))] = true;
        continue;
      }
      int lo;
      if ((s.in_slot + 1) % deg == s.out_slot)
        lo = s.in_slot;
      else if ((s.out_slot + 1) % deg == s.in_slot)
        lo = s.out_slot;
      else
        throw std::logic_error("cut: curve passes a crossing between non-adjacent ends");
      singled[static_cast<std::size_t>(r.corner(s.vertex, lo))] = true;
    }

  std::vector<int> subregion_reps;  // one corner per subregion
  for (int v = 0; v < r.num_vertices(); ++v) {
    const int deg = r.vertices()[static_cast<std::size_t>(v)].degree;
    int rest = -1;
    for (int i = 0; i < deg; ++i) {
      const int k = r.corner(v, i);
      if (singled[static_cast<std::size_t>(k)]) {
        subregion_reps.push_back(k);
      } else if (rest < 0) {
        rest = k;
        subregion_reps.push_back(k);
      } else {
        ds.unite(rest, k);
      }
    }
  }
  std::vector<int> uncut_reps;
  for (int b = 0; b < r.num_bands(); ++b) {
    if (band_cut[static_cast<std::size_t>(b)]) continue;
    const Band& band = r.bands()[static_cast<std::size_t>(b)];
    const int left = r.corner(band.tail.vertex, band.tail.slot);
    ds.unite(left, r.corner(band.tail.vertex, band.tail.slot - 1));
    uncut_reps.push_back(left);
  }

  CutResult out;
  out.corner_region.assign(static_cast<std::size_t>(nc), -1);
  std::vector<int> root_region(static_cast<std::size_t>(nc), -1);
  for (int k = 0; k < nc; ++k) {
    int& reg = root_region[static_cast<std::size_t>(ds.find(k))];
    if (reg < 0) {
      reg = static_cast<int>(out.regions.size());
      out.regions.emplace_back();
    }
    out.corner_region[static_cast<std::size_t>(k)] = reg;
    --out.regions[static_cast<std::size_t>(reg)].euler;
  }
  for (int rep : cap_rep) ++out.regions[static_cast<std::size_t>(out.corner_region[static_cast<std::size_t>(rep)])].euler;
  for (int rep : subregion_reps)
    ++out.regions[static_cast<std::size_t>(out.corner_region[static_cast<std::size_t>(rep)])].euler;
  for (int rep : uncut_reps) ++out.regions[static_cast<std::size_t>(out.corner_region[static_cast<std::size_t>(rep)])].euler;

  for (const EmbeddedCurve* c : curves) {
    const auto [lc, rc] = c->side_corners(r);
    const int left = out.corner_region[static_cast<std::size_t>(lc)];
    const int right = out.corner_region[static_cast<std::size_t>(rc)];
    out.curve_sides.emplace_back(left, right);
    ++out.regions[static_cast<std::size_t>(left)].boundary_circles;
    if (!c->flip_parity) ++out.regions[static_cast<std::size_t>(right)].boundary_circles;
  }
  return out;
}

Gf2Vector ClosedSurface::pushoff_cocycle(const EmbeddedCurve& walk) const {
  const RibbonComplex& r = base_;
  Gf2Vector phi(static_cast<std::size_t>(r.num_bands()));
  int frame = 0;
  for (const CurveStep& s : walk.steps) {
    frame ^= r.bands()[static_cast<std::size_t>(s.band)].flip ? 1 : 0;
    const int deg = r.vertices()[static_cast<std::size_t>(s.vertex)].degree;
    const int from = frame == 0 ? s.out_slot : s.in_slot;
    const int to = frame == 0 ? s.in_slot : s.out_slot;
    for (int k = (from + 1) % deg; k != to; k = (k + 1) % deg)
      phi.flip(static_cast<std::size_t>(r.band_at(End{s.vertex, k}).first));
  }
  if (walk.flip_parity) phi.flip(static_cast<std::size_t>(walk.steps.front().band));
  return phi;
}

std::string ClosedSurface::report_json() const {
  nlohmann::ordered_json j;
  j["euler"] = euler();
  j["orientable"] = orientable();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& p : pieces_) {
    nlohmann::ordered_json pj;
    pj["orientable"] = p.orientable;
    if (p.orientable)
      pj["genus"] = p.genus;
    else
      pj["crosscaps"] = p.crosscaps;
    arr.push_back(pj);
  }
  j["pieces"] = arr;
  j["h1_rank"] = h1_rank();
  return j.dump();
}

}  // namespace polebracket
