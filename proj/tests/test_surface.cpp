#include <algorithm>
#include <random>

#include <doctest.h>

#include "polebracket/states.hpp"
#include "polebracket/surface.hpp"

using namespace polebracket;

namespace {

int gf2_rank(std::vector<std::vector<std::uint8_t>> m) {
  int rank = 0;
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n && rank < static_cast<int>(n); ++col) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < n && !m[piv][col]) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
    for (std::size_t r = 0; r < n; ++r)
      if (r != static_cast<std::size_t>(rank) && m[r][col])
        for (std::size_t c = 0; c < n; ++c) m[r][c] ^= m[static_cast<std::size_t>(rank)][c];
    ++rank;
  }
  return rank;
}

std::vector<TwistedGaussCode> sample_codes() {
  std::vector<TwistedGaussCode> out;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    std::mt19937_64 rng(seed);
    const int c = static_cast<int>(rng() % 6), b = static_cast<int>(rng() % 4);
    const int comps = 2 * c + b >= 2 && rng() % 4 == 0 ? 2 : 1;
    out.push_back(random_diagram(seed, c, b, comps));
  }
  return out;
}

}  // namespace

TEST_CASE("ribbon structure") {
  const auto kink = RibbonComplex::build(parse_code("O1+ U1+"));
  CHECK(kink.num_disks() == 1);
  CHECK(kink.num_bands() == 2);
  for (const auto& b : kink.bands()) CHECK_FALSE(b.flip);

  const auto bar = RibbonComplex::build(parse_code("B"));
  CHECK(bar.num_disks() == 0);
  CHECK(bar.num_bands() == 1);
  CHECK(bar.bands()[0].flip);

  const auto vt = RibbonComplex::build(parse_code("O1+ O2+ U1+ U2+"));
  CHECK(vt.num_disks() == 2);
  CHECK(vt.num_bands() == 4);
  for (const auto& b : vt.bands()) CHECK_FALSE(b.flip);
}

TEST_CASE("classified examples") {
  const auto trefoil = ClosedSurface::from_code(parse_code("O1- U2- O3- U1- O2- U3-"));
  CHECK(trefoil.euler() == 2);
  CHECK(trefoil.orientable());
  CHECK(trefoil.is_union_of_spheres());

  const auto torus = ClosedSurface::from_code(parse_code("O1+ O2+ U1+ U2+"));
  CHECK(torus.euler() == 0);
  CHECK(torus.orientable());
  REQUIRE(torus.pieces().size() == 1);
  CHECK(torus.pieces()[0].genus == 1);
  CHECK(torus.num_caps() == 2);
  REQUIRE(torus.h1_rank() == 2);
  const auto& q = torus.intersection_form();
  CHECK(q[0][0] == 0);
  CHECK(q[1][1] == 0);
  CHECK(q[0][1] == 1);

  const auto rp2 = ClosedSurface::from_code(parse_code("B"));
  CHECK(rp2.euler() == 1);
  CHECK_FALSE(rp2.orientable());
  CHECK(rp2.pieces()[0].crosscaps == 1);
  REQUIRE(rp2.h1_rank() == 1);
  CHECK(rp2.w1()[0] == 1);

  const auto two_spheres = ClosedSurface::from_code(parse_code("B B\nB B"));
  CHECK(two_spheres.pieces().size() == 2);
  CHECK(two_spheres.is_union_of_spheres());
}

TEST_CASE("report json") {
  const auto torus = ClosedSurface::from_code(parse_code("O1+ O2+ U1+ U2+"));
  CHECK(torus.report_json().rfind("{\"euler\":0,\"orientable\":true", 0) == 0);
}

TEST_CASE("surface invariants on random codes") {
  for (const auto& code : sample_codes()) {
    const auto f = ClosedSurface::from_code(code);
    const RibbonComplex& rc = f.base();
    int free_loops = 0;
    for (const auto& comp : code.components())
      if (std::none_of(comp.begin(), comp.end(), [](const Token& t) { return t.is_visit(); })) ++free_loops;
    CHECK(f.euler() == code.num_crossings() + free_loops - rc.num_bands() + f.num_caps());

    int chi = 0, rank = 0;
    bool all_ori = true;
    for (const auto& p : f.pieces()) {
      chi += p.euler;
      rank += 2 - p.euler;
      all_ori = all_ori && p.orientable;
      if (p.orientable)
        CHECK(p.euler == 2 - 2 * p.genus);
      else
        CHECK(p.euler == 2 - p.crosscaps);
    }
    CHECK(chi == f.euler());
    CHECK(f.orientable() == all_ori);
    REQUIRE(f.h1_rank() == rank);
    CHECK(gf2_rank(f.intersection_form()) == rank);

    bool w1_zero = true;
    for (int i = 0; i < f.h1_rank(); ++i) {
      // x.x = w1(x) on a closed surface.
      CHECK(f.intersection_form()[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] ==
            f.w1()[static_cast<std::size_t>(i)]);
      w1_zero = w1_zero && f.w1()[static_cast<std::size_t>(i)] == 0;
      CHECK(f.homology_class(f.basis_walk(i)).count() == 1);
      CHECK(f.homology_class(f.basis_walk(i)).test(static_cast<std::size_t>(i)));
    }
    CHECK(w1_zero == f.orientable());
  }
}

TEST_CASE("curve queries on state curves") {
  for (const auto& code : sample_codes()) {
    if (code.num_crossings() > 4) continue;
    const auto f = ClosedSurface::from_code(code);
    enumerate_states(f, [&](const PoleState& s) {
      std::vector<EmbeddedCurve> geoms;
      for (const auto& c : s.curves) {
        geoms.push_back(c.geometry);
        const bool sep = f.is_separating(c.geometry);
        CHECK(sep == f.homology_class(c.geometry).none());
        if (f.bounds_disk(c.geometry)) CHECK(sep);
        // A one-sided curve is never null-homologous.
        if (is_mobius(c.geometry)) CHECK_FALSE(sep);
      }
      const CutResult cut = f.cut(std::span<const EmbeddedCurve>(geoms));
      int sum = 0;
      for (const auto& r : cut.regions) sum += r.euler;
      CHECK(sum == f.euler());
    });
  }
}

TEST_CASE("unknot core bounds a disk and the projective core does not") {
  const auto unknot = ClosedSurface::from_code(parse_code("EMPTY"));
  const auto s = splice_curves(unknot, 0);
  REQUIRE(s.curves.size() == 1);
  CHECK(unknot.bounds_disk(s.curves[0].geometry));
  CHECK(unknot.homology_class(s.curves[0].geometry).none());

  const auto rp2 = ClosedSurface::from_code(parse_code("B"));
  const auto t = splice_curves(rp2, 0);
  REQUIRE(t.curves.size() == 1);
  CHECK(is_mobius(t.curves[0].geometry));
  CHECK(rp2.homology_class(t.curves[0].geometry).any());
  CHECK_FALSE(rp2.bounds_disk(t.curves[0].geometry));
}
