#include <random>
#include <set>

#include <doctest.h>
#include <json.hpp>

#include "polebracket/states.hpp"
#include "polebracket/verify.hpp"

using namespace polebracket;

namespace {

std::vector<TwistedGaussCode> sample_codes(int n) {
  std::vector<TwistedGaussCode> out;
  for (std::uint64_t seed = 0; seed < static_cast<std::uint64_t>(n); ++seed) {
    std::mt19937_64 rng(seed + 1000);
    const int c = static_cast<int>(rng() % 6), b = static_cast<int>(rng() % 4);
    const int comps = 2 * c + b >= 2 && rng() % 4 == 0 ? 2 : 1;
    out.push_back(random_diagram(seed, c, b, comps));
  }
  return out;
}

// Crossings whose chosen splice joins two in-ends and two out-ends.
int incoherent_splices(const TwistedGaussCode& code, SpliceChoice mask) {
  int n = 0;
  for (int id = 1; id <= code.num_crossings(); ++id) {
    const bool b = (mask >> (id - 1)) & 1;
    // Positive crossings: A is the oriented smoothing; negative: B is.
    if ((code.sign(id) > 0) == b) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("state counts and ranges") {
  const auto f = ClosedSurface::from_code(parse_code("O1- U2- O3- U1- O2- U3-"));
  CHECK(num_states(f) == 8);
  std::set<SpliceChoice> masks;
  enumerate_states(f, [&](const PoleState& s) { masks.insert(s.mask); });
  CHECK(masks.size() == 8);
  std::vector<SpliceChoice> part;
  for_each_state(f, 3, 6, [&](const PoleState& s) { part.push_back(s.mask); });
  CHECK(part == std::vector<SpliceChoice>{3, 4, 5});

  CHECK(num_states(ClosedSurface::from_code(parse_code("B"))) == 1);
}

TEST_CASE("kink states") {
  const auto f = ClosedSurface::from_code(parse_code("O1+ U1+"));
  const auto a = splice_curves(f, 0);
  const auto b = splice_curves(f, 1);
  CHECK(a.natural == 1);
  CHECK(b.natural == -1);
  CHECK(a.curves.size() == 2);
  for (const auto& c : a.curves) CHECK(c.word.pole_count() == 0);
  REQUIRE(b.curves.size() == 1);
  CHECK(b.curves[0].word.pole_count() == 2);
  CHECK(index(b.curves[0].word) == 0);
  const auto cls = classify_state(f, b);
  CHECK(cls.iness_count == 1);
  CHECK(cls.nonori_count == 0);
}

TEST_CASE("pole counts follow the splices") {
  for (const auto& code : sample_codes(60)) {
    const auto f = ClosedSurface::from_code(code);
    enumerate_states(f, [&](const PoleState& s) {
      int total = 0;
      for (const auto& c : s.curves) {
        CHECK(c.word.pole_count() % 2 == 0);
        CHECK(c.word.kinds_alternate());
        CHECK(c.poles.size() == static_cast<std::size_t>(c.word.pole_count()));
        total += c.word.pole_count();
      }
      CHECK(total == 2 * incoherent_splices(code, s.mask));
    });
  }
}

TEST_CASE("fast tracer agrees with full curves") {
  for (const auto& code : sample_codes(80)) {
    const auto f = ClosedSurface::from_code(code);
    StateTracer tracer(f.base());
    std::vector<CurveSummary> out;
    enumerate_states(f, [&](const PoleState& s) {
      const int natural = tracer.trace(s.mask, out);
      CHECK(natural == s.natural);
      REQUIRE(out.size() == s.curves.size());
      for (std::size_t i = 0; i < out.size(); ++i) {
        CHECK(out[i].one_sided == is_mobius(s.curves[i].geometry));
        CHECK(out[i].one_sided == s.curves[i].word.one_sided());
        CHECK(out[i].index == index(s.curves[i].word));
        CHECK(out[i].poles == s.curves[i].word.pole_count());
      }
    });
  }
}

TEST_CASE("theorem 1 and lemma 2 hold on samples") {
  for (const auto& code : sample_codes(60)) {
    const auto f = ClosedSurface::from_code(code);
    enumerate_states(f, [&](const PoleState& s) {
      CHECK(check_theorem1(f, s).empty());
      CHECK(check_lemma2(f, s).empty());
    });
  }
}

TEST_CASE("state json schema") {
  const auto f = ClosedSurface::from_code(parse_code("O1+ O2+ U1+ U2+"));
  const auto s = splice_curves(f, 1);
  const auto j = nlohmann::json::parse(state_json(s, classify_state(f, s)));
  CHECK(j["mask"] == 1);
  CHECK(j["natural"] == 0);
  REQUIRE(j["curves"].is_array());
  for (const auto& c : j["curves"]) {
    for (const char* key : {"poles", "index", "inessential", "separating", "mobius", "hom"}) CHECK(c.contains(key));
    CHECK(c["hom"].size() == 2);
  }
}

TEST_CASE("virtual trefoil has a curve of index one") {
  const auto f = ClosedSurface::from_code(parse_code("O1+ O2+ U1+ U2+"));
  int found = 0;
  enumerate_states(f, [&](const PoleState& s) {
    for (const auto& c : s.curves)
      if (index(c.word) == 1) {
        ++found;
        CHECK(c.word.pole_count() >= 2);
        CHECK_FALSE(f.is_separating(c.geometry));
      }
  });
  CHECK(found > 0);
}
