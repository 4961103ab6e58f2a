#include <algorithm>
#include <numeric>
#include <random>

#include <doctest.h>

#include "polebracket/code.hpp"

using namespace polebracket;

namespace {

// Relabels crossings by `perm` (perm[id-1] is the new id), rotates each
// component by the given offsets and reverses component order if asked.
TwistedGaussCode scramble(const TwistedGaussCode& code, const std::vector<int>& perm, const std::vector<int>& rot,
                          bool reverse) {
  std::vector<Component> comps;
  for (int k = 0; k < code.num_components(); ++k) {
    Component c = code.component(k);
    for (auto& t : c)
      if (t.is_visit()) t.crossing = perm[static_cast<std::size_t>(t.crossing - 1)];
    if (!c.empty()) std::rotate(c.begin(), c.begin() + rot[static_cast<std::size_t>(k)] % c.size(), c.end());
    comps.push_back(std::move(c));
  }
  if (reverse) std::reverse(comps.begin(), comps.end());
  return TwistedGaussCode(std::move(comps));
}

}  // namespace

TEST_CASE("parse simple codes") {
  const auto kink = parse_code("O1+ U1+");
  CHECK(kink.num_components() == 1);
  CHECK(kink.num_crossings() == 1);
  CHECK(kink.sign(1) == 1);

  const auto bars = parse_code("B B");
  CHECK(bars.num_crossings() == 0);
  CHECK(bars.num_bars() == 2);

  const auto vt = parse_code("O1+ O2+ U1+ U2+");
  CHECK(vt.num_crossings() == 2);

  const auto empty = parse_code("EMPTY");
  CHECK(empty.num_components() == 1);
  CHECK(empty.component(0).empty());
}

TEST_CASE("parse accepts comments, unicode minus and renumbers ids") {
  const auto c = parse_code("# a comment\nO7− U7−  # trailing\n");
  CHECK(c.num_crossings() == 1);
  CHECK(c.sign(1) == -1);
  CHECK(to_text(c) == "O1- U1-\n");
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_code("O1+ X2");
    FAIL("expected error");
  } catch (const CodeError& e) {
    CHECK(e.kind() == CodeError::Kind::Syntax);
    CHECK(e.component() == 0);
    CHECK(e.offset() == 1);
  }
  CHECK_THROWS_AS(parse_code("O1+ U2+"), CodeError);
  CHECK_THROWS_AS(parse_code("O1+ O1+"), CodeError);
  CHECK_THROWS_AS(parse_code("O1+ U1-"), CodeError);
  CHECK_THROWS_AS(parse_code("O1+ U1+ U1+"), CodeError);
  try {
    parse_code("O1+\nU1+ U2+ O2-");
    FAIL("expected error");
  } catch (const CodeError& e) {
    CHECK(e.kind() == CodeError::Kind::Pairing);
  }
}

TEST_CASE("canonicalize rotation normal form") {
  CHECK(serialize(parse_code("U1+ O1+")) == "O1+ U1+\n");
  CHECK(serialize(parse_code("B")) == "B\n");
  CHECK(serialize(parse_code("EMPTY")) == "EMPTY\n");
}

TEST_CASE("canonicalize is constant on rotation orbits of the virtual trefoil") {
  const auto vt = parse_code("O1+ O2+ U1+ U2+");
  const std::string ref = serialize(vt);
  for (int r = 0; r < 4; ++r)
    for (const auto& perm : {std::vector<int>{1, 2}, std::vector<int>{2, 1}})
      CHECK(serialize(scramble(vt, perm, {r}, false)) == ref);
}

TEST_CASE("canonicalize orbits are exhaustive for small codes") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int c = static_cast<int>(seed % 4);
    const int comps = c > 0 && seed % 3 == 0 ? 2 : 1;
    const auto code = random_diagram(seed, c, static_cast<int>(seed % 2), comps);
    const std::string ref = serialize(code);
    std::vector<int> perm(static_cast<std::size_t>(c));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      for (int r0 = 0; r0 < 8; ++r0)
        for (int r1 = 0; r1 < (comps == 2 ? 8 : 1); ++r1)
          for (bool rev : {false, true}) CHECK(serialize(scramble(code, perm, {r0, r1}, rev)) == ref);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("canonicalize is idempotent and serialize round trips") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::mt19937_64 rng(seed);
    const int c = static_cast<int>(rng() % 7);
    const int b = static_cast<int>(rng() % 4);
    const int comps = 2 * c + b >= 2 && rng() % 3 == 0 ? 2 : 1;
    const auto x = random_diagram(seed, c, b, comps);
    const auto cx = canonicalize(x);
    CHECK(canonicalize(cx) == cx);
    CHECK(parse_code(serialize(x)) == cx);
    CHECK(parse_code(to_text(x)) == x);
  }
}

TEST_CASE("writhe") {
  CHECK(writhe(parse_code("O1+ U1+")) == 1);
  CHECK(writhe(parse_code("O1- U2- O3- U1- O2- U3-")) == -3);
  CHECK(writhe(parse_code("EMPTY")) == 0);
  CHECK(writhe(TwistedGaussCode{}) == 0);
}

TEST_CASE("random diagrams") {
  const auto loop = random_diagram(1, 0, 0, 1);
  CHECK(loop.num_components() == 1);
  CHECK(loop.component(0).empty());

  const auto d = random_diagram(7, 4, 2, 1);
  CHECK(d.num_crossings() == 4);
  CHECK(d.num_bars() == 2);
  CHECK(random_diagram(7, 4, 2, 1) == d);

  CHECK_THROWS_AS(random_diagram(1, 0, 1, 3), CodeError);
  CHECK_THROWS_AS(random_diagram(1, -1, 0, 1), CodeError);
}
