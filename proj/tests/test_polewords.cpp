#include <algorithm>
#include <random>
#include <set>
#include <string>

#include <doctest.h>

#include "polebracket/poleword.hpp"

using namespace polebracket;

namespace {

// Terminal pole counts over every reduction order, by brute force on the
// raw entry list. A pair cancels when the two poles are cyclically adjacent
// among poles and their sides agree once the flips between them are
// accounted for.
void terminal_counts(const std::vector<PoleEntry>& w, std::set<int>& out, std::set<std::string>& seen) {
  if (!seen.insert(render(PoleWord(w))).second) return;
  std::vector<std::size_t> poles;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!w[i].is_flip) poles.push_back(i);
  bool any = false;
  for (std::size_t k = 0; k < poles.size() && poles.size() >= 2; ++k) {
    const std::size_t a = poles[k], b = poles[(k + 1) % poles.size()];
    int flips = 0;
    for (std::size_t j = (a + 1) % w.size(); j != b; j = (j + 1) % w.size()) flips += w[j].is_flip ? 1 : 0;
    const bool same = (w[a].side == w[b].side) != (flips % 2 == 1);
    if (!same) continue;
    any = true;
    std::vector<PoleEntry> next;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (i != a && i != b) next.push_back(w[i]);
    terminal_counts(next, out, seen);
  }
  if (!any) out.insert(static_cast<int>(poles.size()));
}

int oracle_index(const PoleWord& w) {
  std::set<int> counts;
  std::set<std::string> seen;
  terminal_counts(w.entries(), counts, seen);
  REQUIRE(counts.size() == 1);
  return *counts.begin() / 2;
}

PoleWord random_word(std::mt19937_64& rng, int max_poles, bool flips) {
  const int n = 2 * static_cast<int>(rng() % static_cast<std::uint64_t>(max_poles / 2 + 1));
  std::string pat;
  for (int i = 0; i < n; ++i) {
    while (flips && rng() % 4 == 0) pat += '|';
    pat += rng() & 1 ? 'L' : 'R';
  }
  while (flips && rng() % 4 == 0) pat += '|';
  return PoleWord::from_pattern(pat);
}

// One random equivalence move.
PoleWord random_equivalence(const PoleWord& w, std::mt19937_64& rng) {
  std::vector<PoleEntry> e = w.entries();
  if (e.empty()) return w;
  switch (rng() % 4) {
    case 0:
      std::rotate(e.begin(), e.begin() + static_cast<long>(rng() % e.size()), e.end());
      break;
    case 1:
      std::reverse(e.begin(), e.end());
      for (auto& x : e)
        if (!x.is_flip) x.side = opposite(x.side);
      break;
    case 2: {
      // Move a flip mark one step past a neighbouring pole.
      const std::size_t i = rng() % e.size();
      const std::size_t j = (i + 1) % e.size();
      if (e[i].is_flip && !e[j].is_flip) {
        e[j].side = opposite(e[j].side);
        std::swap(e[i], e[j]);
      }
      break;
    }
    default: {
      // Insert a cancelling pair of flip marks.
      const std::size_t i = rng() % (e.size() + 1);
      e.insert(e.begin() + static_cast<long>(i), 2, PoleEntry::flip());
      break;
    }
  }
  return PoleWord(std::move(e));
}

}  // namespace

TEST_CASE("reduction examples") {
  CHECK(reduce(PoleWord{}).size() == 0);
  CHECK(reduce(PoleWord::from_pattern("LL")).pole_count() == 0);
  CHECK(reduce(PoleWord::from_pattern("LRLR")).pole_count() == 4);
  CHECK(is_irreducible(PoleWord::from_pattern("LRLR")));
  CHECK_FALSE(is_irreducible(PoleWord::from_pattern("LL")));
}

TEST_CASE("index examples") {
  CHECK(index(PoleWord{}) == 0);
  CHECK(index(PoleWord::from_pattern("LR")) == 1);
  CHECK(index(PoleWord::from_pattern("LLRL")) == 1);
  CHECK(oracle_index(PoleWord::from_pattern("LLRL")) == 1);
  // A flip between two poles turns an irreducible pair into a redex.
  CHECK(index(PoleWord::from_pattern("L|R")) == 0);
  CHECK(index(PoleWord::from_pattern("LR|")) == 0);
  CHECK(index(PoleWord::from_pattern("LR||")) == 1);
}

TEST_CASE("confluence examples") {
  CHECK(confluence_oracle(PoleWord::from_pattern("LL")));
  CHECK(confluence_oracle(PoleWord::from_pattern("LR|")));
  CHECK_THROWS_AS(confluence_oracle(PoleWord::from_pattern("LRLRLRLRLRLRLR"), 12), BoundExceeded);
}

TEST_CASE("render and parse round trip") {
  const PoleWord w = PoleWord::from_pattern("LR|LR");
  CHECK(render(w) == "(I:L)(O:R)|f|(I:L)(O:R)");
  CHECK(parse_pole_word(render(w)) == w);
}

TEST_CASE("index agrees with the exhaustive oracle") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const PoleWord w = random_word(rng, 8, true);
    CHECK_MESSAGE(index(w) == oracle_index(w), render(w));
    CHECK(index(reduce(w)) == index(w));
    CHECK(is_irreducible(reduce(w)));
    CHECK(equivalent(reduce(reduce(w)), reduce(w)));
  }
}

TEST_CASE("index and canonical form are invariant under equivalences") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const PoleWord w = random_word(rng, 10, true);
    PoleWord v = w;
    for (int k = 0; k < 6; ++k) v = random_equivalence(v, rng);
    CHECK(index(v) == index(w));
    CHECK(equivalent(v, w));
    CHECK(v.one_sided() == w.one_sided());
  }
}

TEST_CASE("pole counts are even and kinds alternate") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const PoleWord w = random_word(rng, 10, true);
    CHECK(w.pole_count() % 2 == 0);
    CHECK(w.kinds_alternate());
  }
}
