#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polebracket/bracket.hpp"
#include "polebracket/code.hpp"
#include "polebracket/moves.hpp"

namespace polebracket {

/// Seeded twisted diagrams with at most `max_crossings` crossings and
/// `max_bars` bars. Some receive a planted R3 triangle or a T3 bar pair so
/// that every move kind has sites somewhere in the corpus.
std::vector<TwistedGaussCode> twisted_corpus(std::uint64_t seed, int count, int max_crossings = 8, int max_bars = 4);

/// Seeded classical diagrams whose realization is a union of spheres, grown
/// from unknots by R1, R2 and R3 moves.
std::vector<TwistedGaussCode> classical_corpus(std::uint64_t seed, int count, int max_crossings = 7);

/// Hand-written classical fixtures: unknot, kinks, 2-crossing unknots,
/// trefoil, figure-eight.
std::vector<TwistedGaussCode> classical_fixtures();

struct SuiteResult {
  std::string name;
  long long checked = 0;
  long long failures = 0;
  std::vector<std::string> samples;  // first few failure descriptions
  bool passed() const { return failures == 0; }
};

/// Move kinds exercised by the invariance suite, with their directions.
std::vector<std::pair<MoveKind, Direction>> move_catalog();

/// R_D before and after every site of every catalogued move. `site_counts`
/// receives the number of sites per move kind when non-null.
SuiteResult check_move_invariance(const std::vector<TwistedGaussCode>& corpus, const EvalOptions& opts = {},
                                  std::vector<std::pair<std::string, long long>>* site_counts = nullptr);
SuiteResult check_theorem1_suite(const std::vector<TwistedGaussCode>& corpus);
SuiteResult check_lemma2_suite(const std::vector<TwistedGaussCode>& corpus);
SuiteResult check_specialization(const std::vector<TwistedGaussCode>& corpus, const EvalOptions& opts = {});
/// Double bracket equals the skein oracle and is free of M and d.
SuiteResult check_classical(const std::vector<TwistedGaussCode>& corpus, const EvalOptions& opts = {});

}  // namespace polebracket
