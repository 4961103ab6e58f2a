#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polebracket/code.hpp"

namespace polebracket {

enum class MoveKind { R1Pos, R1Neg, R2, R3, T1, T2, T3, V1, V2, V3, V4 };
enum class Direction { Insert, Delete, Rewrite };

/// A move and where to apply it.
///
/// Inserting moves take gaps: gap (k, i) is the place right before token i of
/// component k (0 for an empty component). Deleting and rewriting moves take
/// token positions as documented per kind:
///   R1 insert   sites {gap}; variant 0 puts the over visit first, 1 the under.
///   R1 delete   sites {first token of the adjacent Ok Uk / Uk Ok pair}.
///   R2 insert   sites {gap a, gap b}; strand a receives the two over visits.
///               variant bit 0: sign of the first new crossing is - when set;
///               variant bit 1: antiparallel strands when set.
///   R2 delete   sites {first token of the adjacent over pair}.
///   R3 rewrite  sites {first token of each of the three adjacent pairs}.
///   T1 insert   sites {gap}; T1 delete sites {first bar of the adjacent pair}.
///   T3 rewrite  sites {over visit of the crossing}; variant 0 moves the bars
///               in front of both visits behind them, variant 1 the reverse.
///   T2, V1..V4  no sites; identities on Gauss codes.
struct MoveSpec {
  MoveKind kind = MoveKind::T2;
  Direction direction = Direction::Rewrite;
  std::vector<TokenPos> sites;
  int variant = 0;
};

class MoveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rewrites the code; throws MoveError naming the expected local pattern when
/// the move does not apply at the given sites.
TwistedGaussCode apply_move(const TwistedGaussCode& code, const MoveSpec& move);

/// Every site (and variant) at which `kind` applies in `direction`.
std::vector<MoveSpec> enumerate_sites(const TwistedGaussCode& code, MoveKind kind, Direction direction);

/// Every gap of the code, in component order.
std::vector<TokenPos> gaps(const TwistedGaussCode& code);

std::string to_string(MoveKind kind);
std::string to_string(Direction direction);
MoveKind parse_move_kind(std::string_view text);
Direction parse_direction(std::string_view text);
std::string to_string(const MoveSpec& move);

}  // namespace polebracket
