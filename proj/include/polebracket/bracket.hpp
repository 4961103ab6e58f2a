#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "polebracket/code.hpp"
#include "polebracket/laurent.hpp"
#include "polebracket/surface.hpp"

namespace polebracket {

/// Computable stand-in for the class of one reduced essential pole curve.
struct CurveSignature {
  int index = 0;
  bool mobius = false;
  std::string hom;  // '0'/'1' per h1 basis element
  bool separating = false;
  auto operator<=>(const CurveSignature&) const = default;
};

/// Sorted multiset of essential curve signatures; empty for states without
/// essential curves.
using StateClassSignature = std::vector<CurveSignature>;

/// Bracket value keyed by state class signatures; coefficients are A-only.
using BracketValue = std::map<StateClassSignature, MultiLaurent>;

/// How a state curve is weighted in the double bracket.
///  Intrinsic: one-sided curves M, curves of index i > 0 d_i, every other
///            curve delta. Depends only on the diagram.
///  Geometric: delta only for curves bounding a disk in the capped surface,
///            M for one-sided curves, d_i with d_0 = 1. Changes under moves
///            that alter the genus of the capped surface.
enum class BracketRule { Intrinsic, Geometric };

struct EvalOptions {
  BracketRule rule = BracketRule::Intrinsic;
  int workers = 1;
  int max_crossings = 24;  // 2^c guard
  bool allow_large = false;
};

class StateSumTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BracketValue surface_pole_bracket(const TwistedGaussCode& code, const EvalOptions& opts = {});
BracketValue surface_pole_bracket(const ClosedSurface& f, const EvalOptions& opts = {});

/// Replaces every signature by M^(#Mobius curves) * prod d_index and sums.
/// Under the intrinsic rule each two-sided index-0 essential curve also
/// contributes delta.
MultiLaurent specialize_bracket(const BracketValue& b, BracketRule rule = BracketRule::Intrinsic);

struct TableRow {
  int natural = 0;
  int iness = 0;
  std::string label;
};

/// Sum of A^natural * delta^iness per label.
std::map<std::string, MultiLaurent> assemble_from_table(const std::vector<TableRow>& rows);

MultiLaurent double_bracket(const TwistedGaussCode& code, const EvalOptions& opts = {});
MultiLaurent double_bracket(const ClosedSurface& f, const EvalOptions& opts = {});

/// (-A)^(-3 writhe) times the double bracket.
MultiLaurent normalized(const TwistedGaussCode& code, const EvalOptions& opts = {});

/// Kauffman bracket of a classical diagram by skein recursion, every loop
/// weighted by delta. Rejects codes with bars or a non-spherical realization.
MultiLaurent classical_kauffman_oracle(const TwistedGaussCode& code);

std::string to_string(const CurveSignature& s);
std::string to_string(const StateClassSignature& s);
std::string to_string(const BracketValue& b);
std::string to_json(const BracketValue& b);

}  // namespace polebracket
