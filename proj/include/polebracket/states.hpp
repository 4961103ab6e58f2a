#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "polebracket/poleword.hpp"
#include "polebracket/surface.hpp"

namespace polebracket {

/// Bit (id - 1) set means crossing id takes the B-splice.
using SpliceChoice = std::uint64_t;

/// A pole on a state curve. `corner` is a corner of the complementary region
/// its cusp points into.
struct PoleSite {
  int step = 0;  // index into geometry.steps
  PoleKind kind = PoleKind::Sink;
  int corner = 0;
};

struct PoleCurve {
  EmbeddedCurve geometry;
  PoleWord word;
  std::vector<PoleSite> poles;
};

struct PoleState {
  SpliceChoice mask = 0;
  int natural = 0;  // #A - #B
  std::vector<PoleCurve> curves;
};

struct CurveClassification {
  bool inessential = false;
  bool separating = false;
  bool mobius = false;
  int index = 0;
  int poles = 0;
  Gf2Vector hom_class;
};

struct StateClassification {
  std::vector<CurveClassification> curves;
  int iness_count = 0;
  int nonori_count = 0;
};

/// Slot joined to `slot` inside vertex `v` by the splice choice. A-splices
/// join slots (1,2) and (3,0), B-splices (0,1) and (2,3).
int splice_partner(const RibbonComplex& rc, SpliceChoice choice, int vertex, int slot);

/// The pole curve link of one state.
PoleState splice_curves(const ClosedSurface& f, SpliceChoice choice);

/// Number of states, 2^c.
std::uint64_t num_states(const ClosedSurface& f);

/// Visits the states with masks in [begin, end), in ascending order.
void for_each_state(const ClosedSurface& f, SpliceChoice begin, SpliceChoice end,
                    const std::function<void(const PoleState&)>& visit);
/// Visits all 2^c states.
void enumerate_states(const ClosedSurface& f, const std::function<void(const PoleState&)>& visit);

bool is_mobius(const EmbeddedCurve& c);

CurveClassification classify_curve(const ClosedSurface& f, const PoleCurve& curve);
StateClassification classify_state(const ClosedSurface& f, const PoleState& s);

struct Violation {
  SpliceChoice mask = 0;
  int curve = -1;   // Theorem 1: offending curve
  int region = -1;  // Lemma 2: unbalanced region
  std::string detail;
};

/// Curves of positive index that separate F.
std::vector<Violation> check_theorem1(const ClosedSurface& f, const PoleState& s);
/// Regions of F cut along the state whose sink and source counts differ.
std::vector<Violation> check_lemma2(const ClosedSurface& f, const PoleState& s);

/// What the intrinsic bracket rule needs from a curve.
struct CurveSummary {
  bool one_sided = false;
  int index = 0;
  int poles = 0;
};

/// Allocation-free tracing of state curves for repeated evaluation. Curve
/// order and indices agree with splice_curves and polewords::index.
class StateTracer {
 public:
  explicit StateTracer(const RibbonComplex& rc);
  /// Fills `out` with one summary per curve and returns the natural count.
  int trace(SpliceChoice choice, std::vector<CurveSummary>& out);

 private:
  const RibbonComplex& rc_;
  std::vector<std::uint8_t> used_;
  std::vector<std::uint8_t> stack_;
};

/// {"mask", "natural", "curves": [{"poles", "index", "inessential", "separating", "mobius", "hom"}]}
std::string state_json(const PoleState& s, const StateClassification& cls);

}  // namespace polebracket
