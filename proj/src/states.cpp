#include "polebracket/states.hpp"

#include <bit>
#include <stdexcept>

#include <json.hpp>

namespace polebracket {

int splice_partner(const RibbonComplex& rc, SpliceChoice choice, int vertex, int slot) {
  const Vertex& v = rc.vertices()[static_cast<std::size_t>(vertex)];
  if (v.degree == 2) return 1 - slot;
  const bool b_splice = (choice >> (v.crossing - 1)) & 1;
  // A: (1,2),(3,0); B: (0,1),(2,3).
  if (b_splice) return slot ^ 1;
  return slot % 2 == 1 ? (slot + 1) % 4 : (slot + 3) % 4;
}

std::uint64_t num_states(const ClosedSurface& f) {
  const int c = f.base().num_disks();
  if (c >= 64) throw std::overflow_error("num_states: too many crossings");
  return std::uint64_t{1} << c;
}

PoleState splice_curves(const ClosedSurface& f, SpliceChoice choice) {
  const RibbonComplex& rc = f.base();
  const int c = rc.num_disks();
  PoleState s;
  s.mask = choice;
  const std::uint64_t live = c >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << c) - 1;
  s.natural = c - 2 * std::popcount(choice & live);

  std::vector<bool> used(static_cast<std::size_t>(rc.num_bands()), false);
  for (int start = 0; start < rc.num_bands(); ++start) {
    if (used[static_cast<std::size_t>(start)]) continue;
    PoleCurve curve;
    std::vector<PoleEntry> entries;
    int cur = start;
    bool fwd = true;
    do {
      used[static_cast<std::size_t>(cur)] = true;
      const Band& band = rc.bands()[static_cast<std::size_t>(cur)];
      const End arrive = fwd ? band.head : band.tail;
      if (band.flip) {
        entries.push_back(PoleEntry::flip());
        curve.geometry.flip_parity = !curve.geometry.flip_parity;
      }
      const int out = splice_partner(rc, choice, arrive.vertex, arrive.slot);
      curve.geometry.steps.push_back(CurveStep{cur, fwd, arrive.vertex, arrive.slot, out});
      if (rc.vertices()[static_cast<std::size_t>(arrive.vertex)].degree == 4) {
        const bool in_in = rc.is_incoming(arrive.vertex, arrive.slot);
        const bool out_in = rc.is_incoming(arrive.vertex, out);
        if (in_in == out_in) {
          const PoleKind kind = in_in ? PoleKind::Sink : PoleKind::Source;
          const bool left = out == (arrive.slot + 1) % 4;
          const int lo = left ? arrive.slot : out;
          entries.push_back(PoleEntry::pole(kind, left ? Side::Left : Side::Right));
          curve.poles.push_back(PoleSite{static_cast<int>(curve.geometry.steps.size()) - 1, kind,
                                         rc.corner(arrive.vertex, lo + 1)});
        }
      }
      const auto [nb, is_tail] = rc.band_at(End{arrive.vertex, out});
      cur = nb;
      fwd = is_tail;
    } while (cur != start || !fwd);
    curve.word = PoleWord(std::move(entries));
    if (!curve.word.kinds_alternate())
      throw std::logic_error("splice_curves: sink and source poles do not alternate on a state curve");
    s.curves.push_back(std::move(curve));
  }
  return s;
}

void for_each_state(const ClosedSurface& f, SpliceChoice begin, SpliceChoice end,
                    const std::function<void(const PoleState&)>& visit) {
  for (SpliceChoice m = begin; m < end; ++m) visit(splice_curves(f, m));
}

void enumerate_states(const ClosedSurface& f, const std::function<void(const PoleState&)>& visit) {
  for_each_state(f, 0, num_states(f), visit);
}

StateTracer::StateTracer(const RibbonComplex& rc) : rc_(rc), used_(static_cast<std::size_t>(rc.num_bands())) {}

int StateTracer::trace(SpliceChoice choice, std::vector<CurveSummary>& out) {
  out.clear();
  std::fill(used_.begin(), used_.end(), 0);
  const int c = rc_.num_disks();
  const std::uint64_t live = c >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << c) - 1;
  const auto& bands = rc_.bands();
  for (int start = 0; start < rc_.num_bands(); ++start) {
    if (used_[static_cast<std::size_t>(start)]) continue;
    // Sides are pushed to the frame of the start, so cancellation of
    // neighbours is plain equality; the stack performs free reduction.
    stack_.clear();
    int frame = 0, poles = 0;
    int cur = start;
    bool fwd = true;
    do {
      used_[static_cast<std::size_t>(cur)] = 1;
      const Band& band = bands[static_cast<std::size_t>(cur)];
      const End arrive = fwd ? band.head : band.tail;
      frame ^= band.flip ? 1 : 0;
      const int out_slot = splice_partner(rc_, choice, arrive.vertex, arrive.slot);
      if (rc_.vertices()[static_cast<std::size_t>(arrive.vertex)].degree == 4 &&
          rc_.is_incoming(arrive.vertex, arrive.slot) == rc_.is_incoming(arrive.vertex, out_slot)) {
        ++poles;
        const auto side = static_cast<std::uint8_t>((out_slot == (arrive.slot + 1) % 4 ? 0 : 1) ^ frame);
        if (!stack_.empty() && stack_.back() == side)
          stack_.pop_back();
        else
          stack_.push_back(side);
      }
      const auto [nb, is_tail] = rc_.band_at(End{arrive.vertex, out_slot});
      cur = nb;
      fwd = is_tail;
    } while (cur != start || !fwd);
    // Cyclic reduction across the seam; the last entry re-enters the start
    // frame through the total flip parity.
    std::size_t lo = 0, hi = stack_.size();
    while (hi - lo >= 2 && (stack_[hi - 1] ^ frame) == stack_[lo]) {
      ++lo;
      --hi;
    }
    out.push_back(CurveSummary{frame == 1, static_cast<int>(hi - lo) / 2, poles});
  }
  return c - 2 * std::popcount(choice & live);
}

bool is_mobius(const EmbeddedCurve& c) { return c.flip_parity; }

CurveClassification classify_curve(const ClosedSurface& f, const PoleCurve& curve) {
  CurveClassification cc;
  cc.mobius = is_mobius(curve.geometry);
  cc.poles = curve.word.pole_count();
  cc.index = index(curve.word);
  cc.hom_class = f.homology_class(curve.geometry);
  cc.separating = cc.hom_class.none();
  cc.inessential = cc.separating && !cc.mobius && f.bounds_disk(curve.geometry);
  return cc;
}

StateClassification classify_state(const ClosedSurface& f, const PoleState& s) {
  StateClassification out;
  for (const auto& c : s.curves) {
    out.curves.push_back(classify_curve(f, c));
    out.iness_count += out.curves.back().inessential ? 1 : 0;
    out.nonori_count += out.curves.back().mobius ? 1 : 0;
  }
  return out;
}

std::vector<Violation> check_theorem1(const ClosedSurface& f, const PoleState& s) {
  std::vector<Violation> out;
  for (std::size_t i = 0; i < s.curves.size(); ++i) {
    const PoleCurve& c = s.curves[i];
    const int idx = index(c.word);
    if (idx > 0 && f.is_separating(c.geometry))
      out.push_back(Violation{s.mask, static_cast<int>(i), -1,
                              "separating curve of index " + std::to_string(idx) + ", word " + render(c.word)});
  }
  return out;
}

std::vector<Violation> check_lemma2(const ClosedSurface& f, const PoleState& s) {
  std::vector<const EmbeddedCurve*> geoms;
  for (const auto& c : s.curves) geoms.push_back(&c.geometry);
  const CutResult cut = f.cut(std::span<const EmbeddedCurve* const>(geoms));
  std::vector<int> balance(cut.regions.size(), 0);
  for (const auto& c : s.curves)
    for (const auto& p : c.poles)
      balance[static_cast<std::size_t>(cut.corner_region[static_cast<std::size_t>(p.corner)])] +=
          p.kind == PoleKind::Sink ? 1 : -1;
  std::vector<Violation> out;
  for (std::size_t r = 0; r < balance.size(); ++r)
    if (balance[r] != 0)
      out.push_back(Violation{s.mask, -1, static_cast<int>(r),
                              "region has " + std::to_string(balance[r]) + " more sinks than sources"});
  return out;
}

std::string state_json(const PoleState& s, const StateClassification& cls) {
  nlohmann::ordered_json j;
  j["mask"] = s.mask;
  j["natural"] = s.natural;
  auto curves = nlohmann::ordered_json::array();
  for (const auto& c : cls.curves) {
    nlohmann::ordered_json cj;
    cj["poles"] = c.poles;
    cj["index"] = c.index;
    cj["inessential"] = c.inessential;
    cj["separating"] = c.separating;
    cj["mobius"] = c.mobius;
    auto bits = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < c.hom_class.size(); ++i) bits.push_back(c.hom_class.test(i) ? 1 : 0);
    cj["hom"] = bits;
    curves.push_back(cj);
  }
  j["curves"] = curves;
  return j.dump();
}

}  // namespace polebracket
