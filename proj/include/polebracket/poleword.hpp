#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polebracket {

enum class Side : std::uint8_t { Left = 0, Right = 1 };
enum class PoleKind : std::uint8_t { Sink, Source };  // I-pole, O-pole

inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

/// Entry of a cyclic pole word: a pole with the side its cusp points to, or
/// a flip mark where the curve crosses an orientation-reversing band. Sides
/// are read in the frame current at that point of the traversal.
struct PoleEntry {
  bool is_flip = false;
  Side side = Side::Left;
  PoleKind kind = PoleKind::Sink;

  static PoleEntry pole(PoleKind kind, Side side) { return {false, side, kind}; }
  static PoleEntry flip() { return {true, Side::Left, PoleKind::Sink}; }

  friend bool operator==(const PoleEntry&, const PoleEntry&) = default;
};

class PoleWord {
 public:
  PoleWord() = default;
  explicit PoleWord(std::vector<PoleEntry> entries) : entries_(std::move(entries)) {}

  /// Word from sides and flips only, kinds assigned by alternation from a sink.
  static PoleWord from_pattern(std::string_view pattern);  // e.g. "LR|LR", '|' = flip mark

  const std::vector<PoleEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  int pole_count() const;
  int flip_count() const;
  bool one_sided() const { return flip_count() % 2 == 1; }

  /// Poles alternate sink/source around the cycle (and their number is even).
  bool kinds_alternate() const;

  friend bool operator==(const PoleWord&, const PoleWord&) = default;

 private:
  std::vector<PoleEntry> entries_;
};

/// Number of poles and flips, sides pushed to the frame of the first entry.
struct NormalWord {
  bool one_sided = false;
  std::vector<Side> sides;
  auto operator<=>(const NormalWord&) const = default;
};

NormalWord normalize(const PoleWord& w);

/// Canonical key under rotation, reorientation (reversal with side swap),
/// flip-mark moves and global frame change.
NormalWord canonical_form(const PoleWord& w);
bool equivalent(const PoleWord& a, const PoleWord& b);

/// Cancels cyclically adjacent pole pairs with equal effective side, always
/// taking the leftmost redex, until none is left.
PoleWord reduce(const PoleWord& w);
bool is_irreducible(const PoleWord& w);

/// Half the number of poles of the reduced word.
int index(const PoleWord& w);

class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Explores every maximal reduction sequence and reports whether all
/// terminal words are equivalent. Throws BoundExceeded past `max_poles`.
bool confluence_oracle(const PoleWord& w, int max_poles = 12);

/// Debug rendering such as "(I:L)(O:R)|f|(I:L)(O:R)".
std::string render(const PoleWord& w);
PoleWord parse_pole_word(std::string_view text);

}  // namespace polebracket
