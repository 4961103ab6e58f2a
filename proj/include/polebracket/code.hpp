#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polebracket {

enum class Role : std::uint8_t { Over, Under };

/// One entry of a component's cyclic sequence: a visit to a classical
/// crossing, or a bar on the arc.
struct Token {
  enum class Kind : std::uint8_t { Visit, Bar };

  Kind kind = Kind::Bar;
  int crossing = 0;
  Role role = Role::Over;
  int sign = 1;

  static Token bar() { return {}; }
  static Token visit(int crossing, Role role, int sign) { return {Kind::Visit, crossing, role, sign}; }

  bool is_bar() const { return kind == Kind::Bar; }
  bool is_visit() const { return kind == Kind::Visit; }

  friend bool operator==(const Token&, const Token&) = default;
};

using Component = std::vector<Token>;

class CodeError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Pairing, Infeasible };

  CodeError(Kind kind, int component, int offset, const std::string& what);

  Kind kind() const { return kind_; }
  int component() const { return component_; }
  int offset() const { return offset_; }

 private:
  Kind kind_;
  int component_;
  int offset_;
};

/// Position of a token inside a code.
struct TokenPos {
  int component = 0;
  int offset = 0;
  friend bool operator==(const TokenPos&, const TokenPos&) = default;
};

/// A twisted link diagram as signed Gauss code with bars. Virtual crossings
/// carry no data and are not represented.
///
/// Construction validates pairing (each crossing visited once over, once
/// under, both visits with the same sign) and renumbers crossings to 1..c
/// preserving the numeric order of the input ids.
class TwistedGaussCode {
 public:
  TwistedGaussCode() = default;
  explicit TwistedGaussCode(std::vector<Component> components);

  const std::vector<Component>& components() const { return components_; }
  const Component& component(int i) const { return components_[static_cast<std::size_t>(i)]; }
  int num_components() const { return static_cast<int>(components_.size()); }
  int num_crossings() const { return static_cast<int>(signs_.size()); }
  int num_bars() const;

  /// Sign of crossing `id` (1-based).
  int sign(int id) const { return signs_[static_cast<std::size_t>(id - 1)]; }
  TokenPos over_visit(int id) const { return over_[static_cast<std::size_t>(id - 1)]; }
  TokenPos under_visit(int id) const { return under_[static_cast<std::size_t>(id - 1)]; }

  bool has_bars() const { return num_bars() > 0; }

  friend bool operator==(const TwistedGaussCode& a, const TwistedGaussCode& b) {
    return a.components_ == b.components_;
  }

 private:
  std::vector<Component> components_;
  std::vector<int> signs_;
  std::vector<TokenPos> over_;
  std::vector<TokenPos> under_;
};

/// Parses the line-oriented .tgc format: one component per line, tokens
/// `O<id><sign>`, `U<id><sign>`, `B`, the literal `EMPTY` for a bare loop,
/// `#` comments. Blank lines are ignored.
TwistedGaussCode parse_code(std::string_view text);

/// Emits the canonical form in .tgc format, one line per component.
std::string serialize(const TwistedGaussCode& code);

/// Emits the code as stored, without canonicalizing.
std::string to_text(const TwistedGaussCode& code);

std::string to_string(const Token& token);

/// Deterministic representative under rotation of each component,
/// reordering of components and renumbering of crossings.
TwistedGaussCode canonicalize(const TwistedGaussCode& code);

int writhe(const TwistedGaussCode& code);

/// Seeded random diagram with the given number of classical crossings,
/// bars and components. With more than one component every component
/// receives at least one token, so `components` may not exceed
/// 2 * crossings + bars in that case.
TwistedGaussCode random_diagram(std::uint64_t seed, int crossings, int bars, int components);

}  // namespace polebracket
