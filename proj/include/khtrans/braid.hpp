#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace khtrans {

/// A word in the braid group generators. Letter +i is sigma_i, -i is its
/// inverse; every |letter| lies in [1, strands - 1].
class BraidWord {
public:
  BraidWord() = default;
  BraidWord(int strands, std::vector<int> letters);

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }

  int positive_count() const noexcept;
  int negative_count() const noexcept;

  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
  int strands_ = 1;
  std::vector<int> letters_;
};

/// Parses whitespace- or comma-separated signed integers. Without a hint the
/// strand count is max|letter| + 1 (1 for the empty word).
BraidWord parse_braid_word(std::string_view text, std::optional<int> strands_hint = std::nullopt);

struct Crossing {
  int position; // generator index i, the crossing swaps strands i and i+1 (1-based)
  int sign;     // +1 or -1

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Closed-braid diagram. Crossings are listed top to bottom in word order;
/// the closure arcs join the bottom of each strand to its top.
class Diagram {
public:
  Diagram() = default;
  Diagram(int strands, std::vector<Crossing> crossings);

  int strands() const noexcept { return strands_; }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int positive_count() const noexcept { return n_plus_; }
  int negative_count() const noexcept { return n_minus_; }

  /// Number of strand intervals between consecutive crossing levels. The
  /// interval below the last crossing is the one above the first, joined by
  /// the closure, so there are max(n, 1) of them.
  int segment_count() const noexcept { return crossings_.empty() ? 1 : crossing_count(); }
  int arc_count() const noexcept { return segment_count() * strands_; }

  /// Arc of strand position `pos` (0-based) in segment `seg`. Segment j lies
  /// directly above crossing j; segment n wraps to 0.
  int arc_id(int seg, int pos) const noexcept {
    return (seg % segment_count()) * strands_ + pos;
  }

private:
  int strands_ = 1;
  std::vector<Crossing> crossings_;
  int n_plus_ = 0;
  int n_minus_ = 0;
};

Diagram closure_diagram(const BraidWord& w);

/// sl = -b + n_+ - n_-.
int self_linking(const BraidWord& w);

struct PositiveStab {};
struct NegativeStab {};
struct Conjugate {
  int letter;
};
using MarkovMove = std::variant<PositiveStab, NegativeStab, Conjugate>;

BraidWord markov_move(const BraidWord& w, const MarkovMove& move);

/// Number of cycles of the strand permutation, i.e. link components.
int link_components(const BraidWord& w);

bool is_positive_braid(const BraidWord& w);

} // namespace khtrans
