#pragma once

// Seven-point ordinal probability scale and its min-max combination rules.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace wigmore {

enum class Label : std::uint8_t {
  lacking_support = 0,
  barely_likely,
  likely,
  more_than_likely,
  very_likely,
  almost_certain,
  certain,
};

inline constexpr std::array<Label, 7> kAllLabels = {
    Label::lacking_support, Label::barely_likely, Label::likely,    Label::more_than_likely,
    Label::very_likely,     Label::almost_certain, Label::certain,
};

/// Percent interval [lo, hi) of a label; `certain` is the closed point [100, 100].
struct Interval {
  double lo = 0;
  double hi = 0;
  bool hi_closed = false;

  bool contains(double p) const { return p >= lo && (hi_closed ? p <= hi : p < hi); }
  double midpoint() const { return (lo + hi) / 2.0; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

constexpr int rank(Label l) { return static_cast<int>(l); }
Label label_from_rank(int r);
Interval interval(Label l);

constexpr bool operator<(Label a, Label b) { return rank(a) < rank(b); }
constexpr bool operator>(Label a, Label b) { return rank(a) > rank(b); }
constexpr bool operator<=(Label a, Label b) { return rank(a) <= rank(b); }
constexpr bool operator>=(Label a, Label b) { return rank(a) >= rank(b); }

/// Snake-case identifier, e.g. "more_than_likely".
std::string_view label_name(Label l);
/// Words as they appear in prose, e.g. "more than likely".
std::string_view label_words(Label l);
/// Two-letter abbreviation: LS, BL, L, ML, VL, AC, C.
std::string_view label_abbrev(Label l);
/// Serialized token with interval, e.g. "likely[55,70)" or "certain[100,100]".
std::string label_token(Label l);
/// Prose phrase with interval, e.g. "likely (55-70%)", "almost certain (95-99%)".
std::string label_phrase(Label l);

/// Accepts snake-case names, tokens, abbreviations and prose words.
std::optional<Label> parse_label(std::string_view text);
/// Throws Errc::domain on unknown text.
Label label_from_string(std::string_view text);

/// Unique label whose interval contains p; interval edges belong to the higher label.
Label label_from_percentage(double percent);

Label min_combine(std::span<const Label> labels);
Label max_combine(std::span<const Label> labels);
inline Label min_combine(std::initializer_list<Label> labels) {
  return min_combine(std::span<const Label>(labels.begin(), labels.size()));
}
inline Label max_combine(std::initializer_list<Label> labels) {
  return max_combine(std::span<const Label>(labels.begin(), labels.size()));
}

/// Support an item transmits upward: the weaker of credibility and relevance.
Label inferential_force(Label credibility, Label relevance);

/// Lowers a label by `steps` ranks, floored at lacking support.
Label demote(Label l, int steps = 1);

struct BalancedProbability {
  Label support_for = Label::lacking_support;
  Label support_against = Label::lacking_support;
  bool dissonant = false;

  friend bool operator==(const BalancedProbability&, const BalancedProbability&) = default;
};

/// Builds a pair with the dissonance flag derived from the two labels.
BalancedProbability make_balanced(Label support_for, Label support_against);

enum class Direction : std::uint8_t { for_, against, neutral };

std::string_view direction_name(Direction d);
std::optional<Direction> parse_direction(std::string_view text);

struct DirectionalValue {
  Direction direction = Direction::for_;
  Label strength = Label::lacking_support;

  friend bool operator==(const DirectionalValue&, const DirectionalValue&) = default;
};

/// Fuses favoring and disfavoring support into one directional value.
///
/// The fusion rule is a stand-in and may be replaced:
///   against = LS           -> (for, f)
///   f = LS, against > LS   -> (against, d)
///   f > d > LS             -> (for, demote(f))
///   d > f > LS             -> (against, demote(d))
///   f = d > LS             -> (neutral, LS), pair is dissonant
DirectionalValue on_balance(const BalancedProbability& pair);

/// Signed ordering key: for-values rank above neutral, neutral above against.
int signed_strength(const DirectionalValue& v);

/// Lower-ladder phrase obtained by reflecting a label's interval around 50%.
struct ComplementPhrase {
  std::string words;  // e.g. "very unlikely"
  int lo = 0;         // reflected interval, percent
  int hi = 0;

  std::string text() const;  // e.g. "very unlikely (5-20%)"
};

/// Only defined for labels of rank >= likely; throws Errc::not_renderable otherwise.
ComplementPhrase complement_label(Label l);

}  // namespace wigmore
