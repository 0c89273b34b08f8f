#include "wigmore/probability.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "wigmore/error.hpp"

namespace wigmore {

namespace {

struct LabelInfo {
  std::string_view name;
  std::string_view words;
  std::string_view abbrev;
  Interval interval;
  // Interval as printed in prose; almost certain reads 95-99.
  int phrase_lo;
  int phrase_hi;
};

constexpr std::array<LabelInfo, 7> kInfo = {{
    {"lacking_support", "lacking support", "LS", {0, 50, false}, 0, 50},
    {"barely_likely", "barely likely", "BL", {50, 55, false}, 50, 55},
    {"likely", "likely", "L", {55, 70, false}, 55, 70},
    {"more_than_likely", "more than likely", "ML", {70, 80, false}, 70, 80},
    {"very_likely", "very likely", "VL", {80, 95, false}, 80, 95},
    {"almost_certain", "almost certain", "AC", {95, 100, false}, 95, 99},
    {"certain", "certain", "C", {100, 100, true}, 100, 100},
}};

const LabelInfo& info(Label l) { return kInfo[static_cast<std::size_t>(rank(l))]; }

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string percent_range(int lo, int hi) {
  std::ostringstream os;
  if (lo == hi)
    os << lo << '%';
  else
    os << lo << '-' << hi << '%';
  return os.str();
}

}  // namespace

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::domain: return "domain";
    case Errc::unknown_id: return "unknown_id";
    case Errc::precondition: return "precondition";
    case Errc::not_ready: return "not_ready";
    case Errc::locked_token: return "locked_token";
    case Errc::not_renderable: return "not_renderable";
    case Errc::structural: return "structural";
    case Errc::unauthorized: return "unauthorized";
    case Errc::conflict: return "conflict";
    case Errc::parse: return "parse";
    case Errc::io: return "io";
  }
  return "unknown";
}

Label label_from_rank(int r) {
  if (r < 0 || r > 6) throw Error(Errc::domain, "label rank out of range: " + std::to_string(r));
  return static_cast<Label>(r);
}

Interval interval(Label l) { return info(l).interval; }
std::string_view label_name(Label l) { return info(l).name; }
std::string_view label_words(Label l) { return info(l).words; }
std::string_view label_abbrev(Label l) { return info(l).abbrev; }

std::string label_token(Label l) {
  const auto& iv = info(l).interval;
  std::ostringstream os;
  os << info(l).name << '[' << iv.lo << ',' << iv.hi << (iv.hi_closed ? ']' : ')');
  return os.str();
}

std::string label_phrase(Label l) {
  return std::string(info(l).words) + " (" + percent_range(info(l).phrase_lo, info(l).phrase_hi) + ")";
}

std::optional<Label> parse_label(std::string_view text) {
  std::string s = lower(text);
  if (auto bracket = s.find('['); bracket != std::string::npos) {
    auto l = parse_label(std::string_view(s).substr(0, bracket));
    if (l && label_token(*l) == s) return l;
    return std::nullopt;
  }
  for (Label l : kAllLabels) {
    if (s == info(l).name || s == info(l).words || s == lower(info(l).abbrev)) return l;
  }
  return std::nullopt;
}

Label label_from_string(std::string_view text) {
  if (auto l = parse_label(text)) return *l;
  throw Error(Errc::domain, "unknown probability label: '" + std::string(text) + "'");
}

Label label_from_percentage(double percent) {
  if (!(percent >= 0.0 && percent <= 100.0))
    throw Error(Errc::domain, "percentage outside [0,100]: " + std::to_string(percent));
  for (Label l : kAllLabels) {
    if (info(l).interval.contains(percent)) return l;
  }
  return Label::certain;  // unreachable: intervals cover [0,100]
}

Label min_combine(std::span<const Label> labels) {
  if (labels.empty()) throw Error(Errc::domain, "min_combine of an empty list");
  return *std::min_element(labels.begin(), labels.end());
}

Label max_combine(std::span<const Label> labels) {
  if (labels.empty()) throw Error(Errc::domain, "max_combine of an empty list");
  return *std::max_element(labels.begin(), labels.end());
}

Label inferential_force(Label credibility, Label relevance) {
  return min_combine({credibility, relevance});
}

Label demote(Label l, int steps) { return static_cast<Label>(std::max(0, rank(l) - steps)); }

BalancedProbability make_balanced(Label support_for, Label support_against) {
  return {support_for, support_against,
          support_for == support_against && support_for > Label::lacking_support};
}

std::string_view direction_name(Direction d) {
  switch (d) {
    case Direction::for_: return "for";
    case Direction::against: return "against";
    case Direction::neutral: return "neutral";
  }
  return "neutral";
}

std::optional<Direction> parse_direction(std::string_view text) {
  if (text == "for") return Direction::for_;
  if (text == "against") return Direction::against;
  if (text == "neutral") return Direction::neutral;
  return std::nullopt;
}

DirectionalValue on_balance(const BalancedProbability& pair) {
  const Label f = pair.support_for;
  const Label d = pair.support_against;
  constexpr Label ls = Label::lacking_support;
  if (d == ls) return {Direction::for_, f};
  if (f == ls) return {Direction::against, d};
  if (f > d) return {Direction::for_, demote(f)};
  if (d > f) return {Direction::against, demote(d)};
  return {Direction::neutral, ls};
}

int signed_strength(const DirectionalValue& v) {
  // Scaled so that equal strengths still order for > neutral > against.
  switch (v.direction) {
    case Direction::for_: return 3 * rank(v.strength) + 1;
    case Direction::neutral: return 0;
    case Direction::against: return -3 * rank(v.strength) - 1;
  }
  return 0;
}

std::string ComplementPhrase::text() const { return words + " (" + percent_range(lo, hi) + ")"; }

ComplementPhrase complement_label(Label l) {
  if (l < Label::likely)
    throw Error(Errc::not_renderable,
                "no complement phrase below likely: " + std::string(label_words(l)));
  std::string_view words;
  switch (l) {
    case Label::likely: words = "unlikely"; break;
    case Label::more_than_likely: words = "not likely"; break;
    case Label::very_likely: words = "very unlikely"; break;
    case Label::almost_certain: words = "almost no chance"; break;
    default: words = "no chance"; break;
  }
  return {std::string(words), 100 - info(l).phrase_hi, 100 - info(l).phrase_lo};
}

}  // namespace wigmore
