#pragma once

#include "wigmore/argument.hpp"

namespace wigmore::testing {

/// The chemical-weapons chain: E1 supports a fact-leaf which supports the
/// expertise sub-hypothesis; materials and funds are assumptions.
inline AnalysisTree hakka_tree() {
  AnalysisTree t;
  t.question = "Does Hakka have chemical weapons?";
  t = add_evidence(t, {"E1", "Chemical expert",
                       "A source, who has reported accurately in the past, indicated that Hakka has a "
                       "member with a bachelor's degree in chemistry.",
                       SourceKind::human_source, Label::very_likely,
                       "The source has reported accurately in the past."});

  t = add_hypothesis(t, {"H6", "Hakka has a member with a bachelor's degree in chemistry",
                         NodeKind::fact_leaf, {}, std::nullopt, ""});
  t = add_link(t, {"LK1", "E1", "H6", Polarity::favoring, std::nullopt, "", true});

  t = add_hypothesis(t, {"H3", "Hakka has expertise to develop chemical weapons", NodeKind::intermediate,
                         {}, std::nullopt, ""});
  t = add_argument(t, "H3",
                   {"A3", Polarity::favoring, Label::likely,
                    "A bachelor program in chemistry provides the basic knowledge for chemical weapons "
                    "development, but the member may not have developed this expertise.",
                    {"H6"}});

  t = add_hypothesis(t, {"H4", "Hakka has production materials", NodeKind::assumption, {},
                         Label::very_likely, "The precursors are commercially available."});
  t = add_hypothesis(t, {"H5", "Hakka has funds", NodeKind::assumption, {}, Label::likely,
                         "Similar sects are funded by their members."});

  t = add_hypothesis(t, {"H2", "Hakka develops chemical weapons", NodeKind::intermediate, {}, std::nullopt, ""});
  t = add_argument(t, "H2",
                   {"A2", Polarity::favoring, Label::certain,
                    "Expertise, materials and funds together are what development requires.",
                    {"H3", "H4", "H5"}});

  t = add_top_hypothesis(t, {"H1", "Hakka has chemical weapons", NodeKind::top, {}, std::nullopt, ""});
  t = add_argument(t, "H1",
                   {"A1", Polarity::favoring, Label::very_likely,
                    "An apocalyptic sect that develops chemical weapons very likely has them.",
                    {"H2"}});
  return t;
}

/// Two competing, fully assessed hypotheses with favoring and disfavoring
/// material on each; every assessment is justified.
inline AnalysisTree hakka_balanced_tree() {
  using enum Label;
  AnalysisTree t;
  t.question = "What weapons does Hakka have?";
  auto evidence = [&](const char* id, const char* name, SourceKind kind, Label cred, const char* why) {
    t = add_evidence(t, {id, name, "", kind, cred, why});
  };
  evidence("E1", "Chemical expert", SourceKind::human_source, very_likely, "Source has reported accurately.");
  evidence("E2", "Chemistry club", SourceKind::documentary, more_than_likely, "Club roster is public.");
  evidence("E3", "Police raid", SourceKind::documentary, likely, "Official report, partial search.");
  evidence("E4", "Defector", SourceKind::human_source, barely_likely, "Defector may seek favor.");
  evidence("E5", "Purchase record", SourceKind::documentary, very_likely, "Supplier invoice.");

  auto hyp = [&](const char* id, const char* text, NodeKind kind = NodeKind::intermediate) {
    t = add_hypothesis(t, {id, text, kind, {}, std::nullopt, ""});
  };
  auto link = [&](const char* id, const char* e, const char* h, Polarity p, std::optional<Label> rel,
                  const char* why, bool fact = false) {
    t = add_link(t, {id, e, h, p, rel, why, fact});
  };

  hyp("H6", "Hakka has a member with a bachelor's degree in chemistry", NodeKind::fact_leaf);
  link("LK1", "E1", "H6", Polarity::favoring, std::nullopt, "", true);
  link("LK2", "E2", "H6", Polarity::favoring, more_than_likely, "The roster lists the same member.");
  hyp("H3", "Hakka has expertise to develop chemical weapons");
  t = add_argument(t, "H3", {"A3", Polarity::favoring, likely, "A degree gives basic knowledge only.", {"H6"}});
  t = add_hypothesis(t, {"H4", "Hakka has production materials", NodeKind::assumption, {}, very_likely,
                         "Precursors are commercially available."});
  t = add_hypothesis(t, {"H5", "Hakka has funds", NodeKind::assumption, {}, likely,
                         "Similar sects are funded by their members."});
  hyp("H2", "Hakka develops chemical weapons");
  t = add_argument(t, "H2", {"A2", Polarity::favoring, certain, "All three are required.", {"H3", "H4", "H5"}});
  t = add_top_hypothesis(t, {"H1", "Hakka has chemical weapons", NodeKind::top, {}, std::nullopt, ""});
  t = add_argument(t, "H1", {"A1", Polarity::favoring, very_likely, "Developers very likely possess.", {"H2"}});
  link("LK7", "E3", "H1", Polarity::disfavoring, barely_likely, "The raid searched one site only.");

  hyp("H8", "Hakka has no chemical weapons laboratory");
  link("LK3", "E3", "H8", Polarity::favoring, likely, "The raid found no laboratory.");
  link("LK4", "E4", "H8", Polarity::favoring, more_than_likely, "The defector denies a program.");
  hyp("H9", "Hakka bought precursor chemicals", NodeKind::fact_leaf);
  link("LK5", "E5", "H9", Polarity::favoring, std::nullopt, "", true);
  link("LK6", "E2", "H9", Polarity::favoring, barely_likely, "Club members could have ordered them.");
  t = add_top_hypothesis(t, {"H7", "Hakka has only conventional weapons", NodeKind::top, {}, std::nullopt, ""});
  t = add_argument(t, "H7", {"A4", Polarity::favoring, more_than_likely, "No laboratory, no program.", {"H8"}});
  t = add_argument(t, "H7", {"A5", Polarity::disfavoring, barely_likely, "Precursors suggest intent.", {"H9"}});
  return t;
}

}  // namespace wigmore::testing
