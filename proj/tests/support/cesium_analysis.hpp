#pragma once

#include "wigmore/argument.hpp"

namespace wigmore::testing {

inline const char* const kCesiumQuestion = "What happened to the cesium-137 canister?";

/// Mid-analysis state: "stolen" has only favoring material, the project
/// hypothesis is unassessed, one relevance and every credibility lack
/// justification.
inline AnalysisTree cesium_draft() {
  using enum Label;
  AnalysisTree t;
  t.question = kCesiumQuestion;
  auto evidence = [&](const char* id, const char* name, SourceKind kind, Label cred) {
    t = add_evidence(t, {id, name, "", kind, cred, ""});
  };
  evidence("E1", "Washington Gazette", SourceKind::documentary, more_than_likely);
  evidence("E2", "Canister registered", SourceKind::documentary, almost_certain);
  evidence("E3", "Not in Locker", SourceKind::human_source, very_likely);
  evidence("E4", "Not checked out", SourceKind::documentary, very_likely);
  evidence("E5", "Ralph", SourceKind::human_source, likely);

  auto hyp = [&](const char* id, const char* text) {
    t = add_hypothesis(t, {id, text, NodeKind::intermediate, {}, std::nullopt, ""});
  };
  auto link = [&](const char* id, const char* e, const char* h, Polarity p, std::optional<Label> rel,
                  const char* why) { t = add_link(t, {id, e, h, p, rel, why}); };

  hyp("H11", "The canister was stolen from the locker");
  link("LK1", "E3", "H11", Polarity::favoring, likely, "");
  link("LK2", "E4", "H11", Polarity::favoring, more_than_likely, "Nobody checked it out, so it left another way.");
  hyp("H12", "A truck left the company with the canister");
  link("LK3", "E5", "H12", Polarity::favoring, more_than_likely, "Ralph saw a truck in the parking area.");
  link("LK4", "E1", "H12", Polarity::favoring, likely, "The article mentions a truck.");
  t = add_top_hypothesis(t, {"H1", "The cesium-137 canister was stolen", NodeKind::top, {}, std::nullopt, ""});
  t = add_argument(t, "H1",
                   {"A1", Polarity::favoring, very_likely, "Taken from the locker and driven away means stolen.",
                    {"H11", "H12"}});

  hyp("H21", "The canister is somewhere in the XYZ warehouse");
  link("LK5", "E2", "H21", Polarity::favoring, likely, "A registered canister is tracked to the warehouse.");
  link("LK6", "E3", "H21", Polarity::disfavoring, barely_likely, "The locker is empty.");
  t = add_top_hypothesis(t, {"H2", "The cesium-137 canister was misplaced", NodeKind::top, {}, std::nullopt, ""});
  t = add_argument(t, "H2",
                   {"A2", Polarity::favoring, barely_likely, "A canister in the warehouse but not in its locker is "
                                                             "misplaced.",
                    {"H21"}});

  hyp("H31", "A project team took the canister");
  link("LK7", "E4", "H31", Polarity::favoring, std::nullopt, "");
  link("LK8", "E2", "H31", Polarity::disfavoring, std::nullopt, "");
  t = add_top_hypothesis(t, {"H3", "The cesium-137 canister is being used in another project of the XYZ Company",
                             NodeKind::top, {}, std::nullopt, ""});
  t = add_argument(t, "H3", {"A3", Polarity::favoring, std::nullopt, "", {"H31"}});
  return t;
}

/// Completed analysis behind the production report: stolen is likely, the
/// project hypothesis very unlikely and misplacement almost impossible.
inline AnalysisTree cesium_final() {
  using enum Label;
  AnalysisTree t;
  t.question = kCesiumQuestion;
  auto evidence = [&](const char* id, const char* name, const char* body, SourceKind kind, Label cred,
                      const char* why) { t = add_evidence(t, {id, name, body, kind, cred, why}); };
  evidence("E1", "Washington Gazette",
           "The Washington Gazette reported that a canister containing cesium-137 is missing from the XYZ Company.",
           SourceKind::documentary, more_than_likely, "Established newspaper; the report cites company staff.");
  evidence("E2", "Canister registered", "The canister is registered to the XYZ Company for use in its projects.",
           SourceKind::documentary, almost_certain, "Regulatory registry record.");
  evidence("E3", "Not in Locker", "The canister is not in the locker where it was stored.", SourceKind::human_source,
           very_likely, "Reported by the warehouse staff who opened the locker.");
  evidence("E4", "Not checked out", "The warehouse log has no check-out record for the canister.",
           SourceKind::documentary, almost_certain, "The log is kept electronically and audited.");
  evidence("E5", "Ralph", "Ralph, the supervisor, thinks the truck belonged to a regular supplier.",
           SourceKind::human_source, likely, "Ralph did not see the truck up close.");
  evidence("E6", "Locksmith",
           "After noticing that the lock containing the cesium canister appeared to have been tampered with, XYZ "
           "consulted a locksmith who confirmed that the lock was forced open.",
           SourceKind::human_source, almost_certain, "Independent professional with no stake in the outcome.");
  evidence("E7", "Security camera",
           "The security camera at the XYZ warehouse contains a video segment showing a person loading what is "
           "probably the stolen canister into a U-Haul panel truck one day before the canister was discovered missing.",
           SourceKind::documentary, very_likely, "Video is time-stamped; the object is only probably the canister.");
  evidence("E8", "Guard record",
           "The record of the security guard indicates that a panel truck bearing Maryland license plate number "
           "MDC-578 was in the XYZ parking area that same day.",
           SourceKind::documentary, more_than_likely, "Routine log, occasionally filled in after the fact.");
  evidence("E9", "Grace",
           "Grace, the Vice President for Operations at XYZ, reported that while they have several projects, none of "
           "them currently needs a cesium-137 source.",
           SourceKind::human_source, very_likely, "Senior officer with direct knowledge of the projects.");

  auto hyp = [&](const char* id, const char* text, NodeKind kind = NodeKind::intermediate) {
    t = add_hypothesis(t, {id, text, kind, {}, std::nullopt, ""});
  };
  auto link = [&](const char* id, const char* e, const char* h, Polarity p, std::optional<Label> rel,
                  const char* why, bool fact = false) { t = add_link(t, {id, e, h, p, rel, why, fact}); };

  // Stolen.
  hyp("H11", "The canister was stolen from the locker");
  link("LK1", "E3", "H11", Polarity::favoring, very_likely, "An empty locker is what a theft leaves behind.");
  link("LK2", "E6", "H11", Polarity::favoring, very_likely, "A forced lock indicates the locker was broken into.");
  hyp("H12", "The canister was loaded into a truck that left the company");
  link("LK3", "E7", "H12", Polarity::favoring, very_likely, "The video shows the loading.");
  link("LK4", "E8", "H12", Polarity::favoring, likely, "Places a panel truck on site that day.");
  link("LK5", "E1", "H12", Polarity::favoring, barely_likely, "The article repeats the loading account.");
  t = add_hypothesis(t, {"H13", "The truck on the video was not a scheduled delivery", NodeKind::assumption, {},
                         very_likely, "No delivery was scheduled for that day."});
  t = add_top_hypothesis(t, {"H1", "The cesium-137 canister was stolen", NodeKind::top, {}, std::nullopt, ""});
  t = add_argument(t, "H1",
                   {"A1", Polarity::favoring, more_than_likely,
                    "Damage to the locker where the cesium was stored and video surveillance of what appears to be "
                    "the stolen canister being loaded into a truck strongly suggest the canister was stolen.",
                    {"H11", "H12", "H13"}});
  link("LK6", "E5", "H1", Polarity::disfavoring, barely_likely,
       "A supplier's truck would make the loading routine rather than theft.");

  // Used in a project.
  hyp("H31", "A project of the XYZ Company needs a cesium-137 source");
  link("LK7", "E9", "H31", Polarity::favoring, barely_likely, "XYZ runs several projects.");
  link("LK8", "E2", "H31", Polarity::favoring, barely_likely, "The canister is registered for project use.");
  t = add_top_hypothesis(t, {"H3", "The cesium-137 canister is being used in a project of the XYZ Company",
                             NodeKind::top, {}, std::nullopt, ""});
  t = add_argument(t, "H3",
                   {"A3", Polarity::favoring, likely, "A project that needs the source would use the canister.",
                    {"H31"}});
  link("LK9", "E4", "H3", Polarity::disfavoring, almost_certain, "Project use requires checking the canister out.");
  link("LK10", "E9", "H3", Polarity::disfavoring, very_likely, "No current project needs a cesium-137 source.");

  // Misplaced.
  hyp("H21", "The lock of the locker was forced open", NodeKind::fact_leaf);
  link("LK11", "E6", "H21", Polarity::favoring, std::nullopt, "", true);
  link("LK12", "E3", "H21", Polarity::favoring, very_likely, "The canister is gone from a locked locker.");
  t = add_top_hypothesis(t, {"H2", "The cesium-137 canister was misplaced", NodeKind::top, {}, std::nullopt, ""});
  t = add_argument(t, "H2",
                   {"A2", Polarity::disfavoring, almost_certain,
                    "A canister is not misplaced by forcing the lock of its locker.", {"H21"}});
  return t;
}

}  // namespace wigmore::testing
