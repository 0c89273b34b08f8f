#pragma once

#include <string>
#include <vector>

#include "wigmore/brainstorm.hpp"

namespace wigmore::testing {

struct ScriptedEvent {
  std::string actor;
  Timestamp at;
  BrainstormEvent event;
};

inline const Timestamp kCesiumStart = *parse_timestamp("2019-03-04T08:00:00Z");

inline Timestamp at_hours(double h) {
  return kCesiumStart + std::chrono::seconds{static_cast<long long>(h * 3600)};
}

inline std::vector<CatalogEvidence> cesium_catalog() {
  return {
      {"E1", "Washington Gazette",
       "The Washington Gazette reported that a canister containing cesium-137 is missing from the XYZ Company.",
       SourceKind::documentary},
      {"E2", "Canister registered", "The XYZ Company registered the cesium-137 canister with the regulator.",
       SourceKind::documentary},
      {"E3", "Not in Locker", "The locker where the canister was stored is empty and its lock was forced open.",
       SourceKind::human_source},
      {"E4", "Not checked out", "The warehouse log has no check-out record for the canister.",
       SourceKind::documentary},
      {"E5", "Ralph", "Ralph, the warehouse supervisor, saw a panel truck in the parking area the day before.",
       SourceKind::human_source},
  };
}

inline const char* const kStolenText = "The cesium-137 canister was stolen";
inline const char* const kMisplacedText = "The cesium-137 canister was misplaced";
inline const char* const kProjectText =
    "The cesium-137 canister is being used in a project of the XYZ Company without having been checked out "
    "from XYZ warehouse";
inline const char* const kTruckArgument =
    "A truck entered the company, the canister was stolen from the locker, loaded into the truck, and the truck "
    "left with the canister.";

/// Hypothesis generation by P1, P2 and P3: P1 proposes three answers, P2
/// reformulates two, rejects "Was lost" and proposes a third, P3 votes for
/// P2's versions, and P1 reviews, votes and concedes.
inline std::vector<ScriptedEvent> cesium_answers_script() {
  using namespace event;
  std::vector<ScriptedEvent> s;
  s.push_back({"facilitator", at_hours(0),
               Create{"cesium", "Missing cesium-137 canister",
                      "It was reported that a canister containing cesium-137 is missing from the XYZ Company in MD.",
                      "What happened to the cesium-137 canister?", cesium_catalog()}});
  s.push_back({"P1", at_hours(0.1), Join{}});
  s.push_back({"P2", at_hours(0.2), Join{}});
  s.push_back({"P3", at_hours(0.3), Join{}});

  s.push_back({"P1", at_hours(1), MarkReviewed{"phase:read-problem"}});
  s.push_back({"P1", at_hours(1), MarkReviewed{"phase:question"}});
  s.push_back({"P1", at_hours(1.1), Propose{ItemKind::answer, "Q", "Was stolen"}});
  s.push_back({"P1", at_hours(1.2), Propose{ItemKind::answer, "Q", "Was misplaced"}});
  s.push_back({"P1", at_hours(1.3), Propose{ItemKind::answer, "Q", "Was lost"}});

  s.push_back({"P2", at_hours(3), MarkReviewed{"phase:read-problem"}});
  s.push_back({"P2", at_hours(3), MarkReviewed{"phase:question"}});
  s.push_back({"P2", at_hours(3.1), Reformulate{"A1", kStolenText}});
  s.push_back({"P2", at_hours(3.2), Reformulate{"A2", kMisplacedText}});
  s.push_back({"P2", at_hours(3.3),
               Reject{"A3", "A lost canister is a misplaced one; this answer is covered by the other answers."}});
  s.push_back({"P2", at_hours(3.4), Propose{ItemKind::answer, "Q", kProjectText}});

  s.push_back({"P3", at_hours(5), MarkReviewed{"phase:read-problem"}});
  s.push_back({"P3", at_hours(5), MarkReviewed{"phase:question"}});
  s.push_back({"P3", at_hours(5.1), Vote{"A1", "A1.v2"}});
  s.push_back({"P3", at_hours(5.2), Vote{"A2", "A2.v2"}});
  s.push_back({"P3", at_hours(5.3), Vote{"A4", "A4.v1"}});
  s.push_back({"P3", at_hours(5.4), Reject{"A3", "Agree with P2: covered by the proposed answers."}});

  s.push_back({"P1", at_hours(9), Vote{"A1", "A1.v2"}});
  s.push_back({"P1", at_hours(9.1), Vote{"A2", "A2.v2"}});
  s.push_back({"P1", at_hours(9.2), Vote{"A4", "A4.v1"}});
  s.push_back({"P1", at_hours(9.3), Reject{"A3", "Agreed, the misplaced answer covers it."}});
  return s;
}

/// Informal arguments, evidence associations and credibility ballots that
/// follow hypothesis generation.
inline std::vector<ScriptedEvent> cesium_informal_script() {
  using namespace event;
  std::vector<ScriptedEvent> s;
  auto everyone = {"P1", "P2", "P3"};
  auto add = [&](const char* actor, double h, BrainstormEvent e) { s.push_back({actor, at_hours(h), std::move(e)}); };

  for (const char* p : everyone) add(p, 10, MarkReviewed{"phase:answers"});
  add("P1", 10.1, Propose{ItemKind::informal_argument, "A1", kTruckArgument});
  add("P2", 10.2, Propose{ItemKind::informal_argument, "A2",
                          "The canister was moved inside the warehouse and put back in the wrong place."});
  add("P3", 10.3, Propose{ItemKind::informal_argument, "A4",
                          "A project team took the canister for a job and did not record the check-out."});
  add("P2", 11.0, Vote{"R1", "R1.v1"});
  add("P3", 11.1, Vote{"R1", "R1.v1"});
  add("P1", 11.2, Vote{"R2", "R2.v1"});
  add("P3", 11.3, Vote{"R2", "R2.v1"});
  add("P1", 11.4, Vote{"R3", "R3.v1"});
  add("P2", 11.5, Vote{"R3", "R3.v1"});
  for (const char* p : everyone)
    for (const char* a : {"phase:arguments:A1", "phase:arguments:A2", "phase:arguments:A4"}) add(p, 12, MarkReviewed{a});

  add("P1", 13.0, AssociateEvidence{"R1", "E1", Polarity::favoring, "The newspaper reports the canister missing."});
  add("P1", 13.1, AssociateEvidence{"R1", "E3", Polarity::favoring, "The lock was forced."});
  add("P2", 13.2, AssociateEvidence{"R1", "E5", Polarity::favoring, "A truck was on site."});
  add("P2", 13.3, AssociateEvidence{"R2", "E3", Polarity::disfavoring, "A forced lock is not misplacement."});
  add("P3", 13.4, AssociateEvidence{"R3", "E4", Polarity::favoring, "No check-out record exists."});
  add("P3", 13.5, AssociateEvidence{"R3", "E2", Polarity::favoring, "The canister is registered to XYZ."});
  for (const char* p : everyone)
    for (const char* x : {"X1", "X2", "X3", "X4", "X5", "X6"}) {
      bool own = (std::string(p) == "P1" && (std::string(x) == "X1" || std::string(x) == "X2")) ||
                 (std::string(p) == "P2" && (std::string(x) == "X3" || std::string(x) == "X4")) ||
                 (std::string(p) == "P3" && (std::string(x) == "X5" || std::string(x) == "X6"));
      if (!own) add(p, 14, Vote{x, std::string(x) + ".v1"});
    }
  for (const char* p : everyone)
    for (const char* r : {"phase:evidence:R1", "phase:evidence:R2", "phase:evidence:R3"}) add(p, 14.5, MarkReviewed{r});

  using enum Label;
  add("P1", 15, AssessCredibility{"E1", likely});
  add("P2", 15, AssessCredibility{"E1", more_than_likely});
  add("P3", 15, AssessCredibility{"E1", barely_likely});
  for (const char* e : {"E2", "E3", "E4", "E5"}) {
    add("P1", 15.5, AssessCredibility{e, very_likely});
    add("P2", 15.5, AssessCredibility{e, more_than_likely});
    add("P3", 15.5, AssessCredibility{e, very_likely});
  }
  return s;
}

inline BrainstormState replay(const std::vector<ScriptedEvent>& script, BrainstormState state = {}) {
  for (const auto& e : script) state = apply_event(std::move(state), e.event, e.actor, e.at);
  return state;
}

inline std::vector<ScriptedEvent> cesium_full_script() {
  auto s = cesium_answers_script();
  auto more = cesium_informal_script();
  s.insert(s.end(), more.begin(), more.end());
  return s;
}

}  // namespace wigmore::testing
