#pragma once

// State machines of the roster and per-participant analysis streams. The
// brainstorm stream uses apply_event from brainstorm.hpp.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wigmore/argument.hpp"
#include "wigmore/clock.hpp"
#include "wigmore/report.hpp"
#include "wigmore/teams.hpp"

namespace wigmore {

namespace roster_event {
/// Optional first event; fixes the policy and parameters for the stream's lifetime.
struct Configure {
  RosterPolicy policy = RosterPolicy::ad_hoc;
  TeamPolicy params;
  std::vector<std::string> participants;  // random_fixed only
  std::uint64_t seed = 0;

  bool operator==(const Configure&) const = default;
};
/// The actor is the joining participant.
struct Join {
  std::string token;

  bool operator==(const Join&) const = default;
};
struct Tick {
  bool operator==(const Tick&) const = default;
};
}  // namespace roster_event

using RosterEvent = std::variant<roster_event::Configure, roster_event::Join, roster_event::Tick>;

std::string_view roster_event_kind(const RosterEvent& e);

struct RosterState {
  TeamRoster roster;
  bool configured = false;
  std::map<std::string, std::string> tokens;  // participant -> token
  std::int64_t sequence = 0;

  /// Participant holding `token`, if any.
  std::optional<std::string> participant_of(std::string_view token) const;

  bool operator==(const RosterState&) const = default;
};

RosterState apply_roster_event(RosterState state, const RosterEvent& e, std::string_view actor, Timestamp now);

namespace analysis_event {
/// Replaces the tree with a snapshot, normally the import of the team's informal analysis.
struct Import {
  AnalysisTree tree;
  bool operator==(const Import&) const = default;
};
struct AddEvidence {
  EvidenceItem item;
  bool operator==(const AddEvidence&) const = default;
};
struct AddHypothesis {
  HypothesisNode node;
  bool top = false;
  bool operator==(const AddHypothesis&) const = default;
};
struct AddArgument {
  std::string parent_id;
  ArgumentNode node;
  bool operator==(const AddArgument&) const = default;
};
struct AddLink {
  EvidenceLink link;
  bool operator==(const AddLink&) const = default;
};
struct AssessCredibility {
  std::string evidence_id;
  Label label = Label::lacking_support;
  std::string justification;
  bool operator==(const AssessCredibility&) const = default;
};
/// Target is a link or argument id.
struct AssessRelevance {
  std::string target;
  Label label = Label::lacking_support;
  std::string justification;
  bool operator==(const AssessRelevance&) const = default;
};
struct SetAssumption {
  std::string hypothesis_id;
  Label label = Label::lacking_support;
  std::string justification;
  bool operator==(const SetAssumption&) const = default;
};
struct SetSourceKind {
  std::string evidence_id;
  SourceKind kind = SourceKind::other;
  bool operator==(const SetSourceKind&) const = default;
};
/// Generates the report, or regenerates it keeping edited prose.
struct GenerateReport {
  bool operator==(const GenerateReport&) const = default;
};
struct EditSection {
  std::string section_id;
  std::string text;
  bool operator==(const EditSection&) const = default;
};
}  // namespace analysis_event

using AnalysisEvent =
    std::variant<analysis_event::Import, analysis_event::AddEvidence, analysis_event::AddHypothesis,
                 analysis_event::AddArgument, analysis_event::AddLink, analysis_event::AssessCredibility,
                 analysis_event::AssessRelevance, analysis_event::SetAssumption, analysis_event::SetSourceKind,
                 analysis_event::GenerateReport, analysis_event::EditSection>;

std::string_view analysis_event_kind(const AnalysisEvent& e);

struct AnalysisState {
  std::string owner;
  AnalysisTree tree;  // never carries computed values
  std::optional<Report> report;
  std::int64_t sequence = 0;

  bool operator==(const AnalysisState&) const = default;
};

/// Only the owner may write. Throws unauthorized for anyone else.
AnalysisState apply_analysis_event(AnalysisState state, const AnalysisEvent& e, std::string_view actor,
                                   Timestamp now);

}  // namespace wigmore
