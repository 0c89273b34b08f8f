#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "wigmore/argument.hpp"
#include "wigmore/clock.hpp"
#include "wigmore/ids.hpp"
#include "wigmore/probability.hpp"

namespace wigmore {

enum class ItemKind { question, answer, informal_argument, evidence_association };

std::string_view item_kind_name(ItemKind k);
std::optional<ItemKind> parse_item_kind(std::string_view s);

struct ItemVersion {
  std::string version_id;  // "<item>.v<n>"
  std::string text;
  std::string author;
  Timestamp created_at{};
  std::set<std::string> votes;

  bool operator==(const ItemVersion&) const = default;
};

struct Rejection {
  std::string participant;
  std::string justification;

  bool operator==(const Rejection&) const = default;
};

struct BrainstormItem {
  std::string id;
  ItemKind kind = ItemKind::answer;
  std::string parent_id;
  std::string proposer;
  // Evidence associations only.
  std::string evidence_id;
  Polarity polarity = Polarity::favoring;

  std::vector<ItemVersion> versions;
  std::vector<Rejection> rejected_by;
  bool deleted = false;
  int next_version = 1;

  const ItemVersion* find_version(std::string_view version_id) const;
  std::size_t vote_count() const;
  bool rejected_by_participant(std::string_view p) const;

  bool operator==(const BrainstormItem&) const = default;
};

/// Evidence available to the team, as distributed with the problem.
struct CatalogEvidence {
  std::string id;
  std::string name;
  std::string body;
  std::optional<SourceKind> source_kind;

  bool operator==(const CatalogEvidence&) const = default;
};

struct CredibilityBallot {
  std::string evidence_id;
  std::map<std::string, Label> assessments;

  Label team_label() const;

  bool operator==(const CredibilityBallot&) const = default;
};

Label aggregate_credibility(const CredibilityBallot& ballot);

namespace phase {
inline constexpr std::string_view read_problem = "read-problem";
inline constexpr std::string_view question = "question";
inline constexpr std::string_view answers = "answers";
inline constexpr std::string_view arguments = "arguments";  // "arguments:<answer id>"
inline constexpr std::string_view evidence = "evidence";    // "evidence:<argument id>"
}  // namespace phase

inline constexpr std::string_view kQuestionItem = "Q";

struct BrainstormState {
  std::string problem_id;
  std::string title;
  std::string description;
  std::vector<CatalogEvidence> evidence;
  std::vector<std::string> members;
  std::map<std::string, BrainstormItem, NaturalLess> items;
  std::set<std::pair<std::string, std::string>> incomplete;  // (participant, item id)
  std::set<std::pair<std::string, std::string>> phases;      // (participant, marker)
  std::map<std::string, CredibilityBallot, NaturalLess> ballots;
  std::int64_t sequence = 0;

  bool created() const { return !problem_id.empty(); }
  bool is_member(std::string_view p) const;
  const BrainstormItem* find_item(std::string_view id) const;
  const BrainstormItem* find_live_item(std::string_view id) const;
  const CatalogEvidence* find_evidence(std::string_view id) const;
  bool flagged(std::string_view participant, std::string_view item) const;
  bool has_phase(std::string_view participant, std::string_view marker) const;
  /// Live items of one kind under a parent ("" matches any parent).
  std::vector<const BrainstormItem*> live_items(ItemKind kind, std::string_view parent = {}) const;

  bool operator==(const BrainstormState&) const = default;
};

namespace event {
struct Create {
  std::string problem_id;
  std::string title;
  std::string description;
  std::string question;
  std::vector<CatalogEvidence> evidence;
  bool operator==(const Create&) const = default;
};
struct Join {
  bool operator==(const Join&) const = default;
};
struct Propose {
  ItemKind kind = ItemKind::answer;
  std::string parent_id;
  std::string text;
  bool operator==(const Propose&) const = default;
};
struct Reformulate {
  std::string item_id;
  std::string text;
  bool operator==(const Reformulate&) const = default;
};
struct Vote {
  std::string item_id;
  std::string version_id;
  bool operator==(const Vote&) const = default;
};
struct Reject {
  std::string item_id;
  std::string justification;
  bool operator==(const Reject&) const = default;
};
struct AssociateEvidence {
  std::string argument_id;
  std::string evidence_id;
  Polarity polarity = Polarity::favoring;
  std::string note;
  bool operator==(const AssociateEvidence&) const = default;
};
struct AssessCredibility {
  std::string evidence_id;
  Label label = Label::lacking_support;
  bool operator==(const AssessCredibility&) const = default;
};
/// Target is an item id (clears the actor's flag) or "phase:<marker>".
struct MarkReviewed {
  std::string target;
  bool operator==(const MarkReviewed&) const = default;
};
}  // namespace event

using BrainstormEvent = std::variant<event::Create, event::Join, event::Propose, event::Reformulate, event::Vote,
                                     event::Reject, event::AssociateEvidence, event::AssessCredibility,
                                     event::MarkReviewed>;

std::string_view event_kind(const BrainstormEvent& e);

/// Id the next Propose/AssociateEvidence of this kind will receive.
std::string next_item_id(const BrainstormState& state, ItemKind kind);

/// Pure transition. Pruning runs at the end of every event.
BrainstormState apply_event(BrainstormState state, const BrainstormEvent& e, std::string_view actor, Timestamp now);

BrainstormState prune_zero_vote_versions(BrainstormState state);

std::optional<ItemVersion> team_version(const BrainstormItem& item);

enum class TaskKind { read_problem, review, question, answers, arguments, evidence, credibility, done };

std::string_view task_kind_name(TaskKind k);

struct Task {
  TaskKind kind = TaskKind::done;
  std::string target;  // item, answer, argument or evidence id
  std::string description;

  bool operator==(const Task&) const = default;
};

Task next_task(const BrainstormState& state, std::string_view participant);

/// Builds an analysis skeleton from the team versions: one top hypothesis per
/// live answer, one favoring argument per informal argument, and evidence
/// links from the associations. Credibility is prefilled from the ballots.
AnalysisTree import_informal(const BrainstormState& state, std::string_view participant);

}  // namespace wigmore
