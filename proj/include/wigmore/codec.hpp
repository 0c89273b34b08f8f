#pragma once

// JSON encodings of every persisted or transmitted value. Field names are
// documented in docs/format.md.

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "wigmore/analytics.hpp"
#include "wigmore/argument.hpp"
#include "wigmore/brainstorm.hpp"
#include "wigmore/report.hpp"
#include "wigmore/streams.hpp"
#include "wigmore/teams.hpp"

namespace wigmore {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kAnalysisSchema = "wigmore.analysis/1";

/// Tree, exported findings and report. Computed values and findings are
/// derivable and ignored on load.
struct AnalysisDocument {
  AnalysisTree tree;
  std::vector<Finding> findings;
  std::optional<Report> report;

  bool operator==(const AnalysisDocument&) const = default;
};

Json document_to_json(const AnalysisDocument& doc);
AnalysisDocument document_from_json(const Json& j);
/// Pretty-printed with a trailing newline.
std::string save_document(const AnalysisDocument& doc);
AnalysisDocument load_document(std::string_view text);

/// Parses text as JSON; throws Errc::parse with the parser's message.
Json parse_json(std::string_view text);

Json tree_to_json(const AnalysisTree& tree);
AnalysisTree tree_from_json(const Json& j);
Json computed_to_json(const ComputedValues& c);
Json findings_to_json(const std::vector<Finding>& findings);
Json report_to_json(const Report& r);
Report report_from_json(const Json& j);
Json checklist_to_json(const std::vector<ChecklistEntry>& list);
Json overrides_to_json(const Overrides& o);
Overrides overrides_from_json(const Json& j);

Json label_to_json(const std::optional<Label>& l);
std::optional<Label> label_from_json(const Json& j);

Json catalog_to_json(const CatalogEvidence& e);
CatalogEvidence catalog_from_json(const Json& j);
Json brainstorm_state_to_json(const BrainstormState& s);
Json task_to_json(const Task& t);
Json roster_to_json(const TeamRoster& r);
Json team_to_json(const Team& t);

Json brainstorm_payload(const BrainstormEvent& e);
BrainstormEvent brainstorm_event_from(std::string_view kind, const Json& payload);
Json roster_payload(const RosterEvent& e);
RosterEvent roster_event_from(std::string_view kind, const Json& payload);
Json analysis_payload(const AnalysisEvent& e);
AnalysisEvent analysis_event_from(std::string_view kind, const Json& payload);

struct Config {
  TeamPolicy team;
  AnalyticsConfig analytics;

  bool operator==(const Config&) const = default;
};

Json config_to_json(const Config& c);
/// Missing fields keep their defaults.
Config config_from_json(const Json& j);

}  // namespace wigmore
