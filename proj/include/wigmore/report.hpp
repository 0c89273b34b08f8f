#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wigmore/argument.hpp"
#include "wigmore/clock.hpp"

namespace wigmore {

/// Section text marks computed probability phrases as locked tokens:
/// "The canister [[likely (55-70%)]] was stolen." Rendering drops the brackets.
inline constexpr std::string_view kTokenOpen = "[[";
inline constexpr std::string_view kTokenClose = "]]";

/// Locked tokens in order of appearance. Throws locked_token on unbalanced markers.
std::vector<std::string> locked_tokens(std::string_view text);
std::string strip_tokens(std::string_view text);

struct HeadlineEntry {
  std::string hypothesis_id;
  DirectionalValue value;
  std::string phrase;

  bool operator==(const HeadlineEntry&) const = default;
};

enum class SectionKind { summary, argument, direct_evidence, assumptions };

std::string_view section_kind_name(SectionKind k);
std::optional<SectionKind> parse_section_kind(std::string_view s);

struct ReportSection {
  std::string id;  // "summary", "argument:A1", "direct:H1", "assumptions"
  SectionKind kind = SectionKind::summary;
  std::string title;
  std::string text;
  std::string fragment;                // appendix anchor of the argumentation fragment, if any
  std::vector<std::string> evidence;   // cited evidence ids
  bool edited = false;

  bool operator==(const ReportSection&) const = default;
};

enum class AppendixKind { fragment, evidence };

struct AppendixEntry {
  std::string anchor;  // "fragment-A1", "evidence-E1"
  AppendixKind kind = AppendixKind::evidence;
  std::string title;
  std::vector<std::string> lines;

  bool operator==(const AppendixEntry&) const = default;
};

struct ReportEdit {
  std::string section_id;
  std::string author;
  Timestamp at{};
  std::string previous_text;
  std::string new_text;

  bool operator==(const ReportEdit&) const = default;
};

struct Report {
  std::string question;
  std::vector<HeadlineEntry> ranking;  // tops by descending signed strength
  std::string headline;                // plain leading sentence
  std::string alternatives;            // plain sentence, empty with one top
  std::vector<ReportSection> sections;
  std::vector<AppendixEntry> appendix;
  std::vector<ReportEdit> history;

  const ReportSection* find_section(std::string_view id) const;
  const AppendixEntry* find_anchor(std::string_view anchor) const;

  bool operator==(const Report&) const = default;
};

/// Inserts the phrase before the first auxiliary verb of the statement, or
/// falls back to "We assess it is <phrase> that <statement>."
std::string leading_sentence(std::string_view statement, std::string_view phrase);

/// Requires tree.computed (not_ready otherwise) and a well-formed tree.
Report generate_report(const AnalysisTree& tree);

/// Regenerates from the tree and keeps the prose of edited sections that
/// still exist, with their locked tokens refreshed.
Report regenerate_report(const Report& previous, const AnalysisTree& tree);

Report edit_section(Report report, std::string_view section_id, std::string new_text, std::string_view author,
                    Timestamp at);

enum class RenderFormat { plain, markup, print };

std::string_view render_format_name(RenderFormat f);
std::optional<RenderFormat> parse_render_format(std::string_view s);

std::string render(const Report& report, RenderFormat format);

enum class ChecklistStatus { pass, attention };

struct ChecklistEntry {
  int criterion = 0;
  std::string title;
  ChecklistStatus status = ChecklistStatus::attention;
  std::string detail;

  bool operator==(const ChecklistEntry&) const = default;
};

std::string_view checklist_status_name(ChecklistStatus s);

std::vector<ChecklistEntry> quality_checklist(const AnalysisTree& tree, const Report& report);

}  // namespace wigmore
