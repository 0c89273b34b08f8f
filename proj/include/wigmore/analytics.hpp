#pragma once

// Analytics checks over an analysis tree: structural errors plus warnings for
// missing justifications, imprecise assessments and likely cognitive biases.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wigmore/argument.hpp"

namespace wigmore {

enum class Severity : std::uint8_t { error, warning };
std::string_view severity_name(Severity s);

namespace check_code {
inline constexpr std::string_view undeveloped_hypothesis = "undeveloped-hypothesis";
inline constexpr std::string_view unreachable_node = "unreachable-node";
inline constexpr std::string_view imprecise_assessment = "imprecise-assessment";
inline constexpr std::string_view confirmation_bias = "confirmation-bias";
inline constexpr std::string_view satisficing_bias = "satisficing-bias";
inline constexpr std::string_view absence_of_evidence = "absence-of-evidence";
inline constexpr std::string_view relevance_justification = "relevance-justification";
inline constexpr std::string_view credibility_justification = "credibility-justification";
}  // namespace check_code

struct Finding {
  Severity severity = Severity::warning;
  std::string code;
  std::string target;
  std::string message;

  /// "<severity> <code> <target>: <message>"
  std::string line() const;
  friend bool operator==(const Finding&, const Finding&) = default;
};

struct AnalyticsConfig {
  int min_developed_hypotheses = 2;
  int min_evidence_items = 2;

  friend bool operator==(const AnalyticsConfig&, const AnalyticsConfig&) = default;
};

std::vector<Finding> check_structure(const AnalysisTree& tree);
std::vector<Finding> check_imprecise_assessment(const AnalysisTree& tree);
std::vector<Finding> check_confirmation_bias(const AnalysisTree& tree);
std::vector<Finding> check_satisficing(const AnalysisTree& tree, const AnalyticsConfig& config = {});
std::vector<Finding> check_absence_of_evidence(const AnalysisTree& tree, const AnalyticsConfig& config = {});
std::vector<Finding> check_justifications(const AnalysisTree& tree);

/// All checks in a fixed order, each sorted by target id.
std::vector<Finding> run_checks(const AnalysisTree& tree, const AnalyticsConfig& config = {});

bool has_errors(const std::vector<Finding>& findings);

/// Number of top hypotheses with at least one argument or evidence link.
int developed_hypotheses(const AnalysisTree& tree);

}  // namespace wigmore
