#pragma once

// Formal argumentation trees: hypotheses decomposed into conjunctive arguments,
// evidence attached through links, assumptions, and bottom-up propagation of
// ordinal probabilities.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wigmore/error.hpp"
#include "wigmore/ids.hpp"
#include "wigmore/probability.hpp"

namespace wigmore {

enum class Polarity : std::uint8_t { favoring, disfavoring };
enum class SourceKind : std::uint8_t { human_source, intercepted_communication, documentary, other };
enum class NodeKind : std::uint8_t { top, intermediate, fact_leaf, assumption };

std::string_view polarity_name(Polarity p);
std::optional<Polarity> parse_polarity(std::string_view text);
std::string_view source_kind_name(SourceKind k);
std::optional<SourceKind> parse_source_kind(std::string_view text);
std::string_view node_kind_name(NodeKind k);
std::optional<NodeKind> parse_node_kind(std::string_view text);

struct EvidenceItem {
  std::string id;    // E<number>
  std::string name;  // short label, e.g. "Chemical expert"
  std::string body;
  std::optional<SourceKind> source_kind;
  std::optional<Label> credibility;
  std::string credibility_justification;

  friend bool operator==(const EvidenceItem&, const EvidenceItem&) = default;
};

struct HypothesisNode {
  std::string id;
  std::string statement;
  NodeKind kind = NodeKind::intermediate;
  std::vector<std::string> arguments;  // ArgumentNode ids
  std::optional<Label> assumed_probability;
  std::string assumption_justification;

  friend bool operator==(const HypothesisNode&, const HypothesisNode&) = default;
};

/// A conjunction of sub-hypotheses that together favor or disfavor its parent.
struct ArgumentNode {
  std::string id;
  Polarity polarity = Polarity::favoring;
  std::optional<Label> relevance;
  std::string relevance_justification;
  std::vector<std::string> sub_hypotheses;

  friend bool operator==(const ArgumentNode&, const ArgumentNode&) = default;
};

struct EvidenceLink {
  std::string id;
  std::string evidence_id;
  std::string hypothesis_id;
  Polarity polarity = Polarity::favoring;
  std::optional<Label> relevance;
  std::string relevance_justification;
  // Evidence about this very fact: relevance is fixed at certain.
  bool about_fact = false;

  friend bool operator==(const EvidenceLink&, const EvidenceLink&) = default;
};

struct NodeValue {
  BalancedProbability balance;
  DirectionalValue value;

  friend bool operator==(const NodeValue&, const NodeValue&) = default;
};

enum class UnsetInput : std::uint8_t { credibility, relevance, assumed_probability };
std::string_view unset_input_name(UnsetInput u);

/// An input that propagation treated as lacking support because it was never assessed.
struct PropagationWarning {
  std::string target;
  UnsetInput what;

  friend bool operator==(const PropagationWarning&, const PropagationWarning&) = default;
};

struct ComputedValues {
  std::map<std::string, NodeValue, NaturalLess> hypotheses;
  std::map<std::string, Label, NaturalLess> argument_forces;
  std::map<std::string, Label, NaturalLess> link_forces;
  std::vector<PropagationWarning> warnings;

  friend bool operator==(const ComputedValues&, const ComputedValues&) = default;
};

struct AnalysisTree {
  std::string question;
  std::vector<std::string> top_hypotheses;
  std::vector<EvidenceItem> evidence;
  std::vector<HypothesisNode> hypotheses;
  std::vector<ArgumentNode> arguments;
  std::vector<EvidenceLink> links;
  std::optional<ComputedValues> computed;

  const EvidenceItem* find_evidence(std::string_view id) const;
  const HypothesisNode* find_hypothesis(std::string_view id) const;
  const ArgumentNode* find_argument(std::string_view id) const;
  const EvidenceLink* find_link(std::string_view id) const;
  EvidenceItem* find_evidence(std::string_view id);
  HypothesisNode* find_hypothesis(std::string_view id);
  ArgumentNode* find_argument(std::string_view id);
  EvidenceLink* find_link(std::string_view id);

  bool is_top(std::string_view hypothesis_id) const;
  /// True when `id` names any node, link, evidence item, or the question target.
  bool resolves(std::string_view id) const;
  /// Links attached to a hypothesis, in document order.
  std::vector<const EvidenceLink*> links_of(std::string_view hypothesis_id) const;

  friend bool operator==(const AnalysisTree&, const AnalysisTree&) = default;
};

/// Target id used for findings that concern the analysis as a whole.
inline constexpr std::string_view kQuestionTarget = "question";

enum class StructuralDefect : std::uint8_t {
  cycle,
  dangling_reference,
  assumption_with_structure,
  empty_conjunction,
  duplicate_id,
  fact_leaf_without_fact,
  bad_evidence_id,
};
std::string_view structural_defect_code(StructuralDefect d);

struct StructuralError {
  StructuralDefect defect;
  std::string target;
  std::string message;

  friend bool operator==(const StructuralError&, const StructuralError&) = default;
};

/// Thrown by propagate when the tree is not well formed.
class StructuralErrors : public Error {
 public:
  explicit StructuralErrors(std::vector<StructuralError> errors);
  const std::vector<StructuralError>& errors() const noexcept { return errors_; }

 private:
  std::vector<StructuralError> errors_;
};

/// Empty iff the tree is well formed.
std::vector<StructuralError> validate(const AnalysisTree& tree);

// Structure edits. Each returns a new tree with computed values cleared.
AnalysisTree add_evidence(AnalysisTree tree, EvidenceItem item);
AnalysisTree add_top_hypothesis(AnalysisTree tree, HypothesisNode node);
AnalysisTree add_hypothesis(AnalysisTree tree, HypothesisNode node);
/// Attaches an argument under `parent_hypothesis`; its sub-hypotheses must already exist.
AnalysisTree add_argument(AnalysisTree tree, std::string_view parent_hypothesis, ArgumentNode node);
/// Links with about_fact set get relevance certain regardless of the supplied value.
AnalysisTree add_link(AnalysisTree tree, EvidenceLink link);

// Assessments.
AnalysisTree assess_credibility(AnalysisTree tree, std::string_view evidence_id, Label label,
                                std::string justification);
/// Target is a link id or an argument id.
AnalysisTree assess_relevance(AnalysisTree tree, std::string_view target_id, Label label,
                              std::string justification);
AnalysisTree set_assumption(AnalysisTree tree, std::string_view hypothesis_id, Label label,
                            std::string justification);
AnalysisTree set_source_kind(AnalysisTree tree, std::string_view evidence_id, SourceKind kind);

/// Bottom-up evaluation; throws StructuralErrors when validate() is non-empty.
ComputedValues evaluate(const AnalysisTree& tree);
AnalysisTree propagate(AnalysisTree tree);

/// Label overrides keyed by evidence id (credibility), link or argument id
/// (relevance), or assumption hypothesis id (assumed probability).
using Overrides = std::map<std::string, Label, NaturalLess>;

/// Evaluates under overrides without touching the stored tree.
ComputedValues what_if(const AnalysisTree& tree, const Overrides& overrides);

}  // namespace wigmore
