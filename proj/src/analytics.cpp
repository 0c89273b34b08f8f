#include "wigmore/analytics.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace wigmore {

namespace {

constexpr std::string_view kConfirmationMessage =
    "This hypothesis has only favoring arguments and each argument has only favoring evidence. "
    "It seems that you may be biased toward confirming your hypothesis. Carefully re-analyze the "
    "hypothesis, using all the relevant evidence.";

void sort_by_target(std::vector<Finding>& findings) {
  std::stable_sort(findings.begin(), findings.end(),
                   [](const Finding& a, const Finding& b) { return natural_less(a.target, b.target); });
}

Finding warning(std::string_view code, std::string target, std::string message) {
  return {Severity::warning, std::string(code), std::move(target), std::move(message)};
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

// Arguments and links in the subtree below a hypothesis. Stops at revisits so
// it is safe on malformed (cyclic) input.
struct Subtree {
  std::vector<const ArgumentNode*> arguments;
  std::vector<const EvidenceLink*> links;
};

Subtree collect_subtree(const AnalysisTree& tree, const std::string& root) {
  Subtree out;
  std::set<std::string> seen;
  std::function<void(const std::string&)> walk = [&](const std::string& hid) {
    if (!seen.insert(hid).second) return;
    const auto* h = tree.find_hypothesis(hid);
    if (!h) return;
    for (const auto* l : tree.links_of(hid)) out.links.push_back(l);
    for (const auto& aid : h->arguments) {
      const auto* a = tree.find_argument(aid);
      if (!a) continue;
      out.arguments.push_back(a);
      for (const auto& s : a->sub_hypotheses) walk(s);
    }
  };
  walk(root);
  return out;
}

bool is_leaf(const HypothesisNode& h) { return h.kind != NodeKind::assumption && h.arguments.empty(); }

}  // namespace

std::string_view severity_name(Severity s) { return s == Severity::error ? "error" : "warning"; }

std::string Finding::line() const {
  return std::string(severity_name(severity)) + " " + code + " " + target + ": " + message;
}

bool has_errors(const std::vector<Finding>& findings) {
  return std::any_of(findings.begin(), findings.end(),
                     [](const Finding& f) { return f.severity == Severity::error; });
}

int developed_hypotheses(const AnalysisTree& tree) {
  int n = 0;
  for (const auto& top : tree.top_hypotheses) {
    const auto* h = tree.find_hypothesis(top);
    if (h && (!h->arguments.empty() || !tree.links_of(top).empty())) ++n;
  }
  return n;
}

std::vector<Finding> check_structure(const AnalysisTree& tree) {
  std::vector<Finding> out;
  for (const auto& e : validate(tree))
    out.push_back({Severity::error, std::string(structural_defect_code(e.defect)), e.target, e.message});

  for (const auto& top : tree.top_hypotheses) {
    const auto* h = tree.find_hypothesis(top);
    if (h && h->kind != NodeKind::assumption && h->arguments.empty() && tree.links_of(top).empty())
      out.push_back({Severity::error, std::string(check_code::undeveloped_hypothesis), top,
                     "hypothesis " + quoted(h->statement) + " has no arguments, evidence, or assumption"});
  }

  std::set<std::string> reachable;
  for (const auto& top : tree.top_hypotheses) {
    reachable.insert(top);
    auto sub = collect_subtree(tree, top);
    for (const auto* a : sub.arguments) {
      reachable.insert(a->id);
      for (const auto& s : a->sub_hypotheses) reachable.insert(s);
    }
    for (const auto* l : sub.links) reachable.insert(l->id);
  }
  auto unreachable = [&](const std::string& id, std::string_view what) {
    if (!reachable.count(id))
      out.push_back({Severity::error, std::string(check_code::unreachable_node), id,
                     std::string(what) + " " + id + " is not reachable from any top hypothesis"});
  };
  for (const auto& h : tree.hypotheses) unreachable(h.id, "hypothesis");
  for (const auto& a : tree.arguments) unreachable(a.id, "argument");
  for (const auto& l : tree.links) unreachable(l.id, "evidence link");

  sort_by_target(out);
  return out;
}

std::vector<Finding> check_imprecise_assessment(const AnalysisTree& tree) {
  std::vector<Finding> out;
  if (!validate(tree).empty()) return out;
  const ComputedValues computed = evaluate(tree);
  for (const auto& top : tree.top_hypotheses) {
    const auto& v = computed.hypotheses.at(top);
    if (v.value.strength != Label::lacking_support) continue;
    auto sub = collect_subtree(tree, top);
    std::set<std::string> below{top};
    for (const auto* a : sub.arguments) {
      below.insert(a->id);
      for (const auto& s : a->sub_hypotheses) below.insert(s);
    }
    for (const auto* l : sub.links) {
      below.insert(l->id);
      below.insert(l->evidence_id);
    }
    auto unset = std::count_if(computed.warnings.begin(), computed.warnings.end(),
                               [&](const PropagationWarning& w) { return below.count(w.target) > 0; });
    std::string message = quoted(tree.find_hypothesis(top)->statement) + " is assessed as " +
                          label_phrase(Label::lacking_support) + ", the widest interval on the scale";
    if (unset > 0) message += "; " + std::to_string(unset) + " input(s) below it are not assessed";
    out.push_back(warning(check_code::imprecise_assessment, top, message + "."));
  }
  sort_by_target(out);
  return out;
}

std::vector<Finding> check_confirmation_bias(const AnalysisTree& tree) {
  std::vector<Finding> out;
  for (const auto& top : tree.top_hypotheses) {
    const auto* h = tree.find_hypothesis(top);
    if (!h || h->arguments.empty()) continue;
    auto sub = collect_subtree(tree, top);
    bool favoring_only =
        std::all_of(sub.arguments.begin(), sub.arguments.end(),
                    [](const ArgumentNode* a) { return a->polarity == Polarity::favoring; }) &&
        std::all_of(sub.links.begin(), sub.links.end(),
                    [](const EvidenceLink* l) { return l->polarity == Polarity::favoring; });
    if (favoring_only) out.push_back(warning(check_code::confirmation_bias, top, std::string(kConfirmationMessage)));
  }
  sort_by_target(out);
  return out;
}

std::vector<Finding> check_satisficing(const AnalysisTree& tree, const AnalyticsConfig& config) {
  std::vector<Finding> out;
  int developed = developed_hypotheses(tree);
  if (developed < config.min_developed_hypotheses) {
    out.push_back(warning(
        check_code::satisficing_bias, std::string(kQuestionTarget),
        "Only " + std::to_string(developed) + " of " + std::to_string(tree.top_hypotheses.size()) +
            " hypotheses are developed. You may be choosing the first hypothesis that appears good "
            "enough; develop the competing alternatives before concluding."));
  }
  return out;
}

std::vector<Finding> check_absence_of_evidence(const AnalysisTree& tree, const AnalyticsConfig& config) {
  std::vector<Finding> out;
  for (const auto& h : tree.hypotheses) {
    if (is_leaf(h)) {
      std::set<std::string> items;
      for (const auto* l : tree.links_of(h.id)) items.insert(l->evidence_id);
      if (static_cast<int>(items.size()) < config.min_evidence_items)
        out.push_back(warning(check_code::absence_of_evidence, h.id,
                              quoted(h.statement) + " is assessed from " + std::to_string(items.size()) +
                                  " item(s) of evidence. Consider how complete the available evidence is "
                                  "and what is missing."));
    } else if (h.kind == NodeKind::assumption && h.assumption_justification.empty()) {
      out.push_back(warning(check_code::absence_of_evidence, h.id,
                            "Assumption " + quoted(h.statement) +
                                " has no justification. State why it is taken to be true and what "
                                "information could corroborate or contradict it."));
    }
  }
  sort_by_target(out);
  return out;
}

namespace {

std::vector<Finding> relevance_justifications(const AnalysisTree& tree) {
  std::vector<Finding> out;
  for (const auto& l : tree.links) {
    if (l.about_fact || !l.relevance || *l.relevance == Label::certain || !l.relevance_justification.empty())
      continue;
    const auto* e = tree.find_evidence(l.evidence_id);
    std::string name = e ? e->id + " " + e->name : l.evidence_id;
    out.push_back(warning(check_code::relevance_justification, l.id,
                          "Relevance lacking justification: " + name + " (" + label_phrase(*l.relevance) +
                              ") for " + l.hypothesis_id));
  }
  for (const auto& a : tree.arguments) {
    if (!a.relevance || *a.relevance == Label::certain || !a.relevance_justification.empty()) continue;
    out.push_back(warning(check_code::relevance_justification, a.id,
                          "Relevance lacking justification: argument " + a.id + " (" +
                              label_phrase(*a.relevance) + ")"));
  }
  sort_by_target(out);
  return out;
}

std::vector<Finding> credibility_justifications(const AnalysisTree& tree) {
  std::vector<Finding> out;
  for (const auto& e : tree.evidence) {
    if (!e.credibility || !e.credibility_justification.empty()) continue;
    out.push_back(warning(check_code::credibility_justification, e.id,
                          "Credibility lacking justification: " + e.id + " " + e.name + " (" +
                              label_phrase(*e.credibility) + ")"));
  }
  sort_by_target(out);
  return out;
}

void append(std::vector<Finding>& to, std::vector<Finding> from) {
  to.insert(to.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
}

}  // namespace

std::vector<Finding> check_justifications(const AnalysisTree& tree) {
  auto out = relevance_justifications(tree);
  append(out, credibility_justifications(tree));
  return out;
}

std::vector<Finding> run_checks(const AnalysisTree& tree, const AnalyticsConfig& config) {
  std::vector<Finding> out = check_structure(tree);
  append(out, check_imprecise_assessment(tree));
  append(out, check_confirmation_bias(tree));
  append(out, check_satisficing(tree, config));
  append(out, check_absence_of_evidence(tree, config));
  append(out, check_justifications(tree));
  return out;
}

}  // namespace wigmore
