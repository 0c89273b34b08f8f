#include "wigmore/argument.hpp"

#include <algorithm>
#include <functional>
#include <regex>
#include <set>
#include <unordered_map>

namespace wigmore {

namespace {

const std::regex kEvidenceIdPattern("E[0-9]+");

template <typename Vec>
auto* find_by_id(Vec& v, std::string_view id) {
  auto it = std::find_if(v.begin(), v.end(), [&](const auto& x) { return x.id == id; });
  return it == v.end() ? nullptr : &*it;
}

[[noreturn]] void unknown(std::string_view what, std::string_view id) {
  throw Error(Errc::unknown_id, "unknown " + std::string(what) + " id: " + std::string(id));
}

std::string join_messages(const std::vector<StructuralError>& errors) {
  std::string out = "analysis tree is not well formed:";
  for (const auto& e : errors) out += "\n  " + e.message;
  return out;
}

void require_fresh_id(const AnalysisTree& tree, const std::string& id) {
  if (id.empty()) throw Error(Errc::domain, "empty id");
  if (id == kQuestionTarget || tree.resolves(id))
    throw Error(Errc::precondition, "id already in use: " + id);
}

}  // namespace

std::string_view polarity_name(Polarity p) {
  return p == Polarity::favoring ? "favoring" : "disfavoring";
}

std::optional<Polarity> parse_polarity(std::string_view text) {
  if (text == "favoring") return Polarity::favoring;
  if (text == "disfavoring") return Polarity::disfavoring;
  return std::nullopt;
}

std::string_view source_kind_name(SourceKind k) {
  switch (k) {
    case SourceKind::human_source: return "human_source";
    case SourceKind::intercepted_communication: return "intercepted_communication";
    case SourceKind::documentary: return "documentary";
    case SourceKind::other: return "other";
  }
  return "other";
}

std::optional<SourceKind> parse_source_kind(std::string_view text) {
  for (auto k : {SourceKind::human_source, SourceKind::intercepted_communication,
                 SourceKind::documentary, SourceKind::other})
    if (text == source_kind_name(k)) return k;
  return std::nullopt;
}

std::string_view node_kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::top: return "top";
    case NodeKind::intermediate: return "intermediate";
    case NodeKind::fact_leaf: return "fact_leaf";
    case NodeKind::assumption: return "assumption";
  }
  return "intermediate";
}

std::optional<NodeKind> parse_node_kind(std::string_view text) {
  for (auto k : {NodeKind::top, NodeKind::intermediate, NodeKind::fact_leaf, NodeKind::assumption})
    if (text == node_kind_name(k)) return k;
  return std::nullopt;
}

std::string_view unset_input_name(UnsetInput u) {
  switch (u) {
    case UnsetInput::credibility: return "credibility";
    case UnsetInput::relevance: return "relevance";
    case UnsetInput::assumed_probability: return "assumed_probability";
  }
  return "relevance";
}

std::string_view structural_defect_code(StructuralDefect d) {
  switch (d) {
    case StructuralDefect::cycle: return "cycle";
    case StructuralDefect::dangling_reference: return "dangling-reference";
    case StructuralDefect::assumption_with_structure: return "assumption-with-structure";
    case StructuralDefect::empty_conjunction: return "empty-conjunction";
    case StructuralDefect::duplicate_id: return "duplicate-id";
    case StructuralDefect::fact_leaf_without_fact: return "fact-leaf-without-fact";
    case StructuralDefect::bad_evidence_id: return "bad-evidence-id";
  }
  return "structure";
}

StructuralErrors::StructuralErrors(std::vector<StructuralError> errors)
    : Error(Errc::structural, join_messages(errors)), errors_(std::move(errors)) {}

const EvidenceItem* AnalysisTree::find_evidence(std::string_view id) const { return find_by_id(evidence, id); }
const HypothesisNode* AnalysisTree::find_hypothesis(std::string_view id) const { return find_by_id(hypotheses, id); }
const ArgumentNode* AnalysisTree::find_argument(std::string_view id) const { return find_by_id(arguments, id); }
const EvidenceLink* AnalysisTree::find_link(std::string_view id) const { return find_by_id(links, id); }
EvidenceItem* AnalysisTree::find_evidence(std::string_view id) { return find_by_id(evidence, id); }
HypothesisNode* AnalysisTree::find_hypothesis(std::string_view id) { return find_by_id(hypotheses, id); }
ArgumentNode* AnalysisTree::find_argument(std::string_view id) { return find_by_id(arguments, id); }
EvidenceLink* AnalysisTree::find_link(std::string_view id) { return find_by_id(links, id); }

bool AnalysisTree::is_top(std::string_view hypothesis_id) const {
  return std::find(top_hypotheses.begin(), top_hypotheses.end(), hypothesis_id) != top_hypotheses.end();
}

bool AnalysisTree::resolves(std::string_view id) const {
  return id == kQuestionTarget || find_evidence(id) || find_hypothesis(id) || find_argument(id) ||
         find_link(id);
}

std::vector<const EvidenceLink*> AnalysisTree::links_of(std::string_view hypothesis_id) const {
  std::vector<const EvidenceLink*> out;
  for (const auto& l : links)
    if (l.hypothesis_id == hypothesis_id) out.push_back(&l);
  return out;
}

std::vector<StructuralError> validate(const AnalysisTree& tree) {
  std::vector<StructuralError> errors;
  auto report = [&](StructuralDefect d, const std::string& target, std::string message) {
    errors.push_back({d, target, std::move(message)});
  };

  std::set<std::string> seen;
  auto check_dup = [&](const std::string& id, std::string_view what) {
    if (!seen.insert(id).second)
      report(StructuralDefect::duplicate_id, id, "duplicate " + std::string(what) + " id " + id);
  };
  for (const auto& e : tree.evidence) {
    check_dup(e.id, "evidence");
    if (!std::regex_match(e.id, kEvidenceIdPattern))
      report(StructuralDefect::bad_evidence_id, e.id, "evidence id " + e.id + " does not match E<number>");
  }
  for (const auto& h : tree.hypotheses) check_dup(h.id, "hypothesis");
  for (const auto& a : tree.arguments) check_dup(a.id, "argument");
  for (const auto& l : tree.links) check_dup(l.id, "link");

  for (const auto& top : tree.top_hypotheses)
    if (!tree.find_hypothesis(top))
      report(StructuralDefect::dangling_reference, std::string(kQuestionTarget),
             "dangling top hypothesis id " + top);

  for (const auto& h : tree.hypotheses) {
    for (const auto& a : h.arguments)
      if (!tree.find_argument(a))
        report(StructuralDefect::dangling_reference, h.id, "dangling argument id " + a + " under " + h.id);
    auto links = tree.links_of(h.id);
    if (h.kind == NodeKind::assumption && (!h.arguments.empty() || !links.empty()))
      report(StructuralDefect::assumption_with_structure, h.id,
             "assumption " + h.id + " has arguments or evidence below it");
    if (h.kind == NodeKind::fact_leaf &&
        std::none_of(links.begin(), links.end(), [](const EvidenceLink* l) { return l->about_fact; }))
      report(StructuralDefect::fact_leaf_without_fact, h.id,
             "fact-leaf " + h.id + " has no evidence about that fact");
  }
  for (const auto& a : tree.arguments) {
    if (a.sub_hypotheses.empty())
      report(StructuralDefect::empty_conjunction, a.id, "argument " + a.id + " has no sub-hypotheses");
    for (const auto& s : a.sub_hypotheses)
      if (!tree.find_hypothesis(s))
        report(StructuralDefect::dangling_reference, a.id, "dangling hypothesis id " + s + " under " + a.id);
  }
  for (const auto& l : tree.links) {
    if (!tree.find_evidence(l.evidence_id))
      report(StructuralDefect::dangling_reference, l.id, "dangling evidence id " + l.evidence_id);
    if (!tree.find_hypothesis(l.hypothesis_id))
      report(StructuralDefect::dangling_reference, l.id, "dangling hypothesis id " + l.hypothesis_id);
  }

  // Cycle detection over hypothesis -> argument -> sub-hypothesis edges.
  enum class Mark { white, grey, black };
  std::unordered_map<std::string, Mark> mark;
  std::set<std::string> cycle_roots;
  std::function<void(const std::string&)> visit = [&](const std::string& hid) {
    auto& m = mark[hid];
    if (m == Mark::black) return;
    if (m == Mark::grey) {
      cycle_roots.insert(hid);
      return;
    }
    m = Mark::grey;
    if (const auto* h = tree.find_hypothesis(hid)) {
      for (const auto& aid : h->arguments)
        if (const auto* a = tree.find_argument(aid))
          for (const auto& s : a->sub_hypotheses)
            if (tree.find_hypothesis(s)) visit(s);
    }
    mark[hid] = Mark::black;
  };
  for (const auto& top : tree.top_hypotheses)
    if (tree.find_hypothesis(top)) visit(top);
  for (const auto& h : tree.hypotheses) visit(h.id);
  for (const auto& root : cycle_roots)
    report(StructuralDefect::cycle, root, "cycle at " + root);

  return errors;
}

AnalysisTree add_evidence(AnalysisTree tree, EvidenceItem item) {
  require_fresh_id(tree, item.id);
  tree.evidence.push_back(std::move(item));
  tree.computed.reset();
  return tree;
}

AnalysisTree add_top_hypothesis(AnalysisTree tree, HypothesisNode node) {
  require_fresh_id(tree, node.id);
  tree.top_hypotheses.push_back(node.id);
  tree.hypotheses.push_back(std::move(node));
  tree.computed.reset();
  return tree;
}

AnalysisTree add_hypothesis(AnalysisTree tree, HypothesisNode node) {
  require_fresh_id(tree, node.id);
  tree.hypotheses.push_back(std::move(node));
  tree.computed.reset();
  return tree;
}

AnalysisTree add_argument(AnalysisTree tree, std::string_view parent_hypothesis, ArgumentNode node) {
  require_fresh_id(tree, node.id);
  auto* parent = tree.find_hypothesis(parent_hypothesis);
  if (!parent) unknown("hypothesis", parent_hypothesis);
  if (parent->kind == NodeKind::assumption)
    throw Error(Errc::precondition, "cannot decompose assumption " + parent->id);
  if (node.sub_hypotheses.empty())
    throw Error(Errc::precondition, "argument " + node.id + " needs at least one sub-hypothesis");
  for (const auto& s : node.sub_hypotheses)
    if (!tree.find_hypothesis(s)) unknown("hypothesis", s);
  parent->arguments.push_back(node.id);
  tree.arguments.push_back(std::move(node));
  tree.computed.reset();
  return tree;
}

AnalysisTree add_link(AnalysisTree tree, EvidenceLink link) {
  require_fresh_id(tree, link.id);
  if (!tree.find_evidence(link.evidence_id)) unknown("evidence", link.evidence_id);
  auto* h = tree.find_hypothesis(link.hypothesis_id);
  if (!h) unknown("hypothesis", link.hypothesis_id);
  if (h->kind == NodeKind::assumption)
    throw Error(Errc::precondition, "cannot attach evidence to assumption " + h->id);
  if (link.about_fact) {
    link.relevance = Label::certain;
    link.relevance_justification.clear();
  }
  tree.links.push_back(std::move(link));
  tree.computed.reset();
  return tree;
}

AnalysisTree assess_credibility(AnalysisTree tree, std::string_view evidence_id, Label label,
                                std::string justification) {
  auto* e = tree.find_evidence(evidence_id);
  if (!e) unknown("evidence", evidence_id);
  e->credibility = label;
  e->credibility_justification = std::move(justification);
  tree.computed.reset();
  return tree;
}

AnalysisTree assess_relevance(AnalysisTree tree, std::string_view target_id, Label label,
                              std::string justification) {
  if (auto* l = tree.find_link(target_id)) {
    if (l->about_fact)
      throw Error(Errc::precondition, "relevance of " + l->id +
                                          " is certain: the evidence is about this very fact");
    l->relevance = label;
    l->relevance_justification = std::move(justification);
  } else if (auto* a = tree.find_argument(target_id)) {
    a->relevance = label;
    a->relevance_justification = std::move(justification);
  } else {
    unknown("link or argument", target_id);
  }
  tree.computed.reset();
  return tree;
}

AnalysisTree set_assumption(AnalysisTree tree, std::string_view hypothesis_id, Label label,
                            std::string justification) {
  auto* h = tree.find_hypothesis(hypothesis_id);
  if (!h) unknown("hypothesis", hypothesis_id);
  if (!h->arguments.empty() || !tree.links_of(h->id).empty())
    throw Error(Errc::precondition,
                "hypothesis " + h->id + " has arguments or evidence; it cannot become an assumption");
  h->kind = NodeKind::assumption;
  h->assumed_probability = label;
  h->assumption_justification = std::move(justification);
  tree.computed.reset();
  return tree;
}

AnalysisTree set_source_kind(AnalysisTree tree, std::string_view evidence_id, SourceKind kind) {
  auto* e = tree.find_evidence(evidence_id);
  if (!e) unknown("evidence", evidence_id);
  e->source_kind = kind;
  return tree;
}

namespace {

class Propagator {
 public:
  Propagator(const AnalysisTree& tree, const Overrides& overrides) : tree_(tree), overrides_(overrides) {}

  ComputedValues run() {
    for (const auto& l : tree_.links) out_.link_forces[l.id] = link_force(l);
    for (const auto& h : tree_.hypotheses) hypothesis(h);
    for (const auto& a : tree_.arguments) argument(a);
    std::sort(out_.warnings.begin(), out_.warnings.end(), [](const auto& x, const auto& y) {
      if (x.target != y.target) return natural_less(x.target, y.target);
      return x.what < y.what;
    });
    out_.warnings.erase(std::unique(out_.warnings.begin(), out_.warnings.end()), out_.warnings.end());
    return std::move(out_);
  }

 private:
  Label input(std::string_view id, const std::optional<Label>& stored, UnsetInput what) {
    if (auto it = overrides_.find(id); it != overrides_.end()) return it->second;
    if (stored) return *stored;
    out_.warnings.push_back({std::string(id), what});
    return Label::lacking_support;
  }

  Label link_force(const EvidenceLink& l) {
    const auto* e = tree_.find_evidence(l.evidence_id);
    Label credibility = input(e->id, e->credibility, UnsetInput::credibility);
    Label relevance = Label::certain;
    if (auto it = overrides_.find(l.id); it != overrides_.end())
      relevance = it->second;
    else if (!l.about_fact)
      relevance = input(l.id, l.relevance, UnsetInput::relevance);
    return inferential_force(credibility, relevance);
  }

  Label argument(const ArgumentNode& a) {
    if (auto it = out_.argument_forces.find(a.id); it != out_.argument_forces.end()) return it->second;
    Label conjunction = Label::certain;
    for (const auto& sid : a.sub_hypotheses) {
      const NodeValue& v = hypothesis(*tree_.find_hypothesis(sid));
      // A sub-hypothesis that does not lean "for" cannot support the conjunction.
      conjunction = v.value.direction == Direction::for_ ? std::min(conjunction, v.value.strength)
                                                         : Label::lacking_support;
    }
    Label relevance = input(a.id, a.relevance, UnsetInput::relevance);
    Label force = inferential_force(conjunction, relevance);
    out_.argument_forces[a.id] = force;
    return force;
  }

  const NodeValue& hypothesis(const HypothesisNode& h) {
    if (auto it = out_.hypotheses.find(h.id); it != out_.hypotheses.end()) return it->second;
    NodeValue v;
    if (h.kind == NodeKind::assumption) {
      Label assumed = input(h.id, h.assumed_probability, UnsetInput::assumed_probability);
      v.balance = make_balanced(assumed, Label::lacking_support);
      v.value = {Direction::for_, assumed};
    } else {
      Label pro = Label::lacking_support;
      Label con = Label::lacking_support;
      auto pool = [&](Polarity p) -> Label& { return p == Polarity::favoring ? pro : con; };
      for (const auto& aid : h.arguments) {
        const auto* a = tree_.find_argument(aid);
        pool(a->polarity) = std::max(pool(a->polarity), argument(*a));
      }
      for (const auto* l : tree_.links_of(h.id)) {
        pool(l->polarity) = std::max(pool(l->polarity), out_.link_forces.at(l->id));
      }
      v.balance = make_balanced(pro, con);
      v.value = on_balance(v.balance);
    }
    return out_.hypotheses.emplace(h.id, v).first->second;
  }

  const AnalysisTree& tree_;
  const Overrides& overrides_;
  ComputedValues out_;
};

}  // namespace

ComputedValues evaluate(const AnalysisTree& tree) { return what_if(tree, {}); }

AnalysisTree propagate(AnalysisTree tree) {
  tree.computed = evaluate(tree);
  return tree;
}

ComputedValues what_if(const AnalysisTree& tree, const Overrides& overrides) {
  if (auto errors = validate(tree); !errors.empty()) throw StructuralErrors(std::move(errors));
  for (const auto& [id, label] : overrides) {
    if (tree.find_evidence(id) || tree.find_link(id) || tree.find_argument(id)) continue;
    const auto* h = tree.find_hypothesis(id);
    if (!h) unknown("override target", id);
    if (h->kind != NodeKind::assumption)
      throw Error(Errc::precondition, "override target " + id + " is not an assumption");
  }
  return Propagator(tree, overrides).run();
}

}  // namespace wigmore
