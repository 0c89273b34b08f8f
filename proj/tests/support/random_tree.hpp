#pragma once

// Seeded generator of small well-formed analysis trees for property tests.

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "wigmore/argument.hpp"

namespace wigmore::testing {

class RandomTreeGenerator {
 public:
  explicit RandomTreeGenerator(std::uint64_t seed, int max_nodes = 12)
      : rng_(seed), max_nodes_(max_nodes) {}

  AnalysisTree next() {
    AnalysisTree t;
    t.question = "Random question";
    nodes_ = 0;
    hyp_counter_ = arg_counter_ = link_counter_ = 0;
    int evidence_count = 1 + pick(5);
    for (int i = 1; i <= evidence_count; ++i) {
      EvidenceItem e;
      e.id = "E" + std::to_string(i);
      e.name = "Evidence " + std::to_string(i);
      e.credibility = maybe_label();
      t.evidence.push_back(e);
    }
    int tops = 1 + pick(3);
    for (int i = 0; i < tops && nodes_ < max_nodes_; ++i) {
      std::string id = grow(t, 0);
      t.top_hypotheses.push_back(id);
      t.find_hypothesis(id)->kind =
          t.find_hypothesis(id)->kind == NodeKind::assumption ? NodeKind::assumption : NodeKind::top;
    }
    return t;
  }

  int pick(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }
  Label any_label() { return static_cast<Label>(pick(7)); }
  std::optional<Label> maybe_label() {
    if (pick(8) == 0) return std::nullopt;
    return any_label();
  }

 private:
  std::string grow(AnalysisTree& t, int depth) {
    ++nodes_;
    HypothesisNode h;
    h.id = "H" + std::to_string(++hyp_counter_);
    h.statement = "Hypothesis " + h.id;
    t.hypotheses.push_back(h);

    int roll = pick(10);
    bool can_expand = nodes_ + 2 <= max_nodes_ && depth < 4;
    if (roll < 2) {
      auto* node = t.find_hypothesis(h.id);
      node->kind = NodeKind::assumption;
      node->assumed_probability = maybe_label();
      node->assumption_justification = pick(2) ? "assumed" : "";
      return h.id;
    }
    if (roll < 6 || !can_expand) {
      add_links(t, h.id, 1 + pick(3));
      return h.id;
    }
    int args = 1 + pick(2);
    for (int a = 0; a < args && nodes_ + 2 <= max_nodes_; ++a) {
      ArgumentNode arg;
      arg.id = "A" + std::to_string(++arg_counter_);
      arg.polarity = pick(3) == 0 ? Polarity::disfavoring : Polarity::favoring;
      arg.relevance = maybe_label();
      ++nodes_;
      int subs = 1 + pick(3);
      for (int s = 0; s < subs && (s == 0 || nodes_ < max_nodes_); ++s)
        arg.sub_hypotheses.push_back(grow(t, depth + 1));
      t.arguments.push_back(arg);
      t.find_hypothesis(h.id)->arguments.push_back(arg.id);
    }
    if (pick(3) == 0) add_links(t, h.id, 1);
    return h.id;
  }

  void add_links(AnalysisTree& t, const std::string& hyp, int count) {
    for (int i = 0; i < count; ++i) {
      EvidenceLink l;
      l.id = "L" + std::to_string(++link_counter_);
      l.evidence_id = t.evidence[static_cast<std::size_t>(pick(static_cast<int>(t.evidence.size())))].id;
      l.hypothesis_id = hyp;
      l.polarity = pick(3) == 0 ? Polarity::disfavoring : Polarity::favoring;
      if (pick(4) == 0) {
        l.about_fact = true;
        l.relevance = Label::certain;
        auto* node = t.find_hypothesis(hyp);
        if (node->kind == NodeKind::intermediate && node->arguments.empty())
          node->kind = NodeKind::fact_leaf;
      } else {
        l.relevance = maybe_label();
      }
      t.links.push_back(l);
    }
  }

  std::mt19937_64 rng_;
  int max_nodes_;
  int nodes_ = 0;
  int hyp_counter_ = 0;
  int arg_counter_ = 0;
  int link_counter_ = 0;
};

}  // namespace wigmore::testing
