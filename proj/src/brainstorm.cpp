#include "wigmore/brainstorm.hpp"

#include <algorithm>

#include "overloaded.hpp"
#include "wigmore/error.hpp"

namespace wigmore {

namespace {

using detail::overloaded;

constexpr std::string_view kPhasePrefix = "phase:";

std::string_view id_prefix(ItemKind k) {
  switch (k) {
    case ItemKind::question: return "Q";
    case ItemKind::answer: return "A";
    case ItemKind::informal_argument: return "R";
    case ItemKind::evidence_association: return "X";
  }
  return "I";
}

std::string text_of(const BrainstormItem& item) {
  auto v = team_version(item);
  return v ? v->text : std::string();
}

BrainstormItem& live_item(BrainstormState& s, std::string_view id) {
  auto it = s.items.find(id);
  if (it == s.items.end()) throw Error(Errc::unknown_id, "unknown item id: " + std::string(id));
  if (it->second.deleted) throw Error(Errc::precondition, "item " + std::string(id) + " has been deleted");
  return it->second;
}

void require_text(const std::string& text) {
  if (text.empty()) throw Error(Errc::domain, "text must not be empty");
}

void remove_vote(BrainstormItem& item, const std::string& actor) {
  for (auto& v : item.versions) v.votes.erase(actor);
}

void remove_rejection(BrainstormItem& item, const std::string& actor) {
  std::erase_if(item.rejected_by, [&](const Rejection& r) { return r.participant == actor; });
}

void flag_others(BrainstormState& s, const BrainstormItem& item, const std::string& actor) {
  for (const auto& m : s.members)
    if (m != actor && !item.rejected_by_participant(m)) s.incomplete.insert({m, item.id});
}

void clear_flag(BrainstormState& s, const std::string& actor, const std::string& item) {
  s.incomplete.erase({actor, item});
}

ItemVersion& add_version(BrainstormItem& item, std::string text, const std::string& author, Timestamp now) {
  ItemVersion v;
  v.version_id = item.id + ".v" + std::to_string(item.next_version++);
  v.text = std::move(text);
  v.author = author;
  v.created_at = now;
  item.versions.push_back(std::move(v));
  return item.versions.back();
}

BrainstormItem& create_item(BrainstormState& s, ItemKind kind, std::string parent, const std::string& actor,
                            std::string text, Timestamp now) {
  BrainstormItem item;
  item.id = next_item_id(s, kind);
  item.kind = kind;
  item.parent_id = std::move(parent);
  item.proposer = actor;
  auto& v = add_version(item, std::move(text), actor, now);
  v.votes.insert(actor);
  auto [it, _] = s.items.emplace(item.id, std::move(item));
  flag_others(s, it->second, actor);
  return it->second;
}

bool valid_phase(const BrainstormState& s, std::string_view marker) {
  if (marker == phase::read_problem || marker == phase::question || marker == phase::answers) return true;
  auto scoped = [&](std::string_view prefix, ItemKind kind) {
    if (marker.size() <= prefix.size() + 1 || marker.substr(0, prefix.size()) != prefix ||
        marker[prefix.size()] != ':')
      return false;
    const auto* item = s.find_live_item(marker.substr(prefix.size() + 1));
    return item && item->kind == kind;
  };
  return scoped(phase::arguments, ItemKind::answer) || scoped(phase::evidence, ItemKind::informal_argument);
}

void cascade_delete(BrainstormState& s, const std::string& id) {
  for (auto& [child_id, child] : s.items) {
    if (child.parent_id == id && !child.deleted) {
      child.deleted = true;
      for (auto& v : child.versions) v.votes.clear();
      cascade_delete(s, child_id);
    }
  }
}

void drop_flags_on_dead_items(BrainstormState& s) {
  std::erase_if(s.incomplete, [&](const auto& flag) { return s.find_live_item(flag.second) == nullptr; });
}

}  // namespace

std::string_view item_kind_name(ItemKind k) {
  switch (k) {
    case ItemKind::question: return "question";
    case ItemKind::answer: return "answer";
    case ItemKind::informal_argument: return "informal_argument";
    case ItemKind::evidence_association: return "evidence_association";
  }
  return "answer";
}

std::optional<ItemKind> parse_item_kind(std::string_view s) {
  for (auto k : {ItemKind::question, ItemKind::answer, ItemKind::informal_argument, ItemKind::evidence_association})
    if (item_kind_name(k) == s) return k;
  return std::nullopt;
}

const ItemVersion* BrainstormItem::find_version(std::string_view version_id) const {
  for (const auto& v : versions)
    if (v.version_id == version_id) return &v;
  return nullptr;
}

std::size_t BrainstormItem::vote_count() const {
  std::size_t n = 0;
  for (const auto& v : versions) n += v.votes.size();
  return n;
}

bool BrainstormItem::rejected_by_participant(std::string_view p) const {
  return std::any_of(rejected_by.begin(), rejected_by.end(), [&](const Rejection& r) { return r.participant == p; });
}

Label aggregate_credibility(const CredibilityBallot& ballot) {
  if (ballot.assessments.empty())
    throw Error(Errc::domain, "no credibility assessments for " + ballot.evidence_id);
  std::vector<Label> labels;
  for (const auto& [_, l] : ballot.assessments) labels.push_back(l);
  std::sort(labels.begin(), labels.end());
  return labels[(labels.size() - 1) / 2];
}

Label CredibilityBallot::team_label() const { return aggregate_credibility(*this); }

bool BrainstormState::is_member(std::string_view p) const {
  return std::find(members.begin(), members.end(), p) != members.end();
}

const BrainstormItem* BrainstormState::find_item(std::string_view id) const {
  auto it = items.find(id);
  return it == items.end() ? nullptr : &it->second;
}

const BrainstormItem* BrainstormState::find_live_item(std::string_view id) const {
  const auto* item = find_item(id);
  return item && !item->deleted ? item : nullptr;
}

const CatalogEvidence* BrainstormState::find_evidence(std::string_view id) const {
  for (const auto& e : evidence)
    if (e.id == id) return &e;
  return nullptr;
}

bool BrainstormState::flagged(std::string_view participant, std::string_view item) const {
  return incomplete.count({std::string(participant), std::string(item)}) > 0;
}

bool BrainstormState::has_phase(std::string_view participant, std::string_view marker) const {
  return phases.count({std::string(participant), std::string(marker)}) > 0;
}

std::vector<const BrainstormItem*> BrainstormState::live_items(ItemKind kind, std::string_view parent) const {
  std::vector<const BrainstormItem*> out;
  for (const auto& [_, item] : items)
    if (!item.deleted && item.kind == kind && (parent.empty() || item.parent_id == parent)) out.push_back(&item);
  return out;
}

std::string_view event_kind(const BrainstormEvent& e) {
  return std::visit(overloaded{
                        [](const event::Create&) { return std::string_view("create"); },
                        [](const event::Join&) { return std::string_view("join"); },
                        [](const event::Propose&) { return std::string_view("propose"); },
                        [](const event::Reformulate&) { return std::string_view("reformulate"); },
                        [](const event::Vote&) { return std::string_view("vote"); },
                        [](const event::Reject&) { return std::string_view("reject"); },
                        [](const event::AssociateEvidence&) { return std::string_view("associate_evidence"); },
                        [](const event::AssessCredibility&) { return std::string_view("assess_credibility"); },
                        [](const event::MarkReviewed&) { return std::string_view("mark_reviewed"); },
                    },
                    e);
}

std::string next_item_id(const BrainstormState& state, ItemKind kind) {
  if (kind == ItemKind::question) return std::string(kQuestionItem);
  std::size_t n = 0;
  for (const auto& [_, item] : state.items)
    if (item.kind == kind) ++n;
  return std::string(id_prefix(kind)) + std::to_string(n + 1);
}

BrainstormState apply_event(BrainstormState s, const BrainstormEvent& e, std::string_view actor_view, Timestamp now) {
  const std::string actor(actor_view);
  if (std::holds_alternative<event::Create>(e)) {
    if (s.created()) throw Error(Errc::precondition, "problem already created");
  } else {
    if (!s.created()) throw Error(Errc::precondition, "problem has not been created");
    if (!std::holds_alternative<event::Join>(e) && !s.is_member(actor))
      throw Error(Errc::unauthorized, actor + " is not a member of the team");
  }

  std::visit(
      overloaded{
          [&](const event::Create& c) {
            if (c.problem_id.empty()) throw Error(Errc::domain, "problem id must not be empty");
            require_text(c.question);
            s.problem_id = c.problem_id;
            s.title = c.title;
            s.description = c.description;
            s.evidence = c.evidence;
            BrainstormItem q;
            q.id = std::string(kQuestionItem);
            q.kind = ItemKind::question;
            q.proposer = actor;
            add_version(q, c.question, actor, now);
            s.items.emplace(q.id, std::move(q));
          },
          [&](const event::Join&) {
            if (s.is_member(actor)) throw Error(Errc::precondition, actor + " already joined");
            if (actor.empty()) throw Error(Errc::domain, "participant must not be empty");
            s.members.push_back(actor);
          },
          [&](const event::Propose& p) {
            require_text(p.text);
            ItemKind parent_kind;
            switch (p.kind) {
              case ItemKind::answer: parent_kind = ItemKind::question; break;
              case ItemKind::informal_argument: parent_kind = ItemKind::answer; break;
              default:
                throw Error(Errc::precondition,
                            "cannot propose an item of kind " + std::string(item_kind_name(p.kind)));
            }
            const auto& parent = live_item(s, p.parent_id);
            if (parent.kind != parent_kind)
              throw Error(Errc::precondition, "item " + p.parent_id + " cannot hold a " +
                                                  std::string(item_kind_name(p.kind)));
            create_item(s, p.kind, p.parent_id, actor, p.text, now);
          },
          [&](const event::Reformulate& r) {
            require_text(r.text);
            auto& item = live_item(s, r.item_id);
            remove_vote(item, actor);
            remove_rejection(item, actor);
            add_version(item, r.text, actor, now).votes.insert(actor);
            flag_others(s, item, actor);
            clear_flag(s, actor, item.id);
          },
          [&](const event::Vote& v) {
            auto& item = live_item(s, v.item_id);
            auto it = std::find_if(item.versions.begin(), item.versions.end(),
                                   [&](const ItemVersion& x) { return x.version_id == v.version_id; });
            if (it == item.versions.end()) throw Error(Errc::unknown_id, "unknown version id: " + v.version_id);
            remove_vote(item, actor);
            remove_rejection(item, actor);
            it->votes.insert(actor);
            clear_flag(s, actor, item.id);
          },
          [&](const event::Reject& r) {
            auto& item = live_item(s, r.item_id);
            if (item.kind == ItemKind::question) throw Error(Errc::precondition, "the question cannot be rejected");
            require_text(r.justification);
            if (item.rejected_by_participant(actor))
              throw Error(Errc::precondition, actor + " already rejected " + item.id);
            remove_vote(item, actor);
            item.rejected_by.push_back({actor, r.justification});
            flag_others(s, item, actor);
            clear_flag(s, actor, item.id);
          },
          [&](const event::AssociateEvidence& a) {
            const auto& arg = live_item(s, a.argument_id);
            if (arg.kind != ItemKind::informal_argument)
              throw Error(Errc::precondition, "evidence is associated with informal arguments only");
            if (!s.find_evidence(a.evidence_id)) throw Error(Errc::unknown_id, "unknown evidence id: " + a.evidence_id);
            for (const auto* x : s.live_items(ItemKind::evidence_association, a.argument_id))
              if (x->evidence_id == a.evidence_id && x->polarity == a.polarity)
                throw Error(Errc::precondition, a.evidence_id + " is already associated with " + a.argument_id);
            BrainstormItem item;
            item.id = next_item_id(s, ItemKind::evidence_association);
            item.kind = ItemKind::evidence_association;
            item.parent_id = a.argument_id;
            item.proposer = actor;
            item.evidence_id = a.evidence_id;
            item.polarity = a.polarity;
            add_version(item, a.note, actor, now).votes.insert(actor);
            auto [it, _] = s.items.emplace(item.id, std::move(item));
            flag_others(s, it->second, actor);
          },
          [&](const event::AssessCredibility& c) {
            if (!s.find_evidence(c.evidence_id)) throw Error(Errc::unknown_id, "unknown evidence id: " + c.evidence_id);
            auto& ballot = s.ballots[c.evidence_id];
            ballot.evidence_id = c.evidence_id;
            ballot.assessments[actor] = c.label;
          },
          [&](const event::MarkReviewed& m) {
            std::string_view target = m.target;
            if (target.substr(0, kPhasePrefix.size()) == kPhasePrefix) {
              auto marker = target.substr(kPhasePrefix.size());
              if (!valid_phase(s, marker)) throw Error(Errc::unknown_id, "unknown phase: " + std::string(marker));
              s.phases.insert({actor, std::string(marker)});
            } else {
              clear_flag(s, actor, live_item(s, target).id);
            }
          },
      },
      e);

  ++s.sequence;
  return prune_zero_vote_versions(std::move(s));
}

BrainstormState prune_zero_vote_versions(BrainstormState s) {
  std::vector<std::string> deleted;
  for (auto& [id, item] : s.items) {
    if (item.deleted || item.versions.empty()) continue;
    bool reviewed = std::none_of(s.members.begin(), s.members.end(),
                                 [&](const std::string& m) { return s.flagged(m, id); });
    if (!reviewed) continue;
    if (item.vote_count() > 0) {
      std::erase_if(item.versions, [](const ItemVersion& v) { return v.votes.empty(); });
      continue;
    }
    bool majority = 2 * item.rejected_by.size() > s.members.size();
    bool conceded = !item.proposer.empty() && item.rejected_by_participant(item.proposer);
    if (majority || conceded) {
      item.versions.clear();
      item.deleted = true;
      deleted.push_back(id);
    }
  }
  for (const auto& id : deleted) cascade_delete(s, id);
  drop_flags_on_dead_items(s);
  return s;
}

std::optional<ItemVersion> team_version(const BrainstormItem& item) {
  const ItemVersion* best = nullptr;
  for (const auto& v : item.versions) {
    if (!best || v.votes.size() > best->votes.size() ||
        (v.votes.size() == best->votes.size() && v.created_at < best->created_at))
      best = &v;
  }
  if (!best) return std::nullopt;
  return *best;
}

std::string_view task_kind_name(TaskKind k) {
  switch (k) {
    case TaskKind::read_problem: return "read_problem";
    case TaskKind::review: return "review";
    case TaskKind::question: return "question";
    case TaskKind::answers: return "answers";
    case TaskKind::arguments: return "arguments";
    case TaskKind::evidence: return "evidence";
    case TaskKind::credibility: return "credibility";
    case TaskKind::done: return "done";
  }
  return "done";
}

Task next_task(const BrainstormState& s, std::string_view participant) {
  const std::string p(participant);
  if (!s.is_member(p)) throw Error(Errc::unauthorized, p + " is not a member of the team");

  if (!s.has_phase(p, phase::read_problem))
    return {TaskKind::read_problem, "",
            "Read the problem description on your own and imagine possible hypotheses before looking at the "
            "team's work."};

  std::vector<std::string> flagged;
  for (const auto& [who, item] : s.incomplete)
    if (who == p) flagged.push_back(item);
  if (!flagged.empty()) {
    std::sort(flagged.begin(), flagged.end(), NaturalLess{});
    return {TaskKind::review, flagged.front(),
            "Review the changes other members made: " + std::to_string(flagged.size()) + " item(s) to review."};
  }

  if (const auto* q = s.find_live_item(kQuestionItem)) {
    auto tv = team_version(*q);
    bool voted = tv && tv->votes.count(p);
    if (!voted && !s.has_phase(p, phase::question))
      return {TaskKind::question, q->id, "Reformulate the question or accept it: " + text_of(*q)};
  }

  if (!s.has_phase(p, phase::answers))
    return {TaskKind::answers, std::string(kQuestionItem),
            "Provide, reformulate, vote for or reject possible answers."};

  auto answers = s.live_items(ItemKind::answer);
  for (const auto* a : answers)
    if (!s.has_phase(p, std::string(phase::arguments) + ":" + a->id))
      return {TaskKind::arguments, a->id, "Provide informal arguments for: " + text_of(*a)};

  for (const auto* a : answers)
    for (const auto* r : s.live_items(ItemKind::informal_argument, a->id))
      if (!s.has_phase(p, std::string(phase::evidence) + ":" + r->id))
        return {TaskKind::evidence, r->id, "Associate favoring and disfavoring evidence with: " + text_of(*r)};

  std::set<std::string, NaturalLess> used;
  for (const auto* x : s.live_items(ItemKind::evidence_association)) used.insert(x->evidence_id);
  for (const auto& id : used) {
    auto it = s.ballots.find(id);
    if (it == s.ballots.end() || !it->second.assessments.count(p)) {
      const auto* e = s.find_evidence(id);
      return {TaskKind::credibility, id, "Assess the credibility of " + id + (e ? " " + e->name : "") + "."};
    }
  }
  return {TaskKind::done, "", "Brainstorming complete. Import the informal analysis to start the formal analysis."};
}

AnalysisTree import_informal(const BrainstormState& s, std::string_view participant) {
  if (!s.is_member(participant))
    throw Error(Errc::unauthorized, std::string(participant) + " is not a member of the team");
  auto answers = s.live_items(ItemKind::answer);
  std::erase_if(answers, [](const BrainstormItem* a) { return !team_version(*a); });
  if (answers.empty()) throw Error(Errc::not_ready, "the team has no hypotheses with a team version yet");

  AnalysisTree tree;
  if (const auto* q = s.find_live_item(kQuestionItem)) tree.question = text_of(*q);

  for (const auto& c : s.evidence) {
    EvidenceItem e{c.id, c.name, c.body, c.source_kind, std::nullopt, ""};
    auto it = s.ballots.find(c.id);
    if (it != s.ballots.end() && !it->second.assessments.empty()) e.credibility = it->second.team_label();
    tree = add_evidence(std::move(tree), std::move(e));
  }

  int next_h = 1, next_a = 1, next_l = 1;
  std::vector<std::pair<const BrainstormItem*, std::string>> tops;
  for (const auto* a : answers) {
    std::string hid = "H" + std::to_string(next_h++);
    tree = add_top_hypothesis(std::move(tree), {hid, text_of(*a), NodeKind::top, {}, std::nullopt, ""});
    tops.emplace_back(a, hid);
  }
  for (const auto& [answer, top_id] : tops) {
    for (const auto* r : s.live_items(ItemKind::informal_argument, answer->id)) {
      auto tv = team_version(*r);
      if (!tv) continue;
      std::string hid = "H" + std::to_string(next_h++);
      std::string aid = "A" + std::to_string(next_a++);
      tree = add_hypothesis(std::move(tree), {hid, tv->text, NodeKind::intermediate, {}, std::nullopt, ""});
      tree = add_argument(std::move(tree), top_id, {aid, Polarity::favoring, std::nullopt, "", {hid}});
      for (const auto* x : s.live_items(ItemKind::evidence_association, r->id)) {
        tree = add_link(std::move(tree), {"LK" + std::to_string(next_l++), x->evidence_id, hid, x->polarity,
                                          std::nullopt, "", false});
      }
    }
  }
  return tree;
}

}  // namespace wigmore
