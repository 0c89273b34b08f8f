#include "wigmore/brainstorm.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support/cesium_transcript.hpp"
#include "support/random_brainstorm.hpp"
#include "wigmore/analytics.hpp"
#include "wigmore/error.hpp"

namespace wigmore {
namespace {

using namespace testing;
using enum Label;

BrainstormState after(std::size_t n_events) {
  auto script = cesium_answers_script();
  script.resize(n_events);
  return replay(script);
}

std::size_t index_of(const std::vector<ScriptedEvent>& script, std::string_view actor, double hour) {
  for (std::size_t i = 0; i < script.size(); ++i)
    if (script[i].actor == actor && script[i].at >= at_hours(hour)) return i;
  return script.size();
}

Errc error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return Errc::io;
}

std::set<std::string> votes(const BrainstormState& s, std::string_view item, std::string_view version) {
  return s.find_item(item)->find_version(version)->votes;
}

TEST(ApplyEvent, ReformulateMovesVoteAndFlagsOthers) {
  auto script = cesium_answers_script();
  auto before_p2 = replay({script.begin(), script.begin() + index_of(script, "P2", 3.1)});
  auto s = apply_event(before_p2, event::Reformulate{"A1", kStolenText}, "P2", at_hours(3.1));
  const auto* a1 = s.find_item("A1");
  ASSERT_EQ(a1->versions.size(), 2u);
  EXPECT_EQ(a1->versions[1].text, kStolenText);
  EXPECT_EQ(a1->versions[1].votes, std::set<std::string>{"P2"});
  EXPECT_TRUE(s.flagged("P1", "A1"));
  EXPECT_TRUE(s.flagged("P3", "A1"));
  EXPECT_FALSE(s.flagged("P2", "A1"));
}

TEST(ApplyEvent, VoteAddsToChosenVersion) {
  auto script = cesium_answers_script();
  auto s = replay({script.begin(), script.begin() + index_of(script, "P3", 5.1) + 1});
  EXPECT_EQ(votes(s, "A1", "A1.v2"), (std::set<std::string>{"P2", "P3"}));
}

TEST(ApplyEvent, RepeatedVoteIsNoOp) {
  auto s = after(9);  // P1's three proposals
  auto again = apply_event(s, event::Vote{"A1", "A1.v1"}, "P1", at_hours(2));
  EXPECT_EQ(again.items, s.items);
  EXPECT_EQ(again.incomplete, s.incomplete);
  EXPECT_EQ(again.sequence, s.sequence + 1);
}

TEST(ApplyEvent, Errors) {
  auto s = replay(cesium_answers_script());
  EXPECT_EQ(error_of([&] { apply_event(s, event::Vote{"A1", "A1.v2"}, "P7", at_hours(10)); }), Errc::unauthorized);
  EXPECT_EQ(error_of([&] { apply_event(s, event::Vote{"A3", "A3.v1"}, "P1", at_hours(10)); }), Errc::precondition);
  EXPECT_EQ(error_of([&] { apply_event(s, event::Vote{"A1", "A1.v9"}, "P1", at_hours(10)); }), Errc::unknown_id);
  EXPECT_EQ(error_of([&] { apply_event(s, event::Vote{"A9", "A9.v1"}, "P1", at_hours(10)); }), Errc::unknown_id);
  EXPECT_EQ(error_of([&] { apply_event(s, event::Join{}, "P1", at_hours(10)); }), Errc::precondition);
  EXPECT_EQ(error_of([&] { apply_event(s, event::Reject{"A1", ""}, "P1", at_hours(10)); }), Errc::domain);
  EXPECT_EQ(error_of([&] { apply_event(BrainstormState{}, event::Join{}, "P1", at_hours(0)); }), Errc::precondition);
  EXPECT_EQ(error_of([&] {
              apply_event(s, event::Propose{ItemKind::informal_argument, "Q", "x"}, "P1", at_hours(10));
            }),
            Errc::precondition);
}

TEST(Transcript, StateAfterP2) {
  auto script = cesium_answers_script();
  auto s = replay({script.begin(), script.begin() + index_of(script, "P3", 5)});
  // Ties go to the earlier version, so P1's wording is still the team version.
  EXPECT_EQ(team_version(*s.find_item("A1"))->text, "Was stolen");
  EXPECT_EQ(team_version(*s.find_item("A2"))->text, "Was misplaced");
  EXPECT_EQ(team_version(*s.find_item("A4"))->text, kProjectText);
}

TEST(Transcript, StateAfterP3MatchesListing) {
  auto script = cesium_answers_script();
  auto s = replay({script.begin(), script.begin() + index_of(script, "P1", 9)});
  auto a1 = *s.find_item("A1");
  EXPECT_EQ(team_version(a1)->text, kStolenText);
  EXPECT_EQ(team_version(a1)->votes, (std::set<std::string>{"P2", "P3"}));
  EXPECT_EQ(a1.find_version("A1.v1")->votes, std::set<std::string>{"P1"});
  EXPECT_EQ(team_version(*s.find_item("A2"))->votes, (std::set<std::string>{"P2", "P3"}));
  auto a3 = *s.find_item("A3");
  EXPECT_FALSE(a3.deleted);
  EXPECT_EQ(team_version(a3)->text, "Was lost");
  EXPECT_EQ(team_version(a3)->votes, std::set<std::string>{"P1"});
  EXPECT_EQ(team_version(*s.find_item("A4"))->votes, (std::set<std::string>{"P2", "P3"}));

  for (const char* id : {"A1", "A2", "A3", "A4"}) EXPECT_TRUE(s.flagged("P1", id)) << id;
  EXPECT_EQ(next_task(s, "P1"), (Task{TaskKind::review, "A1", next_task(s, "P1").description}));
}

TEST(Transcript, FinalListing) {
  auto s = replay(cesium_answers_script());
  auto answers = s.live_items(ItemKind::answer);
  ASSERT_EQ(answers.size(), 3u);
  std::vector<std::string> texts;
  for (const auto* a : answers) {
    ASSERT_EQ(a->versions.size(), 1u) << a->id;
    EXPECT_EQ(a->versions[0].votes, (std::set<std::string>{"P1", "P2", "P3"}));
    texts.push_back(team_version(*a)->text);
  }
  EXPECT_EQ(texts, (std::vector<std::string>{kStolenText, kMisplacedText, kProjectText}));
  EXPECT_TRUE(s.find_item("A3")->deleted);
  EXPECT_TRUE(s.find_item("A3")->versions.empty());
  EXPECT_TRUE(s.incomplete.empty());
}

TEST(Prune, DeferredWhileFlagged) {
  auto script = cesium_answers_script();
  // P3 has voted on A1 but P1 has not reviewed P2's reformulation yet.
  auto s = replay({script.begin(), script.begin() + index_of(script, "P1", 9)});
  EXPECT_EQ(s.find_item("A1")->versions.size(), 2u);
  EXPECT_TRUE(s.flagged("P1", "A1"));
}

TEST(Prune, OneVoteVersionRetainedZeroVoteRemoved) {
  auto script = cesium_answers_script();
  auto s = replay({script.begin(), script.begin() + index_of(script, "P1", 9)});
  s = apply_event(s, event::MarkReviewed{"A1"}, "P1", at_hours(9));
  EXPECT_EQ(s.find_item("A1")->versions.size(), 2u);  // P1 still votes for v1
  s = apply_event(s, event::Vote{"A1", "A1.v2"}, "P1", at_hours(9));
  ASSERT_EQ(s.find_item("A1")->versions.size(), 1u);
  EXPECT_EQ(s.find_item("A1")->versions[0].version_id, "A1.v2");
}

TEST(Prune, MajorityRejectionDeletesUnvotedItem) {
  RandomBrainstorm gen(1, 3);
  auto s = gen.start();
  s = apply_event(s, event::MarkReviewed{"phase:read-problem"}, "P1", at_hours(1));
  s = apply_event(s, event::Propose{ItemKind::answer, "Q", "idea"}, "P1", at_hours(1));
  s = apply_event(s, event::Reject{"A1", "no"}, "P2", at_hours(2));
  s = apply_event(s, event::Reject{"A1", "no"}, "P3", at_hours(3));
  EXPECT_FALSE(s.find_item("A1")->deleted);  // P1 still votes for it
  s = apply_event(s, event::Reject{"A1", "fine"}, "P1", at_hours(4));
  EXPECT_TRUE(s.find_item("A1")->deleted);
}

TEST(Prune, DeletingAnAnswerDeletesItsArguments) {
  RandomBrainstorm gen(1, 1);
  auto s = gen.start();
  s = apply_event(s, event::Propose{ItemKind::answer, "Q", "idea"}, "P1", at_hours(1));
  s = apply_event(s, event::Propose{ItemKind::informal_argument, "A1", "why"}, "P1", at_hours(1));
  s = apply_event(s, event::Reject{"A1", "withdrawn"}, "P1", at_hours(2));
  EXPECT_TRUE(s.find_item("A1")->deleted);
  EXPECT_TRUE(s.find_item("R1")->deleted);
}

TEST(TeamVersion, Examples) {
  BrainstormItem item;
  EXPECT_FALSE(team_version(item));
  item.versions.push_back({"X.v1", "first", "P1", at_hours(1), {"P1"}});
  item.versions.push_back({"X.v2", "second", "P2", at_hours(2), {"P2"}});
  EXPECT_EQ(team_version(item)->version_id, "X.v1");
  item.versions[1].votes.insert("P3");
  EXPECT_EQ(team_version(item)->version_id, "X.v2");
}

Label median_oracle(const std::vector<Label>& labels) {
  // Smallest label with at least half of the assessments at or below it.
  std::size_t need = (labels.size() + 1) / 2;
  for (Label l : kAllLabels)
    if (static_cast<std::size_t>(std::count_if(labels.begin(), labels.end(), [&](Label x) { return x <= l; })) >= need)
      return l;
  return certain;
}

TEST(AggregateCredibility, Examples) {
  EXPECT_EQ(aggregate_credibility({"E1", {{"P1", likely}, {"P2", more_than_likely}, {"P3", barely_likely}}}), likely);
  EXPECT_EQ(aggregate_credibility({"E1", {{"P1", likely}}}), likely);
  EXPECT_EQ(aggregate_credibility({"E1", {{"P1", likely}, {"P2", more_than_likely}}}), likely);
  EXPECT_THROW(aggregate_credibility({"E1", {}}), Error);
}

TEST(AggregateCredibility, MatchesMedianOracleOnRandomBallots) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    CredibilityBallot b{"E1", {}};
    std::vector<Label> labels;
    int n = 1 + static_cast<int>(rng() % 9);
    for (int p = 0; p < n; ++p) {
      Label l = static_cast<Label>(rng() % 7);
      b.assessments["P" + std::to_string(p)] = l;
      labels.push_back(l);
    }
    Label got = aggregate_credibility(b);
    EXPECT_EQ(got, median_oracle(labels));
    EXPECT_GE(got, *std::min_element(labels.begin(), labels.end()));
    EXPECT_LE(got, *std::max_element(labels.begin(), labels.end()));
  }
}

TEST(NextTask, FreshParticipantReadsProblemFirst) {
  auto s = after(4);
  EXPECT_EQ(next_task(s, "P3").kind, TaskKind::read_problem);
  EXPECT_EQ(error_of([&] { next_task(s, "P9"); }), Errc::unauthorized);
}

TEST(NextTask, FullTranscriptEndsDone) {
  auto s = replay(cesium_full_script());
  for (const char* p : {"P1", "P2", "P3"}) EXPECT_EQ(next_task(s, p).kind, TaskKind::done) << p;
  EXPECT_EQ(s.ballots.at("E1").team_label(), likely);
}

TEST(NextTask, Order) {
  auto s = replay(cesium_answers_script());
  EXPECT_EQ(next_task(s, "P1").kind, TaskKind::answers);
  s = apply_event(s, event::MarkReviewed{"phase:answers"}, "P1", at_hours(10));
  EXPECT_EQ(next_task(s, "P1"), (Task{TaskKind::arguments, "A1", next_task(s, "P1").description}));
}

// Follows next_task until done; each step is the minimal action for the task.
int walk_checklist(BrainstormState& s, const std::string& p, int limit) {
  int steps = 0;
  for (Task t = next_task(s, p); t.kind != TaskKind::done; t = next_task(s, p)) {
    if (++steps > limit) return -1;
    BrainstormEvent e;
    switch (t.kind) {
      case TaskKind::read_problem: e = event::MarkReviewed{"phase:read-problem"}; break;
      case TaskKind::review: e = event::MarkReviewed{t.target}; break;
      case TaskKind::question: e = event::MarkReviewed{"phase:question"}; break;
      case TaskKind::answers: e = event::MarkReviewed{"phase:answers"}; break;
      case TaskKind::arguments: e = event::MarkReviewed{"phase:arguments:" + t.target}; break;
      case TaskKind::evidence: e = event::MarkReviewed{"phase:evidence:" + t.target}; break;
      case TaskKind::credibility: e = event::AssessCredibility{t.target, likely}; break;
      case TaskKind::done: break;
    }
    s = apply_event(s, e, p, at_hours(100));
  }
  return steps;
}

TEST(Properties, RandomEventStreams) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    RandomBrainstorm gen(seed, 2 + seed % 4);
    auto s = gen.start();
    std::vector<ScriptedEvent> applied;
    for (int i = 0; i < 150; ++i) {
      auto e = gen.next(s);
      BrainstormState next;
      try {
        next = apply_event(s, e.event, e.actor, e.at);
      } catch (const Error&) {
        continue;
      }
      ASSERT_EQ(next.sequence, s.sequence + 1);
      s = std::move(next);
      applied.push_back(e);

      for (const auto& [id, item] : s.items) {
        std::set<std::string> voters;
        std::size_t total = 0;
        for (const auto& v : item.versions) {
          total += v.votes.size();
          voters.insert(v.votes.begin(), v.votes.end());
        }
        ASSERT_EQ(voters.size(), total) << "duplicate vote on " << id;
        ASSERT_LE(total, s.members.size());
        if (item.deleted) {
          ASSERT_EQ(total, 0u);
        }
      }
      for (const auto& [p, id] : s.incomplete) ASSERT_TRUE(s.find_live_item(id)) << id;
    }

    // Replaying the accepted events from scratch reproduces the state.
    auto fresh = gen.members().size();
    RandomBrainstorm again(seed, static_cast<int>(fresh));
    auto r = again.start();
    for (const auto& e : applied) r = apply_event(r, e.event, e.actor, e.at);
    ASSERT_EQ(r, s);

    // Once every member has reviewed everything, no zero-vote version
    // survives on an item that still has votes.
    const auto members = s.members;
    for (const auto& m : members) {
      for (const auto& [id, item] : std::map(s.items.begin(), s.items.end()))
        if (!item.deleted && s.flagged(m, id)) s = apply_event(s, event::MarkReviewed{id}, m, at_hours(99));
    }
    for (const auto& [id, item] : s.items) {
      if (item.deleted || item.vote_count() == 0) continue;
      for (const auto& v : item.versions) EXPECT_FALSE(v.votes.empty()) << v.version_id;
    }

    // The checklist terminates for every member.
    for (const auto& m : members) EXPECT_GE(walk_checklist(s, m, 200), 0) << m;
  }
}

TEST(ImportInformal, CesiumSkeleton) {
  auto s = replay(cesium_full_script());
  auto t = import_informal(s, "P2");
  EXPECT_EQ(t.question, "What happened to the cesium-137 canister?");
  ASSERT_EQ(t.top_hypotheses.size(), 3u);
  EXPECT_EQ(t.find_hypothesis(t.top_hypotheses[0])->statement, kStolenText);
  EXPECT_EQ(t.evidence.size(), 5u);
  EXPECT_EQ(t.find_evidence("E1")->credibility, likely);
  EXPECT_TRUE(validate(t).empty());
  for (const auto& a : t.arguments) {
    EXPECT_EQ(a.polarity, Polarity::favoring);
    EXPECT_FALSE(a.relevance);
  }
  for (const auto& l : t.links) EXPECT_FALSE(l.relevance);
  const auto* h1 = t.find_hypothesis("H1");
  ASSERT_EQ(h1->arguments.size(), 1u);
  auto sub = t.find_argument(h1->arguments[0])->sub_hypotheses.at(0);
  EXPECT_EQ(t.find_hypothesis(sub)->statement, kTruckArgument);
  EXPECT_EQ(t.links_of(sub).size(), 3u);
}

TEST(ImportInformal, EmptyBrainstormIsNotReady) {
  auto s = after(4);
  EXPECT_EQ(error_of([&] { import_informal(s, "P1"); }), Errc::not_ready);
}

TEST(ImportInformal, SingleHypothesisGivesOneTop) {
  RandomBrainstorm gen(3, 1);
  auto s = gen.start();
  s = apply_event(s, event::Propose{ItemKind::answer, "Q", "Only idea"}, "P1", at_hours(1));
  auto t = import_informal(s, "P1");
  EXPECT_EQ(t.top_hypotheses, std::vector<std::string>{"H1"});
  auto findings = run_checks(t);
  EXPECT_TRUE(std::any_of(findings.begin(), findings.end(),
                          [](const Finding& f) { return f.code == check_code::satisficing_bias; }));
}

}  // namespace
}  // namespace wigmore
