#include "wigmore/streams.hpp"

#include "overloaded.hpp"
#include "wigmore/error.hpp"

namespace wigmore {

using detail::overloaded;

std::string_view roster_event_kind(const RosterEvent& e) {
  return std::visit(overloaded{
                        [](const roster_event::Configure&) { return std::string_view("configure"); },
                        [](const roster_event::Join&) { return std::string_view("join"); },
                        [](const roster_event::Tick&) { return std::string_view("tick"); },
                    },
                    e);
}

std::optional<std::string> RosterState::participant_of(std::string_view token) const {
  if (token.empty()) return std::nullopt;
  for (const auto& [p, t] : tokens)
    if (t == token) return p;
  return std::nullopt;
}

RosterState apply_roster_event(RosterState s, const RosterEvent& e, std::string_view actor, Timestamp now) {
  std::visit(overloaded{
                 [&](const roster_event::Configure& c) {
                   if (s.configured || s.sequence > 0)
                     throw Error(Errc::precondition, "roster is already configured");
                   if (c.policy == RosterPolicy::random_fixed) {
                     s.roster = random_roster(c.participants, c.seed, c.params, now);
                   } else {
                     s.roster = TeamRoster{};
                     s.roster.params = c.params;
                   }
                   s.configured = true;
                 },
                 [&](const roster_event::Join& j) {
                   if (j.token.empty()) throw Error(Errc::domain, "join needs a token");
                   if (s.participant_of(j.token)) throw Error(Errc::conflict, "token already issued");
                   s.roster = join(std::move(s.roster), actor, now).roster;
                   s.tokens[std::string(actor)] = j.token;
                 },
                 [&](const roster_event::Tick&) { s.roster = tick(std::move(s.roster), now); },
             },
             e);
  ++s.sequence;
  return s;
}

std::string_view analysis_event_kind(const AnalysisEvent& e) {
  return std::visit(overloaded{
                        [](const analysis_event::Import&) { return std::string_view("import"); },
                        [](const analysis_event::AddEvidence&) { return std::string_view("add_evidence"); },
                        [](const analysis_event::AddHypothesis&) { return std::string_view("add_hypothesis"); },
                        [](const analysis_event::AddArgument&) { return std::string_view("add_argument"); },
                        [](const analysis_event::AddLink&) { return std::string_view("add_link"); },
                        [](const analysis_event::AssessCredibility&) { return std::string_view("assess_credibility"); },
                        [](const analysis_event::AssessRelevance&) { return std::string_view("assess_relevance"); },
                        [](const analysis_event::SetAssumption&) { return std::string_view("set_assumption"); },
                        [](const analysis_event::SetSourceKind&) { return std::string_view("set_source_kind"); },
                        [](const analysis_event::GenerateReport&) { return std::string_view("generate_report"); },
                        [](const analysis_event::EditSection&) { return std::string_view("edit_section"); },
                    },
                    e);
}

AnalysisState apply_analysis_event(AnalysisState s, const AnalysisEvent& e, std::string_view actor, Timestamp now) {
  if (actor != s.owner) throw Error(Errc::unauthorized, std::string(actor) + " cannot write the analysis of " + s.owner);
  auto& t = s.tree;
  std::visit(overloaded{
                 [&](const analysis_event::Import& i) {
                   t = i.tree;
                   t.computed.reset();
                 },
                 [&](const analysis_event::AddEvidence& a) { t = add_evidence(std::move(t), a.item); },
                 [&](const analysis_event::AddHypothesis& a) {
                   t = a.top ? add_top_hypothesis(std::move(t), a.node) : add_hypothesis(std::move(t), a.node);
                 },
                 [&](const analysis_event::AddArgument& a) { t = add_argument(std::move(t), a.parent_id, a.node); },
                 [&](const analysis_event::AddLink& a) { t = add_link(std::move(t), a.link); },
                 [&](const analysis_event::AssessCredibility& a) {
                   t = assess_credibility(std::move(t), a.evidence_id, a.label, a.justification);
                 },
                 [&](const analysis_event::AssessRelevance& a) {
                   t = assess_relevance(std::move(t), a.target, a.label, a.justification);
                 },
                 [&](const analysis_event::SetAssumption& a) {
                   t = set_assumption(std::move(t), a.hypothesis_id, a.label, a.justification);
                 },
                 [&](const analysis_event::SetSourceKind& a) { t = set_source_kind(std::move(t), a.evidence_id, a.kind); },
                 [&](const analysis_event::GenerateReport&) {
                   auto computed = propagate(t);
                   s.report = s.report ? regenerate_report(*s.report, computed) : generate_report(computed);
                 },
                 [&](const analysis_event::EditSection& a) {
                   if (!s.report) throw Error(Errc::not_ready, "no report has been generated");
                   s.report = edit_section(std::move(*s.report), a.section_id, a.text, actor, now);
                 },
             },
             e);
  t.computed.reset();
  ++s.sequence;
  return s;
}

}  // namespace wigmore
