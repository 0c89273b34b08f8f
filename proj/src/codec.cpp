#include "wigmore/codec.hpp"

#include "overloaded.hpp"
#include "wigmore/error.hpp"

namespace wigmore {

using detail::overloaded;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::parse, what); }

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    fail(e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

std::string text(const Json& j, const char* key) { return field(j, key).get<std::string>(); }

std::string text_or(const Json& j, const char* key, std::string fallback = {}) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? fallback : it->get<std::string>();
}

bool flag_or(const Json& j, const char* key, bool fallback = false) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? fallback : it->get<bool>();
}

std::vector<std::string> strings(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return {};
  return it->get<std::vector<std::string>>();
}

template <typename E, typename P>
E enum_field(const Json& j, const char* key, P parse) {
  auto s = text(j, key);
  auto v = parse(s);
  if (!v) fail(std::string("bad value '") + s + "' for '" + key + "'");
  return *v;
}

template <typename E, typename P>
std::optional<E> optional_enum(const Json& j, const char* key, P parse) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  auto s = it->get<std::string>();
  auto v = parse(s);
  if (!v) fail(std::string("bad value '") + s + "' for '" + key + "'");
  return v;
}

Label required_label(const Json& j, const char* key) {
  auto l = label_from_json(field(j, key));
  if (!l) fail(std::string("missing label '") + key + "'");
  return *l;
}

std::optional<Label> optional_label(const Json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() ? std::nullopt : label_from_json(*it);
}

Timestamp time_field(const Json& j, const char* key) {
  auto s = text(j, key);
  auto t = parse_timestamp(s);
  if (!t) fail("bad timestamp '" + s + "'");
  return *t;
}

std::chrono::seconds duration_field(const Json& j, const char* key, std::chrono::seconds fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (it->is_number_integer()) return std::chrono::seconds{it->get<std::int64_t>()};
  auto s = it->get<std::string>();
  auto d = parse_duration(s);
  if (!d) fail("bad duration '" + s + "'");
  return *d;
}

Json optional_text(const std::optional<std::string_view>& s) { return s ? Json(std::string(*s)) : Json(nullptr); }

Json value_to_json(const DirectionalValue& v) {
  return Json{{"direction", direction_name(v.direction)}, {"strength", label_token(v.strength)}};
}

DirectionalValue value_from_json(const Json& j) {
  return {enum_field<Direction>(j, "direction", parse_direction), required_label(j, "strength")};
}

// Evidence, nodes and links.

Json evidence_to_json(const EvidenceItem& e) {
  return Json{{"id", e.id},
              {"name", e.name},
              {"body", e.body},
              {"source_kind", e.source_kind ? optional_text(source_kind_name(*e.source_kind)) : Json(nullptr)},
              {"credibility", label_to_json(e.credibility)},
              {"credibility_justification", e.credibility_justification}};
}

EvidenceItem evidence_from_json(const Json& j) {
  EvidenceItem e;
  e.id = text(j, "id");
  e.name = text_or(j, "name");
  e.body = text_or(j, "body");
  e.source_kind = optional_enum<SourceKind>(j, "source_kind", parse_source_kind);
  e.credibility = optional_label(j, "credibility");
  e.credibility_justification = text_or(j, "credibility_justification");
  return e;
}

Json hypothesis_to_json(const HypothesisNode& h) {
  return Json{{"id", h.id},
              {"statement", h.statement},
              {"kind", node_kind_name(h.kind)},
              {"arguments", h.arguments},
              {"assumed_probability", label_to_json(h.assumed_probability)},
              {"assumption_justification", h.assumption_justification}};
}

HypothesisNode hypothesis_from_json(const Json& j) {
  HypothesisNode h;
  h.id = text(j, "id");
  h.statement = text_or(j, "statement");
  h.kind = enum_field<NodeKind>(j, "kind", parse_node_kind);
  h.arguments = strings(j, "arguments");
  h.assumed_probability = optional_label(j, "assumed_probability");
  h.assumption_justification = text_or(j, "assumption_justification");
  return h;
}

Json argument_to_json(const ArgumentNode& a) {
  return Json{{"id", a.id},
              {"polarity", polarity_name(a.polarity)},
              {"relevance", label_to_json(a.relevance)},
              {"relevance_justification", a.relevance_justification},
              {"sub_hypotheses", a.sub_hypotheses}};
}

ArgumentNode argument_from_json(const Json& j) {
  ArgumentNode a;
  a.id = text(j, "id");
  a.polarity = enum_field<Polarity>(j, "polarity", parse_polarity);
  a.relevance = optional_label(j, "relevance");
  a.relevance_justification = text_or(j, "relevance_justification");
  a.sub_hypotheses = strings(j, "sub_hypotheses");
  return a;
}

Json link_to_json(const EvidenceLink& l) {
  return Json{{"id", l.id},
              {"evidence_id", l.evidence_id},
              {"hypothesis_id", l.hypothesis_id},
              {"polarity", polarity_name(l.polarity)},
              {"relevance", label_to_json(l.relevance)},
              {"relevance_justification", l.relevance_justification},
              {"about_fact", l.about_fact}};
}

EvidenceLink link_from_json(const Json& j) {
  EvidenceLink l;
  l.id = text(j, "id");
  l.evidence_id = text(j, "evidence_id");
  l.hypothesis_id = text(j, "hypothesis_id");
  l.polarity = enum_field<Polarity>(j, "polarity", parse_polarity);
  l.relevance = optional_label(j, "relevance");
  l.relevance_justification = text_or(j, "relevance_justification");
  l.about_fact = flag_or(j, "about_fact");
  return l;
}

template <typename T, typename F>
Json array_of(const std::vector<T>& xs, F f) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(f(x));
  return a;
}

template <typename F>
auto vector_of(const Json& j, const char* key, F f) {
  std::vector<decltype(f(j))> out;
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return out;
  if (!it->is_array()) fail(std::string("'") + key + "' must be an array");
  for (const auto& x : *it) out.push_back(f(x));
  return out;
}

// Report.

std::string_view appendix_kind_name(AppendixKind k) { return k == AppendixKind::fragment ? "fragment" : "evidence"; }

Json section_to_json(const ReportSection& s) {
  return Json{{"id", s.id},          {"kind", section_kind_name(s.kind)}, {"title", s.title},
              {"text", s.text},      {"fragment", s.fragment},            {"evidence", s.evidence},
              {"edited", s.edited}};
}

ReportSection section_from_json(const Json& j) {
  ReportSection s;
  s.id = text(j, "id");
  s.kind = enum_field<SectionKind>(j, "kind", parse_section_kind);
  s.title = text_or(j, "title");
  s.text = text_or(j, "text");
  s.fragment = text_or(j, "fragment");
  s.evidence = strings(j, "evidence");
  s.edited = flag_or(j, "edited");
  return s;
}

Json appendix_to_json(const AppendixEntry& a) {
  return Json{{"anchor", a.anchor}, {"kind", appendix_kind_name(a.kind)}, {"title", a.title}, {"lines", a.lines}};
}

AppendixEntry appendix_from_json(const Json& j) {
  AppendixEntry a;
  a.anchor = text(j, "anchor");
  auto kind = text(j, "kind");
  if (kind != "fragment" && kind != "evidence") fail("bad appendix kind '" + kind + "'");
  a.kind = kind == "fragment" ? AppendixKind::fragment : AppendixKind::evidence;
  a.title = text_or(j, "title");
  a.lines = strings(j, "lines");
  return a;
}

Json edit_to_json(const ReportEdit& e) {
  return Json{{"section_id", e.section_id},
              {"author", e.author},
              {"at", format_timestamp(e.at)},
              {"previous_text", e.previous_text},
              {"new_text", e.new_text}};
}

ReportEdit edit_from_json(const Json& j) {
  return {text(j, "section_id"), text(j, "author"), time_field(j, "at"), text_or(j, "previous_text"),
          text_or(j, "new_text")};
}

Json headline_to_json(const HeadlineEntry& h) {
  return Json{{"hypothesis_id", h.hypothesis_id}, {"value", value_to_json(h.value)}, {"phrase", h.phrase}};
}

HeadlineEntry headline_from_json(const Json& j) {
  return {text(j, "hypothesis_id"), value_from_json(field(j, "value")), text(j, "phrase")};
}

// Brainstorm.

Json item_to_json(const BrainstormItem& item) {
  Json versions = Json::array();
  for (const auto& v : item.versions)
    versions.push_back(Json{{"version_id", v.version_id},
                            {"text", v.text},
                            {"author", v.author},
                            {"created_at", format_timestamp(v.created_at)},
                            {"votes", v.votes}});
  Json rejections = Json::array();
  for (const auto& r : item.rejected_by)
    rejections.push_back(Json{{"participant", r.participant}, {"justification", r.justification}});
  auto team = team_version(item);
  Json j{{"id", item.id},
         {"kind", item_kind_name(item.kind)},
         {"parent_id", item.parent_id},
         {"proposer", item.proposer}};
  if (item.kind == ItemKind::evidence_association) {
    j["evidence_id"] = item.evidence_id;
    j["polarity"] = polarity_name(item.polarity);
  }
  j["deleted"] = item.deleted;
  j["team_version"] = team ? Json(team->version_id) : Json(nullptr);
  j["versions"] = std::move(versions);
  j["rejected_by"] = std::move(rejections);
  return j;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(e.what());
  }
}

Json label_to_json(const std::optional<Label>& l) { return l ? Json(label_token(*l)) : Json(nullptr); }

std::optional<Label> label_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  if (!j.is_string()) fail("label must be a string");
  auto s = j.get<std::string>();
  auto l = parse_label(s);
  if (!l) fail("unknown probability label '" + s + "'");
  return l;
}

Json catalog_to_json(const CatalogEvidence& e) {
  return Json{{"id", e.id},
              {"name", e.name},
              {"body", e.body},
              {"source_kind", e.source_kind ? optional_text(source_kind_name(*e.source_kind)) : Json(nullptr)}};
}

CatalogEvidence catalog_from_json(const Json& j) {
  return guarded([&] {
    return CatalogEvidence{text(j, "id"), text_or(j, "name"), text_or(j, "body"),
          optional_enum<SourceKind>(j, "source_kind", parse_source_kind)};
  });
}

Json tree_to_json(const AnalysisTree& t) {
  return Json{{"question", t.question},
              {"top_hypotheses", t.top_hypotheses},
              {"evidence", array_of(t.evidence, evidence_to_json)},
              {"hypotheses", array_of(t.hypotheses, hypothesis_to_json)},
              {"arguments", array_of(t.arguments, argument_to_json)},
              {"links", array_of(t.links, link_to_json)}};
}

AnalysisTree tree_from_json(const Json& j) {
  return guarded([&] {
    AnalysisTree t;
    t.question = text_or(j, "question");
    t.top_hypotheses = strings(j, "top_hypotheses");
    t.evidence = vector_of(j, "evidence", evidence_from_json);
    t.hypotheses = vector_of(j, "hypotheses", hypothesis_from_json);
    t.arguments = vector_of(j, "arguments", argument_from_json);
    t.links = vector_of(j, "links", link_from_json);
    return t;
  });
}

Json computed_to_json(const ComputedValues& c) {
  Json hyps = Json::object();
  for (const auto& [id, v] : c.hypotheses)
    hyps[id] = Json{{"support_for", label_token(v.balance.support_for)},
                    {"support_against", label_token(v.balance.support_against)},
                    {"dissonant", v.balance.dissonant},
                    {"value", value_to_json(v.value)}};
  Json args = Json::object();
  for (const auto& [id, l] : c.argument_forces) args[id] = label_token(l);
  Json links = Json::object();
  for (const auto& [id, l] : c.link_forces) links[id] = label_token(l);
  Json warnings = Json::array();
  for (const auto& w : c.warnings) warnings.push_back(Json{{"target", w.target}, {"unset", unset_input_name(w.what)}});
  return Json{{"hypotheses", hyps}, {"argument_forces", args}, {"link_forces", links}, {"warnings", warnings}};
}

Json findings_to_json(const std::vector<Finding>& findings) {
  Json a = Json::array();
  for (const auto& f : findings)
    a.push_back(Json{{"severity", severity_name(f.severity)},
                     {"code", f.code},
                     {"target", f.target},
                     {"message", f.message}});
  return a;
}

Json report_to_json(const Report& r) {
  return Json{{"question", r.question},
              {"ranking", array_of(r.ranking, headline_to_json)},
              {"headline", r.headline},
              {"alternatives", r.alternatives},
              {"sections", array_of(r.sections, section_to_json)},
              {"appendix", array_of(r.appendix, appendix_to_json)},
              {"history", array_of(r.history, edit_to_json)}};
}

Report report_from_json(const Json& j) {
  return guarded([&] {
    Report r;
    r.question = text_or(j, "question");
    r.ranking = vector_of(j, "ranking", headline_from_json);
    r.headline = text_or(j, "headline");
    r.alternatives = text_or(j, "alternatives");
    r.sections = vector_of(j, "sections", section_from_json);
    r.appendix = vector_of(j, "appendix", appendix_from_json);
    r.history = vector_of(j, "history", edit_from_json);
    return r;
  });
}

Json checklist_to_json(const std::vector<ChecklistEntry>& list) {
  Json a = Json::array();
  for (const auto& e : list)
    a.push_back(Json{{"criterion", e.criterion},
                     {"title", e.title},
                     {"status", checklist_status_name(e.status)},
                     {"detail", e.detail}});
  return a;
}

Json overrides_to_json(const Overrides& o) {
  Json j = Json::object();
  for (const auto& [id, l] : o) j[id] = label_token(l);
  return j;
}

Overrides overrides_from_json(const Json& j) {
  return guarded([&] {
    if (!j.is_object()) fail("overrides must be an object of id -> label");
    Overrides o;
    for (const auto& [id, v] : j.items()) {
      auto l = label_from_json(v);
      if (!l) fail("override for " + id + " must be a label");
      o[id] = *l;
    }
    return o;
  });
}

Json document_to_json(const AnalysisDocument& doc) {
  Json j{{"schema", kAnalysisSchema}};
  auto tree = tree_to_json(doc.tree);
  for (auto& [k, v] : tree.items()) j[k] = v;
  if (doc.tree.computed) j["computed"] = computed_to_json(*doc.tree.computed);
  if (!doc.findings.empty()) j["findings"] = findings_to_json(doc.findings);
  if (doc.report) j["report"] = report_to_json(*doc.report);
  return j;
}

AnalysisDocument document_from_json(const Json& j) {
  return guarded([&] {
    auto schema = text(j, "schema");
    if (schema != kAnalysisSchema) fail("unsupported schema '" + schema + "'");
    AnalysisDocument doc;
    doc.tree = tree_from_json(j);
    if (auto it = j.find("report"); it != j.end() && !it->is_null()) doc.report = report_from_json(*it);
    return doc;
  });
}

std::string save_document(const AnalysisDocument& doc) { return document_to_json(doc).dump(2) + "\n"; }

AnalysisDocument load_document(std::string_view text) { return document_from_json(parse_json(text)); }

Json brainstorm_state_to_json(const BrainstormState& s) {
  Json items = Json::array();
  for (const auto& [_, item] : s.items) items.push_back(item_to_json(item));
  Json incomplete = Json::array();
  for (const auto& [p, item] : s.incomplete) incomplete.push_back(Json{{"participant", p}, {"item_id", item}});
  Json phases = Json::array();
  for (const auto& [p, marker] : s.phases) phases.push_back(Json{{"participant", p}, {"marker", marker}});
  Json ballots = Json::array();
  for (const auto& [id, b] : s.ballots) {
    Json assessments = Json::object();
    for (const auto& [p, l] : b.assessments) assessments[p] = label_token(l);
    ballots.push_back(Json{{"evidence_id", id},
                           {"assessments", assessments},
                           {"team_label", b.assessments.empty() ? Json(nullptr) : Json(label_token(b.team_label()))}});
  }
  return Json{{"problem_id", s.problem_id},
              {"title", s.title},
              {"description", s.description},
              {"sequence", s.sequence},
              {"members", s.members},
              {"evidence", array_of(s.evidence, catalog_to_json)},
              {"items", items},
              {"incomplete", incomplete},
              {"phases", phases},
              {"ballots", ballots}};
}

Json task_to_json(const Task& t) {
  return Json{{"kind", task_kind_name(t.kind)}, {"target", t.target}, {"description", t.description}};
}

Json team_to_json(const Team& t) {
  Json members = Json::array();
  for (const auto& m : t.members)
    members.push_back(Json{{"participant", m.participant},
                           {"joined_at", m.joined_at ? Json(format_timestamp(*m.joined_at)) : Json(nullptr)}});
  return Json{{"id", t.id},
              {"status", t.status == TeamStatus::open ? "open" : "closed"},
              {"opened_at", format_timestamp(t.opened_at)},
              {"closed_at", t.closed_at ? Json(format_timestamp(*t.closed_at)) : Json(nullptr)},
              {"close_reason", t.close_reason},
              {"members", members}};
}

Json roster_to_json(const TeamRoster& r) {
  return Json{{"policy", roster_policy_name(r.policy)},
              {"clock", r.clock ? Json(format_timestamp(*r.clock)) : Json(nullptr)},
              {"teams", array_of(r.teams, team_to_json)}};
}

Json brainstorm_payload(const BrainstormEvent& e) {
  return std::visit(
      overloaded{
          [](const event::Create& c) {
            return Json{{"problem_id", c.problem_id},
                        {"title", c.title},
                        {"description", c.description},
                        {"question", c.question},
                        {"evidence", array_of(c.evidence, catalog_to_json)}};
          },
          [](const event::Join&) { return Json::object(); },
          [](const event::Propose& p) {
            return Json{{"kind", item_kind_name(p.kind)}, {"parent_id", p.parent_id}, {"text", p.text}};
          },
          [](const event::Reformulate& r) { return Json{{"item_id", r.item_id}, {"text", r.text}}; },
          [](const event::Vote& v) { return Json{{"item_id", v.item_id}, {"version_id", v.version_id}}; },
          [](const event::Reject& r) { return Json{{"item_id", r.item_id}, {"justification", r.justification}}; },
          [](const event::AssociateEvidence& a) {
            return Json{{"argument_id", a.argument_id},
                        {"evidence_id", a.evidence_id},
                        {"polarity", polarity_name(a.polarity)},
                        {"note", a.note}};
          },
          [](const event::AssessCredibility& a) {
            return Json{{"evidence_id", a.evidence_id}, {"label", label_token(a.label)}};
          },
          [](const event::MarkReviewed& m) { return Json{{"target", m.target}}; },
      },
      e);
}

BrainstormEvent brainstorm_event_from(std::string_view kind, const Json& p) {
  return guarded([&]() -> BrainstormEvent {
    if (kind == "create")
      return event::Create{text(p, "problem_id"), text_or(p, "title"), text_or(p, "description"), text(p, "question"),
                           vector_of(p, "evidence", catalog_from_json)};
    if (kind == "join") return event::Join{};
    if (kind == "propose")
      return event::Propose{enum_field<ItemKind>(p, "kind", parse_item_kind), text_or(p, "parent_id"), text(p, "text")};
    if (kind == "reformulate") return event::Reformulate{text(p, "item_id"), text(p, "text")};
    if (kind == "vote") return event::Vote{text(p, "item_id"), text(p, "version_id")};
    if (kind == "reject") return event::Reject{text(p, "item_id"), text_or(p, "justification")};
    if (kind == "associate_evidence")
      return event::AssociateEvidence{text(p, "argument_id"), text(p, "evidence_id"),
                                      enum_field<Polarity>(p, "polarity", parse_polarity), text_or(p, "note")};
    if (kind == "assess_credibility") return event::AssessCredibility{text(p, "evidence_id"), required_label(p, "label")};
    if (kind == "mark_reviewed") return event::MarkReviewed{text(p, "target")};
    fail("unknown brainstorm event kind '" + std::string(kind) + "'");
  });
}

Json roster_payload(const RosterEvent& e) {
  return std::visit(overloaded{
                        [](const roster_event::Configure& c) {
                          return Json{{"policy", roster_policy_name(c.policy)},
                                      {"params", config_to_json({c.params, {}})["team"]},
                                      {"participants", c.participants},
                                      {"seed", c.seed}};
                        },
                        [](const roster_event::Join& j) { return Json{{"token", j.token}}; },
                        [](const roster_event::Tick&) { return Json::object(); },
                    },
                    e);
}

RosterEvent roster_event_from(std::string_view kind, const Json& p) {
  return guarded([&]() -> RosterEvent {
    if (kind == "configure") {
      roster_event::Configure c;
      c.policy = enum_field<RosterPolicy>(p, "policy", parse_roster_policy);
      if (auto it = p.find("params"); it != p.end()) c.params = config_from_json(Json{{"team", *it}}).team;
      c.participants = strings(p, "participants");
      if (auto it = p.find("seed"); it != p.end()) c.seed = it->get<std::uint64_t>();
      return c;
    }
    if (kind == "join") return roster_event::Join{text(p, "token")};
    if (kind == "tick") return roster_event::Tick{};
    fail("unknown roster event kind '" + std::string(kind) + "'");
  });
}

Json analysis_payload(const AnalysisEvent& e) {
  return std::visit(
      overloaded{
          [](const analysis_event::Import& i) { return Json{{"tree", tree_to_json(i.tree)}}; },
          [](const analysis_event::AddEvidence& a) { return Json{{"item", evidence_to_json(a.item)}}; },
          [](const analysis_event::AddHypothesis& a) {
            return Json{{"node", hypothesis_to_json(a.node)}, {"top", a.top}};
          },
          [](const analysis_event::AddArgument& a) {
            return Json{{"parent_id", a.parent_id}, {"node", argument_to_json(a.node)}};
          },
          [](const analysis_event::AddLink& a) { return Json{{"link", link_to_json(a.link)}}; },
          [](const analysis_event::AssessCredibility& a) {
            return Json{{"evidence_id", a.evidence_id},
                        {"label", label_token(a.label)},
                        {"justification", a.justification}};
          },
          [](const analysis_event::AssessRelevance& a) {
            return Json{{"target", a.target}, {"label", label_token(a.label)}, {"justification", a.justification}};
          },
          [](const analysis_event::SetAssumption& a) {
            return Json{{"hypothesis_id", a.hypothesis_id},
                        {"label", label_token(a.label)},
                        {"justification", a.justification}};
          },
          [](const analysis_event::SetSourceKind& a) {
            return Json{{"evidence_id", a.evidence_id}, {"kind", source_kind_name(a.kind)}};
          },
          [](const analysis_event::GenerateReport&) { return Json::object(); },
          [](const analysis_event::EditSection& a) { return Json{{"section_id", a.section_id}, {"text", a.text}}; },
      },
      e);
}

AnalysisEvent analysis_event_from(std::string_view kind, const Json& p) {
  return guarded([&]() -> AnalysisEvent {
    if (kind == "import") return analysis_event::Import{tree_from_json(field(p, "tree"))};
    if (kind == "add_evidence") return analysis_event::AddEvidence{evidence_from_json(field(p, "item"))};
    if (kind == "add_hypothesis")
      return analysis_event::AddHypothesis{hypothesis_from_json(field(p, "node")), flag_or(p, "top")};
    if (kind == "add_argument")
      return analysis_event::AddArgument{text(p, "parent_id"), argument_from_json(field(p, "node"))};
    if (kind == "add_link") return analysis_event::AddLink{link_from_json(field(p, "link"))};
    if (kind == "assess_credibility")
      return analysis_event::AssessCredibility{text(p, "evidence_id"), required_label(p, "label"),
                                               text_or(p, "justification")};
    if (kind == "assess_relevance")
      return analysis_event::AssessRelevance{text(p, "target"), required_label(p, "label"), text_or(p, "justification")};
    if (kind == "set_assumption")
      return analysis_event::SetAssumption{text(p, "hypothesis_id"), required_label(p, "label"),
                                           text_or(p, "justification")};
    if (kind == "set_source_kind")
      return analysis_event::SetSourceKind{text(p, "evidence_id"), enum_field<SourceKind>(p, "kind", parse_source_kind)};
    if (kind == "generate_report") return analysis_event::GenerateReport{};
    if (kind == "edit_section") return analysis_event::EditSection{text(p, "section_id"), text(p, "text")};
    fail("unknown analysis event kind '" + std::string(kind) + "'");
  });
}

Json config_to_json(const Config& c) {
  const auto& t = c.team;
  return Json{{"team",
               {{"max_size", t.max_size},
                {"early_close_size", t.early_close_size},
                {"window1", format_duration(t.window1)},
                {"fallback_size", t.fallback_size},
                {"window2", format_duration(t.window2)},
                {"internal_min", t.internal_min},
                {"internal_max", t.internal_max},
                {"internal_target", t.internal_target}}},
              {"analytics",
               {{"min_developed_hypotheses", c.analytics.min_developed_hypotheses},
                {"min_evidence_items", c.analytics.min_evidence_items}}}};
}

Config config_from_json(const Json& j) {
  return guarded([&] {
    Config c;
    if (!j.is_object()) fail("config must be an object");
    auto number = [](const Json& o, const char* key, int fallback) {
      auto it = o.find(key);
      return it == o.end() ? fallback : it->get<int>();
    };
    if (auto it = j.find("team"); it != j.end()) {
      auto& t = c.team;
      const auto& o = *it;
      t.max_size = number(o, "max_size", t.max_size);
      t.early_close_size = number(o, "early_close_size", t.early_close_size);
      t.window1 = duration_field(o, "window1", t.window1);
      t.fallback_size = number(o, "fallback_size", t.fallback_size);
      t.window2 = duration_field(o, "window2", t.window2);
      t.internal_min = number(o, "internal_min", t.internal_min);
      t.internal_max = number(o, "internal_max", t.internal_max);
      t.internal_target = number(o, "internal_target", t.internal_target);
      if (t.internal_min < 1 || t.internal_min > t.internal_target || t.internal_target > t.internal_max ||
          t.fallback_size < 1 || t.fallback_size > t.max_size || t.window1 > t.window2)
        throw Error(Errc::domain, "inconsistent team parameters");
    }
    if (auto it = j.find("analytics"); it != j.end()) {
      c.analytics.min_developed_hypotheses =
          number(*it, "min_developed_hypotheses", c.analytics.min_developed_hypotheses);
      c.analytics.min_evidence_items = number(*it, "min_evidence_items", c.analytics.min_evidence_items);
    }
    return c;
  });
}

}  // namespace wigmore
