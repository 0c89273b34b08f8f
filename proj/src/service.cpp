#include "wigmore/service.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "wigmore/analytics.hpp"
#include "wigmore/error.hpp"
#include "wigmore/report.hpp"

namespace wigmore {

namespace {

constexpr std::string_view kSystemActor = "system";
constexpr std::string_view kProblemDocument = "problem.json";

class Conflict : public Error {
 public:
  Conflict(std::int64_t current, const std::string& what) : Error(Errc::conflict, what), current_(current) {}
  std::int64_t current() const { return current_; }

 private:
  std::int64_t current_;
};

class MissingCredentials : public Error {
 public:
  MissingCredentials() : Error(Errc::unauthorized, "missing bearer token") {}
};

std::vector<std::string> split_path(std::string_view path) {
  std::vector<std::string> out;
  while (!path.empty()) {
    auto slash = path.find('/');
    auto part = path.substr(0, slash);
    if (!part.empty()) out.emplace_back(part);
    if (slash == std::string_view::npos) break;
    path.remove_prefix(slash + 1);
  }
  return out;
}

int status_of(Errc code) {
  switch (code) {
    case Errc::parse: return 400;
    case Errc::unauthorized: return 403;
    case Errc::unknown_id: return 404;
    case Errc::conflict:
    case Errc::not_ready: return 409;
    case Errc::io: return 500;
    case Errc::domain:
    case Errc::precondition:
    case Errc::locked_token:
    case Errc::not_renderable:
    case Errc::structural: return 422;
  }
  return 500;
}

HttpResponse json_response(int status, const Json& body) { return {status, "application/json", body.dump() + "\n"}; }

HttpResponse error_response(const Error& e, int status) {
  Json body{{"error", errc_name(e.code())}, {"message", e.what()}};
  if (const auto* c = dynamic_cast<const Conflict*>(&e)) body["current_sequence"] = c->current();
  if (const auto* s = dynamic_cast<const StructuralErrors*>(&e)) {
    Json errors = Json::array();
    for (const auto& err : s->errors())
      errors.push_back(Json{{"code", structural_defect_code(err.defect)}, {"target", err.target}, {"message", err.message}});
    body["errors"] = errors;
  }
  return json_response(status, body);
}

std::string random_token() {
  std::random_device rd;
  std::string out;
  char buf[9];
  for (int i = 0; i < 4; ++i) {
    std::snprintf(buf, sizeof buf, "%08x", rd());
    out += buf;
  }
  return out;
}

std::int64_t stream_sequence(const ProblemState& p, std::string_view stream) {
  if (stream == kRosterStream) return p.roster.sequence;
  auto colon = stream.find(':');
  auto key = std::string(stream.substr(colon + 1));
  if (stream.starts_with("brainstorm:")) {
    auto it = p.brainstorms.find(key);
    return it == p.brainstorms.end() ? 0 : it->second.sequence;
  }
  auto it = p.analyses.find(key);
  return it == p.analyses.end() ? 0 : it->second.sequence;
}

event::Create create_event(const ProblemDefinition& d) {
  return {d.id, d.title, d.description, d.question, d.evidence};
}

AnalysisTree with_computed(AnalysisTree t) {
  if (validate(t).empty()) t = propagate(std::move(t));
  return t;
}

}  // namespace

Json problem_to_json(const ProblemDefinition& p) {
  Json evidence = Json::array();
  for (const auto& e : p.evidence) evidence.push_back(catalog_to_json(e));
  return Json{{"problem_id", p.id},       {"title", p.title},   {"description", p.description},
              {"question", p.question},   {"evidence", evidence}, {"policy", roster_policy_name(p.policy)},
              {"participants", p.participants}, {"seed", p.seed}};
}

ProblemDefinition problem_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw Error(Errc::parse, "problem must be an object");
    ProblemDefinition p;
    p.id = j.at("problem_id").get<std::string>();
    p.title = j.value("title", "");
    p.description = j.value("description", "");
    p.question = j.at("question").get<std::string>();
    for (const auto& e : j.value("evidence", Json::array())) p.evidence.push_back(catalog_from_json(e));
    auto policy = parse_roster_policy(j.value("policy", "ad_hoc"));
    if (!policy) throw Error(Errc::parse, "bad policy '" + j.value("policy", "") + "'");
    p.policy = *policy;
    p.participants = j.value("participants", std::vector<std::string>{});
    p.seed = j.value("seed", std::uint64_t{0});
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse, e.what());
  }
}

void apply_record(ProblemState& p, const EventRecord& r) {
  auto current = stream_sequence(p, r.stream);
  if (r.sequence != current + 1)
    throw Conflict(current, r.stream + " expects sequence " + std::to_string(current + 1) + ", got " +
                                std::to_string(r.sequence));
  if (r.stream == kRosterStream) {
    p.roster = apply_roster_event(p.roster, roster_event_from(r.kind, r.payload), r.actor, r.timestamp);
  } else if (r.stream.starts_with("brainstorm:")) {
    auto team = r.stream.substr(std::string_view("brainstorm:").size());
    auto it = p.brainstorms.find(team);
    BrainstormState base = it == p.brainstorms.end() ? BrainstormState{} : it->second;
    p.brainstorms[team] = apply_event(std::move(base), brainstorm_event_from(r.kind, r.payload), r.actor, r.timestamp);
  } else if (r.stream.starts_with("analysis:")) {
    auto owner = r.stream.substr(std::string_view("analysis:").size());
    auto it = p.analyses.find(owner);
    AnalysisState base;
    if (it == p.analyses.end()) {
      base.owner = owner;
    } else {
      base = it->second;
    }
    p.analyses[owner] = apply_analysis_event(std::move(base), analysis_event_from(r.kind, r.payload), r.actor, r.timestamp);
  } else {
    throw Error(Errc::domain, "unknown stream " + r.stream);
  }
}

std::optional<ProblemState> replay_problem(const EventStore& store, std::string_view problem_id) {
  auto doc = store.read_document(problem_id, kProblemDocument);
  if (!doc) return std::nullopt;
  ProblemState p;
  p.definition = problem_from_json(parse_json(*doc));
  for (const auto& stream : store.streams(problem_id))
    for (const auto& r : store.read(problem_id, stream)) apply_record(p, r);
  return p;
}

struct Service::Call {
  const HttpRequest& request;
  std::vector<std::string> segments;
  Json body;

  const std::string& segment(std::size_t i) const { return segments.at(i); }
  bool is(std::string_view method, std::initializer_list<std::string_view> pattern) const {
    if (request.method != method || segments.size() != pattern.size()) return false;
    std::size_t i = 0;
    for (auto part : pattern) {
      if (part != "*" && segments[i] != part) return false;
      ++i;
    }
    return true;
  }
  std::int64_t expected_sequence() const {
    auto it = body.find("expected_sequence");
    if (it == body.end() || !it->is_number_integer())
      throw Error(Errc::parse, "expected_sequence (integer) is required");
    return it->get<std::int64_t>();
  }
};

Service::Service(ServiceOptions options) : options_(std::move(options)), store_(options_.storage) {
  if (!options_.token_source) options_.token_source = random_token;
  for (const auto& id : store_.problems()) {
    auto p = replay_problem(store_, id);
    if (!p) continue;
    // Repairs writes interrupted between the problem document and the roster,
    // or between a roster join and the team's brainstorm join.
    if (p->roster.sequence == 0) {
      roster_event::Configure c{p->definition.policy, options_.config.team, p->definition.participants,
                                p->definition.seed};
      commit(*p, std::string(kRosterStream), 0, std::string(kSystemActor), "configure", roster_payload(c), true);
    }
    for (const auto& team : p->roster.roster.teams)
      for (const auto& m : team.members)
        if (m.joined_at) ensure_brainstorm_member(*p, m.participant);
    problems_.emplace(id, std::move(*p));
  }
}

Timestamp Service::now() const {
  if (options_.clock) return options_.clock();
  return std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
}

std::vector<std::string> Service::problems() const {
  std::lock_guard lock(mutex_);
  std::vector<std::string> out;
  for (const auto& [id, _] : problems_) out.push_back(id);
  return out;
}

std::optional<ProblemState> Service::snapshot(std::string_view problem_id) const {
  std::lock_guard lock(mutex_);
  auto it = problems_.find(problem_id);
  if (it == problems_.end()) return std::nullopt;
  return it->second;
}

EventRecord Service::commit(ProblemState& p, const std::string& stream, std::int64_t expected, const std::string& actor,
                            const std::string& kind, Json payload, bool match_payload) {
  auto current = stream_sequence(p, stream);
  if (expected != current) {
    if (expected >= 0 && expected < current) {
      auto stored = store_.read(p.definition.id, stream).at(static_cast<std::size_t>(expected));
      if (stored.actor == actor && stored.kind == kind && (!match_payload || stored.payload == payload)) return stored;
    }
    throw Conflict(current, stream + " is at sequence " + std::to_string(current));
  }
  EventRecord r{p.definition.id, stream, current + 1, now(), actor, kind, std::move(payload)};
  ProblemState next = p;
  apply_record(next, r);
  store_.append(r);
  p = std::move(next);
  return r;
}

void Service::ensure_brainstorm_member(ProblemState& p, const std::string& participant) {
  const auto* team = p.roster.roster.team_of(participant);
  if (!team) return;
  const auto team_id = team->id;  // commit replaces the roster
  auto stream = brainstorm_stream(team_id);
  auto it = p.brainstorms.find(team_id);
  if (it == p.brainstorms.end() || !it->second.created())
    commit(p, stream, 0, std::string(kSystemActor), "create", brainstorm_payload(create_event(p.definition)), true);
  const auto& state = p.brainstorms.at(team_id);
  if (!state.is_member(participant))
    commit(p, stream, state.sequence, participant, "join", Json::object(), true);
}

std::string Service::authenticate(const Call& call, const ProblemState& p) const {
  auto it = call.request.headers.find("authorization");
  if (it == call.request.headers.end()) throw MissingCredentials();
  std::string_view value = it->second;
  constexpr std::string_view kBearer = "Bearer ";
  if (!value.starts_with(kBearer)) throw Error(Errc::unauthorized, "malformed authorization header");
  auto who = p.roster.participant_of(value.substr(kBearer.size()));
  if (!who) throw Error(Errc::unauthorized, "unknown token for problem " + p.definition.id);
  return *who;
}

HttpResponse Service::handle(const HttpRequest& request) {
  Call call{request, split_path(request.path), Json::object()};
  try {
    if (request.method == "POST") {
      if (!request.body.empty()) call.body = parse_json(request.body);
      if (!call.body.is_object()) throw Error(Errc::parse, "request body must be a JSON object");
    }
    std::lock_guard lock(mutex_);
    return dispatch(call);
  } catch (const Error& e) {
    int status = status_of(e.code());
    if (dynamic_cast<const MissingCredentials*>(&e)) status = 401;
    return error_response(e, status);
  } catch (const std::exception& e) {
    return json_response(500, Json{{"error", "internal"}, {"message", e.what()}});
  }
}

HttpResponse Service::dispatch(Call& call) {
  const auto& seg = call.segments;
  if (call.is("GET", {"health"})) return json_response(200, Json{{"status", "ok"}});
  if (seg.empty() || seg[0] != "problems") throw Error(Errc::unknown_id, "no route for " + call.request.path);
  if (call.is("POST", {"problems"})) return create_problem(call);
  if (call.is("GET", {"problems"})) {
    Json list = Json::array();
    for (const auto& [id, p] : problems_) list.push_back(Json{{"problem_id", id}, {"title", p.definition.title}});
    return json_response(200, Json{{"problems", list}});
  }

  auto it = problems_.find(seg.at(1));
  if (it == problems_.end()) throw Error(Errc::unknown_id, "no problem " + seg.at(1));
  auto& p = it->second;

  if (call.is("GET", {"problems", "*"})) {
    auto body = problem_to_json(p.definition);
    body["roster_sequence"] = p.roster.sequence;
    return json_response(200, body);
  }
  if (call.is("POST", {"problems", "*", "join"})) return join_problem(call, p);
  if (call.is("GET", {"problems", "*", "roster"})) {
    auto view = p.roster.roster;
    auto t = now();
    if (!view.clock || *view.clock <= t) view = tick(std::move(view), t);
    return json_response(200, Json{{"sequence", p.roster.sequence}, {"roster", roster_to_json(view)}});
  }
  if (call.is("POST", {"problems", "*", "roster", "tick"})) return tick_roster(call, p);

  const auto me = authenticate(call, p);
  const auto* team = p.roster.roster.team_of(me);

  if (seg.size() >= 3 && seg[2] == "brainstorm") {
    if (!team || !p.brainstorms.count(team->id)) throw Error(Errc::not_ready, me + " has no brainstorm yet");
    const auto& state = p.brainstorms.at(team->id);
    if (call.is("GET", {"problems", "*", "brainstorm"}))
      return json_response(200, Json{{"team_id", team->id},
                                     {"sequence", state.sequence},
                                     {"state", brainstorm_state_to_json(state)}});
    if (call.is("GET", {"problems", "*", "brainstorm", "next-task"}))
      return json_response(200, Json{{"sequence", state.sequence}, {"task", task_to_json(next_task(state, me))}});
    if (call.is("POST", {"problems", "*", "brainstorm", "events"})) return post_brainstorm(call, p, me);
  }

  if (call.is("GET", {"problems", "*", "streams", "*"})) {
    const auto& stream = seg[3];
    bool allowed = stream == kRosterStream || stream == analysis_stream(me) ||
                   (team && stream == brainstorm_stream(team->id));
    if (!allowed) throw Error(Errc::unauthorized, me + " cannot read " + stream);
    std::int64_t after = 0;
    if (auto q = call.request.query.find("after"); q != call.request.query.end()) {
      auto [ptr, ec] = std::from_chars(q->second.data(), q->second.data() + q->second.size(), after);
      if (ec != std::errc{}) throw Error(Errc::parse, "after must be an integer");
    }
    Json records = Json::array();
    for (const auto& r : store_.read(p.definition.id, stream))
      if (r.sequence > after) records.push_back(record_to_json(r));
    return json_response(200, Json{{"records", records}});
  }

  if (seg.size() >= 4 && seg[2] == "analyses") {
    const auto& owner = seg[3];
    if (owner != me) throw Error(Errc::unauthorized, me + " cannot access the analysis of " + owner);
    if (call.is("POST", {"problems", "*", "analyses", "*", "import"})) return import_analysis(call, p, me);
    if (call.is("POST", {"problems", "*", "analyses", "*", "events"})) return post_analysis(call, p, me);

    AnalysisState empty;
    empty.owner = me;
    auto a = p.analyses.find(me);
    const auto& state = a == p.analyses.end() ? empty : a->second;
    if (call.is("GET", {"problems", "*", "analyses", "*"})) {
      AnalysisDocument doc{with_computed(state.tree), run_checks(state.tree, options_.config.analytics), state.report};
      return json_response(200, Json{{"sequence", state.sequence}, {"document", document_to_json(doc)}});
    }
    if (call.is("GET", {"problems", "*", "analyses", "*", "findings"})) {
      auto findings = run_checks(state.tree, options_.config.analytics);
      return json_response(200, Json{{"sequence", state.sequence},
                                     {"has_errors", has_errors(findings)},
                                     {"findings", findings_to_json(findings)}});
    }
    if (call.is("POST", {"problems", "*", "analyses", "*", "what-if"})) {
      auto it = call.body.find("overrides");
      auto overrides = it == call.body.end() ? Overrides{} : overrides_from_json(*it);
      return json_response(200, Json{{"sequence", state.sequence},
                                     {"computed", computed_to_json(what_if(state.tree, overrides))}});
    }
    if (seg.size() >= 5 && (seg[4] == "report" || seg[4] == "checklist")) {
      if (!state.report) throw Error(Errc::not_ready, "no report has been generated");
      if (call.is("GET", {"problems", "*", "analyses", "*", "report"}))
        return json_response(200, Json{{"sequence", state.sequence}, {"report", report_to_json(*state.report)}});
      if (call.is("GET", {"problems", "*", "analyses", "*", "report", "render"})) {
        auto q = call.request.query.find("format");
        auto format = parse_render_format(q == call.request.query.end() ? "plain" : q->second);
        if (!format) throw Error(Errc::parse, "format must be plain, markup or print");
        return {200, *format == RenderFormat::markup ? "text/html; charset=utf-8" : "text/plain; charset=utf-8",
                render(*state.report, *format)};
      }
      if (call.is("GET", {"problems", "*", "analyses", "*", "checklist"}))
        return json_response(200, Json{{"sequence", state.sequence},
                                       {"checklist", checklist_to_json(
                                                         quality_checklist(with_computed(state.tree), *state.report))}});
    }
  }
  throw Error(Errc::unknown_id, "no route for " + call.request.method + " " + call.request.path);
}

HttpResponse Service::create_problem(Call& call) {
  auto def = problem_from_json(call.body);
  if (!valid_name(def.id)) throw Error(Errc::domain, "problem id must match [A-Za-z0-9_-]{1,64}");
  if (def.question.find_first_not_of(" \t\n") == std::string::npos)
    throw Error(Errc::domain, "question must not be empty");
  for (const auto& person : def.participants)
    if (!valid_name(person)) throw Error(Errc::domain, "invalid participant id '" + person + "'");
  if (auto it = problems_.find(def.id); it != problems_.end()) {
    if (it->second.definition == def) return json_response(200, problem_to_json(def));
    throw Conflict(it->second.roster.sequence, "problem " + def.id + " already exists");
  }
  ProblemState p;
  p.definition = def;
  // Validate the configuration before anything is written.
  roster_event::Configure c{def.policy, options_.config.team, def.participants, def.seed};
  apply_roster_event(RosterState{}, c, kSystemActor, now());
  store_.write_document(def.id, kProblemDocument, problem_to_json(def).dump(2) + "\n");
  commit(p, std::string(kRosterStream), 0, std::string(kSystemActor), "configure", roster_payload(c), true);
  problems_.emplace(def.id, std::move(p));
  return json_response(201, problem_to_json(def));
}

HttpResponse Service::join_problem(Call& call, ProblemState& p) {
  auto expected = call.expected_sequence();
  auto participant = call.body.value("participant", "");
  if (!valid_name(participant)) throw Error(Errc::domain, "participant id must match [A-Za-z0-9_-]{1,64}");
  if (!call.body.value("training_completed", false))
    throw Error(Errc::precondition, "complete the evidence-based reasoning training before joining");
  auto record = commit(p, std::string(kRosterStream), expected, participant, "join",
                       Json{{"token", options_.token_source()}}, false);
  ensure_brainstorm_member(p, participant);
  const auto* team = p.roster.roster.team_of(participant);
  return json_response(200, Json{{"participant", participant},
                                 {"team_id", team ? team->id : ""},
                                 {"token", record.payload.at("token")},
                                 {"sequence", record.sequence}});
}

HttpResponse Service::tick_roster(Call& call, ProblemState& p) {
  auto record = commit(p, std::string(kRosterStream), call.expected_sequence(), std::string(kSystemActor), "tick",
                       Json::object(), true);
  return json_response(200, Json{{"sequence", record.sequence}, {"roster", roster_to_json(p.roster.roster)}});
}

HttpResponse Service::post_brainstorm(Call& call, ProblemState& p, const std::string& me) {
  auto expected = call.expected_sequence();
  auto kind = call.body.value("kind", "");
  if (kind == "create" || kind == "join") throw Error(Errc::precondition, kind + " events are issued by the service");
  auto payload = call.body.value("payload", Json::object());
  auto canonical = brainstorm_payload(brainstorm_event_from(kind, payload));
  const auto team = p.roster.roster.team_of(me)->id;
  auto record = commit(p, brainstorm_stream(team), expected, me, kind, std::move(canonical), true);
  return json_response(200, Json{{"sequence", record.sequence},
                                 {"state", brainstorm_state_to_json(p.brainstorms.at(team))}});
}

HttpResponse Service::import_analysis(Call& call, ProblemState& p, const std::string& me) {
  auto expected = call.expected_sequence();
  const auto* team = p.roster.roster.team_of(me);
  if (!team || !p.brainstorms.count(team->id)) throw Error(Errc::not_ready, me + " has no brainstorm yet");
  auto tree = import_informal(p.brainstorms.at(team->id), me);
  auto record = commit(p, analysis_stream(me), expected, me, "import",
                       analysis_payload(analysis_event::Import{std::move(tree)}), false);
  return json_response(200, Json{{"sequence", record.sequence}});
}

HttpResponse Service::post_analysis(Call& call, ProblemState& p, const std::string& me) {
  auto expected = call.expected_sequence();
  auto kind = call.body.value("kind", "");
  auto payload = call.body.value("payload", Json::object());
  auto canonical = analysis_payload(analysis_event_from(kind, payload));
  auto record = commit(p, analysis_stream(me), expected, me, kind, std::move(canonical), true);
  return json_response(200, Json{{"sequence", record.sequence}});
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot read config " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return config_from_json(parse_json(ss.str()));
}

ServerSettings settings_from_env(const Getenv& getenv) {
  ServerSettings s;
  if (const char* listen = getenv("WIGMORE_LISTEN")) {
    std::string_view v = listen;
    auto colon = v.rfind(':');
    auto port_text = colon == std::string_view::npos ? v : v.substr(colon + 1);
    if (colon != std::string_view::npos && colon > 0) s.host = std::string(v.substr(0, colon));
    int port = 0;
    auto [ptr, ec] = std::from_chars(port_text.data(), port_text.data() + port_text.size(), port);
    if (ec != std::errc{} || ptr != port_text.data() + port_text.size() || port <= 0 || port > 65535)
      throw Error(Errc::parse, "WIGMORE_LISTEN must be host:port");
    s.port = port;
  }
  if (const char* dir = getenv("WIGMORE_STORAGE")) s.storage = dir;
  Json config = Json::object();
  if (const char* file = getenv("WIGMORE_CONFIG")) s.config = load_config(file);
  config = config_to_json(s.config);
  for (const char* field : {"max_size", "early_close_size", "window1", "fallback_size", "window2", "internal_min",
                            "internal_max", "internal_target"}) {
    std::string name = "WIGMORE_TEAM_" + std::string(field);
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::toupper(c); });
    const char* value = getenv(name.c_str());
    if (!value) continue;
    std::string_view v = value;
    if (std::string_view(field).starts_with("window")) {
      config["team"][field] = std::string(v);
    } else {
      int n = 0;
      auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
      if (ec != std::errc{} || ptr != v.data() + v.size()) throw Error(Errc::parse, name + " must be an integer");
      config["team"][field] = n;
    }
  }
  s.config = config_from_json(config);
  return s;
}

}  // namespace wigmore
