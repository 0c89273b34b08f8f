#include "wigmore/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wigmore/analytics.hpp"
#include "wigmore/codec.hpp"
#include "wigmore/error.hpp"
#include "wigmore/http_server.hpp"
#include "wigmore/report.hpp"
#include "wigmore/service.hpp"
#include "wigmore/streams.hpp"

namespace wigmore {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << text)) throw Error(Errc::io, "cannot write " + path);
}

std::vector<EventRecord> read_script(const std::string& path) {
  auto text = read_file(path);
  // A script is written by hand; its last line need not end in a newline.
  if (!text.empty() && text.back() != '\n') text += '\n';
  return read_records(text);
}

void print_structural(const std::vector<Finding>& findings, std::ostream& err) {
  for (const auto& f : findings)
    if (f.severity == Severity::error) err << f.line() << "\n";
}

std::string relative(Timestamp t, Timestamp origin) {
  auto d = std::chrono::duration_cast<std::chrono::seconds>(t - origin);
  return d.count() == 0 ? "0h" : format_duration(d);
}

std::atomic<HttpServer*> g_server{nullptr};

extern "C" void on_signal(int) {
  if (auto* s = g_server.load()) s->stop();
}

struct Options {
  std::string input;
  std::string output;
  std::string format = "plain";
  std::string config;
  std::uint64_t seed = 0;
  std::string listen;
  std::string storage;
};

Config config_of(const Options& o) { return o.config.empty() ? Config{} : load_config(o.config); }

int cmd_replay(const Options& o, std::ostream& out) {
  auto state = replay_script(read_script(o.input));
  out << brainstorm_listing(state);
  if (!o.output.empty()) write_output(o.output, brainstorm_state_to_json(state).dump(2) + "\n", out);
  return exit_code::ok;
}

int cmd_analyze(const Options& o, std::ostream& out, std::ostream& err) {
  auto doc = load_document(read_file(o.input));
  auto config = config_of(o);
  auto findings = run_checks(doc.tree, config.analytics);
  if (has_errors(findings)) {
    print_structural(findings, err);
    return exit_code::domain;
  }
  doc.tree = propagate(std::move(doc.tree));
  doc.findings = findings;
  for (const auto& h : doc.tree.hypotheses) {
    const auto& v = doc.tree.computed->hypotheses.at(h.id).value;
    out << h.id << " " << direction_name(v.direction) << " " << label_phrase(v.strength) << ": " << h.statement
        << "\n";
  }
  if (!o.output.empty()) write_output(o.output, save_document(doc), out);
  return exit_code::ok;
}

int cmd_check(const Options& o, std::ostream& out) {
  auto doc = load_document(read_file(o.input));
  auto findings = run_checks(doc.tree, config_of(o).analytics);
  std::string text;
  for (const auto& f : findings) text += f.line() + "\n";
  write_output(o.output, text, out);
  return has_errors(findings) ? exit_code::domain : exit_code::ok;
}

int cmd_report(const Options& o, std::ostream& out, std::ostream& err) {
  auto format = parse_render_format(o.format);
  if (!format) throw Error(Errc::parse, "--format must be plain, markup or print");
  auto doc = load_document(read_file(o.input));
  auto findings = run_checks(doc.tree, config_of(o).analytics);
  if (has_errors(findings)) {
    print_structural(findings, err);
    return exit_code::domain;
  }
  auto tree = propagate(std::move(doc.tree));
  auto report = doc.report ? regenerate_report(*doc.report, tree) : generate_report(tree);
  write_output(o.output, render(report, *format), out);
  return exit_code::ok;
}

int cmd_simulate(const Options& o, const CLI::App& sub, std::ostream& out) {
  std::optional<std::uint64_t> seed;
  if (sub.count("--seed")) seed = o.seed;
  auto text = simulate_teams(read_script(o.input), config_of(o).team, seed);
  write_output(o.output, text, out);
  return exit_code::ok;
}

int cmd_serve(const Options& o, std::ostream& out) {
  auto settings = settings_from_env([](const char* name) { return std::getenv(name); });
  if (!o.config.empty()) settings.config = load_config(o.config);
  if (!o.storage.empty()) settings.storage = o.storage;
  if (!o.listen.empty()) {
    auto overridden = settings_from_env([&](const char* name) -> const char* {
      return std::string_view(name) == "WIGMORE_LISTEN" ? o.listen.c_str() : nullptr;
    });
    settings.host = overridden.host;
    settings.port = overridden.port;
  }
  Service service(ServiceOptions{settings.storage, settings.config, {}, {}});
  HttpServer server(service);
  int port = server.bind(settings.host, settings.port);
  out << "listening on " << settings.host << ":" << port << " storage " << settings.storage.string() << std::endl;
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  server.run();
  g_server = nullptr;
  return exit_code::ok;
}

}  // namespace

BrainstormState replay_script(const std::vector<EventRecord>& script) {
  BrainstormState state;
  std::size_t line = 0;
  for (const auto& r : script) {
    ++line;
    try {
      state = apply_event(std::move(state), brainstorm_event_from(r.kind, r.payload), r.actor, r.timestamp);
    } catch (const Error& e) {
      throw Error(e.code(), "record " + std::to_string(line) + ": " + e.what());
    }
  }
  return state;
}

std::string brainstorm_listing(const BrainstormState& state) {
  std::ostringstream out;
  auto version_line = [&](const BrainstormItem& item, int depth, const std::string& extra) {
    auto v = team_version(item);
    out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << item.id << extra << " ";
    if (v) {
      out << "[" << v->version_id << ", " << v->votes.size() << " votes] " << v->text;
    } else {
      out << "[no team version]";
    }
    out << "\n";
  };
  if (const auto* q = state.find_live_item(kQuestionItem)) version_line(*q, 0, "");
  for (const auto* a : state.live_items(ItemKind::answer)) {
    version_line(*a, 1, "");
    for (const auto* r : state.live_items(ItemKind::informal_argument, a->id)) {
      version_line(*r, 2, "");
      for (const auto* x : state.live_items(ItemKind::evidence_association, r->id))
        version_line(*x, 3, " " + std::string(polarity_name(x->polarity)) + " " + x->evidence_id);
    }
  }
  for (const auto& [id, ballot] : state.ballots) {
    out << id << " credibility " << label_phrase(ballot.team_label()) << " from";
    for (const auto& [who, label] : ballot.assessments) out << " " << who << "=" << label_abbrev(label);
    out << "\n";
  }
  return out.str();
}

std::string simulate_teams(const std::vector<EventRecord>& script, const TeamPolicy& params,
                           std::optional<std::uint64_t> seed) {
  std::ostringstream out;
  RosterState state;
  if (script.empty()) return "";
  const auto origin = script.front().timestamp;
  auto report_closures = [&](const TeamRoster& before, const TeamRoster& after) {
    for (const auto& t : after.teams) {
      const auto* old = before.find_team(t.id);
      if (t.status == TeamStatus::closed && (!old || old->status == TeamStatus::open))
        out << t.id << " closed at " << relative(*t.closed_at, t.opened_at) << ", size " << t.size() << " ("
            << t.close_reason << ")\n";
    }
  };
  std::size_t line = 0;
  for (const auto& r : script) {
    ++line;
    try {
      auto event = roster_event_from(r.kind, r.kind == "join" && !r.payload.contains("token")
                                                 ? Json{{"token", "sim-" + r.actor}}
                                                 : r.payload);
      if (auto* c = std::get_if<roster_event::Configure>(&event); c && seed) c->seed = *seed;
      if (!state.configured && !std::holds_alternative<roster_event::Configure>(event))
        state = apply_roster_event(std::move(state), roster_event::Configure{RosterPolicy::ad_hoc, params, {}, seed.value_or(0)},
                                   "system", r.timestamp);
      auto before = state.roster;
      state = apply_roster_event(std::move(state), event, r.actor, r.timestamp);
      auto at = relative(r.timestamp, origin);
      if (r.kind == "join") {
        const auto* team = state.roster.team_of(r.actor);
        out << "+" << at << " join " << r.actor << " -> " << team->id << " (size " << team->size() << ")\n";
      } else if (r.kind == "configure") {
        out << "+" << at << " configure " << roster_policy_name(state.roster.policy) << "\n";
        for (const auto& t : state.roster.teams) {
          out << t.id << ":";
          for (const auto& m : t.members) out << " " << m.participant;
          out << "\n";
        }
        continue;
      } else {
        out << "+" << at << " tick\n";
      }
      report_closures(before, state.roster);
    } catch (const Error& e) {
      throw Error(e.code(), "record " + std::to_string(line) + ": " + e.what());
    }
  }
  return out.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evidence-based argumentation workbench", args.empty() ? "wigmore" : args.front()};
  app.require_subcommand(1);
  Options o;
  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--listen", o.listen, "host:port (default from WIGMORE_LISTEN or 127.0.0.1:8080)");
  serve->add_option("--storage", o.storage, "Storage directory (default from WIGMORE_STORAGE)");
  serve->add_option("--config", o.config, "Config file")->check(CLI::ExistingFile);

  auto* replay = app.add_subcommand("replay", "Apply a brainstorm event script and print the final state");
  auto* analyze = app.add_subcommand("analyze", "Propagate an analysis document");
  auto* check = app.add_subcommand("check", "Print analytics findings");
  auto* report = app.add_subcommand("report", "Render the report of an analysis document");
  auto* simulate = app.add_subcommand("simulate-teams", "Run a team-formation script and print the timeline");
  for (auto* sub : {replay, analyze, check, report, simulate}) {
    sub->add_option("--input,-i", o.input, "Input file")->required()->check(CLI::ExistingFile);
    sub->add_option("--output,-o", o.output, "Output file");
  }
  for (auto* sub : {analyze, check, report, simulate})
    sub->add_option("--config", o.config, "Config file")->check(CLI::ExistingFile);
  report->add_option("--format,-f", o.format, "plain, markup or print")
      ->check(CLI::IsMember({"plain", "markup", "print"}));
  simulate->add_option("--seed", o.seed, "Seed for random-fixed assignment");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("wigmore");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::usage;
  }

  try {
    if (*serve) return cmd_serve(o, out);
    if (*replay) return cmd_replay(o, out);
    if (*analyze) return cmd_analyze(o, out, err);
    if (*check) return cmd_check(o, out);
    if (*report) return cmd_report(o, out, err);
    if (*simulate) return cmd_simulate(o, *simulate, out);
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return e.code() == Errc::parse || e.code() == Errc::io ? exit_code::usage : exit_code::domain;
  }
  return exit_code::usage;
}

}  // namespace wigmore
