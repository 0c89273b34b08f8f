#pragma once

// Workflow service: problems, team formation, brainstorming, per-participant
// formal analysis and reports, all backed by the event store. `handle` is
// transport independent; http_server.hpp binds it to a socket.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wigmore/brainstorm.hpp"
#include "wigmore/codec.hpp"
#include "wigmore/store.hpp"
#include "wigmore/streams.hpp"

namespace wigmore {

struct ProblemDefinition {
  std::string id;
  std::string title;
  std::string description;
  std::string question;
  std::vector<CatalogEvidence> evidence;
  RosterPolicy policy = RosterPolicy::ad_hoc;
  std::vector<std::string> participants;  // random_fixed only
  std::uint64_t seed = 0;

  bool operator==(const ProblemDefinition&) const = default;
};

Json problem_to_json(const ProblemDefinition& p);
ProblemDefinition problem_from_json(const Json& j);

/// Everything derived from one problem's streams.
struct ProblemState {
  ProblemDefinition definition;
  RosterState roster;
  std::map<std::string, BrainstormState, NaturalLess> brainstorms;  // by team id
  std::map<std::string, AnalysisState, NaturalLess> analyses;       // by participant

  bool operator==(const ProblemState&) const = default;
};

/// Folds one record into the state. Throws like the stream's state machine.
void apply_record(ProblemState& state, const EventRecord& record);

/// Rebuilds a problem from storage. Returns nullopt when no problem.json exists.
std::optional<ProblemState> replay_problem(const EventStore& store, std::string_view problem_id);

struct HttpRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::map<std::string, std::string> headers;  // lower-case names
  std::string body;
};

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

struct ServiceOptions {
  std::filesystem::path storage;
  Config config;
  std::function<Timestamp()> clock;          // defaults to the system clock
  std::function<std::string()> token_source;  // defaults to 128 random bits in hex
};

class Service {
 public:
  /// Replays every problem found in storage.
  explicit Service(ServiceOptions options);

  HttpResponse handle(const HttpRequest& request);

  std::vector<std::string> problems() const;
  std::optional<ProblemState> snapshot(std::string_view problem_id) const;

 private:
  struct Call;

  HttpResponse dispatch(Call& call);
  HttpResponse create_problem(Call& call);
  HttpResponse join_problem(Call& call, ProblemState& p);
  HttpResponse tick_roster(Call& call, ProblemState& p);
  HttpResponse post_brainstorm(Call& call, ProblemState& p, const std::string& participant);
  HttpResponse import_analysis(Call& call, ProblemState& p, const std::string& participant);
  HttpResponse post_analysis(Call& call, ProblemState& p, const std::string& participant);

  /// Appends after validating against the state machine, or recognizes a retry
  /// of the record already stored at expected + 1. Returns the stored record.
  EventRecord commit(ProblemState& p, const std::string& stream, std::int64_t expected, const std::string& actor,
                     const std::string& kind, Json payload, bool match_payload);
  void ensure_brainstorm_member(ProblemState& p, const std::string& participant);
  std::string authenticate(const Call& call, const ProblemState& p) const;
  Timestamp now() const;

  ServiceOptions options_;
  EventStore store_;
  mutable std::mutex mutex_;
  std::map<std::string, ProblemState, NaturalLess> problems_;
};

/// Listen address, storage directory and configuration from the environment:
/// WIGMORE_LISTEN (host:port), WIGMORE_STORAGE, WIGMORE_CONFIG (JSON file) and
/// WIGMORE_TEAM_<FIELD> overrides, e.g. WIGMORE_TEAM_WINDOW1=6h.
struct ServerSettings {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::filesystem::path storage = "wigmore-data";
  Config config;
};

using Getenv = std::function<const char*(const char*)>;
ServerSettings settings_from_env(const Getenv& getenv);

/// Reads a config file; throws parse or io.
Config load_config(const std::filesystem::path& path);

}  // namespace wigmore
