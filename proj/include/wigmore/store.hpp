#pragma once

// Append-only event log: one line-delimited JSON file per (problem, stream)
// under a storage root, plus small per-problem documents.

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wigmore/clock.hpp"
#include "wigmore/codec.hpp"

namespace wigmore {

struct EventRecord {
  std::string problem_id;
  std::string stream;  // "roster", "brainstorm:<team>", "analysis:<participant>"
  std::int64_t sequence = 0;
  Timestamp timestamp{};
  std::string actor;
  std::string kind;
  Json payload = Json::object();

  bool operator==(const EventRecord&) const = default;
};

Json record_to_json(const EventRecord& r);
/// problem_id, stream and sequence may be absent (event scripts); they default to empty and 0.
EventRecord record_from_json(const Json& j);
std::string record_line(const EventRecord& r);

/// Parses line-delimited records, skipping blank lines. A final line without
/// a newline is a torn write and is ignored.
std::vector<EventRecord> read_records(std::string_view text);

/// Ids usable as problem, team and participant names: [A-Za-z0-9_-], 1..64 chars.
bool valid_name(std::string_view s);

inline constexpr std::string_view kRosterStream = "roster";
std::string brainstorm_stream(std::string_view team_id);
std::string analysis_stream(std::string_view participant);

class EventStore {
 public:
  explicit EventStore(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }

  /// Durable before return (write + fsync). Throws conflict unless
  /// record.sequence is the stream's last sequence + 1, io on storage failure.
  void append(const EventRecord& record);

  std::vector<EventRecord> read(std::string_view problem, std::string_view stream) const;
  std::int64_t last_sequence(std::string_view problem, std::string_view stream) const;

  std::vector<std::string> problems() const;
  std::vector<std::string> streams(std::string_view problem) const;

  /// Atomic replace (temporary file, fsync, rename).
  void write_document(std::string_view problem, std::string_view name, std::string_view content);
  std::optional<std::string> read_document(std::string_view problem, std::string_view name) const;

 private:
  std::filesystem::path stream_path(std::string_view problem, std::string_view stream) const;

  std::filesystem::path root_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::string, std::string>, std::int64_t> last_;
};

}  // namespace wigmore
