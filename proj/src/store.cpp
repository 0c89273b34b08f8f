#include "wigmore/store.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include "wigmore/error.hpp"
#include "wigmore/ids.hpp"

namespace wigmore {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kStreamSuffix = ".jsonl";

[[noreturn]] void io_fail(const std::string& what) { throw Error(Errc::io, what + ": " + std::strerror(errno)); }

// "analysis:P1" <-> "analysis@P1.jsonl"
std::string stream_file(std::string_view stream) {
  std::string s(stream);
  std::replace(s.begin(), s.end(), ':', '@');
  return s + std::string(kStreamSuffix);
}

bool valid_stream(std::string_view stream) {
  if (stream == kRosterStream) return true;
  for (std::string_view prefix : {"brainstorm:", "analysis:"})
    if (stream.starts_with(prefix)) return valid_name(stream.substr(prefix.size()));
  return false;
}

void write_all(int fd, std::string_view data, const fs::path& path) {
  while (!data.empty()) {
    auto n = ::write(fd, data.data(), data.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      io_fail("write " + path.string());
    }
    data.remove_prefix(static_cast<std::size_t>(n));
  }
}

void sync_directory(const fs::path& dir) {
  int fd = ::open(dir.c_str(), O_RDONLY | O_DIRECTORY);
  if (fd < 0) io_fail("open " + dir.string());
  ::fsync(fd);
  ::close(fd);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Cuts a torn final line so the next append starts on a fresh line.
void drop_torn_tail(const fs::path& path) {
  auto content = slurp(path);
  if (content.empty() || content.back() == '\n') return;
  auto keep = content.rfind('\n');
  fs::resize_file(path, keep == std::string::npos ? 0 : keep + 1);
}

}  // namespace

Json record_to_json(const EventRecord& r) {
  return Json{{"problem_id", r.problem_id}, {"stream", r.stream},   {"sequence", r.sequence},
              {"timestamp", format_timestamp(r.timestamp)},       {"actor", r.actor},
              {"kind", r.kind},             {"payload", r.payload}};
}

EventRecord record_from_json(const Json& j) {
  try {
    EventRecord r;
    if (!j.is_object()) throw Error(Errc::parse, "event record must be an object");
    r.problem_id = j.value("problem_id", "");
    r.stream = j.value("stream", "");
    r.sequence = j.value("sequence", std::int64_t{0});
    auto ts = j.at("timestamp").get<std::string>();
    auto t = parse_timestamp(ts);
    if (!t) throw Error(Errc::parse, "bad timestamp '" + ts + "'");
    r.timestamp = *t;
    r.actor = j.value("actor", "");
    r.kind = j.at("kind").get<std::string>();
    r.payload = j.contains("payload") ? j.at("payload") : Json::object();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse, e.what());
  }
}

std::string record_line(const EventRecord& r) { return record_to_json(r).dump(); }

std::vector<EventRecord> read_records(std::string_view text) {
  std::vector<EventRecord> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    if (nl == std::string_view::npos) break;
    auto line = text.substr(0, nl);
    text.remove_prefix(nl + 1);
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      out.push_back(record_from_json(parse_json(line)));
    } catch (const Error& e) {
      throw Error(Errc::parse, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

bool valid_name(std::string_view s) {
  if (s.empty() || s.size() > 64) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '-';
  });
}

std::string brainstorm_stream(std::string_view team_id) { return "brainstorm:" + std::string(team_id); }
std::string analysis_stream(std::string_view participant) { return "analysis:" + std::string(participant); }

EventStore::EventStore(fs::path root) : root_(std::move(root)) {
  std::error_code ec;
  fs::create_directories(root_, ec);
  if (ec) throw Error(Errc::io, "cannot create storage directory " + root_.string() + ": " + ec.message());
}

fs::path EventStore::stream_path(std::string_view problem, std::string_view stream) const {
  if (!valid_name(problem)) throw Error(Errc::domain, "invalid problem id '" + std::string(problem) + "'");
  if (!valid_stream(stream)) throw Error(Errc::domain, "invalid stream '" + std::string(stream) + "'");
  return root_ / std::string(problem) / stream_file(stream);
}

void EventStore::append(const EventRecord& record) {
  auto path = stream_path(record.problem_id, record.stream);
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(record.problem_id, record.stream);
  auto it = last_.find(key);
  if (it == last_.end()) {
    auto existing = fs::exists(path) ? read_records(slurp(path)) : std::vector<EventRecord>{};
    it = last_.emplace(key, existing.empty() ? 0 : existing.back().sequence).first;
  }
  if (record.sequence != it->second + 1)
    throw Error(Errc::conflict, record.stream + " is at sequence " + std::to_string(it->second));

  bool fresh = !fs::exists(path);
  if (fresh) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw Error(Errc::io, "cannot create " + path.parent_path().string() + ": " + ec.message());
  } else {
    drop_torn_tail(path);
  }
  int fd = ::open(path.c_str(), O_WRONLY | O_APPEND | O_CREAT, 0644);
  if (fd < 0) io_fail("open " + path.string());
  try {
    write_all(fd, record_line(record) + "\n", path);
    if (::fsync(fd) != 0) io_fail("fsync " + path.string());
  } catch (...) {
    ::close(fd);
    throw;
  }
  ::close(fd);
  if (fresh) sync_directory(path.parent_path());
  it->second = record.sequence;
}

std::vector<EventRecord> EventStore::read(std::string_view problem, std::string_view stream) const {
  auto path = stream_path(problem, stream);
  std::lock_guard lock(mutex_);
  if (!fs::exists(path)) return {};
  return read_records(slurp(path));
}

std::int64_t EventStore::last_sequence(std::string_view problem, std::string_view stream) const {
  auto records = read(problem, stream);
  return records.empty() ? 0 : records.back().sequence;
}

std::vector<std::string> EventStore::problems() const {
  std::vector<std::string> out;
  for (const auto& entry : fs::directory_iterator(root_))
    if (entry.is_directory() && valid_name(entry.path().filename().string()))
      out.push_back(entry.path().filename().string());
  std::sort(out.begin(), out.end(), NaturalLess{});
  return out;
}

std::vector<std::string> EventStore::streams(std::string_view problem) const {
  std::vector<std::string> out;
  auto dir = root_ / std::string(problem);
  if (!valid_name(problem) || !fs::exists(dir)) return out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    auto name = entry.path().filename().string();
    if (!name.ends_with(kStreamSuffix)) continue;
    name.resize(name.size() - kStreamSuffix.size());
    std::replace(name.begin(), name.end(), '@', ':');
    if (valid_stream(name)) out.push_back(name);
  }
  std::sort(out.begin(), out.end(), NaturalLess{});
  return out;
}

void EventStore::write_document(std::string_view problem, std::string_view name, std::string_view content) {
  if (!valid_name(problem)) throw Error(Errc::domain, "invalid problem id '" + std::string(problem) + "'");
  auto dir = root_ / std::string(problem);
  auto path = dir / std::string(name);
  auto tmp = dir / (std::string(name) + ".tmp");
  std::lock_guard lock(mutex_);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(Errc::io, "cannot create " + dir.string() + ": " + ec.message());
  int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
  if (fd < 0) io_fail("open " + tmp.string());
  try {
    write_all(fd, content, tmp);
    if (::fsync(fd) != 0) io_fail("fsync " + tmp.string());
  } catch (...) {
    ::close(fd);
    throw;
  }
  ::close(fd);
  fs::rename(tmp, path, ec);
  if (ec) throw Error(Errc::io, "rename " + tmp.string() + ": " + ec.message());
  sync_directory(dir);
}

std::optional<std::string> EventStore::read_document(std::string_view problem, std::string_view name) const {
  if (!valid_name(problem)) return std::nullopt;
  auto path = root_ / std::string(problem) / std::string(name);
  std::lock_guard lock(mutex_);
  if (!fs::exists(path)) return std::nullopt;
  return slurp(path);
}

}  // namespace wigmore
