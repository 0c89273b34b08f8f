#include "wigmore/store.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "wigmore/error.hpp"

namespace wigmore {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("wigmore-store-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++));
    fs::remove_all(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

EventRecord rec(std::string stream, std::int64_t seq, std::string kind = "tick") {
  return {"cesium", std::move(stream), seq, from_seconds(1000 + seq), "system", std::move(kind), Json{{"n", seq}}};
}

TEST(EventStore, AppendsAndReadsBack) {
  TempDir dir;
  EventStore store(dir.path());
  for (int i = 1; i <= 5; ++i) store.append(rec("roster", i));
  store.append(rec("analysis:P1", 1, "import"));
  auto records = store.read("cesium", "roster");
  ASSERT_EQ(records.size(), 5u);
  EXPECT_EQ(records[2], rec("roster", 3));
  EXPECT_EQ(store.last_sequence("cesium", "roster"), 5);
  EXPECT_EQ(store.streams("cesium"), (std::vector<std::string>{"analysis:P1", "roster"}));
  EXPECT_EQ(store.problems(), (std::vector<std::string>{"cesium"}));
  EXPECT_TRUE(fs::exists(dir.path() / "cesium" / "analysis@P1.jsonl"));

  // A second store over the same directory sees the same log.
  EventStore reopened(dir.path());
  EXPECT_EQ(reopened.read("cesium", "roster"), records);
  EXPECT_THROW(reopened.append(rec("roster", 5)), Error);
  reopened.append(rec("roster", 6));
}

TEST(EventStore, SequenceGapsAreConflicts) {
  TempDir dir;
  EventStore store(dir.path());
  try {
    store.append(rec("roster", 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::conflict);
  }
  store.append(rec("roster", 1));
  EXPECT_THROW(store.append(rec("roster", 1)), Error);
  EXPECT_EQ(store.read("cesium", "roster").size(), 1u);
}

TEST(EventStore, TornTailIsIgnoredAndOverwritten) {
  TempDir dir;
  {
    EventStore store(dir.path());
    store.append(rec("roster", 1));
    store.append(rec("roster", 2));
  }
  auto file = dir.path() / "cesium" / "roster.jsonl";
  {
    std::ofstream out(file, std::ios::app);
    out << R"({"problem_id":"cesium","stream":"roster","seq)";
  }
  EventStore store(dir.path());
  EXPECT_EQ(store.read("cesium", "roster").size(), 2u);
  store.append(rec("roster", 3));
  auto records = store.read("cesium", "roster");
  ASSERT_EQ(records.size(), 3u);
  EXPECT_EQ(records.back(), rec("roster", 3));
}

TEST(EventStore, RejectsUnsafeNames) {
  TempDir dir;
  EventStore store(dir.path());
  auto bad = rec("roster", 1);
  bad.problem_id = "../etc";
  EXPECT_THROW(store.append(bad), Error);
  EXPECT_THROW(store.append(rec("analysis:../x", 1)), Error);
  EXPECT_THROW(store.append(rec("journal", 1)), Error);
  EXPECT_FALSE(valid_name(""));
  EXPECT_FALSE(valid_name("a b"));
  EXPECT_FALSE(valid_name(std::string(65, 'a')));
  EXPECT_TRUE(valid_name("P-1_x"));
}

TEST(EventStore, DocumentsAreReplacedAtomically) {
  TempDir dir;
  EventStore store(dir.path());
  EXPECT_FALSE(store.read_document("cesium", "problem.json"));
  store.write_document("cesium", "problem.json", "{\"a\":1}\n");
  store.write_document("cesium", "problem.json", "{\"a\":2}\n");
  EXPECT_EQ(store.read_document("cesium", "problem.json"), "{\"a\":2}\n");
  EXPECT_FALSE(fs::exists(dir.path() / "cesium" / "problem.json.tmp"));
}

TEST(Records, LineFormat) {
  auto r = rec("brainstorm:T1", 4, "vote");
  auto line = record_line(r);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  EXPECT_EQ(line,
            R"({"problem_id":"cesium","stream":"brainstorm:T1","sequence":4,"timestamp":"1970-01-01T00:16:44Z",)"
            R"("actor":"system","kind":"vote","payload":{"n":4}})");
  EXPECT_EQ(read_records(line + "\n\n" + line + "\n"), (std::vector<EventRecord>{r, r}));
  EXPECT_EQ(read_records(line), std::vector<EventRecord>{});

  // Scripts may omit the store fields.
  auto script = read_records("{\"timestamp\":\"2019-03-04T08:00:00Z\",\"actor\":\"P1\",\"kind\":\"join\"}\n");
  ASSERT_EQ(script.size(), 1u);
  EXPECT_EQ(script[0].sequence, 0);
  EXPECT_EQ(script[0].payload, Json::object());

  try {
    read_records("{\"kind\":\"join\"}\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::parse);
    EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos);
  }
}

}  // namespace
}  // namespace wigmore
