#include "wigmore/teams.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "wigmore/error.hpp"
#include "wigmore/ids.hpp"

namespace wigmore {

namespace {

void check_clock(const TeamRoster& r, Timestamp now) {
  if (r.clock && now < *r.clock)
    throw Error(Errc::precondition, "clock moved backwards: " + format_timestamp(now) + " is before " +
                                        format_timestamp(*r.clock));
}

void close(Team& t, Timestamp at, std::string reason) {
  t.status = TeamStatus::closed;
  t.closed_at = at;
  t.close_reason = std::move(reason);
}

// Closes teams whose windows elapsed before `now` (strict) or at `now` (inclusive).
void apply_windows(TeamRoster& r, Timestamp now, bool inclusive) {
  auto reached = [&](Timestamp deadline) { return inclusive ? deadline <= now : deadline < now; };
  for (auto& t : r.teams) {
    if (t.status != TeamStatus::open) continue;
    Timestamp first = t.opened_at + r.params.window1;
    Timestamp second = t.opened_at + r.params.window2;
    if (reached(first) && t.size() >= r.params.fallback_size)
      close(t, first, format_duration(r.params.window1) + " window elapsed with " + std::to_string(t.size()) +
                          " members");
    else if (reached(second))
      close(t, second, format_duration(r.params.window2) + " window elapsed");
  }
}

}  // namespace

std::string_view roster_policy_name(RosterPolicy p) { return p == RosterPolicy::ad_hoc ? "ad_hoc" : "random_fixed"; }

std::optional<RosterPolicy> parse_roster_policy(std::string_view s) {
  if (s == "ad_hoc" || s == "ad-hoc") return RosterPolicy::ad_hoc;
  if (s == "random_fixed" || s == "random-fixed") return RosterPolicy::random_fixed;
  return std::nullopt;
}

bool Team::has_member(std::string_view p) const {
  return std::any_of(members.begin(), members.end(), [&](const TeamMember& m) { return m.participant == p; });
}

const Team* TeamRoster::open_team() const {
  for (const auto& t : teams)
    if (t.status == TeamStatus::open) return &t;
  return nullptr;
}

const Team* TeamRoster::team_of(std::string_view participant) const {
  for (const auto& t : teams)
    if (t.has_member(participant)) return &t;
  return nullptr;
}

const Team* TeamRoster::find_team(std::string_view id) const {
  for (const auto& t : teams)
    if (t.id == id) return &t;
  return nullptr;
}

JoinResult join(TeamRoster r, std::string_view participant_view, Timestamp now) {
  const std::string participant(participant_view);
  if (participant.empty()) throw Error(Errc::domain, "participant must not be empty");
  check_clock(r, now);

  if (r.policy == RosterPolicy::random_fixed) {
    for (auto& t : r.teams) {
      for (auto& m : t.members) {
        if (m.participant != participant) continue;
        if (m.joined_at) throw Error(Errc::precondition, participant + " already joined team " + t.id);
        m.joined_at = now;
        r.clock = now;
        return {std::move(r), t.id};
      }
    }
    throw Error(Errc::unauthorized, participant + " is not on any pre-assigned team");
  }

  if (const auto* t = r.team_of(participant))
    throw Error(Errc::precondition, participant + " already joined team " + t->id);

  apply_windows(r, now, false);
  auto open = std::find_if(r.teams.begin(), r.teams.end(), [](const Team& t) { return t.status == TeamStatus::open; });
  if (open == r.teams.end()) {
    Team t;
    t.id = "T" + std::to_string(r.teams.size() + 1);
    t.opened_at = now;
    r.teams.push_back(std::move(t));
    open = std::prev(r.teams.end());
  }
  open->members.push_back({participant, now});
  if (open->size() >= r.params.early_close_size) {
    close(*open, now, "reached " + std::to_string(open->size()) + " members");
  } else if (now >= open->opened_at + r.params.window1 && open->size() >= r.params.fallback_size) {
    close(*open, now, "reached " + std::to_string(open->size()) + " members after the " +
                          format_duration(r.params.window1) + " window");
  }
  std::string id = open->id;
  r = tick(std::move(r), now);
  return {std::move(r), id};
}

TeamRoster tick(TeamRoster r, Timestamp now) {
  check_clock(r, now);
  if (r.policy == RosterPolicy::ad_hoc) apply_windows(r, now, true);
  r.clock = now;
  return r;
}

std::vector<Team> form_random_teams(const std::vector<std::string>& participants, std::uint64_t seed,
                                    const TeamPolicy& policy, Timestamp formed_at) {
  std::vector<std::string> order = participants;
  std::sort(order.begin(), order.end(), NaturalLess{});
  if (std::adjacent_find(order.begin(), order.end()) != order.end())
    throw Error(Errc::domain, "participant listed twice");
  // Fisher-Yates on raw engine output, so the result does not depend on the
  // standard library's distribution implementation.
  std::mt19937_64 rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);

  const int n = static_cast<int>(order.size());
  std::vector<Team> teams;
  if (n == 0) return teams;
  int k = std::max(1, static_cast<int>(std::lround(static_cast<double>(n) / policy.internal_target)));
  if (n / policy.internal_min >= 1) k = std::min(k, n / policy.internal_min);
  k = std::max(k, (n + policy.internal_max - 1) / policy.internal_max);

  std::size_t next = 0;
  for (int i = 0; i < k; ++i) {
    Team t;
    t.id = "T" + std::to_string(i + 1);
    t.opened_at = formed_at;
    int size = n / k + (i < n % k ? 1 : 0);
    for (int j = 0; j < size; ++j) t.members.push_back({order[next++], std::nullopt});
    std::sort(t.members.begin(), t.members.end(),
              [](const TeamMember& a, const TeamMember& b) { return natural_less(a.participant, b.participant); });
    close(t, formed_at, "formed by random assignment");
    teams.push_back(std::move(t));
  }
  return teams;
}

TeamRoster random_roster(const std::vector<std::string>& participants, std::uint64_t seed, const TeamPolicy& policy,
                         Timestamp formed_at) {
  TeamRoster r;
  r.policy = RosterPolicy::random_fixed;
  r.params = policy;
  r.teams = form_random_teams(participants, seed, policy, formed_at);
  return r;
}

}  // namespace wigmore
