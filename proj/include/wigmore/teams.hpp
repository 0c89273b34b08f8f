#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wigmore/clock.hpp"

namespace wigmore {

struct TeamPolicy {
  int max_size = 12;
  int early_close_size = 12;
  std::chrono::seconds window1{6 * 3600};
  int fallback_size = 6;
  std::chrono::seconds window2{12 * 3600};
  int internal_min = 3;
  int internal_max = 6;
  int internal_target = 4;

  bool operator==(const TeamPolicy&) const = default;
};

enum class RosterPolicy { ad_hoc, random_fixed };

std::string_view roster_policy_name(RosterPolicy p);
std::optional<RosterPolicy> parse_roster_policy(std::string_view s);

enum class TeamStatus { open, closed };

struct TeamMember {
  std::string participant;
  std::optional<Timestamp> joined_at;  // unset for pre-assigned members who have not joined yet

  bool operator==(const TeamMember&) const = default;
};

struct Team {
  std::string id;
  std::vector<TeamMember> members;
  Timestamp opened_at{};
  TeamStatus status = TeamStatus::open;
  std::optional<Timestamp> closed_at;
  std::string close_reason;

  int size() const { return static_cast<int>(members.size()); }
  bool has_member(std::string_view p) const;

  bool operator==(const Team&) const = default;
};

struct TeamRoster {
  RosterPolicy policy = RosterPolicy::ad_hoc;
  TeamPolicy params;
  std::vector<Team> teams;
  std::optional<Timestamp> clock;  // latest time seen by join or tick

  const Team* open_team() const;
  const Team* team_of(std::string_view participant) const;
  const Team* find_team(std::string_view id) const;

  bool operator==(const TeamRoster&) const = default;
};

struct JoinResult {
  TeamRoster roster;
  std::string team_id;
};

/// Ad-hoc: joins the open team, creating one if none is open. A join at the
/// exact instant a window elapses is processed before the window closes the team.
/// Random-fixed: records the join on the participant's pre-assigned team.
JoinResult join(TeamRoster roster, std::string_view participant, Timestamp now);

/// Applies the window rules up to and including `now`. Idempotent at a fixed time.
TeamRoster tick(TeamRoster roster, Timestamp now);

/// Deterministic partition of participants into teams of near-equal size.
std::vector<Team> form_random_teams(const std::vector<std::string>& participants, std::uint64_t seed,
                                    const TeamPolicy& policy, Timestamp formed_at = {});

/// A random-fixed roster whose closed teams come from form_random_teams.
TeamRoster random_roster(const std::vector<std::string>& participants, std::uint64_t seed, const TeamPolicy& policy,
                         Timestamp formed_at = {});

}  // namespace wigmore
