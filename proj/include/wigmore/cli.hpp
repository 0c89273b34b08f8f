#pragma once

// Command-line front end. `run_cli` is the whole program minus process setup so
// tests can drive it with in-memory streams.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wigmore/brainstorm.hpp"
#include "wigmore/store.hpp"
#include "wigmore/teams.hpp"

namespace wigmore {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int domain = 1;  // structural errors or other domain failures
inline constexpr int usage = 2;   // bad flags, unreadable or ill-formed input
}  // namespace exit_code

/// args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Question, live answers, arguments and associations with their team
/// versions, then the team credibility of each assessed evidence item.
std::string brainstorm_listing(const BrainstormState& state);

/// Applies a brainstorm script (create first) and returns the final state.
BrainstormState replay_script(const std::vector<EventRecord>& script);

/// Runs a roster script of configure/join/tick records. Without a leading
/// configure record an ad-hoc roster with `params` is used. `seed` replaces the
/// configured seed when set. Join records may omit the token.
std::string simulate_teams(const std::vector<EventRecord>& script, const TeamPolicy& params,
                           std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace wigmore
