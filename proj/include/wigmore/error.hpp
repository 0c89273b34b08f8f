#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wigmore {

enum class Errc {
  domain,          // value outside its domain (percent, empty list, bad label)
  unknown_id,      // referenced node/link/evidence/item does not exist
  precondition,    // operation not allowed in the current state
  not_ready,       // upstream data is missing (e.g. no team versions)
  locked_token,    // edit touches a computed probability token
  not_renderable,  // complement phrase requested for a label below likely
  structural,      // analysis tree failed validation
  unauthorized,    // actor is not a member / token mismatch
  conflict,        // stale sequence number
  parse,           // ill-formed input document
  io,              // storage failure
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace wigmore
