#pragma once

#include <string_view>

namespace wigmore {

/// Orders identifiers so that embedded numbers compare numerically ("E2" < "E10").
bool natural_less(std::string_view a, std::string_view b);

struct NaturalLess {
  using is_transparent = void;
  bool operator()(std::string_view a, std::string_view b) const { return natural_less(a, b); }
};

}  // namespace wigmore
