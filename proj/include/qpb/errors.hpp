#pragma once

#include <stdexcept>
#include <string>

namespace qpb {

/// The applicability bound of a closed-form result does not hold for the
/// given input: the computation is refused, not attempted. The message names
/// the failing inequality.
class hypothesis_error : public std::runtime_error {
public:
  explicit hypothesis_error(const std::string& failed_bound)
      : std::runtime_error("hypothesis not satisfied: " + failed_bound) {}
};

/// An internal cross-check between two independent computation paths failed.
/// This is a bug in the library, never a consequence of bad user input.
class invariant_error : public std::logic_error {
public:
  explicit invariant_error(const std::string& what)
      : std::logic_error("invariant violated: " + what) {}
};

}  // namespace qpb
