#pragma once

#include <stdexcept>
#include <string>

namespace wscm {

/// Malformed input: bad file contents, out-of-range indices, invalid certificates.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace wscm
