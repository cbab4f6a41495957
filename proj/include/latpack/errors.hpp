#pragma once

#include <stdexcept>
#include <string>

namespace latpack {

/// A computation would exceed its configured work budget (enumeration nodes,
/// ball points). Callers map this to a distinct exit status.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace latpack
