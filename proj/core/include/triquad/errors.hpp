#pragma once

#include <stdexcept>

namespace triquad {

/// Invalid domain data: malformed descriptors or documents, inadmissible
/// roots, mismatched operands, out-of-range indices.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configurable search-space ceiling was exceeded before any work started.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace triquad
