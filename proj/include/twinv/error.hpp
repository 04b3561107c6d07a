#pragma once

#include <stdexcept>
#include <string>

namespace twinv {

/// Raised when a computed object contradicts a proven structural statement
/// (a conjugation map that is not an SPM, a non-conjugation SPM outside the
/// classification, a failed P-polynomial consistency identity). Seeing one
/// means the implementation is wrong.
class theorem_violation : public std::logic_error {
 public:
  explicit theorem_violation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace twinv
