#pragma once

#include <stdexcept>
#include <string>

namespace towerlab {

// Domain error: malformed input, violated precondition, unsupported request.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap was hit. Callers that treat errors as data
// (tower runs, surveys) catch this and record a status instead of failing.
class CapError : public Error {
 public:
  explicit CapError(const std::string& what) : Error(what) {}
};

}  // namespace towerlab
