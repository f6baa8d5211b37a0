#pragma once

#include <stdexcept>
#include <string>

namespace steerbh {

// Thrown when a matrix computation degenerates: singular steerer block,
// non-positive determinant, loss of positive definiteness.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a sign-change bracket cannot be established for transition finding.
class bracket_error : public std::runtime_error {
 public:
  explicit bracket_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace steerbh
