// Exception types shared by the library and the command line front end.
#pragma once

#include <stdexcept>
#include <string>

namespace toricjl {

/// A computation declined because a hypothesis of the underlying theorem
/// fails; `witness` names the failing condition.
class Refusal : public std::runtime_error {
 public:
  Refusal(const std::string& what, std::string witness) : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

/// Malformed user input (complex files, character strings, selectors).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace toricjl
