#pragma once

#include <stdexcept>
#include <string>

namespace famalg {

/// Two operands built over different universes were combined.
class universe_mismatch : public std::invalid_argument {
 public:
  explicit universe_mismatch(const std::string& what)
      : std::invalid_argument(what) {}
};

/// An operation that requires a non-empty family received an empty one.
class empty_family_error : public std::invalid_argument {
 public:
  explicit empty_family_error(const std::string& what)
      : std::invalid_argument(what) {}
};

/// A requested enumeration or materialization exceeds its configured ceiling.
class bound_error : public std::runtime_error {
 public:
  explicit bound_error(const std::string& what) : std::runtime_error(what) {}
};

/// Script syntax or name-resolution failure; carries a 1-based position.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " at " + std::to_string(line) + ":" +
                           std::to_string(col)),
        line(line),
        col(col) {}

  int line;
  int col;
};

}  // namespace famalg
