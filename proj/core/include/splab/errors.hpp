#pragma once

#include <stdexcept>
#include <string>

namespace splab {

/// Inner partition does not fit inside the outer one.
class ContainmentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed shape, word or tableau text. Carries a 1-based position.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::invalid_argument("line " + std::to_string(line) + ", column " +
                              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Mixed insertion is only defined for high letters.
class MarkerError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class LengthError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bullet placement was requested on a tableau that is already straight.
class NoInnerShape : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// No mixed slide matches the least available entry. Never raised on valid
/// input; indicates an internal inconsistency.
class StuckError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The hole of a Sagan-Worley slide has reached an outer corner.
class NoNeighbor : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Two independent computations of the same quantity disagree.
class MismatchError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NotSymmetric : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotHomogeneous : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Triangular peeling left a remainder outside the span of the P-basis.
class NotInSpan : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace splab
