#pragma once

#include <stdexcept>
#include <string>

namespace trireduce {

// Malformed input bytes (bad OFF header, counts, indices, non-triangle face).
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& msg, int line = -1)
        : std::runtime_error(line >= 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}

    int line() const { return line_; }

  private:
    int line_;
};

class UnsupportedFaceError : public ParseError {
  public:
    using ParseError::ParseError;
};

// Structurally broken surface data: non-manifold edges, inconsistent
// orientation, degree < 3, duplicate edges, or a corrupted DCEL.
class TopologyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A reducer invariant failed at runtime (only raised in checked mode).
class InvariantViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace trireduce
