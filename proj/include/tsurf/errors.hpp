#ifndef TSURF_ERRORS_HPP
#define TSURF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tsurf {

/// Bad caller input (non-primitive direction, non-unimodular matrix, n out of range...).
struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A surface description that violates a model invariant.
struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConnectivityError : ModelError {
  using ModelError::ModelError;
};

/// The Euler-characteristic oracle cannot refine the given cut geometry.
struct UnsupportedGeometry : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  ParseError(int line, int column, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + msg),
        line(line),
        column(column) {}
  int line;
  int column;
};

}  // namespace tsurf

#endif  // TSURF_ERRORS_HPP
