#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cutsetkit {

/// Base of every error thrown by the toolkit.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParamError : Error {
  using Error::Error;
};

/// A relation pair (x, x) was supplied.
struct SelfLoopError : Error {
  int element;
  explicit SelfLoopError(int element);
};

/// The supplied relation pairs contain a directed cycle.
struct CycleError : Error {
  std::vector<int> cycle;  // witness: cycle[0] -> ... -> cycle.back() -> cycle[0]
  explicit CycleError(std::vector<int> cycle);
};

struct NotComparableError : Error {
  int x, y;
  NotComparableError(int x, int y);
};

struct NotBoundedError : Error {
  using Error::Error;
};

/// Witness pair with no (or no unique) join/meet.
struct NotLatticeError : Error {
  int x, y;
  NotLatticeError(int x, int y);
};

/// Witness: x, y cover their meet but their join covers neither.
struct NotSemimodularError : Error {
  int x, y;
  NotSemimodularError(int x, int y);
};

struct NotELError : Error {
  using Error::Error;
};

struct NotAPermutationError : Error {
  using Error::Error;
};

/// Two facet/edge cardinalities that should have been equal.
struct NotUniformError : Error {
  int size_a, size_b;
  NotUniformError(int size_a, int size_b);
};

struct DuplicateEdgeError : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;  // 1-based input line, 0 when unknown
  explicit ParseError(const std::string& msg, int line = 0);
};

/// A resource guard tripped (see limits.hpp).
struct LimitError : Error {
  using Error::Error;
};

}  // namespace cutsetkit
