#include "cutsetkit/errors.hpp"

#include <sstream>

namespace cutsetkit {

namespace {

std::string cycle_message(const std::vector<int>& cycle) {
  std::ostringstream os;
  os << "relation pairs contain a directed cycle:";
  for (int v : cycle) os << ' ' << v;
  if (!cycle.empty()) os << ' ' << cycle.front();
  return os.str();
}

}  // namespace

SelfLoopError::SelfLoopError(int element)
    : Error("self-loop relation (" + std::to_string(element) + ", " + std::to_string(element) + ")"),
      element(element) {}

CycleError::CycleError(std::vector<int> cycle)
    : Error(cycle_message(cycle)), cycle(std::move(cycle)) {}

NotComparableError::NotComparableError(int x, int y)
    : Error("elements " + std::to_string(x) + " and " + std::to_string(y) + " are not comparable"),
      x(x),
      y(y) {}

NotLatticeError::NotLatticeError(int x, int y)
    : Error("not a lattice: elements " + std::to_string(x) + " and " + std::to_string(y) +
            " lack a unique join or meet"),
      x(x),
      y(y) {}

NotSemimodularError::NotSemimodularError(int x, int y)
    : Error("not semimodular: covers " + std::to_string(x) + ", " + std::to_string(y) +
            " of a common element whose join covers neither"),
      x(x),
      y(y) {}

NotUniformError::NotUniformError(int size_a, int size_b)
    : Error("facet sizes differ: " + std::to_string(size_a) + " vs " + std::to_string(size_b)),
      size_a(size_a),
      size_b(size_b) {}

ParseError::ParseError(const std::string& msg, int line)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line(line) {}

}  // namespace cutsetkit
