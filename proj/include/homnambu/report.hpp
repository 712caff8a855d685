#pragma once

#include "homnambu/space.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace homnambu {

/* One counterexample to a checked identity: the basis-argument tuples
 * (one block per multilinear argument group, 0-based indices) and the
 * nonzero defect, which is a scalar or a vector depending on the
 * identity. */
struct Violation {
  std::vector<std::vector<int>> blocks;
  std::variant<Scalar, Vector> defect;
  std::string where;  // extra coordinates, e.g. which relation or map index
};

struct CheckReport {
  std::string identity;
  bool vacuous = false;
  std::string note;
  std::uint64_t tuples_checked = 0;
  std::vector<Violation> violations;

  bool pass() const { return violations.empty(); }
};

/* Options shared by the identity checkers. */
struct CheckOptions {
  bool stop_at_first = false;
  int jobs = 1;
};

std::string to_string(const Violation& v, const VectorSpaceDecl& space,
                      const ParameterContext& ctx);
std::string to_string(const CheckReport& r, const VectorSpaceDecl& space,
                      const ParameterContext& ctx);

}  // namespace homnambu
