#pragma once

#include "homnambu/report.hpp"
#include "homnambu/space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homnambu {

/* Classes of a compatible tuple (alpha_1..alpha_n, tau), by where the
 * maps send the complement U of K = ker tau:
 *
 *   DegenerateKernelV  tau = 0
 *   DegenerateKernelZero  ker tau = {0} (only in dimension 1)
 *   C1   every map sends U into U; the maps are then pairwise
 *        proportional with ratios tau(alpha_i(u))/tau(alpha_j(u))
 *   C2   every map sends all of V into K
 *   ForcedZeroMaps  a proper mix, which compatibility collapses: the
 *        maps landing in K are the zero map
 *   Incompatible  the tuple contradicts the compatibility relations
 *        (reachable only when the precondition was skipped)
 */
enum class TupleClass {
  DegenerateKernelV,
  DegenerateKernelZero,
  C1,
  C2,
  ForcedZeroMaps,
  Incompatible,
};

struct TupleClassification {
  TupleClass kind;
  int witness_u = -1;               // basis index outside K used as witness
  std::vector<int> kernel_valued;   // 0-based map indices sent into K
  std::string detail;
};

const char* to_string(TupleClass k);

/* Verifies, over all ordered basis pairs (x, y) and all map indices,
 *
 *   tau(alpha_i(x)) tau(y)      = tau(x) tau(alpha_i(y))
 *   tau(alpha_i(x)) alpha_j(y)  = alpha_i(x) tau(alpha_j(y))
 *
 * Both sides are bilinear in (x, y), so basis pairs decide the general
 * statement.  Violations carry the pair, the indices, and the defect. */
CheckReport check_compatibility(const std::vector<LinearMap>& alphas,
                                const TraceFunctional& tau,
                                const CheckOptions& opt = {});

/* Classifies a tuple that already passed check_compatibility.  The
 * per-map direction is decided on one witness basis vector outside the
 * kernel; kernel-valued claims are verified on the whole basis.  A
 * contradiction (possible only for incompatible input) yields
 * TupleClass::Incompatible. */
TupleClassification classify_tuple(const std::vector<LinearMap>& alphas,
                                   const TraceFunctional& tau);

/* For a C1 pair: the ratio lambda with alpha_i = lambda * alpha_j,
 * computed as tau(alpha_i(u))/tau(alpha_j(u)) on a witness u and then
 * verified entrywise and across every admissible witness.  Throws
 * std::invalid_argument when the pair is not C1 or the maps are not
 * proportional. */
Scalar proportionality(const LinearMap& alpha_i, const LinearMap& alpha_j,
                       const TraceFunctional& tau);

}  // namespace homnambu
