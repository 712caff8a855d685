#pragma once

#include "homnambu/compat.hpp"
#include "homnambu/identities.hpp"

#include <optional>

namespace homnambu {

/* Outcome of one trace induction: preconditions, the constructed
 * algebra when they hold, and the optional identity check on the
 * output. */
struct InductionRecord {
  CheckReport trace_check;
  CheckReport compat_check;
  std::optional<HomNambuAlgebra> output;
  std::optional<CheckReport> output_check;
  /* Filled when an output exists: the sign convention used and the
   * warning that the opposite global sign also circulates. */
  std::vector<std::string> notes;

  bool ok() const { return output.has_value(); }
};

/* From an n-ary algebra with a bracket trace tau and an appended map
 * alpha_n, builds the (n+1)-ary algebra with bracket phi_tau and twist
 * list alpha_1..alpha_n.  The trace and compatibility preconditions are
 * always checked; `verify` additionally runs the twisted Jacobi check
 * on the output. */
InductionRecord induce_algebra(const HomNambuAlgebra& A,
                               const TraceFunctional& tau,
                               const LinearMap& alpha_n, bool verify = false,
                               const CheckOptions& opt = {});

/* Two inductions with the same trace.  The second bracket vanishes
 * identically, so the record carries the abelian check on the output.
 * Inducing twice with different traces is a different construction;
 * chain induce_algebra calls for that. */
InductionRecord double_induce(const HomNambuAlgebra& A,
                              const TraceFunctional& tau,
                              const LinearMap& alpha_n,
                              const LinearMap& alpha_next,
                              const CheckOptions& opt = {});

/* Freezes the last k arguments of the bracket at a_1..a_k.  Each a_i
 * must be an exact fixed point of the twist it displaces, which pairs
 * a_i with alpha_{n-k-1+i}; the surviving twists are alpha_1 ..
 * alpha_{n-k-1}.  k is limited to n-2 so the reduced algebra keeps at
 * least one twist; allow_full_reduction lifts that to k = n-1 (the
 * first fixed element then pairs with alpha_1 and the result has no
 * twists). */
HomNambuAlgebra reduce_algebra(const HomNambuAlgebra& A,
                               const std::vector<Vector>& fixed,
                               bool allow_full_reduction = false);

/* One induction followed by freezing one argument at a fixed point a of
 * alpha_n: bracket pi_a(phi_tau) with the original twists.  The closed
 * expansion
 *   sum_k (-1)^k tau(x_k) phi(.., x_k omitted, .., a)
 *     + (-1)^{n+1} tau(a) phi(x_1..x_n)
 * is recomputed and compared against the composition. */
HomNambuAlgebra twist_updown(const HomNambuAlgebra& A,
                             const TraceFunctional& tau,
                             const LinearMap& alpha_n, const Vector& a);

/* Freezing one argument first, then inducing: bracket (pi_a phi)_tau
 * with the original twists; a must be fixed by alpha_{n-1} and tau must
 * be a trace of pi_a phi.  The closed expansion
 *   sum_k (-1)^k tau(x_k) phi(.., x_k omitted, .., a)
 * is recomputed and compared against the composition. */
HomNambuAlgebra twist_downup(const HomNambuAlgebra& A,
                             const TraceFunctional& tau, const Vector& a);

/* (pi_a phi)_tau - pi_a(phi_tau), which collapses to
 * (-1)^n tau(a) phi; computed from both compositions and verified
 * against that closed form. */
SkewMap commutator_defect(const HomNambuAlgebra& A, const TraceFunctional& tau,
                          const LinearMap& alpha_n, const Vector& a);

enum class WedgeMode { Gji, Nambu };

/* Builds tau ^ phi for a compatible p-form tau.  Mode Gji starts from a
 * bracket satisfying the generalized Jacobi identity and checks the
 * same identity on the output; mode Nambu starts from the untwisted
 * n-Lie identity and checks it on the output.  Preconditions: tau
 * compatible with phi, the mode's input identity, and the wedge
 * hypothesis on tau. */
struct WedgeRecord {
  CheckReport input_identity;
  CheckReport compat_check;
  CheckReport hypothesis_check;
  std::optional<SkewMap> output;
  std::optional<CheckReport> output_check;

  bool ok() const { return output.has_value(); }
};

WedgeRecord wedge_construct(const SkewMap& phi, const PForm& tau,
                            WedgeMode mode, bool verify = true,
                            const CheckOptions& opt = {});

}  // namespace homnambu
