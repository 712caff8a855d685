#pragma once

#include "homnambu/multilinear.hpp"
#include "homnambu/report.hpp"

namespace homnambu {

/* Defect of the twisted Jacobi-type identity for an m-ary bracket phi
 * with twisting maps b_1..b_{m-1}, at arguments x_1..x_{m-1}, y_1..y_m:
 *
 *   phi(b_1 x_1, .., b_{m-1} x_{m-1}, phi(y_1..y_m))
 *     - sum_k phi(b_1 y_1, .., b_{k-1} y_{k-1}, phi(x_1..x_{m-1}, y_k),
 *               b_k y_{k+1}, .., b_{m-1} y_m).
 *
 * The defect is multilinear in both argument blocks, so basis tuples
 * decide it.  When all twists coincide it is also alternating within
 * each block and strictly increasing tuples suffice; with distinct
 * twists that symmetry is lost (including on repeated indices), so the
 * checker enumerates every basis tuple, with the twist compositions
 * precomputed into dense tensors. */
CheckReport check_hom_nambu_jacobi(const HomNambuAlgebra& A,
                                   const CheckOptions& opt = {});

/* Untwisted case: every twist the identity map. */
CheckReport check_fundamental_identity(const SkewMap& phi,
                                       const CheckOptions& opt = {});

/* tau(phi(x_1..x_n)) = 0 on all increasing tuples. */
CheckReport check_phi_trace(const TraceFunctional& tau, const SkewMap& phi,
                            const CheckOptions& opt = {});

/* tau(phi(x_1..x_n), y_1..y_{p-1}) = 0; reduces to check_phi_trace at
 * p = 1. */
CheckReport check_pform_compatible(const PForm& tau, const SkewMap& phi,
                                   const CheckOptions& opt = {});

/* Generalized Jacobi: the self-insertion i_phi phi vanishes.  Instances
 * with 2*arity-1 > dim are vacuous and pass with the flag set. */
CheckReport check_gji(const SkewMap& phi, const CheckOptions& opt = {});

/* For every increasing (p-1)-tuple of basis vectors a, the 1-form
 * tau(a_1,..,a_{p-1}, .) wedged with tau vanishes. */
CheckReport check_wedge_hypothesis(const PForm& tau,
                                   const CheckOptions& opt = {});

CheckReport check_abelian(const SkewMap& phi);

}  // namespace homnambu
