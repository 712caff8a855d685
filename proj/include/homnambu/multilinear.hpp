#pragma once

#include "homnambu/space.hpp"

#include <map>
#include <string>
#include <vector>

namespace homnambu {

/* Canonical storage shared by skew maps and forms: values are kept only
 * on strictly increasing basis-index tuples; any evaluation on a
 * permuted tuple picks up the permutation sign, a repeated index gives
 * zero, and zero values are never stored.  Equality of canonical tables
 * is therefore equality of the multilinear maps. */

/* Alternating multilinear map V^arity -> V. */
struct SkewMap {
  VectorSpaceDecl space;
  int arity = 0;
  std::map<std::vector<int>, Vector> table;

  SkewMap() = default;
  SkewMap(VectorSpaceDecl sp, int ar) : space(std::move(sp)), arity(ar) {
    if (ar < 1) throw std::invalid_argument("skew map arity must be positive");
  }

  int dim() const { return space.dim(); }
  bool is_zero() const { return table.empty(); }

  /* Inserts value on a strictly increasing tuple; rejects other keys,
   * drops zero values. */
  void set_entry(std::vector<int> key, Vector value);

  /* Value on an arbitrary basis-index tuple (sign and repeats applied). */
  Vector eval_basis(const std::vector<int>& idx) const;

  /* Full multilinear expansion on coordinate vectors. */
  Vector eval_vectors(const std::vector<Vector>& args) const;

  bool operator==(const SkewMap& o) const {
    return space == o.space && arity == o.arity && table == o.table;
  }
  bool operator!=(const SkewMap& o) const { return !(*this == o); }
};

/* Alternating multilinear form V^arity -> scalars. */
struct PForm {
  VectorSpaceDecl space;
  int arity = 0;
  std::map<std::vector<int>, Scalar> table;

  PForm() = default;
  PForm(VectorSpaceDecl sp, int ar) : space(std::move(sp)), arity(ar) {
    if (ar < 1) throw std::invalid_argument("form arity must be positive");
  }

  int dim() const { return space.dim(); }
  bool is_zero() const { return table.empty(); }

  void set_entry(std::vector<int> key, Scalar value);
  Scalar eval_basis(const std::vector<int>& idx) const;
  Scalar eval_vectors(const std::vector<Vector>& args) const;

  bool operator==(const PForm& o) const {
    return space == o.space && arity == o.arity && table == o.table;
  }
  bool operator!=(const PForm& o) const { return !(*this == o); }

  static PForm from_trace(const VectorSpaceDecl& space,
                          const TraceFunctional& tau);
};

/* Arity-1 form back to a functional. */
TraceFunctional as_trace(const PForm& f);

/* Bracket together with its ordered twisting maps; a well-formed
 * algebra of arity n carries n-1 of them. */
struct HomNambuAlgebra {
  SkewMap bracket;
  std::vector<LinearMap> twists;

  int arity() const { return bracket.arity; }
  int dim() const { return bracket.dim(); }
  void validate() const;
};

/* phi_tau(x_1..x_{n+1}) = sum_k (-1)^k tau(x_k) phi(.., x_k omitted, ..),
 * the alternating (n+1)-linear map obtained by distributing a trace
 * functional over an n-linear bracket. */
SkewMap induce_phi_tau(const SkewMap& phi, const TraceFunctional& tau);

/* Wedge of a p-form with an n-linear map, computed over the (p, n)
 * shuffle splits of each increasing tuple; equal to the 1/(n! p!)
 * normalized sum over all permutations.  The p = 1 case is the
 * negative of induce_phi_tau. */
SkewMap wedge(const PForm& tau, const SkewMap& phi);
PForm wedge_forms(const PForm& tau, const PForm& rho);

/* Interior product: phi (arity k, vector-valued) inserted into the
 * first slot of psi (arity l+1), summed over signed (k, l) shuffle
 * splits.  Result has arity k+l and the value kind of psi. */
PForm interior(const SkewMap& phi, const PForm& psi);
SkewMap interior(const SkewMap& phi, const SkewMap& psi);

/* tau(x_1,..,x_{p-1}, .) as an arity-1 form. */
PForm contract_pform(const PForm& tau, const std::vector<Vector>& fixed);

/* (pi_a phi)(x_1..x_{n-k}) = phi(x_1,..,x_{n-k}, a_1,..,a_k): the last
 * k arguments frozen.  Requires 1 <= k < arity. */
SkewMap fix_args_pi(const SkewMap& phi, const std::vector<Vector>& fixed);

/* The p-form  tau(v_1..v_p) = det(v_1,..,v_p, u_1,..,u_{d-p})  for a
 * linearly independent family u_i; dependence is detected exactly and
 * rejected. */
PForm det_pform(const VectorSpaceDecl& space,
                const std::vector<Vector>& u_basis);

std::string to_string(const SkewMap& m, const ParameterContext& ctx);
std::string to_string(const PForm& f, const ParameterContext& ctx);

namespace detail {
/* Sorts idx in place, returning the permutation sign, or 0 when an
 * index repeats. */
int sort_with_sign(std::vector<int>& idx);
/* All strictly increasing k-tuples over {0..d-1}. */
std::vector<std::vector<int>> increasing_tuples(int d, int k);
/* Sign of the shuffle moving the subset at the given positions of an
 * increasing tuple to the front: (-1)^{sum (pos_t - t)}. */
int shuffle_sign(const std::vector<int>& positions);
}  // namespace detail

}  // namespace homnambu
