#pragma once

#include "homnambu/multilinear.hpp"

#include <cstdint>
#include <optional>

namespace homnambu {

/* Linear congruential generator, 64-bit state:
 *   s <- s * 6364136223846793005 + 1442695040888963407  (mod 2^64).
 * Fixed here so generated corpora are reproducible across platforms. */
class Lcg64 {
public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  /* uniform-ish int in [lo, hi] */
  int range(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /* small nonzero rational with numerator in [-4, 4] and denominator in
   * {1, 2, 3} */
  Scalar small_rational() {
    int num = range(1, 4);
    if (next() & 1) num = -num;
    int den = range(1, 3);
    return Scalar::from_rational(Rational(num, den));
  }

private:
  std::uint64_t state_;
};

/* The 4-dimensional two-parameter twisted Lie bracket
 *   [x_i, x_j] = x3 + b_ij x4   (i < j)
 * with b_12=b_13=b, b_14=b+c, b_23=0, b_24=b_34=c, twist alpha_1 sending
 * every basis vector to x3, plus the companions used to grow it: the
 * functional tau = (1,1,0,0) and the map alpha_2 sending every basis
 * vector to x4. */
struct Dim4Family {
  HomNambuAlgebra algebra;  // binary bracket, one twist
  TraceFunctional tau;
  LinearMap alpha2;
  ParameterContext ctx;     // parameter names when b, c are symbolic
};

Dim4Family dim4_hom_lie(const Scalar& b, const Scalar& c,
                        ParameterContext ctx = {});

/* Maps alpha_i(x) = mu_i * tau(x) * w.  Requires tau(w) != 0 and every
 * mu_i != 0; the resulting tuple is compatible with tau and classifies
 * as C1 with ratios mu_i / mu_j. */
std::vector<LinearMap> rank_one_c1(const VectorSpaceDecl& space,
                                   const TraceFunctional& tau, const Vector& w,
                                   const std::vector<Scalar>& mu);

/* Random maps whose columns lie in ker tau (requires a rational
 * covector); such tuples are compatible with tau for free. */
std::vector<LinearMap> random_c2_tuple(const VectorSpaceDecl& space,
                                       const TraceFunctional& tau, Lcg64& rng,
                                       int count);

/* Random sparse alternating bracket filtered through the untwisted
 * n-Lie identity; nullopt when the attempt budget runs out. */
std::optional<SkewMap> random_nlie(int dim, int arity, Lcg64& rng,
                                   int attempts = 200);

/* Random sparse vector with entries in ker tau's coordinate span;
 * helper for building C2-style brackets. */
Vector random_kernel_vector(const TraceFunctional& tau, Lcg64& rng);

/* Random sparse alternating bracket with all values inside ker tau. */
SkewMap random_kernel_valued_map(const VectorSpaceDecl& space,
                                 const TraceFunctional& tau, int arity,
                                 Lcg64& rng, int max_entries = 3);

}  // namespace homnambu
