#include "homnambu/construct.hpp"

namespace homnambu {

namespace {

std::vector<LinearMap> appended(const std::vector<LinearMap>& twists,
                                const LinearMap& extra) {
  std::vector<LinearMap> out = twists;
  out.push_back(extra);
  return out;
}

}  // namespace

InductionRecord induce_algebra(const HomNambuAlgebra& A,
                               const TraceFunctional& tau,
                               const LinearMap& alpha_n, bool verify,
                               const CheckOptions& opt) {
  A.validate();
  if (tau.dim() != A.dim() || alpha_n.dim() != A.dim())
    throw std::invalid_argument("dimension mismatch");
  InductionRecord rec;
  rec.trace_check = check_phi_trace(tau, A.bracket, opt);
  rec.compat_check = check_compatibility(appended(A.twists, alpha_n), tau, opt);
  if (!rec.trace_check.pass() || !rec.compat_check.pass()) return rec;

  HomNambuAlgebra out;
  out.bracket = induce_phi_tau(A.bracket, tau);
  out.twists = appended(A.twists, alpha_n);
  rec.output = std::move(out);
  rec.notes.push_back(
      "bracket induced as sum_k (-1)^k tau(x_k) phi(.., x_k omitted, ..)");
  rec.notes.push_back(
      "the opposite global sign convention also appears in the literature; "
      "tables differ by -1");
  if (verify) rec.output_check = check_hom_nambu_jacobi(*rec.output, opt);
  return rec;
}

InductionRecord double_induce(const HomNambuAlgebra& A,
                              const TraceFunctional& tau,
                              const LinearMap& alpha_n,
                              const LinearMap& alpha_next,
                              const CheckOptions& opt) {
  InductionRecord first = induce_algebra(A, tau, alpha_n, false, opt);
  if (!first.ok()) return first;
  InductionRecord second =
      induce_algebra(*first.output, tau, alpha_next, false, opt);
  if (!second.ok()) return second;
  second.output_check = check_abelian(second.output->bracket);
  return second;
}

HomNambuAlgebra reduce_algebra(const HomNambuAlgebra& A,
                               const std::vector<Vector>& fixed,
                               bool allow_full_reduction) {
  A.validate();
  const int n = A.arity();
  const int k = static_cast<int>(fixed.size());
  if (k < 1) throw std::invalid_argument("nothing to freeze");
  const int limit = allow_full_reduction ? n - 1 : n - 2;
  if (k > limit)
    throw std::invalid_argument(
        "too many frozen arguments for the twist pairing");
  // a_i pairs with alpha_{n-k-1+i} (1-based): fixed[i] with twist n-k-1+i.
  for (int i = 0; i < k; ++i) {
    const LinearMap& tw = A.twists[n - k - 1 + i];
    if (tw.apply(fixed[i]) != fixed[i])
      throw std::invalid_argument("frozen vector " + std::to_string(i + 1) +
                                  " is not a fixed point of its twist");
  }
  HomNambuAlgebra out;
  out.bracket = fix_args_pi(A.bracket, fixed);
  out.twists.assign(A.twists.begin(), A.twists.begin() + (n - k - 1));
  out.validate();
  return out;
}

namespace {

/* sum_k (-1)^k tau(x_k) phi(.., x_k omitted, .., a), the shared part of
 * the closed expansions of both twist orders. */
SkewMap closed_sum(const SkewMap& phi, const TraceFunctional& tau,
                   const Vector& a) {
  const int n = phi.arity;
  const int d = phi.dim();
  SkewMap out(phi.space, n);
  for (const auto& key : detail::increasing_tuples(d, n)) {
    Vector acc = Vector::zero(d);
    for (int k = 0; k < n; ++k) {
      const Scalar& t = tau.on_basis(key[k]);
      if (t.is_zero()) continue;
      std::vector<Vector> args;
      args.reserve(n);
      for (int m = 0; m < n; ++m)
        if (m != k) args.push_back(Vector::unit(d, key[m]));
      args.push_back(a);
      Vector term = t * phi.eval_vectors(args);
      if (k % 2 == 0) term = Scalar::from_int(-1) * term;
      acc += term;
    }
    out.set_entry(key, std::move(acc));
  }
  return out;
}

void require_fixed_point(const LinearMap& m, const Vector& a,
                         const char* which) {
  if (m.apply(a) != a)
    throw std::invalid_argument(std::string(which) +
                                " does not fix the frozen vector");
}

}  // namespace

HomNambuAlgebra twist_updown(const HomNambuAlgebra& A,
                             const TraceFunctional& tau,
                             const LinearMap& alpha_n, const Vector& a) {
  A.validate();
  require_fixed_point(alpha_n, a, "appended map");
  InductionRecord rec = induce_algebra(A, tau, alpha_n, false);
  if (!rec.ok())
    throw std::invalid_argument("induction preconditions fail");
  SkewMap composed = fix_args_pi(rec.output->bracket, {a});

  SkewMap closed = closed_sum(A.bracket, tau, a);
  const Scalar ta = tau.eval(a);
  if (!ta.is_zero()) {
    // + (-1)^{n+1} tau(a) phi
    const int n = A.arity();
    for (const auto& [key, val] : A.bracket.table) {
      Vector term = ta * val;
      if (n % 2 == 0) term = Scalar::from_int(-1) * term;  // (-1)^{n+1}
      Vector cur = closed.eval_basis(key);
      closed.set_entry(key, cur + term);
    }
  }
  if (!(composed == closed))
    throw std::logic_error("closed expansion disagrees with composition");

  HomNambuAlgebra out;
  out.bracket = std::move(composed);
  out.twists = A.twists;
  out.validate();
  return out;
}

HomNambuAlgebra twist_downup(const HomNambuAlgebra& A,
                             const TraceFunctional& tau, const Vector& a) {
  A.validate();
  const int n = A.arity();
  if (n < 2) throw std::invalid_argument("need arity at least 2");
  require_fixed_point(A.twists[n - 2], a, "last twist");
  SkewMap reduced = fix_args_pi(A.bracket, {a});
  CheckReport trace = check_phi_trace(tau, reduced);
  if (!trace.pass())
    throw std::invalid_argument("tau is not a trace of the frozen bracket");
  CheckReport compat = check_compatibility(A.twists, tau);
  if (!compat.pass())
    throw std::invalid_argument("twists are not compatible with tau");
  SkewMap composed = induce_phi_tau(reduced, tau);

  SkewMap closed = closed_sum(A.bracket, tau, a);
  if (!(composed == closed))
    throw std::logic_error("closed expansion disagrees with composition");

  HomNambuAlgebra out;
  out.bracket = std::move(composed);
  out.twists = A.twists;
  out.validate();
  return out;
}

SkewMap commutator_defect(const HomNambuAlgebra& A, const TraceFunctional& tau,
                          const LinearMap& alpha_n, const Vector& a) {
  HomNambuAlgebra up = twist_updown(A, tau, alpha_n, a);
  HomNambuAlgebra down = twist_downup(A, tau, a);
  const int n = A.arity();
  const int d = A.dim();
  SkewMap defect(A.bracket.space, n);
  for (const auto& key : detail::increasing_tuples(d, n))
    defect.set_entry(key, down.bracket.eval_basis(key) -
                              up.bracket.eval_basis(key));

  // closed form: (-1)^n tau(a) phi
  Scalar factor = tau.eval(a);
  if (n % 2 != 0) factor = -factor;
  SkewMap expected(A.bracket.space, n);
  for (const auto& [key, val] : A.bracket.table)
    expected.set_entry(key, factor * val);
  if (!(defect == expected))
    throw std::logic_error("commutator defect disagrees with closed form");
  return defect;
}

WedgeRecord wedge_construct(const SkewMap& phi, const PForm& tau,
                            WedgeMode mode, bool verify,
                            const CheckOptions& opt) {
  WedgeRecord rec;
  rec.input_identity = (mode == WedgeMode::Gji)
                           ? check_gji(phi, opt)
                           : check_fundamental_identity(phi, opt);
  rec.compat_check = check_pform_compatible(tau, phi, opt);
  rec.hypothesis_check = check_wedge_hypothesis(tau, opt);
  if (!rec.input_identity.pass() || !rec.compat_check.pass() ||
      !rec.hypothesis_check.pass())
    return rec;
  rec.output = wedge(tau, phi);
  if (verify) {
    rec.output_check = (mode == WedgeMode::Gji)
                           ? check_gji(*rec.output, opt)
                           : check_fundamental_identity(*rec.output, opt);
  }
  return rec;
}

}  // namespace homnambu
