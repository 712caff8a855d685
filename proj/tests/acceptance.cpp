// Acceptance gate: eight criteria, one line each, exit code = number of
// failures.  Every comparison is exact (rational or polynomial scalars);
// the only numeric limits are the wall-clock budgets pinned below.

#include "homnambu/compat.hpp"
#include "homnambu/construct.hpp"
#include "homnambu/families.hpp"
#include "homnambu/identities.hpp"
#include "homnambu/io.hpp"
#include "oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace homnambu;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome ok(std::string detail) { return {true, std::move(detail)}; }
Outcome bad(std::string detail) { return {false, std::move(detail)}; }

Scalar rat(int num, int den = 1) {
  return Scalar::from_rational(Rational(num, den));
}

Vector random_vector(int d, Lcg64& rng) {
  Vector v = Vector::zero(d);
  for (int i = 0; i < d; ++i)
    if (rng.next() % 2 == 0) v.c[i] = rng.small_rational();
  return v;
}

std::vector<Scalar> random_covector(int d, Lcg64& rng) {
  std::vector<Scalar> cov(d);
  for (int i = 0; i < d; ++i)
    if (rng.next() % 2 == 0) cov[i] = rng.small_rational();
  return cov;
}

SkewMap random_skew(const VectorSpaceDecl& space, int arity, Lcg64& rng,
                    int entries = 2) {
  SkewMap out(space, arity);
  auto keys = detail::increasing_tuples(space.dim(), arity);
  if (keys.empty()) return out;
  for (int e = 0; e < entries; ++e)
    out.set_entry(keys[rng.range(0, static_cast<int>(keys.size()) - 1)],
                  random_vector(space.dim(), rng));
  return out;
}

PForm random_pform(const VectorSpaceDecl& space, int arity, Lcg64& rng,
                   int entries = 2) {
  PForm out(space, arity);
  auto keys = detail::increasing_tuples(space.dim(), arity);
  if (keys.empty()) return out;
  for (int e = 0; e < entries; ++e)
    out.set_entry(keys[rng.range(0, static_cast<int>(keys.size()) - 1)],
                  rng.small_rational());
  return out;
}

LinearMap random_map(int d, Lcg64& rng) {
  std::vector<Vector> cols;
  for (int j = 0; j < d; ++j) cols.push_back(random_vector(d, rng));
  return LinearMap(std::move(cols));
}

SkewMap scale_map(const Scalar& s, const SkewMap& m) {
  SkewMap out(m.space, m.arity);
  for (const auto& [key, val] : m.table) out.set_entry(key, s * val);
  return out;
}

PForm add_pforms(const PForm& a, const PForm& b, const Scalar& coeff_b) {
  PForm out = a;
  for (const auto& [key, val] : b.table)
    out.set_entry(key, out.eval_basis(key) + coeff_b * val);
  return out;
}

/* The expected three-argument table of the four-dimensional example. */
SkewMap expected_ternary(const VectorSpaceDecl& space, const Scalar& b,
                         const Scalar& c) {
  Vector x3 = Vector::unit(4, 2), x4 = Vector::unit(4, 3);
  SkewMap exp(space, 3);
  exp.set_entry({0, 1, 2}, b * x4);
  exp.set_entry({0, 1, 3}, b * x4);
  exp.set_entry({0, 2, 3}, rat(-1) * (x3 + c * x4));
  exp.set_entry({1, 2, 3}, rat(-1) * (x3 + c * x4));
  return exp;
}

/* 1. The two-parameter four-dimensional example: all three input checks
 *    pass symbolically and on 20 rational instantiations, the induced
 *    ternary table equals the frozen values, and the record carries the
 *    note about the opposite sign convention in circulation. */
Outcome criterion1() {
  ParameterContext ctx({"b", "c"});
  Scalar b = Scalar::parameter(ctx, "b"), c = Scalar::parameter(ctx, "c");
  Dim4Family fam = dim4_hom_lie(b, c, ctx);

  if (!check_hom_nambu_jacobi(fam.algebra).pass())
    return bad("symbolic example fails the twisted Jacobi check");
  if (!check_phi_trace(fam.tau, fam.algebra.bracket).pass())
    return bad("symbolic example fails the trace condition");
  if (!check_compatibility({fam.algebra.twists[0], fam.alpha2}, fam.tau)
           .pass())
    return bad("symbolic example fails the compatibility relations");

  InductionRecord rec = induce_algebra(fam.algebra, fam.tau, fam.alpha2, true);
  if (!rec.ok()) return bad("symbolic induction did not produce an output");
  if (!rec.output_check->pass())
    return bad("symbolic induced algebra fails the twisted Jacobi check");
  if (!(rec.output->bracket == expected_ternary(fam.algebra.bracket.space, b, c)))
    return bad("symbolic induced table differs from the frozen values");

  bool flagged = false;
  for (const auto& note : rec.notes)
    if (note.find("opposite global sign convention") != std::string::npos)
      flagged = true;
  if (!flagged) return bad("record does not flag the sign-convention note");

  Lcg64 rng(101);
  for (int it = 0; it < 20; ++it) {
    Scalar bb = rng.small_rational(), cc = rng.small_rational();
    Dim4Family f = dim4_hom_lie(bb, cc);
    if (!check_hom_nambu_jacobi(f.algebra).pass() ||
        !check_phi_trace(f.tau, f.algebra.bracket).pass() ||
        !check_compatibility({f.algebra.twists[0], f.alpha2}, f.tau).pass())
      return bad("rational instantiation fails an input check");
    InductionRecord r = induce_algebra(f.algebra, f.tau, f.alpha2, true);
    if (!r.ok() || !r.output_check->pass())
      return bad("rational instantiation fails after induction");
    if (!(r.output->bracket == expected_ternary(f.algebra.bracket.space, bb, cc)))
      return bad("rational induced table differs from the frozen values");
  }
  return ok("symbolic run plus 20 rational instantiations match the frozen "
            "table; divergence note present");
}

/* 2. Second induction with the functional (d1, d2, 0, 0) and the first
 *    twist appended again: the 4-ary table is exactly
 *    (d1 - d2)(x3 + c x4) on (1,2,3,4), and the output passes the 4-ary
 *    twisted Jacobi check symbolically. */
Outcome criterion2() {
  ParameterContext ctx({"b", "c", "d1", "d2"});
  Scalar b = Scalar::parameter(ctx, "b"), c = Scalar::parameter(ctx, "c");
  Scalar d1 = Scalar::parameter(ctx, "d1"), d2 = Scalar::parameter(ctx, "d2");
  Dim4Family fam = dim4_hom_lie(b, c, ctx);

  InductionRecord step1 = induce_algebra(fam.algebra, fam.tau, fam.alpha2);
  if (!step1.ok()) return bad("first induction did not produce an output");

  TraceFunctional rho({d1, d2, Scalar::zero(), Scalar::zero()});
  InductionRecord step2 =
      induce_algebra(*step1.output, rho, fam.algebra.twists[0], true);
  if (!step2.ok()) return bad("second induction did not produce an output");

  Vector x3 = Vector::unit(4, 2), x4 = Vector::unit(4, 3);
  SkewMap expected(fam.algebra.bracket.space, 4);
  expected.set_entry({0, 1, 2, 3}, (d1 - d2) * (x3 + c * x4));
  if (!(step2.output->bracket == expected))
    return bad("4-ary table differs from (d1 - d2)(x3 + c x4)");
  if (!step2.output_check->pass())
    return bad("4-ary algebra fails the twisted Jacobi check symbolically");
  return ok("4-ary table equals (d1 - d2)(x3 + c x4) and passes the "
            "twisted Jacobi check");
}

/* 3. 100 generated instances, 50 with rank-one tuples and 50 with
 *    kernel-valued tuples (d <= 5, input arity 2 or 3, sparse brackets
 *    filtered through the input identity): every induced algebra passes
 *    the twisted Jacobi check. */
Outcome criterion3() {
  Lcg64 rng(2026);
  int done_c1 = 0, done_c2 = 0;
  for (int guard = 0; guard < 100000 && done_c1 + done_c2 < 100; ++guard) {
    bool want_c1 = done_c1 < 50;
    int n = rng.range(2, 3);
    int d = rng.range(n + 1, 5);
    VectorSpaceDecl space = VectorSpaceDecl::standard(d);

    std::vector<Scalar> cov(d);
    int nz = rng.range(1, 2);
    for (int i = 0; i < nz; ++i)
      cov[rng.range(0, d - 1)] = rng.small_rational();
    TraceFunctional tau(cov);

    std::vector<LinearMap> maps;
    if (want_c1) {
      int u = 0;
      while (tau.on_basis(u).is_zero()) ++u;
      std::vector<Scalar> mu;
      for (int i = 0; i < n; ++i) mu.push_back(rng.small_rational());
      maps = rank_one_c1(space, tau, Vector::unit(d, u), mu);
    } else {
      maps = random_c2_tuple(space, tau, rng, n);
    }

    HomNambuAlgebra A;
    A.twists.assign(maps.begin(), maps.end() - 1);
    bool found = false;
    for (int tries = 0; tries < 50 && !found; ++tries) {
      SkewMap phi = random_kernel_valued_map(space, tau, n, rng);
      if (phi.is_zero()) continue;
      A.bracket = phi;
      if (check_hom_nambu_jacobi(A).pass()) found = true;
    }
    if (!found) continue;

    InductionRecord rec = induce_algebra(A, tau, maps.back(), true);
    if (!rec.ok())
      return bad("induction preconditions failed on a generated instance");
    if (!rec.output_check->pass()) {
      std::ostringstream os;
      os << "induced algebra fails the twisted Jacobi check (d=" << d
         << ", input arity " << n << ", "
         << (want_c1 ? "rank-one" : "kernel-valued") << " tuple)";
      return bad(os.str());
    }
    (want_c1 ? done_c1 : done_c2)++;
  }
  if (done_c1 + done_c2 < 100)
    return bad("generator failed to produce 100 instances");
  return ok("100 induced algebras (50 rank-one, 50 kernel-valued tuples) "
            "pass the twisted Jacobi check");
}

/* 4. Inducing twice with one functional is identically zero on 50
 *    unconstrained random pairs; with a degenerate kernel (zero
 *    functional, or a line) the induced bracket is abelian on 20
 *    instances. */
Outcome criterion4() {
  Lcg64 rng(33);
  for (int it = 0; it < 50; ++it) {
    int n = rng.range(1, 3);
    int d = rng.range(n + 1, 6);
    VectorSpaceDecl space = VectorSpaceDecl::standard(d);
    SkewMap phi = random_skew(space, n, rng);
    TraceFunctional tau(random_covector(d, rng));
    if (!induce_phi_tau(induce_phi_tau(phi, tau), tau).is_zero())
      return bad("double induction left a nonzero bracket");
  }
  for (int it = 0; it < 10; ++it) {
    int n = rng.range(1, 3);
    int d = rng.range(n + 1, 6);
    VectorSpaceDecl space = VectorSpaceDecl::standard(d);
    HomNambuAlgebra A;
    A.bracket = random_skew(space, n, rng);
    for (int i = 0; i < n - 1; ++i) A.twists.push_back(random_map(d, rng));
    TraceFunctional zero_tau{std::vector<Scalar>(d)};
    InductionRecord rec = induce_algebra(A, zero_tau, random_map(d, rng));
    if (!rec.ok()) return bad("zero functional rejected by the induction");
    if (!check_abelian(rec.output->bracket).pass())
      return bad("zero functional induced a nonzero bracket");
  }
  for (int it = 0; it < 10; ++it) {
    VectorSpaceDecl line = VectorSpaceDecl::standard(1);
    SkewMap phi(line, 1);
    if (rng.next() & 1)
      phi.set_entry({0}, rng.small_rational() * Vector::unit(1, 0));
    TraceFunctional tau({rng.small_rational()});
    if (!check_abelian(induce_phi_tau(phi, tau)).pass())
      return bad("trivial-kernel functional induced a nonzero bracket");
  }
  return ok("50 double inductions vanish; 20 degenerate-kernel inductions "
            "are abelian");
}

/* 5. Kernel preservation, the one-witness dichotomy, entrywise
 *    proportionality with witness-independent ratios, the zero-map
 *    collapse of mixed tuples, and the classifications of the built-in
 *    families. */
Outcome criterion5() {
  Dim4Family fam = dim4_hom_lie(rat(1), rat(2));
  if (classify_tuple({fam.algebra.twists[0], fam.alpha2}, fam.tau).kind !=
      TupleClass::C2)
    return bad("four-dimensional example does not classify as C2");

  Lcg64 rng(77);
  for (int it = 0; it < 25; ++it) {
    int n = rng.range(1, 3);
    int d = rng.range(2, 6);
    VectorSpaceDecl space = VectorSpaceDecl::standard(d);
    std::vector<Scalar> cov(d);
    int nz = rng.range(1, 2);
    for (int i = 0; i < nz; ++i)
      cov[rng.range(0, d - 1)] = rng.small_rational();
    TraceFunctional tau(cov);
    int u0 = 0;
    while (tau.on_basis(u0).is_zero()) ++u0;

    std::vector<Scalar> mu;
    for (int i = 0; i < n; ++i) mu.push_back(rng.small_rational());
    std::vector<LinearMap> maps =
        rank_one_c1(space, tau, Vector::unit(d, u0), mu);

    if (!check_compatibility(maps, tau).pass())
      return bad("rank-one tuple fails the compatibility relations");
    for (const LinearMap& m : maps) {
      for (const Vector& k : kernel_basis(tau))
        if (!tau.eval(m.apply(k)).is_zero())
          return bad("a compatible map moved the kernel off itself");
      for (int x = 0; x < d; ++x)
        if (!tau.on_basis(x).is_zero() &&
            tau.eval(m.column(x)).is_zero())
          return bad("rank-one map sent an admissible witness into the "
                     "kernel");
    }
    if (classify_tuple(maps, tau).kind != TupleClass::C1)
      return bad("rank-one tuple does not classify as C1");

    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        Scalar lam = proportionality(maps[i], maps[j], tau);
        auto want = try_divide(mu[i], mu[j]);
        if (!want || lam != *want)
          return bad("proportionality ratio differs from mu_i / mu_j");
        if (!(maps[i] == lam * maps[j]))
          return bad("alpha_i - lambda alpha_j is not zero entrywise");
        for (int x = 0; x < d; ++x) {
          if (tau.on_basis(x).is_zero()) continue;
          auto r = try_divide(tau.eval(maps[i].column(x)),
                              tau.eval(maps[j].column(x)));
          if (!r || *r != lam)
            return bad("proportionality ratio depends on the witness");
        }
      }
  }

  for (int it = 0; it < 25; ++it) {
    int n = rng.range(1, 3);
    int d = rng.range(2, 6);
    VectorSpaceDecl space = VectorSpaceDecl::standard(d);
    std::vector<Scalar> cov(d);
    cov[rng.range(0, d - 1)] = rng.small_rational();
    TraceFunctional tau(cov);
    std::vector<LinearMap> maps = random_c2_tuple(space, tau, rng, n);
    if (!check_compatibility(maps, tau).pass())
      return bad("kernel-valued tuple fails the compatibility relations");
    for (const LinearMap& m : maps) {
      for (const Vector& k : kernel_basis(tau))
        if (!tau.eval(m.apply(k)).is_zero())
          return bad("a compatible map moved the kernel off itself");
      // one witness inside the kernel forces the whole image inside
      int u0 = 0;
      while (tau.on_basis(u0).is_zero()) ++u0;
      if (tau.eval(m.column(u0)).is_zero())
        for (int x = 0; x < d; ++x)
          if (!tau.eval(m.column(x)).is_zero())
            return bad("witness dichotomy violated on a kernel-valued map");
    }
    if (classify_tuple(maps, tau).kind != TupleClass::C2)
      return bad("kernel-valued tuple does not classify as C2");
  }

  for (int it = 0; it < 10; ++it) {
    int d = rng.range(2, 5);
    VectorSpaceDecl space = VectorSpaceDecl::standard(d);
    std::vector<Scalar> cov(d);
    cov[rng.range(0, d - 1)] = rng.small_rational();
    TraceFunctional tau(cov);
    int u0 = 0;
    while (tau.on_basis(u0).is_zero()) ++u0;
    LinearMap c1map = rank_one_c1(space, tau, Vector::unit(d, u0),
                                  {rng.small_rational()})[0];

    std::vector<LinearMap> forced = {c1map, LinearMap::zero(d)};
    if (!check_compatibility(forced, tau).pass())
      return bad("C1 map plus zero map fails compatibility");
    if (classify_tuple(forced, tau).kind != TupleClass::ForcedZeroMaps)
      return bad("C1 map plus zero map does not collapse");

    LinearMap nonzero_k = LinearMap::zero(d);
    for (int tries = 0; tries < 20 && nonzero_k.is_zero(); ++tries)
      nonzero_k = random_c2_tuple(space, tau, rng, 1)[0];
    if (nonzero_k.is_zero()) continue;
    std::vector<LinearMap> mixed = {c1map, nonzero_k};
    if (check_compatibility(mixed, tau).pass())
      return bad("mixed tuple with a nonzero kernel-valued map passed "
                 "compatibility");
    if (classify_tuple(mixed, tau).kind != TupleClass::Incompatible)
      return bad("mixed tuple not reported incompatible");
  }
  return ok("kernel preservation, witness dichotomy, entrywise "
            "proportionality, zero-map collapse, and classifications hold");
}

/* 6. Freezing against inducing: the commutator of the two orders equals
 *    (-1)^n tau(a) phi exactly on 20 admissible instances, the orders
 *    agree whenever tau(a) = 0, and both closed formulas equal their
 *    compositional definitions on all increasing tuples. */
Outcome criterion6() {
  Lcg64 rng(55);
  int done = 0;
  for (int guard = 0; guard < 10000 && done < 20; ++guard) {
    bool kernel_case = done % 2 == 1;
    int n = rng.range(2, 3);
    int d = rng.range(n + 1, 5);
    VectorSpaceDecl space = VectorSpaceDecl::standard(d);
    std::vector<Scalar> cov(d);
    int t0 = rng.range(0, d - 1);
    cov[t0] = rng.small_rational();
    TraceFunctional tau(cov);

    std::vector<LinearMap> maps;
    Vector a = Vector::zero(d);
    if (!kernel_case) {
      a = Vector::unit(d, t0);
      Scalar inv = *try_divide(Scalar::one(), tau.on_basis(t0));
      maps = rank_one_c1(space, tau, a, std::vector<Scalar>(n, inv));
    } else {
      int k0 = (t0 + 1) % d;
      a = Vector::unit(d, k0);
      maps.assign(n, LinearMap::single_column(d, k0, a));
    }

    HomNambuAlgebra A;
    A.twists.assign(maps.begin(), maps.end() - 1);
    SkewMap phi = random_kernel_valued_map(space, tau, n, rng);
    if (phi.is_zero()) continue;
    A.bracket = phi;

    HomNambuAlgebra up = twist_updown(A, tau, maps.back(), a);
    HomNambuAlgebra down = twist_downup(A, tau, a);
    SkewMap defect = commutator_defect(A, tau, maps.back(), a);

    Scalar factor = tau.eval(a);
    if (n % 2 == 1) factor = rat(-1) * factor;
    if (!(defect == scale_map(factor, A.bracket)))
      return bad("commutator defect differs from (-1)^n tau(a) phi");
    if (kernel_case && !(up.bracket == down.bracket))
      return bad("orders disagree although tau(a) = 0");
    if (!(up.bracket == fix_args_pi(induce_phi_tau(A.bracket, tau), {a})))
      return bad("induce-then-freeze differs from its composition");
    if (!(down.bracket == induce_phi_tau(fix_args_pi(A.bracket, {a}), tau)))
      return bad("freeze-then-induce differs from its composition");
    ++done;
  }
  if (done < 20) return bad("generator failed to produce 20 instances");
  return ok("20 instances: commutator equals (-1)^n tau(a) phi, orders "
            "agree on kernel fixed points, closed forms match compositions");
}

/* 7. The two interior/wedge identities on 50 random instances, the
 *    untwisted identity implying the generalized one on 20 filtered
 *    brackets, the frozen wedge construction, and the determinant-form
 *    preconditions on 10 random subspace setups. */
Outcome criterion7() {
  Lcg64 rng(66);
  for (int it = 0; it < 50; ++it) {
    int d = rng.range(2, 6);
    int k = rng.range(1, std::min(3, d - 1));
    int p = rng.range(1, std::min(3, d - k));
    int l1 = rng.range(1, std::min(3, d));
    VectorSpaceDecl space = VectorSpaceDecl::standard(d);
    SkewMap phi = random_skew(space, k, rng);
    PForm tau = random_pform(space, p, rng);
    PForm psi = random_pform(space, l1, rng);

    PForm lhsA = interior(wedge(tau, phi), psi);
    PForm rhsA = wedge_forms(tau, interior(phi, psi));
    if (!(lhsA == rhsA))
      return bad("insertion of a wedged bracket differs from wedging the "
                 "insertion");

    Scalar sign = ((k - 1) * p) % 2 == 1 ? rat(-1) : rat(1);
    PForm lhsB = interior(phi, wedge_forms(tau, psi));
    PForm rhsB = add_pforms(wedge_forms(interior(phi, tau), psi),
                            wedge_forms(tau, interior(phi, psi)), sign);
    if (!(lhsB == rhsB)) return bad("graded Leibniz relation fails");
  }

  int got = 0;
  for (int guard = 0; guard < 2000 && got < 20; ++guard) {
    int m = rng.range(2, 3);
    int d = rng.range(2 * m - 1, 6);
    std::optional<SkewMap> phi = random_nlie(d, m, rng);
    if (!phi || phi->is_zero()) continue;
    if (!check_fundamental_identity(*phi).pass())
      return bad("generator produced a bracket failing its own filter");
    CheckReport g = check_gji(*phi);
    if (g.vacuous) continue;
    if (!g.pass())
      return bad("a bracket passing the untwisted identity fails the "
                 "generalized one");
    ++got;
  }
  if (got < 20) return bad("generator failed to produce 20 brackets");

  VectorSpaceDecl space4 = VectorSpaceDecl::standard(4);
  SkewMap phi4(space4, 2);
  phi4.set_entry({2, 3}, Vector::unit(4, 3));
  PForm tau4 = det_pform(space4, {Vector::unit(4, 2), Vector::unit(4, 3)});
  WedgeRecord wrec = wedge_construct(phi4, tau4, WedgeMode::Nambu, true);
  if (!wrec.ok()) return bad("frozen wedge construction was rejected");
  SkewMap expected(space4, 4);
  expected.set_entry({0, 1, 2, 3}, Vector::unit(4, 3));
  if (!(*wrec.output == expected))
    return bad("frozen wedge construction differs from x4 on (1,2,3,4)");
  if (!check_fundamental_identity(*wrec.output).pass())
    return bad("frozen wedge construction fails the untwisted identity");

  for (int it = 0; it < 10; ++it) {
    int d = rng.range(3, 6);
    int usize = rng.range(1, d - 1);
    VectorSpaceDecl space = VectorSpaceDecl::standard(d);
    std::vector<int> pivots;
    while (static_cast<int>(pivots.size()) < usize) {
      int s = rng.range(0, d - 1);
      bool seen = false;
      for (int q : pivots) seen = seen || q == s;
      if (!seen) pivots.push_back(s);
    }
    std::vector<Vector> us;
    for (int s : pivots) {
      Vector u = Vector::unit(d, s);
      for (int j = 0; j < d; ++j) {
        bool pivot = false;
        for (int q : pivots) pivot = pivot || q == j;
        if (!pivot && rng.range(0, 2) == 0) u.c[j] = rng.small_rational();
      }
      us.push_back(u);
    }
    PForm tau = det_pform(space, us);
    if (!check_wedge_hypothesis(tau).pass())
      return bad("determinant form fails the wedge hypothesis");

    int arity = rng.range(2, std::min(3, d));
    SkewMap phi(space, arity);
    auto keys = detail::increasing_tuples(d, arity);
    for (int e = 0; e < 2; ++e) {
      Vector v = Vector::zero(d);
      for (const Vector& u : us)
        if (rng.next() % 2 == 0) v = v + rng.small_rational() * u;
      phi.set_entry(keys[rng.range(0, static_cast<int>(keys.size()) - 1)], v);
    }
    if (!check_pform_compatible(tau, phi).pass())
      return bad("determinant form not compatible with a bracket valued in "
                 "its complement span");
  }
  return ok("both interior/wedge identities on 50 instances; generalized "
            "identity on 20 brackets; frozen construction and determinant "
            "preconditions hold");
}

/* 8. The dispatching checker agrees with an unrestricted brute-force
 *    oracle on every instance of an exhaustive small corpus (d <= 3,
 *    arity <= 3, equal and distinct twists), including a tuple built to
 *    fool the restricted loop; files for the whole built-in corpus
 *    survive write/parse/write byte for byte. */
Outcome criterion8() {
  Lcg64 rng(88);
  int failing = 0, passing = 0;
  for (int d = 2; d <= 3; ++d)
    for (int m = 2; m <= 3; ++m)
      for (int it = 0; it < 12; ++it) {
        VectorSpaceDecl space = VectorSpaceDecl::standard(d);
        HomNambuAlgebra A;
        A.bracket = random_skew(space, m, rng);
        if (it % 2 == 0) {
          A.twists.assign(m - 1, random_map(d, rng));
        } else {
          for (int i = 0; i < m - 1; ++i) A.twists.push_back(random_map(d, rng));
        }
        CheckReport r = check_hom_nambu_jacobi(A);
        auto viol = oracle::find_hnj_violation(A);
        if (r.pass() != !viol.has_value())
          return bad("checker disagrees with the brute-force oracle");
        if (!r.pass()) {
          ++failing;
          if (r.violations.empty())
            return bad("failing report carries no violation");
          for (const Violation& v : r.violations) {
            Vector oracle_defect = oracle::hnj_defect(A, v.blocks[0], v.blocks[1]);
            if (!(std::get<Vector>(v.defect) == oracle_defect))
              return bad("reported defect differs from the oracle's value");
          }
        } else {
          ++passing;
        }
      }
  if (failing == 0 || passing == 0)
    return bad("corpus did not exercise both outcomes");

  // the tuple whose violations all lie outside the increasing region
  {
    VectorSpaceDecl space = VectorSpaceDecl::standard(3);
    HomNambuAlgebra A;
    SkewMap phi(space, 3);
    phi.set_entry({0, 1, 2}, Vector::unit(3, 2));
    A.bracket = phi;
    A.twists = {LinearMap::identity(3),
                LinearMap::single_column(3, 0, Vector::unit(3, 1))};
    CheckReport r = check_hom_nambu_jacobi(A);
    auto viol = oracle::find_hnj_violation(A);
    if (r.pass() || !viol.has_value())
      return bad("adversarial distinct-twist tuple was not caught");
  }

  // file round-trips over the built-in corpus
  std::vector<AlgebraFile> corpus;
  {
    ParameterContext ctx({"b", "c"});
    Dim4Family sym = dim4_hom_lie(Scalar::parameter(ctx, "b"),
                                  Scalar::parameter(ctx, "c"), ctx);
    AlgebraFile f;
    f.params = ctx;
    f.space = sym.algebra.bracket.space;
    f.bracket = sym.algebra.bracket;
    f.twists.emplace_back("alpha1", sym.algebra.twists[0]);
    f.maps.emplace("alpha2", sym.alpha2);
    f.traces.emplace("tau", sym.tau);
    f.notes.push_back("two-parameter example, symbolic");
    corpus.push_back(std::move(f));
  }
  {
    Dim4Family num = dim4_hom_lie(rat(1), rat(2));
    AlgebraFile f;
    f.space = num.algebra.bracket.space;
    f.bracket = num.algebra.bracket;
    f.twists.emplace_back("alpha1", num.algebra.twists[0]);
    f.maps.emplace("alpha2", num.alpha2);
    f.traces.emplace("tau", num.tau);
    corpus.push_back(std::move(f));
  }
  {
    VectorSpaceDecl space = VectorSpaceDecl::standard(4);
    TraceFunctional tau({rat(1), rat(0), rat(2), rat(0)});
    AlgebraFile f;
    f.space = space;
    f.bracket = random_kernel_valued_map(space, tau, 3, rng);
    std::vector<LinearMap> maps =
        rank_one_c1(space, tau, Vector::unit(4, 0), {rat(2), rat(3)});
    f.twists.emplace_back("a1", maps[0]);
    f.twists.emplace_back("a2", maps[1]);
    f.traces.emplace("tau", tau);
    f.pforms.emplace("det34", det_pform(space, {Vector::unit(4, 2),
                                                Vector::unit(4, 3)}));
    corpus.push_back(std::move(f));
  }
  {
    std::optional<SkewMap> nl = random_nlie(3, 2, rng);
    if (!nl) return bad("generator failed to produce a filtered bracket");
    AlgebraFile f;
    f.space = nl->space;
    f.bracket = *nl;
    f.twists.emplace_back("id1", LinearMap::identity(3));
    std::vector<Scalar> cov = random_covector(3, rng);
    f.traces.emplace("t", TraceFunctional(cov));
    f.maps.emplace("m", random_map(3, rng));
    corpus.push_back(std::move(f));
  }
  for (const AlgebraFile& f : corpus) {
    std::string text = write_algebra_text(f);
    AlgebraFile g = parse_algebra_text(text);
    if (write_algebra_text(g) != text)
      return bad("write/parse/write changed a corpus file");
    if (f.bracket && !(*g.bracket == *f.bracket))
      return bad("round trip changed a bracket");
  }
  return ok("checker agrees with the oracle on the exhaustive corpus; "
            "all corpus files round-trip byte for byte");
}

}  // namespace

int main() {
  struct Entry {
    int id;
    Outcome (*run)();
    double budget_s;  // 0 = no budget
  };
  // budgets pinned by the stated requirements
  const std::vector<Entry> entries = {
      {1, criterion1, 1.0}, {2, criterion2, 1.0}, {3, criterion3, 60.0},
      {4, criterion4, 0.0}, {5, criterion5, 0.0}, {6, criterion6, 0.0},
      {7, criterion7, 0.0}, {8, criterion8, 0.0},
  };

  int failures = 0;
  for (const Entry& e : entries) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = e.run();
    } catch (const std::exception& ex) {
      out = bad(std::string("exception: ") + ex.what());
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (out.pass && e.budget_s > 0 && secs > e.budget_s) {
      out.pass = false;
      out.detail = "exceeded the time budget of " +
                   std::to_string(e.budget_s) + " s";
    }
    char line[64];
    std::snprintf(line, sizeof(line), "criterion %d: %s (%.2f s) ", e.id,
                  out.pass ? "PASS" : "FAIL", secs);
    std::cout << line << out.detail << "\n";
    if (!out.pass) ++failures;
  }
  std::cout << "acceptance: " << (entries.size() - failures) << "/"
            << entries.size() << " criteria passed\n";
  return failures;
}
