#include "homnambu/families.hpp"

#include "homnambu/identities.hpp"

namespace homnambu {

Dim4Family dim4_hom_lie(const Scalar& b, const Scalar& c,
                        ParameterContext ctx) {
  Dim4Family fam;
  fam.ctx = std::move(ctx);
  VectorSpaceDecl space = VectorSpaceDecl::standard(4);

  SkewMap phi(space, 2);
  const Scalar zero = Scalar::zero();
  // row i, column j (i < j): coefficient of x4 in [x_{i+1}, x_{j+1}]
  const Scalar bmat[4][4] = {
      {zero, b, b, b + c},
      {zero, zero, Scalar::zero(), c},
      {zero, zero, zero, c},
      {zero, zero, zero, zero},
  };
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      Vector v = Vector::zero(4);
      v.c[2] = Scalar::one();
      v.c[3] = bmat[i][j];
      phi.set_entry({i, j}, std::move(v));
    }
  }

  LinearMap alpha1(std::vector<Vector>(4, Vector::unit(4, 2)));
  fam.alpha2 = LinearMap(std::vector<Vector>(4, Vector::unit(4, 3)));
  fam.tau = TraceFunctional(
      {Scalar::one(), Scalar::one(), Scalar::zero(), Scalar::zero()});

  fam.algebra.bracket = std::move(phi);
  fam.algebra.twists = {std::move(alpha1)};
  fam.algebra.validate();
  return fam;
}

std::vector<LinearMap> rank_one_c1(const VectorSpaceDecl& space,
                                   const TraceFunctional& tau, const Vector& w,
                                   const std::vector<Scalar>& mu) {
  const int d = space.dim();
  if (tau.dim() != d || w.dim() != d)
    throw std::invalid_argument("dimension mismatch");
  if (tau.eval(w).is_zero())
    throw std::invalid_argument("w must lie outside ker tau");
  std::vector<LinearMap> maps;
  maps.reserve(mu.size());
  for (const Scalar& m : mu) {
    if (m.is_zero())
      throw std::invalid_argument("rank-one coefficients must be nonzero");
    std::vector<Vector> cols;
    cols.reserve(d);
    for (int j = 0; j < d; ++j) cols.push_back((m * tau.on_basis(j)) * w);
    maps.emplace_back(std::move(cols));
  }
  return maps;
}

Vector random_kernel_vector(const TraceFunctional& tau, Lcg64& rng) {
  std::vector<Vector> kern = kernel_basis(tau);
  Vector v = Vector::zero(tau.dim());
  if (kern.empty()) return v;
  // one or two kernel directions with small coefficients
  int picks = rng.range(1, 2);
  for (int t = 0; t < picks; ++t) {
    const Vector& k = kern[rng.range(0, static_cast<int>(kern.size()) - 1)];
    v += rng.small_rational() * k;
  }
  return v;
}

std::vector<LinearMap> random_c2_tuple(const VectorSpaceDecl& space,
                                       const TraceFunctional& tau, Lcg64& rng,
                                       int count) {
  const int d = space.dim();
  if (tau.dim() != d) throw std::invalid_argument("dimension mismatch");
  std::vector<LinearMap> maps;
  maps.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::vector<Vector> cols;
    cols.reserve(d);
    for (int j = 0; j < d; ++j) {
      // keep columns sparse: some are zero
      if (rng.range(0, 2) == 0)
        cols.push_back(Vector::zero(d));
      else
        cols.push_back(random_kernel_vector(tau, rng));
    }
    maps.emplace_back(std::move(cols));
  }
  return maps;
}

SkewMap random_kernel_valued_map(const VectorSpaceDecl& space,
                                 const TraceFunctional& tau, int arity,
                                 Lcg64& rng, int max_entries) {
  const int d = space.dim();
  SkewMap phi(space, arity);
  auto keys = detail::increasing_tuples(d, arity);
  if (keys.empty()) return phi;
  int entries = rng.range(1, max_entries);
  for (int t = 0; t < entries; ++t) {
    const auto& key = keys[rng.range(0, static_cast<int>(keys.size()) - 1)];
    Vector cur = phi.eval_basis(key);
    cur += random_kernel_vector(tau, rng);
    phi.set_entry(key, std::move(cur));
  }
  return phi;
}

std::optional<SkewMap> random_nlie(int dim, int arity, Lcg64& rng,
                                   int attempts) {
  VectorSpaceDecl space = VectorSpaceDecl::standard(dim);
  auto keys = detail::increasing_tuples(dim, arity);
  if (keys.empty()) return std::nullopt;
  for (int a = 0; a < attempts; ++a) {
    SkewMap phi(space, arity);
    int entries = rng.range(1, 3);
    for (int t = 0; t < entries; ++t) {
      const auto& key = keys[rng.range(0, static_cast<int>(keys.size()) - 1)];
      Vector v = Vector::zero(dim);
      v.c[rng.range(0, dim - 1)] = rng.small_rational();
      Vector cur = phi.eval_basis(key);
      cur += v;
      phi.set_entry(key, std::move(cur));
    }
    if (phi.is_zero()) continue;
    if (check_fundamental_identity(phi).pass()) return phi;
  }
  return std::nullopt;
}

}  // namespace homnambu
