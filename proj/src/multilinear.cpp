#include "homnambu/multilinear.hpp"

#include <algorithm>
#include <sstream>

namespace homnambu {

namespace detail {

int sort_with_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    int v = idx[i];
    std::size_t j = i;
    while (j > 0 && idx[j - 1] > v) {
      idx[j] = idx[j - 1];
      --j;
      sign = -sign;
    }
    idx[j] = v;
  }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return 0;
  return sign;
}

std::vector<std::vector<int>> increasing_tuples(int d, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > d) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == d - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  if (k == 0) out.assign(1, {});
  return out;
}

int shuffle_sign(const std::vector<int>& positions) {
  long long s = 0;
  for (std::size_t t = 0; t < positions.size(); ++t)
    s += positions[t] - static_cast<long long>(t);
  return (s % 2 == 0) ? 1 : -1;
}

}  // namespace detail

namespace {

void check_key(const std::vector<int>& key, int arity, int d) {
  if (static_cast<int>(key.size()) != arity)
    throw std::invalid_argument("entry key has wrong arity");
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (key[i] < 0 || key[i] >= d)
      throw std::invalid_argument("entry key index out of range");
    if (i > 0 && key[i] <= key[i - 1])
      throw std::invalid_argument("entry key must be strictly increasing");
  }
}

/* Shared multilinear expansion: walks the support of each argument and
 * accumulates coefficient-weighted basis evaluations. */
template <class Table, class Value>
void expand(const Table& self, const std::vector<Vector>& args, Value& acc) {
  const int n = self.arity;
  std::vector<int> idx(n);
  std::vector<Scalar> coeff(n + 1);
  coeff[0] = Scalar::one();
  // iterative depth-first product over supports
  std::vector<int> pos(n, -1);
  int s = 0;
  const int d = self.dim();
  while (s >= 0) {
    if (s == n) {
      Value v = self.eval_basis(idx);
      acc += coeff[n] * v;
      --s;
      continue;
    }
    int p = pos[s] + 1;
    while (p < d && args[s].c[p].is_zero()) ++p;
    if (p >= d) {
      pos[s] = -1;
      --s;
      continue;
    }
    pos[s] = p;
    idx[s] = p;
    coeff[s + 1] = coeff[s] * args[s].c[p];
    ++s;
  }
}

}  // namespace

void SkewMap::set_entry(std::vector<int> key, Vector value) {
  check_key(key, arity, dim());
  if (value.dim() != dim())
    throw std::invalid_argument("entry value has wrong dimension");
  if (value.is_zero()) {
    table.erase(key);
    return;
  }
  table[std::move(key)] = std::move(value);
}

Vector SkewMap::eval_basis(const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != arity)
    throw std::invalid_argument("basis tuple has wrong arity");
  std::vector<int> sorted = idx;
  int sign = detail::sort_with_sign(sorted);
  if (sign == 0) return Vector::zero(dim());
  auto it = table.find(sorted);
  if (it == table.end()) return Vector::zero(dim());
  if (sign == 1) return it->second;
  return Scalar::from_int(-1) * it->second;
}

Vector SkewMap::eval_vectors(const std::vector<Vector>& args) const {
  if (static_cast<int>(args.size()) != arity)
    throw std::invalid_argument("argument count has wrong arity");
  for (const auto& a : args)
    if (a.dim() != dim())
      throw std::invalid_argument("argument has wrong dimension");
  Vector acc = Vector::zero(dim());
  expand(*this, args, acc);
  return acc;
}

void PForm::set_entry(std::vector<int> key, Scalar value) {
  check_key(key, arity, dim());
  if (value.is_zero()) {
    table.erase(key);
    return;
  }
  table[std::move(key)] = std::move(value);
}

Scalar PForm::eval_basis(const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != arity)
    throw std::invalid_argument("basis tuple has wrong arity");
  std::vector<int> sorted = idx;
  int sign = detail::sort_with_sign(sorted);
  if (sign == 0) return Scalar::zero();
  auto it = table.find(sorted);
  if (it == table.end()) return Scalar::zero();
  if (sign == 1) return it->second;
  return -it->second;
}

Scalar PForm::eval_vectors(const std::vector<Vector>& args) const {
  if (static_cast<int>(args.size()) != arity)
    throw std::invalid_argument("argument count has wrong arity");
  for (const auto& a : args)
    if (a.dim() != dim())
      throw std::invalid_argument("argument has wrong dimension");
  Scalar acc;
  expand(*this, args, acc);
  return acc;
}

PForm PForm::from_trace(const VectorSpaceDecl& space,
                        const TraceFunctional& tau) {
  if (tau.dim() != space.dim())
    throw std::invalid_argument("functional/space dimension mismatch");
  PForm f(space, 1);
  for (int i = 0; i < space.dim(); ++i)
    f.set_entry({i}, tau.on_basis(i));
  return f;
}

TraceFunctional as_trace(const PForm& f) {
  if (f.arity != 1)
    throw std::invalid_argument("as_trace needs an arity-1 form");
  std::vector<Scalar> cov(f.dim());
  for (int i = 0; i < f.dim(); ++i) cov[i] = f.eval_basis({i});
  return TraceFunctional(std::move(cov));
}

void HomNambuAlgebra::validate() const {
  if (static_cast<int>(twists.size()) != arity() - 1)
    throw std::invalid_argument("algebra of arity n needs n-1 twisting maps");
  for (const auto& t : twists)
    if (t.dim() != dim())
      throw std::invalid_argument("twisting map dimension mismatch");
}

SkewMap induce_phi_tau(const SkewMap& phi, const TraceFunctional& tau) {
  if (tau.dim() != phi.dim())
    throw std::invalid_argument("functional/bracket dimension mismatch");
  const int n = phi.arity;
  SkewMap out(phi.space, n + 1);
  for (const auto& key : detail::increasing_tuples(phi.dim(), n + 1)) {
    Vector acc = Vector::zero(phi.dim());
    std::vector<int> rest(n);
    for (int k = 0; k < n + 1; ++k) {
      const Scalar& t = tau.on_basis(key[k]);
      if (t.is_zero()) continue;
      for (int m = 0, w = 0; m < n + 1; ++m)
        if (m != k) rest[w++] = key[m];
      auto it = phi.table.find(rest);
      if (it == phi.table.end()) continue;
      // (-1)^k with 1-based k
      Vector term = t * it->second;
      if (k % 2 == 0) term = Scalar::from_int(-1) * term;
      acc += term;
    }
    out.set_entry(key, std::move(acc));
  }
  return out;
}

namespace {

/* Value of (tau ^ phi) on one increasing tuple, via (p, n) shuffle
 * splits; Split::first goes to tau, the complement to phi. */
template <class FormValue, class MapLike>
FormValue wedge_entry(const PForm& tau, const MapLike& phi,
                      const std::vector<int>& key, FormValue zero) {
  const int p = tau.arity;
  const int total = static_cast<int>(key.size());
  FormValue acc = zero;
  for (const auto& pos : detail::increasing_tuples(total, p)) {
    std::vector<int> s(p), t(total - p);
    std::vector<bool> taken(total, false);
    for (int i = 0; i < p; ++i) {
      s[i] = key[pos[i]];
      taken[pos[i]] = true;
    }
    for (int i = 0, w = 0; i < total; ++i)
      if (!taken[i]) t[w++] = key[i];
    Scalar tv = tau.eval_basis(s);
    if (tv.is_zero()) continue;
    auto pv = phi.eval_basis(t);
    int sign = detail::shuffle_sign(pos);
    auto term = tv * pv;
    if (sign < 0) term = Scalar::from_int(-1) * term;
    acc += term;
  }
  return acc;
}

}  // namespace

SkewMap wedge(const PForm& tau, const SkewMap& phi) {
  if (!(tau.space == phi.space))
    throw std::invalid_argument("wedge arguments live on different spaces");
  SkewMap out(phi.space, tau.arity + phi.arity);
  for (const auto& key : detail::increasing_tuples(phi.dim(), out.arity))
    out.set_entry(key, wedge_entry(tau, phi, key, Vector::zero(phi.dim())));
  return out;
}

PForm wedge_forms(const PForm& tau, const PForm& rho) {
  if (!(tau.space == rho.space))
    throw std::invalid_argument("wedge arguments live on different spaces");
  PForm out(tau.space, tau.arity + rho.arity);
  for (const auto& key : detail::increasing_tuples(tau.dim(), out.arity))
    out.set_entry(key, wedge_entry(tau, rho, key, Scalar::zero()));
  return out;
}

namespace {

/* Value of (i_phi psi) on one increasing tuple: signed (k, l) shuffle
 * splits, phi eating the first block, its value inserted into the
 * first slot of psi. */
template <class PsiLike, class Value>
Value interior_entry(const SkewMap& phi, const PsiLike& psi,
                     const std::vector<int>& key, Value zero) {
  const int k = phi.arity;
  const int total = static_cast<int>(key.size());
  const int d = phi.dim();
  Value acc = zero;
  for (const auto& pos : detail::increasing_tuples(total, k)) {
    std::vector<int> s(k);
    std::vector<bool> taken(total, false);
    for (int i = 0; i < k; ++i) {
      s[i] = key[pos[i]];
      taken[pos[i]] = true;
    }
    auto it = phi.table.find(s);
    if (it == phi.table.end()) continue;
    std::vector<Vector> args;
    args.reserve(total - k + 1);
    args.push_back(it->second);
    for (int i = 0; i < total; ++i)
      if (!taken[i]) args.push_back(Vector::unit(d, key[i]));
    Value term = psi.eval_vectors(args);
    if (detail::shuffle_sign(pos) < 0) term = Scalar::from_int(-1) * term;
    acc += term;
  }
  return acc;
}

}  // namespace

PForm interior(const SkewMap& phi, const PForm& psi) {
  if (!(phi.space == psi.space))
    throw std::invalid_argument("interior arguments live on different spaces");
  if (psi.arity < 1) throw std::invalid_argument("psi arity must be positive");
  PForm out(phi.space, phi.arity + psi.arity - 1);
  for (const auto& key : detail::increasing_tuples(phi.dim(), out.arity))
    out.set_entry(key, interior_entry(phi, psi, key, Scalar::zero()));
  return out;
}

SkewMap interior(const SkewMap& phi, const SkewMap& psi) {
  if (!(phi.space == psi.space))
    throw std::invalid_argument("interior arguments live on different spaces");
  SkewMap out(phi.space, phi.arity + psi.arity - 1);
  for (const auto& key : detail::increasing_tuples(phi.dim(), out.arity))
    out.set_entry(key, interior_entry(phi, psi, key, Vector::zero(phi.dim())));
  return out;
}

PForm contract_pform(const PForm& tau, const std::vector<Vector>& fixed) {
  if (static_cast<int>(fixed.size()) != tau.arity - 1)
    throw std::invalid_argument("contract_pform needs arity-1 fixed vectors");
  const int d = tau.dim();
  PForm out(tau.space, 1);
  for (int j = 0; j < d; ++j) {
    std::vector<Vector> args = fixed;
    args.push_back(Vector::unit(d, j));
    out.set_entry({j}, tau.eval_vectors(args));
  }
  return out;
}

SkewMap fix_args_pi(const SkewMap& phi, const std::vector<Vector>& fixed) {
  const int k = static_cast<int>(fixed.size());
  if (k < 1 || k >= phi.arity)
    throw std::invalid_argument("fix_args_pi needs 1 <= k < arity");
  for (const auto& a : fixed)
    if (a.dim() != phi.dim())
      throw std::invalid_argument("fixed vector has wrong dimension");
  const int m = phi.arity - k;
  SkewMap out(phi.space, m);
  for (const auto& key : detail::increasing_tuples(phi.dim(), m)) {
    std::vector<Vector> args;
    args.reserve(phi.arity);
    for (int i : key) args.push_back(Vector::unit(phi.dim(), i));
    for (const auto& a : fixed) args.push_back(a);
    out.set_entry(key, phi.eval_vectors(args));
  }
  return out;
}

PForm det_pform(const VectorSpaceDecl& space,
                const std::vector<Vector>& u_basis) {
  const int d = space.dim();
  const int p = d - static_cast<int>(u_basis.size());
  if (p < 1)
    throw std::invalid_argument("det form needs fewer fixed vectors than dim");
  for (const auto& u : u_basis)
    if (u.dim() != d)
      throw std::invalid_argument("fixed vector has wrong dimension");
  PForm out(space, p);
  for (const auto& key : detail::increasing_tuples(d, p)) {
    std::vector<Vector> cols;
    cols.reserve(d);
    for (int i : key) cols.push_back(Vector::unit(d, i));
    for (const auto& u : u_basis) cols.push_back(u);
    out.set_entry(key, determinant(cols));
  }
  if (!u_basis.empty() && out.is_zero())
    throw std::invalid_argument("fixed vectors are linearly dependent");
  return out;
}

std::string to_string(const SkewMap& m, const ParameterContext& ctx) {
  if (m.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, val] : m.table) {
    if (!first) os << ", ";
    first = false;
    os << "(";
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) os << ",";
      os << m.space.basis[key[i]];
    }
    os << ") -> " << to_string(val, m.space, ctx);
  }
  return os.str();
}

std::string to_string(const PForm& f, const ParameterContext& ctx) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, val] : f.table) {
    if (!first) os << ", ";
    first = false;
    os << "(";
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) os << ",";
      os << f.space.basis[key[i]];
    }
    os << ") -> " << to_string(val, ctx);
  }
  return os.str();
}

}  // namespace homnambu
