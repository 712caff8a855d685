#include "homnambu/space.hpp"

#include <algorithm>

namespace homnambu {

VectorSpaceDecl::VectorSpaceDecl(std::vector<std::string> names)
    : basis(std::move(names)) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!ParameterContext::valid_name(basis[i]))
      throw std::invalid_argument("invalid basis name: " + basis[i]);
    for (std::size_t j = 0; j < i; ++j)
      if (basis[j] == basis[i])
        throw std::invalid_argument("duplicate basis name: " + basis[i]);
  }
}

VectorSpaceDecl VectorSpaceDecl::standard(int d) {
  std::vector<std::string> names;
  names.reserve(d);
  for (int i = 1; i <= d; ++i) names.push_back("x" + std::to_string(i));
  return VectorSpaceDecl(std::move(names));
}

bool Vector::is_zero() const {
  return std::all_of(c.begin(), c.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

Vector Vector::zero(int d) { return Vector(std::vector<Scalar>(d)); }

Vector Vector::unit(int d, int i) {
  Vector v = zero(d);
  v.c[i] = Scalar::one();
  return v;
}

Vector& Vector::operator+=(const Vector& o) {
  if (dim() != o.dim()) throw std::invalid_argument("vector dimension mismatch");
  for (int i = 0; i < dim(); ++i) c[i] += o.c[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  if (dim() != o.dim()) throw std::invalid_argument("vector dimension mismatch");
  for (int i = 0; i < dim(); ++i) c[i] -= o.c[i];
  return *this;
}

Vector operator*(const Scalar& s, Vector v) {
  for (auto& x : v.c) x *= s;
  return v;
}

LinearMap::LinearMap(std::vector<Vector> cols) : columns(std::move(cols)) {
  for (const auto& col : columns)
    if (col.dim() != dim())
      throw std::invalid_argument("linear map must be square");
}

bool LinearMap::is_zero() const {
  return std::all_of(columns.begin(), columns.end(),
                     [](const Vector& v) { return v.is_zero(); });
}

Vector LinearMap::apply(const Vector& v) const {
  if (v.dim() != dim()) throw std::invalid_argument("map/vector dimension mismatch");
  Vector acc = Vector::zero(dim());
  for (int j = 0; j < dim(); ++j) {
    if (v.c[j].is_zero()) continue;
    acc += v.c[j] * columns[j];
  }
  return acc;
}

LinearMap LinearMap::identity(int d) {
  std::vector<Vector> cols;
  cols.reserve(d);
  for (int j = 0; j < d; ++j) cols.push_back(Vector::unit(d, j));
  return LinearMap(std::move(cols));
}

LinearMap LinearMap::zero(int d) {
  return LinearMap(std::vector<Vector>(d, Vector::zero(d)));
}

LinearMap LinearMap::single_column(int d, int j, Vector v) {
  LinearMap m = zero(d);
  m.columns[j] = std::move(v);
  return m;
}

LinearMap operator*(const Scalar& s, LinearMap m) {
  for (auto& col : m.columns) col = s * col;
  return m;
}

bool TraceFunctional::is_zero() const {
  return std::all_of(cov.begin(), cov.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

Scalar TraceFunctional::eval(const Vector& v) const {
  if (v.dim() != dim())
    throw std::invalid_argument("functional/vector dimension mismatch");
  Scalar acc;
  for (int i = 0; i < dim(); ++i) {
    if (cov[i].is_zero() || v.c[i].is_zero()) continue;
    acc += cov[i] * v.c[i];
  }
  return acc;
}

std::vector<Vector> kernel_basis(const TraceFunctional& tau) {
  const int d = tau.dim();
  for (const Scalar& s : tau.cov)
    if (!s.is_rational())
      throw std::domain_error("kernel basis needs rational covector entries");
  int pivot = -1;
  for (int i = 0; i < d; ++i)
    if (!tau.cov[i].is_zero()) {
      pivot = i;
      break;
    }
  std::vector<Vector> basis;
  if (pivot < 0) {
    for (int i = 0; i < d; ++i) basis.push_back(Vector::unit(d, i));
    return basis;
  }
  for (int i = 0; i < d; ++i) {
    if (i == pivot) continue;
    Vector v = Vector::unit(d, i);
    if (!tau.cov[i].is_zero()) {
      auto ratio = try_divide(tau.cov[i], tau.cov[pivot]);
      v -= *ratio * Vector::unit(d, pivot);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar determinant(const std::vector<Vector>& columns) {
  const int d = static_cast<int>(columns.size());
  for (const auto& col : columns)
    if (col.dim() != d) throw std::invalid_argument("determinant needs a square matrix");
  if (d == 0) return Scalar::one();
  // Laplace expansion along the last column, recursing on row subsets.
  std::vector<int> rows(d);
  for (int i = 0; i < d; ++i) rows[i] = i;
  struct Rec {
    const std::vector<Vector>& cols;
    Scalar run(std::vector<int>& rows, int col) {
      const int k = static_cast<int>(rows.size());
      if (k == 1) return cols[col].c[rows[0]];
      Scalar acc;
      for (int t = 0; t < k; ++t) {
        const Scalar& entry = cols[col].c[rows[t]];
        if (entry.is_zero()) continue;
        std::vector<int> sub;
        sub.reserve(k - 1);
        for (int m = 0; m < k; ++m)
          if (m != t) sub.push_back(rows[m]);
        Scalar minor = run(sub, col - 1);
        if (minor.is_zero()) continue;
        Scalar term = entry * minor;
        if ((k - 1 + t) % 2 != 0) term = -term;
        acc += term;
      }
      return acc;
    }
  } rec{columns};
  return rec.run(rows, d - 1);
}

bool in_span(const std::vector<Vector>& span_vecs, const Vector& v) {
  if (span_vecs.empty()) return v.is_zero();
  const int d = v.dim();
  // Exact Gaussian elimination on the augmented system over the
  // rationals; symbolic coordinates are handled via try_divide and
  // reported unattainable when a pivot ratio is inexact.
  std::vector<Vector> cols = span_vecs;
  Vector target = v;
  std::vector<bool> used_row(d, false);
  for (auto& col : cols) {
    int pivot = -1;
    for (int i = 0; i < d; ++i)
      if (!used_row[i] && !col.c[i].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    used_row[pivot] = true;
    // eliminate the pivot coordinate from the target and the other columns
    if (!target.c[pivot].is_zero()) {
      auto ratio = try_divide(target.c[pivot], col.c[pivot]);
      if (!ratio) return false;
      target -= *ratio * col;
    }
    for (auto& other : cols) {
      if (&other == &col) continue;
      if (other.c[pivot].is_zero()) continue;
      auto ratio = try_divide(other.c[pivot], col.c[pivot]);
      if (!ratio) return false;
      other -= *ratio * col;
    }
  }
  return target.is_zero();
}

std::string to_string(const Vector& v, const VectorSpaceDecl& space,
                      const ParameterContext& ctx) {
  if (v.is_zero()) return "0";
  std::string out;
  for (int i = 0; i < v.dim(); ++i) {
    const Scalar& s = v.c[i];
    if (s.is_zero()) continue;
    std::string coeff = to_string(s, ctx);
    std::string term;
    if (coeff == "1")
      term = space.basis[i];
    else if (coeff == "-1")
      term = "-" + space.basis[i];
    else if (s.is_rational())
      term = coeff + "*" + space.basis[i];
    else
      term = "(" + coeff + ")*" + space.basis[i];
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace homnambu
