#pragma once

#include "homnambu/scalar.hpp"

#include <string>
#include <vector>

namespace homnambu {

/* Finite-dimensional space given by an ordered list of basis names.
 * Names follow the identifier syntax and are unique; indices are
 * 0-based internally and 1-based in files and reports. */
struct VectorSpaceDecl {
  std::vector<std::string> basis;

  VectorSpaceDecl() = default;
  explicit VectorSpaceDecl(std::vector<std::string> names);

  int dim() const { return static_cast<int>(basis.size()); }
  bool operator==(const VectorSpaceDecl& o) const { return basis == o.basis; }

  /* x1..xd */
  static VectorSpaceDecl standard(int d);
};

/* Coordinate vector over the declared basis. */
struct Vector {
  std::vector<Scalar> c;

  Vector() = default;
  explicit Vector(std::vector<Scalar> coords) : c(std::move(coords)) {}

  int dim() const { return static_cast<int>(c.size()); }
  bool is_zero() const;

  static Vector zero(int d);
  static Vector unit(int d, int i);

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  bool operator==(const Vector& o) const { return c == o.c; }
  bool operator!=(const Vector& o) const { return !(*this == o); }
};

Vector operator*(const Scalar& s, Vector v);

/* Linear self-map stored by columns: columns[j] is the image of basis
 * vector j. */
struct LinearMap {
  std::vector<Vector> columns;

  LinearMap() = default;
  explicit LinearMap(std::vector<Vector> cols);

  int dim() const { return static_cast<int>(columns.size()); }
  bool is_zero() const;
  Vector apply(const Vector& v) const;
  const Vector& column(int j) const { return columns[j]; }

  static LinearMap identity(int d);
  static LinearMap zero(int d);
  /* all columns zero except column j = v */
  static LinearMap single_column(int d, int j, Vector v);

  bool operator==(const LinearMap& o) const { return columns == o.columns; }
  bool operator!=(const LinearMap& o) const { return !(*this == o); }
};

LinearMap operator*(const Scalar& s, LinearMap m);

/* Linear functional given by its values on the basis. */
struct TraceFunctional {
  std::vector<Scalar> cov;

  TraceFunctional() = default;
  explicit TraceFunctional(std::vector<Scalar> values) : cov(std::move(values)) {}

  int dim() const { return static_cast<int>(cov.size()); }
  bool is_zero() const;
  const Scalar& on_basis(int i) const { return cov[i]; }
  Scalar eval(const Vector& v) const;

  bool operator==(const TraceFunctional& o) const { return cov == o.cov; }
};

/* Basis of ker tau, obtained by exact row reduction of the single
 * linear condition.  Requires every covector entry to be rational;
 * symbolic entries make membership decidable but a kernel basis is not
 * produced for them (throws std::domain_error). */
std::vector<Vector> kernel_basis(const TraceFunctional& tau);

/* Exact determinant of a square matrix given by columns (Laplace
 * expansion; fine at the dimensions used here and valid over the
 * polynomial ring). */
Scalar determinant(const std::vector<Vector>& columns);

/* True when the given vectors span v as an exact linear combination. */
bool in_span(const std::vector<Vector>& span_vecs, const Vector& v);

std::string to_string(const Vector& v, const VectorSpaceDecl& space,
                      const ParameterContext& ctx);

}  // namespace homnambu
