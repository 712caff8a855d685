#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace homnambu {

using Rational = boost::multiprecision::cpp_rational;

/* Ordered list of symbolic parameter names.  Names follow the identifier
 * syntax (letter, then letters/digits/underscores) and must be unique.
 * The context fixes the width of every polynomial exponent vector, so
 * scalars from different contexts do not mix. */
class ParameterContext {
public:
  ParameterContext() = default;
  explicit ParameterContext(std::vector<std::string> names);

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  static bool valid_name(std::string_view name);

private:
  std::vector<std::string> names_;
};

class ScalarParseError : public std::runtime_error {
public:
  ScalarParseError(const std::string& what, std::size_t position);
  std::size_t position;
};

/* Exact scalar over the rationals: either a plain rational or a
 * multivariate polynomial with rational coefficients.
 *
 * Invariants of the canonical form:
 *   - rationals are kept in lowest terms with positive denominator
 *     (delegated to the backing rational type);
 *   - polynomial terms map dense exponent vectors (one slot per context
 *     parameter) to nonzero coefficients; zero coefficients are never
 *     stored;
 *   - a polynomial whose only term is constant collapses to the rational
 *     representation, so equality is representation equality.
 *
 * Polynomials form a commutative ring, not a field; see try_divide. */
class Scalar {
public:
  using ExponentVec = std::vector<std::uint32_t>;
  using TermMap = std::map<ExponentVec, Rational>;

  Scalar() : rat_(0) {}

  static Scalar from_int(long long v);
  static Scalar from_rational(Rational r);
  static Scalar parameter(const ParameterContext& ctx, std::string_view name);
  static Scalar zero() { return Scalar(); }
  static Scalar one() { return from_int(1); }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return terms_.empty(); }
  bool is_polynomial() const { return !terms_.empty(); }

  /* Valid only when is_rational(). */
  const Rational& rational_value() const;
  const TermMap& terms() const { return terms_; }
  std::size_t width() const { return width_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar pow(std::uint32_t e) const;

private:
  Rational rat_;      // value when terms_ is empty
  TermMap terms_;     // nonempty iff polynomial
  std::size_t width_ = 0;

  void normalize();
  static Scalar make_poly(std::size_t width, TermMap terms);
  friend std::optional<Scalar> try_divide(const Scalar&, const Scalar&);
};

/* Exact division.  Succeeds for rational divisors and for polynomial
 * divisors that divide without remainder; returns nullopt otherwise.
 * Division by zero is an error. */
std::optional<Scalar> try_divide(const Scalar& num, const Scalar& den);

/* Canonical text form; parse_scalar(to_string(s), ctx) == s. */
std::string to_string(const Scalar& s, const ParameterContext& ctx);

/* Grammar: integer and p/q literals, parameter names, unary minus,
 * binary + - *, ^ with nonnegative integer exponent, parentheses.
 * Unknown names and malformed input raise ScalarParseError with the
 * offending position. */
Scalar parse_scalar(std::string_view text, const ParameterContext& ctx);

}  // namespace homnambu
