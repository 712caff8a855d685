#include "homnambu/compat.hpp"

#include <sstream>

namespace homnambu {

const char* to_string(TupleClass k) {
  switch (k) {
    case TupleClass::DegenerateKernelV: return "Degenerate-kernel-V";
    case TupleClass::DegenerateKernelZero: return "Degenerate-kernel-0";
    case TupleClass::C1: return "C1";
    case TupleClass::C2: return "C2";
    case TupleClass::ForcedZeroMaps: return "ForcedZeroMaps";
    case TupleClass::Incompatible: return "Incompatible";
  }
  return "?";
}

namespace {

void require_square(const std::vector<LinearMap>& alphas,
                    const TraceFunctional& tau) {
  const int d = tau.dim();
  if (d <= 0) throw std::invalid_argument("empty space");
  for (const auto& a : alphas)
    if (a.dim() != d)
      throw std::invalid_argument("map/functional dimension mismatch");
}

}  // namespace

CheckReport check_compatibility(const std::vector<LinearMap>& alphas,
                                const TraceFunctional& tau,
                                const CheckOptions& opt) {
  require_square(alphas, tau);
  const int d = tau.dim();
  const int n = static_cast<int>(alphas.size());
  CheckReport rep;
  rep.identity = "compatibility";

  // tau(alpha_i(e_x)) precomputed
  std::vector<std::vector<Scalar>> ta(n, std::vector<Scalar>(d));
  for (int i = 0; i < n; ++i)
    for (int x = 0; x < d; ++x) ta[i][x] = tau.eval(alphas[i].column(x));

  for (int i = 0; i < n; ++i) {
    for (int x = 0; x < d; ++x) {
      for (int y = 0; y < d; ++y) {
        ++rep.tuples_checked;
        Scalar lhs = ta[i][x] * tau.on_basis(y);
        Scalar rhs = tau.on_basis(x) * ta[i][y];
        if (lhs != rhs) {
          Violation v;
          v.blocks = {{x}, {y}};
          v.defect = lhs - rhs;
          std::ostringstream os;
          os << "trace relation, i=" << (i + 1);
          v.where = os.str();
          rep.violations.push_back(std::move(v));
          if (opt.stop_at_first) return rep;
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int x = 0; x < d; ++x) {
        for (int y = 0; y < d; ++y) {
          ++rep.tuples_checked;
          Vector lhs = ta[i][x] * alphas[j].column(y);
          Vector rhs = ta[j][y] * alphas[i].column(x);
          if (lhs != rhs) {
            Violation v;
            v.blocks = {{x}, {y}};
            v.defect = lhs - rhs;
            std::ostringstream os;
            os << "map relation, i=" << (i + 1) << ", j=" << (j + 1);
            v.where = os.str();
            rep.violations.push_back(std::move(v));
            if (opt.stop_at_first) return rep;
          }
        }
      }
    }
  }
  return rep;
}

TupleClassification classify_tuple(const std::vector<LinearMap>& alphas,
                                   const TraceFunctional& tau) {
  require_square(alphas, tau);
  const int d = tau.dim();
  const int n = static_cast<int>(alphas.size());
  TupleClassification out;

  if (tau.is_zero()) {
    out.kind = TupleClass::DegenerateKernelV;
    out.detail = "tau = 0, every bracket induced through it vanishes";
    return out;
  }
  if (d == 1) {
    out.kind = TupleClass::DegenerateKernelZero;
    out.detail = "nonzero functional on a line has trivial kernel";
    return out;
  }

  int u = -1;
  for (int i = 0; i < d; ++i)
    if (!tau.on_basis(i).is_zero()) {
      u = i;
      break;
    }
  out.witness_u = u;

  std::vector<bool> to_kernel(n, false);
  for (int i = 0; i < n; ++i) {
    Scalar t = tau.eval(alphas[i].column(u));
    if (t.is_zero()) {
      // claimed kernel-valued; verify on the whole basis
      for (int j = 0; j < d; ++j) {
        if (!tau.eval(alphas[i].column(j)).is_zero()) {
          out.kind = TupleClass::Incompatible;
          std::ostringstream os;
          os << "map " << (i + 1) << " sends the witness into the kernel "
             << "but basis vector " << (j + 1) << " outside it";
          out.detail = os.str();
          return out;
        }
      }
      to_kernel[i] = true;
      out.kernel_valued.push_back(i);
    }
  }

  const bool any_kernel = !out.kernel_valued.empty();
  const bool all_kernel =
      static_cast<int>(out.kernel_valued.size()) == n;
  if (n == 0 || all_kernel) {
    out.kind = TupleClass::C2;
    out.detail = "every map sends the space into ker tau";
    return out;
  }
  if (!any_kernel) {
    out.kind = TupleClass::C1;
    out.detail = "every map preserves the complement of ker tau";
    return out;
  }
  // Mixed: compatibility forces the kernel-valued maps to vanish.
  for (int i : out.kernel_valued) {
    if (!alphas[i].is_zero()) {
      out.kind = TupleClass::Incompatible;
      std::ostringstream os;
      os << "mixed tuple with nonzero kernel-valued map " << (i + 1);
      out.detail = os.str();
      return out;
    }
  }
  out.kind = TupleClass::ForcedZeroMaps;
  out.detail = "mixed tuple; the kernel-valued maps are zero";
  return out;
}

Scalar proportionality(const LinearMap& alpha_i, const LinearMap& alpha_j,
                       const TraceFunctional& tau) {
  auto cls = classify_tuple({alpha_i, alpha_j}, tau);
  if (cls.kind != TupleClass::C1)
    throw std::invalid_argument(
        std::string("proportionality needs a C1 pair, got ") +
        to_string(cls.kind));
  const int d = tau.dim();
  std::optional<Scalar> lambda;
  for (int u = 0; u < d; ++u) {
    if (tau.on_basis(u).is_zero()) continue;
    Scalar ti = tau.eval(alpha_i.column(u));
    Scalar tj = tau.eval(alpha_j.column(u));
    auto ratio = try_divide(ti, tj);
    if (!ratio)
      throw std::invalid_argument("proportionality ratio is not exact");
    if (lambda && *lambda != *ratio)
      throw std::invalid_argument("witness-dependent ratio; maps not proportional");
    lambda = *ratio;
  }
  if (alpha_i != *lambda * alpha_j)
    throw std::invalid_argument("maps are not proportional");
  return *lambda;
}

}  // namespace homnambu
