#include "homnambu/identities.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <mutex>
#include <thread>

namespace homnambu {

namespace {

using detail::increasing_tuples;

std::uint64_t pow_u64(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void unflatten(std::uint64_t f, int d, std::vector<int>& t) {
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    t[i] = static_cast<int>(f % d);
    f /= d;
  }
}

std::size_t flatten(const std::vector<int>& t, int d) {
  std::size_t f = 0;
  for (int v : t) f = f * d + static_cast<std::size_t>(v);
  return f;
}

/* Dense value table of phi with each slot precomposed with the given
 * map (nullptr = keep the slot).  Entry order is row-major over basis
 * index tuples. */
std::vector<Vector> composed_tensor(const SkewMap& phi,
                                    const std::vector<const LinearMap*>& slot) {
  const int d = phi.dim();
  const int m = phi.arity;
  std::vector<Vector> out(pow_u64(d, m), Vector::zero(d));
  std::vector<int> t(m);
  std::vector<Vector> args(m);
  for (std::size_t f = 0; f < out.size(); ++f) {
    unflatten(f, d, t);
    for (int s = 0; s < m; ++s)
      args[s] = slot[s] ? slot[s]->column(t[s]) : Vector::unit(d, t[s]);
    out[f] = phi.eval_vectors(args);
  }
  return out;
}

struct DefectSink {
  CheckReport& rep;
  const CheckOptions& opt;
  std::mutex mu;
  std::atomic<bool> done{false};

  void add(std::vector<std::vector<int>> blocks, Vector defect) {
    std::lock_guard<std::mutex> lock(mu);
    Violation v;
    v.blocks = std::move(blocks);
    v.defect = std::move(defect);
    rep.violations.push_back(std::move(v));
    if (opt.stop_at_first) done = true;
  }
};

void sort_violations(CheckReport& rep) {
  std::sort(rep.violations.begin(), rep.violations.end(),
            [](const Violation& a, const Violation& b) {
              return a.blocks < b.blocks;
            });
}

/* Full-basis enumeration for distinct twists.  LHS and the k-th
 * right-hand term are linear in the inner bracket value, so each pair
 * reduces to lookups into m+1 precomposed tensors. */
void hnj_full(const HomNambuAlgebra& A, CheckReport& rep,
              const CheckOptions& opt) {
  const SkewMap& phi = A.bracket;
  const int d = phi.dim();
  const int m = phi.arity;

  std::vector<const LinearMap*> slots(m, nullptr);
  for (int s = 0; s + 1 < m; ++s) slots[s] = &A.twists[s];
  const std::vector<Vector> lhs_tensor = composed_tensor(phi, slots);

  std::vector<std::vector<Vector>> rhs_tensor(m);
  for (int k = 0; k < m; ++k) {
    std::vector<const LinearMap*> rslots(m, nullptr);
    for (int p = 0; p < k; ++p) rslots[p] = &A.twists[p];
    for (int p = k + 1; p < m; ++p) rslots[p] = &A.twists[p - 1];
    rhs_tensor[k] = composed_tensor(phi, rslots);
  }

  const std::uint64_t nx = pow_u64(d, m - 1);
  const std::uint64_t ny = pow_u64(d, m);
  DefectSink sink{rep, opt, {}, {}};
  std::atomic<std::uint64_t> counted{0};

  auto worker = [&](std::uint64_t xbegin, std::uint64_t xend) {
    std::vector<int> x(m - 1), y(m), inner(m), ywith(m);
    std::uint64_t local = 0;
    for (std::uint64_t xf = xbegin; xf < xend && !sink.done; ++xf) {
      unflatten(xf, d, x);
      std::copy(x.begin(), x.end(), inner.begin());
      for (std::uint64_t yf = 0; yf < ny && !sink.done; ++yf) {
        unflatten(yf, d, y);
        ++local;
        Vector w = phi.eval_basis(y);
        Vector defect = Vector::zero(d);
        bool touched = false;
        if (!w.is_zero()) {
          for (int j = 0; j < d; ++j) {
            if (w.c[j].is_zero()) continue;
            defect += w.c[j] * lhs_tensor[xf * d + j];
          }
          touched = true;
        }
        for (int k = 0; k < m; ++k) {
          inner[m - 1] = y[k];
          Vector v = phi.eval_basis(inner);
          if (v.is_zero()) continue;
          touched = true;
          std::copy(y.begin(), y.end(), ywith.begin());
          for (int j = 0; j < d; ++j) {
            if (v.c[j].is_zero()) continue;
            ywith[k] = j;
            defect -= v.c[j] * rhs_tensor[k][flatten(ywith, d)];
          }
        }
        if (touched && !defect.is_zero())
          sink.add({x, y}, std::move(defect));
      }
    }
    counted += local;
  };

  int jobs = std::max(1, opt.jobs);
  if (opt.stop_at_first) jobs = 1;  // keeps the reported defect deterministic
  if (jobs == 1 || nx < 2) {
    worker(0, nx);
  } else {
    jobs = static_cast<int>(std::min<std::uint64_t>(jobs, nx));
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
      std::uint64_t b = nx * t / jobs, e = nx * (t + 1) / jobs;
      pool.emplace_back(worker, b, e);
    }
    for (auto& th : pool) th.join();
  }
  rep.tuples_checked = counted;
  sort_violations(rep);
  if (opt.stop_at_first && rep.violations.size() > 1)
    rep.violations.resize(1);
}

/* Equal twists: the defect is alternating within each block, so the
 * strictly increasing tuples decide it. */
void hnj_restricted(const HomNambuAlgebra& A, CheckReport& rep,
                    const CheckOptions& opt) {
  const SkewMap& phi = A.bracket;
  const int d = phi.dim();
  const int m = phi.arity;
  const LinearMap* beta = A.twists.empty() ? nullptr : &A.twists[0];

  auto twist_col = [&](int i) {
    return beta ? beta->column(i) : Vector::unit(d, i);
  };

  for (const auto& x : increasing_tuples(d, m - 1)) {
    for (const auto& y : increasing_tuples(d, m)) {
      ++rep.tuples_checked;
      Vector w = phi.eval_basis(y);
      std::vector<Vector> args(m);
      Vector lhs = Vector::zero(d);
      if (!w.is_zero()) {
        for (int s = 0; s + 1 < m; ++s) args[s] = twist_col(x[s]);
        args[m - 1] = w;
        lhs = phi.eval_vectors(args);
      }
      Vector rhs = Vector::zero(d);
      std::vector<int> inner(m);
      std::copy(x.begin(), x.end(), inner.begin());
      for (int k = 0; k < m; ++k) {
        inner[m - 1] = y[k];
        Vector v = phi.eval_basis(inner);
        if (v.is_zero()) continue;
        for (int p = 0; p < k; ++p) args[p] = twist_col(y[p]);
        args[k] = v;
        for (int p = k + 1; p < m; ++p) args[p] = twist_col(y[p]);
        rhs += phi.eval_vectors(args);
      }
      Vector defect = lhs - rhs;
      if (!defect.is_zero()) {
        Violation viol;
        viol.blocks = {x, y};
        viol.defect = std::move(defect);
        rep.violations.push_back(std::move(viol));
        if (opt.stop_at_first) return;
      }
    }
  }
}

}  // namespace

CheckReport check_hom_nambu_jacobi(const HomNambuAlgebra& A,
                                   const CheckOptions& opt) {
  A.validate();
  CheckReport rep;
  rep.identity = "hom-nambu-jacobi";
  const int d = A.dim();
  const int m = A.arity();
  if (m > d) {
    rep.vacuous = true;
    rep.note = "arity exceeds dimension; bracket is identically zero";
    return rep;
  }
  bool same = true;
  for (std::size_t i = 1; i < A.twists.size(); ++i)
    if (!(A.twists[i] == A.twists[0])) {
      same = false;
      break;
    }
  if (same)
    hnj_restricted(A, rep, opt);
  else
    hnj_full(A, rep, opt);
  return rep;
}

CheckReport check_fundamental_identity(const SkewMap& phi,
                                       const CheckOptions& opt) {
  HomNambuAlgebra A;
  A.bracket = phi;
  A.twists.assign(phi.arity - 1, LinearMap::identity(phi.dim()));
  CheckReport rep = check_hom_nambu_jacobi(A, opt);
  rep.identity = "fundamental";
  return rep;
}

CheckReport check_phi_trace(const TraceFunctional& tau, const SkewMap& phi,
                            const CheckOptions& opt) {
  if (tau.dim() != phi.dim())
    throw std::invalid_argument("functional/bracket dimension mismatch");
  CheckReport rep;
  rep.identity = "trace";
  if (phi.arity > phi.dim()) {
    rep.vacuous = true;
    rep.note = "arity exceeds dimension; bracket is identically zero";
    return rep;
  }
  for (const auto& key : increasing_tuples(phi.dim(), phi.arity)) {
    ++rep.tuples_checked;
    auto it = phi.table.find(key);
    if (it == phi.table.end()) continue;
    Scalar t = tau.eval(it->second);
    if (!t.is_zero()) {
      Violation v;
      v.blocks = {key};
      v.defect = std::move(t);
      rep.violations.push_back(std::move(v));
      if (opt.stop_at_first) return rep;
    }
  }
  return rep;
}

CheckReport check_pform_compatible(const PForm& tau, const SkewMap& phi,
                                   const CheckOptions& opt) {
  if (!(tau.space == phi.space))
    throw std::invalid_argument("form/bracket live on different spaces");
  CheckReport rep;
  rep.identity = "pform-compatible";
  const int d = phi.dim();
  if (phi.arity > d) {
    rep.vacuous = true;
    rep.note = "arity exceeds dimension; bracket is identically zero";
    return rep;
  }
  for (const auto& key : increasing_tuples(d, phi.arity)) {
    auto it = phi.table.find(key);
    if (it == phi.table.end()) {
      rep.tuples_checked += increasing_tuples(d, tau.arity - 1).size();
      continue;
    }
    for (const auto& rest : increasing_tuples(d, tau.arity - 1)) {
      ++rep.tuples_checked;
      std::vector<Vector> args;
      args.reserve(tau.arity);
      args.push_back(it->second);
      for (int i : rest) args.push_back(Vector::unit(d, i));
      Scalar val = tau.eval_vectors(args);
      if (!val.is_zero()) {
        Violation v;
        v.blocks = {key, rest};
        v.defect = std::move(val);
        rep.violations.push_back(std::move(v));
        if (opt.stop_at_first) return rep;
      }
    }
  }
  return rep;
}

CheckReport check_gji(const SkewMap& phi, const CheckOptions& opt) {
  CheckReport rep;
  rep.identity = "generalized-jacobi";
  const int n = phi.arity;
  const int d = phi.dim();
  if (2 * n - 1 > d) {
    rep.vacuous = true;
    rep.note = "insertion arity exceeds dimension; identity holds vacuously";
    return rep;
  }
  SkewMap self = interior(phi, phi);
  rep.tuples_checked = increasing_tuples(d, self.arity).size();
  for (const auto& [key, val] : self.table) {
    Violation v;
    v.blocks = {key};
    v.defect = val;
    rep.violations.push_back(std::move(v));
    if (opt.stop_at_first) return rep;
  }
  return rep;
}

CheckReport check_wedge_hypothesis(const PForm& tau, const CheckOptions& opt) {
  CheckReport rep;
  rep.identity = "wedge-hypothesis";
  const int d = tau.dim();
  const int p = tau.arity;
  if (p + 1 > d) {
    rep.vacuous = true;
    rep.note = "wedge arity exceeds dimension; condition holds vacuously";
    return rep;
  }
  for (const auto& fixed_idx : increasing_tuples(d, p - 1)) {
    ++rep.tuples_checked;
    std::vector<Vector> fixed;
    fixed.reserve(p - 1);
    for (int i : fixed_idx) fixed.push_back(Vector::unit(d, i));
    PForm contracted = contract_pform(tau, fixed);
    PForm prod = wedge_forms(contracted, tau);
    for (const auto& [key, val] : prod.table) {
      Violation v;
      v.blocks = {fixed_idx, key};
      v.defect = val;
      rep.violations.push_back(std::move(v));
      if (opt.stop_at_first) return rep;
    }
  }
  return rep;
}

CheckReport check_abelian(const SkewMap& phi) {
  CheckReport rep;
  rep.identity = "abelian";
  rep.tuples_checked = phi.table.size();
  for (const auto& [key, val] : phi.table) {
    Violation v;
    v.blocks = {key};
    v.defect = val;
    rep.violations.push_back(std::move(v));
  }
  return rep;
}

}  // namespace homnambu
