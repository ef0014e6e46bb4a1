#pragma once

// Taylor residuals: certified lower bounds for |p| over a closed ball, used
// to reject candidates whose associated root does not solve the full system.

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "overcert/newton.hpp"
#include "overcert/polynomial.hpp"

namespace overcert {

namespace detail {

/// #terms * 2^-52 * sum |c| * max(1, ||z||_inf)^deg: the rounding allowance
/// for a double-precision evaluation of p at z.
inline double eval_error_bound(const Polynomial<Complex>& p, const Point<Complex>& z) {
  double zmax = 1.0;
  for (const auto& c : z) zmax = std::max(zmax, std::abs(c));
  double coef_sum = 0.0;
  for (const auto& [m, c] : p.terms()) coef_sum += std::abs(c);
  return static_cast<double>(p.size()) * std::ldexp(1.0, -52) * coef_sum *
         std::pow(zmax, static_cast<double>(std::max(p.degree(), 0)));
}

// Lower bound on |p(z)| given the exact or computed value.
template <class S>
real_t<S> value_lower_bound(const Polynomial<S>& p, const Point<S>& z, const S& value) {
  if constexpr (is_exact_v<S>) {
    return scalar_traits<S>::abs_lower(value);
  } else {
    return std::abs(value) - eval_error_bound(p, z);
  }
}

}  // namespace detail

/// L(p, z) - sum_k B_k(p, z) rho^k. A positive value certifies that p has no
/// zero in the closed ball of radius rho about z.
template <class S>
real_t<S> taylor_residual(const Polynomial<S>& p, const Point<S>& z, const real_t<S>& rho) {
  require_dims(z.size(), p.nvars(), "taylor_residual");
  if (rho < real_t<S>(0)) fail(ErrorCode::PreconditionFailed, "negative radius");
  if (p.is_zero()) return real_t<S>(0);
  const Polynomial<S> shifted = taylor_shift(p, z);
  const S value = shifted.coefficient(Monomial(p.nvars()));
  real_t<S> out = detail::value_lower_bound(p, z, value);
  real_t<S> rho_k(1);
  for (int k = 1; k <= p.degree(); ++k) {
    rho_k *= rho;
    out -= deriv_ell1_bound_from_shift(shifted, k) * rho_k;
  }
  if constexpr (!is_exact_v<S>) scalar_traits<S>::check_finite(out);
  return out;
}

template <class S>
struct TaylorResidualReport {
  std::vector<real_t<S>> per_poly;
  real_t<S> system_residual{0};
  real_t<S> rho_used{0};
  /// Index of the polynomial attaining the maximum.
  std::size_t witness = 0;

  bool rejects() const { return system_residual > real_t<S>(0); }
};

template <class S>
TaylorResidualReport<S> residual_report(const PolySystem<S>& f, const Point<S>& z,
                                        const real_t<S>& rho) {
  if (f.polys.empty()) fail(ErrorCode::EmptyInput, "empty system");
  require_dims(z.size(), f.nvars, "residual_report");
  TaylorResidualReport<S> r;
  r.rho_used = rho;
  for (std::size_t i = 0; i < f.size(); ++i) {
    r.per_poly.push_back(taylor_residual(f.polys[i], z, rho));
    if (i == 0 || r.per_poly[i] > r.system_residual) {
      r.system_residual = r.per_poly[i];
      r.witness = i;
    }
  }
  return r;
}

template <class S>
TaylorResidualReport<S> residual_report(const PolySystem<S>& f, const Candidate<S>& c) {
  return residual_report(f, c.point, c.rho);
}

template <class S>
struct RejectOutcome {
  bool rejected = false;
  TaylorResidualReport<S> report;
  int steps = 0;
  Candidate<S> final_candidate;
  std::string diagnostic;
};

/// Alternates residual checks with Newton refinement on g.
template <class S>
RejectOutcome<S> refine_and_reject(const PolySystem<S>& f, const SquareSystem<S>& g, Candidate<S> c,
                                   int max_steps, const CertConfig& cfg = {}) {
  RejectOutcome<S> out;
  if (!c.certified()) {
    out.final_candidate = std::move(c);
    out.diagnostic = "candidate is not certified";
    return out;
  }
  for (int step = 0;; ++step) {
    out.report = residual_report(f, c);
    out.steps = step;
    if (out.report.rejects()) {
      out.rejected = true;
      break;
    }
    if (step == max_steps) break;
    c = refine(g, std::move(c), 1, cfg);
    if (c.stalled) {
      out.diagnostic = c.diagnostic;
      break;
    }
  }
  out.final_candidate = std::move(c);
  return out;
}

template <class S>
RejectOutcome<S> refine_and_reject(const PolySystem<S>& f, const PolySystem<S>& g, Candidate<S> c,
                                   int max_steps, const CertConfig& cfg = {}) {
  return refine_and_reject(f, SquareSystem<S>(g), std::move(c), max_steps, cfg);
}

}  // namespace overcert
