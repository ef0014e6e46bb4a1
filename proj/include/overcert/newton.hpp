#pragma once

// Newton's method and alpha-theory certificates for square systems.

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "overcert/error.hpp"
#include "overcert/linalg.hpp"
#include "overcert/polynomial.hpp"
#include "overcert/scalar.hpp"

namespace overcert {

/// (13 - 3 sqrt 17) / 4, the alpha-test threshold.
inline double alpha_threshold() { return (13.0 - 3.0 * std::sqrt(17.0)) / 4.0; }

struct CertConfig {
  unsigned sqrt_bits = 64;
  unsigned dyadic_bits = 212;
  double rcond_min = 1e-14;
  int budget = 64;
};

/// A square system together with its cached derivatives and norms.
template <class S>
class SquareSystem {
 public:
  SquareSystem(PolySystem<S> sys) : sys_(std::move(sys)) {
    if (!sys_.is_square()) fail(ErrorCode::NotSquare, "expected a square system");
    for (const auto& p : sys_.polys) {
      if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "zero polynomial in square system");
      degrees_.push_back(p.degree());
    }
    dpolys_ = jacobian_polys(sys_);
    bw_sq_ = bw_norm_sq(sys_);
    if constexpr (!is_exact_v<S>) exact_ = convert_system<GaussianRational>(sys_);
  }

  const PolySystem<S>& system() const { return sys_; }
  std::size_t n() const { return sys_.nvars; }
  const std::vector<int>& degrees() const { return degrees_; }
  int max_degree() const { return *std::max_element(degrees_.begin(), degrees_.end()); }
  const real_t<S>& bw_sq() const { return bw_sq_; }

  std::vector<S> eval(const Point<S>& z) const { return overcert::eval(sys_, z); }

  /// g(z) correctly evaluated: doubles are exact rationals, so soft mode
  /// evaluates exactly and rounds once.
  std::vector<S> residual(const Point<S>& z) const {
    if constexpr (is_exact_v<S>) {
      return eval(z);
    } else {
      require_dims(z.size(), n(), "residual");
      std::vector<S> out;
      for (const auto& v : overcert::eval(exact_, convert_point<GaussianRational>(z)))
        out.push_back(scalar_traits<GaussianRational>::to_complex(v));
      return out;
    }
  }
  Matrix<S> jacobian(const Point<S>& z) const {
    require_dims(z.size(), n(), "jacobian");
    return overcert::jacobian(dpolys_, z);
  }

 private:
  PolySystem<S> sys_;
  std::vector<int> degrees_;
  std::vector<std::vector<Polynomial<S>>> dpolys_;
  real_t<S> bw_sq_;
  PolySystem<GaussianRational> exact_;
};

template <class S>
struct AlphaCertificate {
  Point<S> center;
  real_t<S> beta_upper{0};
  /// Soft mode only: allowance for rounding in the linear solve.
  real_t<S> rounding{0};
  real_t<S> gamma_upper{0};
  real_t<S> alpha_upper{0};
  bool certified = false;
  /// 1/(20 gamma) when alpha < 0.03, else 0.
  real_t<S> uniqueness_radius{0};
  std::string diagnostic;

  /// 2 beta, widened by the rounding allowance in soft mode.
  real_t<S> radius() const { return real_t<S>(2) * (beta_upper + rounding); }
};

/// rate(0) = base, rate(k) = 2^(-2^(k-1)) * base. Steps beyond `cap` reuse
/// rate(cap), which is larger and so still a valid radius.
template <class S>
struct RateSchedule {
  real_t<S> base{0};
  static constexpr int cap = 10;

  real_t<S> rate(int k) const {
    if (k <= 0) return base;
    const int e = 1 << (std::min(k, cap) - 1);
    if constexpr (is_exact_v<S>) {
      Rational r = base;
      mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
      return r;
    } else {
      return std::ldexp(base, -e);
    }
  }
};

template <class S>
struct Candidate {
  Point<S> point;
  real_t<S> rho{0};
  int iterate_count = 0;
  std::string source_system_id;
  std::optional<AlphaCertificate<S>> certificate;
  std::optional<RateSchedule<S>> schedule;
  int schedule_steps = 0;
  /// Set when refinement stopped early; `point` is then the last good one.
  bool stalled = false;
  std::string diagnostic;

  bool certified() const { return certificate && certificate->certified; }
};

namespace detail {

template <class S>
real_t<S> threshold_003() {
  return scalar_traits<S>::real_from_rational(Rational(3, 100));
}

/// alpha < (13 - 3 sqrt 17)/4, decided exactly for rationals.
template <class S>
bool below_alpha_threshold(const real_t<S>& a) {
  if constexpr (is_exact_v<S>) {
    // 4a < 13 - 3 sqrt(17)  <=>  13 - 4a > 0 and 153 < (13 - 4a)^2.
    Rational t = Rational(13) - 4 * a;
    return t > 0 && Rational(153) < t * t;
  } else {
    return a < alpha_threshold();
  }
}

template <class S>
std::vector<S> newton_delta(const SquareSystem<S>& g, const Point<S>& z, const CertConfig& cfg,
                            bool accurate = true) {
  auto lu = LuFactorization<S>::factor(g.jacobian(z), cfg.rcond_min);
  auto delta = lu.solve(accurate ? g.residual(z) : g.eval(z));
  for (const auto& d : delta) scalar_traits<S>::check_finite(d);
  return delta;
}

}  // namespace detail

/// z - Dg(z)^{-1} g(z).
template <class S>
Point<S> newton_step(const SquareSystem<S>& g, const Point<S>& z, const CertConfig& cfg = {}) {
  require_dims(z.size(), g.n(), "newton_step");
  auto delta = detail::newton_delta(g, z, cfg);
  Point<S> out = z;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= delta[i];
  return out;
}

template <class S>
Point<S> newton_step(const PolySystem<S>& g, const Point<S>& z, const CertConfig& cfg = {}) {
  return newton_step(SquareSystem<S>(g), z, cfg);
}

/// ||Dg(z)^{-1} g(z)||; an upper envelope in exact mode.
template <class S>
real_t<S> beta(const SquareSystem<S>& g, const Point<S>& z, const CertConfig& cfg = {}) {
  require_dims(z.size(), g.n(), "beta");
  auto delta = detail::newton_delta(g, z, cfg);
  return scalar_traits<S>::sqrt_upper(norm_sq(delta), cfg.sqrt_bits);
}

template <class S>
real_t<S> beta(const PolySystem<S>& g, const Point<S>& z, const CertConfig& cfg = {}) {
  return beta(SquareSystem<S>(g), z, cfg);
}

namespace detail {

// gamma_hat^2 = mu^2 D^3 / (4 (1 + ||z||^2)), with
// mu^2 = max(1, ||g||^2 * ||Dg^{-1} diag(sqrt(d_i) ||(1,z)||^(d_i - 1))||_F^2).
template <class S>
real_t<S> gamma_sq(const SquareSystem<S>& g, const Point<S>& z, const Matrix<S>& inv) {
  using Real = real_t<S>;
  const std::size_t n = g.n();
  Real one_plus(1);
  one_plus += norm_sq(z);
  std::vector<Real> col_weight(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int d = g.degrees()[i];
    Real w(d);
    for (int e = 1; e < d; ++e) w *= one_plus;
    col_weight[i] = w;
  }
  Real frob(0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) frob += scalar_traits<S>::norm_sq(inv(r, i)) * col_weight[i];
  }
  Real mu_sq = g.bw_sq() * frob;
  if (mu_sq < Real(1)) mu_sq = Real(1);
  const Real big_d(g.max_degree());
  Real out = mu_sq * big_d * big_d * big_d;
  out /= Real(4) * one_plus;
  return out;
}

}  // namespace detail

/// First-derivative upper bound on gamma(g, z).
template <class S>
real_t<S> gamma_bound(const SquareSystem<S>& g, const Point<S>& z, const CertConfig& cfg = {}) {
  require_dims(z.size(), g.n(), "gamma_bound");
  auto lu = LuFactorization<S>::factor(g.jacobian(z), cfg.rcond_min);
  return scalar_traits<S>::sqrt_upper(detail::gamma_sq(g, z, lu.inverse()), cfg.sqrt_bits);
}

template <class S>
real_t<S> gamma_bound(const PolySystem<S>& g, const Point<S>& z, const CertConfig& cfg = {}) {
  return gamma_bound(SquareSystem<S>(g), z, cfg);
}

namespace detail {

/// Soft mode: a bound on how far the root near z moves when every
/// coefficient of g is perturbed by one rounding, ||Dg^{-1}| e|| with
/// e_i = 2^-52 sum |c| |z^a|. Zero in exact mode.
template <class S>
real_t<S> coefficient_slack(const SquareSystem<S>& g, const Point<S>& z, const CertConfig& cfg) {
  if constexpr (is_exact_v<S>) {
    return real_t<S>(0);
  } else {
    const std::size_t n = g.n();
    std::vector<double> e(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [m, c] : g.system().polys[i].terms()) {
        double t = std::abs(c);
        for (std::size_t k = 0; k < n; ++k) t *= std::pow(std::abs(z[k]), m[k]);
        e[i] += t;
      }
      e[i] = std::ldexp(e[i], -52);
    }
    Matrix<S> inv;
    try {
      inv = LuFactorization<S>::factor(g.jacobian(z), cfg.rcond_min).inverse();
    } catch (const Error&) {
      return std::numeric_limits<double>::infinity();
    }
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      double row = 0.0;
      for (std::size_t i = 0; i < n; ++i) row += std::abs(inv(r, i)) * e[i];
      s += row * row;
    }
    return std::sqrt(s);
  }
}

}  // namespace detail

/// Alpha test at z. A singular Jacobian yields an uncertified result with a
/// diagnostic instead of an exception.
template <class S>
AlphaCertificate<S> certify_square(const SquareSystem<S>& g, const Point<S>& z,
                                   const CertConfig& cfg = {}) {
  require_dims(z.size(), g.n(), "certify_square");
  using Traits = scalar_traits<S>;
  AlphaCertificate<S> cert;
  cert.center = z;
  try {
    auto lu = LuFactorization<S>::factor(g.jacobian(z), cfg.rcond_min);
    auto delta = lu.solve(g.residual(z));
    for (const auto& d : delta) Traits::check_finite(d);
    cert.beta_upper = Traits::sqrt_upper(norm_sq(delta), cfg.sqrt_bits);
    // The solve itself is still in doubles: allow its relative error.
    if constexpr (!is_exact_v<S>) {
      cert.rounding = cert.beta_upper * static_cast<double>(g.n()) * std::ldexp(1.0, -52) / lu.rcond();
    }
    cert.gamma_upper = Traits::sqrt_upper(detail::gamma_sq(g, z, lu.inverse()), cfg.sqrt_bits);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularJacobian && e.code() != ErrorCode::NonFiniteResult) throw;
    cert.diagnostic = e.what();
    return cert;
  }
  cert.alpha_upper = cert.beta_upper * cert.gamma_upper;
  if constexpr (!is_exact_v<S>) Traits::check_finite(cert.alpha_upper);
  cert.certified = detail::below_alpha_threshold<S>(cert.alpha_upper);
  if (cert.alpha_upper < detail::threshold_003<S>()) {
    real_t<S> r(1);
    r /= real_t<S>(20) * cert.gamma_upper;
    cert.uniqueness_radius = r;
  }
  if (!cert.certified) cert.diagnostic = "alpha above threshold";
  return cert;
}

template <class S>
AlphaCertificate<S> certify_square(const PolySystem<S>& g, const Point<S>& z,
                                   const CertConfig& cfg = {}) {
  return certify_square(SquareSystem<S>(g), z, cfg);
}

/// Candidate at z carrying its certificate; certified ones get rho = 2 beta
/// and a fresh rate schedule.
template <class S>
Candidate<S> make_candidate(const SquareSystem<S>& g, const Point<S>& z, const CertConfig& cfg = {},
                            std::string source = {}) {
  Candidate<S> c;
  c.point = z;
  c.source_system_id = std::move(source);
  c.certificate = certify_square(g, z, cfg);
  if (c.certificate->certified) {
    c.rho = c.certificate->radius();
    c.schedule = RateSchedule<S>{c.rho};
  } else {
    c.diagnostic = c.certificate->diagnostic;
  }
  return c;
}

template <class S>
Candidate<S> make_candidate(const PolySystem<S>& g, const Point<S>& z, const CertConfig& cfg = {},
                            std::string source = {}) {
  return make_candidate(SquareSystem<S>(g), z, cfg, std::move(source));
}

/// ||c1 - c2|| > rho1 + rho2, strictly.
template <class S>
bool distinct(const Candidate<S>& c1, const Candidate<S>& c2) {
  const real_t<S> d2 = distance_sq(c1.point, c2.point);
  const real_t<S> r = c1.rho + c2.rho;
  return d2 > r * r;
}

/// ||center - z2|| < 1/(20 gamma); requires alpha < 0.03.
template <class S>
bool same_root(const AlphaCertificate<S>& cert, const Point<S>& z2) {
  if (!(cert.alpha_upper < detail::threshold_003<S>()) || !cert.certified)
    fail(ErrorCode::PreconditionFailed, "same_root needs a certificate with alpha < 0.03");
  const real_t<S> d2 = distance_sq(cert.center, z2);
  const real_t<S> g20 = real_t<S>(20) * cert.gamma_upper;
  return d2 * g20 * g20 < real_t<S>(1);
}

template <class S>
bool same_root(const SquareSystem<S>&, const AlphaCertificate<S>& cert, const Point<S>& z2) {
  return same_root(cert, z2);
}

/// k Newton steps. While a rate schedule is held the radius follows it; in
/// exact mode each step is rounded to a dyadic point and re-certified there.
template <class S>
Candidate<S> refine(const SquareSystem<S>& g, Candidate<S> c, int k, const CertConfig& cfg = {}) {
  require_dims(c.point.size(), g.n(), "refine");
  for (int step = 0; step < k; ++step) {
    Point<S> next;
    try {
      next = newton_step(g, c.point, cfg);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SingularJacobian && e.code() != ErrorCode::NonFiniteResult) throw;
      c.stalled = true;
      c.diagnostic = e.what();
      return c;
    }
    if constexpr (is_exact_v<S>) {
      for (auto& x : next) x = scalar_traits<S>::round(x, cfg.dyadic_bits);
      auto cert = certify_square(g, next, cfg);
      if (!cert.certified) {
        c.stalled = true;
        c.diagnostic = "re-certification failed after rounding: " + cert.diagnostic;
        return c;
      }
      c.point = std::move(next);
      c.rho = cert.radius();
      c.certificate = std::move(cert);
      c.schedule = RateSchedule<S>{c.rho};
      c.schedule_steps = 0;
    } else {
      c.point = std::move(next);
      auto cert = certify_square(g, c.point, cfg);
      if (c.schedule) {
        // The schedule contracts far below what doubles can resolve, so the
        // radius never drops under the rounding floor at the new point.
        ++c.schedule_steps;
        c.rho = c.schedule->rate(c.schedule_steps);
        if (cert.certified) c.rho = std::max(c.rho, cert.radius());
        if (cert.certified || !c.certificate) c.certificate = std::move(cert);
      } else {
        if (cert.certified) {
          c.rho = cert.radius();
          c.schedule = RateSchedule<S>{c.rho};
          c.schedule_steps = 0;
        }
        c.certificate = std::move(cert);
      }
    }
    ++c.iterate_count;
  }
  return c;
}

template <class S>
Candidate<S> refine(const PolySystem<S>& g, Candidate<S> c, int k, const CertConfig& cfg = {}) {
  return refine(SquareSystem<S>(g), std::move(c), k, cfg);
}

/// Refines until every pair is distinct or merged as the same root.
template <class S>
std::vector<Candidate<S>> separate_all(const SquareSystem<S>& g, std::vector<Candidate<S>> cands,
                                       const CertConfig& cfg = {}) {
  for (const auto& c : cands) {
    if (!c.certified()) fail(ErrorCode::PreconditionFailed, "separate_all needs certified candidates");
  }
  for (int round = 0; round <= cfg.budget; ++round) {
    std::vector<bool> drop(cands.size(), false);
    std::vector<bool> touch(cands.size(), false);
    bool clean = true;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (drop[i]) continue;
      for (std::size_t j = i + 1; j < cands.size(); ++j) {
        if (drop[j] || distinct(cands[i], cands[j])) continue;
        auto cert = certify_square(g, cands[i].point, cfg);
        if (cert.certified && cert.alpha_upper < detail::threshold_003<S>() &&
            same_root(cert, cands[j].point)) {
          drop[j] = true;
          continue;
        }
        clean = false;
        touch[i] = touch[j] = true;
      }
    }
    std::vector<Candidate<S>> kept;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (drop[i]) continue;
      if (touch[i]) {
        if (round == cfg.budget)
          fail(ErrorCode::BudgetExhausted, "could not separate candidates within the budget");
        auto r = refine(g, cands[i], 1, cfg);
        if (r.stalled)
          fail(ErrorCode::BudgetExhausted, "refinement stalled while separating: " + r.diagnostic);
        kept.push_back(std::move(r));
      } else {
        kept.push_back(std::move(cands[i]));
      }
    }
    cands = std::move(kept);
    if (clean) return cands;
  }
  fail(ErrorCode::BudgetExhausted, "could not separate candidates within the budget");
}

template <class S>
std::vector<Candidate<S>> separate_all(const PolySystem<S>& g, std::vector<Candidate<S>> cands,
                                       const CertConfig& cfg = {}) {
  return separate_all(SquareSystem<S>(g), std::move(cands), cfg);
}

}  // namespace overcert
