#pragma once

// Deterministic multi-start damped Newton for small square systems.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <numbers>
#include <optional>
#include <thread>
#include <vector>

#include "overcert/newton.hpp"
#include "overcert/rng.hpp"

namespace overcert {

struct SolveConfig {
  int starts = 1000;
  std::uint64_t seed = 0;
  double box_radius = 1.0;
  int max_iters = 100;
  bool dedup = true;
  unsigned jobs = 1;
};

/// Runs fn(i) for i in [0, count) on up to `jobs` threads.
template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < count && !failed; i = next++) {
      try {
        fn(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned k = std::min<unsigned>(jobs, static_cast<unsigned>(count));
  for (unsigned t = 0; t < k; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

namespace detail {

inline double residual_norm(const SquareSystem<Complex>& g, const Point<Complex>& z) {
  double s = 0.0;
  for (const auto& v : g.eval(z)) s += std::norm(v);
  return std::sqrt(s);
}

// Damped Newton from z; nullopt when the iteration breaks down.
inline std::optional<Point<Complex>> damped_newton(const SquareSystem<Complex>& g, Point<Complex> z,
                                                   int max_iters, const CertConfig& cfg) {
  try {
    double res = residual_norm(g, z);
    for (int it = 0; it < max_iters; ++it) {
      auto delta = newton_delta(g, z, cfg, false);
      double step_norm = std::sqrt(norm_sq(delta));
      double znorm = std::sqrt(norm_sq(z));
      if (step_norm <= 1e-14 * (1.0 + znorm)) return z;
      double t = 1.0;
      Point<Complex> trial(z.size());
      double trial_res = 0.0;
      bool accepted = false;
      for (int h = 0; h <= 20; ++h, t *= 0.5) {
        for (std::size_t i = 0; i < z.size(); ++i) trial[i] = z[i] - t * delta[i];
        trial_res = residual_norm(g, trial);
        if (std::isfinite(trial_res) && trial_res < res) {
          accepted = true;
          break;
        }
      }
      if (!accepted) return z;
      z = trial;
      res = trial_res;
      if (!std::isfinite(std::sqrt(norm_sq(z)))) return std::nullopt;
    }
    return z;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SingularJacobian || e.code() == ErrorCode::NonFiniteResult)
      return std::nullopt;
    throw;
  }
}

// Either uniqueness ball contains the other point.
inline bool shares_root(const Candidate<Complex>& a, const Candidate<Complex>& b) {
  auto inside = [](const Candidate<Complex>& x, const Candidate<Complex>& y) {
    return x.certified() && x.certificate->alpha_upper < 0.03 && same_root(*x.certificate, y.point);
  };
  return inside(a, b) || inside(b, a);
}

inline bool lex_less_rounded(const Point<Complex>& a, const Point<Complex>& b) {
  auto key = [](double x) { return std::round(x * 1e8); };
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double ar = key(a[i].real()), br = key(b[i].real());
    if (ar != br) return ar < br;
    const double ai = key(a[i].imag()), bi = key(b[i].imag());
    if (ai != bi) return ai < bi;
  }
  return false;
}

}  // namespace detail

/// Pairwise-distinct certified candidates from `starts` random starting
/// points in the polydisc of radius box_radius. The result depends only on
/// (g, cfg), not on the worker count.
inline std::vector<Candidate<Complex>> multistart_solve(const SquareSystem<Complex>& g,
                                                        const SolveConfig& cfg,
                                                        const CertConfig& cc = {}) {
  if (cfg.starts < 1) fail(ErrorCode::PreconditionFailed, "starts must be >= 1");
  if (!(cfg.box_radius > 0)) fail(ErrorCode::PreconditionFailed, "box radius must be positive");
  const std::size_t n = g.n();
  std::vector<std::optional<Point<Complex>>> ends(static_cast<std::size_t>(cfg.starts));
  parallel_for(ends.size(), cfg.jobs, [&](std::size_t s) {
    CounterRng rng(cfg.seed, s);
    Point<Complex> z(n);
    for (auto& x : z) {
      const double r = cfg.box_radius * std::sqrt(rng.uniform());
      const double th = 2.0 * std::numbers::pi * rng.uniform();
      x = std::polar(r, th);
    }
    ends[s] = detail::damped_newton(g, std::move(z), cfg.max_iters, cc);
  });
  // A few steps with exactly evaluated residuals bring the radius down to
  // what doubles can represent.
  auto polish = [&](Point<Complex> p) {
    for (int k = 0; k < 3; ++k) {
      try {
        p = newton_step(g, p, cc);
      } catch (const Error&) {
        break;
      }
    }
    return make_candidate(g, p, cc, "g");
  };
  std::vector<Candidate<Complex>> out;
  if (!cfg.dedup) {
    std::vector<std::optional<Candidate<Complex>>> found(ends.size());
    parallel_for(ends.size(), cfg.jobs, [&](std::size_t s) {
      if (ends[s]) found[s] = polish(*ends[s]);
    });
    for (auto& c : found) {
      if (c && c->certified()) out.push_back(std::move(*c));
    }
  } else {
    // In start order; endpoints already inside a found root's uniqueness
    // ball are skipped before the costly polish.
    for (auto& e : ends) {
      if (!e) continue;
      bool known = false;
      for (const auto& k : out) {
        if (k.certificate->alpha_upper < 0.03 && same_root(*k.certificate, *e)) {
          known = true;
          break;
        }
      }
      if (known) continue;
      auto c = polish(*e);
      if (!c.certified()) continue;
      bool duplicate = false;
      for (const auto& k : out) {
        if (!distinct(k, c) || detail::shares_root(k, c)) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return detail::lex_less_rounded(a.point, b.point);
  });
  return out;
}

inline std::vector<Candidate<Complex>> multistart_solve(const PolySystem<Complex>& g,
                                                        const SolveConfig& cfg,
                                                        const CertConfig& cc = {}) {
  return multistart_solve(SquareSystem<Complex>(g), cfg, cc);
}

inline bool count_reached(const PolySystem<Complex>& g, const SolveConfig& cfg, std::size_t expected) {
  return multistart_solve(g, cfg).size() == expected;
}

}  // namespace overcert
