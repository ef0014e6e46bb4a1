#pragma once

// Top-level certification: squaring up, individual and set certification
// through counted nonsolutions, and liaison pruning.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "overcert/error.hpp"
#include "overcert/newton.hpp"
#include "overcert/polynomial.hpp"
#include "overcert/residual.hpp"
#include "overcert/rng.hpp"

namespace overcert {

enum class Label { CertifiedSolutionOfF, CertifiedNonsolution, Undetermined };

constexpr std::string_view to_string(Label l) {
  switch (l) {
    case Label::CertifiedSolutionOfF: return "CertifiedSolutionOfF";
    case Label::CertifiedNonsolution: return "CertifiedNonsolution";
    case Label::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

template <class S>
struct ClassifiedCandidate {
  std::size_t index = 0;
  Candidate<S> candidate;
  Label label = Label::Undetermined;
  /// Polynomial of f with a positive residual, for nonsolutions.
  std::optional<std::size_t> witness;
  std::string note;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

/// n x N matrix with entries p/q, p and q uniform in [-999, 999], q != 0.
inline RationalMatrix random_rational_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed,
                                             std::uint64_t stream = 0) {
  CounterRng rng(seed, stream);
  RationalMatrix a(rows, std::vector<Rational>(cols));
  for (auto& row : a) {
    for (auto& x : row) {
      const long num = rng.uniform_int(-999, 999);
      long den = 0;
      while (den == 0) den = rng.uniform_int(-999, 999);
      x = make_rational(BigInt(num), BigInt(den));
    }
  }
  return a;
}

template <class S>
struct SquareUpResult {
  PolySystem<S> g;
  RationalMatrix a;
};

template <class S>
SquareUpResult<S> square_up(const PolySystem<S>& f, RationalMatrix a) {
  const std::size_t n = f.nvars;
  if (f.size() < n) fail(ErrorCode::PreconditionFailed, "squaring up needs at least n polynomials");
  require_dims(a.size(), n, "square_up matrix rows");
  Matrix<GaussianRational> m(n, f.size());
  for (std::size_t i = 0; i < n; ++i) {
    require_dims(a[i].size(), f.size(), "square_up matrix columns");
    for (std::size_t j = 0; j < f.size(); ++j) m(i, j) = GaussianRational(a[i][j]);
  }
  if (rank(m) < n) fail(ErrorCode::RankDeficientMatrix, "squaring-up matrix has rank below n");
  std::vector<Polynomial<S>> gs;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial<S> gi(n);
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (a[i][j] == 0) continue;
      gi += f.polys[j] * scalar_traits<S>::from_rational(a[i][j]);
    }
    gs.push_back(std::move(gi));
  }
  return {PolySystem<S>(n, std::move(gs), f.names), std::move(a)};
}

template <class S>
SquareUpResult<S> square_up(const PolySystem<S>& f, std::uint64_t seed) {
  return square_up(f, random_rational_matrix(f.nvars, f.size(), seed));
}

template <class S>
void require_pairwise_distinct(const std::vector<Candidate<S>>& cands) {
  for (std::size_t i = 0; i < cands.size(); ++i) {
    for (std::size_t j = i + 1; j < cands.size(); ++j) {
      if (!distinct(cands[i], cands[j]))
        fail(ErrorCode::InputNotDistinct,
             "candidates " + std::to_string(i) + " and " + std::to_string(j) + " are not distinct");
    }
  }
}

template <class S>
struct AlgIndResult {
  std::vector<ClassifiedCandidate<S>> classified;
  std::size_t rejected = 0;
  /// True when the rejection count equals d, i.e. the survivors are certified.
  bool count_matched = false;

  std::size_t certified_count() const {
    std::size_t k = 0;
    for (const auto& c : classified) k += c.label == Label::CertifiedSolutionOfF;
    return k;
  }
};

/// Rejects what it can; if exactly d candidates are rejected the rest are
/// certified solutions of f, otherwise they stay Undetermined.
template <class S>
AlgIndResult<S> alg_ind(const PolySystem<S>& f, const SquareSystem<S>& g, std::size_t d,
                        const std::vector<Candidate<S>>& cands, int max_reject_steps = 0,
                        const CertConfig& cfg = {}) {
  require_dims(g.n(), f.nvars, "alg_ind");
  require_pairwise_distinct(cands);
  AlgIndResult<S> out;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    ClassifiedCandidate<S> cc;
    cc.index = i;
    if (max_reject_steps > 0) {
      auto r = refine_and_reject(f, g, cands[i], max_reject_steps, cfg);
      cc.candidate = std::move(r.final_candidate);
      if (r.rejected) {
        cc.label = Label::CertifiedNonsolution;
        cc.witness = r.report.witness;
      }
      cc.note = r.diagnostic;
    } else {
      cc.candidate = cands[i];
      auto rep = residual_report(f, cc.candidate);
      if (rep.rejects()) {
        cc.label = Label::CertifiedNonsolution;
        cc.witness = rep.witness;
      }
    }
    out.rejected += cc.label == Label::CertifiedNonsolution;
    out.classified.push_back(std::move(cc));
  }
  out.count_matched = out.rejected == d;
  if (out.count_matched) {
    for (auto& cc : out.classified) {
      if (cc.label == Label::Undetermined) cc.label = Label::CertifiedSolutionOfF;
    }
  }
  return out;
}

template <class S>
AlgIndResult<S> alg_ind(const PolySystem<S>& f, const PolySystem<S>& g, std::size_t d,
                        const std::vector<Candidate<S>>& cands, int max_reject_steps = 0,
                        const CertConfig& cfg = {}) {
  return alg_ind(f, SquareSystem<S>(g), d, cands, max_reject_steps, cfg);
}

template <class S>
struct AlgSetResult {
  bool certified = false;
  /// Indices into S of the certified solutions of f.
  std::vector<std::size_t> t;
  /// S' after refinement, with certificates at the refined points.
  std::vector<Candidate<S>> refined;
  std::string reason;
};

/// Certifies the e solutions of f among S by matching against the solutions
/// S' of a second square subsystem g'.
template <class S>
AlgSetResult<S> alg_set(std::size_t d, std::size_t e, const SquareSystem<S>& g,
                        const SquareSystem<S>& g2, const std::vector<Candidate<S>>& s,
                        const std::vector<Candidate<S>>& s2, const CertConfig& cfg = {}) {
  using Real = real_t<S>;
  AlgSetResult<S> out;
  if (e > d) fail(ErrorCode::PreconditionFailed, "alg_set needs e <= d");
  require_dims(g2.n(), g.n(), "alg_set subsystems");
  if (s.size() != d || s2.size() != d) {
    out.reason = "expected " + std::to_string(d) + " candidates in each set, got " +
                 std::to_string(s.size()) + " and " + std::to_string(s2.size());
    return out;
  }
  for (const auto& c : s) {
    if (!c.certified()) {
      out.reason = "a candidate of S is not certified";
      return out;
    }
  }
  // Soft mode compares roots of two independently rounded systems, so each
  // radius is widened by how far coefficient rounding can move the root.
  std::vector<Real> eff(d);
  for (std::size_t j = 0; j < d; ++j) eff[j] = s[j].rho + detail::coefficient_slack(g, s[j].point, cfg);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const Real reach = eff[i] + eff[j];
      if (!(distance_sq(s[i].point, s[j].point) > reach * reach)) {
        out.reason = "balls of S are not pairwise disjoint";
        return out;
      }
    }
  }
  // 2 beta' < r/3 with r = min ||z_i - z_j|| - (rho_i + rho_j), checked
  // pairwise as (3 rho' + rho_i + rho_j)^2 < ||z_i - z_j||^2, rho' = 2 beta'.
  auto small_enough = [&](const Real& rho2) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        const Real lhs = Real(3) * rho2 + eff[i] + eff[j];
        if (!(lhs * lhs < distance_sq(s[i].point, s[j].point))) return false;
      }
    }
    return true;
  };
  std::vector<bool> hit(d, false);
  for (const auto& c0 : s2) {
    Candidate<S> c = c0;
    AlphaCertificate<S> cert = certify_square(g2, c.point, cfg);
    Real slack = detail::coefficient_slack(g2, c.point, cfg);
    int steps = 0;
    while (!(cert.certified && small_enough(cert.radius() + slack))) {
      if (steps == cfg.budget)
        fail(ErrorCode::BudgetExhausted, "could not refine S' below r/3 within the budget");
      c = refine(g2, std::move(c), 1, cfg);
      if (c.stalled) fail(ErrorCode::BudgetExhausted, "refinement of S' stalled: " + c.diagnostic);
      cert = certify_square(g2, c.point, cfg);
      slack = detail::coefficient_slack(g2, c.point, cfg);
      ++steps;
    }
    c.rho = cert.radius();
    c.certificate = cert;
    c.schedule = RateSchedule<S>{c.rho};
    c.schedule_steps = 0;
    for (std::size_t j = 0; j < d; ++j) {
      const Real reach = c.rho + slack + eff[j];
      if (distance_sq(s[j].point, c.point) < reach * reach) hit[j] = true;
    }
    out.refined.push_back(std::move(c));
  }
  for (std::size_t j = 0; j < d; ++j) {
    if (hit[j]) out.t.push_back(j);
  }
  out.certified = out.t.size() == e;
  if (!out.certified) {
    out.reason = "found " + std::to_string(out.t.size()) + " intersecting balls, expected " +
                 std::to_string(e);
  }
  return out;
}

template <class S>
AlgSetResult<S> alg_set(std::size_t d, std::size_t e, const PolySystem<S>& g,
                        const PolySystem<S>& g2, const std::vector<Candidate<S>>& s,
                        const std::vector<Candidate<S>>& s2, const CertConfig& cfg = {}) {
  return alg_set(d, e, SquareSystem<S>(g), SquareSystem<S>(g2), s, s2, cfg);
}

template <class S>
struct LiaisonResult {
  /// Candidates whose root lies on X (kept).
  std::vector<std::size_t> t;
  /// Candidates whose root lies on Y (discarded).
  std::vector<std::size_t> u;
  std::vector<std::size_t> undetermined;
  /// Candidates in their final refined state, by input index.
  std::vector<Candidate<S>> refined;
};

namespace detail {

enum class LiaisonVerdict { OnX, OnY, Unknown };

// One candidate against one swapped system f. The Y verdict requires the
// root certified for f to fall inside the uniqueness ball of the g-root.
template <class S>
LiaisonVerdict liaison_step_loop(const SquareSystem<S>& g, const SquareSystem<S>& f,
                                 Candidate<S>& c, int budget, const CertConfig& cfg) {
  for (int step = 0;; ++step) {
    const auto cf = certify_square(f, c.point, cfg);
    if (cf.certified) {
      const auto cg = certify_square(g, c.point, cfg);
      if (cg.certified && cg.alpha_upper < threshold_003<S>()) {
        const real_t<S> lhs = real_t<S>(20) * cf.radius() * cg.gamma_upper;
        if (lhs < real_t<S>(1)) return LiaisonVerdict::OnY;
      }
    }
    if (residual_report(f.system(), c).rejects()) return LiaisonVerdict::OnX;
    if (step == budget) return LiaisonVerdict::Unknown;
    c = refine(g, std::move(c), 1, cfg);
    if (c.stalled) return LiaisonVerdict::Unknown;
  }
}

template <class S>
PolySystem<S> swap_block(const PolySystem<S>& g, const std::vector<Polynomial<S>>& h,
                         std::size_t lo, std::size_t hi) {
  std::vector<Polynomial<S>> ps = g.polys;
  for (std::size_t i = lo; i < hi; ++i) ps[i] = h[i - lo];
  return PolySystem<S>(g.nvars, std::move(ps), g.names);
}

}  // namespace detail

/// Splits certified solutions of g = (g_1..g_n), where V(g_1..g_r) = X u Y
/// and Y = V(h), into T (on X) and U (on Y).
template <class S>
LiaisonResult<S> liaison_classify(std::size_t r, const PolySystem<S>& g,
                                  const std::vector<Polynomial<S>>& h,
                                  const std::vector<Candidate<S>>& cands, int budget = 64,
                                  const CertConfig& cfg = {}) {
  require_dims(h.size(), r, "liaison h");
  if (r > g.nvars) fail(ErrorCode::PreconditionFailed, "r exceeds the number of variables");
  const SquareSystem<S> gs(g);
  const SquareSystem<S> fs(detail::swap_block(g, h, 0, r));
  LiaisonResult<S> out;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    Candidate<S> c = cands[i];
    switch (detail::liaison_step_loop(gs, fs, c, budget, cfg)) {
      case detail::LiaisonVerdict::OnX: out.t.push_back(i); break;
      case detail::LiaisonVerdict::OnY: out.u.push_back(i); break;
      case detail::LiaisonVerdict::Unknown: out.undetermined.push_back(i); break;
    }
    out.refined.push_back(std::move(c));
  }
  return out;
}

template <class S>
struct LiaisonChainSpec {
  /// 0 = a_0 < a_1 < ... < a_m = n.
  std::vector<std::size_t> breakpoints;
  PolySystem<S> g;
  PolySystem<S> h;

  void validate() const {
    if (!g.is_square() || !h.is_square() || h.nvars != g.nvars)
      fail(ErrorCode::NotSquare, "liaison chain needs square g and h of equal size");
    if (breakpoints.size() < 2 || breakpoints.front() != 0 || breakpoints.back() != g.nvars)
      fail(ErrorCode::PreconditionFailed, "breakpoints must run from 0 to n");
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
      if (breakpoints[i] <= breakpoints[i - 1])
        fail(ErrorCode::PreconditionFailed, "breakpoints must increase strictly");
    }
  }
};

/// Survivors lie on every X_i. Candidates on some Y_i are dropped in U.
template <class S>
LiaisonResult<S> liaison_chain(const LiaisonChainSpec<S>& spec, const std::vector<Candidate<S>>& cands,
                               int budget = 64, const CertConfig& cfg = {}) {
  spec.validate();
  const SquareSystem<S> gs(spec.g);
  std::vector<SquareSystem<S>> blocks;
  for (std::size_t b = 1; b < spec.breakpoints.size(); ++b) {
    const std::size_t lo = spec.breakpoints[b - 1];
    const std::size_t hi = spec.breakpoints[b];
    std::vector<Polynomial<S>> hb(spec.h.polys.begin() + static_cast<std::ptrdiff_t>(lo),
                                  spec.h.polys.begin() + static_cast<std::ptrdiff_t>(hi));
    blocks.emplace_back(detail::swap_block(spec.g, hb, lo, hi));
  }
  LiaisonResult<S> out;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    Candidate<S> c = cands[i];
    detail::LiaisonVerdict v = detail::LiaisonVerdict::OnX;
    for (const auto& f : blocks) {
      v = detail::liaison_step_loop(gs, f, c, budget, cfg);
      if (v != detail::LiaisonVerdict::OnX) break;
    }
    switch (v) {
      case detail::LiaisonVerdict::OnX: out.t.push_back(i); break;
      case detail::LiaisonVerdict::OnY: out.u.push_back(i); break;
      case detail::LiaisonVerdict::Unknown: out.undetermined.push_back(i); break;
    }
    out.refined.push_back(std::move(c));
  }
  return out;
}

}  // namespace overcert
