#pragma once

// The `overcert` command line. Exit codes: 0 success, 1 usage or I/O
// error, 2 algorithmic FAIL, 3 some candidate left Undetermined.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "overcert/certify.hpp"
#include "overcert/fixtures.hpp"
#include "overcert/io.hpp"
#include "overcert/residual.hpp"
#include "overcert/rootcount.hpp"
#include "overcert/solver.hpp"

namespace overcert::cli {

enum Exit : int { Ok = 0, Usage = 1, Fail = 2, Undetermined = 3 };

struct Options {
  bool exact = false;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  int max_reject_steps = 16;
  int budget = 64;
  std::string out = ".";

  // Files.
  std::string f, g, g2, h, candidates, candidates2, basis;

  // Counts and parameters.
  std::size_t d = 0, e = 0, r = 0;
  std::vector<std::size_t> breakpoints;
  int starts = 2000;
  double radius = 10.0;
  int max_iters = 100;
  long deg_psi = 1;
  std::string order = "grevlex";
  std::vector<std::size_t> var_order;
  int bound = 0;
  std::optional<std::uint64_t> bezout;
  std::string example;
  int m = 3;
};

namespace detail {

using io::json;

struct Context {
  const Options& opt;
  std::string command_line;
  std::ostream& out;
  io::Mode mode;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  std::filesystem::path path(const std::string& name) const { return std::filesystem::path(opt.out) / name; }

  void finish(const std::string& command, json results, json verdicts, json budgets = json::object()) const {
    io::RunManifest m;
    m.command = command_line;
    m.seed = opt.seed;
    m.mode = mode;
    m.budgets = std::move(budgets);
    m.verdicts = std::move(verdicts);
    m.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results["command"] = command;
    io::write_json_atomic(path("results.json"), results);
    io::write_json_atomic(path("manifest.json"), m.to_json());
  }
};

template <class S>
std::vector<Candidate<S>> load_candidates(const std::string& file, const SquareSystem<S>& g,
                                          const std::string& source) {
  return io::parse_candidates<S>(file, g, CertConfig{}, source);
}

inline CertConfig cert_config(const Options& o) {
  CertConfig c;
  c.budget = o.budget;
  return c;
}

template <class S>
int certify_square_cmd(const Context& ctx) {
  const SquareSystem<S> g(io::parse_system<S>(ctx.opt.g));
  const auto pts = io::points_from_json<S>(io::read_json(ctx.opt.candidates), g.n(), ctx.opt.candidates);
  std::vector<Candidate<S>> cands(pts.size());
  parallel_for(pts.size(), ctx.opt.jobs,
               [&](std::size_t i) { cands[i] = make_candidate(g, pts[i], cert_config(ctx.opt), "g"); });
  json verdicts = json::array();
  std::size_t ok = 0;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    ok += cands[i].certified();
    verdicts.push_back({{"index", i}, {"certified", cands[i].certified()}});
  }
  ctx.out << "certified " << ok << " of " << cands.size() << "\n";
  ctx.finish("certify-square", io::candidates_to_json(cands), verdicts);
  return ok == cands.size() ? Ok : Undetermined;
}

template <class S>
json classified_to_json(const ClassifiedCandidate<S>& c) {
  json j = {{"index", c.index}, {"label", std::string(to_string(c.label))}};
  if (c.label == Label::CertifiedNonsolution) j["witness"] = c.witness ? json(*c.witness) : json(nullptr);
  if (!c.note.empty()) j["note"] = c.note;
  j["candidate"] = io::candidate_to_json(c.candidate);
  return j;
}

template <class S>
int reject_cmd(const Context& ctx) {
  const auto f = io::parse_system<S>(ctx.opt.f);
  const SquareSystem<S> g(io::parse_system<S>(ctx.opt.g));
  require_dims(f.nvars, g.n(), "f and g variables");
  const auto cands = load_candidates(ctx.opt.candidates, g, "g");
  json rows = json::array(), verdicts = json::array();
  bool residue = false;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    auto r = refine_and_reject(f, g, cands[i], ctx.opt.max_reject_steps, cert_config(ctx.opt));
    const auto label = r.rejected ? Label::CertifiedNonsolution : Label::Undetermined;
    residue |= !r.rejected;
    json row = {{"index", i}, {"label", std::string(to_string(label))}, {"steps", r.steps},
                {"residual", io::real_to_string(r.report.system_residual)}};
    if (r.rejected) row["witness"] = r.report.witness;
    if (!r.diagnostic.empty()) row["note"] = r.diagnostic;
    rows.push_back(row);
    verdicts.push_back({{"index", i}, {"label", std::string(to_string(label))}});
    ctx.out << i << " " << to_string(label) << "\n";
  }
  ctx.finish("reject", {{"results", rows}}, verdicts, {{"max_reject_steps", ctx.opt.max_reject_steps}});
  return residue ? Undetermined : Ok;
}

template <class S>
int certify_ind_cmd(const Context& ctx) {
  const auto f = io::parse_system<S>(ctx.opt.f);
  const SquareSystem<S> g(io::parse_system<S>(ctx.opt.g));
  require_dims(f.nvars, g.n(), "f and g variables");
  const auto cands = load_candidates(ctx.opt.candidates, g, "g");
  const auto res = alg_ind(f, g, ctx.opt.d, cands, ctx.opt.max_reject_steps, cert_config(ctx.opt));
  json rows = json::array(), verdicts = json::array();
  bool residue = false;
  for (const auto& c : res.classified) {
    rows.push_back(classified_to_json(c));
    verdicts.push_back({{"index", c.index}, {"label", std::string(to_string(c.label))}});
    residue |= c.label == Label::Undetermined;
  }
  ctx.out << "rejected " << res.rejected << ", certified " << res.certified_count() << " of "
          << cands.size() << (res.count_matched ? "" : " (rejection count differs from d)") << "\n";
  ctx.finish("certify-ind",
             {{"d", ctx.opt.d}, {"rejected", res.rejected}, {"certified", res.certified_count()},
              {"count_matched", res.count_matched}, {"candidates", rows}},
             verdicts, {{"max_reject_steps", ctx.opt.max_reject_steps}});
  if (residue) return Undetermined;
  return res.certified_count() == 0 ? Fail : Ok;
}

template <class S>
int certify_set_cmd(const Context& ctx) {
  const SquareSystem<S> g(io::parse_system<S>(ctx.opt.g));
  const SquareSystem<S> g2(io::parse_system<S>(ctx.opt.g2));
  const auto s = load_candidates(ctx.opt.candidates, g, "g");
  const auto s2 = load_candidates(ctx.opt.candidates2, g2, "g2");
  AlgSetResult<S> res;
  try {
    res = alg_set(ctx.opt.d, ctx.opt.e, g, g2, s, s2, cert_config(ctx.opt));
  } catch (const Error& err) {
    if (err.code() != ErrorCode::BudgetExhausted) throw;
    res.reason = err.what();
  }
  json verdicts = json::array();
  if (res.certified) {
    for (std::size_t j : res.t) verdicts.push_back({{"index", j}, {"label", "CertifiedSolutionOfF"}});
  } else {
    verdicts.push_back({{"verdict", "FAIL"}, {"reason", res.reason}});
  }
  json results = {{"verdict", res.certified ? "Certified" : "FAIL"}, {"d", ctx.opt.d}, {"e", ctx.opt.e},
                  {"t", res.t}};
  if (!res.reason.empty()) results["reason"] = res.reason;
  if (!res.refined.empty()) results["refined"] = io::candidates_to_json(res.refined)["candidates"];
  ctx.out << (res.certified ? "Certified" : "FAIL: " + res.reason) << "\n";
  ctx.finish("certify-set", results, verdicts, {{"budget", ctx.opt.budget}});
  return res.certified ? Ok : Fail;
}

template <class S>
int liaison_cmd(const Context& ctx) {
  const auto g = io::parse_system<S>(ctx.opt.g);
  const auto h = io::parse_system<S>(ctx.opt.h);
  require_dims(h.nvars, g.nvars, "g and h variables");
  const SquareSystem<S> gs(g);
  const auto cands = load_candidates(ctx.opt.candidates, gs, "g");
  LiaisonResult<S> res;
  if (!ctx.opt.breakpoints.empty()) {
    LiaisonChainSpec<S> spec{ctx.opt.breakpoints, g, h};
    res = liaison_chain(spec, cands, ctx.opt.budget, cert_config(ctx.opt));
  } else {
    const std::size_t r = ctx.opt.r ? ctx.opt.r : h.size();
    res = liaison_classify(r, g, h.polys, cands, ctx.opt.budget, cert_config(ctx.opt));
  }
  json verdicts = json::array();
  for (std::size_t i : res.t) verdicts.push_back({{"index", i}, {"set", "T"}});
  for (std::size_t i : res.u) verdicts.push_back({{"index", i}, {"set", "U"}});
  for (std::size_t i : res.undetermined) verdicts.push_back({{"index", i}, {"set", "Undetermined"}});
  ctx.out << "T " << res.t.size() << ", U " << res.u.size() << ", undetermined " << res.undetermined.size()
          << "\n";
  ctx.finish("liaison",
             {{"t", res.t}, {"u", res.u}, {"undetermined", res.undetermined},
              {"refined", io::candidates_to_json(res.refined)["candidates"]}},
             verdicts, {{"budget", ctx.opt.budget}});
  return res.undetermined.empty() ? Ok : Undetermined;
}

template <class S>
int squareup_cmd(const Context& ctx) {
  const auto f = io::parse_system<GaussianRational>(ctx.opt.f);
  const std::uint64_t seed = ctx.opt.seed.value_or(0);
  auto res = square_up(f, seed);
  json a = json::array();
  for (const auto& row : res.a) {
    json r = json::array();
    for (const auto& x : row) r.push_back(io::real_to_string(x));
    a.push_back(r);
  }
  io::write_json_atomic(ctx.path("squared.json"), io::system_to_json(res.g));
  ctx.out << "wrote " << ctx.path("squared.json").string() << "\n";
  ctx.finish("squareup", {{"seed", seed}, {"matrix", a}, {"system", "squared.json"}}, json::array());
  return Ok;
}

template <class S>
int solve_cmd(const Context& ctx) {
  const auto g = io::parse_system<Complex>(ctx.opt.g);
  SolveConfig sc;
  sc.starts = ctx.opt.starts;
  sc.seed = ctx.opt.seed.value_or(0);
  sc.box_radius = ctx.opt.radius;
  sc.max_iters = ctx.opt.max_iters;
  sc.jobs = ctx.opt.jobs;
  const auto found = multistart_solve(g, sc);
  json cands;
  std::size_t n_cert = found.size();
  if constexpr (is_exact_v<S>) {
    // Hard certificates at the exact values of the float points.
    const SquareSystem<S> ge(io::parse_system<S>(ctx.opt.g));
    std::vector<Candidate<S>> exact;
    n_cert = 0;
    for (const auto& c : found) {
      exact.push_back(make_candidate(ge, convert_point<S>(c.point), CertConfig{}, "g"));
      n_cert += exact.back().certified();
    }
    cands = io::candidates_to_json(exact);
  } else {
    cands = io::candidates_to_json(found);
  }
  io::write_json_atomic(ctx.path("candidates.json"), cands);
  ctx.out << "found " << found.size() << " certified candidates\n";
  json verdicts = json::array();
  for (std::size_t i = 0; i < cands["candidates"].size(); ++i)
    verdicts.push_back({{"index", i}, {"certified", cands["candidates"][i]["certified"]}});
  ctx.finish("solve", {{"found", found.size()}, {"certified", n_cert}, {"candidates", "candidates.json"}},
             verdicts, {{"starts", sc.starts}, {"radius", sc.box_radius}, {"max_iters", sc.max_iters}});
  return Ok;
}

inline json value_to_json(const GradedValue& v) { return {{"level", v.level}, {"value", v.v}}; }

inline int rootcount_cmd(const Context& ctx) {
  RootCountInput in;
  in.basis = io::parse_basis(ctx.opt.basis);
  in.deg_psi = ctx.opt.deg_psi;
  in.degree_bound = ctx.opt.bound;
  in.bezout = ctx.opt.bezout;
  if (ctx.opt.order == "grevlex") in.order.kind = MonomialOrder::Kind::Grevlex;
  else if (ctx.opt.order == "lex") in.order.kind = MonomialOrder::Kind::Lex;
  else fail(ErrorCode::SchemaError, "unknown order '" + ctx.opt.order + "'");
  in.order.variable_order = ctx.opt.var_order;
  json budgets = {{"bound", in.degree_bound}, {"deg_psi", in.deg_psi}, {"order", ctx.opt.order}};
  const auto ver = khovanskii_verify(in);
  json vj = {{"verified", ver.verified}, {"level", ver.level}};
  if (!ver.verified) {
    vj["reason"] = ver.reason == KhovanskiiResult::Reason::MissingValue ? "MissingValue" : "ElementNotInAlgebra";
    vj["missing"] = ver.missing;
    vj["all_missing"] = ver.all_missing;
    if (ver.element) vj["element"] = *ver.element;
    ctx.out << "FAIL: basis fails at level " << ver.level << "\n";
    ctx.finish("rootcount", {{"verification", vj}}, json::array({{{"verdict", "FAIL"}}}), budgets);
    return Fail;
  }
  try {
    const auto rep = root_count(in);
    json values = json::array();
    for (const auto& v : rep.values) values.push_back(value_to_json(v));
    json results = {{"verification", vj},
                    {"values", values},
                    {"volume", io::real_to_string(rep.volume)},
                    {"index", rep.index.get_str()},
                    {"d_L", rep.d_l.get_str()}};
    ctx.out << "verified up to " << ver.level << "; volume " << rep.volume.get_str() << ", index "
            << rep.index.get_str() << ", d_L " << rep.d_l.get_str() << "\n";
    ctx.finish("rootcount", results, json::array({{{"verdict", "VerifiedUpTo"}, {"d_L", rep.d_l.get_str()}}}),
               budgets);
    return Ok;
  } catch (const Error& err) {
    const auto c = err.code();
    if (c != ErrorCode::RankDeficient && c != ErrorCode::NonIntegerResult && c != ErrorCode::InconsistentInput)
      throw;
    ctx.out << "FAIL: " << err.what() << "\n";
    ctx.finish("rootcount", {{"verification", vj}, {"error", err.what()}},
               json::array({{{"verdict", "FAIL"}, {"reason", std::string(to_string(c))}}}), budgets);
    return Fail;
  }
}

inline json points_json(const std::vector<ExactPoint>& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back({{"point", io::point_to_json(p)}});
  return {{"mode", "exact"}, {"candidates", arr}};
}

inline int examples_cmd(const Context& ctx) {
  const std::string& name = ctx.opt.example;
  auto write = [&](const std::string& file, const json& j) { io::write_json_atomic(ctx.path(file), j); };
  json expected;
  if (name == "quartics") {
    const auto fx = quartics_fixture();
    const std::uint64_t seed = ctx.opt.seed.value_or(42);
    write("system.json", io::system_to_json(fx.f));
    write("squared.json", io::system_to_json(square_up(fx.f, seed).g));
    write("basis.json", io::basis_to_json(fx.basis, 2, fx.f.names));
    write("candidates-template.json", points_json(fx.solutions));
    expected = {{"bezout", 16}, {"d", 12}, {"solutions", 4}, {"d_L", 12}, {"area", "6"}};
  } else if (name == "rnc") {
    const auto fx = rnc_fixture();
    write("system.json", io::system_to_json(fx.g));
    write("h.json", io::system_to_json(ExactSystem(3, fx.h, fx.g.names)));
    auto pts = fx.on_curve;
    pts.push_back(fx.on_line);
    write("candidates-template.json", points_json(pts));
    expected = {{"r", fx.r}, {"T", 3}, {"U", 1}};
  } else if (name == "schubert") {
    const std::uint64_t seed = ctx.opt.seed.value_or(1);
    const auto inst = schubert_fixture(ctx.opt.m, seed);
    write("f.json", io::system_to_json(inst.f));
    write("g.json", io::system_to_json(inst.g));
    write("g2.json", io::system_to_json(schubert_alternate(inst, seed + 100)));
    write("h.json", io::system_to_json(inst.h));
    expected = {{"m", inst.m},           {"d_ind", inst.d_ind}, {"d_set", inst.d_set},
                {"e", inst.e},           {"breakpoints", inst.breakpoints}};
  } else if (name == "essential") {
    const auto fx = essential_fixture();
    write("system.json", io::system_to_json(fx.g));
    write("exclusion.json", io::system_to_json(fx.exclusion));
    write("candidates-template.json", points_json({fx.e_hat_point()}));
    expected = {{"bezout", 27}};
  } else if (name == "ahs18") {
    const auto fx = ahs18_fixture();
    write("system.json", io::system_to_json(fx.f));
    write("basis.json", io::basis_to_json(fx.basis, 3, fx.f.names));
    expected = {{"deg_psi", fx.deg_psi}, {"d_L", 2}, {"volume", "1/6"}, {"index", 1}};
  } else {
    fail(ErrorCode::SchemaError, "unknown example '" + name + "'");
  }
  write("expected.json", expected);
  ctx.out << "wrote example '" << name << "' to " << ctx.opt.out << "\n";
  ctx.finish("examples", {{"example", name}, {"expected", expected}}, json::array());
  return Ok;
}

template <template <class> class Cmd>
int dispatch(const Context& ctx) {
  if (ctx.mode == io::Mode::Exact) return Cmd<GaussianRational>::run(ctx);
  return Cmd<Complex>::run(ctx);
}

#define OVERCERT_CMD(name, fn)                                 \
  template <class S>                                           \
  struct name {                                                \
    static int run(const Context& ctx) { return fn<S>(ctx); } \
  };
OVERCERT_CMD(CertifySquare, certify_square_cmd)
OVERCERT_CMD(Reject, reject_cmd)
OVERCERT_CMD(CertifyInd, certify_ind_cmd)
OVERCERT_CMD(CertifySet, certify_set_cmd)
OVERCERT_CMD(Liaison, liaison_cmd)
OVERCERT_CMD(SquareUp, squareup_cmd)
OVERCERT_CMD(Solve, solve_cmd)
#undef OVERCERT_CMD

}  // namespace detail

/// Parses argv and runs one subcommand.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  Options opt;
  CLI::App app{"Certify solutions of overdetermined polynomial systems", "overcert"};
  app.set_version_flag("--version", std::string(OVERCERT_VERSION));
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.add_flag("--exact", opt.exact, "Exact rational arithmetic (hard certificates)");
  app.add_option("--seed", opt.seed, "Random seed");
  app.add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--max-reject-steps", opt.max_reject_steps, "Refinement steps while rejecting")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--budget", opt.budget, "Refinement budget")->check(CLI::NonNegativeNumber);
  app.add_option("-o,--out", opt.out, "Output directory");
  app.fallthrough();

  auto* sq = app.add_subcommand("certify-square", "Alpha-test candidate points of a square system");
  sq->add_option("--g", opt.g, "Square system")->required();
  sq->add_option("--candidates", opt.candidates, "Candidate points")->required();

  auto* rj = app.add_subcommand("reject", "Taylor-residual rejection against f");
  rj->add_option("--f", opt.f, "Full system")->required();
  rj->add_option("--g", opt.g, "Square subsystem")->required();
  rj->add_option("--candidates", opt.candidates, "Candidates for g")->required();

  auto* ind = app.add_subcommand("certify-ind", "Certify by rejecting d excess solutions");
  ind->add_option("--f", opt.f, "Full system")->required();
  ind->add_option("--g", opt.g, "Square subsystem")->required();
  ind->add_option("--d", opt.d, "Number of excess solutions")->required();
  ind->add_option("--candidates", opt.candidates, "All solutions of g")->required();

  auto* set = app.add_subcommand("certify-set", "Certify by intersecting two square subsystems");
  set->add_option("--g", opt.g, "First square subsystem")->required();
  set->add_option("--g2", opt.g2, "Second square subsystem")->required();
  set->add_option("--candidates", opt.candidates, "Solutions of g")->required();
  set->add_option("--candidates2", opt.candidates2, "Solutions of g2")->required();
  set->add_option("--d", opt.d, "Solutions of each subsystem")->required();
  set->add_option("--e", opt.e, "Solutions of f")->required();

  auto* li = app.add_subcommand("liaison", "Separate solutions on X from those on a linked Y");
  li->add_option("--g", opt.g, "Square system")->required();
  li->add_option("--h", opt.h, "Equations of Y (r of them, or n for a chain)")->required();
  li->add_option("--candidates", opt.candidates, "Solutions of g")->required();
  auto* r_opt = li->add_option("--r", opt.r, "Codimension of X and Y");
  li->add_option("--breakpoints", opt.breakpoints, "Chain breakpoints 0 < a_1 < ... < n")
      ->delimiter(',')
      ->excludes(r_opt);

  auto* su = app.add_subcommand("squareup", "Random rational square-up A f");
  su->add_option("--f", opt.f, "Full system")->required();

  auto* so = app.add_subcommand("solve", "Multistart Newton for a square system");
  so->add_option("--g", opt.g, "Square system")->required();
  so->add_option("--starts", opt.starts, "Number of starts")->check(CLI::PositiveNumber);
  so->add_option("--radius", opt.radius, "Polydisc radius")->check(CLI::PositiveNumber);
  so->add_option("--max-iters", opt.max_iters, "Newton iterations per start")->check(CLI::PositiveNumber);

  auto* rc = app.add_subcommand("rootcount", "Verify a Khovanskii basis and compute d_L");
  rc->add_option("--basis", opt.basis, "Basis file")->required();
  rc->add_option("--deg-psi", opt.deg_psi, "Degree of the Kodaira map")->check(CLI::PositiveNumber);
  rc->add_option("--order", opt.order, "grevlex or lex")->check(CLI::IsMember({"grevlex", "lex"}));
  rc->add_option("--var-order", opt.var_order, "Variable indices, largest first")->delimiter(',');
  rc->add_option("--bound", opt.bound, "Verification degree bound (default 2 x max level)");
  rc->add_option("--bezout", opt.bezout, "Bezout bound for the consistency check");

  auto* ex = app.add_subcommand("examples", "Write a worked example's files");
  ex->add_option("name", opt.example, "quartics, rnc, schubert, essential or ahs18")
      ->required()
      ->check(CLI::IsMember({"quartics", "rnc", "schubert", "essential", "ahs18"}));
  ex->add_option("--m", opt.m, "Schubert size m >= 2")->check(CLI::Range(2, 14));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : Usage;
  }

  std::string line;
  for (int i = 0; i < argc; ++i) line += (i ? " " : "") + std::string(argv[i]);
  try {
    const io::Mode mode = opt.exact ? io::Mode::Exact : io::default_mode();
    detail::Context ctx{opt, line, out, mode};
    if (*sq) return detail::dispatch<detail::CertifySquare>(ctx);
    if (*rj) return detail::dispatch<detail::Reject>(ctx);
    if (*ind) return detail::dispatch<detail::CertifyInd>(ctx);
    if (*set) return detail::dispatch<detail::CertifySet>(ctx);
    if (*li) return detail::dispatch<detail::Liaison>(ctx);
    if (*su) return detail::dispatch<detail::SquareUp>(ctx);
    if (*so) return detail::dispatch<detail::Solve>(ctx);
    if (*rc) return detail::rootcount_cmd(ctx);
    if (*ex) return detail::examples_cmd(ctx);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  }
  return Usage;
}

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  std::vector<const char*> argv{"overcert"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace overcert::cli
