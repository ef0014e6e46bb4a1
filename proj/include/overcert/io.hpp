#pragma once

// JSON file formats: systems, candidates, Khovanskii bases, results and
// run manifests. Exact scalars are written as "p/q" strings in lowest
// terms, floats as shortest round-trip decimal strings.

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "overcert/error.hpp"
#include "overcert/newton.hpp"
#include "overcert/polynomial.hpp"
#include "overcert/rational.hpp"
#include "overcert/rng.hpp"
#include "overcert/rootcount.hpp"
#include "overcert/scalar.hpp"

#ifndef OVERCERT_VERSION
#define OVERCERT_VERSION "0.1.0"
#endif

namespace overcert::io {

using json = nlohmann::ordered_json;

enum class Mode { Soft, Exact };

inline std::string_view mode_name(Mode m) { return m == Mode::Exact ? "exact" : "soft"; }

/// OVERCERT_DEFAULT_MODE = soft | exact; unset means soft.
inline Mode default_mode() {
  const char* env = std::getenv("OVERCERT_DEFAULT_MODE");
  if (!env || !*env) return Mode::Soft;
  const std::string v(env);
  if (v == "soft") return Mode::Soft;
  if (v == "exact") return Mode::Exact;
  fail(ErrorCode::SchemaError, "OVERCERT_DEFAULT_MODE must be 'soft' or 'exact', got '" + v + "'");
}

// ---------------------------------------------------------------------------
// Files

inline json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::SchemaError, path.string() + ": " + e.what());
  }
}

/// Writes to a sibling temporary and renames it into place.
inline void write_json_atomic(const std::filesystem::path& path, const json& j) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) fail(ErrorCode::IoError, "cannot write " + tmp.string());
    out << j.dump(2) << '\n';
    if (!out) fail(ErrorCode::IoError, "write failed for " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) fail(ErrorCode::IoError, "cannot rename " + tmp.string() + ": " + ec.message());
}

// ---------------------------------------------------------------------------
// Scalars

inline std::string real_to_string(const Rational& q) { return overcert::to_string(q); }

inline std::string real_to_string(double x) {
  if (!std::isfinite(x)) fail(ErrorCode::NonFiniteFloat, "cannot serialize a non-finite value");
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) fail(ErrorCode::IoError, "float formatting failed");
  return std::string(buf, end);
}

inline std::string field_text(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_number_float()) return real_to_string(j.get<double>());
  fail(ErrorCode::SchemaError, where + ": expected a number or numeric string");
}

inline Rational parse_exact(const json& j, const std::string& where) {
  try {
    return parse_rational(field_text(j, where));
  } catch (const Error& e) {
    fail(ErrorCode::SchemaError, where + ": " + e.what());
  }
}

inline double parse_double(const json& j, const std::string& where) {
  const std::string s = field_text(j, where);
  if (s.find('/') != std::string::npos) return parse_exact(j, where).get_d();
  double x = 0.0;
  const char* first = s.data();
  if (!s.empty() && s[0] == '+') ++first;
  auto [end, ec] = std::from_chars(first, s.data() + s.size(), x);
  if (ec == std::errc::result_out_of_range)
    fail(ErrorCode::NonFiniteFloat, where + ": '" + s + "' overflows a double");
  if (ec != std::errc() || end != s.data() + s.size())
    fail(ErrorCode::SchemaError, where + ": malformed number '" + s + "'");
  if (!std::isfinite(x)) fail(ErrorCode::NonFiniteFloat, where + ": non-finite value '" + s + "'");
  return x;
}

template <class S>
real_t<S> parse_real(const json& j, const std::string& where) {
  if constexpr (is_exact_v<S>) return parse_exact(j, where);
  else return parse_double(j, where);
}

template <class S>
json scalar_to_json(const S& c) {
  if constexpr (is_exact_v<S>) return {{"re", real_to_string(c.re)}, {"im", real_to_string(c.im)}};
  else return {{"re", real_to_string(c.real())}, {"im", real_to_string(c.imag())}};
}

/// {"re": x, "im": y} with "im" optional, or a bare real.
template <class S>
S scalar_from_json(const json& j, const std::string& where) {
  if (j.is_object()) {
    if (!j.contains("re")) fail(ErrorCode::SchemaError, where + ": missing \"re\"");
    for (const auto& [key, _] : j.items()) {
      if (key != "re" && key != "im") fail(ErrorCode::SchemaError, where + ": unknown key \"" + key + "\"");
    }
    if constexpr (is_exact_v<S>) {
      Rational im = j.contains("im") ? parse_exact(j["im"], where + ".im") : Rational(0);
      return S(parse_exact(j["re"], where + ".re"), im);
    } else {
      const double im = j.contains("im") ? parse_double(j["im"], where + ".im") : 0.0;
      return S(parse_double(j["re"], where + ".re"), im);
    }
  }
  if constexpr (is_exact_v<S>) return S(parse_exact(j, where));
  else return S(parse_double(j, where), 0.0);
}

// ---------------------------------------------------------------------------
// Polynomials and systems

/// Terms in descending grevlex order, the canonical file order.
template <class S>
json polynomial_to_json(const Polynomial<S>& p, const MonomialOrder& order = {}) {
  std::vector<std::pair<const Monomial*, const S*>> terms;
  for (const auto& [m, c] : p.terms()) terms.emplace_back(&m, &c);
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return order.less(b.first->exps, a.first->exps); });
  json out = json::array();
  for (const auto& [m, c] : terms) out.push_back({{"c", scalar_to_json(*c)}, {"e", m->exps}});
  return {{"terms", out}};
}

template <class S>
Polynomial<S> polynomial_from_json(const json& j, std::size_t nvars, const std::string& where) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    fail(ErrorCode::SchemaError, where + ": expected {\"terms\": [...]}");
  Polynomial<S> p(nvars);
  std::size_t k = 0;
  for (const auto& t : j["terms"]) {
    const std::string tw = where + ".terms[" + std::to_string(k++) + "]";
    if (!t.is_object() || !t.contains("c") || !t.contains("e"))
      fail(ErrorCode::SchemaError, tw + ": expected {\"c\": ..., \"e\": [...]}");
    const auto& e = t["e"];
    if (!e.is_array()) fail(ErrorCode::SchemaError, tw + ".e: expected an array");
    if (e.size() != nvars)
      fail(ErrorCode::SchemaError, tw + ".e: exponent length " + std::to_string(e.size()) +
                                       " does not match nvars = " + std::to_string(nvars));
    Monomial m(nvars);
    for (std::size_t i = 0; i < nvars; ++i) {
      if (!e[i].is_number_integer() || e[i].get<long long>() < 0)
        fail(ErrorCode::SchemaError, tw + ".e[" + std::to_string(i) + "]: expected a nonnegative integer");
      m[i] = e[i].get<int>();
    }
    p.add_term(m, scalar_from_json<S>(t["c"], tw + ".c"));
  }
  return p;
}

inline std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("z" + std::to_string(i + 1));
  return names;
}

inline std::size_t read_nvars(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("nvars") || !j["nvars"].is_number_integer() ||
      j["nvars"].get<long long>() < 1)
    fail(ErrorCode::SchemaError, where + ": \"nvars\" must be a positive integer");
  return j["nvars"].get<std::size_t>();
}

inline std::vector<std::string> read_names(const json& j, std::size_t n, const std::string& where) {
  if (!j.contains("vars")) return default_names(n);
  const auto& v = j["vars"];
  if (!v.is_array() || v.size() != n)
    fail(ErrorCode::SchemaError, where + ".vars: expected " + std::to_string(n) + " names");
  std::vector<std::string> names;
  for (const auto& s : v) {
    if (!s.is_string()) fail(ErrorCode::SchemaError, where + ".vars: names must be strings");
    names.push_back(s.get<std::string>());
  }
  return names;
}

template <class S>
json system_to_json(const PolySystem<S>& sys) {
  json polys = json::array();
  for (const auto& p : sys.polys) polys.push_back(polynomial_to_json(p));
  return {{"nvars", sys.nvars},
          {"vars", sys.names.empty() ? default_names(sys.nvars) : sys.names},
          {"polys", polys}};
}

template <class S>
PolySystem<S> system_from_json(const json& j, const std::string& where = "system") {
  const std::size_t n = read_nvars(j, where);
  auto names = read_names(j, n, where);
  if (!j.contains("polys") || !j["polys"].is_array())
    fail(ErrorCode::SchemaError, where + ": \"polys\" must be an array");
  std::vector<Polynomial<S>> ps;
  std::size_t k = 0;
  for (const auto& p : j["polys"]) {
    ps.push_back(polynomial_from_json<S>(p, n, where + ".polys[" + std::to_string(k++) + "]"));
  }
  return PolySystem<S>(n, std::move(ps), std::move(names));
}

template <class S>
PolySystem<S> parse_system(const std::filesystem::path& path) {
  return system_from_json<S>(read_json(path), path.string());
}

// ---------------------------------------------------------------------------
// Candidates

template <class S>
json point_to_json(const Point<S>& z) {
  json out = json::array();
  for (const auto& c : z) out.push_back(scalar_to_json(c));
  return out;
}

template <class S>
Point<S> point_from_json(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n)
    fail(ErrorCode::SchemaError, where + ": expected a point with " + std::to_string(n) + " coordinates");
  Point<S> z;
  for (std::size_t i = 0; i < n; ++i) {
    z.push_back(scalar_from_json<S>(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return z;
}

template <class S>
json candidate_to_json(const Candidate<S>& c) {
  json out = {{"point", point_to_json(c.point)}, {"rho", real_to_string(c.rho)},
              {"certified", c.certified()}, {"iterates", c.iterate_count}};
  if (c.certificate) {
    out["alpha"] = real_to_string(c.certificate->alpha_upper);
    out["beta"] = real_to_string(c.certificate->beta_upper);
    out["gamma"] = real_to_string(c.certificate->gamma_upper);
  }
  if (!c.source_system_id.empty()) out["source"] = c.source_system_id;
  if (c.stalled) out["stalled"] = true;
  if (!c.diagnostic.empty()) out["diagnostic"] = c.diagnostic;
  return out;
}

template <class S>
json candidates_to_json(const std::vector<Candidate<S>>& cs) {
  json arr = json::array();
  for (const auto& c : cs) arr.push_back(candidate_to_json(c));
  return {{"mode", is_exact_v<S> ? "exact" : "soft"}, {"candidates", arr}};
}

/// Candidate points only; radii and certificates in a file are never
/// trusted and are recomputed against the relevant system.
template <class S>
std::vector<Point<S>> points_from_json(const json& j, std::size_t n, const std::string& where) {
  const json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("candidates")) fail(ErrorCode::SchemaError, where + ": missing \"candidates\"");
    arr = &j["candidates"];
  }
  if (!arr->is_array()) fail(ErrorCode::SchemaError, where + ": candidates must be an array");
  std::vector<Point<S>> out;
  std::size_t k = 0;
  for (const auto& c : *arr) {
    const std::string cw = where + ".candidates[" + std::to_string(k++) + "]";
    out.push_back(point_from_json<S>(c.is_object() ? c.value("point", json()) : c, n, cw + ".point"));
  }
  return out;
}

template <class S>
std::vector<Candidate<S>> parse_candidates(const std::filesystem::path& path, const SquareSystem<S>& g,
                                           const CertConfig& cfg = {}, const std::string& source = "g") {
  std::vector<Candidate<S>> out;
  for (auto& z : points_from_json<S>(read_json(path), g.n(), path.string())) {
    out.push_back(make_candidate(g, z, cfg, source));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Khovanskii bases: {"nvars", "vars", "basis": [{"level": k, "polynomial": {...}}]}

inline json basis_to_json(const std::vector<GradedElement>& basis, std::size_t nvars,
                          const std::vector<std::string>& names = {}) {
  json arr = json::array();
  for (const auto& b : basis) arr.push_back({{"level", b.level}, {"polynomial", polynomial_to_json(b.poly)}});
  return {{"nvars", nvars}, {"vars", names.empty() ? default_names(nvars) : names}, {"basis", arr}};
}

inline std::vector<GradedElement> basis_from_json(const json& j, const std::string& where = "basis") {
  const std::size_t n = read_nvars(j, where);
  if (!j.contains("basis") || !j["basis"].is_array())
    fail(ErrorCode::SchemaError, where + ": \"basis\" must be an array");
  std::vector<GradedElement> out;
  std::size_t k = 0;
  for (const auto& b : j["basis"]) {
    const std::string bw = where + ".basis[" + std::to_string(k++) + "]";
    if (!b.is_object() || !b.contains("level") || !b["level"].is_number_integer() ||
        b["level"].get<long long>() < 1 || !b.contains("polynomial"))
      fail(ErrorCode::SchemaError, bw + ": expected {\"level\": k >= 1, \"polynomial\": {...}}");
    out.push_back({polynomial_from_json<GaussianRational>(b["polynomial"], n, bw + ".polynomial"),
                   b["level"].get<int>()});
  }
  return out;
}

inline std::vector<GradedElement> parse_basis(const std::filesystem::path& path) {
  return basis_from_json(read_json(path), path.string());
}

// ---------------------------------------------------------------------------
// Run manifest

struct RunManifest {
  std::string command;
  std::optional<std::uint64_t> seed;
  Mode mode = Mode::Soft;
  json budgets = json::object();
  json verdicts = json::array();
  double seconds = 0.0;

  json to_json() const {
    json j = {{"command", command}};
    j["seed"] = seed ? json(*seed) : json(nullptr);
    j["rng"] = std::string(rng_id);
    j["mode"] = std::string(mode_name(mode));
    j["budgets"] = budgets;
    j["version"] = OVERCERT_VERSION;
    j["verdicts"] = verdicts;
    j["timing_seconds"] = seconds;
    return j;
  }
};

}  // namespace overcert::io
