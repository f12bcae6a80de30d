// symrank: build, verify and compare symmetric rank-distance codes.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "symrank/symrank.hpp"

using namespace symrank;

namespace {

struct Global {
  std::uint32_t p = 3;
  std::uint32_t m = 1;
  std::uint32_t n = 0;
  std::string modulus;
  std::string out;
  std::string format = "json";
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());
};

struct FamilyOpts {
  std::string family = "T";
  unsigned s = 1;
  unsigned d = 0;
  std::string eta = "primitive";
};

struct EnumOpts {
  std::string mode = "full";
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBudget;
  bool force = false;
  unsigned claim = 0;
};

struct EquivOpts {
  std::string branch = "a";
  unsigned s1 = 1;
  std::optional<unsigned> s2;
  std::string eta1 = "primitive";
  std::string eta2 = "primitive";
  std::string match = "exact";
  bool apply = false;
};

struct MinorOpts {
  unsigned k = 3;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::string eta = "primitive";
};

struct BoundOpts {
  std::uint64_t q = 0;
  unsigned d = 0;
};

struct VerificationFailure {};

std::string env(const std::string& flag) {
  std::string e = "SYMRANK_";
  for (char c : flag) e += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return e;
}

template <class T>
CLI::Option* opt(CLI::App* app, const std::string& name, T& target, const std::string& help) {
  return app->add_option("--" + name, target, help)->envname(env(name));
}

FieldCtx make_field(const Global& g) {
  if (g.n == 0) throw std::invalid_argument("--n is required");
  std::optional<std::vector<std::uint32_t>> mod;
  if (!g.modulus.empty()) mod = parse_modulus(g.modulus);
  return field_create(g.p, g.m, g.n, mod);
}

CodeSpec make_spec(const FieldCtx& ctx, const FamilyOpts& f) {
  CodeSpec spec;
  spec.n = ctx.n();
  spec.s = f.s;
  if (f.family == "S") {
    if (f.d == 0) throw std::invalid_argument("--d is required for the S family");
    spec.family = Family::S;
    spec.d = f.d;
  } else if (f.family == "T") {
    if (f.d != 0 && f.d + 2 != ctx.n()) throw std::invalid_argument("T codes have d = n - 2; omit --d or pass n - 2");
    spec.family = Family::T;
    spec.d = ctx.n() - 2;
    spec.eta = parse_element(ctx, f.eta);
  } else {
    throw std::invalid_argument("--family must be S or T, got '" + f.family + "'");
  }
  validate_spec(ctx, spec);
  return spec;
}

std::string claim_status(const CodeSpec& spec) {
  if (spec.family == Family::S) return "proved";
  return spec.n == 6 || spec.n == 8 || spec.n == 10 ? "proved" : "conjectural";
}

VerifyOptions make_verify_options(const Global& g, const EnumOpts& e) {
  VerifyOptions o;
  o.enumeration.mode = parse_mode(e.mode);
  o.enumeration.count = e.count;
  o.enumeration.seed = e.seed;
  o.workers = g.workers;
  o.budget = e.budget;
  o.force = e.force;
  if (o.enumeration.mode == EnumMode::Sample && e.count == 0) throw std::invalid_argument("sample mode needs --count");
  return o;
}

void emit(const Global& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw std::invalid_argument("cannot write " + g.out);
  f << text;
}

void emit_json(const Global& g, const Json& j) { emit(g, j.dump(2) + "\n"); }

void require_json(const Global& g, const char* cmd) {
  if (g.format != "json") throw std::invalid_argument(std::string(cmd) + " only writes JSON; CSV is for histograms");
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

Json code_json(const FieldCtx& ctx, const CodeSpec& spec, const CodeBasis& basis) {
  Json j = spec_json(ctx, spec);
  j["dim"] = basis.dim();
  j["size"] = to_string(code_size(ctx, basis));
  const BigInt bound = bound_size(ctx.q(), ctx.n(), spec.declared_d());
  j["bound"] = to_string(bound);
  j["meets_bound"] = code_size(ctx, basis) == bound;
  return j;
}

int run_verify(const Global& g, const FamilyOpts& f, const EnumOpts& e) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto ctx = make_field(g);
  const auto spec = make_spec(ctx, f);
  auto opt = make_verify_options(g, e);
  const unsigned claim = e.claim == 0 ? spec.declared_d() : e.claim;
  opt.rank_cap = std::max(claim, spec.declared_d()) + 1;
  const auto basis = build_code(ctx, spec);
  const auto verdict = verify_maximum(ctx, basis, opt);
  const bool passed = verdict.report.min_rank >= claim;
  if (g.format == "csv") {
    emit(g, histogram_csv(verdict.report.histogram));
  } else {
    require_json(g, "verify");
    Json j{{"command", "verify"}, {"provenance", provenance_json(ctx, e.seed)}};
    j["code"] = code_json(ctx, spec, basis);
    j["claim"] = Json{{"min_rank_at_least", claim},
                      {"status", e.claim == 0 ? claim_status(spec) : std::string("user")}};
    Json res = report_json(verdict.report);
    res["passed"] = passed;
    res["maximum"] = verdict.maximum;
    res["exhaustive"] = opt.enumeration.mode != EnumMode::Sample;
    j["result"] = res;
    j["run"] = Json{{"workers", g.workers}, {"elapsed_ms", ms_since(t0)}};
    emit_json(g, j);
  }
  if (!passed) throw VerificationFailure{};
  return 0;
}

int run_dist(const Global& g, const FamilyOpts& f, const EnumOpts& e) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto ctx = make_field(g);
  const auto spec = make_spec(ctx, f);
  const auto basis = build_code(ctx, spec);
  const auto rep = rank_distribution(ctx, basis, make_verify_options(g, e));
  if (g.format == "csv") {
    emit(g, histogram_csv(rep.histogram));
    return 0;
  }
  require_json(g, "dist");
  Json j{{"command", "dist"}, {"provenance", provenance_json(ctx, e.seed)}};
  j["code"] = code_json(ctx, spec, basis);
  j["result"] = report_json(rep);
  j["run"] = Json{{"workers", g.workers}, {"elapsed_ms", ms_since(t0)}};
  emit_json(g, j);
  return 0;
}

int run_dual(const Global& g, const FamilyOpts& f) {
  require_json(g, "dual");
  const auto t0 = std::chrono::steady_clock::now();
  const auto ctx = make_field(g);
  const auto spec = make_spec(ctx, f);
  const auto basis = build_code(ctx, spec);
  const auto dual = delsarte_dual(ctx, basis.gens);
  const std::size_t w_dim = static_cast<std::size_t>(ctx.n()) * (ctx.n() + 1) / 2;
  const bool dim_ok = dual.size() + basis.dim() == w_dim;
  const bool dd_ok = codes_equal(ctx, delsarte_dual(ctx, dual), basis.gens);
  Json j{{"command", "dual"}, {"provenance", provenance_json(ctx)}};
  j["code"] = code_json(ctx, spec, basis);
  j["dual"] = Json{{"dim", dual.size()},
                   {"fp_dim", dual.size() * ctx.m()},
                   {"size", to_string(boost::multiprecision::pow(BigInt(ctx.q()), static_cast<unsigned>(dual.size())))},
                   {"dimension_check", dim_ok},
                   {"dual_of_dual_equal", dd_ok},
                   {"basis", to_json(std::span<const LinPoly>(dual))}};
  j["run"] = Json{{"workers", 1}, {"elapsed_ms", ms_since(t0)}};
  emit_json(g, j);
  if (!dim_ok || !dd_ok) throw VerificationFailure{};
  return 0;
}

int run_equiv(const Global& g, const EquivOpts& e) {
  require_json(g, "equiv");
  const auto t0 = std::chrono::steady_clock::now();
  const auto ctx = make_field(g);
  Branch br;
  if (e.branch == "a") {
    br = Branch::A;
  } else if (e.branch == "b") {
    br = Branch::B;
  } else {
    throw std::invalid_argument("--branch must be a or b");
  }
  Match match;
  if (e.match == "exact") {
    match = Match::Exact;
  } else if (e.match == "subfield") {
    match = Match::UpToSubfield;
  } else {
    throw std::invalid_argument("--match must be exact or subfield");
  }
  const unsigned s2 = e.s2.value_or(br == Branch::A ? e.s1 : ctx.n() - e.s1 % ctx.n());
  const Elem eta1 = parse_element(ctx, e.eta1), eta2 = parse_element(ctx, e.eta2);
  const auto wit = check_condition(ctx, br, e.s1, s2, eta1, eta2, g.workers, match);
  Json j{{"command", "equiv"}, {"provenance", provenance_json(ctx)}};
  j["query"] = Json{{"branch", e.branch}, {"s1", e.s1}, {"s2", s2}, {"eta1", eta1.v}, {"eta2", eta2.v}, {"match", e.match}};
  j["witness"] = wit ? witness_json(*wit) : Json(nullptr);
  if (wit) j["witness_holds"] = witness_holds(ctx, *wit, e.s1, eta1, eta2, match);
  bool ok = true;
  if (e.apply) {
    Json ap{{"performed", wit.has_value()}};
    if (wit) {
      const auto t = witness_transform(ctx, *wit, e.s1);
      const auto image = apply_transform(ctx, build_T(ctx, e.s1, eta1).gens, t);
      ok = codes_equal(ctx, image, build_T(ctx, s2, eta2).gens);
      ap["transform"] = Json{{"f", to_json(t.f)}, {"r", t.r}};
      ap["codes_equal"] = ok;
    }
    j["apply"] = ap;
  }
  j["run"] = Json{{"workers", g.workers}, {"elapsed_ms", ms_since(t0)}};
  emit_json(g, j);
  if (!ok) throw VerificationFailure{};
  return 0;
}

int run_minors(Global g, const MinorOpts& mo) {
  require_json(g, "minors");
  const auto t0 = std::chrono::steady_clock::now();
  if (mo.k < 3 || mo.k > 5) throw std::invalid_argument("--k must be 3, 4 or 5");
  if (g.n != 0 && g.n != 2 * mo.k) throw std::invalid_argument("minors uses n = 2k; drop --n or pass n = 2k");
  g.n = 2 * mo.k;
  const auto ctx = make_field(g);
  const Elem eta = parse_element(ctx, mo.eta);
  if (eta.is_zero() || is_square(ctx, eta)) throw std::invalid_argument("--eta must be a non-square");
  Json j{{"command", "minors"}, {"provenance", provenance_json(ctx, mo.seed)}};
  j["eta"] = eta.v;
  Json rows = Json::array();
  bool ok = true;
  std::uint64_t state = mo.seed;
  auto next = [&state] { return detail::splitmix64(state); };
  for (auto id : kAllMinorFormulas) {
    const auto f = minor_formula(id);
    if (f.k != mo.k) continue;
    const auto res = check_minor(ctx, id, eta, mo.trials, next);
    ok = ok && res.agree == res.trials;
    rows.push_back(Json{{"formula", std::string(f.name)}, {"k", f.k}, {"trials", res.trials}, {"agree", res.agree}});
  }
  j["formulas"] = rows;
  j["all_agree"] = ok;
  j["run"] = Json{{"workers", 1}, {"elapsed_ms", ms_since(t0)}};
  emit_json(g, j);
  if (!ok) throw VerificationFailure{};
  return 0;
}

int run_bound(const Global& g, const BoundOpts& b, bool json) {
  if (b.q < 2) throw std::invalid_argument("--q must be at least 2");
  if (g.n == 0) throw std::invalid_argument("--n is required");
  const auto v = to_string(bound_size(b.q, g.n, b.d));
  if (!json) {
    emit(g, v + "\n");
    return 0;
  }
  Json j{{"command", "bound"}, {"provenance", Json{{"tool", "symrank"}, {"version", std::string(kVersion)}}}};
  j["q"] = b.q;
  j["n"] = g.n;
  j["d"] = b.d;
  j["bound"] = v;
  emit_json(g, j);
  return 0;
}

void add_family(CLI::App* sub, FamilyOpts& f) {
  opt(sub, "family", f.family, "S or T")->check(CLI::IsMember({"S", "T"}));
  opt(sub, "s", f.s, "Frobenius step s, gcd(s, n) = 1");
  opt(sub, "d", f.d, "minimum rank d (S family)");
  opt(sub, "eta", f.eta, "T parameter: integer, primitive or primitive^K");
}

void add_enum(CLI::App* sub, EnumOpts& e) {
  opt(sub, "mode", e.mode, "full, projective, sample or orbit")
      ->check(CLI::IsMember({"full", "projective", "sample", "orbit"}));
  opt(sub, "count", e.count, "sample size");
  opt(sub, "seed", e.seed, "sample seed");
  opt(sub, "budget", e.budget, "largest enumeration run without --force");
  sub->add_flag("--force", e.force, "ignore the budget")->envname(env("force"));
}

void add_claim(CLI::App* sub, EnumOpts& e) {
  opt(sub, "claim", e.claim, "minimum rank to check (default: the family's d)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric rank-distance codes over finite fields"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  opt(&app, "p", g.p, "characteristic");
  opt(&app, "m", g.m, "q = p^m");
  opt(&app, "n", g.n, "forms on F_{q^n}");
  opt(&app, "modulus", g.modulus, "defining polynomial of F_{p^{mn}}, coefficients constant term first");
  opt(&app, "out", g.out, "output file (default stdout)");
  opt(&app, "format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  opt(&app, "workers", g.workers, "worker threads")->check(CLI::PositiveNumber);

  FamilyOpts fam;
  EnumOpts en;
  EquivOpts eq;
  MinorOpts mi;
  BoundOpts bo;

  auto* verify = app.add_subcommand("verify", "minimum rank and maximality of a code");
  add_family(verify, fam);
  add_enum(verify, en);
  add_claim(verify, en);
  auto* dist = app.add_subcommand("dist", "rank distribution of a code");
  add_family(dist, fam);
  add_enum(dist, en);
  auto* dual = app.add_subcommand("dual", "Delsarte dual of a code");
  add_family(dual, fam);
  auto* equiv = app.add_subcommand("equiv", "equivalence conditions between T codes");
  opt(equiv, "branch", eq.branch, "a (s1 = s2) or b (s1 = -s2)")->check(CLI::IsMember({"a", "b"}));
  opt(equiv, "s1", eq.s1, "s of the first code");
  opt(equiv, "s2", eq.s2, "s of the second code");
  opt(equiv, "eta1", eq.eta1, "eta of the first code");
  opt(equiv, "eta2", eq.eta2, "eta of the second code");
  opt(equiv, "match", eq.match, "exact, or subfield to allow an F_{q^k}^* factor")
      ->check(CLI::IsMember({"exact", "subfield"}));
  equiv->add_flag("--apply", eq.apply, "transform and compare the codes")->envname(env("apply"));
  auto* minors = app.add_subcommand("minors", "closed-form minors against generic determinants");
  opt(minors, "k", mi.k, "k = n / 2, one of 3, 4, 5");
  opt(minors, "trials", mi.trials, "random inputs per formula");
  opt(minors, "seed", mi.seed, "seed");
  opt(minors, "eta", mi.eta, "non-square eta");
  auto* bound = app.add_subcommand("bound", "largest size of an additive d-code");
  opt(bound, "q", bo.q, "field size")->required();
  opt(bound, "d", bo.d, "minimum rank")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*verify) return run_verify(g, fam, en);
    if (*dist) return run_dist(g, fam, en);
    if (*dual) return run_dual(g, fam);
    if (*equiv) return run_equiv(g, eq);
    if (*minors) return run_minors(g, mi);
    if (*bound) return run_bound(g, bo, app.get_option("--format")->count() > 0 && g.format == "json");
  } catch (const VerificationFailure&) {
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
