// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>

#include "symrank/symrank.hpp"
#include "test_support.hpp"

using namespace symrank;
using symrank::testing::random_poly;
using symrank::testing::Rng;

namespace {

unsigned workers() { return std::max(1U, std::min(8U, std::thread::hardware_concurrency())); }

VerifyOptions options(EnumMode mode, std::uint64_t count = 0, std::uint64_t seed = 0) {
  VerifyOptions o;
  o.enumeration = {mode, count, seed};
  o.workers = workers();
  return o;
}

struct Outcome {
  bool pass;
  std::string detail;
};

using Histogram = std::map<std::size_t, std::uint64_t>;

std::string hist_text(const Histogram& h) {
  std::string s = "{";
  for (const auto& [r, c] : h) s += (s.size() > 1 ? ", " : "") + std::to_string(r) + ": " + std::to_string(c);
  return s + "}";
}

Outcome ac1() {
  const auto ctx = field_create(3, 1, 6);
  std::string detail;
  bool ok = true;
  for (unsigned s : {1u, 5u})
    for (std::uint64_t e : {1ULL, 3ULL}) {
      const auto v = verify_maximum(ctx, build_T(ctx, s, ctx.w_pow(e)), options(EnumMode::Full));
      ok = ok && v.report.min_rank == 4 && v.report.items == 531440 && v.size == BigInt(531441) && v.meets_bound;
      detail += "s=" + std::to_string(s) + ",eta=w^" + std::to_string(e) + ":" + std::to_string(v.report.min_rank) + " ";
    }
  return {ok, detail + "|C|=3^12"};
}

Outcome ac_sample(unsigned n, std::uint64_t count) {
  const auto ctx = field_create(3, 1, n);
  const auto rep = min_rank(ctx, build_T(ctx, 1, ctx.primitive()), options(EnumMode::Sample, count, 42));
  return {rep.items == count && rep.min_rank >= n - 2,
          std::to_string(rep.items) + " samples, min rank " + std::to_string(rep.min_rank) + " (cap " +
              std::to_string(rep.rank_cap) + ")"};
}

Outcome ac4() {
  const auto ctx = field_create(3, 1, 6);
  const auto v = verify_maximum(ctx, build_S(ctx, 4, 1), options(EnumMode::Full));
  const auto h = rank_distribution(ctx, build_S(ctx, 6, 1), options(EnumMode::Full)).histogram;
  return {v.report.min_rank >= 4 && v.size == BigInt(531441) && h == Histogram{{6, 728}},
          "S_{6,4,1} min rank " + std::to_string(v.report.min_rank) + ", S_{6,6,1} " + hist_text(h)};
}

Outcome ac5() {
  int agree = 0, total = 0;
  for (unsigned n : {4u, 6u}) {
    const auto ctx = field_create(3, 1, n);
    Rng rng(500 + n);
    for (int t = 0; t < 1000; ++t) {
      LinPoly f = random_poly(ctx, rng);
      for (std::size_t i = rng.below(n + 1); i < n; ++i) f[i] = ctx.zero();  // vary degree
      agree += symrank::rank(ctx, f) == operator_rank(ctx, f);
      ++total;
    }
  }
  return {agree == total, std::to_string(agree) + "/" + std::to_string(total)};
}

Outcome ac6() {
  std::string detail;
  bool ok = true;
  for (auto id : kAllMinorFormulas) {
    const auto f = minor_formula(id);
    const auto ctx = field_create(3, 1, 2 * f.k);
    Rng rng(600 + static_cast<unsigned>(id));
    const auto r = check_minor(ctx, id, ctx.primitive(), 1000, rng);
    ok = ok && r.agree == r.trials;
    detail += std::string(f.name) + " " + std::to_string(r.agree) + "/" + std::to_string(r.trials) + " ";
  }
  return {ok, detail};
}

Outcome ac7() {
  const auto small = field_create(3, 1, 3);
  const auto big = field_create(3, 1, 6);
  Rng rng(700);
  int agree = 0;
  std::set<std::size_t> ranks;
  for (int t = 0; t < 100; ++t) {
    std::vector<Elem> c(3);
    for (auto& e : c) e = random_element(small, rng);
    if (t % 3 == 0) c[rng.below(3)] = small.zero();
    const auto [r1, r2] = rank_cross_s(small, big, c, 2);
    agree += r1 == r2;
    ranks.insert(r1);
  }
  return {agree == 100, std::to_string(agree) + "/100, " + std::to_string(ranks.size()) + " distinct ranks"};
}

Outcome ac8() {
  const auto ctx = field_create(3, 1, 6);
  Rng rng(800);
  const CodeSpec spec{Family::T, 6, 4, 1, ctx.primitive()};
  std::size_t worst = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto g = t_codeword(ctx, spec, random_in_subfield(ctx, 3, rng), random_element(ctx, rng), ctx.zero());
    if (!g.is_zero()) worst = std::max(worst, kernel_dim(ctx, g));
  }
  return {worst <= 2, "max kernel dim " + std::to_string(worst)};
}

Outcome ac9() {
  const auto ctx = field_create(3, 1, 6);
  const Elem eta = ctx.primitive();
  const auto code = build_T(ctx, 1, eta);
  const auto dual = delsarte_dual(ctx, code.gens);
  bool described = true;
  for (const auto& g : dual) {
    for (std::size_t i = 2; i <= 4; ++i) described = described && g[i].is_zero();
    const Elem ea = ctx.mul(eta, g[1]);
    described = described && ctx.add(ea, ctx.frob(ea, 3)).is_zero();
  }
  // The described set has q^6 * q^3 elements; equal dimension plus
  // containment gives equality.
  const bool dd = codes_equal(ctx, delsarte_dual(ctx, dual), code.gens);
  return {dual.size() == 9 && described && dd, "F_3-dim " + std::to_string(dual.size()) +
                                                   ", description " + (described ? "holds" : "fails") +
                                                   ", dual of dual " + (dd ? "equal" : "differs")};
}

Outcome ac10() {
  const auto ctx = field_create(3, 1, 6);
  const Elem eta1 = ctx.primitive();
  const Elem a = ctx.w_pow(17);
  bool ok = true;
  std::string detail;
  for (Branch br : {Branch::A, Branch::B}) {
    const unsigned s2 = br == Branch::A ? 1 : 5;
    const EquivWitness w{br, a, 2, 0};
    const Elem eta2 = derive_eta2(ctx, br, 1, a, w.i, w.r, eta1);
    const auto image = apply_transform(ctx, build_T(ctx, 1, eta1).gens, witness_transform(ctx, w, 1));
    const bool eq = !is_square(ctx, eta2) && witness_holds(ctx, w, 1, eta1, eta2) &&
                    codes_equal(ctx, image, build_T(ctx, s2, eta2).gens);
    ok = ok && eq;
    detail += std::string("(") + branch_name(br) + ") eta2=" + std::to_string(eta2.v) + (eq ? " equal " : " differ ");
  }
  return {ok, detail};
}

Outcome ac11() {
  bool ok = true;
  std::string failed;
  auto check = [&](bool c, const char* name) {
    if (!c) failed += std::string(name) + " ";
    ok = ok && c;
  };
  const auto ctx = field_create(3, 2, 4);
  Rng rng(1100);
  bool inv = true, tr = true;
  for (int t = 0; t < 300; ++t) {
    const LinPoly f = random_poly(ctx, rng);
    inv = inv && adjoint(ctx, adjoint(ctx, f)) == f;
    const Elem x = random_element(ctx, rng), y = random_element(ctx, rng);
    tr = tr && trace_q(ctx, ctx.mul(eval(ctx, f, x), y)) == trace_q(ctx, ctx.mul(x, eval(ctx, adjoint(ctx, f), y)));
  }
  check(inv, "adjoint-involution");
  check(tr, "trace-identity");
  bool wdim = true;
  for (unsigned n : {2u, 5u, 6u}) {
    const auto c = field_create(3, 1, n);
    wdim = wdim && w_basis(c).size() == n * (n + 1) / 2 && fq_rank(c, WSpace(c), w_basis(c)) == n * (n + 1) / 2;
  }
  check(wdim, "W-dimension");
  const auto c6 = field_create(3, 1, 6);
  const auto code = build_T(c6, 5, c6.w_pow(3));
  const auto full = rank_distribution(c6, code, options(EnumMode::Full));
  const auto proj = rank_distribution(c6, code, options(EnumMode::Projective));
  check(full.histogram == proj.histogram && full.items == 2 * proj.items, "projective-scaling");
  const auto c8 = field_create(3, 1, 8);
  const auto t8 = build_T(c8, 1, c8.primitive());
  std::vector<VerifyReport> reps;
  for (unsigned w : {1u, 2u, 8u}) {
    auto o = options(EnumMode::Sample, 30000, 11);
    o.workers = w;
    o.chunk = 1000;
    reps.push_back(rank_distribution(c8, t8, o));
  }
  bool det = true;
  for (const auto& r : reps)
    det = det && r.histogram == reps[0].histogram && r.witness == reps[0].witness && r.min_rank == reps[0].min_rank;
  check(det, "partition-merge");
  return {ok, ok ? "all five properties hold" : "failed: " + failed};
}

Outcome ac12() {
  const auto ctx = field_create(3, 1, 6);
  const auto s = build_S(ctx, 4, 1), t = build_T(ctx, 1, ctx.primitive());
  const auto first = s_family_distinguisher(ctx, s, t, options(EnumMode::Full));
  auto o = options(EnumMode::Full);
  o.workers = 1;
  const auto again = s_family_distinguisher(ctx, s, t, o);
  const bool reproducible = first.verdict == again.verdict && first.first.histogram == again.first.histogram &&
                            first.second.histogram == again.second.histogram;
  const bool complete = first.first.codewords_checked == 531440 && first.second.codewords_checked == 531440;
  return {reproducible && complete, std::string("verdict ") + verdict_name(first.verdict) + "; S " +
                                        hist_text(first.first.histogram) + " T " + hist_text(first.second.histogram)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1  T_{6,s,eta} full enumeration, q=3", ac1},
      {"AC2  T_{8,1,w} sample 10^6, seed 42", [] { return ac_sample(8, 1000000); }},
      {"AC3  T_{10,1,w} sample 10^5, seed 42", [] { return ac_sample(10, 100000); }},
      {"AC4  S_{6,4,1} and S_{6,6,1}", ac4},
      {"AC5  Dickson rank = operator rank", ac5},
      {"AC6  closed-form minors", ac6},
      {"AC7  rank across s, q=3 n=3 s=2", ac7},
      {"AC8  kernel bound with b_2 = 0", ac8},
      {"AC9  dual of T_{6,1,w}", ac9},
      {"AC10 equivalence roundtrip", ac10},
      {"AC11 property suite", ac11},
      {"AC12 S_{6,4,1} vs T_{6,1,w} histograms", ac12},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    std::printf("%s %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), s);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
