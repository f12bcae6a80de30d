#include <gtest/gtest.h>

#include "symrank/verify.hpp"
#include "test_support.hpp"

using namespace symrank;
using symrank::testing::Rng;

namespace {

using Histogram = std::map<std::size_t, std::uint64_t>;

// Frozen from tools/oracles/rank_histograms.py (independent field
// construction, F_3 operator matrices, numpy elimination).
const Histogram kT61w = {{4, 22022}, {5, 176904}, {6, 332514}};
const Histogram kS641 = {{4, 22022}, {5, 176904}, {6, 332514}};
const Histogram kS661 = {{6, 728}};

const FieldCtx& f36() {
  static const FieldCtx ctx = field_create(3, 1, 6);
  return ctx;
}

VerifyOptions opts(EnumMode mode, unsigned workers = 1) {
  VerifyOptions o;
  o.enumeration.mode = mode;
  o.workers = workers;
  return o;
}

}  // namespace

TEST(Bound, Examples) {
  EXPECT_EQ(bound_size(3, 6, 4), BigInt(531441));
  EXPECT_EQ(bound_size(3, 6, 6), BigInt(729));
  EXPECT_EQ(bound_size(3, 8, 6), BigInt(43046721));
  EXPECT_EQ(bound_size(3, 7, 4), boost::multiprecision::pow(BigInt(3), 16));  // (n+1)(n-d+1)/2
  EXPECT_EQ(bound_size(3, 6, 1), boost::multiprecision::pow(BigInt(3), 21));   // all of S_6(3)
  EXPECT_EQ(bound_size(7, 30, 2), boost::multiprecision::pow(BigInt(7), 450));
  EXPECT_THROW(bound_size(3, 6, 0), std::invalid_argument);
  EXPECT_THROW(bound_size(3, 6, 7), std::invalid_argument);
}

TEST(Verify, TCodeHistogramMatchesOracle) {
  const auto code = build_T(f36(), 1, f36().primitive());
  const auto rep = rank_distribution(f36(), code, opts(EnumMode::Full, 4));
  EXPECT_EQ(rep.histogram, kT61w);
  EXPECT_EQ(rep.items, 531440U);
  EXPECT_EQ(rep.min_rank, 4U);
}

TEST(Verify, SCodeHistogramsMatchOracle) {
  EXPECT_EQ(rank_distribution(f36(), build_S(f36(), 4, 1), opts(EnumMode::Full, 4)).histogram, kS641);
  EXPECT_EQ(rank_distribution(f36(), build_S(f36(), 6, 1), opts(EnumMode::Full)).histogram, kS661);
}

TEST(Verify, ProjectiveAndOrbitReproduceFull) {
  const auto code = build_T(f36(), 5, f36().w_pow(3));
  const auto full = rank_distribution(f36(), code, opts(EnumMode::Full, 4));
  const auto proj = rank_distribution(f36(), code, opts(EnumMode::Projective, 4));
  const auto orbit = rank_distribution(f36(), code, opts(EnumMode::Orbit, 4));
  EXPECT_EQ(proj.histogram, full.histogram);
  EXPECT_EQ(orbit.histogram, full.histogram);
  EXPECT_EQ(proj.items * 2, full.items);
  EXPECT_EQ(orbit.codewords_checked, 531440U);
  for (const auto& [r, c] : proj.histogram) EXPECT_EQ(c % 2, 0U) << r;
}

TEST(Verify, ProjectiveScalesByQMinusOne) {
  const auto ctx = field_create(5, 1, 4);
  const auto code = build_S(ctx, 2, 1);
  const auto full = rank_distribution(ctx, code, opts(EnumMode::Full));
  const auto proj = rank_distribution(ctx, code, opts(EnumMode::Projective));
  EXPECT_EQ(full.histogram, proj.histogram);
  EXPECT_EQ(full.items, proj.items * 4);
}

TEST(Verify, WorkerCountDoesNotMatter) {
  const auto ctx = field_create(3, 2, 6);
  const auto code = build_T(ctx, 1, ctx.primitive());
  VerifyOptions o = opts(EnumMode::Sample);
  o.enumeration.count = 20000;
  o.enumeration.seed = 7;
  o.chunk = 1000;
  std::vector<VerifyReport> reps;
  for (unsigned w : {1u, 2u, 8u}) {
    o.workers = w;
    reps.push_back(rank_distribution(ctx, code, o));
  }
  for (const auto& r : reps) {
    EXPECT_EQ(r.histogram, reps[0].histogram);
    EXPECT_EQ(r.min_rank, reps[0].min_rank);
    EXPECT_EQ(r.witness, reps[0].witness);
    EXPECT_EQ(r.items, 20000U);
  }
  EXPECT_GE(reps[0].min_rank, 4U);
}

TEST(Verify, MergeIsAssociativeAndCommutative) {
  const auto code = build_S(f36(), 4, 1);
  const Enumerator en(f36(), code, {EnumMode::Full});
  const auto a = detail::scan_range(f36(), en, 7, 0, 1000);
  const auto b = detail::scan_range(f36(), en, 7, 1000, 5000);
  const auto c = detail::scan_range(f36(), en, 7, 5000, 9000);
  const auto whole = detail::scan_range(f36(), en, 7, 0, 9000);
  for (const auto& m : {merge(merge(a, b), c), merge(a, merge(b, c)), merge(merge(c, a), b)}) {
    EXPECT_EQ(m.histogram, whole.histogram);
    EXPECT_EQ(m.min_rank, whole.min_rank);
    EXPECT_EQ(m.witness, whole.witness);
    EXPECT_EQ(m.items, 9000U);
  }
}

TEST(Verify, MinRankCapAndWitness) {
  const auto code = build_T(f36(), 1, f36().primitive());
  const auto rep = min_rank(f36(), code, opts(EnumMode::Projective, 4));
  EXPECT_EQ(rep.rank_cap, 5U);
  EXPECT_EQ(rep.min_rank, 4U);
  EXPECT_TRUE(rep.min_rank_exact());
  EXPECT_EQ(rep.histogram.rbegin()->first, 5U);  // ranks >= 5 are pooled
  ASSERT_EQ(rep.witness.size(), code.dim());
  EXPECT_EQ(symrank::rank(f36(), combine(f36(), code, rep.witness)), 4U);
}

TEST(Verify, MaximumVerdicts) {
  const auto t = verify_maximum(f36(), build_T(f36(), 1, f36().primitive()), opts(EnumMode::Projective, 4));
  EXPECT_TRUE(t.maximum);
  EXPECT_EQ(t.size, BigInt(531441));
  const auto s = verify_maximum(f36(), build_S(f36(), 6, 1), opts(EnumMode::Full));
  EXPECT_TRUE(s.maximum);
  EXPECT_EQ(s.report.min_rank, 6U);
  // W itself is a 1-code of full size.
  auto all = build_S(f36(), 2, 1);
  all.spec.d = 1;
  auto o = opts(EnumMode::Sample);
  o.enumeration.count = 100;
  const auto w = verify_maximum(f36(), all, o);
  EXPECT_FALSE(w.meets_bound);
  EXPECT_FALSE(w.maximum);
}

TEST(Verify, BudgetIsEnforced) {
  const auto code = build_T(f36(), 1, f36().primitive());
  VerifyOptions o = opts(EnumMode::Full);
  o.budget = 1000;
  EXPECT_THROW(min_rank(f36(), code, o), std::runtime_error);
  o.enumeration = {EnumMode::Sample, 5000, 1};
  EXPECT_NO_THROW(min_rank(f36(), code, o));
  o.enumeration = {EnumMode::Full};
  o.force = true;
  o.budget = 1;
  EXPECT_EQ(min_rank(f36(), build_S(f36(), 6, 1), o).min_rank, 6U);
}

TEST(Verify, EmptyCode) {
  CodeBasis empty{{Family::S, 6, 6, 1, {}}, {}};
  EXPECT_THROW(min_rank(f36(), empty, opts(EnumMode::Full)), std::invalid_argument);
  EXPECT_TRUE(rank_distribution(f36(), empty, opts(EnumMode::Full)).histogram.empty());
}

// With b_2 = 0 the kernel of g has F_q-dimension at most 2.
TEST(Verify, KernelBoundWithoutB2) {
  const auto& ctx = f36();
  Rng rng(34);
  const auto spec = CodeSpec{Family::T, 6, 4, 1, ctx.primitive()};
  std::size_t worst = 0;
  for (int t = 0; t < 1000; ++t) {
    const Elem b0 = random_in_subfield(ctx, 3, rng), b1 = random_element(ctx, rng);
    const auto g = t_codeword(ctx, spec, b0, b1, ctx.zero());
    if (g.is_zero()) continue;
    worst = std::max(worst, kernel_dim(ctx, g));
  }
  EXPECT_LE(worst, 2U);
}
