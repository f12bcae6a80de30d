#include <gtest/gtest.h>

#include <set>

#include "symrank/gf.hpp"

using namespace symrank;

namespace {

// Trace via the F_p-matrix of multiplication: Tr_{F_{p^D}/F_p}(x) is the trace
// of that matrix, an independent route from the conjugate sum.
std::uint32_t mult_matrix_trace(const FieldCtx& ctx, Elem x) {
  std::uint64_t t = 0;
  std::uint64_t basis = 1;
  for (unsigned c = 0; c < ctx.degree(); ++c) {
    t += ctx.coeffs(ctx.mul(Elem{basis}, x))[c];
    basis *= ctx.p();
  }
  return static_cast<std::uint32_t>(t % ctx.p());
}

}  // namespace

TEST(FieldCreate, F729Defaults) {
  const auto ctx = field_create(3, 1, 6);
  EXPECT_EQ(ctx.q(), 3U);
  EXPECT_EQ(ctx.order(), 729U);
  EXPECT_TRUE(ctx.table_mode());
  EXPECT_EQ(ctx.modulus().size(), 7U);
  EXPECT_EQ(ctx.modulus().back(), 1U);
}

TEST(FieldCreate, Rejections) {
  EXPECT_THROW(field_create(3, 1, 6, std::vector<std::uint32_t>{1, 0, 1}), std::invalid_argument);
  EXPECT_THROW(field_create(2, 1, 6), std::invalid_argument);
  EXPECT_THROW(field_create(9, 1, 2), std::invalid_argument);
  EXPECT_THROW(field_create(3, 0, 2), std::invalid_argument);
  // X^2 + 1 over F_5 has roots 2, 3.
  EXPECT_THROW(field_create(5, 1, 2, std::vector<std::uint32_t>{1, 0, 1}), std::invalid_argument);
  EXPECT_THROW(field_create(3, 1, 2, std::vector<std::uint32_t>{1, 0, 2}), std::invalid_argument);
}

TEST(FieldCreate, SmallestModulusIsFirstIrreducible) {
  // Over F_3, X^2 + 1 is the least monic irreducible quadratic by packed value.
  const auto ctx = field_create(3, 1, 2);
  EXPECT_EQ(ctx.modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
  const auto ctx5 = field_create(5, 1, 2);
  EXPECT_EQ(ctx5.modulus(), (std::vector<std::uint32_t>{2, 0, 1}));
}

TEST(FieldCreate, SuppliedModulusIsEchoed) {
  const std::vector<std::uint32_t> mod{2, 1, 0, 0, 0, 0, 1};  // X^6 + X + 2, irreducible over F_3
  const auto ctx = field_create(3, 1, 6, mod);
  EXPECT_EQ(ctx.modulus(), mod);
}

TEST(FieldArith, PrimitiveHasFullOrder) {
  for (auto [p, m, n] : {std::array<unsigned, 3>{3, 1, 6}, {3, 2, 3}, {5, 1, 4}, {7, 1, 2}}) {
    const auto ctx = field_create(p, m, n);
    const Elem w = ctx.primitive();
    for (auto l : ctx.group_order_factors()) EXPECT_NE(ctx.pow(w, (ctx.order() - 1) / l), ctx.one());
    EXPECT_EQ(ctx.pow(w, ctx.order() - 1), ctx.one());
  }
}

TEST(FieldArith, TableAdditionMatchesDigits) {
  const auto ctx = field_create(3, 1, 6);
  std::uint64_t st = 7;
  auto next = [&] { return detail::splitmix64(st); };
  for (int t = 0; t < 500; ++t) {
    const Elem a = random_element(ctx, next);
    const Elem b = random_element(ctx, next);
    const auto ca = ctx.coeffs(a), cb = ctx.coeffs(b);
    std::vector<std::uint32_t> s(6);
    for (int i = 0; i < 6; ++i) s[i] = (ca[i] + cb[i]) % 3;
    EXPECT_EQ(ctx.add(a, b), ctx.from_coeffs(s));
    EXPECT_EQ(ctx.add(ctx.sub(a, b), b), a);
    if (!b.is_zero()) {
      EXPECT_EQ(ctx.mul(ctx.div(a, b), b), a);
    }
  }
}

TEST(FieldArith, GeneralModeIdentities) {
  // 3^14 > 2^20, so no tables.
  const auto big = field_create(3, 1, 14);
  ASSERT_FALSE(big.table_mode());
  const Elem w = big.primitive();
  EXPECT_EQ(big.pow(w, big.order() - 1), big.one());
  for (auto l : big.group_order_factors()) EXPECT_NE(big.pow(w, (big.order() - 1) / l), big.one());
  std::uint64_t st = 3;
  auto next = [&] { return detail::splitmix64(st); };
  for (int t = 0; t < 200; ++t) {
    const Elem a = random_element(big, next);
    const Elem b = random_element(big, next);
    EXPECT_EQ(big.frob(big.mul(a, b), 1), big.mul(big.frob(a, 1), big.frob(b, 1)));
    EXPECT_EQ(big.frob(a, 1), big.pow(a, 3));
    EXPECT_EQ(big.frob_p(a, 5), big.pow(a, 243));
    if (!a.is_zero()) {
      EXPECT_EQ(big.mul(a, big.inv(a)), big.one());
    }
    EXPECT_EQ(big.mul(big.add(a, b), a), big.add(big.mul(a, a), big.mul(b, a)));
  }
}

TEST(Frobenius, IsAutomorphism) {
  const auto ctx = field_create(3, 2, 3);
  std::uint64_t st = 11;
  auto next = [&] { return detail::splitmix64(st); };
  for (int t = 0; t < 300; ++t) {
    const Elem x = random_element(ctx, next), y = random_element(ctx, next);
    EXPECT_EQ(ctx.frob(ctx.add(x, y), 1), ctx.add(ctx.frob(x, 1), ctx.frob(y, 1)));
    EXPECT_EQ(ctx.frob(ctx.mul(x, y), 1), ctx.mul(ctx.frob(x, 1), ctx.frob(y, 1)));
    EXPECT_EQ(ctx.frob(x, 1), ctx.pow(x, 9));
    EXPECT_EQ(ctx.frob(x, 3), x);
  }
}

TEST(Frobenius, MatricesMatchRepeatedPowering) {
  const auto ctx = field_create(5, 1, 4);
  for (unsigned j = 0; j < 4; ++j) {
    std::uint64_t basis = 1;
    for (unsigned c = 0; c < 4; ++c, basis *= 5) {
      Elem e{basis};
      Elem expect = e;
      for (unsigned r = 0; r < j; ++r) expect = ctx.pow(expect, 5);
      EXPECT_EQ(ctx.frob_p(e, j), expect);
    }
  }
}

TEST(Trace, Examples) {
  const auto ctx = field_create(3, 1, 6);
  EXPECT_EQ(trace_q(ctx, ctx.zero()), ctx.zero());
  EXPECT_EQ(trace_q(ctx, ctx.one()), ctx.zero());  // 6 mod 3
  const Elem t = trace_q(ctx, ctx.primitive());
  EXPECT_EQ(ctx.frob(t, 1), t);
  EXPECT_EQ(t, ctx.scalar(mult_matrix_trace(ctx, ctx.primitive())));
}

TEST(Trace, MatchesMultiplicationMatrixTrace) {
  const auto ctx = field_create(3, 1, 6);
  for (std::uint64_t v = 0; v < ctx.order(); ++v)
    ASSERT_EQ(trace_q(ctx, Elem{v}), ctx.scalar(mult_matrix_trace(ctx, Elem{v})));
}

TEST(Trace, FqLinearAndFixed) {
  const auto ctx = field_create(3, 2, 3);  // q = 9
  const auto fq = fq_elements(ctx);
  std::uint64_t st = 5;
  auto next = [&] { return detail::splitmix64(st); };
  for (int t = 0; t < 200; ++t) {
    const Elem x = random_element(ctx, next), y = random_element(ctx, next);
    const Elem lam = fq[detail::uniform_below(next, fq.size())];
    const Elem tx = trace_q(ctx, x);
    EXPECT_TRUE(is_in_subfield(ctx, tx, ctx.m()));
    EXPECT_EQ(trace_q(ctx, ctx.add(ctx.mul(lam, x), y)), ctx.add(ctx.mul(lam, tx), trace_q(ctx, y)));
  }
}

TEST(Subfield, Membership) {
  const auto ctx = field_create(3, 1, 6);
  EXPECT_TRUE(is_in_subfield(ctx, ctx.one(), 1));
  EXPECT_TRUE(is_in_subfield(ctx, ctx.primitive(), 6));
  EXPECT_FALSE(is_in_subfield(ctx, ctx.primitive(), 3));
  EXPECT_THROW(is_in_subfield(ctx, ctx.one(), 4), std::invalid_argument);
}

TEST(Subfield, BasisSpansClosedSubfield) {
  const auto ctx = field_create(3, 1, 6);
  for (unsigned d : {1U, 2U, 3U, 6U}) {
    const auto basis = subfield_basis(ctx, d);
    ASSERT_EQ(basis.size(), d);
    std::set<std::uint64_t> span;
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= 3;
    for (std::uint64_t t = 0; t < count; ++t) {
      Elem acc = ctx.zero();
      std::uint64_t r = t;
      for (const Elem b : basis) {
        acc = ctx.add(acc, ctx.mul(ctx.scalar(r % 3), b));
        r /= 3;
      }
      EXPECT_EQ(ctx.frob_p(acc, d), acc);
      span.insert(acc.v);
    }
    EXPECT_EQ(span.size(), count);
    for (auto a : span)
      for (auto b : span) ASSERT_TRUE(span.count(ctx.mul(Elem{a}, Elem{b}).v));
  }
  EXPECT_EQ(subfield_basis(ctx, 1), std::vector<Elem>{ctx.one()});
  EXPECT_THROW(subfield_basis(ctx, 5), std::invalid_argument);
}

TEST(Squares, CountsAndExamples) {
  const auto ctx = field_create(3, 1, 6);
  EXPECT_TRUE(is_square(ctx, ctx.one()));
  EXPECT_FALSE(is_square(ctx, ctx.primitive()));
  EXPECT_TRUE(is_square(ctx, ctx.w_pow(2)));
  EXPECT_THROW(is_square(ctx, ctx.zero()), std::invalid_argument);
  std::uint64_t squares = 0;
  for (std::uint64_t v = 1; v < ctx.order(); ++v) squares += is_square(ctx, Elem{v});
  EXPECT_EQ(squares, 364U);
}

TEST(Elements, FqListing) {
  const auto ctx = field_create(3, 2, 2);
  const auto fq = fq_elements(ctx);
  ASSERT_EQ(fq.size(), 9U);
  EXPECT_EQ(fq[0], ctx.zero());
  EXPECT_EQ(fq[1], ctx.one());
  std::set<std::uint64_t> seen;
  for (auto e : fq) {
    EXPECT_TRUE(is_in_subfield(ctx, e, 2));
    seen.insert(e.v);
  }
  EXPECT_EQ(seen.size(), 9U);
}

TEST(Elements, EncodingRoundTrip) {
  const auto ctx = field_create(5, 1, 3);
  for (std::uint64_t v = 0; v < ctx.order(); ++v) EXPECT_EQ(ctx.from_coeffs(ctx.coeffs(Elem{v})).v, v);
  EXPECT_THROW(ctx.from_int(125), std::invalid_argument);
}
