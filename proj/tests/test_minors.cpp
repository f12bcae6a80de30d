#include <gtest/gtest.h>

#include "symrank/minors.hpp"
#include "test_support.hpp"

using namespace symrank;
using symrank::testing::Rng;

namespace {

const FieldCtx& ctx_for(unsigned k) {
  static const FieldCtx c3 = field_create(3, 1, 6);
  static const FieldCtx c4 = field_create(3, 1, 8);
  static const FieldCtx c5 = field_create(3, 1, 10);
  return k == 3 ? c3 : (k == 4 ? c4 : c5);
}

// Entry of the displayed k = 3 matrix: symbol and q-exponent.
enum Sym { Z, EB, B1, B0 };
struct Cell {
  Sym sym;
  unsigned e;
};

}  // namespace

TEST(Minors, ClosedFormsAgreeWithGenericDeterminants) {
  for (auto id : kAllMinorFormulas) {
    const auto& ctx = ctx_for(minor_formula(id).k);
    Rng rng(1000 + static_cast<unsigned>(id));
    const auto res = check_minor(ctx, id, ctx.primitive(), 1000, rng);
    EXPECT_EQ(res.agree, res.trials) << minor_formula(id).name;
  }
}

TEST(Minors, AgreementHoldsForOtherEta) {
  for (auto id : kAllMinorFormulas) {
    const auto& ctx = ctx_for(minor_formula(id).k);
    Rng rng(77);
    const auto res = check_minor(ctx, id, ctx.w_pow(7), 200, rng);
    EXPECT_EQ(res.agree, res.trials) << minor_formula(id).name;
  }
}

TEST(Minors, K5M3AsPrintedDisagrees) {
  const auto& ctx = ctx_for(5);
  Rng rng(5);
  const Elem eta = ctx.primitive();
  int differ = 0;
  for (int t = 0; t < 100; ++t) {
    const Elem b0 = random_in_subfield(ctx, 5, rng);
    const Elem b1 = random_element(ctx, rng);
    const Elem b2 = random_in_subfield(ctx, 5, rng);
    const Elem generic = minor_generic(ctx, MinorFormulaId::K5_M3, b0, b1, b2, eta);
    EXPECT_EQ(minor_closed_form(ctx, MinorFormulaId::K5_M3, b0, b1, b2, eta), generic);
    differ += minor_k5_m3_as_printed(ctx, b0, b1, b2, eta) != generic;
  }
  EXPECT_GT(differ, 50);
}

TEST(Minors, DicksonDisplayAtK3) {
  const auto& ctx = ctx_for(3);
  Rng rng(3);
  const Elem eta = ctx.primitive();
  const Elem b0 = random_in_subfield(ctx, 3, rng);
  const Elem b1 = random_element(ctx, rng);
  const Elem b2 = random_in_subfield(ctx, 3, rng);
  const Elem eb = ctx.mul(eta, b2);
  const Cell disp[6][6] = {
      {{Z, 0}, {EB, 0}, {B1, 0}, {B0, 0}, {B1, 4}, {EB, 5}},
      {{EB, 0}, {Z, 0}, {EB, 1}, {B1, 1}, {B0, 1}, {B1, 5}},
      {{B1, 0}, {EB, 1}, {Z, 0}, {EB, 2}, {B1, 2}, {B0, 2}},
      {{B0, 0}, {B1, 1}, {EB, 2}, {Z, 0}, {EB, 3}, {B1, 3}},
      {{B1, 4}, {B0, 1}, {B1, 2}, {EB, 3}, {Z, 0}, {EB, 4}},
      {{EB, 5}, {B1, 5}, {B0, 2}, {B1, 3}, {EB, 4}, {Z, 0}},
  };
  const auto d = dickson_of(ctx, g_polynomial(ctx, b0, b1, b2, eta));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      const Cell c = disp[i][j];
      const Elem base = c.sym == Z ? ctx.zero() : (c.sym == EB ? eb : (c.sym == B1 ? b1 : b0));
      EXPECT_EQ(d(i, j), ctx.frob(base, c.e)) << i << "," << j;
    }
}

TEST(Minors, M2DisplayAtK3) {
  const auto& ctx = ctx_for(3);
  Rng rng(4);
  const Elem eta = ctx.primitive();
  const Elem b0 = random_in_subfield(ctx, 3, rng);
  const Elem b1 = random_element(ctx, rng);
  const Elem b2 = random_in_subfield(ctx, 3, rng);
  const Elem eb = ctx.mul(eta, b2);
  const auto f = minor_formula(MinorFormulaId::K3_M2);
  const auto m2 = submatrix(dickson_of(ctx, g_polynomial(ctx, b0, b1, b2, eta)), f.rows, f.cols);
  const Elem z = ctx.zero();
  const Elem expect[4][4] = {
      {z, eb, b0, ctx.frob(b1, 4)},
      {eb, z, ctx.frob(b1, 1), ctx.frob(b0, 1)},
      {b0, ctx.frob(b1, 1), z, ctx.frob(eb, 3)},
      {ctx.frob(b1, 4), ctx.frob(b0, 1), ctx.frob(eb, 3), z},
  };
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(m2(i, j), expect[i][j]) << i << "," << j;
}

TEST(Minors, Case21RejectsNonzeroB0B1) {
  const auto& ctx = ctx_for(5);
  const Elem one = ctx.one();
  EXPECT_THROW(minor_closed_form(ctx, MinorFormulaId::K5_M2_CASE21, one, ctx.zero(), one, ctx.primitive()),
               std::invalid_argument);
  EXPECT_NO_THROW(
      minor_closed_form(ctx, MinorFormulaId::K5_M2_CASE21, ctx.zero(), ctx.zero(), one, ctx.primitive()));
}

TEST(Minors, RejectsWrongField) {
  EXPECT_THROW(minor_closed_form(ctx_for(3), MinorFormulaId::K4_M1, ctx_for(3).one(), ctx_for(3).one(),
                                 ctx_for(3).one(), ctx_for(3).primitive()),
               std::invalid_argument);
}

TEST(Minors, ParseNames) {
  for (auto id : kAllMinorFormulas) EXPECT_EQ(parse_minor_formula(minor_formula(id).name), id);
  EXPECT_THROW(parse_minor_formula("K9_M9"), std::invalid_argument);
}
