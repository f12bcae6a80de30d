#ifndef SYMRANK_MINORS_HPP
#define SYMRANK_MINORS_HPP

#include <array>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "symrank/codes.hpp"
#include "symrank/dickson.hpp"
#include "symrank/gf.hpp"

// Closed-form determinants of selected submatrices of D(g), g the T-family
// polynomial with s = 1, n = 2k, and their generic counterparts.
namespace symrank {

enum class MinorFormulaId { K3_M1, K3_M2, K4_M1, K4_M2, K5_M1, K5_M3, K5_M2_CASE21 };

inline constexpr std::array<MinorFormulaId, 7> kAllMinorFormulas{
    MinorFormulaId::K3_M1, MinorFormulaId::K3_M2, MinorFormulaId::K4_M1,       MinorFormulaId::K4_M2,
    MinorFormulaId::K5_M1, MinorFormulaId::K5_M3, MinorFormulaId::K5_M2_CASE21};

struct MinorFormula {
  MinorFormulaId id;
  std::string_view name;
  unsigned k;
  std::vector<std::size_t> rows;  // 1-based
  std::vector<std::size_t> cols;  // 1-based
};

inline MinorFormula minor_formula(MinorFormulaId id) {
  switch (id) {
    case MinorFormulaId::K3_M1: return {id, "K3_M1", 3, {1, 2, 3, 4}, {1, 2, 3, 4}};
    case MinorFormulaId::K3_M2: return {id, "K3_M2", 3, {1, 2, 4, 5}, {1, 2, 4, 5}};
    case MinorFormulaId::K4_M1: return {id, "K4_M1", 4, {1, 2, 3, 5, 6, 7}, {1, 2, 3, 5, 6, 7}};
    case MinorFormulaId::K4_M2: return {id, "K4_M2", 4, {1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6}};
    case MinorFormulaId::K5_M1: return {id, "K5_M1", 5, {1, 2, 3, 4, 5, 6, 7, 8}, {1, 2, 3, 4, 5, 6, 7, 8}};
    case MinorFormulaId::K5_M3: return {id, "K5_M3", 5, {1, 2, 3, 4, 6, 7, 8, 9}, {1, 2, 3, 4, 6, 7, 8, 9}};
    case MinorFormulaId::K5_M2_CASE21:
      return {id, "K5_M2_CASE21", 5, {1, 2, 3, 4, 5, 6, 7, 8}, {3, 4, 5, 6, 7, 8, 9, 10}};
  }
  throw std::invalid_argument("unknown minor formula");
}

inline MinorFormulaId parse_minor_formula(std::string_view s) {
  for (auto id : kAllMinorFormulas)
    if (minor_formula(id).name == s) return id;
  throw std::invalid_argument("unknown minor formula '" + std::string(s) + "'");
}

/// g for s = 1.
inline LinPoly g_polynomial(const FieldCtx& ctx, Elem b0, Elem b1, Elem b2, Elem eta) {
  return t_polynomial(ctx, ctx.n(), 1, b0, b1, b2, eta);
}

/// Generic determinant of the formula's submatrix of D(g).
inline Elem minor_generic(const FieldCtx& ctx, MinorFormulaId id, Elem b0, Elem b1, Elem b2, Elem eta) {
  const auto f = minor_formula(id);
  const auto d = dickson_of(ctx, g_polynomial(ctx, b0, b1, b2, eta));
  return matrix_det(ctx, submatrix(d, f.rows, f.cols));
}

namespace detail {

// Arithmetic helpers bound to one context.  P(x, {e1, e2, ...}) is
// x^{q^{e1} + q^{e2} + ...}, evaluated as a product of conjugates.
class MinorAlgebra {
 public:
  explicit MinorAlgebra(const FieldCtx& ctx) : c_(ctx) {}

  Elem P(Elem x, std::initializer_list<unsigned> exps) const {
    Elem r = c_.one();
    for (unsigned e : exps) r = c_.mul(r, c_.frob(x, e));
    return r;
  }
  Elem mul(std::initializer_list<Elem> xs) const {
    Elem r = c_.one();
    for (Elem x : xs) r = c_.mul(r, x);
    return r;
  }
  Elem mul(Elem a, Elem b) const { return c_.mul(a, b); }
  Elem sum(std::initializer_list<Elem> xs) const {
    Elem r = c_.zero();
    for (Elem x : xs) r = c_.add(r, x);
    return r;
  }
  Elem neg(Elem x) const { return c_.neg(x); }
  Elem sub(Elem a, Elem b) const { return c_.sub(a, b); }
  Elem sq(Elem x) const { return c_.mul(x, x); }
  Elem scal(long long k, Elem x) const {
    const long long p = c_.p();
    return c_.mul(c_.scalar(static_cast<std::uint64_t>(((k % p) + p) % p)), x);
  }

 private:
  const FieldCtx& c_;
};

inline Elem k5_m3(const FieldCtx& ctx, Elem b0, Elem b1, Elem b2, Elem eta, bool as_printed) {
  const MinorAlgebra A(ctx);
  const Elem eb = ctx.mul(eta, b2);
  auto P = [&](Elem x, std::initializer_list<unsigned> e) { return A.P(x, e); };
  const Elem A2 = P(b0, {3, 2, 1, 0});
  const Elem B2 = A.mul(P(b0, {1, 0}), P(b1, {8, 3}));
  const Elem C2 = A.mul(as_printed ? P(b0, {3, 0}) : P(b0, {2, 0}), P(eb, {8, 3}));
  const Elem D2 = A.mul(P(b0, {3, 0}), P(b1, {7, 2}));
  const Elem E2 = A.mul({b0, P(b1, {3, 2}), P(eb, {8})});
  const Elem F2 = A.mul({b0, P(b1, {8, 7}), P(eb, {3})});
  const Elem G2 = A.mul(P(b0, {2, 1}), P(eb, {5, 0}));
  const Elem H2 = A.mul(P(b0, {3, 1}), P(eb, {7, 2}));
  const Elem I2 = A.mul(P(b0, {3, 2}), P(b1, {6, 1}));
  const Elem J2 = A.mul({P(b0, {3}), P(b1, {2, 1}), P(eb, {7})});
  const Elem K1 = A.mul({P(b0, {3}), P(b1, {7, 6}), P(eb, {2})});
  const Elem K2 = P(b1, {8, 6, 3, 1});
  const Elem K3 = A.mul(P(b1, {8, 1}), P(eb, {7, 3}));
  const Elem K4 = A.mul(P(b1, {7, 2}), P(eb, {5, 0}));
  const Elem K5 = A.mul(P(b1, {6, 3}), P(eb, {8, 2}));
  const Elem K6 = P(eb, {8, 7, 3, 2});
  const Elem W = A.sum({A2, A.neg(B2), A.neg(C2), A.neg(D2), E2, F2, A.neg(G2), A.neg(H2), A.neg(I2), J2, K1, K2,
                        A.neg(K3), K4, A.neg(K5), K6});
  const Elem inner = A.sum({A.mul({P(b0, {1}), P(b1, {3}), P(eb, {2})}), A.mul({P(b0, {2}), P(b1, {1}), P(eb, {3})}),
                            A.neg(P(b1, {3, 2, 1})), A.neg(A.mul(P(b1, {7}), P(eb, {3, 2})))});
  return A.sub(A.sq(W), A.scal(4, A.mul(P(eb, {5, 0}), P(inner, {5, 0}))));
}

}  // namespace detail

inline void check_minor_inputs(const FieldCtx& ctx, MinorFormulaId id, Elem b0, Elem b1, Elem b2) {
  const auto f = minor_formula(id);
  if (ctx.n() != 2 * f.k)
    throw std::invalid_argument(std::string(f.name) + " needs n = " + std::to_string(2 * f.k) + " (k = " +
                                std::to_string(f.k) + "), field has n = " + std::to_string(ctx.n()));
  const unsigned kdeg = ctx.m() * f.k;
  if (!is_in_subfield(ctx, b0, kdeg)) throw std::invalid_argument("b_0 must lie in F_{q^k}");
  if (!is_in_subfield(ctx, b2, kdeg)) throw std::invalid_argument("b_2 must lie in F_{q^k}");
  if (id == MinorFormulaId::K5_M2_CASE21 && (!b0.is_zero() || !b1.is_zero()))
    throw std::invalid_argument("K5_M2_CASE21 applies to b_0 = b_1 = 0 only");
}

/// Closed-form value of the formula's minor.
inline Elem minor_closed_form(const FieldCtx& ctx, MinorFormulaId id, Elem b0, Elem b1, Elem b2, Elem eta) {
  check_minor_inputs(ctx, id, b0, b1, b2);
  const detail::MinorAlgebra A(ctx);
  const Elem eb = ctx.mul(eta, b2);
  auto P = [&](Elem x, std::initializer_list<unsigned> e) { return A.P(x, e); };
  switch (id) {
    case MinorFormulaId::K3_M1:
      return A.sum({A.sq(A.mul(b0, P(eb, {1}))), P(eb, {2, 2, 0, 0}), P(b1, {1, 1, 0, 0}),
                    A.scal(-2, A.sum({A.mul(b0, P(eb, {2, 1, 0})), A.mul({b0, P(eb, {1}), P(b1, {1, 0})}),
                                      A.mul(P(eb, {2, 0}), P(b1, {1, 0}))}))});
    case MinorFormulaId::K3_M2:
      return A.sum({P(b0, {1, 1, 0, 0}), P(eb, {3, 3, 0, 0}), P(b1, {4, 4, 1, 1}),
                    A.scal(-2, A.sum({A.mul(P(b0, {1, 0}), P(eb, {3, 0})), A.mul(P(eb, {3, 0}), P(b1, {4, 1})),
                                      A.mul(P(b0, {1, 0}), P(b1, {4, 1}))}))});
    case MinorFormulaId::K4_M1: {
      const Elem A1 = P(b0, {2, 1, 0});
      const Elem B1 = A.mul(b0, P(b1, {6, 2}));
      const Elem C1 = A.mul(P(b0, {1}), P(eb, {4, 0}));
      const Elem D1 = A.mul(P(b0, {1}), P(eb, {6, 2}));
      const Elem E1 = A.mul(P(b0, {2}), P(b1, {5, 1}));
      const Elem F1 = A.mul(P(b1, {2, 1}), P(eb, {6}));
      const Elem G1 = A.mul(P(b1, {5, 6}), P(eb, {2}));
      const Elem U = A.sum({A1, A.neg(B1), A.neg(C1), A.neg(D1), A.neg(E1), F1, G1});
      return A.sub(A.scal(4, A.sum({A.mul(P(b1, {6, 5, 2, 1}), P(eb, {4, 0})), A.mul(C1, D1), A.neg(A.mul(C1, F1)),
                                    A.neg(A.mul(C1, G1))})),
                   A.sq(U));
    }
    case MinorFormulaId::K4_M2: {
      const Elem A2 = A.mul({b0, P(b1, {2}), P(eb, {1})});
      const Elem B2 = A.mul({P(b0, {1}), b1, P(eb, {2})});
      const Elem C2 = P(b1, {2, 1, 0});
      const Elem D2 = A.mul(P(b1, {1}), P(eb, {3, 0}));
      const Elem E2 = A.mul(P(b1, {5}), P(eb, {2, 1}));
      // A_2 B_2 D_2 / C_2 read as b_0^{1+q} (eta b_2)^{1+q+q^2+q^3}.
      const Elem ABDC = A.mul(P(b0, {0, 1}), P(eb, {0, 1, 2, 3}));
      const Elem W = A.sum({A2, B2, A.neg(C2), A.neg(D2), A.neg(E2)});
      return A.sub(A.scal(4, A.sum({ABDC, A.neg(A.mul(A2, D2)), A.neg(A.mul(B2, D2)), A.mul(C2, D2)})), A.sq(W));
    }
    case MinorFormulaId::K5_M1: {
      const Elem A1 = A.mul(P(b0, {2, 0}), P(eb, {3, 1}));
      const Elem B1 = A.mul({b0, P(b1, {3, 2}), P(eb, {1})});
      const Elem C1 = A.mul({P(b0, {1}), P(b1, {3, 0}), P(eb, {2})});
      const Elem D1 = A.mul(P(b0, {1}), P(eb, {4, 2, 0}));
      const Elem E1 = A.mul({P(b0, {2}), P(b1, {1, 0}), P(eb, {3})});
      const Elem F1 = P(b1, {3, 2, 1, 0});
      const Elem G1 = A.mul(P(b1, {7, 0}), P(eb, {2, 3}));
      const Elem H1 = A.mul(P(b1, {1, 2}), P(eb, {4, 0}));
      const Elem I1 = A.mul(P(b1, {6, 3}), P(eb, {2, 1}));
      const Elem J1 = P(eb, {1, 2, 3, 7});
      const Elem L = A.sum({A1, A.neg(B1), A.neg(C1), D1, A.neg(E1), F1, G1, A.neg(H1), I1, A.neg(J1)});
      const Elem tail = A.sum({A.mul(P(b1, {7, 6}), P(eb, {2})), A.neg(A.mul(b0, P(b1, {7, 2}))),
                               A.neg(A.mul(P(b0, {2}), P(b1, {6, 1})))});
      return A.sum({A.sq(L), A.scal(-4, A.sum({A.mul(A1, D1), A.neg(A.mul(D1, J1)), A.mul(H1, J1)})),
                    A.scal(-4, A.mul(P(eb, {4, 3, 2, 1, 0}), tail))});
    }
    case MinorFormulaId::K5_M3: return detail::k5_m3(ctx, b0, b1, b2, eta, false);
    case MinorFormulaId::K5_M2_CASE21: return A.neg(P(eb, {0, 2, 2, 3, 4, 4, 6, 8}));
  }
  throw std::invalid_argument("unknown minor formula");
}

/// K5_M3 with the intermediate C_2 = b_0^{q^3+1} (eta b_2)^{q^8+q^3} exactly as
/// printed; disagrees with the determinant when b_0 != 0.
inline Elem minor_k5_m3_as_printed(const FieldCtx& ctx, Elem b0, Elem b1, Elem b2, Elem eta) {
  check_minor_inputs(ctx, MinorFormulaId::K5_M3, b0, b1, b2);
  return detail::k5_m3(ctx, b0, b1, b2, eta, true);
}

struct MinorAgreement {
  MinorFormulaId id;
  std::uint64_t trials = 0;
  std::uint64_t agree = 0;
};

/// Random admissible inputs (b_0, b_2 in F_{q^k}, b_1 in F_{q^n}; b_0 = b_1 = 0
/// for the Case 2.1 form) compared against the generic determinant.
template <class Gen>
MinorAgreement check_minor(const FieldCtx& ctx, MinorFormulaId id, Elem eta, std::uint64_t trials, Gen&& next) {
  const auto f = minor_formula(id);
  MinorAgreement out{id, trials, 0};
  const unsigned kdeg = ctx.m() * f.k;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Elem b0 = random_in_subfield(ctx, kdeg, next);
    Elem b1 = random_element(ctx, next);
    const Elem b2 = random_in_subfield(ctx, kdeg, next);
    if (id == MinorFormulaId::K5_M2_CASE21) b0 = b1 = ctx.zero();
    out.agree += minor_closed_form(ctx, id, b0, b1, b2, eta) == minor_generic(ctx, id, b0, b1, b2, eta);
  }
  return out;
}

}  // namespace symrank

#endif  // SYMRANK_MINORS_HPP
