#ifndef SYMRANK_EQUIV_HPP
#define SYMRANK_EQUIV_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "symrank/codes.hpp"
#include "symrank/gf.hpp"
#include "symrank/linpoly.hpp"
#include "symrank/symforms.hpp"
#include "symrank/verify.hpp"

// Equivalence of T-family members: the (a, i, r) conditions, monomial
// transforms acting on codes, span comparison and a rank-histogram
// distinguisher.
namespace symrank {

enum class Branch { A, B };

inline const char* branch_name(Branch b) { return b == Branch::A ? "a" : "b"; }

/// Exact: the equation as stated.  UpToSubfield: equality modulo
/// F_{q^k}^*, which is what T_{n,s,eta} depends on, since eta b_2 ranges over
/// eta F_{q^k}^*.
enum class Match { Exact, UpToSubfield };

struct EquivWitness {
  Branch branch = Branch::A;
  Elem a;
  unsigned i = 0;
  unsigned r = 0;
  friend bool operator==(const EquivWitness&, const EquivWitness&) = default;
};

namespace detail {

inline void check_equiv_inputs(const FieldCtx& ctx, Branch branch, unsigned s1, unsigned s2, Elem eta1, Elem eta2) {
  const unsigned n = ctx.n();
  if (n % 2 != 0 || n < 6) throw std::invalid_argument("equivalence conditions need even n >= 6");
  check_s(n, s1);
  check_s(n, s2);
  if (branch == Branch::A && s1 % n != s2 % n)
    throw std::invalid_argument("condition (a) needs s1 = s2 mod n");
  if (branch == Branch::B && (s1 + s2) % n != 0)
    throw std::invalid_argument("condition (b) needs s1 = -s2 mod n");
  for (Elem e : {eta1, eta2})
    if (e.is_zero() || is_square(ctx, e)) throw std::invalid_argument("eta1 and eta2 must be non-squares");
}

// The fixed exponent position j in a^{1 + q^j}: s1(k-2) for (a), s1(k+2) for (b).
inline unsigned branch_position(const FieldCtx& ctx, Branch branch, unsigned s1) {
  const long long k = ctx.n() / 2;
  return static_cast<unsigned>(mod_n(static_cast<long long>(s1) * (branch == Branch::A ? k - 2 : k + 2), ctx.n()));
}

// Right-hand side without the a-factor: eta1^{p^r} or eta1^{p^r q^{s1(k+2)}}.
inline Elem branch_base(const FieldCtx& ctx, Branch branch, unsigned s1, Elem eta1, unsigned r) {
  const Elem t = ctx.frob_p(eta1, r);
  return branch == Branch::A ? t : ctx.frob(t, branch_position(ctx, branch, s1));
}

// x -> x^{q^k - 1}, whose kernel is F_{q^k}^*.
inline Elem project(const FieldCtx& ctx, Match match, Elem x) {
  return match == Match::Exact ? x : ctx.div(ctx.frob(x, ctx.n() / 2), x);
}

}  // namespace detail

/// Re-substitutes a witness into its condition.
inline bool witness_holds(const FieldCtx& ctx, const EquivWitness& w, unsigned s1, Elem eta1, Elem eta2,
                          Match match = Match::Exact) {
  if (w.a.is_zero() || w.r >= ctx.m() || w.i >= ctx.n()) return false;
  const unsigned j = detail::branch_position(ctx, w.branch, s1);
  const Elem lhs = ctx.frob(eta2, static_cast<std::uint64_t>(s1) * w.i);
  const Elem a_e = ctx.mul(w.a, ctx.frob(w.a, j));
  const Elem rhs = ctx.mul(a_e, detail::branch_base(ctx, w.branch, s1, eta1, w.r));
  return detail::project(ctx, match, lhs) == detail::project(ctx, match, rhs);
}

/// Searches r ascending, then i, then a = w^t for t = 0 .. Q-2; returns the
/// first witness.  Workers split the a-range; the smallest t wins.
inline std::optional<EquivWitness> check_condition(const FieldCtx& ctx, Branch branch, unsigned s1, unsigned s2,
                                                   Elem eta1, Elem eta2, unsigned workers = 1,
                                                   Match match = Match::Exact) {
  detail::check_equiv_inputs(ctx, branch, s1, s2, eta1, eta2);
  const unsigned j = detail::branch_position(ctx, branch, s1);
  const Elem w = ctx.primitive();
  // (w^t)^{1+q^j} = (w^{1+q^j})^t, and project is multiplicative.
  const Elem we = detail::project(ctx, match, ctx.mul(w, ctx.frob(w, j)));
  const std::uint64_t group = ctx.order() - 1;
  workers = std::max(1U, workers);
  for (unsigned r = 0; r < ctx.m(); ++r) {
    const Elem base = detail::project(ctx, match, detail::branch_base(ctx, branch, s1, eta1, r));
    for (unsigned i = 0; i < ctx.n(); ++i) {
      const Elem target = detail::project(ctx, match, ctx.frob(eta2, static_cast<std::uint64_t>(s1) * i));
      const std::uint64_t span = (group + workers - 1) / workers;
      std::vector<std::uint64_t> found(workers, std::numeric_limits<std::uint64_t>::max());
      auto scan = [&](unsigned id) {
        const std::uint64_t lo = id * span, hi = std::min(group, lo + span);
        if (lo >= hi) return;
        Elem cur = ctx.mul(ctx.pow(we, lo), base);
        for (std::uint64_t t = lo; t < hi; ++t, cur = ctx.mul(cur, we))
          if (cur == target) {
            found[id] = t;
            return;
          }
      };
      if (workers == 1) {
        scan(0);
      } else {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < workers; ++id) pool.emplace_back(scan, id);
        for (auto& th : pool) th.join();
      }
      const auto best = *std::min_element(found.begin(), found.end());
      if (best != std::numeric_limits<std::uint64_t>::max()) return EquivWitness{branch, ctx.w_pow(best), i, r};
    }
  }
  return std::nullopt;
}

/// eta2 = (a^{1+q^j} * base(eta1, r))^{q^{n - s1 i}}, the unique eta2 making
/// (a, i, r) a witness.
inline Elem derive_eta2(const FieldCtx& ctx, Branch branch, unsigned s1, Elem a, unsigned i, unsigned r, Elem eta1) {
  if (a.is_zero()) throw std::invalid_argument("derive_eta2: a must be nonzero");
  if (r >= ctx.m()) throw std::invalid_argument("derive_eta2: r must lie in [0, m)");
  const unsigned j = detail::branch_position(ctx, branch, s1);
  const Elem rhs = ctx.mul(ctx.mul(a, ctx.frob(a, j)), detail::branch_base(ctx, branch, s1, eta1, r));
  const std::uint64_t shift = (static_cast<std::uint64_t>(s1) * i) % ctx.n();
  return ctx.frob(rhs, ctx.n() - shift);
}

/// g -> fhat o g^sigma o f with sigma(x) = x^{p^r}.
struct CodeTransform {
  LinPoly f;
  unsigned r = 0;
};

inline CodeTransform identity_transform(const FieldCtx& ctx) { return {identity_poly(ctx), 0}; }

/// f = a X^{q^j}.
inline CodeTransform monomial_transform(const FieldCtx& ctx, Elem a, unsigned j, unsigned r) {
  return {LinPoly::monomial(ctx.n(), j % ctx.n(), a), r};
}

/// The transform realizing a witness: f = a X^{q^{s1 i}}.
inline CodeTransform witness_transform(const FieldCtx& ctx, const EquivWitness& w, unsigned s1) {
  return monomial_transform(ctx, w.a, static_cast<unsigned>((static_cast<std::uint64_t>(s1) * w.i) % ctx.n()), w.r);
}

inline LinPoly apply_transform(const FieldCtx& ctx, const LinPoly& g, const CodeTransform& t) {
  return compose_mod(ctx, compose_mod(ctx, adjoint(ctx, t.f), frobenius_twist(ctx, g, t.r)), t.f);
}

inline std::vector<LinPoly> apply_transform(const FieldCtx& ctx, std::span<const LinPoly> gens, const CodeTransform& t) {
  if (t.r >= ctx.m()) throw std::invalid_argument("transform twist r must lie in [0, m)");
  if (!is_permutation(ctx, t.f)) throw std::invalid_argument("transform polynomial is not a permutation");
  std::vector<LinPoly> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(apply_transform(ctx, g, t));
  return out;
}

/// The single transform equal to applying t1, then t2.
inline CodeTransform compose(const FieldCtx& ctx, const CodeTransform& t1, const CodeTransform& t2) {
  LinPoly f = compose_mod(ctx, frobenius_twist(ctx, t1.f, t2.r), t2.f);
  unsigned r = t1.r + t2.r;
  if (r >= ctx.m()) {
    // A full p^m twist is the q-power, absorbed as X^{q^{n-1}} in front.
    r -= ctx.m();
    f = compose_mod(ctx, LinPoly::monomial(ctx.n(), ctx.n() - 1, ctx.one()), f);
  }
  return {f, r};
}

/// Equality of F_q-spans in W.
inline bool codes_equal(const FieldCtx& ctx, std::span<const LinPoly> a, std::span<const LinPoly> b) {
  const WSpace ws(ctx);
  for (auto list : {a, b})
    for (const auto& g : list)
      if (!is_self_adjoint(ctx, g)) return false;
  const auto sa = fp_span(ctx, ws, a);
  const auto sb = fp_span(ctx, ws, b);
  if (!sa.independent() || !sb.independent()) throw std::invalid_argument("codes_equal: generators are F_q-dependent");
  if (sa.rank() != sb.rank()) return false;
  for (const auto& v : sb.generators())
    if (!sa.contains(v)) return false;
  return true;
}

enum class Verdict { Distinguishing, Inconclusive };

inline const char* verdict_name(Verdict v) { return v == Verdict::Distinguishing ? "distinguishing" : "inconclusive"; }

struct DistinguisherResult {
  Verdict verdict = Verdict::Inconclusive;
  bool by_size = false;
  VerifyReport first;
  VerifyReport second;
};

/// Differing sizes or differing rank histograms prove inequivalence; equal
/// histograms say nothing.
inline DistinguisherResult s_family_distinguisher(const FieldCtx& ctx, const CodeBasis& first, const CodeBasis& second,
                                                  const VerifyOptions& opt) {
  DistinguisherResult res;
  if (first.dim() != second.dim()) {
    res.verdict = Verdict::Distinguishing;
    res.by_size = true;
    return res;
  }
  res.first = rank_distribution(ctx, first, opt);
  res.second = rank_distribution(ctx, second, opt);
  res.verdict = res.first.histogram == res.second.histogram ? Verdict::Inconclusive : Verdict::Distinguishing;
  return res;
}

}  // namespace symrank

#endif  // SYMRANK_EQUIV_HPP
