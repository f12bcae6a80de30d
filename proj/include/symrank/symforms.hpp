#ifndef SYMRANK_SYMFORMS_HPP
#define SYMRANK_SYMFORMS_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "symrank/fp_linalg.hpp"
#include "symrank/gf.hpp"
#include "symrank/linpoly.hpp"

// Self-adjoint q-polynomials (symmetric bilinear forms Tr(f(x) y)), their
// coordinates over F_p, Gram matrices and the Delsarte dual.
namespace symrank {

inline bool is_self_adjoint(const FieldCtx& ctx, const LinPoly& f) { return adjoint(ctx, f) == f; }

/// Coordinates of W = {f : f = fhat} over F_p.  Slot 0 and each pair slot
/// 1 <= i < n/2 contribute the mn digits of c_i; for even n the middle
/// coefficient contributes its mn/2 coordinates in a basis of F_{q^{n/2}}.
/// Total length m n (n + 1) / 2.
class WSpace {
 public:
  explicit WSpace(const FieldCtx& ctx) : ctx_(&ctx), n_(ctx.n()), deg_(ctx.degree()) {
    pairs_ = (n_ - 1) / 2;
    if (n_ % 2 == 0) {
      half_basis_ = subfield_basis(ctx, deg_ / 2);
      const std::size_t h = half_basis_.size();
      FpMatrix bt(ctx.p(), h, deg_);  // rows = basis vectors
      for (std::size_t r = 0; r < h; ++r) {
        const auto c = ctx.coeffs(half_basis_[r]);
        for (unsigned j = 0; j < deg_; ++j) bt(r, j) = c[j];
      }
      // h independent coordinates of the basis vectors determine the element.
      half_pivots_ = rref(bt).pivots;
      FpMatrix sq(ctx.p(), h, h);
      for (std::size_t r = 0; r < h; ++r)
        for (std::size_t c = 0; c < h; ++c) sq(c, r) = bt(r, half_pivots_[c]);
      half_solve_ = *inverse(sq);
    }
  }

  std::size_t length() const { return deg_ * (1 + pairs_) + (n_ % 2 == 0 ? deg_ / 2 : 0); }
  std::size_t fq_dim() const { return static_cast<std::size_t>(n_) * (n_ + 1) / 2; }

  FpVector coords(const LinPoly& f) const {
    require_length(*ctx_, f);
    FpVector v;
    v.reserve(length());
    for (unsigned i = 0; i <= pairs_; ++i) {
      const auto c = ctx_->coeffs(f[i]);
      v.insert(v.end(), c.begin(), c.end());
    }
    if (n_ % 2 == 0) {
      const auto c = ctx_->coeffs(f[n_ / 2]);
      FpVector sel(half_pivots_.size());
      for (std::size_t j = 0; j < sel.size(); ++j) sel[j] = c[half_pivots_[j]];
      const auto x = half_solve_.apply(sel);
      v.insert(v.end(), x.begin(), x.end());
    }
    return v;
  }

  LinPoly from_coords(std::span<const std::uint32_t> v) const {
    if (v.size() != length()) throw std::invalid_argument("W coordinates of wrong length");
    LinPoly f(n_);
    for (unsigned i = 0; i <= pairs_; ++i) {
      f[i] = ctx_->from_coeffs(v.subspan(i * deg_, deg_));
      if (i > 0) f[n_ - i] = ctx_->frob(f[i], n_ - i);
    }
    if (n_ % 2 == 0) {
      Elem mid = ctx_->zero();
      const auto tail = v.subspan((pairs_ + 1) * deg_);
      for (std::size_t j = 0; j < half_basis_.size(); ++j)
        mid = ctx_->add(mid, ctx_->mul(ctx_->scalar(tail[j]), half_basis_[j]));
      f[n_ / 2] = mid;
    }
    return f;
  }

 private:
  const FieldCtx* ctx_;
  unsigned n_;
  unsigned deg_;
  unsigned pairs_ = 0;
  std::vector<Elem> half_basis_;
  std::vector<std::size_t> half_pivots_;
  FpMatrix half_solve_;
};

/// Self-adjoint polynomial with c_i = a and c_{n-i} = a^{q^{n-i}}; i = 0 or
/// 2i = n only set one slot.
inline LinPoly symmetric_pair(const FieldCtx& ctx, std::size_t i, Elem a) {
  const std::size_t n = ctx.n();
  i %= n;
  LinPoly f(n);
  f[i] = a;
  if (i != 0 && 2 * i != n) f[n - i] = ctx.frob(a, n - i);
  return f;
}

/// F_q-basis of W, size n(n+1)/2: w^j paired at slots 0 .. (n-1)/2 and
/// powers of a generator of F_{q^{n/2}} in the middle slot.
inline std::vector<LinPoly> w_basis(const FieldCtx& ctx) {
  const unsigned n = ctx.n();
  std::vector<LinPoly> out;
  for (unsigned i = 0; 2 * i < n; ++i)
    for (unsigned j = 0; j < n; ++j) out.push_back(symmetric_pair(ctx, i, ctx.w_pow(j)));
  if (n % 2 == 0) {
    const Elem g = subfield_generator(ctx, ctx.degree() / 2);
    Elem cur = ctx.one();
    for (unsigned j = 0; j < n / 2; ++j, cur = ctx.mul(cur, g)) out.push_back(symmetric_pair(ctx, n / 2, cur));
  }
  return out;
}

/// F_p-expansion of an F_q-spanning list: each generator times gamma^j,
/// j < m, gamma generating F_q^*.
inline std::vector<LinPoly> fp_expand(const FieldCtx& ctx, std::span<const LinPoly> gens) {
  const Elem gamma = subfield_generator(ctx, ctx.m());
  std::vector<LinPoly> out;
  out.reserve(gens.size() * ctx.m());
  for (const auto& g : gens) {
    Elem lam = ctx.one();
    for (unsigned j = 0; j < ctx.m(); ++j, lam = ctx.mul(lam, gamma)) out.push_back(scale(ctx, lam, g));
  }
  return out;
}

/// Span of an F_q-generated subspace of W, held over F_p.
inline FpSpan fp_span(const FieldCtx& ctx, const WSpace& ws, std::span<const LinPoly> gens) {
  std::vector<FpVector> rows;
  for (const auto& g : fp_expand(ctx, gens)) rows.push_back(ws.coords(g));
  return FpSpan(ctx.p(), ws.length(), std::move(rows));
}

/// F_q-dimension of the span.
inline std::size_t fq_rank(const FieldCtx& ctx, const WSpace& ws, std::span<const LinPoly> gens) {
  return fp_span(ctx, ws, gens).rank() / ctx.m();
}

inline bool fq_independent(const FieldCtx& ctx, const WSpace& ws, std::span<const LinPoly> gens) {
  return fq_rank(ctx, ws, gens) == gens.size();
}

/// Greedy F_q-basis from a list spanning an F_q-subspace (as F_p-vectors).
inline std::vector<LinPoly> fq_basis_from_fp(const FieldCtx& ctx, const WSpace& ws, std::span<const LinPoly> elems) {
  std::vector<LinPoly> basis;
  std::size_t current = 0;
  for (const auto& e : elems) {
    basis.push_back(e);
    const std::size_t r = fq_rank(ctx, ws, basis);
    if (r == current) {
      basis.pop_back();
    } else {
      current = r;
    }
  }
  return basis;
}

/// <f, g> = Tr_q(sum f_i g_i).
inline Elem inner_product(const FieldCtx& ctx, const LinPoly& f, const LinPoly& g) {
  require_length(ctx, f);
  require_length(ctx, g);
  Elem acc = ctx.zero();
  for (std::size_t i = 0; i < f.size(); ++i) acc = ctx.add(acc, ctx.mul(f[i], g[i]));
  return trace_q(ctx, acc);
}

/// F_q-basis of {g in W : <f, g> = 0 for all f in span(code)}.  Solved over
/// F_p with the absolute trace, which has the same zero set on F_q-subspaces.
inline std::vector<LinPoly> delsarte_dual(const FieldCtx& ctx, std::span<const LinPoly> code) {
  const WSpace ws(ctx);
  for (const auto& g : code)
    if (!is_self_adjoint(ctx, g)) throw std::invalid_argument("delsarte_dual: generator is not self-adjoint");
  if (!fq_independent(ctx, ws, code)) throw std::invalid_argument("delsarte_dual: generators are F_q-dependent");
  const auto rows = fp_expand(ctx, code);
  const std::size_t len = ws.length();
  std::vector<LinPoly> units;
  units.reserve(len);
  for (std::size_t j = 0; j < len; ++j) {
    FpVector e(len, 0);
    e[j] = 1;
    units.push_back(ws.from_coords(e));
  }
  FpMatrix a(ctx.p(), rows.size(), len);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t j = 0; j < len; ++j) {
      Elem acc = ctx.zero();
      for (std::size_t i = 0; i < ctx.n(); ++i) acc = ctx.add(acc, ctx.mul(rows[r][i], units[j][i]));
      a(r, j) = static_cast<std::uint32_t>(trace_p(ctx, acc).v);
    }
  std::vector<LinPoly> dual_fp;
  for (const auto& v : nullspace(a)) dual_fp.push_back(ws.from_coords(v));
  return fq_basis_from_fp(ctx, ws, dual_fp);
}

inline void require_prime_q(const FieldCtx& ctx, const char* what) {
  if (ctx.m() != 1)
    throw std::invalid_argument(std::string(what) + " needs prime q (m = 1); use the Dickson rank for m > 1");
}

/// Gram matrix over F_q = F_p: entry (i, j) = Tr(e_j f(e_i)) on the given
/// elements (n of them for a basis, fewer for a subspace).
inline FpMatrix form_matrix(const FieldCtx& ctx, const LinPoly& f, std::span<const Elem> elems) {
  require_prime_q(ctx, "gram_matrix");
  const std::size_t k = elems.size();
  FpMatrix g(ctx.p(), k, k);
  std::vector<Elem> images(k);
  for (std::size_t i = 0; i < k; ++i) images[i] = eval(ctx, f, elems[i]);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) g(i, j) = static_cast<std::uint32_t>(trace_q(ctx, ctx.mul(elems[j], images[i])).v);
  return g;
}

inline std::size_t fp_rank_of_elems(const FieldCtx& ctx, std::span<const Elem> elems) {
  std::vector<FpVector> rows;
  for (Elem e : elems) {
    const auto c = ctx.coeffs(e);
    rows.emplace_back(c.begin(), c.end());
  }
  return rank(FpMatrix::from_rows(ctx.p(), rows, ctx.degree()));
}

inline FpMatrix gram_matrix(const FieldCtx& ctx, const LinPoly& f, std::span<const Elem> basis) {
  require_prime_q(ctx, "gram_matrix");
  if (basis.size() != ctx.n() || fp_rank_of_elems(ctx, basis) != ctx.n())
    throw std::invalid_argument("gram_matrix: basis does not span F_{q^n}");
  return form_matrix(ctx, f, basis);
}

/// Gram matrix of the form restricted to the span of n-1 independent elements.
inline FpMatrix restrict_to_hyperplane(const FieldCtx& ctx, const LinPoly& f, std::span<const Elem> hyperplane) {
  require_prime_q(ctx, "restrict_to_hyperplane");
  if (hyperplane.size() + 1 != ctx.n() || fp_rank_of_elems(ctx, hyperplane) != hyperplane.size())
    throw std::invalid_argument("restrict_to_hyperplane: need n-1 independent elements");
  return form_matrix(ctx, f, hyperplane);
}

}  // namespace symrank

#endif  // SYMRANK_SYMFORMS_HPP
