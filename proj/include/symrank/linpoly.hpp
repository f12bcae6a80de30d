#ifndef SYMRANK_LINPOLY_HPP
#define SYMRANK_LINPOLY_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symrank/dickson.hpp"
#include "symrank/gf.hpp"

// q-polynomials of q-degree < n over F_{q^n}: f(x) = sum c_i x^{q^i}.
namespace symrank {

struct LinPoly {
  std::vector<Elem> coeffs;

  LinPoly() = default;
  explicit LinPoly(std::size_t n) : coeffs(n) {}
  explicit LinPoly(std::vector<Elem> c) : coeffs(std::move(c)) {}

  static LinPoly monomial(std::size_t n, std::size_t i, Elem a) {
    LinPoly f(n);
    f.coeffs.at(i % n) = a;
    return f;
  }

  std::size_t size() const { return coeffs.size(); }
  Elem operator[](std::size_t i) const { return coeffs[i]; }
  Elem& operator[](std::size_t i) { return coeffs[i]; }
  bool is_zero() const {
    for (Elem c : coeffs)
      if (!c.is_zero()) return false;
    return true;
  }

  friend bool operator==(const LinPoly&, const LinPoly&) = default;
};

inline void require_length(const FieldCtx& ctx, const LinPoly& f) {
  if (f.size() != ctx.n())
    throw std::invalid_argument("q-polynomial must have " + std::to_string(ctx.n()) + " coefficients (got " +
                                std::to_string(f.size()) + ")");
}

inline LinPoly identity_poly(const FieldCtx& ctx) { return LinPoly::monomial(ctx.n(), 0, ctx.one()); }

inline Elem eval(const FieldCtx& ctx, const LinPoly& f, Elem x) {
  require_length(ctx, f);
  Elem acc = ctx.zero();
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!f[i].is_zero()) acc = ctx.add(acc, ctx.mul(f[i], ctx.frob(x, i)));
  return acc;
}

inline LinPoly add(const FieldCtx& ctx, const LinPoly& f, const LinPoly& g) {
  require_length(ctx, f);
  require_length(ctx, g);
  LinPoly h(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) h[i] = ctx.add(f[i], g[i]);
  return h;
}

inline LinPoly scale(const FieldCtx& ctx, Elem a, const LinPoly& f) {
  LinPoly h(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) h[i] = ctx.mul(a, f[i]);
  return h;
}

/// (f o g) mod X^{q^n} - X: coefficient t is sum_{i+j = t mod n} f_i g_j^{q^i}.
inline LinPoly compose_mod(const FieldCtx& ctx, const LinPoly& f, const LinPoly& g) {
  require_length(ctx, f);
  require_length(ctx, g);
  const std::size_t n = f.size();
  LinPoly h(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (f[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (g[j].is_zero()) continue;
      Elem& t = h[(i + j) % n];
      t = ctx.add(t, ctx.mul(f[i], ctx.frob(g[j], i)));
    }
  }
  return h;
}

/// The adjoint with Tr(f(x) y) = Tr(x fhat(y)).
inline LinPoly adjoint(const FieldCtx& ctx, const LinPoly& f) {
  require_length(ctx, f);
  const std::size_t n = f.size();
  LinPoly h(n);
  h[0] = f[0];
  for (std::size_t i = 1; i < n; ++i) h[n - i] = ctx.frob(f[i], n - i);
  return h;
}

/// Raises every coefficient to the p^r power, 0 <= r < m.
inline LinPoly frobenius_twist(const FieldCtx& ctx, const LinPoly& f, unsigned r) {
  require_length(ctx, f);
  if (r >= ctx.m())
    throw std::invalid_argument("twist exponent r = " + std::to_string(r) + " must lie in [0, m = " +
                                std::to_string(ctx.m()) + ")");
  LinPoly h(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) h[i] = ctx.frob_p(f[i], r);
  return h;
}

inline FieldMatrix dickson_of(const FieldCtx& ctx, const LinPoly& f) {
  require_length(ctx, f);
  return dickson_of(ctx, std::span<const Elem>(f.coeffs));
}

/// Rank over F_q, through the Dickson matrix.
inline std::size_t rank(const FieldCtx& ctx, const LinPoly& f) {
  require_length(ctx, f);
  return DicksonRanker(ctx)(f.coeffs);
}

inline std::size_t kernel_dim(const FieldCtx& ctx, const LinPoly& f) { return ctx.n() - rank(ctx, f); }

inline bool is_permutation(const FieldCtx& ctx, const LinPoly& f) { return rank(ctx, f) == ctx.n(); }

/// F_p-matrix of x -> f(x) in the polynomial basis (column c = f(X^c)).
inline FpMatrix operator_matrix(const FieldCtx& ctx, const LinPoly& f) {
  require_length(ctx, f);
  const unsigned d = ctx.degree();
  FpMatrix a(ctx.p(), d, d);
  std::uint64_t basis = 1;
  for (unsigned c = 0; c < d; ++c, basis *= ctx.p()) {
    const auto img = ctx.coeffs(eval(ctx, f, Elem{basis}));
    for (unsigned r = 0; r < d; ++r) a(r, c) = img[r];
  }
  return a;
}

/// Rank over F_q from the F_p-operator matrix: F_p-rank / m.  Independent of
/// the Dickson route.
inline std::size_t operator_rank(const FieldCtx& ctx, const LinPoly& f) {
  return symrank::rank(operator_matrix(ctx, f)) / ctx.m();
}

/// Field embedding F_{p^a} -> F_{p^b} (a | b): sends the generator X of the
/// small field's polynomial basis to a root of its modulus in the big field.
class Embedding {
 public:
  Embedding(const FieldCtx& small, const FieldCtx& big) : small_(&small), big_(&big) {
    if (small.p() != big.p() || big.degree() % small.degree() != 0)
      throw std::invalid_argument("no embedding: F_{p^" + std::to_string(small.degree()) + "} is not a subfield of F_{p^" +
                                  std::to_string(big.degree()) + "}");
    const auto& mod = small.modulus();
    const Elem g = subfield_generator(big, small.degree());
    const std::uint64_t count = small.order() - 1;
    if (mod.front() == 0) root_ = big.zero();
    Elem cand = big.one();
    for (std::uint64_t t = 0; t < count && !root_; ++t, cand = big.mul(cand, g)) {
      Elem v = big.zero();
      for (std::size_t i = mod.size(); i-- > 0;) v = big.add(big.mul(v, cand), big.scalar(mod[i]));
      if (v.is_zero()) {
        root_ = cand;
        break;
      }
    }
    if (!root_) throw std::logic_error("embedding: no root of the modulus found");
    powers_.resize(small.degree());
    Elem cur = big.one();
    for (auto& pw : powers_) {
      pw = cur;
      cur = big.mul(cur, *root_);
    }
  }

  Elem operator()(Elem x) const {
    const auto c = small_->coeffs(x);
    Elem acc = big_->zero();
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) acc = big_->add(acc, big_->mul(big_->scalar(c[i]), powers_[i]));
    return acc;
  }

  Elem root() const { return *root_; }

 private:
  const FieldCtx* small_;
  const FieldCtx* big_;
  std::optional<Elem> root_;
  std::vector<Elem> powers_;
};

/// For f_0..f_{n-1} in F_{q^n} and gcd(s, n) = 1: the rank of
/// x -> sum f_i x^{q^{si}} on F_{q^n} over F_q, and of the same formula on
/// F_{q^{sn}} over F_{q^s}.
inline std::pair<std::size_t, std::size_t> rank_cross_s(const FieldCtx& small, const FieldCtx& big,
                                                        std::span<const Elem> coeffs, unsigned s) {
  const unsigned n = small.n();
  if (coeffs.size() != n) throw std::invalid_argument("rank_cross_s: expected n coefficients");
  if (s == 0 || std::gcd(s, n) != 1)
    throw std::invalid_argument("rank_cross_s: gcd(s, n) = " + std::to_string(std::gcd(s, n)) + " must be 1");
  if (big.p() != small.p() || big.degree() != small.degree() * s)
    throw std::invalid_argument("rank_cross_s: big field must have degree s*m*n over F_p");
  LinPoly spread(n);
  for (unsigned i = 0; i < n; ++i) spread[(static_cast<std::size_t>(s) * i) % n] = coeffs[i];
  const std::size_t r1 = rank(small, spread);

  const Embedding emb(small, big);
  std::vector<Elem> image(n);
  for (unsigned i = 0; i < n; ++i) image[i] = emb(coeffs[i]);
  const unsigned d = big.degree();
  const unsigned step = small.m() * s;  // x -> x^{q^s} is frob_p by m*s
  FpMatrix a(big.p(), d, d);
  std::uint64_t basis = 1;
  for (unsigned c = 0; c < d; ++c, basis *= big.p()) {
    Elem acc = big.zero();
    for (unsigned i = 0; i < n; ++i)
      if (!image[i].is_zero()) acc = big.add(acc, big.mul(image[i], big.frob_p(Elem{basis}, step * i)));
    const auto img = big.coeffs(acc);
    for (unsigned r = 0; r < d; ++r) a(r, c) = img[r];
  }
  const std::size_t r2 = symrank::rank(a) / step;
  return {r1, r2};
}

}  // namespace symrank

#endif  // SYMRANK_LINPOLY_HPP
