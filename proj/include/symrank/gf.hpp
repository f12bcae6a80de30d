#ifndef SYMRANK_GF_HPP
#define SYMRANK_GF_HPP

/// Arithmetic in F_{p^{mn}}, viewed at once as F_p, as F_q = F_{p^m} and as the
/// ambient field F_{q^n}.  Every element of every subfield lives in the single
/// ambient field; subfields are recognised by Frobenius fixedness.
///
/// Elements are stored in polynomial-basis coordinates packed as the integer
/// sum coeffs[i] * p^i (the same integer is the external text encoding).
/// Fields with at most 2^20 elements additionally carry discrete-log, antilog
/// and Zech tables keyed to the primitive element w; larger fields fall back to
/// schoolbook multiplication with modular reduction.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "symrank/detail/numeric.hpp"
#include "symrank/detail/poly_fp.hpp"
#include "symrank/fp_linalg.hpp"

namespace symrank {

struct Elem {
  std::uint64_t v = 0;

  constexpr bool is_zero() const { return v == 0; }
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

class FieldCtx {
 public:
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20U;
  static constexpr std::uint64_t kOrderLimit = std::uint64_t{1} << 50U;
  static constexpr unsigned kMaxDegree = 32;

  /// Builds F_{p^{mn}}.  Without a modulus, the monic irreducible of degree mn
  /// with the smallest packed coefficient integer is used.  Throws
  /// std::invalid_argument on even or composite p, zero degrees, a supplied
  /// modulus of the wrong degree, non-monic or reducible, or fields beyond the
  /// supported size.
  static FieldCtx create(std::uint32_t p, std::uint32_t m, std::uint32_t n,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
    return FieldCtx(p, m, n, std::move(modulus));
  }

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t degree() const { return deg_; }
  std::uint64_t q() const { return q_; }
  std::uint64_t order() const { return order_; }
  bool table_mode() const { return !exp_.empty(); }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Elem primitive() const { return primitive_; }
  const std::vector<std::uint64_t>& group_order_factors() const { return factors_; }

  std::string modulus_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
    return os.str();
  }

  Elem zero() const { return {}; }
  Elem one() const { return {1}; }
  Elem scalar(std::uint64_t c) const { return {c % p_}; }

  /// Validated conversion from the packed integer encoding.
  Elem from_int(std::uint64_t v) const {
    if (v >= order_) throw std::invalid_argument("element encoding " + std::to_string(v) + " out of range");
    return {v};
  }

  std::vector<std::uint32_t> coeffs(Elem x) const {
    std::vector<std::uint32_t> c(deg_);
    for (unsigned i = 0; i < deg_; ++i) {
      c[i] = static_cast<std::uint32_t>(x.v % p_);
      x.v /= p_;
    }
    return c;
  }

  Elem from_coeffs(std::span<const std::uint32_t> c) const {
    if (c.size() != deg_) throw std::invalid_argument("from_coeffs: expected " + std::to_string(deg_) + " coefficients");
    std::uint64_t v = 0;
    for (unsigned i = deg_; i-- > 0;) {
      if (c[i] >= p_) throw std::invalid_argument("from_coeffs: coefficient out of range");
      v = v * p_ + c[i];
    }
    return {v};
  }

  // ---- arithmetic -------------------------------------------------------

  Elem add(Elem a, Elem b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (table_mode()) {
      const std::uint64_t la = log_[a.v];
      const std::uint64_t lb = log_[b.v];
      const std::uint64_t d = lb >= la ? lb - la : lb + group_ - la;
      const std::uint32_t z = zech_[d];
      if (z == kNoLog) return {};
      return {exp_[la + z]};
    }
    return add_digits(a, b, false);
  }

  Elem neg(Elem a) const {
    if (a.is_zero()) return a;
    if (table_mode()) return {exp_[log_[a.v] + group_ / 2]};
    return add_digits(Elem{}, a, true);
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (a.is_zero() || b.is_zero()) return {};
    if (table_mode()) return {exp_[log_[a.v] + log_[b.v]]};
    return mul_schoolbook(a, b);
  }

  Elem inv(Elem a) const {
    if (a.is_zero()) throw std::domain_error("inverse of zero");
    if (table_mode()) return {exp_[group_ - log_[a.v]]};
    return pow(a, order_ - 2);
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, std::uint64_t e) const {
    if (a.is_zero()) return e == 0 ? one() : zero();
    if (table_mode()) return {exp_[detail::mulmod(log_[a.v], e % group_, group_)]};
    Elem r = one();
    while (e != 0) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }

  /// x^{q^i}; i is taken modulo n.
  Elem frob(Elem x, std::uint64_t i) const { return frob_p(x, (i % n_) * m_); }

  /// x^{p^j}; j is taken modulo mn.
  Elem frob_p(Elem x, std::uint64_t j) const {
    j %= deg_;
    if (j == 0 || x.is_zero()) return x;
    if (table_mode()) return {exp_[detail::mulmod(log_[x.v], ppow_mod_[j], group_)]};
    return from_coeffs_unchecked(ppow_mats_[j].apply(coeffs(x)));
  }

  /// F_p-matrix of x -> x^{p^j} in the polynomial basis (column c = image of X^c).
  const FpMatrix& frobenius_matrix_p(std::uint64_t j) const { return ppow_mats_[j % deg_]; }

  /// F_p-matrix of x -> x^{q^i}.
  const FpMatrix& frobenius_matrix(std::uint64_t i) const { return ppow_mats_[((i % n_) * m_) % deg_]; }

  /// w^k for the context's primitive element.
  Elem w_pow(std::uint64_t k) const {
    if (table_mode()) return {exp_[k % group_]};
    return pow(primitive_, k);
  }

  /// Discrete log to base w; only available in table mode.
  std::uint64_t dlog(Elem x) const {
    if (x.is_zero()) throw std::domain_error("dlog of zero");
    if (!table_mode()) throw std::logic_error("dlog requires a table-mode field");
    return log_[x.v];
  }

  // ---- raw tables for log-domain kernels ----------------------------------

  static constexpr std::uint32_t kNoLog = 0xffffffffU;
  std::uint64_t group_order() const { return group_; }
  std::span<const std::uint32_t> log_table() const { return log_; }
  std::span<const std::uint32_t> exp_table() const { return exp_; }  // length 2(Q-1)
  std::span<const std::uint32_t> zech_table() const { return zech_; }
  /// q^i mod (Q-1), i in [0, n).
  std::uint64_t qpow_mod(std::uint64_t i) const { return ppow_mod_[((i % n_) * m_) % deg_]; }

 private:
  FieldCtx(std::uint32_t p, std::uint32_t m, std::uint32_t n, std::optional<std::vector<std::uint32_t>> modulus)
      : p_(p), m_(m), n_(n) {
    if (p % 2 == 0) throw std::invalid_argument("characteristic must be odd (got p = " + std::to_string(p) + ")");
    if (!detail::is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    if (p >= (1U << 25U)) throw std::invalid_argument("characteristic too large");
    if (m == 0 || n == 0) throw std::invalid_argument("m and n must be positive");
    deg_ = m * n;
    if (deg_ > kMaxDegree) throw std::invalid_argument("extension degree mn too large");
    const auto order = detail::checked_pow(p, deg_);
    if (!order || *order > kOrderLimit) throw std::invalid_argument("field order p^{mn} exceeds 2^50");
    order_ = *order;
    group_ = order_ - 1;
    q_ = *detail::checked_pow(p, m);

    if (modulus) {
      if (modulus->size() != deg_ + 1)
        throw std::invalid_argument("modulus must have degree mn = " + std::to_string(deg_) + " (got " +
                                    std::to_string(modulus->empty() ? 0 : modulus->size() - 1) + ")");
      for (auto c : *modulus)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range [0, p)");
      if (modulus->back() != 1) throw std::invalid_argument("modulus must be monic");
      if (!detail::is_irreducible(to_poly(*modulus), p)) throw std::invalid_argument("modulus is reducible over F_p");
      modulus_ = std::move(*modulus);
    } else {
      modulus_ = find_irreducible();
    }

    factors_ = detail::prime_factors(group_);
    build_frobenius();
    primitive_ = find_primitive();
    ppow_mod_.resize(deg_);
    std::uint64_t e = 1;
    for (unsigned j = 0; j < deg_; ++j) {
      ppow_mod_[j] = group_ == 0 ? 0 : e % group_;
      e = detail::mulmod(e, p_, group_ == 0 ? 1 : group_);
    }
    if (order_ <= kTableLimit) build_tables();
  }

  static detail::PolyFp to_poly(const std::vector<std::uint32_t>& c) { return {c.begin(), c.end()}; }

  std::vector<std::uint32_t> find_irreducible() const {
    // Candidates: monic X^D + (lower part), lower part enumerated by its packed
    // integer value ascending.
    const std::uint64_t lower_count = order_;
    for (std::uint64_t v = 0; v < lower_count; ++v) {
      std::vector<std::uint32_t> c(deg_ + 1);
      std::uint64_t t = v;
      for (unsigned i = 0; i < deg_; ++i) {
        c[i] = static_cast<std::uint32_t>(t % p_);
        t /= p_;
      }
      c[deg_] = 1;
      if (c[0] == 0 && deg_ > 1) continue;
      if (detail::is_irreducible(to_poly(c), p_)) return c;
    }
    throw std::logic_error("no irreducible polynomial found");
  }

  Elem from_coeffs_unchecked(std::span<const std::uint32_t> c) const {
    std::uint64_t v = 0;
    for (unsigned i = deg_; i-- > 0;) v = v * p_ + c[i];
    return {v};
  }

  Elem add_digits(Elem a, Elem b, bool negate_b) const {
    std::uint64_t r = 0, scale = 1;
    for (unsigned i = 0; i < deg_; ++i) {
      const std::uint64_t da = a.v % p_, db = b.v % p_;
      a.v /= p_;
      b.v /= p_;
      const std::uint64_t s = negate_b ? (da + p_ - db) % p_ : (da + db) % p_;
      r += s * scale;
      scale *= p_;
    }
    return {r};
  }

  Elem mul_schoolbook(Elem a, Elem b) const {
    const auto ca = coeffs(a);
    const auto cb = coeffs(b);
    std::array<std::uint64_t, 2 * kMaxDegree> prod{};
    for (unsigned i = 0; i < deg_; ++i) {
      if (ca[i] == 0) continue;
      for (unsigned j = 0; j < deg_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_;
    }
    for (unsigned i = 2 * deg_ - 2; i >= deg_; --i) {
      const std::uint64_t t = prod[i];
      if (t == 0) continue;
      prod[i] = 0;
      for (unsigned j = 0; j < deg_; ++j)
        prod[i - deg_ + j] = (prod[i - deg_ + j] + (p_ - t) * modulus_[j]) % p_;
    }
    std::uint64_t v = 0;
    for (unsigned i = deg_; i-- > 0;) v = v * p_ + prod[i];
    return {v};
  }

  Elem pow_schoolbook(Elem a, std::uint64_t e) const {
    Elem r = one();
    while (e != 0) {
      if (e & 1U) r = mul_schoolbook(r, a);
      a = mul_schoolbook(a, a);
      e >>= 1U;
    }
    return r;
  }

  void build_frobenius() {
    // Column c of the p-power matrix is (X^c)^p; higher powers are matrix
    // powers of it.
    FpMatrix step(p_, deg_, deg_);
    for (unsigned c = 0; c < deg_; ++c) {
      std::uint64_t basis = 1;
      for (unsigned i = 0; i < c; ++i) basis *= p_;
      const auto img = coeffs(pow_schoolbook(Elem{basis}, p_));
      for (unsigned r = 0; r < deg_; ++r) step(r, c) = img[r];
    }
    ppow_mats_.assign(deg_, FpMatrix::identity(p_, deg_));
    for (unsigned j = 1; j < deg_; ++j) {
      FpMatrix next(p_, deg_, deg_);
      for (unsigned c = 0; c < deg_; ++c) {
        std::vector<std::uint32_t> col(deg_);
        for (unsigned r = 0; r < deg_; ++r) col[r] = ppow_mats_[j - 1](r, c);
        const auto img = step.apply(col);
        for (unsigned r = 0; r < deg_; ++r) next(r, c) = img[r];
      }
      ppow_mats_[j] = std::move(next);
    }
  }

  Elem find_primitive() const {
    if (group_ == 1) return one();  // F_2 only; unreachable for odd p
    for (std::uint64_t v = 2; v < order_; ++v) {
      bool ok = true;
      for (std::uint64_t l : factors_) {
        if (pow_schoolbook(Elem{v}, group_ / l) == one()) {
          ok = false;
          break;
        }
      }
      if (ok) return Elem{v};
    }
    throw std::logic_error("no primitive element found");
  }

  void build_tables() {
    exp_.assign(2 * group_, 0);
    log_.assign(order_, kNoLog);
    // Multiplication by w is F_p-linear; apply it through its matrix.
    FpMatrix by_w(p_, deg_, deg_);
    for (unsigned c = 0; c < deg_; ++c) {
      std::uint64_t basis = 1;
      for (unsigned i = 0; i < c; ++i) basis *= p_;
      const auto img = coeffs(mul_schoolbook(Elem{basis}, primitive_));
      for (unsigned r = 0; r < deg_; ++r) by_w(r, c) = img[r];
    }
    std::vector<std::uint32_t> cur(deg_, 0);
    cur[0] = 1;
    for (std::uint64_t k = 0; k < group_; ++k) {
      const Elem x = from_coeffs_unchecked(cur);
      exp_[k] = static_cast<std::uint32_t>(x.v);
      exp_[k + group_] = static_cast<std::uint32_t>(x.v);
      if (log_[x.v] != kNoLog) throw std::logic_error("primitive element has short order");
      log_[x.v] = static_cast<std::uint32_t>(k);
      cur = by_w.apply(cur);
    }
    zech_.assign(group_, kNoLog);
    for (std::uint64_t d = 0; d < group_; ++d) {
      const Elem s = add_digits(Elem{exp_[d]}, one(), false);
      zech_[d] = s.is_zero() ? kNoLog : log_[s.v];
    }
  }

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t n_;
  std::uint32_t deg_ = 0;
  std::uint64_t order_ = 0;
  std::uint64_t group_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> factors_;
  Elem primitive_;
  std::vector<FpMatrix> ppow_mats_;
  std::vector<std::uint64_t> ppow_mod_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> zech_;
};

inline FieldCtx field_create(std::uint32_t p, std::uint32_t m, std::uint32_t n,
                             std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
  return FieldCtx::create(p, m, n, std::move(modulus));
}

/// Tr_{F_{q^n}/F_q}(x) = sum of x^{q^i}, i < n.
inline Elem trace_q(const FieldCtx& ctx, Elem x) {
  Elem t = ctx.zero();
  for (unsigned i = 0; i < ctx.n(); ++i) t = ctx.add(t, ctx.frob(x, i));
  return t;
}

/// Absolute trace to F_p.
inline Elem trace_p(const FieldCtx& ctx, Elem x) {
  Elem t = ctx.zero();
  for (unsigned j = 0; j < ctx.degree(); ++j) t = ctx.add(t, ctx.frob_p(x, j));
  return t;
}

inline void require_divisor(const FieldCtx& ctx, unsigned d) {
  if (d == 0 || ctx.degree() % d != 0)
    throw std::invalid_argument("subfield degree " + std::to_string(d) + " does not divide mn = " +
                                std::to_string(ctx.degree()));
}

/// True iff x lies in F_{p^d}, i.e. x^{p^d} = x.
inline bool is_in_subfield(const FieldCtx& ctx, Elem x, unsigned d) {
  require_divisor(ctx, d);
  return ctx.frob_p(x, d) == x;
}

/// Squareness of a nonzero element: x^{(Q-1)/2} = 1.
inline bool is_square(const FieldCtx& ctx, Elem x) {
  if (x.is_zero()) throw std::invalid_argument("is_square: squareness of zero is not defined here");
  if (ctx.table_mode()) return ctx.dlog(x) % 2 == 0;
  return ctx.pow(x, (ctx.order() - 1) / 2) == ctx.one();
}

/// F_p-basis of F_{p^d}: the kernel of x -> x^{p^d} - x.
inline std::vector<Elem> subfield_basis(const FieldCtx& ctx, unsigned d) {
  require_divisor(ctx, d);
  FpMatrix a = ctx.frobenius_matrix_p(d);
  const std::uint32_t p = ctx.p();
  for (unsigned i = 0; i < ctx.degree(); ++i) a(i, i) = (a(i, i) + p - 1) % p;
  std::vector<Elem> out;
  for (const auto& v : nullspace(a)) out.push_back(ctx.from_coeffs(v));
  return out;
}

/// Generator of the multiplicative group of F_{p^d}.
inline Elem subfield_generator(const FieldCtx& ctx, unsigned d) {
  require_divisor(ctx, d);
  const std::uint64_t sub_order = *detail::checked_pow(ctx.p(), d);
  return ctx.w_pow((ctx.order() - 1) / (sub_order - 1));
}

/// Uniform element of F_{p^d} (d | mn) from a 64-bit generator.
template <class Gen>
Elem random_in_subfield(const FieldCtx& ctx, unsigned d, Gen&& next) {
  require_divisor(ctx, d);
  const std::uint64_t sub_order = *detail::checked_pow(ctx.p(), d);
  const std::uint64_t r = detail::uniform_below(next, sub_order);
  if (r == 0) return ctx.zero();
  const std::uint64_t step = (ctx.order() - 1) / (sub_order - 1);
  return ctx.w_pow(step * (r - 1));
}

template <class Gen>
Elem random_element(const FieldCtx& ctx, Gen&& next) {
  return Elem{detail::uniform_below(next, ctx.order())};
}

/// The q elements of F_q in a fixed order: index t maps to sum digit_j(t) g^j
/// over base-p digits, with g a generator of F_q^*.  Index 0 is 0, index 1 is 1.
inline std::vector<Elem> fq_elements(const FieldCtx& ctx) {
  const Elem g = subfield_generator(ctx, ctx.m());
  std::vector<Elem> powers(ctx.m());
  Elem cur = ctx.one();
  for (auto& pw : powers) {
    pw = cur;
    cur = ctx.mul(cur, g);
  }
  std::vector<Elem> out(ctx.q());
  for (std::uint64_t t = 0; t < ctx.q(); ++t) {
    Elem acc = ctx.zero();
    std::uint64_t rest = t;
    for (unsigned j = 0; j < ctx.m(); ++j) {
      acc = ctx.add(acc, ctx.mul(ctx.scalar(rest % ctx.p()), powers[j]));
      rest /= ctx.p();
    }
    out[t] = acc;
  }
  return out;
}

}  // namespace symrank

#endif  // SYMRANK_GF_HPP
