#ifndef SYMRANK_CODES_HPP
#define SYMRANK_CODES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symrank/gf.hpp"
#include "symrank/linpoly.hpp"
#include "symrank/symforms.hpp"

// The code families S_{n,d,s} and T_{n,s,eta}, codeword construction,
// membership and enumeration.
namespace symrank {

enum class Family { S, T };

inline const char* family_name(Family f) { return f == Family::S ? "S" : "T"; }

struct CodeSpec {
  Family family = Family::S;
  unsigned n = 0;
  unsigned d = 0;  // S only; T has d = n - 2
  unsigned s = 1;
  Elem eta;        // T only

  unsigned k() const { return n / 2; }
  unsigned declared_d() const { return family == Family::T ? n - 2 : d; }
};

/// An F_q-basis of a code inside W.  Generators are grouped by coefficient:
/// for S, b_0 .. b_{(n-d)/2} contribute n generators each (b_i = w^j); for T,
/// b_0 and b_2 contribute k each (powers of a generator of F_{q^k}) and b_1
/// contributes n (b_1 = w^j), in the order b_0, b_1, b_2.
struct CodeBasis {
  CodeSpec spec;
  std::vector<LinPoly> gens;
  std::size_t dim() const { return gens.size(); }
  /// F_p-dimension, the figure that matters when m > 1.
  std::size_t fp_dim(const FieldCtx& ctx) const { return gens.size() * ctx.m(); }
};

namespace detail {

inline void check_s(unsigned n, unsigned s) {
  if (s == 0 || s >= n) throw std::invalid_argument("s = " + std::to_string(s) + " must satisfy 0 < s < n");
  if (std::gcd(s, n) != 1)
    throw std::invalid_argument("gcd(s, n) = gcd(" + std::to_string(s) + ", " + std::to_string(n) + ") = " +
                                std::to_string(std::gcd(s, n)) + " must be 1");
}

inline std::size_t mod_n(long long v, unsigned n) { return static_cast<std::size_t>(((v % n) + n) % n); }

/// Powers 1, g, ..., g^{count-1}.
inline std::vector<Elem> powers(const FieldCtx& ctx, Elem g, unsigned count) {
  std::vector<Elem> out(count);
  Elem cur = ctx.one();
  for (auto& e : out) {
    e = cur;
    cur = ctx.mul(cur, g);
  }
  return out;
}

}  // namespace detail

/// Positions of T's coefficients: b_0 at sk, b_1 at s(k-1), its conjugate at
/// s(k+1), eta b_2 at s(k-2), its conjugate at s(k+2), all mod n.
struct TLayout {
  std::size_t pos_b0, pos_b1, pos_b1c, pos_b2, pos_b2c;
  TLayout(unsigned n, unsigned s) {
    const long long k = n / 2, ss = s;
    pos_b0 = detail::mod_n(ss * k, n);
    pos_b1 = detail::mod_n(ss * (k - 1), n);
    pos_b1c = detail::mod_n(ss * (k + 1), n);
    pos_b2 = detail::mod_n(ss * (k - 2), n);
    pos_b2c = detail::mod_n(ss * (k + 2), n);
  }
};

inline void validate_spec(const FieldCtx& ctx, const CodeSpec& spec) {
  if (spec.n != ctx.n())
    throw std::invalid_argument("code length n = " + std::to_string(spec.n) + " differs from the field's n = " +
                                std::to_string(ctx.n()));
  detail::check_s(spec.n, spec.s);
  if (spec.family == Family::S) {
    if (spec.d < 1 || spec.d > spec.n) throw std::invalid_argument("d must satisfy 1 <= d <= n");
    if ((spec.n - spec.d) % 2 != 0)
      throw std::invalid_argument("n - d = " + std::to_string(spec.n - spec.d) + " must be even for S_{n,d,s}");
  } else {
    if (spec.n % 2 != 0 || spec.n < 6)
      throw std::invalid_argument("T_{n,s,eta} needs even n >= 6 (got n = " + std::to_string(spec.n) + ")");
    if (spec.eta.is_zero() || is_square(ctx, spec.eta))
      throw std::invalid_argument("eta must be a non-square in F_{q^n}; the family is only defined for non-square eta");
  }
}

/// h_b(x) = b_0 x + sum_{i=1}^{(n-d)/2} (b_i x^{q^{si}} + (b_i x)^{q^{n-si}}).
inline LinPoly s_codeword(const FieldCtx& ctx, const CodeSpec& spec, std::span<const Elem> b) {
  const unsigned n = spec.n;
  const unsigned terms = (n - spec.d) / 2;
  if (b.size() != terms + 1)
    throw std::invalid_argument("S codeword needs " + std::to_string(terms + 1) + " coefficients");
  LinPoly f(n);
  f[0] = b[0];
  for (unsigned i = 1; i <= terms; ++i) {
    const std::size_t pos = detail::mod_n(static_cast<long long>(spec.s) * i, n);
    f[pos] = ctx.add(f[pos], b[i]);
    f[n - pos] = ctx.add(f[n - pos], ctx.frob(b[i], n - pos));
  }
  return f;
}

/// g(x) = b_0 x^{q^{sk}} + b_1 x^{q^{s(k-1)}} + (b_1 x)^{q^{s(k+1)}}
///        + eta b_2 x^{q^{s(k-2)}} + (eta b_2 x)^{q^{s(k+2)}}.
/// No subfield checks; see t_codeword.
inline LinPoly t_polynomial(const FieldCtx& ctx, unsigned n, unsigned s, Elem b0, Elem b1, Elem b2, Elem eta) {
  const TLayout lay(n, s);
  LinPoly f(n);
  const Elem eb = ctx.mul(eta, b2);
  f[lay.pos_b0] = b0;
  f[lay.pos_b1] = b1;
  f[lay.pos_b1c] = ctx.frob(b1, lay.pos_b1c);
  f[lay.pos_b2] = eb;
  f[lay.pos_b2c] = ctx.frob(eb, lay.pos_b2c);
  return f;
}

inline LinPoly t_codeword(const FieldCtx& ctx, const CodeSpec& spec, Elem b0, Elem b1, Elem b2) {
  const unsigned kdeg = ctx.m() * spec.k();
  if (!is_in_subfield(ctx, b0, kdeg)) throw std::invalid_argument("b_0 must lie in F_{q^k}");
  if (!is_in_subfield(ctx, b2, kdeg)) throw std::invalid_argument("b_2 must lie in F_{q^k}");
  return t_polynomial(ctx, spec.n, spec.s, b0, b1, b2, spec.eta);
}

inline CodeBasis build_S(const FieldCtx& ctx, unsigned d, unsigned s) {
  CodeSpec spec{Family::S, ctx.n(), d, s, Elem{}};
  validate_spec(ctx, spec);
  const unsigned n = ctx.n();
  const unsigned terms = (n - d) / 2;
  CodeBasis basis{spec, {}};
  for (unsigned i = 0; i <= terms; ++i)
    for (unsigned j = 0; j < n; ++j) {
      std::vector<Elem> b(terms + 1);
      b[i] = ctx.w_pow(j);
      basis.gens.push_back(s_codeword(ctx, spec, b));
    }
  return basis;
}

inline CodeBasis build_T(const FieldCtx& ctx, unsigned s, Elem eta) {
  CodeSpec spec{Family::T, ctx.n(), ctx.n() >= 2 ? ctx.n() - 2 : 0, s, eta};
  validate_spec(ctx, spec);
  const unsigned n = ctx.n(), k = n / 2;
  const auto sub = detail::powers(ctx, subfield_generator(ctx, ctx.m() * k), k);
  CodeBasis basis{spec, {}};
  for (unsigned j = 0; j < k; ++j) basis.gens.push_back(t_codeword(ctx, spec, sub[j], ctx.zero(), ctx.zero()));
  for (unsigned j = 0; j < n; ++j) basis.gens.push_back(t_codeword(ctx, spec, ctx.zero(), ctx.w_pow(j), ctx.zero()));
  for (unsigned j = 0; j < k; ++j) basis.gens.push_back(t_codeword(ctx, spec, ctx.zero(), ctx.zero(), sub[j]));
  return basis;
}

inline CodeBasis build_code(const FieldCtx& ctx, const CodeSpec& spec) {
  return spec.family == Family::S ? build_S(ctx, spec.d, spec.s) : build_T(ctx, spec.s, spec.eta);
}

/// sum_j fq[digits_j] gens_j, fq as listed by fq_elements.
inline LinPoly combine(const FieldCtx& ctx, const CodeBasis& basis, std::span<const std::uint64_t> digits,
                       std::span<const Elem> fq) {
  if (digits.size() != basis.dim()) throw std::invalid_argument("combine: wrong number of digits");
  LinPoly f(ctx.n());
  for (std::size_t j = 0; j < digits.size(); ++j) {
    if (digits[j] == 0) continue;
    const Elem lam = fq[digits[j]];
    for (std::size_t i = 0; i < f.size(); ++i)
      if (!basis.gens[j][i].is_zero()) f[i] = ctx.add(f[i], ctx.mul(lam, basis.gens[j][i]));
  }
  return f;
}

inline LinPoly combine(const FieldCtx& ctx, const CodeBasis& basis, std::span<const std::uint64_t> digits) {
  const auto fq = fq_elements(ctx);
  return combine(ctx, basis, digits, fq);
}

/// Membership by the coefficient pattern of the family.
inline bool member(const FieldCtx& ctx, const CodeBasis& basis, const LinPoly& f) {
  require_length(ctx, f);
  const CodeSpec& sp = basis.spec;
  const unsigned n = sp.n;
  std::vector<bool> used(n, false);
  if (sp.family == Family::S) {
    used[0] = true;
    for (unsigned i = 1; i <= (n - sp.d) / 2; ++i) {
      const std::size_t pos = detail::mod_n(static_cast<long long>(sp.s) * i, n);
      used[pos] = used[n - pos] = true;
      if (f[n - pos] != ctx.frob(f[pos], n - pos)) return false;
    }
  } else {
    const TLayout lay(n, sp.s);
    const unsigned kdeg = ctx.m() * sp.k();
    for (std::size_t p : {lay.pos_b0, lay.pos_b1, lay.pos_b1c, lay.pos_b2, lay.pos_b2c}) used[p] = true;
    if (!is_in_subfield(ctx, f[lay.pos_b0], kdeg)) return false;
    if (f[lay.pos_b1c] != ctx.frob(f[lay.pos_b1], lay.pos_b1c)) return false;
    if (f[lay.pos_b2c] != ctx.frob(f[lay.pos_b2], lay.pos_b2c)) return false;
    if (!is_in_subfield(ctx, ctx.div(f[lay.pos_b2], sp.eta), kdeg)) return false;
  }
  for (unsigned i = 0; i < n; ++i)
    if (!used[i] && !f[i].is_zero()) return false;
  return true;
}

/// Membership by span in W-coordinates; valid for any generator list.
inline bool member_span(const FieldCtx& ctx, std::span<const LinPoly> gens, const LinPoly& f) {
  if (!is_self_adjoint(ctx, f)) return false;
  const WSpace ws(ctx);
  return fp_span(ctx, ws, gens).contains(ws.coords(f));
}

/// F_q-digits of a member of the code (inverse of combine), or nullopt.
inline std::optional<std::vector<std::uint64_t>> coordinates(const FieldCtx& ctx, const CodeBasis& basis,
                                                             const LinPoly& f) {
  if (!is_self_adjoint(ctx, f)) return std::nullopt;
  const WSpace ws(ctx);
  const auto span = fp_span(ctx, ws, basis.gens);
  const auto c = span.coordinates(ws.coords(f));
  if (!c) return std::nullopt;
  // Generator order of fp_expand: gen j times gamma^e at index j*m + e; the
  // digit of fq listed at index sum c_e p^e is sum c_e gamma^e.
  const unsigned m = ctx.m();
  std::vector<std::uint64_t> digits(basis.dim(), 0);
  for (std::size_t j = 0; j < basis.dim(); ++j) {
    std::uint64_t t = 0;
    for (unsigned e = m; e-- > 0;) t = t * ctx.p() + (*c)[j * m + e];
    digits[j] = t;
  }
  return digits;
}

// ---------------------------------------------------------------------------
// Enumeration

enum class EnumMode { Full, Projective, Sample, Orbit };

inline const char* mode_name(EnumMode m) {
  switch (m) {
    case EnumMode::Full: return "full";
    case EnumMode::Projective: return "projective";
    case EnumMode::Sample: return "sample";
    case EnumMode::Orbit: return "orbit";
  }
  return "?";
}

inline EnumMode parse_mode(const std::string& s) {
  if (s == "full") return EnumMode::Full;
  if (s == "projective") return EnumMode::Projective;
  if (s == "sample") return EnumMode::Sample;
  if (s == "orbit") return EnumMode::Orbit;
  throw std::invalid_argument("unknown mode '" + s + "' (expected full, projective, sample or orbit)");
}

struct EnumOptions {
  EnumMode mode = EnumMode::Full;
  std::uint64_t count = 0;  // sample
  std::uint64_t seed = 0;   // sample
};

/// One enumerated codeword: its digit vector (F_q-coordinates, index into
/// fq_elements, most significant first), its coefficients and the number of
/// codewords it stands for.
struct EnumItem {
  std::span<const std::uint64_t> digits;
  std::span<const Elem> coeffs;
  std::uint64_t weight;
};

/// Splits a code into an indexed item space [0, size()).  Full: all nonzero
/// digit vectors in lexicographic order.  Projective: those whose leading
/// nonzero digit is 1, weight q - 1.  Sample: count seeded uniform nonzero
/// vectors, item t a pure function of (seed, t).  Orbit (T only): b_1 = 0 in
/// full, then b_1 over coset representatives w^j of
/// H = {a^{1 + q^{s(k-1)}} : a in F_{q^k}^*} with weight |H|; the maps
/// x -> a x, a in F_{q^k}^*, act on T and preserve rank.
class Enumerator {
 public:
  Enumerator(const FieldCtx& ctx, const CodeBasis& basis, EnumOptions opt)
      : ctx_(&ctx), basis_(&basis), opt_(opt), fq_(fq_elements(ctx)), L_(basis.dim()), q_(ctx.q()) {
    if (L_ == 0) throw std::invalid_argument("cannot enumerate the zero code");
    supports_.resize(L_);
    for (std::size_t j = 0; j < L_; ++j)
      for (std::size_t i = 0; i < ctx.n(); ++i)
        if (!basis.gens[j][i].is_zero()) supports_[j].push_back(i);
    // deltas_[j][t] applied when digit j steps from t to t+1 (mod q).
    deltas_.assign(L_, std::vector<std::vector<Elem>>(q_));
    for (std::size_t j = 0; j < L_; ++j)
      for (std::uint64_t t = 0; t < q_; ++t) {
        const Elem step = ctx.sub(fq_[(t + 1) % q_], fq_[t]);
        for (std::size_t i : supports_[j]) deltas_[j][t].push_back(ctx.mul(step, basis.gens[j][i]));
      }
    const auto total = detail::checked_pow(q_, static_cast<unsigned>(L_));
    total_ = total;
    switch (opt_.mode) {
      case EnumMode::Full:
        if (!total) throw std::runtime_error("code too large to enumerate");
        size_ = *total - 1;
        break;
      case EnumMode::Projective:
        if (!total) throw std::runtime_error("code too large to enumerate");
        size_ = (*total - 1) / (q_ - 1);
        break;
      case EnumMode::Sample:
        if (opt_.count == 0) throw std::invalid_argument("sample mode needs a positive count");
        size_ = opt_.count;
        break;
      case EnumMode::Orbit:
        setup_orbit();
        break;
    }
  }

  std::uint64_t size() const { return size_; }
  /// q^dim if it fits in 64 bits.
  std::optional<std::uint64_t> code_size() const { return total_; }
  const std::vector<Elem>& fq() const { return fq_; }
  std::uint64_t orbit_group_size() const { return h_size_; }
  std::uint64_t orbit_coset_count() const { return cosets_; }

  /// Calls fn(const EnumItem&) for items [begin, end).
  template <class Fn>
  void for_each(std::uint64_t begin, std::uint64_t end, Fn&& fn) const {
    end = std::min(end, size_);
    if (begin >= end) return;
    std::vector<std::uint64_t> digits(L_);
    std::vector<Elem> coeffs(ctx_->n());
    switch (opt_.mode) {
      case EnumMode::Full: {
        set_value(begin + 1, digits, coeffs);
        for (std::uint64_t t = begin; t < end; ++t) {
          if (t != begin) step(digits, coeffs);
          fn(EnumItem{digits, coeffs, 1});
        }
        break;
      }
      case EnumMode::Projective: {
        set_value(projective_value(begin), digits, coeffs);
        for (std::uint64_t t = begin; t < end; ++t) {
          if (t != begin) {
            step(digits, coeffs);
            std::size_t lead = 0;
            while (digits[lead] == 0) ++lead;
            if (digits[lead] != 1) set_value(projective_value(t), digits, coeffs);
          }
          fn(EnumItem{digits, coeffs, q_ - 1});
        }
        break;
      }
      case EnumMode::Sample: {
        for (std::uint64_t t = begin; t < end; ++t) {
          sample_digits(t, digits);
          rebuild(digits, coeffs);
          fn(EnumItem{digits, coeffs, 1});
        }
        break;
      }
      case EnumMode::Orbit: {
        for (std::uint64_t t = begin; t < end; ++t) {
          std::uint64_t weight = orbit_digits(t, digits);
          rebuild(digits, coeffs);
          fn(EnumItem{digits, coeffs, weight});
        }
        break;
      }
    }
  }

  /// Digits of item t (for reporting and tests).
  std::vector<std::uint64_t> digits_of(std::uint64_t t) const {
    std::vector<std::uint64_t> d(L_);
    for_each(t, t + 1, [&](const EnumItem& it) { d.assign(it.digits.begin(), it.digits.end()); });
    return d;
  }

 private:
  // Value v (0 <= v < q^L) as digits, most significant first.
  void set_value(std::uint64_t v, std::vector<std::uint64_t>& digits, std::vector<Elem>& coeffs) const {
    for (std::size_t j = L_; j-- > 0;) {
      digits[j] = v % q_;
      v /= q_;
    }
    rebuild(digits, coeffs);
  }

  void rebuild(std::span<const std::uint64_t> digits, std::vector<Elem>& coeffs) const {
    std::fill(coeffs.begin(), coeffs.end(), Elem{});
    for (std::size_t j = 0; j < L_; ++j) {
      if (digits[j] == 0) continue;
      const Elem lam = fq_[digits[j]];
      for (std::size_t i : supports_[j]) coeffs[i] = ctx_->add(coeffs[i], ctx_->mul(lam, basis_->gens[j][i]));
    }
  }

  void step(std::vector<std::uint64_t>& digits, std::vector<Elem>& coeffs) const {
    for (std::size_t j = L_; j-- > 0;) {
      const std::uint64_t t = digits[j];
      const auto& delta = deltas_[j][t];
      const auto& supp = supports_[j];
      for (std::size_t e = 0; e < supp.size(); ++e) coeffs[supp[e]] = ctx_->add(coeffs[supp[e]], delta[e]);
      digits[j] = (t + 1) % q_;
      if (digits[j] != 0) return;
    }
  }

  // Representatives with leading nonzero digit 1 in increasing order: those
  // with exactly l digits after the leading one occupy positions
  // [(q^l - 1)/(q - 1), (q^{l+1} - 1)/(q - 1)).
  std::uint64_t projective_value(std::uint64_t u) const {
    std::uint64_t block_start = 0, block = 1, ql = 1;
    for (;;) {
      if (u < block_start + block) return ql + (u - block_start);
      block_start += block;
      block *= q_;
      ql *= q_;
    }
  }

  void sample_digits(std::uint64_t t, std::vector<std::uint64_t>& digits) const {
    std::uint64_t state = opt_.seed ^ (0x9e3779b97f4a7c15ULL * (t + 1));
    detail::splitmix64(state);
    auto next = [&] { return detail::splitmix64(state); };
    for (;;) {
      bool nonzero = false;
      for (auto& d : digits) {
        d = detail::uniform_below(next, q_);
        nonzero = nonzero || d != 0;
      }
      if (nonzero) return;
    }
  }

  void setup_orbit() {
    const CodeSpec& sp = basis_->spec;
    if (sp.family != Family::T) throw std::invalid_argument("orbit mode is only available for the T family");
    const unsigned k = sp.k();
    const std::uint64_t qk = *detail::checked_pow(q_, k);
    const std::uint64_t group = ctx_->order() - 1;
    // |H| = (q^k - 1) / gcd(1 + q^{s(k-1)}, q^k - 1); q^e mod (q^k - 1) = q^{e mod k}.
    const unsigned e = static_cast<unsigned>((static_cast<std::uint64_t>(sp.s) * (k - 1)) % k);
    const std::uint64_t expo = (*detail::checked_pow(q_, e) + 1) % (qk - 1);
    h_size_ = (qk - 1) / std::gcd(expo, qk - 1);
    cosets_ = group / h_size_;
    pair_count_ = qk * qk;  // all (b_0, b_2)
    size_ = (pair_count_ - 1) + cosets_ * pair_count_;
    // F_q-coordinates of w^j in the b_1 basis (w^0 .. w^{n-1}).
    coord_solver_.emplace(*ctx_);
    qk_ = qk;
    k_ = k;
  }

  // Item t of orbit mode: digits and weight.
  std::uint64_t orbit_digits(std::uint64_t t, std::vector<std::uint64_t>& digits) const {
    std::fill(digits.begin(), digits.end(), 0);
    std::uint64_t pair, weight;
    if (t < pair_count_ - 1) {
      pair = t + 1;
      weight = 1;
    } else {
      const std::uint64_t u = t - (pair_count_ - 1);
      const std::uint64_t j = u / pair_count_;
      pair = u % pair_count_;
      weight = h_size_;
      const auto b1 = coord_solver_->b1_digits(ctx_->w_pow(j));
      std::copy(b1.begin(), b1.end(), digits.begin() + k_);
    }
    // pair = b_0 value * q^k + b_2 value, each value in base q, most significant first.
    std::uint64_t b2 = pair % qk_, b0 = pair / qk_;
    for (std::size_t j = k_; j-- > 0;) {
      digits[j] = b0 % q_;
      b0 /= q_;
      digits[k_ + ctx_->n() + j] = b2 % q_;
      b2 /= q_;
    }
    return weight;
  }

  // Solves w^j = sum lambda_i w^i (i < n) over F_q via F_p linear algebra.
  class B1Coords {
   public:
    explicit B1Coords(const FieldCtx& ctx) : ctx_(&ctx) {
      const unsigned n = ctx.n(), m = ctx.m();
      const Elem gamma = subfield_generator(ctx, m);
      std::vector<FpVector> gens;
      for (unsigned i = 0; i < n; ++i) {
        Elem lam = ctx.one();
        for (unsigned e = 0; e < m; ++e, lam = ctx.mul(lam, gamma)) {
          const auto c = ctx.coeffs(ctx.mul(lam, ctx.w_pow(i)));
          gens.emplace_back(c.begin(), c.end());
        }
      }
      span_.emplace(ctx.p(), ctx.degree(), std::move(gens));
    }

    std::vector<std::uint64_t> b1_digits(Elem x) const {
      const auto c = ctx_->coeffs(x);
      const auto sol = *span_->coordinates(c);
      const unsigned n = ctx_->n(), m = ctx_->m();
      std::vector<std::uint64_t> out(n);
      for (unsigned i = 0; i < n; ++i) {
        std::uint64_t t = 0;
        for (unsigned e = m; e-- > 0;) t = t * ctx_->p() + sol[i * m + e];
        out[i] = t;
      }
      return out;
    }

   private:
    const FieldCtx* ctx_;
    std::optional<FpSpan> span_;
  };

  const FieldCtx* ctx_;
  const CodeBasis* basis_;
  EnumOptions opt_;
  std::vector<Elem> fq_;
  std::size_t L_;
  std::uint64_t q_;
  std::uint64_t size_ = 0;
  std::optional<std::uint64_t> total_;
  std::vector<std::vector<std::size_t>> supports_;
  std::vector<std::vector<std::vector<Elem>>> deltas_;
  // orbit mode
  std::uint64_t h_size_ = 0, cosets_ = 0, pair_count_ = 0, qk_ = 0;
  unsigned k_ = 0;
  std::optional<B1Coords> coord_solver_;
};

}  // namespace symrank

#endif  // SYMRANK_CODES_HPP
