#ifndef SYMRANK_DETAIL_POLY_FP_HPP
#define SYMRANK_DETAIL_POLY_FP_HPP

#include <cstdint>
#include <vector>

#include "symrank/detail/numeric.hpp"

// Dense polynomials over F_p, coefficients from the constant term upward.
// Only what the irreducibility test needs.
namespace symrank::detail {

using PolyFp = std::vector<std::uint64_t>;

inline void trim(PolyFp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PolyFp poly_mod(PolyFp a, const PolyFp& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = *invmod(f.back(), p);
  while (a.size() > df) {
    const std::uint64_t t = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod(t, f[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

inline PolyFp poly_mulmod(const PolyFp& a, const PolyFp& b, const PolyFp& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PolyFp r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
  }
  return poly_mod(std::move(r), f, p);
}

inline PolyFp poly_powmod(PolyFp base, std::uint64_t e, const PolyFp& f, std::uint64_t p) {
  PolyFp r{1};
  base = poly_mod(std::move(base), f, p);
  while (e != 0) {
    if (e & 1U) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1U;
  }
  return r;
}

inline PolyFp poly_gcd(PolyFp a, PolyFp b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyFp r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test: f (degree D, monic) is irreducible iff X^{p^D} = X mod f and
// gcd(X^{p^{D/l}} - X, f) = 1 for every prime l | D.
inline bool is_irreducible(const PolyFp& f, std::uint64_t p) {
  const std::size_t deg = f.size() - 1;
  if (deg == 0) return false;
  if (deg == 1) return true;

  // frob[j] = X^{p^j} mod f for j = 0..deg.
  std::vector<PolyFp> frob(deg + 1);
  frob[0] = poly_mod(PolyFp{0, 1}, f, p);
  for (std::size_t j = 1; j <= deg; ++j) frob[j] = poly_powmod(frob[j - 1], p, f, p);

  auto minus_x = [&](PolyFp h) {
    if (h.size() < 2) h.resize(2, 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    return h;
  };

  if (!minus_x(frob[deg]).empty()) return false;
  for (std::uint64_t l : prime_factors(deg)) {
    PolyFp g = poly_gcd(f, minus_x(frob[deg / l]), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace symrank::detail

#endif  // SYMRANK_DETAIL_POLY_FP_HPP
