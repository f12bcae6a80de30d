#ifndef SYMRANK_REPORT_HPP
#define SYMRANK_REPORT_HPP

#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "symrank/codes.hpp"
#include "symrank/equiv.hpp"
#include "symrank/gf.hpp"
#include "symrank/linpoly.hpp"
#include "symrank/verify.hpp"

#ifndef SYMRANK_VERSION
#define SYMRANK_VERSION "0.0.0"
#endif

// Text and JSON forms of elements, polynomials and reports.
namespace symrank {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kVersion = SYMRANK_VERSION;

namespace detail {

inline std::uint64_t parse_u64(std::string_view s, const char* what) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end)
    throw std::invalid_argument(std::string(what) + ": expected a non-negative integer, got '" + std::string(s) + "'");
  return v;
}

}  // namespace detail

/// Decimal packed integer, "primitive" or "primitive^K".
inline Elem parse_element(const FieldCtx& ctx, std::string_view s) {
  constexpr std::string_view prim = "primitive";
  if (s.substr(0, prim.size()) == prim) {
    const auto rest = s.substr(prim.size());
    if (rest.empty()) return ctx.primitive();
    if (rest[0] != '^') throw std::invalid_argument("element: expected primitive^K, got '" + std::string(s) + "'");
    return ctx.w_pow(detail::parse_u64(rest.substr(1), "element exponent") % (ctx.order() - 1));
  }
  return ctx.from_int(detail::parse_u64(s, "element"));
}

/// Comma-separated F_p coefficients, constant term first.
inline std::vector<std::uint32_t> parse_modulus(std::string_view s) {
  std::vector<std::uint32_t> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    const auto tok = s.substr(0, comma);
    const auto v = detail::parse_u64(tok, "modulus coefficient");
    if (v > 0xffffffffULL) throw std::invalid_argument("modulus coefficient out of range");
    out.push_back(static_cast<std::uint32_t>(v));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  if (out.empty()) throw std::invalid_argument("empty modulus");
  return out;
}

inline Json to_json(const LinPoly& f) {
  Json a = Json::array();
  for (const auto& c : f.coeffs) a.push_back(c.v);
  return a;
}

inline Json to_json(std::span<const LinPoly> fs) {
  Json a = Json::array();
  for (const auto& f : fs) a.push_back(to_json(f));
  return a;
}

inline std::string to_string(const BigInt& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

inline Json field_json(const FieldCtx& ctx) {
  return Json{{"p", ctx.p()},
              {"m", ctx.m()},
              {"n", ctx.n()},
              {"q", ctx.q()},
              {"modulus", ctx.modulus()},
              {"primitive", ctx.primitive().v}};
}

inline Json provenance_json(const FieldCtx& ctx, std::optional<std::uint64_t> seed = std::nullopt) {
  Json j{{"tool", "symrank"}, {"version", std::string(kVersion)}, {"field", field_json(ctx)}};
  j["seed"] = seed ? Json(*seed) : Json(nullptr);
  return j;
}

inline Json histogram_json(const std::map<std::size_t, std::uint64_t>& h) {
  Json j = Json::object();
  for (const auto& [r, c] : h) j[std::to_string(r)] = c;
  return j;
}

/// Timing is left out; callers add it outside the deterministic payload.
inline Json report_json(const VerifyReport& r) {
  Json j{{"mode", r.mode},
         {"items", r.items},
         {"codewords_checked", r.codewords_checked},
         {"rank_cap", r.rank_cap}};
  j["min_rank"] = r.empty() ? Json(nullptr) : Json(r.min_rank);
  j["min_rank_exact"] = !r.empty() && r.min_rank_exact();
  j["histogram"] = histogram_json(r.histogram);
  j["witness"] = r.witness;
  return j;
}

inline Json spec_json(const FieldCtx& ctx, const CodeSpec& spec) {
  Json j{{"family", family_name(spec.family)}, {"n", spec.n}, {"s", spec.s}, {"declared_d", spec.declared_d()}};
  if (spec.family == Family::T) {
    j["eta"] = spec.eta.v;
    j["eta_is_square"] = !spec.eta.is_zero() && is_square(ctx, spec.eta);
  }
  return j;
}

inline Json witness_json(const EquivWitness& w) {
  return Json{{"branch", branch_name(w.branch)}, {"a", w.a.v}, {"i", w.i}, {"r", w.r}};
}

/// rank,count lines.
inline std::string histogram_csv(const std::map<std::size_t, std::uint64_t>& h) {
  std::ostringstream os;
  os << "rank,count\n";
  for (const auto& [r, c] : h) os << r << ',' << c << '\n';
  return os.str();
}

}  // namespace symrank

#endif  // SYMRANK_REPORT_HPP
