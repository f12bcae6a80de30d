#ifndef SYMRANK_VERIFY_HPP
#define SYMRANK_VERIFY_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "symrank/codes.hpp"
#include "symrank/dickson.hpp"
#include "symrank/gf.hpp"

// Minimum rank and rank distribution over an enumeration.
namespace symrank {

using BigInt = boost::multiprecision::cpp_int;

/// Upper bound on the size of an additive d-code of symmetric n x n forms:
/// q^{n(n-d+2)/2} for n - d even, q^{(n+1)(n-d+1)/2} for n - d odd.
inline BigInt bound_size(std::uint64_t q, unsigned n, unsigned d) {
  if (d < 1 || d > n) throw std::invalid_argument("bound_size: need 1 <= d <= n");
  const unsigned e = (n - d) % 2 == 0 ? n * (n - d + 2) / 2 : (n + 1) * (n - d + 1) / 2;
  return boost::multiprecision::pow(BigInt(q), e);
}

inline BigInt code_size(const FieldCtx& ctx, const CodeBasis& basis) {
  return boost::multiprecision::pow(BigInt(ctx.q()), static_cast<unsigned>(basis.dim()));
}

constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 28U;

struct VerifyOptions {
  EnumOptions enumeration;
  unsigned workers = 1;
  /// Ranks at or above cap are not resolved further; 0 means exact.
  std::size_t rank_cap = 0;
  std::uint64_t budget = kDefaultBudget;
  bool force = false;
  /// Items per work unit handed to a worker.
  std::uint64_t chunk = 1U << 14U;
};

struct VerifyReport {
  std::string mode;
  std::uint64_t items = 0;              // enumeration items visited
  std::uint64_t codewords_checked = 0;  // weighted count
  std::size_t rank_cap = 0;             // histogram key cap means ">= cap"
  std::size_t min_rank = std::numeric_limits<std::size_t>::max();
  std::map<std::size_t, std::uint64_t> histogram;
  std::vector<std::uint64_t> witness;
  double elapsed_ms = 0;

  bool empty() const { return items == 0; }
  /// False when every codeword reached the cap.
  bool min_rank_exact() const { return min_rank < rank_cap; }
};

/// Associative and commutative: min of mins, sum of histograms,
/// lexicographically least witness among those at the minimum.
inline VerifyReport merge(VerifyReport a, const VerifyReport& b) {
  a.items += b.items;
  a.codewords_checked += b.codewords_checked;
  for (const auto& [r, c] : b.histogram) a.histogram[r] += c;
  if (b.min_rank < a.min_rank || (b.min_rank == a.min_rank && !b.witness.empty() &&
                                  (a.witness.empty() || b.witness < a.witness))) {
    a.min_rank = b.min_rank;
    a.witness = b.witness;
  }
  a.elapsed_ms = std::max(a.elapsed_ms, b.elapsed_ms);
  return a;
}

namespace detail {

inline VerifyReport scan_range(const FieldCtx& ctx, const Enumerator& en, std::size_t cap, std::uint64_t begin,
                               std::uint64_t end) {
  VerifyReport rep;
  rep.rank_cap = cap;
  DicksonRanker ranker(ctx);
  en.for_each(begin, end, [&](const EnumItem& it) {
    const std::size_t r = ranker(it.coeffs, cap);
    ++rep.items;
    rep.codewords_checked += it.weight;
    rep.histogram[r] += it.weight;
    if (r < rep.min_rank || (r == rep.min_rank && std::lexicographical_compare(it.digits.begin(), it.digits.end(),
                                                                                rep.witness.begin(), rep.witness.end()))) {
      rep.min_rank = r;
      rep.witness.assign(it.digits.begin(), it.digits.end());
    }
  });
  return rep;
}

}  // namespace detail

/// Runs the enumeration with the capped Dickson rank.  Work is cut into
/// fixed chunks claimed by workers; chunk reports are merged in chunk order,
/// so the result does not depend on the worker count.
inline VerifyReport run_enumeration(const FieldCtx& ctx, const CodeBasis& basis, const VerifyOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  const Enumerator en(ctx, basis, opt.enumeration);
  const std::size_t cap = opt.rank_cap == 0 ? ctx.n() + 1 : opt.rank_cap;
  if (opt.enumeration.mode != EnumMode::Sample && en.size() > opt.budget && !opt.force)
    throw std::runtime_error("enumeration of " + std::to_string(en.size()) + " items exceeds the budget of " +
                             std::to_string(opt.budget) + "; use --force or sample mode");
  const std::uint64_t total = en.size();
  const std::uint64_t chunk = std::max<std::uint64_t>(1, opt.chunk);
  const std::uint64_t chunks = (total + chunk - 1) / chunk;
  std::vector<VerifyReport> parts(chunks);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      parts[c] = detail::scan_range(ctx, en, cap, c * chunk, std::min(total, (c + 1) * chunk));
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(opt.workers, static_cast<unsigned>(std::max<std::uint64_t>(1, chunks))));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  VerifyReport rep;
  rep.rank_cap = cap;
  for (const auto& p : parts) rep = merge(std::move(rep), p);
  rep.rank_cap = cap;
  rep.mode = mode_name(opt.enumeration.mode);
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

/// Minimum rank; ranks are resolved up to the declared d (cap d + 1), so a
/// minimum at or below d is exact.
inline VerifyReport min_rank(const FieldCtx& ctx, const CodeBasis& basis, VerifyOptions opt) {
  if (basis.dim() == 0) throw std::invalid_argument("min_rank: empty code");
  if (opt.rank_cap == 0) opt.rank_cap = basis.spec.declared_d() + 1;
  return run_enumeration(ctx, basis, opt);
}

/// Exact rank histogram.
inline VerifyReport rank_distribution(const FieldCtx& ctx, const CodeBasis& basis, VerifyOptions opt) {
  opt.rank_cap = ctx.n() + 1;
  if (basis.dim() == 0) {
    VerifyReport rep;
    rep.mode = mode_name(opt.enumeration.mode);
    rep.rank_cap = opt.rank_cap;
    return rep;
  }
  return run_enumeration(ctx, basis, opt);
}

struct MaximumVerdict {
  bool maximum = false;
  bool meets_bound = false;
  bool distance_ok = false;
  BigInt size;
  BigInt bound;
  VerifyReport report;
};

/// True iff min rank >= d and |code| equals the bound for (n, d).
inline MaximumVerdict verify_maximum(const FieldCtx& ctx, const CodeBasis& basis, const VerifyOptions& opt) {
  MaximumVerdict v;
  const unsigned d = basis.spec.declared_d();
  v.size = code_size(ctx, basis);
  v.bound = bound_size(ctx.q(), ctx.n(), d);
  v.meets_bound = v.size == v.bound;
  if (basis.dim() == 0) return v;
  v.report = min_rank(ctx, basis, opt);
  v.distance_ok = v.report.min_rank >= d;
  v.maximum = v.meets_bound && v.distance_ok;
  return v;
}

}  // namespace symrank

#endif  // SYMRANK_VERIFY_HPP
