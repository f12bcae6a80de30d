#ifndef SYMRANK_DICKSON_HPP
#define SYMRANK_DICKSON_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symrank/gf.hpp"

// Matrices over the ambient field, Dickson (q-circulant) matrices and their
// rank.  The rank kernel used by enumeration works on discrete logs when the
// field has tables.
namespace symrank {

class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static FieldMatrix identity(const FieldCtx& ctx, std::size_t n) {
    FieldMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ctx.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

/// D[i][j] = c_{(j-i) mod n}^{q^i}, n = coeffs.size().
inline FieldMatrix dickson_of(const FieldCtx& ctx, std::span<const Elem> coeffs) {
  const std::size_t n = coeffs.size();
  FieldMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d(i, j) = ctx.frob(coeffs[(j + n - i) % n], i);
  return d;
}

/// 1-based index selection.
inline FieldMatrix submatrix(const FieldMatrix& m, std::span<const std::size_t> rows,
                             std::span<const std::size_t> cols) {
  FieldMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r] < 1 || rows[r] > m.rows())
      throw std::out_of_range("submatrix: row index " + std::to_string(rows[r]) + " out of range");
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c] < 1 || cols[c] > m.cols())
        throw std::out_of_range("submatrix: column index " + std::to_string(cols[c]) + " out of range");
      out(r, c) = m(rows[r] - 1, cols[c] - 1);
    }
  }
  return out;
}

/// Rank by Gaussian elimination.  With a cap, stops as soon as cap pivots
/// are found and returns cap.
inline std::size_t matrix_rank(const FieldCtx& ctx, FieldMatrix m,
                               std::size_t cap = std::numeric_limits<std::size_t>::max()) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows() && r < cap; ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const Elem inv = ctx.inv(m(r, c));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      const Elem f = ctx.mul(m(i, c), inv);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = ctx.sub(m(i, j), ctx.mul(f, m(r, j)));
    }
    ++r;
  }
  return r;
}

inline Elem matrix_det(const FieldCtx& ctx, FieldMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix_det: matrix is not square");
  const std::size_t n = m.rows();
  Elem det = ctx.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) return ctx.zero();
    if (piv != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = ctx.neg(det);
    }
    det = ctx.mul(det, m(c, c));
    const Elem inv = ctx.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Elem f = ctx.mul(m(i, c), inv);
      for (std::size_t j = c; j < n; ++j) m(i, j) = ctx.sub(m(i, j), ctx.mul(f, m(c, j)));
    }
  }
  return det;
}

namespace detail {

// Elimination on a matrix of discrete logs (kNoLog = zero).  Every entry
// update a - f*b becomes one Zech lookup.
class LogRankKernel {
 public:
  explicit LogRankKernel(const FieldCtx& ctx)
      : log_(ctx.log_table()), zech_(ctx.zech_table()), group_(ctx.group_order()) {
    qpow_.resize(ctx.n());
    for (unsigned i = 0; i < ctx.n(); ++i) qpow_[i] = ctx.qpow_mod(i);
  }

  std::size_t dickson_rank(std::span<const Elem> coeffs, std::size_t cap) {
    const std::size_t n = coeffs.size();
    constexpr std::uint32_t kZero = FieldCtx::kNoLog;
    std::uint32_t clog[64];
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      clog[i] = coeffs[i].is_zero() ? kZero : log_[coeffs[i].v];
      any = any || clog[i] != kZero;
    }
    if (!any) return 0;
    mat_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t qi = qpow_[i];
      std::uint32_t* row = &mat_[i * n];
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint32_t l = clog[(j + n - i) % n];
        row[j] = l == kZero ? kZero : static_cast<std::uint32_t>(std::uint64_t{l} * qi % group_);
      }
    }
    return eliminate(n, n, cap);
  }

 private:
  std::uint32_t add_logs(std::uint32_t la, std::uint32_t lb) const {
    if (la == FieldCtx::kNoLog) return lb;
    if (lb == FieldCtx::kNoLog) return la;
    const std::uint64_t d = lb >= la ? lb - la : lb + group_ - la;
    const std::uint32_t z = zech_[d];
    if (z == FieldCtx::kNoLog) return FieldCtx::kNoLog;
    const std::uint64_t s = std::uint64_t{la} + z;
    return static_cast<std::uint32_t>(s >= group_ ? s - group_ : s);
  }

  std::size_t eliminate(std::size_t rows, std::size_t cols, std::size_t cap) {
    constexpr std::uint32_t kZero = FieldCtx::kNoLog;
    const std::uint64_t half = group_ / 2;  // log(-1)
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows && r < cap; ++c) {
      std::size_t piv = r;
      while (piv < rows && mat_[piv * cols + c] == kZero) ++piv;
      if (piv == rows) continue;
      if (piv != r)
        for (std::size_t j = c; j < cols; ++j) std::swap(mat_[piv * cols + j], mat_[r * cols + j]);
      const std::uint32_t* prow = &mat_[r * cols];
      const std::uint64_t lp = prow[c];
      for (std::size_t i = r + 1; i < rows; ++i) {
        std::uint32_t* row = &mat_[i * cols];
        if (row[c] == kZero) continue;
        // row -= (row[c]/prow[c]) * prow, i.e. row += (-row[c]/prow[c]) * prow.
        const std::uint64_t lf = (std::uint64_t{row[c]} + group_ - lp + half) % group_;
        row[c] = kZero;
        for (std::size_t j = c + 1; j < cols; ++j) {
          if (prow[j] == kZero) continue;
          std::uint64_t t = lf + prow[j];
          if (t >= group_) t -= group_;
          row[j] = add_logs(row[j], static_cast<std::uint32_t>(t));
        }
      }
      ++r;
    }
    return r;
  }

  std::span<const std::uint32_t> log_;
  std::span<const std::uint32_t> zech_;
  std::uint64_t group_;
  std::vector<std::uint64_t> qpow_;
  std::vector<std::uint32_t> mat_;
};

}  // namespace detail

/// Rank of the Dickson matrix of coeffs, capped.  Reusable per thread; holds
/// scratch space.
class DicksonRanker {
 public:
  explicit DicksonRanker(const FieldCtx& ctx) : ctx_(&ctx) {
    if (ctx.table_mode()) kernel_.emplace_back(ctx);
  }

  std::size_t operator()(std::span<const Elem> coeffs,
                         std::size_t cap = std::numeric_limits<std::size_t>::max()) {
    if (!kernel_.empty() && coeffs.size() <= 64) return kernel_.front().dickson_rank(coeffs, cap);
    return matrix_rank(*ctx_, dickson_of(*ctx_, coeffs), cap);
  }

 private:
  const FieldCtx* ctx_;
  std::vector<detail::LogRankKernel> kernel_;
};

}  // namespace symrank

#endif  // SYMRANK_DICKSON_HPP
