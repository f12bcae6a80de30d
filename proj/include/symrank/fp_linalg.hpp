#ifndef SYMRANK_FP_LINALG_HPP
#define SYMRANK_FP_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "symrank/detail/numeric.hpp"

// Dense linear algebra over the prime field F_p.  Used for everything that is
// naturally F_p-linear: Frobenius matrices, subfield bases, operator-matrix
// ranks, Gram matrices and span computations in W-coordinates.
namespace symrank {

using FpVector = std::vector<std::uint32_t>;

class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
      : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FpMatrix identity(std::uint32_t p, std::size_t size) {
    FpMatrix m(p, size, size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
    return m;
  }

  // Rows given as vectors of equal length.
  static FpMatrix from_rows(std::uint32_t p, std::span<const FpVector> rows, std::size_t cols) {
    FpMatrix m(p, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("FpMatrix::from_rows: ragged rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c] % p;
    }
    return m;
  }

  std::uint32_t p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  FpVector row(std::size_t r) const {
    return FpVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                    data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  FpVector apply(std::span<const std::uint32_t> x) const {
    FpVector y(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      std::uint64_t acc = 0;
      for (std::size_t c = 0; c < cols_; ++c) acc = (acc + std::uint64_t{(*this)(r, c)} * x[c]) % p_;
      y[r] = static_cast<std::uint32_t>(acc);
    }
    return y;
  }

  FpMatrix transpose() const {
    FpMatrix t(p_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::uint32_t p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> data_;
};

inline std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(detail::powmod(a, p - 2, p));
}

struct Echelon {
  FpMatrix reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

inline Echelon rref(FpMatrix m) {
  const std::uint32_t p = m.p();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const std::uint64_t inv = inv_mod_p(m(r, c), p);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = static_cast<std::uint32_t>(m(r, j) * inv % p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const std::uint64_t f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m(i, j) = static_cast<std::uint32_t>((m(i, j) + (p - f) * m(r, j)) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const FpMatrix& m) { return rref(m).rank(); }

// Basis of {x : m x = 0}.
inline std::vector<FpVector> nullspace(const FpMatrix& m) {
  const Echelon e = rref(m);
  const std::uint32_t p = m.p();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<FpVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    FpVector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      const std::uint32_t a = e.reduced(i, free);
      v[e.pivots[i]] = (p - a) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Square matrix inverse; nullopt when singular.
inline std::optional<FpMatrix> inverse(const FpMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse: matrix is not square");
  FpMatrix aug(m.p(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const Echelon e = rref(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  FpMatrix inv(m.p(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

// A list of generator vectors with span queries: membership, coordinates with
// respect to the generators, and span rank.  Generators need not be
// independent; coordinates are then one valid solution.
class FpSpan {
 public:
  FpSpan(std::uint32_t p, std::size_t length) : p_(p), length_(length) {}
  FpSpan(std::uint32_t p, std::size_t length, std::vector<FpVector> gens)
      : p_(p), length_(length), gens_(std::move(gens)) {
    for (const auto& g : gens_)
      if (g.size() != length_) throw std::invalid_argument("FpSpan: generator of wrong length");
    refresh();
  }

  void add(FpVector v) {
    if (v.size() != length_) throw std::invalid_argument("FpSpan::add: vector of wrong length");
    gens_.push_back(std::move(v));
    refresh();
  }

  std::size_t rank() const { return echelon_.rank(); }
  std::size_t size() const { return gens_.size(); }
  bool independent() const { return rank() == gens_.size(); }
  const std::vector<FpVector>& generators() const { return gens_; }

  // x = sum coords[i] * gens[i], if x is in the span.
  std::optional<FpVector> coordinates(std::span<const std::uint32_t> x) const {
    if (x.size() != length_) throw std::invalid_argument("FpSpan::coordinates: vector of wrong length");
    // Columns: generators, then x.  Solve via rref of the transpose system.
    FpMatrix sys(p_, length_, gens_.size() + 1);
    for (std::size_t j = 0; j < gens_.size(); ++j)
      for (std::size_t i = 0; i < length_; ++i) sys(i, j) = gens_[j][i];
    for (std::size_t i = 0; i < length_; ++i) sys(i, gens_.size()) = x[i] % p_;
    const Echelon e = rref(std::move(sys));
    if (!e.pivots.empty() && e.pivots.back() == gens_.size()) return std::nullopt;
    FpVector coords(gens_.size(), 0);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) coords[e.pivots[r]] = e.reduced(r, gens_.size());
    return coords;
  }

  bool contains(std::span<const std::uint32_t> x) const {
    if (x.size() != length_) throw std::invalid_argument("FpSpan::contains: vector of wrong length");
    FpMatrix m(p_, echelon_.rank() + 1, length_);
    for (std::size_t r = 0; r < echelon_.rank(); ++r)
      for (std::size_t c = 0; c < length_; ++c) m(r, c) = echelon_.reduced(r, c);
    for (std::size_t c = 0; c < length_; ++c) m(echelon_.rank(), c) = x[c] % p_;
    return fp_rank_of(m) == echelon_.rank();
  }

 private:
  static std::size_t fp_rank_of(const FpMatrix& m) { return symrank::rank(m); }

  void refresh() {
    FpMatrix m(p_, gens_.size(), length_);
    for (std::size_t r = 0; r < gens_.size(); ++r)
      for (std::size_t c = 0; c < length_; ++c) m(r, c) = gens_[r][c];
    echelon_ = rref(std::move(m));
  }

  std::uint32_t p_;
  std::size_t length_;
  std::vector<FpVector> gens_;
  Echelon echelon_{FpMatrix(p_, 0, length_), {}};
};

}  // namespace symrank

#endif  // SYMRANK_FP_LINALG_HPP
