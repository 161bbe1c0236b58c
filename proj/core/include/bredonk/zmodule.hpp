#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace bredonk {

/// Dense row-major matrix of arbitrary-precision integers. A 0 x n or
/// n x 0 matrix is a valid (zero) map.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix diagonal(const std::vector<mpz_class>& diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  IntegerMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& factor);
  void negate_row(std::size_t r);

  /// Copy of the block [r0, r0+nr) x [c0, c0+nc).
  IntegerMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Plain-text grid: "rows cols" then one line of space-separated integers
  /// per row.
  std::string to_grid() const;
  static IntegerMatrix from_grid(const std::string& text);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

/// U * A * V = D with U, V unimodular and D diagonal with
/// d_1 | d_2 | ... | d_rank on the leading diagonal.
struct SnfResult {
  IntegerMatrix D;
  IntegerMatrix U;
  IntegerMatrix V;
  IntegerMatrix U_inv;
  IntegerMatrix V_inv;
  std::size_t rank = 0;
  std::vector<mpz_class> divisors;
};

/// Smith normal form. Pivot rule: nonzero entry of least absolute value in the
/// remaining block, ties broken by smallest row then column.
SnfResult snf(const IntegerMatrix& A);

/// Determinant of a square matrix (Bareiss).
mpz_class determinant(const IntegerMatrix& A);

/// Z^rank + Z/t_1 + ... + Z/t_s with t_i >= 2 and t_i | t_{i+1}.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;
  explicit FgAbelianGroup(std::size_t rank) : rank_(rank) {}

  /// Normalizes an arbitrary direct sum of cyclic groups: orders of 1 are
  /// dropped, orders of 0 count as free summands.
  static FgAbelianGroup from_cyclic(std::size_t rank, const std::vector<mpz_class>& orders);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<mpz_class>& torsion() const noexcept { return torsion_; }
  bool is_trivial() const noexcept { return rank_ == 0 && torsion_.empty(); }

  friend bool operator==(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    return a.rank_ == b.rank_ && a.torsion_ == b.torsion_;
  }

  /// "0", "Z^r", "Z/2", "Z^r + Z/d1 + Z/d2" (divisors ascending).
  std::string to_string() const;

 private:
  std::size_t rank_ = 0;
  std::vector<mpz_class> torsion_;
};

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);

/// Homology ker(B) / im(A) at a free module of rank m, where A: Z^n -> Z^m
/// (m x n) is the incoming map and B: Z^m -> Z^k (k x m) the outgoing one.
/// An absent map is the zero map. Throws ChainConditionViolated when
/// B * A != 0 and DimensionMismatch when shapes disagree with m.
FgAbelianGroup homology_at(const std::optional<IntegerMatrix>& A,
                           const std::optional<IntegerMatrix>& B, std::size_t m);

FgAbelianGroup tensor(const FgAbelianGroup& a, const FgAbelianGroup& b);
FgAbelianGroup tor(const FgAbelianGroup& a, const FgAbelianGroup& b);

}  // namespace bredonk
