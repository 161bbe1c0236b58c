#include "bredonk/zmodule.hpp"

#include <algorithm>
#include <sstream>

#include "bredonk/errors.hpp"

namespace bredonk {

// ---------------------------------------------------------------------------
// IntegerMatrix

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::diagonal(const std::vector<mpz_class>& diag) {
  IntegerMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpz_class& v) { return v == 0; });
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntegerMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntegerMatrix IntegerMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
  IntegerMatrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

std::string IntegerMatrix::to_grid() const {
  std::ostringstream os;
  os << rows_ << ' ' << cols_ << '\n';
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
    os << '\n';
  }
  return os.str();
}

IntegerMatrix IntegerMatrix::from_grid(const std::string& text) {
  std::istringstream is(text);
  std::size_t rows = 0, cols = 0;
  if (!(is >> rows >> cols)) throw ParseError("matrix grid header must be \"rows cols\"");
  IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (!(is >> m(r, c))) throw ParseError("matrix grid truncated at row " + std::to_string(r));
  return m;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  IntegerMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const mpz_class& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

mpz_class determinant(const IntegerMatrix& A) {
  if (A.rows() != A.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  IntegerMatrix m = A;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && m(s, k) == 0) ++s;
      if (s == n) return 0;
      m.swap_rows(k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    prev = m(k, k);
  }
  return sign < 0 ? mpz_class(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

// Keeps D = U * A * V and the inverses of U and V in step with every
// elementary operation applied to D.
struct SnfWork {
  IntegerMatrix D, U, V, U_inv, V_inv;

  void swap_rows(std::size_t a, std::size_t b) {
    D.swap_rows(a, b);
    U.swap_rows(a, b);
    U_inv.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    D.swap_cols(a, b);
    V.swap_cols(a, b);
    V_inv.swap_rows(a, b);
  }
  void add_row(std::size_t dst, std::size_t src, const mpz_class& f) {
    D.add_row_multiple(dst, src, f);
    U.add_row_multiple(dst, src, f);
    U_inv.add_col_multiple(src, dst, -f);
  }
  void add_col(std::size_t dst, std::size_t src, const mpz_class& f) {
    D.add_col_multiple(dst, src, f);
    V.add_col_multiple(dst, src, f);
    V_inv.add_row_multiple(src, dst, -f);
  }
  void negate_row(std::size_t r) {
    D.negate_row(r);
    U.negate_row(r);
    for (std::size_t i = 0; i < U_inv.rows(); ++i) U_inv(i, r) = -U_inv(i, r);
  }
};

bool better_pivot(const mpz_class& candidate, const mpz_class& best) {
  return best == 0 || mpz_cmpabs(candidate.get_mpz_t(), best.get_mpz_t()) < 0;
}

}  // namespace

SnfResult snf(const IntegerMatrix& A) {
  const std::size_t rows = A.rows();
  const std::size_t cols = A.cols();
  SnfWork w{A, IntegerMatrix::identity(rows), IntegerMatrix::identity(cols), IntegerMatrix::identity(rows),
            IntegerMatrix::identity(cols)};
  IntegerMatrix& D = w.D;

  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // Global pivot: least |entry| in the trailing block, row-major scan keeps
    // the (row, column) tie-break.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (D(i, j) != 0 && (pr == rows || better_pivot(D(i, j), D(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    w.swap_rows(t, pr);
    w.swap_cols(t, pc);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D(i, t) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        w.add_row(i, t, -q);
        if (D(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D(t, j) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        w.add_col(j, t, -q);
        if (D(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // A remainder smaller than the pivot survived; promote it.
        std::size_t br = t, bc = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (D(i, t) != 0 && better_pivot(D(i, t), D(br, bc))) { br = i; bc = t; }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (D(t, j) != 0 && better_pivot(D(t, j), D(br, bc))) { br = t; bc = j; }
        w.swap_rows(t, br);
        w.swap_cols(t, bc);
        continue;
      }
      // Row and column are clear; enforce d_t | every remaining entry.
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row == rows) break;
      w.add_row(t, bad_row, 1);
    }
    if (D(t, t) < 0) w.negate_row(t);
  }

  SnfResult res;
  res.rank = t;
  for (std::size_t i = 0; i < t; ++i) res.divisors.push_back(D(i, i));
  res.D = std::move(w.D);
  res.U = std::move(w.U);
  res.V = std::move(w.V);
  res.U_inv = std::move(w.U_inv);
  res.V_inv = std::move(w.V_inv);
  return res;
}

// ---------------------------------------------------------------------------
// FgAbelianGroup

FgAbelianGroup FgAbelianGroup::from_cyclic(std::size_t rank, const std::vector<mpz_class>& orders) {
  FgAbelianGroup g(rank);
  std::vector<mpz_class> finite;
  for (const auto& o : orders) {
    mpz_class a = abs(o);
    if (a == 0) {
      ++g.rank_;
    } else if (a != 1) {
      finite.push_back(a);
    }
  }
  if (finite.empty()) return g;
  for (const auto& d : snf(IntegerMatrix::diagonal(finite)).divisors)
    if (d != 1) g.torsion_.push_back(d);
  return g;
}

std::string FgAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank_ > 0) {
    os << "Z^" << rank_;
    first = false;
  }
  for (const auto& t : torsion_) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  return os.str();
}

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  std::vector<mpz_class> orders = a.torsion();
  orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
  return FgAbelianGroup::from_cyclic(a.rank() + b.rank(), orders);
}

FgAbelianGroup homology_at(const std::optional<IntegerMatrix>& A, const std::optional<IntegerMatrix>& B,
                           std::size_t m) {
  if (A && A->rows() != m) {
    throw DimensionMismatch("incoming map has " + std::to_string(A->rows()) + " rows, expected " +
                            std::to_string(m));
  }
  if (B && B->cols() != m) {
    throw DimensionMismatch("outgoing map has " + std::to_string(B->cols()) + " columns, expected " +
                            std::to_string(m));
  }
  if (A && B && !((*B) * (*A)).is_zero()) {
    throw ChainConditionViolated("composite of outgoing and incoming maps is nonzero");
  }

  // Express im(A) in a basis of ker(B): the last m - r columns of V span
  // ker(B), and rows r.. of V^-1 give coordinates in that basis.
  std::size_t kernel_rank = m;
  std::optional<IntegerMatrix> coords;
  if (B) {
    SnfResult sb = snf(*B);
    kernel_rank = m - sb.rank;
    if (A) coords = sb.V_inv.block(sb.rank, 0, kernel_rank, m) * (*A);
  } else if (A) {
    coords = *A;
  }
  if (!coords) return FgAbelianGroup(kernel_rank);

  SnfResult sc = snf(*coords);
  return FgAbelianGroup::from_cyclic(kernel_rank - sc.rank, sc.divisors);
}

FgAbelianGroup tensor(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  std::vector<mpz_class> orders;
  for (std::size_t i = 0; i < a.rank(); ++i) orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
  for (std::size_t i = 0; i < b.rank(); ++i) orders.insert(orders.end(), a.torsion().begin(), a.torsion().end());
  for (const auto& x : a.torsion())
    for (const auto& y : b.torsion()) orders.push_back(gcd(x, y));
  return FgAbelianGroup::from_cyclic(a.rank() * b.rank(), orders);
}

FgAbelianGroup tor(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  std::vector<mpz_class> orders;
  for (const auto& x : a.torsion())
    for (const auto& y : b.torsion()) orders.push_back(gcd(x, y));
  return FgAbelianGroup::from_cyclic(0, orders);
}

}  // namespace bredonk
