#pragma once

// Exact arithmetic: GMP-backed integers and rationals, sparse matrices,
// rank over Q and Smith normal form over Z.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ybalg {

using Integer = mpz_class;
/// Always canonical: gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Rat = mpq_class;

Rat make_rat(const Integer& num, const Integer& den);
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& q);
std::string to_string(const Integer& z);

template <class Scalar>
struct Entry {
  std::uint32_t col;
  Scalar value;
};

/// Sorted by column, no explicit zeros.
template <class Scalar>
using SparseVector = std::vector<Entry<Scalar>>;

/// Sorts by column, merges duplicates and drops zeros.
template <class Scalar>
void canonicalize(SparseVector<Scalar>& v);

template <class Scalar>
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  /// Accumulates `value` into (r, c); a resulting zero is removed.
  void add(std::size_t r, std::size_t c, const Scalar& value);
  Scalar at(std::size_t r, std::size_t c) const;
  void set_row(std::size_t r, SparseVector<Scalar> entries);
  const SparseVector<Scalar>& row(std::size_t r) const { return rows_[r]; }

  SparseMatrix transpose() const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.cols_ || a.rows_.size() != b.rows_.size()) return false;
    for (std::size_t r = 0; r < a.rows_.size(); ++r) {
      const auto& x = a.rows_[r];
      const auto& y = b.rows_[r];
      if (x.size() != y.size()) return false;
      for (std::size_t k = 0; k < x.size(); ++k)
        if (x[k].col != y[k].col || x[k].value != y[k].value) return false;
    }
    return true;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<SparseVector<Scalar>> rows_;
};

using RatMatrix = SparseMatrix<Rat>;
using IntMatrix = SparseMatrix<Integer>;

template <class Scalar>
SparseMatrix<Scalar> multiply(const SparseMatrix<Scalar>& a, const SparseMatrix<Scalar>& b);

/// Incremental row echelon form over Q.
///
/// Every stored row is reduced against all rows inserted before it, so the
/// stored rows are triangular with respect to insertion order and a vector
/// is reduced by visiting pivots in that order. The pivot of a new row is
/// the column with the smallest weight (Markowitz-style: callers pass the
/// column occurrence counts so rarely-hit columns absorb the pivots);
/// without weights the smallest column index wins.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols, std::vector<std::uint32_t> column_weight = {});

  /// Returns true if `row` was independent of the stored rows.
  bool insert(SparseVector<Rat> row);
  bool contains(const SparseVector<Rat>& row) const;
  /// Residue of `row` after reduction (empty iff contained).
  SparseVector<Rat> reduce(const SparseVector<Rat>& row) const;

  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }

 private:
  struct Pivot {
    std::uint32_t col;
    SparseVector<Rat> row;  // normalized: entry at `col` is 1
  };

  void reduce_into_workspace(const SparseVector<Rat>& row) const;
  SparseVector<Rat> drain_workspace() const;

  std::size_t cols_;
  std::vector<std::uint32_t> weight_;
  std::vector<Pivot> pivots_;
  std::vector<std::int32_t> pivot_of_col_;

  // Scratch space reused between calls; the class is not safe for
  // concurrent use of a single instance.
  mutable std::vector<Rat> dense_;
  mutable std::vector<char> touched_flag_;
  mutable std::vector<std::uint32_t> touched_;
};

/// Rank over Q. Rows are fed sparsest first with column-count weights.
std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Nonzero invariant factors d_1 | d_2 | ... (count equals the rank).
std::vector<Integer> smith_normal_form(const IntMatrix& m);

RatMatrix to_rational(const IntMatrix& m);

}  // namespace ybalg
