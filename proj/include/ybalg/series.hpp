#pragma once

// Polynomials and truncated power series over Q, set-partition numbers,
// Hilbert polynomials of tr_n / qtr_n and their generating functions.

#include <cstddef>
#include <vector>

#include "ybalg/exact.hpp"

namespace ybalg {

/// Dense coefficient list, index = exponent. Trailing zeros are trimmed.
class PolySeries {
 public:
  PolySeries() = default;
  explicit PolySeries(std::vector<Rat> coeffs);
  static PolySeries from_integers(const std::vector<Integer>& coeffs);
  static PolySeries from_integers(std::initializer_list<long> coeffs);

  const std::vector<Rat>& coeffs() const { return c_; }
  /// Coefficient of t^k (zero beyond the stored range).
  Rat operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  /// p(-t)
  PolySeries negate_variable() const;
  /// p mod t^(order + 1)
  PolySeries truncate(std::size_t order) const;
  Rat evaluate(const Rat& t) const;

  friend bool operator==(const PolySeries&, const PolySeries&) = default;
  friend PolySeries operator+(const PolySeries& a, const PolySeries& b);
  friend PolySeries operator-(const PolySeries& a, const PolySeries& b);
  friend PolySeries operator*(const PolySeries& a, const PolySeries& b);

 private:
  void trim();
  std::vector<Rat> c_;
};

std::string to_string(const PolySeries& p);
/// Coefficients as exact strings, one per exponent up to `order` (or the degree).
std::vector<std::string> coefficient_strings(const PolySeries& p, long order = -1);

/// a * b mod t^(order + 1)
PolySeries multiply_truncated(const PolySeries& a, const PolySeries& b, std::size_t order);
/// 1 / a mod t^(order + 1); throws InvalidArgument if a(0) = 0.
PolySeries reciprocal(const PolySeries& a, std::size_t order);

Integer factorial(long n);
Integer binomial(long n, long k);
/// Out-of-range arguments give 0.
Integer stirling2(long n, long k);
/// Partitions of [n] into k linearly ordered blocks.
Integer lah(long n, long k);
Integer bell(long n);
/// Unsigned Stirling numbers of the first kind (permutations with k cycles).
Integer stirling1(long n, long k);

enum class SeriesKind { Tr, Qtr };

/// Closed formulas: tr: sum_k S(n,k) t^(n-k); qtr: sum_p C(n-1,p) n!/(n-p)! t^p.
PolySeries p_poly(SeriesKind kind, long n);

/// n! [u^n] of exp((e^(tu) - 1)/t) or exp(u/(1 - tu)), expanded by exact
/// series arithmetic. Throws ResourceLimitError for n above `cap`.
PolySeries p_poly_via_egf(SeriesKind kind, long n, long cap = 10);

/// First order+1 coefficients of 1 / P(-t).
PolySeries u_hilbert(SeriesKind kind, long n, std::size_t order);

/// The l_1..l_order with h = prod_d (1 - t^d)^(-l_d) mod t^(order+1).
/// Throws InvalidArgument if some l_d is not a nonnegative integer.
std::vector<Integer> witt_inversion(const PolySeries& h, std::size_t order);

/// prod_{d <= order} (1 - t^d)^(-l_d) mod t^(order+1), with l[d-1] = l_d.
PolySeries pbw_series(const std::vector<Integer>& l, std::size_t order);

/// D[p][q] = n! [u^n t^p v^q] of exp(((1 - tu)^(-v) - 1)/t). Throws
/// ResourceLimitError for n above `cap`.
std::vector<std::vector<Integer>> trivariate_F(long n, long cap = 10);

}  // namespace ybalg
