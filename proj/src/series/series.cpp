#include "ybalg/series.hpp"

#include <algorithm>

#include "ybalg/error.hpp"

namespace ybalg {

PolySeries::PolySeries(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

PolySeries PolySeries::from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rat> c(coeffs.begin(), coeffs.end());
  return PolySeries(std::move(c));
}

PolySeries PolySeries::from_integers(std::initializer_list<long> coeffs) {
  std::vector<Rat> c;
  for (long x : coeffs) c.emplace_back(x);
  return PolySeries(std::move(c));
}

void PolySeries::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolySeries PolySeries::negate_variable() const {
  auto c = c_;
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return PolySeries(std::move(c));
}

PolySeries PolySeries::truncate(std::size_t order) const {
  if (c_.size() <= order + 1) return *this;
  return PolySeries(std::vector<Rat>(c_.begin(), c_.begin() + static_cast<long>(order + 1)));
}

Rat PolySeries::evaluate(const Rat& t) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

PolySeries operator+(const PolySeries& a, const PolySeries& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] + b[k];
  return PolySeries(std::move(c));
}

PolySeries operator-(const PolySeries& a, const PolySeries& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] - b[k];
  return PolySeries(std::move(c));
}

PolySeries operator*(const PolySeries& a, const PolySeries& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return PolySeries(std::move(c));
}

std::string to_string(const PolySeries& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const Rat& c = p.coeffs()[k];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Rat mag = abs(c);
    if (k == 0 || mag != 1) out += to_string(mag);
    if (k >= 1) out += "t";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::vector<std::string> coefficient_strings(const PolySeries& p, long order) {
  if (order < 0) order = p.degree();
  std::vector<std::string> out;
  for (long k = 0; k <= order; ++k) out.push_back(to_string(p[static_cast<std::size_t>(k)]));
  return out;
}

PolySeries multiply_truncated(const PolySeries& a, const PolySeries& b, std::size_t order) {
  std::vector<Rat> c(order + 1);
  for (std::size_t i = 0; i < a.coeffs().size() && i <= order; ++i)
    for (std::size_t j = 0; j < b.coeffs().size() && i + j <= order; ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return PolySeries(std::move(c));
}

PolySeries reciprocal(const PolySeries& a, std::size_t order) {
  if (a[0] == 0) throw InvalidArgument("series with zero constant term has no reciprocal");
  std::vector<Rat> r(order + 1);
  const Rat inv0 = 1 / a[0];
  r[0] = inv0;
  for (std::size_t k = 1; k <= order; ++k) {
    Rat acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += a[j] * r[k - j];
    r[k] = -acc * inv0;
  }
  return PolySeries(std::move(r));
}

// ---------------------------------------------------------------------------
// Numbers

Integer factorial(long n) {
  if (n < 0) return 0;
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

namespace {

// Triangle T(n, k) with T(0,0) = 1 and T(n,k) = T(n-1,k-1) + f(n,k) T(n-1,k).
template <class Factor>
Integer triangle(long n, long k, Factor f) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::vector<Integer> row{1};
  for (long r = 1; r <= n; ++r) {
    std::vector<Integer> next(static_cast<std::size_t>(r + 1), 0);
    for (long c = 0; c <= r; ++c) {
      if (c >= 1) next[c] += row[c - 1];
      if (c < r) next[c] += f(r, c) * row[c];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

}  // namespace

Integer stirling2(long n, long k) {
  return triangle(n, k, [](long, long c) { return Integer(c); });
}

Integer lah(long n, long k) {
  // A_{n,p} = A_{n-1,p-1} + (n + p - 1) A_{n-1,p}
  return triangle(n, k, [](long r, long c) { return Integer(r + c - 1); });
}

Integer stirling1(long n, long k) {
  return triangle(n, k, [](long r, long) { return Integer(r - 1); });
}

Integer bell(long n) {
  Integer total = 0;
  for (long k = 0; k <= n; ++k) total += stirling2(n, k);
  return total;
}

PolySeries p_poly(SeriesKind kind, long n) {
  if (n < 0) throw InvalidArgument("n must be nonnegative");
  std::vector<Integer> c(static_cast<std::size_t>(std::max(n, 1L)), 0);
  if (kind == SeriesKind::Tr) {
    for (long k = 1; k <= n; ++k) c[static_cast<std::size_t>(n - k)] = stirling2(n, k);
    if (n == 0) c[0] = 1;
  } else {
    for (long p = 0; p <= n - 1; ++p) c[static_cast<std::size_t>(p)] = binomial(n - 1, p) * factorial(n) / factorial(n - p);
    if (n == 0) c[0] = 1;
  }
  return PolySeries::from_integers(c);
}

// ---------------------------------------------------------------------------
// Exponential generating functions in u with coefficients polynomial in (t, v)

namespace {

/// Polynomial in t and v: c[a][b] is the coefficient of t^a v^b.
struct TV {
  std::vector<std::vector<Rat>> c;

  Rat at(std::size_t a, std::size_t b) const {
    return a < c.size() && b < c[a].size() ? c[a][b] : Rat(0);
  }
  void add(std::size_t a, std::size_t b, const Rat& x) {
    if (x == 0) return;
    if (c.size() <= a) c.resize(a + 1);
    if (c[a].size() <= b) c[a].resize(b + 1);
    c[a][b] += x;
  }
  static TV monomial(std::size_t a, std::size_t b, const Rat& x) {
    TV out;
    out.add(a, b, x);
    return out;
  }
};

TV operator*(const TV& x, const TV& y) {
  TV out;
  for (std::size_t a = 0; a < x.c.size(); ++a)
    for (std::size_t b = 0; b < x.c[a].size(); ++b) {
      if (x.c[a][b] == 0) continue;
      for (std::size_t a2 = 0; a2 < y.c.size(); ++a2)
        for (std::size_t b2 = 0; b2 < y.c[a2].size(); ++b2)
          if (y.c[a2][b2] != 0) out.add(a + a2, b + b2, x.c[a][b] * y.c[a2][b2]);
    }
  return out;
}

void add_scaled(TV& into, const TV& x, const Rat& s) {
  for (std::size_t a = 0; a < x.c.size(); ++a)
    for (std::size_t b = 0; b < x.c[a].size(); ++b) into.add(a, b, x.c[a][b] * s);
}

/// Series sum_n F[n] u^n / n! truncated at u^N.
using DividedSeries = std::vector<TV>;

/// exp(G) for G[0] = 0, via F' = G' F: F_{n+1} = sum_k C(n,k) G_{k+1} F_{n-k}.
DividedSeries exp_divided(const DividedSeries& g, std::size_t order) {
  DividedSeries f(order + 1);
  f[0] = TV::monomial(0, 0, 1);
  for (std::size_t n = 0; n < order; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      if (k + 1 >= g.size()) break;
      add_scaled(f[n + 1], g[k + 1] * f[n - k], Rat(binomial(static_cast<long>(n), static_cast<long>(k))));
    }
  return f;
}

/// (F - 1) / t, assuming every non-constant coefficient is divisible by t.
DividedSeries minus_one_over_t(DividedSeries f) {
  f[0] = TV{};
  for (auto& term : f) {
    if (term.c.empty()) continue;
    for (auto x : term.c[0])
      if (x != 0) throw std::logic_error("series is not divisible by t");
    term.c.erase(term.c.begin());
  }
  return f;
}

void check_cap(long n, long cap) {
  if (n < 0) throw InvalidArgument("n must be nonnegative");
  if (n > cap) throw ResourceLimitError("n = " + std::to_string(n) + " exceeds the generating function cap " + std::to_string(cap));
}

DividedSeries inner_series(SeriesKind kind, std::size_t order, bool track_v) {
  DividedSeries inner(order + 1);
  if (kind == SeriesKind::Tr) {
    // e^(tu): tu has divided coefficient t at u^1.
    DividedSeries tu(order + 1);
    if (order >= 1) tu[1] = TV::monomial(1, 0, 1);
    return minus_one_over_t(exp_divided(tu, order));
  }
  if (!track_v) {
    // u / (1 - tu) = sum_k t^(k-1) u^k, so the divided coefficient is k! t^(k-1).
    for (std::size_t k = 1; k <= order; ++k) inner[k] = TV::monomial(k - 1, 0, Rat(factorial(static_cast<long>(k))));
    return inner;
  }
  // (1 - tu)^(-v) = exp(v * sum_k t^k u^k / k); divided coefficient (k-1)! v t^k.
  DividedSeries log_part(order + 1);
  for (std::size_t k = 1; k <= order; ++k)
    log_part[k] = TV::monomial(k, 1, Rat(factorial(static_cast<long>(k) - 1)));
  return minus_one_over_t(exp_divided(log_part, order));
}

}  // namespace

PolySeries p_poly_via_egf(SeriesKind kind, long n, long cap) {
  check_cap(n, cap);
  const auto order = static_cast<std::size_t>(n);
  DividedSeries f = exp_divided(inner_series(kind, order, false), order);
  std::vector<Rat> c;
  for (std::size_t a = 0; a < f[order].c.size(); ++a) c.push_back(f[order].at(a, 0));
  return PolySeries(std::move(c));
}

std::vector<std::vector<Integer>> trivariate_F(long n, long cap) {
  check_cap(n, cap);
  const auto order = static_cast<std::size_t>(n);
  DividedSeries f = exp_divided(inner_series(SeriesKind::Qtr, order, true), order);
  const TV& top = f[order];
  std::vector<std::vector<Integer>> out(top.c.size());
  for (std::size_t p = 0; p < top.c.size(); ++p)
    for (std::size_t q = 0; q < top.c[p].size(); ++q) {
      const Rat& x = top.c[p][q];
      if (x.get_den() != 1) throw std::logic_error("non-integral trivariate coefficient");
      out[p].push_back(x.get_num());
    }
  return out;
}

PolySeries u_hilbert(SeriesKind kind, long n, std::size_t order) {
  return reciprocal(p_poly(kind, n).negate_variable(), order);
}

// ---------------------------------------------------------------------------
// PBW / Witt

namespace {

int mobius(std::size_t n) {
  int result = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

std::vector<Integer> witt_inversion(const PolySeries& h, std::size_t order) {
  if (h[0] != 1) throw InvalidArgument("series must have constant term 1");
  // c_m = [t^(m-1)] h'/h = m [t^m] log h = sum_{d | m} d l_d
  std::vector<Rat> deriv(order + 1);
  for (std::size_t k = 1; k <= order; ++k) deriv[k - 1] = h[k] * Rat(static_cast<long>(k));
  PolySeries log_deriv = multiply_truncated(PolySeries(deriv), reciprocal(h, order), order);
  std::vector<Integer> l;
  for (std::size_t d = 1; d <= order; ++d) {
    Rat acc = 0;
    for (std::size_t e = 1; e <= d; ++e)
      if (d % e == 0) acc += Rat(mobius(d / e)) * log_deriv[e - 1];
    acc /= Rat(static_cast<long>(d));
    if (acc.get_den() != 1 || acc < 0)
      throw InvalidArgument("not a PBW series: l_" + std::to_string(d) + " = " + to_string(acc));
    l.push_back(acc.get_num());
  }
  return l;
}

PolySeries pbw_series(const std::vector<Integer>& l, std::size_t order) {
  PolySeries acc = PolySeries::from_integers({1});
  for (std::size_t d = 1; d <= order && d <= l.size(); ++d) {
    // (1 - t^d)^(-l) = sum_k C(l + k - 1, k) t^(dk)
    std::vector<Rat> factor(order + 1);
    const Integer& ld = l[d - 1];
    Integer coeff = 1;
    for (std::size_t k = 0; k * d <= order; ++k) {
      factor[k * d] = Rat(coeff);
      coeff = coeff * (ld + static_cast<long>(k)) / static_cast<long>(k + 1);
    }
    acc = multiply_truncated(acc, PolySeries(std::move(factor)), order);
  }
  return acc;
}

}  // namespace ybalg
