#include "ybalg/exact.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "ybalg/error.hpp"

namespace ybalg {

Rat make_rat(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (start == t.size()) return false;
    return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(start), t.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw InvalidArgument("bad rational '" + s + "'");
    return Rat(Integer(strip_plus(s)));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw InvalidArgument("bad rational '" + s + "'");
  return make_rat(Integer(strip_plus(num)), Integer(strip_plus(den)));
}

std::string to_string(const Rat& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

template <class Scalar>
void canonicalize(SparseVector<Scalar>& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
  SparseVector<Scalar> out;
  out.reserve(v.size());
  for (auto& e : v) {
    if (!out.empty() && out.back().col == e.col)
      out.back().value += e.value;
    else
      out.push_back(std::move(e));
  }
  std::erase_if(out, [](const auto& e) { return e.value == 0; });
  v = std::move(out);
}

template <class Scalar>
SparseMatrix<Scalar>::SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

template <class Scalar>
std::size_t SparseMatrix<Scalar>::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

template <class Scalar>
void SparseMatrix<Scalar>::add(std::size_t r, std::size_t c, const Scalar& value) {
  if (r >= rows_.size() || c >= cols_) throw InvalidArgument("matrix index out of range");
  if (value == 0) return;
  auto& row = rows_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry<Scalar>& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) {
    it->value += value;
    if (it->value == 0) row.erase(it);
  } else {
    row.insert(it, Entry<Scalar>{static_cast<std::uint32_t>(c), value});
  }
}

template <class Scalar>
Scalar SparseMatrix<Scalar>::at(std::size_t r, std::size_t c) const {
  const auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry<Scalar>& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) return it->value;
  return Scalar(0);
}

template <class Scalar>
void SparseMatrix<Scalar>::set_row(std::size_t r, SparseVector<Scalar> entries) {
  canonicalize(entries);
  if (!entries.empty() && entries.back().col >= cols_) throw InvalidArgument("matrix column out of range");
  rows_.at(r) = std::move(entries);
}

template <class Scalar>
SparseMatrix<Scalar> SparseMatrix<Scalar>::transpose() const {
  SparseMatrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& e : rows_[r]) t.rows_[e.col].push_back({static_cast<std::uint32_t>(r), e.value});
  return t;
}

template <class Scalar>
SparseMatrix<Scalar> multiply(const SparseMatrix<Scalar>& a, const SparseMatrix<Scalar>& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix shapes do not compose");
  SparseMatrix<Scalar> out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    SparseVector<Scalar> acc;
    for (const auto& e : a.row(r))
      for (const auto& f : b.row(e.col)) acc.push_back({f.col, e.value * f.value});
    out.set_row(r, std::move(acc));
  }
  return out;
}

template void canonicalize<Rat>(SparseVector<Rat>&);
template void canonicalize<Integer>(SparseVector<Integer>&);
template class SparseMatrix<Rat>;
template class SparseMatrix<Integer>;
template RatMatrix multiply<Rat>(const RatMatrix&, const RatMatrix&);
template IntMatrix multiply<Integer>(const IntMatrix&, const IntMatrix&);

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseVector<Rat> row;
    row.reserve(m.row(r).size());
    for (const auto& e : m.row(r)) row.push_back({e.col, Rat(e.value)});
    out.set_row(r, std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// RowEchelon

RowEchelon::RowEchelon(std::size_t cols, std::vector<std::uint32_t> column_weight)
    : cols_(cols), weight_(std::move(column_weight)), pivot_of_col_(cols, -1) {
  if (!weight_.empty() && weight_.size() != cols_) throw InvalidArgument("column weight size mismatch");
}

void RowEchelon::reduce_into_workspace(const SparseVector<Rat>& row) const {
  if (dense_.size() != cols_) {
    dense_.assign(cols_, Rat(0));
    touched_flag_.assign(cols_, 0);
  }
  touched_.clear();
  using Item = std::int32_t;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (const auto& e : row) {
    if (e.col >= cols_) throw InvalidArgument("vector column out of range");
    dense_[e.col] += e.value;
    if (!touched_flag_[e.col]) {
      touched_flag_[e.col] = 1;
      touched_.push_back(e.col);
      if (pivot_of_col_[e.col] >= 0) heap.push(pivot_of_col_[e.col]);
    }
  }
  Rat scaled;
  while (!heap.empty()) {
    Item k = heap.top();
    heap.pop();
    while (!heap.empty() && heap.top() == k) heap.pop();
    const Pivot& p = pivots_[static_cast<std::size_t>(k)];
    if (dense_[p.col] == 0) continue;
    Rat factor = dense_[p.col];
    for (const auto& e : p.row) {
      mpq_mul(scaled.get_mpq_t(), factor.get_mpq_t(), e.value.get_mpq_t());
      dense_[e.col] -= scaled;
      if (!touched_flag_[e.col]) {
        touched_flag_[e.col] = 1;
        touched_.push_back(e.col);
      }
      std::int32_t q = pivot_of_col_[e.col];
      if (q > k && dense_[e.col] != 0) heap.push(q);
    }
  }
}

SparseVector<Rat> RowEchelon::drain_workspace() const {
  SparseVector<Rat> out;
  std::sort(touched_.begin(), touched_.end());
  for (auto c : touched_) {
    if (dense_[c] != 0) out.push_back({c, dense_[c]});
    dense_[c] = 0;
    touched_flag_[c] = 0;
  }
  touched_.clear();
  return out;
}

SparseVector<Rat> RowEchelon::reduce(const SparseVector<Rat>& row) const {
  reduce_into_workspace(row);
  return drain_workspace();
}

bool RowEchelon::contains(const SparseVector<Rat>& row) const { return reduce(row).empty(); }

bool RowEchelon::insert(SparseVector<Rat> row) {
  auto residue = reduce(row);
  if (residue.empty()) return false;
  std::size_t best = 0;
  for (std::size_t k = 1; k < residue.size(); ++k) {
    auto wk = weight_.empty() ? 0u : weight_[residue[k].col];
    auto wb = weight_.empty() ? 0u : weight_[residue[best].col];
    if (wk < wb) best = k;
  }
  Rat inv = 1 / residue[best].value;
  for (auto& e : residue) e.value *= inv;
  auto col = residue[best].col;
  pivot_of_col_[col] = static_cast<std::int32_t>(pivots_.size());
  pivots_.push_back({col, std::move(residue)});
  return true;
}

std::size_t rank(const RatMatrix& m) {
  std::vector<std::uint32_t> weight(m.cols(), 0);
  std::vector<std::size_t> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& e : m.row(r)) ++weight[e.col];
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return m.row(a).size() < m.row(b).size(); });
  RowEchelon ech(m.cols(), std::move(weight));
  for (auto r : order) ech.insert(m.row(r));
  return ech.rank();
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

std::vector<Integer> dense_diagonalize(std::vector<std::vector<Integer>> a) {
  std::vector<Integer> diag;
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return diag;
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Integer q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Integer q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

}  // namespace

std::vector<Integer> smith_normal_form(const IntMatrix& m) {
  // Sparse phase: eliminate unit pivots with the smallest Markowitz cost.
  std::vector<std::map<std::uint32_t, Integer>> rows(m.rows());
  std::vector<std::set<std::uint32_t>> col_rows(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& e : m.row(r)) {
      rows[r][e.col] = e.value;
      col_rows[e.col].insert(static_cast<std::uint32_t>(r));
    }
  std::vector<char> row_alive(m.rows(), 1);
  std::vector<Integer> factors;

  while (true) {
    std::size_t best_r = m.rows(), best_c = 0, best_cost = 0;
    for (std::size_t r = 0; r < rows.size() && !(best_r != m.rows() && best_cost == 0); ++r) {
      if (!row_alive[r]) continue;
      for (const auto& [c, v] : rows[r]) {
        if (v != 1 && v != -1) continue;
        std::size_t cost = (rows[r].size() - 1) * (col_rows[c].size() - 1);
        if (best_r == m.rows() || cost < best_cost) {
          best_r = r;
          best_c = c;
          best_cost = cost;
          if (cost == 0) break;
        }
      }
    }
    if (best_r == m.rows()) break;

    const Integer pivot = rows[best_r][static_cast<std::uint32_t>(best_c)];
    std::vector<std::uint32_t> targets(col_rows[best_c].begin(), col_rows[best_c].end());
    for (auto r : targets) {
      if (r == best_r) continue;
      Integer factor = rows[r][static_cast<std::uint32_t>(best_c)] * pivot;
      for (const auto& [c, v] : rows[best_r]) {
        Integer& slot = rows[r][c];
        slot -= factor * v;
        if (slot == 0) {
          rows[r].erase(c);
          col_rows[c].erase(r);
        } else {
          col_rows[c].insert(r);
        }
      }
    }
    for (const auto& [c, v] : rows[best_r]) col_rows[c].erase(static_cast<std::uint32_t>(best_r));
    rows[best_r].clear();
    row_alive[best_r] = 0;
    factors.push_back(1);
  }

  // Dense phase on whatever is left (no unit entries remain).
  std::vector<std::uint32_t> live_cols;
  for (std::uint32_t c = 0; c < col_rows.size(); ++c)
    if (!col_rows[c].empty()) live_cols.push_back(c);
  std::vector<std::vector<Integer>> dense;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!row_alive[r] || rows[r].empty()) continue;
    std::vector<Integer> line(live_cols.size(), 0);
    for (std::size_t k = 0; k < live_cols.size(); ++k) {
      auto it = rows[r].find(live_cols[k]);
      if (it != rows[r].end()) line[k] = it->second;
    }
    dense.push_back(std::move(line));
  }
  for (auto& d : dense_diagonalize(std::move(dense))) factors.push_back(d);

  // Enforce the divisibility chain: diag(a, b) ~ diag(gcd, lcm).
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      Integer g = gcd(factors[i], factors[j]);
      Integer l = factors[i] / g * factors[j];
      factors[i] = g;
      factors[j] = l;
    }
  return factors;
}

}  // namespace ybalg
