#include "ybalg/liealg.hpp"

#include "ybalg/error.hpp"

namespace ybalg {

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

/// [v, g] (Right) or [g, v] (Left) for v in the degree-k slice.
SparseVector<Rat> bracket_with(const SparseVector<Rat>& v, std::size_t g, std::size_t m, std::size_t k,
                               Bracketing side) {
  std::size_t mk = 1;
  for (std::size_t s = 0; s < k; ++s) mk *= m;
  SparseVector<Rat> out;
  out.reserve(2 * v.size());
  const Rat sign = side == Bracketing::Left ? 1 : -1;
  for (const auto& e : v) {
    out.push_back({static_cast<std::uint32_t>(g * mk + e.col), sign * e.value});
    out.push_back({static_cast<std::uint32_t>(e.col * m + g), -sign * e.value});
  }
  canonicalize(out);
  return out;
}

}  // namespace

Integer necklace_dim(std::size_t m, std::size_t d) {
  if (d == 0) return 0;
  Integer total = 0;
  for (std::size_t e = 1; e <= d; ++e) {
    if (d % e) continue;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), m, e);
    total += mobius(d / e) * power;
  }
  return total / static_cast<long>(d);
}

std::size_t free_lie_dim_by_rank(std::size_t m, std::size_t d, const Caps& caps) {
  if (d == 0) throw InvalidArgument("Lie degree must be positive");
  const std::size_t cols = slice_columns(m, d, caps);
  // Left-normed brackets of length k, indexed by their letter word.
  std::vector<SparseVector<Rat>> level;
  for (std::size_t g = 0; g < m; ++g) level.push_back({{static_cast<std::uint32_t>(g), Rat(1)}});
  for (std::size_t k = 1; k < d; ++k) {
    std::vector<SparseVector<Rat>> next;
    next.reserve(level.size() * m);
    for (const auto& v : level)
      for (std::size_t g = 0; g < m; ++g) next.push_back(bracket_with(v, g, m, k, Bracketing::Right));
    level = std::move(next);
  }
  RowEchelon ech(cols);
  for (auto& v : level) ech.insert(std::move(v));
  return ech.rank();
}

std::size_t free_lie_dim(std::size_t m, std::size_t d, const Caps& caps) {
  const Integer by_formula = necklace_dim(m, d);
  const std::size_t by_rank = free_lie_dim_by_rank(m, d, caps);
  if (by_formula != static_cast<unsigned long>(by_rank))
    throw std::logic_error("free Lie dimension mismatch: necklace " + to_string(by_formula) + ", rank " +
                           std::to_string(by_rank));
  return by_rank;
}

std::size_t lie_ideal_rank(const Presentation& p, std::size_t d, Bracketing side, const Caps& caps) {
  if (d < 2) return 0;
  const std::size_t m = p.generator_count();
  slice_columns(m, d, caps);
  std::vector<SparseVector<Rat>> basis;
  {
    RowEchelon ech(m * m);
    for (const auto& rel : p.relations()) {
      auto v = p.encode(rel, 2);
      if (ech.insert(v)) basis.push_back(std::move(v));
    }
  }
  for (std::size_t k = 2; k < d; ++k) {
    std::size_t cols = 1;
    for (std::size_t s = 0; s <= k; ++s) cols *= m;
    RowEchelon ech(cols);
    std::vector<SparseVector<Rat>> next;
    for (const auto& v : basis)
      for (std::size_t g = 0; g < m; ++g) {
        auto w = bracket_with(v, g, m, k, side);
        if (ech.insert(w)) next.push_back(std::move(w));
      }
    basis = std::move(next);
  }
  return basis.size();
}

std::size_t lie_graded_dim(const Presentation& p, std::size_t d, Bracketing side, const Caps& caps) {
  return free_lie_dim(p.generator_count(), d, caps) - lie_ideal_rank(p, d, side, caps);
}

bool check_morphism(const Presentation& src, const Presentation& dst, const GeneratorMap& gmap) {
  for (const auto& g : src.generators()) {
    auto it = gmap.find(g);
    if (it == gmap.end()) throw InvalidArgument("generator map has no image for " + to_string(g));
    for (const auto& [w, c] : it->second.terms()) {
      if (w.size() != 1) throw InvalidArgument("image of " + to_string(g) + " is not homogeneous of degree 1");
      if (!dst.index_of(w[0])) throw InvalidArgument("image of " + to_string(g) + " leaves " + dst.name());
    }
  }
  RelationSpan span(dst, 2);
  for (const auto& rel : src.relations())
    if (!span.contains(substitute(rel, gmap))) return false;
  return true;
}

bool qtr0_dims_equal_qtr(int n, std::size_t max_degree, const Caps& caps) {
  Presentation qtr0 = make_presentation(AlgebraKind::Qtr0, n);
  Presentation qtr = make_presentation(AlgebraKind::Qtr, n);
  for (std::size_t d = 0; d <= max_degree; ++d)
    if (graded_dimension(qtr0, d, caps) != graded_dimension(qtr, d, caps)) return false;
  return true;
}

}  // namespace ybalg
