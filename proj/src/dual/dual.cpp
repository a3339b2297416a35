#include "ybalg/dual.hpp"

#include <algorithm>
#include <numeric>

#include "ybalg/error.hpp"
#include "ybalg/series.hpp"
#include "ybalg/setpart.hpp"

namespace ybalg {

std::string to_string(DualKind kind) {
  switch (kind) {
    case DualKind::A: return "A";
    case DualKind::QA0: return "QA0";
    case DualKind::QA: return "QA";
  }
  return "?";
}

DualKind parse_dual_kind(std::string_view text) {
  if (text == "A") return DualKind::A;
  if (text == "QA0") return DualKind::QA0;
  if (text == "QA") return DualKind::QA;
  throw InvalidArgument("unknown dual algebra '" + std::string(text) + "'");
}

namespace {

Generator gen(GenKind kind, int i, int j) {
  return Generator{kind, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
}

Element a(int i, int j) { return generator_element(GenKind::A, i, j); }
Element b(int i, int j) { return generator_element(GenKind::B, i, j); }

}  // namespace

Presentation make_dual_presentation(DualKind kind, int n) {
  if (n < 0 || n > 32) throw InvalidArgument("site count out of range");
  std::vector<Generator> gens;
  if (kind != DualKind::A)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) gens.push_back(gen(GenKind::B, i, j));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) gens.push_back(gen(GenKind::A, i, j));

  std::vector<Element> rels;
  for (std::size_t x = 0; x < gens.size(); ++x)
    for (std::size_t y = x; y < gens.size(); ++y) {
      Element gx = Element::of(gens[x]), gy = Element::of(gens[y]);
      rels.push_back(gx * gy + gy * gx);
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (i == j || j == k || i == k) continue;
        Element cyclic = b(i, j) * b(j, k) + b(j, k) * b(k, i) + b(k, i) * b(i, j);
        switch (kind) {
          case DualKind::A:
            rels.push_back(a(i, j) * a(j, k) - a(j, k) * a(k, i));
            break;
          case DualKind::QA0:
            rels.push_back(a(i, j) * a(j, k) - a(j, k) * a(k, i));
            rels.push_back(cyclic);
            rels.push_back(a(i, j) * b(j, k) - a(i, k) * b(j, k));
            break;
          case DualKind::QA:
            rels.push_back(a(j, k) * a(i, j) - a(k, i) * a(j, k));
            rels.push_back(a(k, i) * a(j, k) - cyclic);
            rels.push_back(a(i, j) * b(j, k) - a(i, k) * b(j, k));
            break;
        }
      }
  if (kind != DualKind::A)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) rels.push_back(a(i, j) * b(i, j));
  return Presentation(to_string(kind) + "_" + std::to_string(n), n, std::move(gens), std::move(rels));
}

std::size_t dual_dimension_by_rank(DualKind kind, int n, std::size_t k, const Caps& caps) {
  return graded_dimension(make_dual_presentation(kind, n), k, caps);
}

// ---------------------------------------------------------------------------
// Monomials

namespace {

auto dual_key(const Generator& g) { return std::tuple(g.kind == GenKind::B ? 0 : 1, g.i, g.j); }

}  // namespace

std::optional<DualMonomial> DualMonomial::from_word(const Word& w) {
  for (const auto& g : w)
    if ((g.kind != GenKind::A && g.kind != GenKind::B) || g.i >= g.j)
      throw InvalidArgument("not a normalized odd generator: " + to_string(g));
  DualMonomial m;
  m.gens = w;
  // Insertion sort; each transposition of odd generators flips the sign.
  for (std::size_t s = 1; s < m.gens.size(); ++s)
    for (std::size_t t = s; t > 0 && dual_key(m.gens[t]) < dual_key(m.gens[t - 1]); --t) {
      std::swap(m.gens[t], m.gens[t - 1]);
      m.sign = -m.sign;
    }
  for (std::size_t s = 1; s < m.gens.size(); ++s)
    if (m.gens[s] == m.gens[s - 1]) return std::nullopt;
  return m;
}

Element DualMonomial::as_element() const { return Element::of(gens, Rat(sign)); }

std::string to_string(const DualMonomial& m) { return (m.sign < 0 ? "-" : "") + to_string(m.gens); }

namespace {

/// Product of normalized factors as a canonical monomial; factors must be distinct.
DualMonomial product(const std::vector<Element>& factors) {
  Element e = Element::one();
  for (const auto& f : factors) e = e * f;
  if (e.terms().size() != 1) throw std::logic_error("expected a single monomial");
  const auto& [w, c] = *e.terms().begin();
  auto m = DualMonomial::from_word(w);
  if (!m) throw std::logic_error("repeated generator in basis monomial");
  if (c < 0) m->sign = -m->sign;
  return *m;
}

}  // namespace

std::vector<std::vector<DualMonomial>> a_basis(int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  std::vector<std::vector<DualMonomial>> out(static_cast<std::size_t>(n));
  for_each_set_partition<int>(site_range(n), [&](const std::vector<std::vector<int>>& blocks) {
    std::vector<Element> factors;
    for (const auto& block : blocks)
      for (std::size_t s = 1; s < block.size(); ++s) factors.push_back(a(block[0], block[s]));
    out[factors.size()].push_back(product(factors));
  });
  return out;
}

// ---------------------------------------------------------------------------
// 2-step partitions

std::size_t TwoStepPartition::inner_count() const {
  std::size_t total = 0;
  for (const auto& p : outer) total += p.size();
  return total;
}

std::size_t TwoStepPartition::degree(int n) const { return static_cast<std::size_t>(n) - outer.size(); }

std::size_t TwoStepPartition::b_degree(int n) const { return static_cast<std::size_t>(n) - inner_count(); }

std::string to_string(const TwoStepPartition& s) {
  std::string out;
  for (std::size_t p = 0; p < s.outer.size(); ++p) {
    if (p) out += " ";
    out += "{";
    for (std::size_t q = 0; q < s.outer[p].size(); ++q) {
      if (q) out += "|";
      for (int x : s.outer[p][q]) out += std::to_string(x);
    }
    out += "}";
  }
  return out;
}

std::vector<TwoStepPartition> two_step_partitions(int n) {
  std::vector<TwoStepPartition> out;
  for_each_set_partition<int>(site_range(n), [&](const std::vector<std::vector<int>>& inner) {
    for_each_set_partition<std::vector<int>>(inner, [&](const std::vector<std::vector<std::vector<int>>>& outer) {
      out.push_back(TwoStepPartition{outer});
    });
  });
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n + 1)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

std::vector<std::vector<int>> components(UnionFind& uf, const std::vector<int>& sites) {
  std::vector<std::vector<int>> out;
  std::map<int, std::size_t> index;
  for (int v : sites) {
    auto [it, inserted] = index.try_emplace(uf.find(v), out.size());
    if (inserted) out.emplace_back();
    out[it->second].push_back(v);
  }
  return out;
}

}  // namespace

TwoStepPartition grading_of(const DualMonomial& m, int n) {
  UnionFind all(n), black(n);
  for (const auto& g : m.gens) {
    all.unite(g.i, g.j);
    if (g.kind == GenKind::B) black.unite(g.i, g.j);
  }
  TwoStepPartition s;
  for (const auto& outer : components(all, site_range(n))) s.outer.push_back(components(black, outer));
  return s;
}

std::vector<DualMonomial> nbc_top_basis(const std::vector<int>& sites) {
  if (sites.empty()) throw InvalidArgument("empty site set");
  std::vector<int> t = sites;
  std::sort(t.begin(), t.end());
  if (std::adjacent_find(t.begin(), t.end()) != t.end()) throw InvalidArgument("repeated site");
  std::vector<DualMonomial> out;
  std::vector<Element> factors;
  auto choose = [&](auto&& self, std::size_t v) -> void {
    if (v == t.size()) {
      out.push_back(product(factors));
      return;
    }
    for (std::size_t f = 0; f < v; ++f) {
      factors.push_back(b(t[f], t[v]));
      self(self, v + 1);
      factors.pop_back();
    }
  };
  choose(choose, 1);
  return out;
}

std::vector<QA0BasisBlock> qa0_basis(int n, int cap) {
  if (n < 1) throw InvalidArgument("n must be positive");
  if (n > cap) throw ResourceLimitError("n = " + std::to_string(n) + " exceeds the QA0 basis cap " + std::to_string(cap));
  std::map<std::vector<int>, std::vector<DualMonomial>> nbc_cache;
  auto nbc = [&](const std::vector<int>& block) -> const std::vector<DualMonomial>& {
    auto it = nbc_cache.find(block);
    if (it == nbc_cache.end()) it = nbc_cache.emplace(block, nbc_top_basis(block)).first;
    return it->second;
  };
  std::vector<QA0BasisBlock> out;
  for (auto& s : two_step_partitions(n)) {
    // Fixed a-factors: a(i_p, i_pq) for every non-first inner block.
    std::vector<const std::vector<DualMonomial>*> choices;
    std::vector<Element> a_factors;
    for (const auto& outer : s.outer) {
      for (const auto& inner : outer) choices.push_back(&nbc(inner));
      for (std::size_t q = 1; q < outer.size(); ++q) a_factors.push_back(a(outer[0][0], outer[q][0]));
    }
    QA0BasisBlock block{s, {}};
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
      std::vector<Element> factors;
      for (std::size_t c = 0; c < choices.size(); ++c) factors.push_back((*choices[c])[pick[c]].as_element());
      factors.insert(factors.end(), a_factors.begin(), a_factors.end());
      block.elements.push_back(product(factors));
      std::size_t c = 0;
      while (c < choices.size() && ++pick[c] == choices[c]->size()) pick[c++] = 0;
      if (c == choices.size()) break;
    }
    out.push_back(std::move(block));
  }
  return out;
}

std::vector<Integer> qa0_counts_by_degree(int n, int cap) {
  std::vector<Integer> out(static_cast<std::size_t>(n), 0);
  for (const auto& block : qa0_basis(n, cap)) out[block.partition.degree(n)] += block.elements.size();
  return out;
}

std::vector<std::vector<Integer>> qa0_counts_refined(int n, int cap) {
  std::vector<std::vector<Integer>> out(static_cast<std::size_t>(n),
                                        std::vector<Integer>(static_cast<std::size_t>(n + 1), 0));
  for (const auto& block : qa0_basis(n, cap))
    out[block.partition.degree(n)][block.partition.inner_count()] += block.elements.size();
  return out;
}

bool qa0_basis_is_basis(int n, const Caps& caps) {
  Presentation qa0 = make_dual_presentation(DualKind::QA0, n);
  std::vector<std::vector<Element>> by_degree(static_cast<std::size_t>(n + 1));
  for (const auto& block : qa0_basis(n)) {
    for (const auto& m : block.elements) {
      if (!(grading_of(m, n) == block.partition)) return false;
      by_degree[m.degree()].push_back(m.as_element());
    }
  }
  for (std::size_t k = 0; k < by_degree.size(); ++k) {
    RelationSpan span(qa0, k, caps);
    if (span.quotient_dimension() != by_degree[k].size()) return false;
    if (span.rank_with(by_degree[k]) != span.columns()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Orthogonality

OrthogonalityReport orthogonality_check(const Presentation& p, const Presentation& dual,
                                        const std::map<Generator, Generator>& pairing) {
  const std::size_t m = p.generator_count();
  if (dual.generator_count() != m) throw InvalidArgument("generator counts differ");
  auto column_of = [&](const Word& w) {
    std::size_t col = 0;
    for (const auto& g : w) {
      auto it = pairing.find(g);
      if (it == pairing.end()) throw InvalidArgument("no pairing partner for " + to_string(g));
      auto idx = p.index_of(it->second);
      if (!idx) throw InvalidArgument("pairing partner is not a generator of " + p.name());
      col = col * m + *idx;
    }
    return static_cast<std::uint32_t>(col);
  };
  std::vector<SparseVector<Rat>> primal, dual_rows;
  for (const auto& rel : p.relations()) primal.push_back(p.encode(rel, 2));
  for (const auto& rel : dual.relations()) {
    SparseVector<Rat> v;
    for (const auto& [w, c] : rel.terms()) v.push_back({column_of(w), c});
    canonicalize(v);
    dual_rows.push_back(std::move(v));
  }
  OrthogonalityReport report;
  report.space_dimension = m * m;
  RowEchelon e1(m * m), e2(m * m);
  for (const auto& r : primal) e1.insert(r);
  for (const auto& r : dual_rows) e2.insert(r);
  report.relation_rank = e1.rank();
  report.dual_relation_rank = e2.rank();
  report.pairings_vanish = true;
  for (const auto& x : primal)
    for (const auto& y : dual_rows) {
      Rat dot = 0;
      std::size_t s = 0, t = 0;
      while (s < x.size() && t < y.size()) {
        if (x[s].col < y[t].col) ++s;
        else if (y[t].col < x[s].col) ++t;
        else dot += x[s++].value * y[t++].value;
      }
      if (dot != 0) report.pairings_vanish = false;
    }
  return report;
}

OrthogonalityReport orthogonality_check(DualKind kind, int n) {
  std::map<Generator, Generator> pairing;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (kind == DualKind::A) {
        pairing[gen(GenKind::A, i, j)] = gen(GenKind::R, i, j);
      } else {
        pairing[gen(GenKind::A, i, j)] = gen(GenKind::Rho, i, j);
        pairing[gen(GenKind::B, i, j)] = gen(GenKind::T, i, j);
      }
    }
  Presentation primal = kind == DualKind::A     ? make_presentation(AlgebraKind::Tr, n)
                        : kind == DualKind::QA0 ? make_presentation(AlgebraKind::Qtr0, n)
                                                : make_qtr_split(n);
  return orthogonality_check(primal, make_dual_presentation(kind, n), pairing);
}

}  // namespace ybalg
