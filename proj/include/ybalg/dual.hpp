#pragma once

// Quadratic duals of U(tr_n) and U(qtr_n): A_n, QA_n^0 and QA_n, modeled as
// quotients of the free algebra on odd generators a_ij, b_ij (i < j) by
// anticommutators plus the dual relations.

#include <map>
#include <optional>
#include <vector>

#include "ybalg/ncalg.hpp"
#include "ybalg/presentations.hpp"

namespace ybalg {

enum class DualKind { A, QA0, QA };
std::string to_string(DualKind kind);
DualKind parse_dual_kind(std::string_view text);

/// Includes x*y + y*x for every pair of generators (x = y gives 2 x^2).
Presentation make_dual_presentation(DualKind kind, int n);

std::size_t dual_dimension_by_rank(DualKind kind, int n, std::size_t k, const Caps& caps = {});

/// Product of distinct odd generators in canonical order (b before a, then
/// lexicographic), with the Koszul sign of the reordering.
struct DualMonomial {
  int sign = 1;
  std::vector<Generator> gens;

  /// nullopt when a generator repeats (the product vanishes).
  static std::optional<DualMonomial> from_word(const Word& w);
  std::size_t degree() const { return gens.size(); }
  /// sign * (product of gens) in the free algebra.
  Element as_element() const;

  friend bool operator==(const DualMonomial&, const DualMonomial&) = default;
};
std::string to_string(const DualMonomial& m);

/// Basis of A_n: products of reduced monomials a_{i1 i2} ... a_{i1 im} with
/// disjoint supports, in the order of increasing roots. Indexed by degree.
std::vector<std::vector<DualMonomial>> a_basis(int n);

/// Outer blocks S_p, each a list of inner blocks S_pq; everything sorted by minima.
struct TwoStepPartition {
  std::vector<std::vector<std::vector<int>>> outer;

  std::size_t inner_count() const;
  /// a-degree plus b-degree: n minus the number of outer blocks.
  std::size_t degree(int n) const;
  /// Sum of (|S_pq| - 1): n minus the number of inner blocks.
  std::size_t b_degree(int n) const;
  friend bool operator==(const TwoStepPartition&, const TwoStepPartition&) = default;
};
std::string to_string(const TwoStepPartition& s);

std::vector<TwoStepPartition> two_step_partitions(int n);

/// Black edges b_ij, red edges a_ij (without b_ij); outer blocks are the
/// components of all edges, inner blocks the components of black edges.
TwoStepPartition grading_of(const DualMonomial& m, int n);

/// (|T| - 1)! monomials prod_{v != min T} b_{f(v) v} with f(v) < v in T.
std::vector<DualMonomial> nbc_top_basis(const std::vector<int>& sites);

struct QA0BasisBlock {
  TwoStepPartition partition;
  std::vector<DualMonomial> elements;
};

/// Basis of QA_n^0 grouped by 2-step partition. Throws ResourceLimitError above `cap`.
std::vector<QA0BasisBlock> qa0_basis(int n, int cap = 7);

/// Counts of qa0_basis by degree.
std::vector<Integer> qa0_counts_by_degree(int n, int cap = 7);
/// counts[p][q]: degree p, q inner blocks (b-degree n - q).
std::vector<std::vector<Integer>> qa0_counts_refined(int n, int cap = 7);

/// For each degree: true if the basis elements are linearly independent
/// modulo the ideal of QA_n^0 and span the quotient.
bool qa0_basis_is_basis(int n, const Caps& caps = {});

struct OrthogonalityReport {
  std::size_t relation_rank = 0;
  std::size_t dual_relation_rank = 0;
  std::size_t space_dimension = 0;
  bool pairings_vanish = false;
  bool ok() const { return pairings_vanish && relation_rank + dual_relation_rank == space_dimension; }
};

/// Pairs degree-2 relations of `p` with those of `dual`, where `pairing`
/// sends each dual generator to the primal generator it is dual to.
OrthogonalityReport orthogonality_check(const Presentation& p, const Presentation& dual,
                                        const std::map<Generator, Generator>& pairing);

/// tr_n against A_n, or the split form of qtr_n against QA_n (a <-> rho, b <-> t).
OrthogonalityReport orthogonality_check(DualKind kind, int n);

}  // namespace ybalg
