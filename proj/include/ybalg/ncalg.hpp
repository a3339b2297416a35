#pragma once

// Graded pieces of quadratic algebras by relation-span rank, and the
// legal-monomial rewriting system for U(tr_n).

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ybalg/exact.hpp"
#include "ybalg/presentations.hpp"

namespace ybalg {

struct Caps {
  std::size_t max_columns = 300000;
  std::size_t max_words = 2000000;
  std::size_t max_cells = 200000;
};

/// Degree-d slice of the two-sided ideal generated by the relations of `p`,
/// spanned by x * rel * y with |x| + |y| = d - 2.
class RelationSpan {
 public:
  RelationSpan(const Presentation& p, std::size_t d, const Caps& caps = {});

  std::size_t degree() const { return d_; }
  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return echelon_.rank(); }
  /// Dimension of the degree-d component of the quotient algebra.
  std::size_t quotient_dimension() const { return columns_ - rank(); }
  bool contains(const Element& e) const;
  /// Rank of the span enlarged by `extra` (each homogeneous of this degree).
  std::size_t rank_with(const std::vector<Element>& extra) const;

 private:
  Presentation p_;
  std::size_t d_;
  std::size_t columns_;
  RowEchelon echelon_;
};

/// Checks m^d against the column cap, throwing ResourceLimitError.
std::size_t slice_columns(std::size_t m, std::size_t d, const Caps& caps);

/// Rows x * rel * y of the ideal slice (unsorted, not deduplicated).
std::vector<SparseVector<Rat>> ideal_rows(const Presentation& p, std::size_t d, const Caps& caps = {});

std::size_t graded_dimension(const Presentation& p, std::size_t d, const Caps& caps = {});

/// Largest degree the acceptance ranges ask for, per algebra and n.
std::optional<std::size_t> default_degree_cap(AlgebraKind kind, int n);

enum class Convention { Pro1, Sec6 };
std::string to_string(Convention c);
Convention parse_convention(std::string_view text);

enum class Strategy { Leftmost, Rightmost, Random };

struct RuleTerm {
  int coeff;
  std::uint32_t first;
  std::uint32_t second;
};

/// Rewriting rules on words in r_ij (i < j). Letters are indices into the
/// lexicographic pair list r_12, r_13, ..., r_(n-1)n.
class RewriteSystem {
 public:
  /// `ordering` gives N(i,j) per lex pair index; empty means N = lex index.
  /// Throws unless N(i,j) < N(j,k) for all i < j < k and N is injective.
  RewriteSystem(int n, Convention conv, std::vector<int> ordering = {});

  int n() const { return n_; }
  Convention convention() const { return conv_; }
  std::size_t letter_count() const { return pairs_.size(); }
  std::pair<int, int> pair(std::uint32_t letter) const { return pairs_[letter]; }
  std::uint32_t letter(int i, int j) const;

  bool forbidden(std::uint32_t a, std::uint32_t b) const { return forbidden_[a * pairs_.size() + b]; }
  bool is_legal(const std::vector<std::uint32_t>& w) const;
  /// Replacement terms for the forbidden factor (a, b); empty if (a, b) is allowed.
  const std::vector<RuleTerm>& rule(std::uint32_t a, std::uint32_t b) const;

  /// (stretch, weight); weight is taken on the reversed word under sec6.
  std::pair<long, long> measure(const std::vector<std::uint32_t>& w) const;

  std::vector<std::uint32_t> letters(const Word& w) const;
  Word word(const std::vector<std::uint32_t>& letters) const;

 private:
  int n_;
  Convention conv_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> order_;
  std::vector<char> forbidden_;
  std::vector<std::vector<RuleTerm>> rules_;
};

struct NormalFormOptions {
  Strategy strategy = Strategy::Leftmost;
  std::uint64_t seed = 1;
  /// Assert that every rewrite step increases (stretch, weight) on each produced word.
  bool check_measure = true;
};

/// Rewrites every word to a combination of legal words. Rejects elements
/// that are not over the generators r_ij (i < j <= n).
Element normal_form(const Element& e, const RewriteSystem& rs, const NormalFormOptions& options = {});

/// True if e - normal_form(e) lies in the relation ideal of tr_n, degree by degree.
bool normal_form_is_sound(const Element& e, const Element& nf, int n, const Caps& caps = {});

Integer count_legal(int n, std::size_t d, Convention conv);
/// Lexicographically sorted; throws ResourceLimitError above `cap` words.
std::vector<Word> enumerate_legal(int n, std::size_t d, Convention conv, std::size_t cap = 2000000);

}  // namespace ybalg
