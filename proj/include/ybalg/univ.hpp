#pragma once

// Basis labels (k, l, sigma) of the degree-N part of the universal tensor
// algebra attached to words in the r_ij, and exhaustive checks that legal
// words get distinct labels.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ybalg/presentations.hpp"

namespace ybalg {

struct UnivLabel {
  /// k[f-1] = number of a's in factors 1..f; k.back() = N.
  std::vector<int> k;
  /// l[f-1] = number of b's in factors 1..f; l.back() = N.
  std::vector<int> l;
  /// One-line notation, values 1..N.
  std::vector<int> sigma;

  friend auto operator<=>(const UnivLabel&, const UnivLabel&) = default;
};

std::string to_string(const UnivLabel& label);

/// Labels every word in r_ij (i < j <= n) by placing the a of r_ij in factor i
/// and its b in factor j, in word order within each factor, without checking
/// that a's precede b's.
UnivLabel label_word(const Word& w, int n);

/// Per-factor condition: every a in factor i occurs in w before every b in factor i.
bool satisfies_ab_condition(const Word& w, int n);

/// label_word restricted to sec6-legal words satisfying the a/b condition.
/// Throws InvalidArgument otherwise.
UnivLabel alpha(const Word& w, int n);

/// Drops min I_i and min J_j (the placement of a leading r_ij). Returns false
/// if the label does not have the shape required for that.
bool peel(const UnivLabel& label, int i, int j, UnivLabel& out);

struct InjectivityReport {
  int n = 0;
  std::size_t degree = 0;
  std::size_t legal_words = 0;
  std::size_t distinct_labels = 0;
  /// Legal words violating the a/b condition.
  std::size_t ab_violations = 0;
  /// Distinct labels among the words satisfying the a/b condition (the domain of alpha).
  std::size_t distinct_labels_ab = 0;
  /// First colliding pair of words, if any.
  std::vector<std::pair<Word, Word>> collisions;

  bool injective() const { return legal_words == distinct_labels; }
};

struct DisjointnessReport {
  int n = 0;
  std::size_t degree = 0;
  /// Class sizes keyed by the first letter (i, j).
  std::map<std::pair<int, int>, std::size_t> class_sizes;
  /// Labels shared between words of different classes.
  std::size_t cross_class_collisions = 0;
  /// Words r_ij x in the domain of alpha whose label does not peel back to the label of x.
  std::size_t peeling_failures = 0;
  std::size_t ab_violations = 0;

  bool ok() const { return cross_class_collisions == 0 && peeling_failures == 0; }
};

/// Both checks label every sec6-legal word with label_word; a/b violators are
/// counted but not excluded. Throws ResourceLimitError above `cap` words.
InjectivityReport check_injectivity(int n, std::size_t degree, std::size_t cap = 2000000);
DisjointnessReport check_rho_disjointness(int n, std::size_t degree, std::size_t cap = 2000000);

}  // namespace ybalg
