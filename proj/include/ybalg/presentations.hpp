#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ybalg/exact.hpp"

namespace ybalg {

/// r: Yang-Baxter generators; t/rho: symmetric and antisymmetric parts of r;
/// a/b: odd generators of the quadratic duals.
enum class GenKind : std::uint8_t { R, T, Rho, A, B };

struct Generator {
  GenKind kind = GenKind::R;
  std::uint8_t i = 0;
  std::uint8_t j = 0;

  auto operator<=>(const Generator&) const = default;
};

std::string to_string(GenKind kind);
std::string to_string(const Generator& g);

using Word = std::vector<Generator>;
std::string to_string(const Word& w);

/// Finite Q-linear combination of words. Coefficients are never zero.
class Element {
 public:
  Element() = default;
  static Element one();
  static Element of(const Generator& g, const Rat& coeff = 1);
  static Element of(const Word& w, const Rat& coeff = 1);

  const std::map<Word, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Common word length, if every term has the same length.
  std::optional<std::size_t> degree() const;
  Rat coefficient(const Word& w) const;

  void add_term(const Word& w, const Rat& coeff);
  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rat& scalar);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= Rat(-1); }
  friend Element operator*(const Rat& s, Element a) { return a *= s; }
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element&, const Element&) = default;

 private:
  std::map<Word, Rat> terms_;
};

Element commutator(const Element& a, const Element& b);
std::string to_string(const Element& e);

/// How r(j,i) with j > i is read: as -r(i,j) (triangular) or as its own generator.
enum class RConvention { Triangular, Quasi };

/// A generator token as an element, normalizing symmetric/antisymmetric kinds:
/// t(j,i) = t(i,j), b(j,i) = b(i,j), rho(j,i) = -rho(i,j), a(j,i) = -a(i,j),
/// and r(j,i) = -r(i,j) under the triangular convention.
Element generator_element(GenKind kind, int i, int j, RConvention conv = RConvention::Triangular);

/// Parses `±c w ± c w ...` where words are tokens `r(i,j)`, `t(i,j)`,
/// `rho(i,j)`, `a(i,j)`, `b(i,j)` joined by `*` and coefficients are `p/q`.
Element parse_element(std::string_view text, RConvention conv = RConvention::Triangular);
Word parse_word(std::string_view text, RConvention conv = RConvention::Triangular);

enum class AlgebraKind { Tr, Qtr, Qtr0, Pb };
std::string to_string(AlgebraKind kind);
AlgebraKind parse_algebra_kind(std::string_view text);

/// Generator index set plus independent homogeneous degree-2 relations.
class Presentation {
 public:
  Presentation() = default;
  /// Keeps a maximal linearly independent prefix-greedy subset of `raw_relations`.
  Presentation(std::string name, int n, std::vector<Generator> generators,
               std::vector<Element> raw_relations);

  const std::string& name() const { return name_; }
  int n() const { return n_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<Element>& relations() const { return relations_; }
  std::size_t raw_relation_count() const { return raw_relation_count_; }
  std::size_t generator_count() const { return generators_.size(); }

  std::optional<std::size_t> index_of(const Generator& g) const;
  /// Letters of `w` as generator indices; throws if a letter is foreign.
  std::vector<std::uint32_t> letters(const Word& w) const;
  Word word(const std::vector<std::uint32_t>& letters) const;
  /// Coordinates of a homogeneous degree-`d` element in the base-m word
  /// index (column = letters read as base-m digits, most significant first).
  SparseVector<Rat> encode(const Element& e, std::size_t d) const;
  Element decode(const SparseVector<Rat>& v, std::size_t d) const;

 private:
  std::string name_;
  int n_ = 0;
  std::vector<Generator> generators_;
  std::map<Generator, std::size_t> index_;
  std::vector<Element> relations_;
  std::size_t raw_relation_count_ = 0;
};

struct PresentationOptions {
  /// Test-only negative control: flips the sign of one commutator inside
  /// the first Yang-Baxter relation of tr_n.
  bool inject_fault = false;
};

Presentation make_presentation(AlgebraKind kind, int n, const PresentationOptions& options = {});

/// qtr_n rewritten in the basis r_ij = t_ij + rho_ij (i < j), r_ji = t_ij - rho_ij.
Presentation make_qtr_split(int n);

/// [r_ij, r_ik] + [r_ij, r_jk] + [r_ik, r_jk] for an ordered triple of distinct sites.
Element cyb_element(int i, int j, int k, RConvention conv);

/// Images of source generators; every image is a degree-1 element.
using GeneratorMap = std::map<Generator, Element>;

Element substitute(const Element& e, const GeneratorMap& map);

/// t_ij -> r_ij + r_ji, from pb_n to qtr_n.
GeneratorMap psi_map(int n);

/// A partially defined function [n] -> [m]; image[x-1] == 0 means undefined at x.
struct PartialFunction {
  int n = 0;
  int m = 0;
  std::vector<int> image;
};

/// r_ij -> sum over i' in f^-1(i), j' in f^-1(j) of r_i'j', from (q)tr_m to (q)tr_n.
GeneratorMap cabling_map(const PartialFunction& f, AlgebraKind kind);

/// All partial functions [n] -> [m] (there are (m+1)^n of them).
std::vector<PartialFunction> all_partial_functions(int n, int m);

}  // namespace ybalg
