#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ybalg/error.hpp"
#include "ybalg/ncalg.hpp"

using namespace ybalg;

namespace {

std::vector<std::size_t> dims(AlgebraKind kind, int n, std::size_t top) {
  const auto p = make_presentation(kind, n);
  std::vector<std::size_t> out;
  for (std::size_t d = 0; d <= top; ++d) out.push_back(graded_dimension(p, d));
  return out;
}

template <class F>
std::vector<std::size_t> oracle_dims(F relations, int n, int top) {
  const auto [m, rels] = relations(n);
  std::vector<std::size_t> out;
  for (int d = 0; d <= top; ++d) out.push_back(oracle::quotient_dim(m, rels, d));
  return out;
}

std::vector<std::pair<int, int>> pairs_of(const Word& w) {
  std::vector<std::pair<int, int>> out;
  for (const auto& g : w) out.push_back({g.i, g.j});
  return out;
}

Element random_element(int n, std::mt19937_64& rng, int max_len) {
  std::vector<Generator> letters;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) letters.push_back({GenKind::R, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)});
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::uniform_int_distribution<int> len(1, max_len), coeff(-4, 4);
  Element e;
  for (int t = 0; t < 4; ++t) {
    Word w;
    for (int s = len(rng); s > 0; --s) w.push_back(letters[pick(rng)]);
    if (int c = coeff(rng)) e.add_term(w, Rat(c));
  }
  return e;
}

}  // namespace

TEST_SUITE("ncalg") {
  TEST_CASE("graded dimensions of small pieces") {
    CHECK(graded_dimension(make_presentation(AlgebraKind::Tr, 3), 2) == 8);
    CHECK(graded_dimension(make_presentation(AlgebraKind::Qtr, 2), 3) == 8);
    CHECK(graded_dimension(make_presentation(AlgebraKind::Tr, 4), 3) == 133);
    CHECK(graded_dimension(make_presentation(AlgebraKind::Tr, 2), 7) == 1);
  }

  TEST_CASE("graded dimensions agree with a dense modular oracle") {
    const auto tr3 = oracle_dims(oracle::tr_relations, 3, 6);
    CHECK(tr3 == std::vector<std::size_t>{1, 3, 8, 21, 55, 144, 377});
    CHECK(dims(AlgebraKind::Tr, 3, 6) == tr3);

    const auto tr4 = oracle_dims(oracle::tr_relations, 4, 4);
    CHECK(tr4 == std::vector<std::size_t>{1, 6, 29, 133, 601});
    CHECK(dims(AlgebraKind::Tr, 4, 4) == tr4);

    const auto qtr3 = oracle_dims(oracle::qtr_relations, 3, 4);
    CHECK(qtr3 == std::vector<std::size_t>{1, 6, 30, 144, 684});
    CHECK(dims(AlgebraKind::Qtr, 3, 4) == qtr3);
  }

  TEST_CASE("larger graded dimensions") {
    CHECK(graded_dimension(make_presentation(AlgebraKind::Tr, 4), 5) == 2704);
    CHECK(graded_dimension(make_presentation(AlgebraKind::Tr, 5), 3) ==
          oracle::quotient_dim(oracle::tr_relations(5).first, oracle::tr_relations(5).second, 3));
  }

  TEST_CASE("column cap is enforced") {
    Caps caps;
    caps.max_columns = 100;
    CHECK_THROWS_AS(graded_dimension(make_presentation(AlgebraKind::Tr, 4), 3, caps), ResourceLimitError);
  }

  TEST_CASE("default degree caps") {
    CHECK(default_degree_cap(AlgebraKind::Tr, 3) == 8u);
    CHECK(default_degree_cap(AlgebraKind::Tr, 4) == 6u);
    CHECK(default_degree_cap(AlgebraKind::Tr, 5) == 4u);
    CHECK(default_degree_cap(AlgebraKind::Qtr, 3) == 5u);
    CHECK(default_degree_cap(AlgebraKind::Qtr, 4) == 4u);
  }

  TEST_CASE("relation span membership") {
    RelationSpan span(make_presentation(AlgebraKind::Tr, 3), 3);
    CHECK(span.contains(parse_element("r(1,2)*r(1,2)*r(1,3) - r(1,2)*r(1,3)*r(1,2) + r(1,2)*r(1,2)*r(2,3) - "
                                      "r(1,2)*r(2,3)*r(1,2) + r(1,2)*r(1,3)*r(2,3) - r(1,2)*r(2,3)*r(1,3)")));
    CHECK_FALSE(span.contains(parse_element("r(1,2)*r(1,3)*r(2,3)")));
  }

  TEST_CASE("normal forms of small words") {
    RewriteSystem rs3(3, Convention::Pro1);
    CHECK(normal_form(parse_element("r(1,2)*r(1,3)"), rs3) == parse_element("r(1,2)*r(1,3)"));
    CHECK(normal_form(parse_element("r(2,3)*r(1,2)"), rs3) ==
          parse_element("r(1,2)*r(2,3) + r(1,2)*r(1,3) - r(1,3)*r(1,2) + r(1,3)*r(2,3) - r(2,3)*r(1,3)"));
    RewriteSystem rs4(4, Convention::Pro1);
    CHECK(normal_form(parse_element("r(3,4)*r(1,2)"), rs4) == parse_element("r(1,2)*r(3,4)"));
    RewriteSystem sec(3, Convention::Sec6);
    const Element e = parse_element("r(1,2)*r(2,3)");
    const Element nf = normal_form(e, sec);
    CHECK(nf != e);
    CHECK(normal_form_is_sound(e, nf, 3));
  }

  TEST_CASE("normal form rejects foreign letters") {
    RewriteSystem rs(3, Convention::Pro1);
    CHECK_THROWS_AS(normal_form(parse_element("r(1,4)"), rs), InvalidArgument);
    CHECK_THROWS_AS(normal_form(parse_element("t(1,2)"), rs), InvalidArgument);
  }

  TEST_CASE("orderings must respect N(i,j) < N(j,k)") {
    CHECK_NOTHROW(RewriteSystem(3, Convention::Pro1, {0, 1, 2}));
    CHECK_THROWS_AS(RewriteSystem(3, Convention::Pro1, {2, 1, 0}), InvalidArgument);
    CHECK_THROWS_AS(RewriteSystem(3, Convention::Pro1, {0, 0, 2}), InvalidArgument);
  }

  TEST_CASE("normal forms on tr_3 are idempotent, strategy independent and sound") {
    std::mt19937_64 rng(3);
    for (auto conv : {Convention::Pro1, Convention::Sec6}) {
      RewriteSystem rs(3, conv);
      for (int trial = 0; trial < 40; ++trial) {
        const Element e = random_element(3, rng, 5);
        const Element nf = normal_form(e, rs);
        for (const auto& [w, c] : nf.terms()) CHECK(rs.is_legal(rs.letters(w)));
        CHECK(normal_form(nf, rs) == nf);
        CHECK(normal_form(e, rs, {Strategy::Rightmost}) == nf);
        CHECK(normal_form(e, rs, {Strategy::Random, static_cast<std::uint64_t>(trial)}) == nf);
        CHECK(normal_form_is_sound(e, nf, 3));
      }
    }
  }

  TEST_CASE("rewriting on tr_4 depends on the order of rule application") {
    // Recorded finding: the two-letter rules are not confluent for n = 4.
    RewriteSystem rs(4, Convention::Pro1);
    const Element e = parse_element("r(3,4)*r(2,3)*r(1,2)");
    const Element left = normal_form(e, rs, {Strategy::Leftmost});
    const Element right = normal_form(e, rs, {Strategy::Rightmost});
    CHECK(left != right);
    CHECK(normal_form_is_sound(e, left, 4));
    CHECK(normal_form_is_sound(e, right, 4));
  }

  TEST_CASE("legal word counts") {
    CHECK(count_legal(3, 2, Convention::Pro1) == 8);
    CHECK(count_legal(4, 2, Convention::Pro1) == 29);
    CHECK(count_legal(5, 0, Convention::Sec6) == 1);
    CHECK(count_legal(2, 9, Convention::Pro1) == 1);
    CHECK(count_legal(3, 5, Convention::Pro1) == 144);
    CHECK(count_legal(3, 8, Convention::Sec6) == 2584);
  }

  TEST_CASE("legal word counts exceed the dimensions of U(tr_4) from degree 3") {
    // Recorded finding: 134 legal words against dimension 133.
    CHECK(count_legal(4, 3, Convention::Pro1) == 134);
    CHECK(count_legal(4, 4, Convention::Pro1) == 613);
    CHECK(count_legal(4, 3, Convention::Sec6) == 134);
  }

  TEST_CASE("enumerated legal words match a brute-force filter") {
    for (auto conv : {Convention::Pro1, Convention::Sec6}) {
      const std::string name = to_string(conv);
      for (int n = 2; n <= 4; ++n)
        for (int d = 0; d <= 4; ++d) {
          const auto words = enumerate_legal(n, d, conv);
          const auto expected = oracle::legal_words(n, d, name);
          REQUIRE(words.size() == expected.size());
          for (std::size_t s = 0; s < words.size(); ++s) CHECK(pairs_of(words[s]) == expected[s]);
          CHECK(count_legal(n, d, conv) == static_cast<unsigned long>(words.size()));
        }
    }
    CHECK(enumerate_legal(2, 3, Convention::Pro1) == std::vector<Word>{parse_word("r(1,2)*r(1,2)*r(1,2)")});
    const auto sec = enumerate_legal(3, 2, Convention::Sec6);
    CHECK(sec.size() == 8);
    CHECK(std::find(sec.begin(), sec.end(), parse_word("r(1,2)*r(2,3)")) == sec.end());
  }

  TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS(enumerate_legal(4, 4, Convention::Pro1, 100), ResourceLimitError);
  }
}
