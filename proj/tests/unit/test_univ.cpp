#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "ybalg/error.hpp"
#include "ybalg/ncalg.hpp"
#include "ybalg/univ.hpp"

using namespace ybalg;

namespace {

std::vector<std::pair<int, int>> pairs_of(const Word& w) {
  std::vector<std::pair<int, int>> out;
  for (const auto& g : w) out.push_back({g.i, g.j});
  return out;
}

std::string strip_mark(std::string s) { return !s.empty() && s[0] == '!' ? s.substr(1) : s; }

}  // namespace

TEST_SUITE("univ") {
  TEST_CASE("worked example with six letters") {
    const auto label = alpha(parse_word("r(3,4)*r(2,4)*r(2,3)*r(1,2)*r(1,3)*r(1,4)"), 4);
    CHECK(label.k == std::vector<int>{3, 5, 6, 6});
    CHECK(label.l == std::vector<int>{0, 1, 3, 6});
    CHECK(label.sigma == std::vector<int>{1, 5, 2, 6, 4, 3});
    CHECK(oracle::tensor_display(4, {{3, 4}, {2, 4}, {2, 3}, {1, 2}, {1, 3}, {1, 4}}) ==
          "x1x2x3|x4x5|x6| / |x1|x5x2|x6x4x3");
  }

  TEST_CASE("small labels") {
    const auto one = alpha(parse_word("r(1,2)"), 2);
    CHECK(one.k == std::vector<int>{1, 1});
    CHECK(one.l == std::vector<int>{0, 1});
    CHECK(one.sigma == std::vector<int>{1});
    const auto two = alpha(parse_word("r(1,3)*r(1,2)"), 3);
    CHECK(two.k == std::vector<int>{2, 2, 2});
    CHECK(two.l == std::vector<int>{0, 1, 2});
    CHECK(two.sigma == std::vector<int>{2, 1});
    CHECK(to_string(two) == "k=(2,2,2) l=(0,1,2) sigma=(2,1)");
    const auto empty = alpha({}, 3);
    CHECK(empty.k == std::vector<int>{0, 0, 0});
    CHECK(empty.sigma.empty());
  }

  TEST_CASE("alpha rejects words outside its domain") {
    CHECK_THROWS_AS(alpha(parse_word("r(1,2)*r(2,3)"), 3), InvalidArgument);
    CHECK_THROWS_AS(alpha(parse_word("r(1,2)*r(3,4)"), 4), InvalidArgument);
    CHECK_THROWS_AS(alpha(parse_word("r(1,4)"), 3), InvalidArgument);
    // Legal, but the a of r_23 sits after the b of r_12 in factor 2.
    CHECK_THROWS_AS(alpha(parse_word("r(1,2)*r(1,3)*r(2,3)"), 3), InvalidArgument);
    CHECK_NOTHROW(label_word(parse_word("r(1,2)*r(1,3)*r(2,3)"), 3));
  }

  TEST_CASE("some legal words violate the a/b condition") {
    // Recorded finding: the condition fails on legal words from length 3.
    const Word w = parse_word("r(1,2)*r(1,3)*r(2,3)");
    RewriteSystem rs(3, Convention::Sec6);
    CHECK(rs.is_legal(rs.letters(w)));
    CHECK_FALSE(satisfies_ab_condition(w, 3));
    CHECK(check_injectivity(3, 2).ab_violations == 0);
    CHECK(check_injectivity(3, 3).ab_violations == 1);
    CHECK(check_injectivity(3, 4).ab_violations == 7);
    CHECK(check_injectivity(3, 5).ab_violations == 32);
    CHECK(check_injectivity(4, 3).ab_violations == 5);
    CHECK(check_injectivity(4, 4).ab_violations == 69);
  }

  TEST_CASE("labels agree with the tensor placement oracle") {
    for (int n = 2; n <= 4; ++n)
      for (int d = 0; d <= 4; ++d)
        for (const auto& w : enumerate_legal(n, d, Convention::Sec6)) {
          const std::string display = oracle::tensor_display(n, pairs_of(w));
          CHECK((display[0] != '!') == satisfies_ab_condition(w, n));
          // rebuild the display from the label
          const auto label = label_word(w, n);
          std::string left, right;
          int a = 0;
          for (int f = 0; f < n; ++f) {
            for (; a < label.k[f]; ++a) left += "x" + std::to_string(a + 1);
            for (int b = f ? label.l[f - 1] : 0; b < label.l[f]; ++b) right += "x" + std::to_string(label.sigma[b]);
            left += f + 1 < n ? "|" : "";
            right += f + 1 < n ? "|" : "";
          }
          CHECK(left + " / " + right == strip_mark(display));
        }
  }

  TEST_CASE("injectivity where it holds") {
    CHECK(check_injectivity(2, 4).injective());
    const std::vector<std::size_t> sizes{1, 3, 8, 21, 55, 144};
    for (std::size_t d = 0; d <= 5; ++d) {
      const auto r = check_injectivity(3, d);
      CHECK(r.legal_words == sizes[d]);
      CHECK(r.injective());
      CHECK(r.collisions.empty());
    }
  }

  TEST_CASE("labels collide for n = 4") {
    // Recorded finding: 134 legal words but 133 labels; each collision involves an a/b violator.
    const auto r3 = check_injectivity(4, 3);
    CHECK(r3.legal_words == 134);
    CHECK(r3.distinct_labels == 133);
    REQUIRE(r3.collisions.size() == 1);
    CHECK(satisfies_ab_condition(r3.collisions[0].first, 4) != satisfies_ab_condition(r3.collisions[0].second, 4));
    CHECK(r3.distinct_labels_ab == r3.legal_words - r3.ab_violations);
    const auto r4 = check_injectivity(4, 4);
    CHECK(r4.legal_words == 613);
    CHECK(r4.distinct_labels == 601);
    CHECK(r4.distinct_labels_ab == r4.legal_words - r4.ab_violations);
  }

  TEST_CASE("first-letter classes") {
    const auto two = check_rho_disjointness(2, 3);
    CHECK(two.class_sizes.size() == 1);
    CHECK(two.ok());
    const auto three = check_rho_disjointness(3, 2);
    std::size_t total = 0;
    for (const auto& [first, size] : three.class_sizes) total += size;
    CHECK(total == 8);
    CHECK(three.ok());
    for (std::size_t d = 1; d <= 5; ++d) CHECK(check_rho_disjointness(3, d).ok());
    const auto four = check_rho_disjointness(4, 3);
    CHECK(four.peeling_failures == 0);
    CHECK(four.cross_class_collisions == 1);
  }

  TEST_CASE("peeling inverts the leading placement") {
    const Word w = parse_word("r(1,3)*r(1,2)");
    UnivLabel peeled;
    REQUIRE(peel(label_word(w, 3), 1, 3, peeled));
    CHECK(peeled == label_word(parse_word("r(1,2)"), 3));
    CHECK_FALSE(peel(label_word(w, 3), 1, 2, peeled));
  }
}
