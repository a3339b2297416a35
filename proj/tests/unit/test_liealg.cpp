#include "doctest.h"
#include "oracles.hpp"
#include "ybalg/error.hpp"
#include "ybalg/liealg.hpp"
#include "ybalg/series.hpp"

using namespace ybalg;

TEST_SUITE("liealg") {
  TEST_CASE("free Lie algebra dimensions") {
    CHECK(free_lie_dim(2, 2) == 1);
    CHECK(free_lie_dim(3, 2) == 3);
    CHECK(free_lie_dim(2, 5) == 6);
    for (int m = 1; m <= 3; ++m)
      for (int d = 1; d <= 6; ++d) {
        CHECK(necklace_dim(m, d) == oracle::lyndon_count(m, d));
        CHECK(free_lie_dim_by_rank(m, d) == static_cast<std::size_t>(oracle::lyndon_count(m, d)));
      }
    CHECK_THROWS_AS(free_lie_dim_by_rank(2, 0), InvalidArgument);
  }

  TEST_CASE("graded Lie dimensions match Witt inversion") {
    const auto tr3 = make_presentation(AlgebraKind::Tr, 3);
    CHECK(lie_graded_dim(tr3, 2) == 2);
    std::vector<std::size_t> got;
    for (std::size_t d = 1; d <= 5; ++d) got.push_back(lie_graded_dim(tr3, d));
    CHECK(got == std::vector<std::size_t>{3, 2, 5, 10, 24});

    const auto qtr3 = make_presentation(AlgebraKind::Qtr, 3);
    got.clear();
    for (std::size_t d = 1; d <= 3; ++d) got.push_back(lie_graded_dim(qtr3, d));
    CHECK(got == std::vector<std::size_t>{6, 9, 34});

    const auto tr4 = make_presentation(AlgebraKind::Tr, 4);
    const auto witt = witt_inversion(u_hilbert(SeriesKind::Tr, 4, 4), 4);
    for (std::size_t d = 1; d <= 4; ++d) CHECK(witt[d - 1] == static_cast<unsigned long>(lie_graded_dim(tr4, d)));
  }

  TEST_CASE("left and right bracketing give the same ideal") {
    const auto tr4 = make_presentation(AlgebraKind::Tr, 4);
    for (std::size_t d = 2; d <= 4; ++d)
      CHECK(lie_ideal_rank(tr4, d, Bracketing::Left) == lie_ideal_rank(tr4, d, Bracketing::Right));
  }

  TEST_CASE("morphism checks") {
    const auto tr4 = make_presentation(AlgebraKind::Tr, 4);
    GeneratorMap id;
    for (const auto& g : tr4.generators()) id[g] = Element::of(g);
    CHECK(check_morphism(tr4, tr4, id));

    for (int n = 2; n <= 5; ++n)
      CHECK(check_morphism(make_presentation(AlgebraKind::Pb, n), make_presentation(AlgebraKind::Qtr, n), psi_map(n)));

    const auto pb3 = make_presentation(AlgebraKind::Pb, 3);
    GeneratorMap broken;
    for (const auto& g : pb3.generators()) broken[g] = generator_element(GenKind::R, g.i, g.j, RConvention::Quasi);
    CHECK_FALSE(check_morphism(pb3, make_presentation(AlgebraKind::Qtr, 3), broken));

    GeneratorMap missing = id;
    missing.erase(missing.begin());
    CHECK_THROWS_AS(check_morphism(tr4, tr4, missing), InvalidArgument);
    GeneratorMap quadratic = id;
    quadratic.begin()->second = parse_element("r(1,2)*r(1,3)");
    CHECK_THROWS_AS(check_morphism(tr4, tr4, quadratic), InvalidArgument);
  }

  TEST_CASE("every cabling map is a morphism") {
    for (auto kind : {AlgebraKind::Tr, AlgebraKind::Qtr})
      for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) {
          const auto src = make_presentation(kind, m);
          const auto dst = make_presentation(kind, n);
          for (const auto& f : all_partial_functions(n, m)) CHECK(check_morphism(src, dst, cabling_map(f, kind)));
        }
  }

  TEST_CASE("cabling detects a faulty relation") {
    std::size_t failures = 0;
    const auto src = make_presentation(AlgebraKind::Tr, 3, {true});
    const auto dst = make_presentation(AlgebraKind::Tr, 3, {true});
    for (const auto& f : all_partial_functions(3, 3)) failures += !check_morphism(src, dst, cabling_map(f, AlgebraKind::Tr));
    CHECK(failures > 0);
  }

  TEST_CASE("qtr0 and qtr have equal graded dimensions") {
    CHECK(qtr0_dims_equal_qtr(2, 5));
    CHECK(qtr0_dims_equal_qtr(3, 4));
    CHECK(qtr0_dims_equal_qtr(4, 3));
  }
}
