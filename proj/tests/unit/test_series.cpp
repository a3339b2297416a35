#include "doctest.h"
#include "oracles.hpp"
#include "ybalg/error.hpp"
#include "ybalg/series.hpp"

using namespace ybalg;

namespace {

std::vector<std::string> strs(const std::vector<oracle::i64>& v) {
  std::vector<std::string> out;
  for (auto x : v) out.push_back(std::to_string(x));
  return out;
}

std::vector<std::string> strs(const std::vector<Integer>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

/// D[p][q] by enumerating 2-step partitions: outer set partition, then a set
/// partition of each outer block; weight prod (|inner| - 1)!.
std::vector<std::vector<oracle::i64>> two_step_counts(int n) {
  std::vector<std::vector<oracle::i64>> d(n, std::vector<oracle::i64>(n + 1, 0));
  oracle::for_each_rgs(n, [&](const std::vector<int>& outer_rgs) {
    const auto outer = oracle::blocks_of(outer_rgs);
    // iterate over all choices of inner partitions, block by block
    std::function<void(std::size_t, int, oracle::i64)> rec = [&](std::size_t b, int inner, oracle::i64 w) {
      if (b == outer.size()) {
        d[n - outer.size()][inner] += w;
        return;
      }
      const auto& blk = outer[b];
      oracle::for_each_rgs(static_cast<int>(blk.size()), [&](const std::vector<int>& rgs) {
        oracle::i64 weight = 1;
        const auto parts = oracle::blocks_of(rgs);
        for (const auto& p : parts) weight *= oracle::fact(static_cast<oracle::i64>(p.size()) - 1);
        rec(b + 1, inner + static_cast<int>(parts.size()), w * weight);
      });
    };
    rec(0, 0, 1);
  });
  return d;
}

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("polynomial arithmetic") {
    const auto a = PolySeries::from_integers({1, -3, 1});
    const auto b = PolySeries::from_integers({1, 1});
    CHECK(a * b == PolySeries::from_integers({1, -2, -2, 1}));
    CHECK(a + b == PolySeries::from_integers({2, -2, 1}));
    CHECK((a - a).is_zero());
    CHECK(a.negate_variable() == PolySeries::from_integers({1, 3, 1}));
    CHECK(a.evaluate(Rat(2)) == -1);
    CHECK(a.degree() == 2);
    CHECK(coefficient_strings(reciprocal(a, 5)) == std::vector<std::string>{"1", "3", "8", "21", "55", "144"});
    CHECK_THROWS_AS(reciprocal(PolySeries::from_integers({0, 1}), 3), InvalidArgument);
  }

  TEST_CASE("set partition numbers") {
    CHECK(stirling2(4, 2) == 7);
    CHECK(lah(3, 2) == 6);
    CHECK(bell(0) == 1);
    CHECK(bell(5) == 52);
    CHECK(stirling1(4, 2) == 11);
    for (int n = 0; n <= 7; ++n) {
      const auto s = oracle::stirling2_row(n);
      const auto l = oracle::lah_row(n);
      Integer b = 0;
      for (int k = 0; k <= n; ++k) {
        CHECK(stirling2(n, k) == s[k]);
        CHECK(lah(n, k) == l[k]);
        b += stirling2(n, k);
      }
      CHECK(bell(n) == b);
    }
  }

  TEST_CASE("Hilbert polynomials") {
    CHECK(p_poly(SeriesKind::Tr, 3) == PolySeries::from_integers({1, 3, 1}));
    CHECK(p_poly(SeriesKind::Qtr, 2) == PolySeries::from_integers({1, 2}));
    CHECK(p_poly(SeriesKind::Tr, 1) == PolySeries::from_integers({1}));
    for (int n = 1; n <= 7; ++n) {
      CHECK(coefficient_strings(p_poly(SeriesKind::Tr, n)) == strs(oracle::hilbert_tr(n)));
      CHECK(coefficient_strings(p_poly(SeriesKind::Qtr, n)) == strs(oracle::hilbert_qtr(n)));
    }
  }

  TEST_CASE("generating function expansion reproduces the closed forms") {
    CHECK(p_poly_via_egf(SeriesKind::Tr, 4) == PolySeries::from_integers({1, 6, 7, 1}));
    CHECK(p_poly_via_egf(SeriesKind::Qtr, 3) == PolySeries::from_integers({1, 6, 6}));
    for (int n = 0; n <= 8; ++n) {
      CHECK(p_poly_via_egf(SeriesKind::Tr, n) == p_poly(SeriesKind::Tr, n));
      CHECK(p_poly_via_egf(SeriesKind::Qtr, n) == p_poly(SeriesKind::Qtr, n));
    }
    CHECK_THROWS_AS(p_poly_via_egf(SeriesKind::Tr, 11), ResourceLimitError);
  }

  TEST_CASE("enveloping algebra series") {
    CHECK(coefficient_strings(u_hilbert(SeriesKind::Tr, 3, 5)) ==
          std::vector<std::string>{"1", "3", "8", "21", "55", "144"});
    CHECK(coefficient_strings(u_hilbert(SeriesKind::Tr, 4, 5)) ==
          std::vector<std::string>{"1", "6", "29", "133", "601", "2704"});
    CHECK(coefficient_strings(u_hilbert(SeriesKind::Tr, 2, 6)) == std::vector<std::string>(7, "1"));
    for (int n = 1; n <= 6; ++n) {
      CHECK(coefficient_strings(u_hilbert(SeriesKind::Tr, n, 7), 7) ==
            strs(oracle::inverse_alternating(oracle::hilbert_tr(n), 7)));
      CHECK(coefficient_strings(u_hilbert(SeriesKind::Qtr, n, 7), 7) ==
            strs(oracle::inverse_alternating(oracle::hilbert_qtr(n), 7)));
    }
  }

  TEST_CASE("Witt inversion") {
    CHECK(strs(witt_inversion(reciprocal(PolySeries::from_integers({1, -2}), 5), 5)) ==
          std::vector<std::string>{"2", "1", "2", "3", "6"});
    const auto abelian = reciprocal(PolySeries::from_integers({1, -3, 3, -1}), 6);
    CHECK(strs(witt_inversion(abelian, 6)) == std::vector<std::string>{"3", "0", "0", "0", "0", "0"});
    CHECK(strs(witt_inversion(u_hilbert(SeriesKind::Tr, 3, 5), 5)) ==
          std::vector<std::string>{"3", "2", "5", "10", "24"});
    CHECK(strs(witt_inversion(u_hilbert(SeriesKind::Qtr, 3, 3), 3)) == std::vector<std::string>{"6", "9", "34"});
    CHECK_THROWS_AS(witt_inversion(PolySeries(std::vector<Rat>{Rat(1), Rat(1, 2)}), 2), InvalidArgument);
  }

  TEST_CASE("Witt inversion agrees with peeling and with Lyndon counts") {
    for (int m = 1; m <= 3; ++m) {
      const auto free_series = reciprocal(PolySeries::from_integers({1, -m}), 7);
      const auto l = witt_inversion(free_series, 7);
      for (int d = 1; d <= 7; ++d) CHECK(l[d - 1] == oracle::lyndon_count(m, d));
    }
    for (int n = 2; n <= 5; ++n)
      for (auto kind : {SeriesKind::Tr, SeriesKind::Qtr}) {
        const auto h = u_hilbert(kind, n, 6);
        const auto p = kind == SeriesKind::Tr ? oracle::hilbert_tr(n) : oracle::hilbert_qtr(n);
        CHECK(strs(witt_inversion(h, 6)) == strs(oracle::witt_by_peeling(oracle::inverse_alternating(p, 6), 6)));
        CHECK(pbw_series(witt_inversion(h, 6), 6) == h);
      }
  }

  TEST_CASE("trivariate refinement") {
    CHECK(trivariate_F(1) == std::vector<std::vector<Integer>>{{0, 1}});
    CHECK(trivariate_F(2) == std::vector<std::vector<Integer>>{{0, 0, 1}, {0, 1, 1}});
    for (int n = 1; n <= 6; ++n) {
      const auto d = trivariate_F(n);
      const auto p = p_poly(SeriesKind::Qtr, n);
      for (std::size_t r = 0; r < d.size(); ++r) {
        Integer sum = 0;
        for (const auto& x : d[r]) sum += x;
        CHECK(Rat(sum) == p[r]);
      }
      if (n <= 5) {
        const auto oracle_d = two_step_counts(n);
        REQUIRE(d.size() == oracle_d.size());
        for (std::size_t r = 0; r < d.size(); ++r) CHECK(strs(d[r]) == strs(oracle_d[r]));
      }
    }
  }
}
