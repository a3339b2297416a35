#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ybalg/error.hpp"
#include "ybalg/exact.hpp"

using namespace ybalg;

namespace {

IntMatrix from_dense(const std::vector<std::vector<long>>& a) {
  IntMatrix m(a.size(), a.empty() ? 0 : a[0].size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a[r].size(); ++c)
      if (a[r][c]) m.add(r, c, Integer(a[r][c]));
  return m;
}

std::vector<std::string> strs(const std::vector<Integer>& v) {
  std::vector<std::string> out;
  for (const auto& z : v) out.push_back(to_string(z));
  return out;
}

}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("rationals parse to canonical form") {
    CHECK(to_string(parse_rat("3/6")) == "1/2");
    CHECK(to_string(parse_rat("-4/2")) == "-2");
    CHECK(to_string(parse_rat("0/7")) == "0");
    CHECK(to_string(make_rat(6, -4)) == "-3/2");
    CHECK_THROWS_AS(parse_rat("1/0"), InvalidArgument);
    CHECK_THROWS_AS(parse_rat("x"), InvalidArgument);
  }

  TEST_CASE("sparse vectors canonicalize") {
    SparseVector<Rat> v{{3, Rat(1)}, {1, Rat(2)}, {3, Rat(-1)}, {0, Rat(0)}};
    canonicalize(v);
    REQUIRE(v.size() == 1);
    CHECK(v[0].col == 1);
    CHECK(v[0].value == 2);
  }

  TEST_CASE("row echelon membership") {
    RowEchelon ech(3);
    CHECK(ech.insert({{0, Rat(1)}, {1, Rat(1)}}));
    CHECK(ech.insert({{1, Rat(1)}, {2, Rat(1)}}));
    CHECK_FALSE(ech.insert({{0, Rat(2)}, {2, Rat(-2)}}));
    CHECK(ech.rank() == 2);
    CHECK(ech.contains({{0, Rat(1)}, {2, Rat(-1)}}));
    CHECK_FALSE(ech.contains({{2, Rat(1)}}));
    CHECK(ech.reduce({{0, Rat(3)}, {1, Rat(3)}}).empty());
  }

  TEST_CASE("rank of small matrices") {
    CHECK(rank(from_dense({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(from_dense({{1, 0, 1}, {0, 1, 1}, {1, 1, 2}})) == 2);
    CHECK(rank(from_dense({{0, 0}, {0, 0}})) == 0);
    CHECK(rank(IntMatrix(0, 5)) == 0);
  }

  TEST_CASE("rank agrees with a modular oracle and with the transpose") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> entry(-2, 2), dim(1, 9);
    for (int trial = 0; trial < 60; ++trial) {
      const int r = dim(rng), c = dim(rng);
      std::vector<std::vector<long>> a(r, std::vector<long>(c));
      std::vector<std::vector<oracle::u64>> a_mod(r, std::vector<oracle::u64>(c));
      // sparse-ish with a built-in dependency
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) a[i][j] = (rng() % 3 == 0) ? entry(rng) : 0;
      if (r > 2)
        for (int j = 0; j < c; ++j) a[r - 1][j] = a[0][j] - 3 * a[1][j];
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) a_mod[i][j] = oracle::mod(a[i][j]);
      const auto m = from_dense(a);
      CHECK(rank(m) == oracle::rank_mod_p(a_mod));
      CHECK(rank(m) == rank(m.transpose()));
      CHECK(rank(to_rational(m)) == rank(m));
    }
  }

  TEST_CASE("smith normal form") {
    CHECK(strs(smith_normal_form(from_dense({{2, 4}, {6, 8}}))) == std::vector<std::string>{"2", "4"});
    CHECK(strs(smith_normal_form(from_dense({{2, 0}, {0, 3}}))) == std::vector<std::string>{"1", "6"});
    CHECK(strs(smith_normal_form(from_dense({{1, -1}, {-1, 1}}))) == std::vector<std::string>{"1"});
    CHECK(smith_normal_form(from_dense({{0, 0}})).empty());
  }

  TEST_CASE("smith factors divide each other and multiply to the determinant") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int trial = 0; trial < 80; ++trial) {
      std::vector<std::vector<long>> a(3, std::vector<long>(3));
      for (auto& row : a)
        for (auto& x : row) x = entry(rng);
      const long det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                       a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                       a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
      const auto f = smith_normal_form(from_dense(a));
      CHECK(f.size() == rank(from_dense(a)));
      for (std::size_t k = 1; k < f.size(); ++k) CHECK(f[k] % f[k - 1] == 0);
      if (det != 0) {
        Integer prod = 1;
        for (const auto& z : f) prod *= z;
        CHECK(prod == std::labs(det));
      }
    }
  }

  TEST_CASE("sparse multiply matches dense product") {
    const auto a = from_dense({{1, 2, 0}, {0, -1, 3}});
    const auto b = from_dense({{1, 0}, {2, 1}, {0, 4}});
    const auto p = multiply(a, b);
    CHECK(p == from_dense({{5, 2}, {-2, 11}}));
  }
}
