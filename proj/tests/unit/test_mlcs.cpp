#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "maxima/mlcs.hpp"

using namespace maxima;

TEST_CASE("aabbc and abac") {
  const std::vector<std::string> s = {"aabbc", "abac"};
  for (LcsEngine e : {LcsEngine::HakataImai, LcsEngine::Maxima}) {
    CostCounter c;
    const LcsResult r = mlcs(s, e, c);
    CHECK(r.length == 3);
    CHECK(r.witness == "abc");
    CHECK(r.layer_sizes == std::vector<std::size_t>{1, 2, 1});
  }
}

TEST_CASE("successor table") {
  const std::vector<std::string> s = {"abca", "cab"};
  const SuccessorTable t(s);
  CHECK(t.alphabet() == "abc");
  CHECK(t.next(0, 'a', 0) == 1);
  CHECK(t.next(0, 'a', 1) == 4);
  CHECK(t.next(0, 'a', 4) == SuccessorTable::none);
  CHECK(t.next(1, 'c', 0) == 1);
  CHECK(t.next(1, 'x', 0) == SuccessorTable::none);
}

TEST_CASE("minima engines agree with the negated oracle") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 100; ++rep) {
    auto pts = oracle::grid_points(rng, 1 + rep % 40, 2 + rep % 3, 5);
    std::vector<Point> neg = pts;
    for (Point& p : neg) {
      for (double& x : p.coords) x = -x;
    }
    CostCounter c;
    const auto want = oracle::maxima_positions(neg);
    CHECK(oracle::sorted_indices(hakata_imai_minima(pts, c)) == want);
    CHECK(oracle::sorted_indices(kd_minima(pts, c)) == want);
  }
}

TEST_CASE("random strings match the dynamic program") {
  std::mt19937_64 rng(32);
  for (int rep = 0; rep < 80; ++rep) {
    const std::size_t d = 2 + rep % 3;
    const int sigma = rep % 2 ? 3 : 8;
    std::vector<std::string> s(d);
    for (auto& str : s) {
      const std::size_t len = rng() % 10;
      for (std::size_t i = 0; i < len; ++i) str.push_back(static_cast<char>('a' + rng() % sigma));
    }
    const std::size_t want = oracle::lcs_dp(s);
    for (LcsEngine e : {LcsEngine::HakataImai, LcsEngine::Maxima}) {
      CostCounter c;
      const LcsResult r = mlcs(s, e, c);
      CHECK(r.length == want);
      CHECK(r.witness.size() == want);
      for (const auto& str : s) CHECK(oracle::is_subsequence(r.witness, str));
    }
  }
}

TEST_CASE("edge cases") {
  CostCounter c;
  const std::vector<std::string> one = {"abc"};
  CHECK_THROWS_AS(mlcs(one, LcsEngine::Maxima, c), ContractViolation);
  const std::vector<std::string> empty = {"abc", ""};
  CHECK(mlcs(empty, LcsEngine::Maxima, c).length == 0);
  const std::vector<std::string> disjoint = {"abc", "xyz"};
  CHECK(mlcs(disjoint, LcsEngine::HakataImai, c).length == 0);
  const std::vector<std::string> same = {"banana", "banana", "banana"};
  CHECK(mlcs(same, LcsEngine::Maxima, c).witness == "banana");
}
