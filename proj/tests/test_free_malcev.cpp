#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "burnside/free_malcev.hpp"

using namespace burnside;

TEST_CASE("Witt formula on small multidegrees") {
  CHECK(witt_dimension({1, 0}) == 1);
  CHECK(witt_dimension({1, 1}) == 1);
  CHECK(witt_dimension({2, 1}) == 1);
  CHECK(witt_dimension({2, 2}) == 1);
  CHECK(witt_dimension({3, 1}) == 1);
  CHECK(witt_dimension({3, 2}) == 2);
  CHECK(witt_dimension({3, 3}) == 3);
  CHECK(witt_dimension({4, 2}) == 2);
  CHECK(witt_dimension({2, 0}) == 0);
  CHECK(witt_dimension({1, 1, 1}) == 2);
  // totals over degree: free Lie on 2 generators has dims 2,1,2,3,6,9
  std::vector<u64> totals(6, 0);
  for (u32 a = 0; a <= 6; ++a)
    for (u32 b = 0; a + b <= 6; ++b)
      if (a + b >= 1) totals[a + b - 1] += witt_dimension({a, b});
  CHECK(totals == std::vector<u64>{2, 1, 2, 3, 6, 9});
}

TEST_CASE("canonical monomial enumeration") {
  CHECK(enumerate_monomials(1, {2}).empty());  // x·x = 0
  auto deg2 = enumerate_monomials(2, {1, 1});
  REQUIRE(deg2.size() == 1);
  CHECK(deg2[0]->key == "(ab)");
  auto deg3 = enumerate_monomials(2, {2, 1});
  REQUIRE(deg3.size() == 1);
  CHECK(deg3[0]->key == "(a(ab))");  // the single canonical degree-3 shape
  CHECK(enumerate_monomials(2, {3, 3}).size() == 11);
}

TEST_CASE("relation matrix: empty below degree 4, rank 1 at (2,2)") {
  CHECK(malcev_relation_matrix(2, {2, 1}, 5).rows == 0);
  FpMatrix m22 = malcev_relation_matrix(2, {2, 2}, 5);
  CHECK(m22.cols == 2);
  CHECK(rref(m22).second == 1);  // quotient dim 1 = Witt lower bound
  CHECK(rref(malcev_relation_matrix(2, {3, 1}, 5)).second == 0);
}

TEST_CASE("free dims m=2: equal to Witt through degree 6, at two primes") {
  for (u32 p : {kFreeMalcevDefaultPrime, 5u}) {
    DimTable t = free_malcev_dims(2, 6, p);
    CHECK(t.totals_by_degree() == std::vector<std::size_t>{2, 1, 2, 3, 6, 9});
    for (const auto& c : t.components) {
      CHECK(c.dim >= witt_dimension(c.gamma));  // surjection onto free Lie
      CHECK(c.dim <= c.monomials);              // anticommutative upper bound
      if (total_degree(c.gamma) <= 3) CHECK(c.dim == c.monomials);
    }
    CHECK(t.find({3, 3})->dim == 3);
    CHECK(t.find({2, 4})->dim == 2);
  }
}

TEST_CASE("free dims m=1 and the non-Lie excess at m=3") {
  DimTable one = free_malcev_dims(1, 4);
  CHECK(one.totals_by_degree() == std::vector<std::size_t>{1, 0, 0, 0});
  CHECK(one.top_degree_vanishes);

  DimTable three = free_malcev_dims(3, 4);
  CHECK(three.totals_by_degree() == std::vector<std::size_t>{3, 3, 9, 21});
  CHECK(three.find({1, 1, 1})->dim == 3);  // strictly above the Witt number 2
  CHECK(three.find({1, 1, 2})->dim == 4);
  for (const auto& c : three.components) CHECK(c.dim >= witt_dimension(c.gamma));
}

TEST_CASE("Engel quotient m=2, p=5, n=1") {
  DimTable e = engel_quotient_dims(2, 5, 1, 6);
  DimTable f = free_malcev_dims(2, 6, 5);
  for (std::size_t i = 0; i < e.components.size(); ++i) {
    CHECK(e.components[i].gamma == f.components[i].gamma);
    CHECK(e.components[i].dim <= f.components[i].dim);  // quotient, cellwise
  }
  // the pure Engel monomial x1(x1(x1(x1(x1 x2)))) maps to 0
  CHECK(e.find({5, 1})->dim == 0);
  CHECK(e.find({1, 5})->dim == 0);
  // relations first bite at degree q+1 = 6
  CHECK(e.totals_by_degree() == std::vector<std::size_t>{2, 1, 2, 3, 6, 4});
  CHECK_FALSE(e.top_degree_vanishes);
}

TEST_CASE("ranks are independent of relation-row order") {
  FreeMalcevEngine eng(2, 5, 6, 5);
  std::mt19937_64 rng(config().seed);
  for (const MultiDeg& g : {MultiDeg{3, 3}, MultiDeg{2, 4}, MultiDeg{2, 2}}) {
    std::vector<FpVec> rows = eng.raw_rows(g);
    std::size_t baseline = eng.component(g).relations->dim();
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(rows.begin(), rows.end(), rng);
      EchelonBasis e(5, eng.component(g).basis.size());
      for (const FpVec& r : rows) e.insert(r);
      CHECK(e.dim() == baseline);
    }
  }
}

TEST_CASE("caps and budgets are enforced") {
  CHECK_THROWS_AS(free_malcev_dims(2, 7), std::invalid_argument);       // degree cap
  CHECK_THROWS_AS(engel_quotient_dims(2, 5, 2, 6), std::invalid_argument);  // p^n = 25
  CHECK_THROWS_AS(engel_quotient_dims(2, 3, 1, 6), std::invalid_argument);  // p > 3 required
  CHECK_THROWS_AS(enumerate_monomials(2, {1}), std::invalid_argument);  // length mismatch
}
