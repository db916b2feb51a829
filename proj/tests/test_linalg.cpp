#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "burnside/fp.hpp"

using namespace burnside;

TEST_CASE("prime field arithmetic") {
  PrimeField F(5);
  CHECK(F.add(3, 4) == 2);
  CHECK(F.sub(1, 3) == 3);
  CHECK(F.mul(3, 4) == 2);
  CHECK(F.inv(2) == 3);
  CHECK(F.pow(2, 4) == 1);
  CHECK_THROWS_AS(PrimeField(6), std::invalid_argument);
  CHECK_THROWS_AS(F.inv(0), std::domain_error);
}

TEST_CASE("rref identity and zero") {
  FpMatrix id = FpMatrix::identity(5, 3);
  auto [r, rank] = rref(id);
  CHECK(rank == 3);
  CHECK(r == id);

  FpMatrix z(5, 2, 4);
  auto [rz, rankz] = rref(z);
  CHECK(rankz == 0);
  CHECK(rz == z);
}

TEST_CASE("rref dependent rows") {
  // rows (1,2),(2,4) over F_5: second is twice the first
  FpMatrix m(5, 2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  auto [r, rank] = rref(m);
  CHECK(rank == 1);
}

TEST_CASE("kernel of a single row, cross-checked by enumeration") {
  // row (1,2) over F_5; oracle: enumerate all 25 vectors
  FpMatrix m(5, 1, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  Subspace ker = kernel(m);
  CHECK(ker.dim() == 1);
  PrimeField F(5);
  int annihilated = 0;
  for (u32 a = 0; a < 5; ++a)
    for (u32 b = 0; b < 5; ++b) {
      FpVec v{a, b};
      bool in_kernel = (F.add(a, F.mul(2, b)) == 0);
      if (in_kernel) ++annihilated;
      CHECK(ker.contains(v) == in_kernel);
    }
  CHECK(annihilated == 5);  // the kernel line has 5 points
}

TEST_CASE("kernel extremes") {
  CHECK(kernel(FpMatrix::identity(7, 4)).dim() == 0);
  CHECK(kernel(FpMatrix(7, 4, 4)).dim() == 4);
}

TEST_CASE("subspace operations on standard vectors") {
  FpVec e1{1, 0}, e2{0, 1}, e12{1, 1};
  Subspace s1 = Subspace::span(5, 2, {e1});
  Subspace s2 = Subspace::span(5, 2, {e2});
  Subspace s12 = Subspace::span(5, 2, {e12});
  CHECK(s1.contains(e1));
  CHECK_FALSE(s1.contains(e2));
  CHECK(intersect(s1, s2).dim() == 0);
  CHECK(sum(s1, s12).dim() == 2);
  CHECK_THROWS_AS(sum(s1, Subspace::span(7, 2, {e1})), std::invalid_argument);
}

TEST_CASE("rref is idempotent and rank-nullity holds on random matrices") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    u32 p = (trial % 2) ? 5 : 7;
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    FpMatrix m(p, rows, cols);
    for (auto& x : m.a) x = rng() % p;
    auto [r1, rank1] = rref(m);
    auto [r2, rank2] = rref(r1);
    CHECK(r1 == r2);
    CHECK(rank1 == rank2);
    CHECK(rank1 + kernel(m).dim() == cols);
  }
}

TEST_CASE("sum contains both operands' bases") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    u32 p = 5;
    std::size_t n = 4;
    auto rand_space = [&]() {
      std::vector<FpVec> vs;
      for (int i = 0; i < 2; ++i) {
        FpVec v(n);
        for (auto& x : v) x = rng() % p;
        vs.push_back(v);
      }
      return Subspace::span(p, n, vs);
    };
    Subspace s = rand_space(), t = rand_space();
    Subspace u = sum(s, t);
    for (const auto& b : s.basis) CHECK(u.contains(b));
    for (const auto& b : t.basis) CHECK(u.contains(b));
    Subspace i = intersect(s, t);
    for (const auto& b : i.basis) {
      CHECK(s.contains(b));
      CHECK(t.contains(b));
    }
    CHECK(s.dim() + t.dim() == u.dim() + i.dim());
  }
}

TEST_CASE("matrix helpers") {
  FpMatrix a(5, 2, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(1, 1) = 3;
  FpVec v{1, 1};
  FpVec av = a.apply(v);
  CHECK(av == FpVec{3, 3});
  CHECK(a.pow(0) == FpMatrix::identity(5, 2));
  CHECK((a * FpMatrix::identity(5, 2)) == a);
}
