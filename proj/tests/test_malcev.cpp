#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "burnside/malcev.hpp"
#include "burnside/triality.hpp"

using namespace burnside;

TEST_CASE("H of abelian_doubling(C_5) is the 1-dimensional abelian algebra") {
  TrialityGroup t = abelian_doubling(FiniteGroup::cyclic(5));
  LieTriality T = induce_triality(t, 5);
  MalcevAlgebra H = extract_h(T);
  CHECK(H.dim == 1);
  CHECK(H.degree_of == std::vector<std::size_t>{1});
  CHECK(vec_is_zero(H.star[0][0]));
  CHECK(check_malcev_identities(H).all_passed());
  CHECK(check_bridge_identities(T, H).all_passed());
  CHECK(check_lemma_4_4(T, H).all_passed());
  CHECK(check_lemma_4_5(T, H, 1).all_passed());
  CHECK(check_engel_hypotheses(H, 1).all_passed());
  SeriesResult s = series(H, SeriesKind::lower_power);
  CHECK(s.reaches_zero);
  CHECK(s.nilpotency_class == 1);
}

TEST_CASE("a Lie algebra is a Malcev algebra under its own bracket") {
  LpAlgebra A = build_lp_algebra(FiniteGroup::heisenberg(5), 5);
  MalcevAlgebra M = malcev_from_lie(A.L);
  CHECK(check_malcev_identities(M).all_passed());
  SeriesResult s = series(M, SeriesKind::lower_power);
  CHECK(s.reaches_zero);
  CHECK(s.nilpotency_class == 2);
  CHECK(series(M, SeriesKind::derived).reaches_zero);
  CHECK(check_kuzmin(M).all_passed());
}

TEST_CASE("cross-product algebra: Malcev identities hold, nothing descends") {
  MalcevAlgebra M = cross_product_algebra(7);
  CHECK(check_malcev_identities(M).all_passed());
  SeriesResult lp = series(M, SeriesKind::lower_power);
  CHECK_FALSE(lp.reaches_zero);
  CHECK(lp.terms.back().dim() == 3);  // M^k stabilizes at the whole algebra
  CHECK_FALSE(series(M, SeriesKind::derived).reaches_zero);
  CHECK_FALSE(series(M, SeriesKind::solvable_bracket).reaches_zero);
  CHECK(check_kuzmin(M).all_passed());  // both sides are the whole algebra

  MalcevAlgebra sub = generated_subalgebra(M, {M.basis(0)});
  CHECK(sub.dim == 1);
  CHECK(vec_is_zero(sub.star[0][0]));
  MalcevAlgebra all = generated_subalgebra(M, {M.basis(0), M.basis(1)});
  CHECK(all.dim == 3);
}

TEST_CASE("H of group_doubling(Heisenberg 125): the full lemma battery") {
  GroupOptions big;
  big.max_order = 20000;
  TrialityGroup t = group_doubling(FiniteGroup::heisenberg(5), big);
  LieTriality T = induce_triality(t, 5);
  MalcevAlgebra H = extract_h(T);
  REQUIRE(H.dim == 3);
  std::size_t deg1 = 0, deg2 = 0;
  for (std::size_t d : H.degree_of) (d == 1 ? deg1 : deg2)++;
  CHECK(deg1 == 2);
  CHECK(deg2 == 1);

  CHECK(check_malcev_identities(H).all_passed());
  CHECK(check_bridge_identities(T, H).all_passed());
  CHECK(check_lemma_4_4(T, H).all_passed());
  CheckReport l45 = check_lemma_4_5(T, H, 1);
  CHECK(l45.all_passed());
  CHECK(l45.find("lemma_4_5_part1")->status == "pass");
  CHECK(l45.find("lemma_4_5_part2")->status == "pass");
  CHECK(check_engel_hypotheses(H, 1).all_passed());
  CHECK(check_ambient_engel(T, H, 1).all_passed());

  // the degree-1 part generates: Lie precondition and * closure
  std::vector<FpVec> gens;
  for (std::size_t i = 0; i < H.dim; ++i)
    if (H.degree_of[i] == 1) gens.push_back(H.basis(i));
  CheckReport l34 = check_lemma_3_4(T, H, gens);
  CHECK(l34.all_passed());
  CHECK(l34.find("lemma_3_4")->status == "pass");

  SeriesResult lp = series(H, SeriesKind::lower_power);
  CHECK(lp.reaches_zero);
  CHECK(series(H, SeriesKind::solvable_bracket).reaches_zero);
  CHECK(check_kuzmin(H).all_passed());
}

TEST_CASE("3-dimensional example: H extraction vs the [a, a^rho] dichotomy") {
  // sigma with +1 on c: H = <a> is not closed under *, since a*a = -2c
  CHECK_THROWS_WITH_AS(extract_h(example_4_algebra(5, +1)),
                       doctest::Contains("closure of H under *"), std::logic_error);
  // sigma with -1 on c: H = <a, c> is closed, but [a, a^rho] = c != 0
  LieTriality T = example_4_algebra(5, -1);
  MalcevAlgebra H = extract_h(T);
  CHECK(H.dim == 2);
  CheckReport rep = check_lemma_4_4(T, H);
  CHECK(rep.has_fail());
  CHECK(rep.find("lemma_4_4")->detail.find("[a, a^rho] != 0") != std::string::npos);
  // Lemma 4.5 refuses to assert its conclusion here
  CheckReport l45 = check_lemma_4_5(T, H, 1);
  CHECK(l45.has_skip());
  CHECK(l45.find("lemma_4_5_precondition")->status == "skip");
}

TEST_CASE("permutation budget: p^k beyond the cap is refused") {
  TrialityGroup t = abelian_doubling(FiniteGroup::cyclic(5));
  LieTriality T = induce_triality(t, 5);
  MalcevAlgebra H = extract_h(T);
  CHECK_THROWS_AS(check_lemma_4_5(T, H, 2), std::invalid_argument);
  CHECK_THROWS_AS(check_engel_hypotheses(H, 2), std::invalid_argument);
}
