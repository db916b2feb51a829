#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "burnside/graded_lie.hpp"

using namespace burnside;

TEST_CASE("L_5(C_5) is one-dimensional and abelian with zero p-map") {
  auto c5 = FiniteGroup::cyclic(5);
  LpAlgebra A = build_lp_algebra(c5, 5);
  CHECK(A.L.total_dim == 1);
  CHECK(A.L.degree_dims == std::vector<std::size_t>{1});
  CHECK(vec_is_zero(A.L.p_map[0]));
  CHECK(verify_restricted_axioms(A).all_passed());
}

TEST_CASE("L_5(Heisenberg 125) has dims (2,1) and a spanning bracket") {
  auto heis = FiniteGroup::heisenberg(5);
  LpAlgebra A = build_lp_algebra(heis, 5);
  CHECK(A.L.degree_dims == std::vector<std::size_t>{2, 1});
  CHECK_FALSE(vec_is_zero(A.L.bracket[0][1]));  // [deg1, deg1] spans degree 2
  for (std::size_t i = 0; i < 3; ++i) CHECK(vec_is_zero(A.L.p_map[i]));
  CheckReport rep = verify_restricted_axioms(A);
  CHECK(rep.all_passed());
  CHECK(rep.find("axiom_sum")->detail.find("envelope") != std::string::npos);
  CHECK(check_ad_nilpotency(A.L, 5).all_passed());
}

TEST_CASE("L_5(modular 125) has a nonzero p-map on degree 1") {
  auto mod = FiniteGroup::modular_p3(5);
  LpAlgebra A = build_lp_algebra(mod, 5);
  REQUIRE(A.L.max_degree() == 5);
  CHECK(A.L.degree_dims == std::vector<std::size_t>{2, 0, 0, 0, 1});
  bool nonzero = false;
  for (std::size_t i = 0; i < A.L.total_dim; ++i)
    if (A.L.degree_of[i] == 1 && !vec_is_zero(A.L.p_map[i])) nonzero = true;
  CHECK(nonzero);
  CHECK(verify_restricted_axioms(A).all_passed());
}

TEST_CASE("trivial group gives the zero algebra") {
  auto g = FiniteGroup::trivial();
  LpAlgebra A = build_lp_algebra(g, 5);
  CHECK(A.L.total_dim == 0);
  CHECK(verify_restricted_axioms(A).all_passed());
}

TEST_CASE("non-p-groups are refused") {
  CHECK_THROWS_AS(build_lp_algebra(FiniteGroup::cyclic(6), 5), std::invalid_argument);
}

TEST_CASE("envelope and Jacobson routes agree on axiom 2") {
  for (auto g : {FiniteGroup::heisenberg(5), FiniteGroup::modular_p3(5), FiniteGroup::cyclic(25)}) {
    LpAlgebra A = build_lp_algebra(g, 5);
    CHECK(A.filt.omega != nullptr);
    CheckReport env = verify_restricted_axioms(A);
    A.filt.omega.reset();  // force the bracket-only Jacobson route
    CheckReport jac = verify_restricted_axioms(A);
    CHECK(env.all_passed());
    CHECK(jac.all_passed());
    CHECK(jac.find("axiom_sum")->detail.find("Jacobson") != std::string::npos);
  }
}

TEST_CASE("induced triality on abelian_doubling(C_5)") {
  TrialityGroup t = abelian_doubling(FiniteGroup::cyclic(5));
  LpAlgebra A = build_lp_algebra(t.G, 5);
  CHECK(A.L.degree_dims == std::vector<std::size_t>{2});
  LieTriality T = induce_triality(t, A);
  CHECK(verify_lie_triality(T).all_passed());
  // sigma splits the plane into fixed and negated lines
  PrimeField F(5);
  FpMatrix I = FpMatrix::identity(5, 2);
  FpMatrix fixed = T.sigma + I.scaled(F.neg(1));
  FpMatrix negated = T.sigma + I;
  CHECK(kernel(fixed).dim() == 1);
  CHECK(kernel(negated).dim() == 1);
}

TEST_CASE("induced triality on abelian_doubling(C_5 x C_5) is 4-dimensional abelian") {
  TrialityGroup t = abelian_doubling(FiniteGroup::elementary_abelian(5, 2));
  LpAlgebra A = build_lp_algebra(t.G, 5);
  CHECK(A.L.total_dim == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(vec_is_zero(A.L.bracket[i][j]));
  LieTriality T = induce_triality(t, A);
  CHECK(verify_lie_triality(T).all_passed());
}

TEST_CASE("induced triality on group_doubling(Heisenberg 125)") {
  GroupOptions big;
  big.max_order = 20000;
  TrialityGroup t = group_doubling(FiniteGroup::heisenberg(5), big);
  LpAlgebra A = build_lp_algebra(t.G, 5);
  CHECK(A.filt.route == "dimension_subgroup");
  CHECK(A.L.degree_dims == std::vector<std::size_t>{4, 2});
  CheckReport rep = verify_restricted_axioms(A);
  CHECK(rep.all_passed());
  CHECK(rep.find("axiom_sum")->detail.find("Jacobson") != std::string::npos);
  LieTriality T = induce_triality(t, A);
  CHECK(verify_lie_triality(T).all_passed());
  CHECK(T.group_derived);
  CHECK(check_ad_nilpotency(T.L, 5).all_passed());
}

TEST_CASE("the 3-dimensional example trades sigma-automorphism against triality") {
  LieTriality plus = example_4_algebra(5, +1);
  CHECK(verify_lie_axioms(plus.L).all_passed());
  CheckReport rp = verify_lie_triality(plus);
  CHECK(rp.find("rho_automorphism")->status == "pass");
  CHECK(rp.find("sigma_automorphism")->status == "fail");

  LieTriality minus = example_4_algebra(5, -1);
  CheckReport rm = verify_lie_triality(minus);
  CHECK(rm.find("sigma_automorphism")->status == "pass");
  CHECK(rm.find("s3_relations")->status == "pass");
  CHECK(rm.find("triality_identity")->status == "fail");

  // either sign: [a, a^rho] = [a,b] = c is nonzero
  for (const LieTriality* T : {&plus, &minus}) {
    FpVec v = T->L.br(T->L.basis(0), T->rho.apply(T->L.basis(0)));
    CHECK_FALSE(vec_is_zero(v));
  }
  CHECK_THROWS_AS(example_4_algebra(3, 1), std::invalid_argument);
}
