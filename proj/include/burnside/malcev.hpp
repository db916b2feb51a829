// Malcev algebras: H = {x : x^sigma = -x} with a*b = [a + 2a^rho, b],
// executable forms of the bridge identities, the [a,a^rho] dichotomy, the
// Engel-type hypotheses, generated subalgebras, and the descending series
// of section-5 style (lower power, solvable bracket, derived).

#ifndef BURNSIDE_MALCEV_HPP
#define BURNSIDE_MALCEV_HPP

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "burnside/config.hpp"
#include "burnside/fp.hpp"
#include "burnside/graded_lie.hpp"
#include "burnside/report.hpp"

namespace burnside {

struct MalcevAlgebra {
  u32 p = 2;
  std::size_t dim = 0;
  std::vector<std::vector<FpVec>> star;  // structure constants of the * product
  std::vector<std::size_t> degree_of;    // per basis index; empty when ungraded
  std::vector<FpVec> embed;              // basis vectors in ambient coordinates (optional)
  std::vector<std::size_t> embed_pivots;
  std::string name;

  bool graded() const { return !degree_of.empty(); }

  FpVec zero() const { return FpVec(dim, 0); }

  FpVec basis(std::size_t i) const {
    FpVec v(dim, 0);
    v[i] = 1;
    return v;
  }

  FpVec mul(const FpVec& a, const FpVec& b) const {
    PrimeField F(p);
    FpVec r(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (!b[j]) continue;
        u32 k = F.mul(a[i], b[j]);
        for (std::size_t t = 0; t < dim; ++t) r[t] = F.add(r[t], F.mul(k, star[i][j][t]));
      }
    }
    return r;
  }

  FpMatrix ad_star(const FpVec& a) const {
    FpMatrix m(p, dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      FpVec col = mul(a, basis(j));
      for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = col[i];
    }
    return m;
  }

  // ambient vector of an H-coordinate vector
  FpVec to_ambient(const FpVec& c) const {
    if (embed.empty()) throw std::logic_error("MalcevAlgebra: no ambient embedding");
    PrimeField F(p);
    FpVec r(embed.empty() ? 0 : embed[0].size(), 0);
    for (std::size_t i = 0; i < dim; ++i)
      if (c[i])
        for (std::size_t t = 0; t < r.size(); ++t) r[t] = F.add(r[t], F.mul(c[i], embed[i][t]));
    return r;
  }

  // H-coordinates of an ambient vector; throws when it lies outside H
  FpVec from_ambient(const FpVec& v, const char* who = "from_ambient") const {
    PrimeField F(p);
    FpVec c(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) c[i] = v[embed_pivots[i]];
    if (to_ambient(c) != v) throw std::logic_error(std::string(who) + ": vector escapes H");
    return c;
  }
};

// A Lie algebra is a Malcev algebra under its own bracket.
inline MalcevAlgebra malcev_from_lie(const GradedRestrictedLie& L) {
  MalcevAlgebra m;
  m.p = L.p;
  m.dim = L.total_dim;
  m.star = L.bracket;
  m.degree_of = L.degree_of;
  m.name = L.name + "_as_malcev";
  return m;
}

// The simple 3-dimensional cross-product algebra e1*e2 = e3 (cyclically);
// a Malcev (indeed Lie) algebra that is nowhere near nilpotent.
inline MalcevAlgebra cross_product_algebra(u32 p) {
  GradedRestrictedLie L = GradedRestrictedLie::make(p, {3}, "cross_product");
  PrimeField F(p);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
    L.bracket[i][j][k] = 1;
    L.bracket[j][i][k] = F.neg(1);
  };
  set(0, 1, 2);
  set(1, 2, 0);
  set(2, 0, 1);
  MalcevAlgebra m = malcev_from_lie(L);
  m.name = "cross_product";
  return m;
}

// H as the (-1)-eigenspace of sigma, degree by degree, with the tabulated
// a*b = [a^alpha, b] product.  Closure failures abort.
inline MalcevAlgebra extract_h(const LieTriality& T) {
  const GradedRestrictedLie& L = T.L;
  if (L.p <= 3) throw std::invalid_argument("extract_h: characteristic must exceed 3");
  PrimeField F(L.p);
  const std::size_t n = L.total_dim;
  MalcevAlgebra H;
  H.p = L.p;
  H.name = L.name + "_H";
  // kernel of sigma + 1 within each degree block keeps the basis homogeneous
  for (std::size_t d = 1; d <= L.max_degree(); ++d) {
    std::size_t start = L.degree_start[d - 1], dim = L.degree_dims[d - 1];
    if (dim == 0) continue;
    FpMatrix block(L.p, dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        block.at(i, j) = T.sigma.at(start + i, start + j);
        if (i == j) block.at(i, j) = F.add(block.at(i, j), 1);
      }
    for (const FpVec& k : kernel(block).basis) {
      FpVec v(n, 0);
      for (std::size_t i = 0; i < dim; ++i) v[start + i] = k[i];
      H.embed.push_back(std::move(v));
      H.degree_of.push_back(d);
    }
  }
  H.dim = H.embed.size();
  for (const FpVec& v : H.embed) {
    std::size_t c = 0;
    while (c < n && v[c] == 0) ++c;
    H.embed_pivots.push_back(c);
  }
  FpMatrix alpha = FpMatrix::identity(L.p, n) + T.rho.scaled(2);
  H.star.assign(H.dim, std::vector<FpVec>(H.dim, H.zero()));
  for (std::size_t i = 0; i < H.dim; ++i) {
    FpVec ai = alpha.apply(H.embed[i]);
    for (std::size_t j = 0; j < H.dim; ++j)
      H.star[i][j] = H.from_ambient(L.br(ai, H.embed[j]), "extract_h (closure of H under *)");
  }
  return H;
}

// Identity (1) on basis pairs; identity (2) via its full multilinearization
// on all basis 4-tuples plus the original form on all basis 3-tuples.
inline CheckReport check_malcev_identities(const MalcevAlgebra& M) {
  if (M.p <= 3) throw std::invalid_argument("check_malcev_identities: characteristic must exceed 3");
  CheckReport rep;
  rep.subject = M.name;
  PrimeField F(M.p);
  bool anti = true;
  for (std::size_t i = 0; i < M.dim && anti; ++i) {
    if (!vec_is_zero(M.star[i][i])) anti = false;
    for (std::size_t j = 0; j < M.dim && anti; ++j)
      if (!vec_is_zero(vec_add(F, M.star[i][j], M.star[j][i]))) anti = false;
  }
  rep.add("anticommutativity", anti ? "pass" : "fail");

  auto defect = [&](const FpVec& x, const FpVec& y, const FpVec& z) {
    // (xy)(xz) - ((xy)z)x - ((yz)x)x - ((zx)x)y
    FpVec r = M.mul(M.mul(x, y), M.mul(x, z));
    r = vec_sub(F, r, M.mul(M.mul(M.mul(x, y), z), x));
    r = vec_sub(F, r, M.mul(M.mul(M.mul(y, z), x), x));
    r = vec_sub(F, r, M.mul(M.mul(M.mul(z, x), x), y));
    return r;
  };
  bool orig = true;
  for (std::size_t i = 0; i < M.dim && orig; ++i)
    for (std::size_t j = 0; j < M.dim && orig; ++j)
      for (std::size_t k = 0; k < M.dim && orig; ++k)
        if (!vec_is_zero(defect(M.basis(i), M.basis(j), M.basis(k)))) {
          rep.add_fail("malcev_identity", "basis triple (" + std::to_string(i) + "," + std::to_string(j) +
                                              "," + std::to_string(k) + ")");
          orig = false;
        }
  if (orig) rep.add_pass("malcev_identity", "original form on all basis triples");

  bool lin = true;
  for (std::size_t i1 = 0; i1 < M.dim && lin; ++i1)
    for (std::size_t i2 = 0; i2 < M.dim && lin; ++i2)
      for (std::size_t j = 0; j < M.dim && lin; ++j)
        for (std::size_t k = 0; k < M.dim && lin; ++k) {
          FpVec x1 = M.basis(i1), x2 = M.basis(i2), y = M.basis(j), z = M.basis(k);
          // x appears twice, so this polarization captures the full multilinearization
          FpVec s = vec_sub(F, defect(vec_add(F, x1, x2), y, z), defect(x1, y, z));
          s = vec_sub(F, s, defect(x2, y, z));
          if (!vec_is_zero(s)) {
            rep.add_fail("malcev_identity_linearized",
                         "4-tuple (" + std::to_string(i1) + "," + std::to_string(i2) + "," +
                             std::to_string(j) + "," + std::to_string(k) + ")");
            lin = false;
          }
        }
  if (lin) rep.add_pass("malcev_identity_linearized", "all basis 4-tuples");
  return rep;
}

// Lemma 3.3 and the three displayed proof identities, all multilinear, on
// all basis triples of H; plus coherence of ad* with ad(a^alpha).
inline CheckReport check_bridge_identities(const LieTriality& T, const MalcevAlgebra& H) {
  const GradedRestrictedLie& L = T.L;
  PrimeField F(L.p);
  CheckReport rep;
  rep.subject = H.name;
  FpMatrix alpha = FpMatrix::identity(L.p, L.total_dim) + T.rho.scaled(2);
  FpMatrix rho2 = T.rho * T.rho;

  auto amb = [&](std::size_t i) { return H.embed[i]; };
  auto star_amb = [&](const FpVec& x, const FpVec& y) { return L.br(alpha.apply(x), y); };

  bool eq3 = true;
  for (std::size_t i = 0; i < H.dim && eq3; ++i)
    for (std::size_t j = 0; j < H.dim && eq3; ++j)
      if (L.br(T.rho.apply(amb(i)), amb(j)) != L.br(amb(i), T.rho.apply(amb(j)))) {
        rep.add_fail("rho_swap", "[x^rho,y] != [x,y^rho] at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        eq3 = false;
      }
  if (eq3) rep.add_pass("rho_swap", "[x^rho, y] = [x, y^rho] on basis pairs");

  bool eq2 = true, eq4 = true, bridge = true;
  for (std::size_t i = 0; i < H.dim; ++i)
    for (std::size_t j = 0; j < H.dim; ++j)
      for (std::size_t k = 0; k < H.dim; ++k) {
        FpVec x = amb(i), y = amb(j), z = amb(k);
        FpVec core = L.br(L.br(rho2.apply(x), T.rho.apply(y)), z);
        FpVec lhs2 = star_amb(star_amb(x, y), z);
        FpVec rhs2 = vec_add(F, vec_scale(F, 2, core), L.br(L.br(x, y), z));
        if (lhs2 != rhs2) eq2 = false;

        FpVec jac = vec_add(F, star_amb(star_amb(x, y), z), star_amb(star_amb(y, z), x));
        jac = vec_add(F, jac, star_amb(star_amb(z, x), y));
        if (jac != vec_scale(F, 6, core)) eq4 = false;

        FpVec lhsb = vec_scale(F, 3, L.br(L.br(x, y), z));
        FpVec rhsb = vec_scale(F, 2, star_amb(star_amb(x, y), z));
        rhsb = vec_add(F, rhsb, star_amb(star_amb(z, y), x));
        rhsb = vec_add(F, rhsb, star_amb(star_amb(x, z), y));
        if (lhsb != rhsb) bridge = false;
      }
  rep.add("star_expansion", eq2 ? "pass" : "fail",
          eq2 ? "(x*y)*z = 2[[x^rho2, y^rho], z] + [[x,y],z]" : "");
  rep.add("jacobian_form", eq4 ? "pass" : "fail", eq4 ? "J(x,y,z) = 6[[x^rho2, y^rho], z]" : "");
  rep.add("bridge_identity", bridge ? "pass" : "fail",
          bridge ? "3[[a,b],c] = 2(a*b)*c + (c*b)*a + (a*c)*b" : "");

  bool coh = true;
  for (std::size_t i = 0; i < H.dim && coh; ++i) {
    FpMatrix adl = L.ad(alpha.apply(amb(i)));
    for (std::size_t j = 0; j < H.dim && coh; ++j)
      if (adl.apply(amb(j)) != H.to_ambient(H.mul(H.basis(i), H.basis(j)))) coh = false;
  }
  rep.add("star_operator_definition", coh ? "pass" : "fail", coh ? "ad*(a) = ad(a^alpha) on H" : "");
  return rep;
}

// [a, a^rho] = 0: basis sweep plus the bilinear symmetrization, which is
// complete for a quadratic identity away from characteristic 2.
inline CheckReport check_lemma_4_4(const LieTriality& T, const MalcevAlgebra& H) {
  const GradedRestrictedLie& L = T.L;
  PrimeField F(L.p);
  CheckReport rep;
  rep.subject = H.name;
  bool ok = true;
  std::string witness;
  for (std::size_t i = 0; i < H.dim && ok; ++i)
    if (!vec_is_zero(L.br(H.embed[i], T.rho.apply(H.embed[i])))) {
      ok = false;
      witness = "[a, a^rho] != 0 for basis " + std::to_string(i);
    }
  for (std::size_t i = 0; i < H.dim && ok; ++i)
    for (std::size_t j = 0; j < H.dim && ok; ++j) {
      FpVec s = vec_add(F, L.br(H.embed[i], T.rho.apply(H.embed[j])),
                        L.br(H.embed[j], T.rho.apply(H.embed[i])));
      if (!vec_is_zero(s)) {
        ok = false;
        witness = "symmetrization fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
  rep.add("lemma_4_4", ok ? "pass" : "fail", ok ? "basis sweep + bilinear symmetrization" : witness);
  return rep;
}

namespace detail {

// sum over all arrangements of mats[0..m-1] of their ordered product
inline FpMatrix symmetrized_product(const std::vector<FpMatrix>& mats) {
  const std::size_t m = mats.size();
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  FpMatrix acc(mats[0].p, mats[0].rows, mats[0].cols);
  do {
    FpMatrix prod = mats[idx[0]];
    for (std::size_t i = 1; i < m; ++i) prod = prod * mats[idx[i]];
    acc = acc + prod;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return acc;
}

// enumerate (or sample) tuples in {0..dim-1}^len
inline std::vector<std::vector<std::size_t>> tuples(std::size_t dim, std::size_t len) {
  double total = 1;
  for (std::size_t i = 0; i < len; ++i) total *= double(dim);
  std::vector<std::vector<std::size_t>> out;
  if (total <= 4096) {
    std::vector<std::size_t> t(len, 0);
    for (;;) {
      out.push_back(t);
      std::size_t k = 0;
      while (k < len && ++t[k] == dim) t[k++] = 0;
      if (k == len) break;
    }
  } else {
    std::mt19937_64 rng(config().seed);
    for (int s = 0; s < 256; ++s) {
      std::vector<std::size_t> t(len);
      for (auto& v : t) v = rng() % dim;
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace detail

// ad(a^alpha)^{p^k} = ad(a)^{p^k} + 2 rho^-1 ad(a)^{p^k} rho, gated on
// Lemma 4.4; part (2) is the linearized form over S_{p^k}.
inline CheckReport check_lemma_4_5(const LieTriality& T, const MalcevAlgebra& H, u32 k) {
  const GradedRestrictedLie& L = T.L;
  PrimeField F(L.p);
  CheckReport rep;
  rep.subject = H.name;
  u64 q = 1;
  for (u32 i = 0; i < k; ++i) q *= L.p;
  if (q > config().perm_budget)
    throw std::invalid_argument("check_lemma_4_5: p^k = " + std::to_string(q) +
                                " exceeds the permutation budget " + std::to_string(config().perm_budget));
  if (!check_lemma_4_4(T, H).all_passed()) {
    rep.add_skip("lemma_4_5_precondition", "[a, a^rho] = 0 fails, part (1) is not asserted");
    return rep;
  }
  rep.add_pass("lemma_4_5_precondition", "[a, a^rho] = 0 verified");
  FpMatrix alpha = FpMatrix::identity(L.p, L.total_dim) + T.rho.scaled(2);
  FpMatrix rho_inv = inverse(T.rho);

  bool p1 = true;
  for (std::size_t i = 0; i < H.dim && p1; ++i) {
    FpMatrix lhs = L.ad(alpha.apply(H.embed[i])).pow(q);
    FpMatrix adq = L.ad(H.embed[i]).pow(q);
    FpMatrix rhs = adq + (rho_inv * adq * T.rho).scaled(2);
    if (!(lhs == rhs)) p1 = false;
  }
  rep.add("lemma_4_5_part1", p1 ? "pass" : "fail",
          "matrix identity at p^k = " + std::to_string(q) + " on all basis elements of H");

  bool p2 = true;
  if (H.dim > 0) {
    for (const auto& tup : detail::tuples(H.dim, q)) {
      std::vector<FpMatrix> ma, mb;
      for (std::size_t i : tup) {
        ma.push_back(L.ad(alpha.apply(H.embed[i])));
        mb.push_back(L.ad(H.embed[i]));
      }
      FpMatrix lhs = detail::symmetrized_product(ma);
      FpMatrix s = detail::symmetrized_product(mb);
      FpMatrix rhs = s + (rho_inv * s * T.rho).scaled(2);
      if (!(lhs == rhs)) {
        p2 = false;
        break;
      }
    }
  }
  rep.add("lemma_4_5_part2", p2 ? "pass" : "fail",
          "linearized identity over S_" + std::to_string(q) + " tuples");
  return rep;
}

// Engel hypotheses (i) and (ii) for the * product at exponent p^n.
inline CheckReport check_engel_hypotheses(const MalcevAlgebra& M, u32 n) {
  if (!M.graded()) throw std::invalid_argument("check_engel_hypotheses: algebra carries no grading");
  CheckReport rep;
  rep.subject = M.name;
  u64 q = 1;
  for (u32 i = 0; i < n; ++i) q *= M.p;
  if (q > config().perm_budget)
    throw std::invalid_argument("check_engel_hypotheses: p^n = " + std::to_string(q) +
                                " exceeds the permutation budget " + std::to_string(config().perm_budget));
  std::mt19937_64 rng(config().seed);
  bool e1 = true;
  std::string w1;
  std::size_t maxdeg = 0;
  for (std::size_t d : M.degree_of) maxdeg = std::max(maxdeg, d);
  for (std::size_t d = 1; d <= maxdeg && e1; ++d) {
    std::vector<std::size_t> idxs;
    for (std::size_t i = 0; i < M.dim; ++i)
      if (M.degree_of[i] == d) idxs.push_back(i);
    if (idxs.empty()) continue;
    std::vector<FpVec> probes;
    for (std::size_t i : idxs) probes.push_back(M.basis(i));
    for (int t = 0; t < 20; ++t) {
      FpVec v = M.zero();
      for (std::size_t i : idxs) v[i] = rng() % M.p;
      probes.push_back(std::move(v));
    }
    for (const FpVec& a : probes)
      if (!M.ad_star(a).pow(q).is_zero()) {
        e1 = false;
        w1 = "ad*(a)^" + std::to_string(q) + " != 0 for a homogeneous element of degree " + std::to_string(d);
      }
  }
  rep.add("engel_i", e1 ? "pass" : "fail",
          e1 ? "ad*(a)^" + std::to_string(q) + " = 0 on homogeneous probes" : w1);

  bool e2 = true;
  if (M.dim > 0) {
    for (const auto& tup : detail::tuples(M.dim, q)) {
      std::vector<FpMatrix> mats;
      for (std::size_t i : tup) mats.push_back(M.ad_star(M.basis(i)));
      if (!detail::symmetrized_product(mats).is_zero()) {
        e2 = false;
        break;
      }
    }
  }
  rep.add("engel_ii", e2 ? "pass" : "fail",
          "symmetrized ad* sum over S_" + std::to_string(q) + " on basis tuples");
  return rep;
}

// Ambient-ad analogues (Lemma 4.3 shape): nilpotency of ad on homogeneous
// elements of H and the symmetrized ambient-ad sum.
inline CheckReport check_ambient_engel(const LieTriality& T, const MalcevAlgebra& H, u32 n) {
  CheckReport rep;
  rep.subject = H.name;
  u64 q = 1;
  for (u32 i = 0; i < n; ++i) q *= T.L.p;
  if (q > config().perm_budget)
    throw std::invalid_argument("check_ambient_engel: p^n exceeds the permutation budget");
  bool a1 = true;
  for (std::size_t i = 0; i < H.dim && a1; ++i)
    if (!T.L.ad(H.embed[i]).pow(q).is_zero()) a1 = false;
  rep.add("ad_nilpotency_on_H", a1 ? "pass" : "fail", "ad(a)^" + std::to_string(q) + " on basis of H");
  bool a2 = true;
  if (H.dim > 0) {
    for (const auto& tup : detail::tuples(H.dim, q)) {
      std::vector<FpMatrix> mats;
      for (std::size_t i : tup) mats.push_back(T.L.ad(H.embed[i]));
      if (!detail::symmetrized_product(mats).is_zero()) {
        a2 = false;
        break;
      }
    }
  }
  rep.add("symmetrized_ad_sum", a2 ? "pass" : "fail", "over S_" + std::to_string(q) + " on basis tuples");
  return rep;
}

// span of pairwise * products of two subspaces (given by their bases)
inline Subspace subspace_product(const MalcevAlgebra& M, const Subspace& a, const Subspace& b) {
  EchelonBasis e(M.p, M.dim);
  for (const FpVec& x : a.basis)
    for (const FpVec& y : b.basis) e.insert(M.mul(x, y));
  return Subspace::from_echelon(e);
}

inline Subspace full_space(const MalcevAlgebra& M) { return Subspace::full(M.p, M.dim); }

// closure of a subspace under multiplication by M (makes it an ideal)
inline Subspace ideal_closure(const MalcevAlgebra& M, Subspace s) {
  for (;;) {
    EchelonBasis e(M.p, M.dim);
    for (const FpVec& x : s.basis) e.insert(x);
    std::size_t before = e.dim();
    for (const FpVec& x : s.basis)
      for (std::size_t j = 0; j < M.dim; ++j) e.insert(M.mul(x, M.basis(j)));
    if (e.dim() == before) return s;
    s = Subspace::from_echelon(e);
  }
}

enum class SeriesKind { lower_power, solvable_bracket, derived };

struct SeriesResult {
  SeriesKind kind;
  std::vector<Subspace> terms;  // terms[0] = M
  bool reaches_zero = false;
  std::size_t nilpotency_class = 0;  // lower_power only: largest k with M^k != 0
};

inline SeriesResult series(const MalcevAlgebra& M, SeriesKind kind) {
  SeriesResult r;
  r.kind = kind;
  r.terms.push_back(full_space(M));
  const std::size_t cap = 2 * M.dim + 4;
  while (r.terms.size() < cap) {
    Subspace next(M.p, M.dim);
    switch (kind) {
      case SeriesKind::lower_power: {
        // M^k = sum over i+j=k of M^i * M^j, with M^1 = terms[0]
        std::size_t k = r.terms.size() + 1;
        EchelonBasis e(M.p, M.dim);
        for (std::size_t i = 1; i <= k - 1; ++i) {
          Subspace prod = subspace_product(M, r.terms[i - 1], r.terms[k - i - 1]);
          for (const FpVec& v : prod.basis) e.insert(v);
        }
        next = Subspace::from_echelon(e);
        break;
      }
      case SeriesKind::solvable_bracket: {
        const Subspace& I = r.terms.back();
        Subspace i2 = subspace_product(M, I, I);
        Subspace t = sum(i2, subspace_product(M, i2, full_space(M)));
        next = ideal_closure(M, t);
        break;
      }
      case SeriesKind::derived: {
        const Subspace& B = r.terms.back();
        next = subspace_product(M, B, B);
        break;
      }
    }
    if (next.dim() == 0) {
      r.terms.push_back(std::move(next));
      r.reaches_zero = true;
      break;
    }
    if (next == r.terms.back()) {
      r.terms.push_back(std::move(next));
      break;  // stabilized above zero
    }
    r.terms.push_back(std::move(next));
  }
  if (kind == SeriesKind::lower_power) {
    r.nilpotency_class = 0;
    for (std::size_t i = 0; i < r.terms.size(); ++i)
      if (r.terms[i].dim() > 0) r.nilpotency_class = i + 1;
    if (M.dim == 0) {
      r.reaches_zero = true;
      r.nilpotency_class = 1;  // the zero algebra counts as nilpotent of class 1
    }
  }
  return r;
}

// Kuzmin's containment M^[3] subset of M^2 * M^2 (with M^[0] = M).
inline CheckReport check_kuzmin(const MalcevAlgebra& M) {
  CheckReport rep;
  rep.subject = M.name;
  SeriesResult s = series(M, SeriesKind::solvable_bracket);
  Subspace m3 = s.terms.size() > 3 ? s.terms[3] : Subspace::zero(M.p, M.dim);
  Subspace m2 = subspace_product(M, full_space(M), full_space(M));
  Subspace m22 = subspace_product(M, m2, m2);
  bool ok = m22.contains_all(m3);
  rep.add("kuzmin_containment", ok ? "pass" : "fail",
          "dim M^[3] = " + std::to_string(m3.dim()) + ", dim M^2*M^2 = " + std::to_string(m22.dim()));
  return rep;
}

// closure of the given vectors under *, returned as a subalgebra with its
// own structure constants
inline MalcevAlgebra generated_subalgebra(const MalcevAlgebra& M, const std::vector<FpVec>& gens) {
  EchelonBasis e(M.p, M.dim);
  for (const FpVec& g : gens) e.insert(g);
  for (;;) {
    std::size_t before = e.dim();
    std::vector<FpVec> rows = e.rows();
    for (const FpVec& x : rows)
      for (const FpVec& y : rows) e.insert(M.mul(x, y));
    if (e.dim() == before) break;
  }
  Subspace s = Subspace::from_echelon(e);
  MalcevAlgebra sub;
  sub.p = M.p;
  sub.dim = s.dim();
  sub.name = M.name + "_subalgebra";
  sub.embed = s.basis;  // coordinates relative to M here, not the ambient Lie algebra
  for (const FpVec& v : s.basis) {
    std::size_t c = 0;
    while (c < v.size() && v[c] == 0) ++c;
    sub.embed_pivots.push_back(c);
  }
  sub.star.assign(sub.dim, std::vector<FpVec>(sub.dim, sub.zero()));
  for (std::size_t i = 0; i < sub.dim; ++i)
    for (std::size_t j = 0; j < sub.dim; ++j)
      sub.star[i][j] = sub.from_ambient(M.mul(s.basis[i], s.basis[j]), "generated_subalgebra");
  return sub;
}

// Lemma 3.4: gens generate H under * provided gens + gens^alpha generate the
// ambient Lie algebra.
inline CheckReport check_lemma_3_4(const LieTriality& T, const MalcevAlgebra& H,
                                   const std::vector<FpVec>& gens_in_h) {
  const GradedRestrictedLie& L = T.L;
  CheckReport rep;
  rep.subject = H.name;
  FpMatrix alpha = FpMatrix::identity(L.p, L.total_dim) + T.rho.scaled(2);
  EchelonBasis lie(L.p, L.total_dim);
  std::vector<FpVec> work;
  for (const FpVec& c : gens_in_h) {
    FpVec v = H.to_ambient(c);
    work.push_back(v);
    work.push_back(alpha.apply(v));
  }
  for (const FpVec& v : work) lie.insert(v);
  for (;;) {
    std::size_t before = lie.dim();
    std::vector<FpVec> rows = lie.rows();
    for (const FpVec& x : rows)
      for (const FpVec& y : rows) lie.insert(L.br(x, y));
    if (lie.dim() == before) break;
  }
  if (lie.dim() != L.total_dim) {
    rep.add_skip("lemma_3_4", "precondition fails: gens + gens^alpha span a proper Lie subalgebra (dim " +
                                  std::to_string(lie.dim()) + " of " + std::to_string(L.total_dim) + ")");
    return rep;
  }
  MalcevAlgebra sub = generated_subalgebra(H, gens_in_h);
  bool ok = sub.dim == H.dim;
  rep.add("lemma_3_4", ok ? "pass" : "fail",
          "closure of gens under * has dim " + std::to_string(sub.dim) + " of " + std::to_string(H.dim));
  return rep;
}

}  // namespace burnside

#endif  // BURNSIDE_MALCEV_HPP
