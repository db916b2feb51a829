// The modular group algebra F_pG, powers of its augmentation ideal, and the
// Zassenhaus filtration G_i = {g : 1-g in omega^i}.
//
// Two routes compute the filtration.  The direct route materializes the
// omega-powers as subspaces of F_pG (ambient dimension |G|) and tests
// membership of 1-g; it is exact but only practical while |G| stays within
// the configured cap.  Beyond that the dimension-subgroup recursion
// D_1 = G, D_i = [D_{i-1}, G] D_{ceil(i/p)}^p takes over; for p-groups the
// two chains coincide, which the tests cross-check on every small input.

#ifndef BURNSIDE_GROUP_ALGEBRA_HPP
#define BURNSIDE_GROUP_ALGEBRA_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "burnside/config.hpp"
#include "burnside/fp.hpp"
#include "burnside/group.hpp"
#include "burnside/report.hpp"

namespace burnside {

// Elements are dense coefficient vectors indexed by group elements.
struct GroupAlgebra {
  const FiniteGroup* G;
  PrimeField F;

  GroupAlgebra(const FiniteGroup& g, u32 p) : G(&g), F(p) {}

  u32 p() const { return F.p(); }
  std::size_t dim() const { return G->n; }

  FpVec zero() const { return FpVec(G->n, 0); }

  FpVec elem(u32 g) const {
    FpVec v(G->n, 0);
    v[g] = 1;
    return v;
  }

  FpVec one() const { return elem(0); }

  // 1 - g, the spanning elements of omega
  FpVec one_minus(u32 g) const {
    FpVec v(G->n, 0);
    v[0] = F.add(v[0], 1);
    v[g] = F.sub(v[g], 1);
    return v;
  }

  // convolution product
  FpVec mul(const FpVec& a, const FpVec& b) const {
    FpVec r(G->n, 0);
    for (u32 x = 0; x < G->n; ++x) {
      if (a[x] == 0) continue;
      for (u32 y = 0; y < G->n; ++y) {
        if (b[y] == 0) continue;
        u32 z = G->mul(x, y);
        r[z] = F.add(r[z], F.mul(a[x], b[y]));
      }
    }
    return r;
  }

  // a * g for a group element g: a column permutation
  FpVec mul_elem(const FpVec& a, u32 g) const {
    FpVec r(G->n, 0);
    for (u32 x = 0; x < G->n; ++x)
      if (a[x]) r[G->mul(x, g)] = a[x];
    return r;
  }

  FpVec pow(const FpVec& a, u32 e) const {
    FpVec r = one();
    for (u32 i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

  u32 augmentation(const FpVec& a) const {
    u32 s = 0;
    for (u32 c : a) s = F.add(s, c);
    return s;
  }
};

// omega^1, omega^2, ... as incremental echelon bases, computed until the
// requested depth or until the power vanishes.  omega is generated as a
// one-sided ideal by {s - 1 : s generators}, so each next power is spanned
// by b*(s-1) over current basis rows b.
struct OmegaPowers {
  u32 p = 2;
  const FiniteGroup* G = nullptr;
  std::vector<EchelonBasis> powers;  // powers[i] = omega^{i+1}

  std::size_t depth() const { return powers.size(); }

  std::size_t dim(std::size_t i) const {  // dim omega^i, 1-based; 0 past the chain
    if (i == 0) return G->n;
    return i <= powers.size() ? powers[i - 1].dim() : 0;
  }

  bool contains(std::size_t i, const FpVec& v) const {
    if (i == 0) return true;
    if (i <= powers.size()) return powers[i - 1].contains(v);
    return vec_is_zero(v);  // past the computed chain the power is zero
  }

  // extend to omega^{upto}; no-op when the chain already vanished
  void extend(const GroupAlgebra& ga, std::size_t upto) {
    if (powers.empty()) {
      EchelonBasis e(p, G->n);
      for (u32 g = 1; g < G->n; ++g) e.insert(ga.one_minus(g));
      powers.push_back(std::move(e));
    }
    while (powers.size() < upto && powers.back().dim() > 0) {
      const EchelonBasis& prev = powers.back();
      EchelonBasis next(p, G->n);
      for (const FpVec& b : prev.rows())
        for (u32 s : G->gens) {
          FpVec v = ga.mul_elem(b, s);
          for (std::size_t c = 0; c < v.size(); ++c) v[c] = ga.F.sub(v[c], b[c]);
          next.insert(std::move(v));
        }
      bool vanished = next.dim() == 0;
      powers.push_back(std::move(next));
      if (vanished) break;
    }
  }
};

inline OmegaPowers compute_omega_powers(const GroupAlgebra& ga, std::size_t upto) {
  OmegaPowers op;
  op.p = ga.p();
  op.G = ga.G;
  op.extend(ga, upto == 0 ? 1 : upto);
  return op;
}

inline Subspace omega_power(const GroupAlgebra& ga, std::size_t i) {
  if (i == 0) throw std::invalid_argument("omega_power: index must be >= 1");
  OmegaPowers op = compute_omega_powers(ga, i);
  if (i <= op.powers.size()) return Subspace::from_echelon(op.powers[i - 1]);
  return Subspace::zero(ga.p(), ga.dim());
}

struct Filtration {
  u32 p = 2;
  std::vector<Subgroup> chain;  // chain[0] = G_1 = G, descending
  std::string route;            // "omega" or "dimension_subgroup"
  bool reaches_trivial = false;
  std::shared_ptr<OmegaPowers> omega;  // present on the omega route

  std::size_t length() const { return chain.size(); }
  // G_i with the convention G_i = trivial beyond the computed chain
  const Subgroup& at(std::size_t i) const {
    if (i == 0) throw std::out_of_range("Filtration::at: indices start at 1");
    return i <= chain.size() ? chain[i - 1] : chain.back();
  }
};

namespace detail {

inline Subgroup filtration_subgroup_from_omega(const FiniteGroup& g, const GroupAlgebra& ga,
                                               const OmegaPowers& op, std::size_t i) {
  std::vector<u32> elems;
  for (u32 x = 0; x < g.n; ++x)
    if (op.contains(i, ga.one_minus(x))) elems.push_back(x);
  Subgroup s;
  s.member.assign(g.n, 0);
  for (u32 x : elems) s.member[x] = 1;
  s.elems = std::move(elems);
  s.gens = s.elems;
  return s;
}

}  // namespace detail

inline Filtration zassenhaus_filtration_via_omega(const FiniteGroup& g, u32 p) {
  GroupAlgebra ga(g, p);
  Filtration f;
  f.p = p;
  f.route = "omega";
  f.omega = std::make_shared<OmegaPowers>();
  f.omega->p = p;
  f.omega->G = &g;
  for (std::size_t i = 1; i <= g.n + 1; ++i) {
    f.omega->extend(ga, i);
    Subgroup gi = detail::filtration_subgroup_from_omega(g, ga, *f.omega, i);
    if (!is_subgroup(g, gi.elems))
      throw std::logic_error("zassenhaus_filtration: level " + std::to_string(i) + " is not a subgroup");
    // The subgroup chain may plateau while omega still shrinks (p-th powers
    // entering at degree p), so stabilization is detected on omega itself:
    // omega^{i+1} = omega^i pins the whole tail.
    if (i > 1 && f.omega->dim(i) == f.omega->dim(i - 1) && f.omega->dim(i) > 0) return f;
    f.chain.push_back(std::move(gi));
    if (f.chain.back().is_trivial()) {
      f.reaches_trivial = true;
      return f;
    }
  }
  throw std::domain_error("zassenhaus_filtration: chain did not stabilize within |G| steps");
}

// D_1 = G, D_i = [D_{i-1}, G] * D_{ceil(i/p)}^p
inline Filtration zassenhaus_filtration_via_dimension_subgroups(const FiniteGroup& g, u32 p) {
  Filtration f;
  f.p = p;
  f.route = "dimension_subgroup";
  f.chain.push_back(whole_group(g));
  for (std::size_t i = 2; i <= std::size_t(g.n) + 1; ++i) {
    const Subgroup& prev = f.chain[i - 2];
    const Subgroup& frac = f.chain[(i + p - 1) / p - 1];  // D_{ceil(i/p)}
    Subgroup comm = commutator_subgroup(g, prev, whole_group(g));
    Subgroup powc = power_subgroup(g, frac, p);
    std::vector<u32> seed = comm.elems;
    seed.insert(seed.end(), powc.elems.begin(), powc.elems.end());
    Subgroup di = subgroup_generated(g, std::move(seed));
    // a plateau is only final once it swallows the ceil(i/p) input too;
    // until then deeper fractional indices can still shrink the chain
    if (di == prev && di == frac && !di.is_trivial()) return f;
    f.chain.push_back(std::move(di));
    if (f.chain.back().is_trivial()) {
      f.reaches_trivial = true;
      return f;
    }
  }
  throw std::domain_error("zassenhaus_filtration: chain did not stabilize within |G| steps");
}

inline Filtration zassenhaus_filtration(const FiniteGroup& g, u32 p) {
  if (g.n <= config().omega_route_cap) return zassenhaus_filtration_via_omega(g, p);
  return zassenhaus_filtration_via_dimension_subgroups(g, p);
}

// [G_i, G_j] <= G_{i+j}, g in G_i => g^p in G_{ip}, and each quotient
// G_i/G_{i+1} elementary abelian of exponent p.  The commutator containments
// go through complete subgroup computations, not sampling.
inline CheckReport check_filtration(const FiniteGroup& g, const Filtration& f) {
  CheckReport rep;
  rep.subject = g.name;
  const std::size_t len = f.length();
  bool comm_ok = true;
  for (std::size_t i = 1; i <= len && comm_ok; ++i)
    for (std::size_t j = i; j <= len && comm_ok; ++j) {
      Subgroup c = commutator_subgroup(g, f.at(i), f.at(j));
      const Subgroup& target = f.at(std::min(i + j, len + 1));
      for (u32 x : c.elems)
        if (!target.contains(x)) {
          rep.add_fail("commutator_containment", "[G_" + std::to_string(i) + ",G_" + std::to_string(j) +
                                                     "] has element " + std::to_string(x) + " outside G_" +
                                                     std::to_string(i + j));
          comm_ok = false;
          break;
        }
    }
  if (comm_ok) rep.add_pass("commutator_containment", "all index pairs up to " + std::to_string(len));

  bool pow_ok = true;
  for (std::size_t i = 1; i <= len && pow_ok; ++i) {
    const Subgroup& target = f.at(std::min(i * f.p, len + 1));
    for (u32 x : f.at(i).elems)
      if (!target.contains(g.pow(x, f.p))) {
        rep.add_fail("power_containment", "element " + std::to_string(x) + " of G_" + std::to_string(i) +
                                              " has p-th power outside G_" + std::to_string(i * f.p));
        pow_ok = false;
        break;
      }
  }
  if (pow_ok) rep.add_pass("power_containment");

  bool quot_ok = true;
  for (std::size_t i = 1; i <= len && quot_ok; ++i) {
    const Subgroup& gi = f.at(i);
    const Subgroup& next = f.at(std::min(i + 1, len + 1));
    for (u32 x : gi.elems) {
      if (!next.contains(g.pow(x, f.p))) quot_ok = false;
      for (u32 s : gi.gens)
        if (!next.contains(g.comm(x, s))) quot_ok = false;
      if (!quot_ok) {
        rep.add_fail("elementary_abelian_quotients", "G_" + std::to_string(i) + "/G_" + std::to_string(i + 1) +
                                                         " fails at element " + std::to_string(x));
        break;
      }
    }
  }
  if (quot_ok) rep.add_pass("elementary_abelian_quotients");

  rep.add(f.reaches_trivial ? "reaches_trivial" : "stabilizes_above_trivial",
          f.reaches_trivial ? "pass" : (g.is_p_group(f.p) ? "fail" : "skip"),
          f.reaches_trivial ? "chain length " + std::to_string(len) : "stabilized at order " +
              std::to_string(f.chain.back().order()));
  return rep;
}

// Graded associative envelope: the degree components omega^i/omega^{i+1}.
// Products are computed in F_pG and read off modulo the deeper power, so the
// envelope is carried by the OmegaPowers chain rather than re-tabulated.
struct GradedEnvelope {
  u32 p = 2;
  const FiniteGroup* G = nullptr;
  std::shared_ptr<OmegaPowers> omega;
  std::vector<std::size_t> degree_dims;  // index d >= 1: dim omega^d/omega^{d+1}
};

inline GradedEnvelope graded_envelope(const FiniteGroup& g, const Filtration& f) {
  if (!f.omega)
    throw std::invalid_argument("graded_envelope: filtration was computed without omega powers (group too "
                                "large for the direct route)");
  GradedEnvelope e;
  e.p = f.p;
  e.G = &g;
  e.omega = f.omega;
  GroupAlgebra ga(g, f.p);
  // make sure the chain is computed down to zero
  e.omega->extend(ga, g.n + 1);
  for (std::size_t i = 1; i + 1 <= e.omega->powers.size() + 1; ++i) {
    std::size_t di = e.omega->dim(i), dn = e.omega->dim(i + 1);
    if (di == 0) break;
    e.degree_dims.push_back(di - dn);
  }
  return e;
}

}  // namespace burnside

#endif  // BURNSIDE_GROUP_ALGEBRA_HPP
