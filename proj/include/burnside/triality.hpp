// Groups with triality: the defining predicate, Moufang-loop extraction, and
// the doubling constructions used as test data.
//
// Doubling a plain group Q works through the coordinate-permutation action of
// S_3 on triples: inside Q^3 (modulo the diagonal centre, which S_3 fixes)
// the subgroup generated by (s, s^-1, 1) and its cyclic shifts is invariant
// under coordinate permutations, and those permutations satisfy the triality
// identity.  The extracted sigma-commutator set is {(u, u^-1, 1)} with
// product (u, u^-1, 1) * (v, v^-1, 1) = (uv, (uv)^-1, 1), i.e. a copy of Q.
// No doubling formula is trusted: every construction is certified by
// verify_triality before use.

#ifndef BURNSIDE_TRIALITY_HPP
#define BURNSIDE_TRIALITY_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "burnside/group.hpp"
#include "burnside/loop.hpp"
#include "burnside/report.hpp"

namespace burnside {

struct TrialityGroup {
  FiniteGroup G;
  GroupMap rho, sigma;
  std::vector<u32> loop_gen_elems;  // elements of U generating the loop
  // When built by doubling: base_of[g] is defined for g in U and names the
  // base-group element it came from.
  std::vector<long long> base_of;
  std::string base_name;
};

// Checks, clause by clause: rho and sigma are automorphisms, the S_3
// relations rho^3 = sigma^2 = (rho sigma)^2 = 1 (composition order: apply rho
// first), and [x,sigma] [x,sigma]^rho [x,sigma]^{rho^2} = 1 for every x.
inline CheckReport verify_triality(const FiniteGroup& g, const GroupMap& rho, const GroupMap& sigma) {
  CheckReport rep;
  rep.subject = g.name;
  std::string w;
  bool rho_auto = rho.is_automorphism(g, &w);
  rep.add("rho_automorphism", rho_auto ? "pass" : "fail", rho_auto ? "" : w);
  bool sigma_auto = sigma.is_automorphism(g, &w);
  rep.add("sigma_automorphism", sigma_auto ? "pass" : "fail", sigma_auto ? "" : w);
  if (!rho_auto || !sigma_auto) {
    rep.add_skip("s3_relations", "maps are not automorphisms");
    rep.add_skip("triality_identity", "maps are not automorphisms");
    return rep;
  }
  GroupMap rho2 = rho.then(rho);
  bool r3 = rho2.then(rho).is_identity();
  bool s2 = sigma.then(sigma).is_identity();
  GroupMap rs = rho.then(sigma);
  bool rs2 = rs.then(rs).is_identity();
  if (r3 && s2 && rs2)
    rep.add_pass("s3_relations");
  else
    rep.add_fail("s3_relations", std::string("failed: ") + (!r3 ? "rho^3 " : "") + (!s2 ? "sigma^2 " : "") +
                                     (!rs2 ? "(rho sigma)^2" : ""));
  bool tri = true;
  for (u32 x = 0; x < g.n && tri; ++x) {
    u32 c = g.mul(g.inverse(x), sigma(x));  // [x, sigma]
    u32 prod = g.mul(g.mul(c, rho(c)), rho2(c));
    if (prod != 0) {
      rep.add_fail("triality_identity", "witness x = " + std::to_string(x));
      tri = false;
    }
  }
  if (tri) rep.add_pass("triality_identity", "all " + std::to_string(g.n) + " elements");
  return rep;
}

// U = {[x, sigma]} with its loop indexing inside G.
struct SigmaCommutatorSet {
  std::vector<u32> elems;   // loop index -> group element, identity first
  std::vector<int> index_of;  // group element -> loop index or -1
};

struct LoopExtraction {
  Loop loop;
  SigmaCommutatorSet U;
  CheckReport moufang;
};

inline LoopExtraction moufang_from_triality(const TrialityGroup& t) {
  const FiniteGroup& g = t.G;
  CheckReport pred = verify_triality(g, t.rho, t.sigma);
  if (!pred.all_passed())
    throw std::invalid_argument("moufang_from_triality: triality predicate fails on " + g.name + ":\n" +
                                pred.summary());
  SigmaCommutatorSet u;
  u.index_of.assign(g.n, -1);
  std::vector<char> in(g.n, 0);
  for (u32 x = 0; x < g.n; ++x) {
    u32 c = g.mul(g.inverse(x), t.sigma(x));
    if (!in[c]) {
      in[c] = 1;
      u.elems.push_back(c);
    }
  }
  std::sort(u.elems.begin(), u.elems.end());  // identity (0) lands at loop index 0
  for (std::size_t i = 0; i < u.elems.size(); ++i) u.index_of[u.elems[i]] = static_cast<int>(i);
  GroupMap rho2 = t.rho.then(t.rho);
  const u32 m = static_cast<u32>(u.elems.size());
  std::vector<u16> table(std::size_t(m) * m);
  for (u32 i = 0; i < m; ++i) {
    u32 ai = g.inverse(u.elems[i]);
    u32 l = t.rho(ai), r = rho2(ai);
    for (u32 j = 0; j < m; ++j) {
      u32 prod = g.mul(g.mul(l, u.elems[j]), r);
      if (u.index_of[prod] < 0)
        throw std::logic_error("moufang_from_triality: U is not closed under the loop product (element " +
                               std::to_string(prod) + ")");
      table[std::size_t(i) * m + j] = static_cast<u16>(u.index_of[prod]);
    }
  }
  LoopExtraction ext;
  ext.loop = Loop::from_table(g.name + "_loop", m, std::move(table));
  ext.U = std::move(u);
  ext.moufang = check_moufang(ext.loop);
  return ext;
}

// G = A x A with rho(x,y) = (y^-1, x y^-1) and sigma(x,y) = (y,x).  Only
// valid for abelian A; the predicate, not the formula, is the oracle.
inline TrialityGroup abelian_doubling(const FiniteGroup& a, const GroupOptions& opts = {}) {
  for (u32 x = 0; x < a.n; ++x)
    for (u32 y = 0; y < a.n; ++y)
      if (a.mul(x, y) != a.mul(y, x))
        throw std::invalid_argument("abelian_doubling: " + a.name + " is not abelian");
  TrialityGroup t;
  t.G = FiniteGroup::direct_product(a, a, opts);
  t.G.name = "abelian_doubling(" + a.name + ")";
  auto idx = [&](u32 x, u32 y) { return x * a.n + y; };
  t.rho.images.resize(t.G.n);
  t.sigma.images.resize(t.G.n);
  for (u32 x = 0; x < a.n; ++x)
    for (u32 y = 0; y < a.n; ++y) {
      u32 yi = a.inverse(y);
      t.rho.images[idx(x, y)] = idx(yi, a.mul(x, yi));
      t.sigma.images[idx(x, y)] = idx(y, x);
    }
  t.base_name = a.name;
  t.base_of.assign(t.G.n, -1);
  // [ (x,y), sigma ] = (x^-1 y, y^-1 x); the base element is u = x^-1 y
  for (u32 u = 0; u < a.n; ++u) t.base_of[idx(u, a.inverse(u))] = u;
  for (u32 s : a.gens) t.loop_gen_elems.push_back(idx(s, a.inverse(s)));
  CheckReport rep = verify_triality(t.G, t.rho, t.sigma);
  if (!rep.all_passed())
    throw std::logic_error("abelian_doubling: certification failed:\n" + rep.summary());
  return t;
}

namespace detail {

// Subgroup of Q^3 / diag(Z(Q)) generated by (s, s^-1, 1) and its coordinate
// shifts, with S_3 acting by permuting coordinates.  Its order works out to
// |Q|^2 |Q'| / |Z| when Q' <= Z (so exactly |Q|^2 for abelian and class-2
// groups with Q' = Z), which is what keeps the doubled group small.
struct TripleQuotient {
  const FiniteGroup* q;
  std::vector<u32> zelems;  // centre of Q
  std::vector<u64> keys;    // canonical triple per element id, sorted
  std::vector<u32> id_dense;  // key -> element id + 1, 0 = absent

  u64 encode(u32 x, u32 y, u32 z) const { return (u64(x) * q->n + y) * q->n + z; }
  void decode(u64 k, u32& x, u32& y, u32& z) const {
    z = static_cast<u32>(k % q->n);
    k /= q->n;
    y = static_cast<u32>(k % q->n);
    x = static_cast<u32>(k / q->n);
  }

  u64 canon(u32 x, u32 y, u32 z) const {
    u64 best = ~0ull;
    for (u32 c : zelems) {
      u64 k = encode(q->mul(x, c), q->mul(y, c), q->mul(z, c));
      best = std::min(best, k);
    }
    return best;
  }

  u64 mul_key(u64 a, u64 b) const {
    u32 x1, y1, z1, x2, y2, z2;
    decode(a, x1, y1, z1);
    decode(b, x2, y2, z2);
    return canon(q->mul(x1, x2), q->mul(y1, y2), q->mul(z1, z2));
  }

  void index_keys() {
    id_dense.assign(u64(q->n) * q->n * q->n, 0);
    for (std::size_t i = 0; i < keys.size(); ++i) id_dense[keys[i]] = static_cast<u32>(i + 1);
  }
  u32 id_at(u64 k) const {
    u32 v = id_dense[k];
    if (v == 0) throw std::logic_error("group_doubling: triple set is not closed");
    return v - 1;
  }
};

}  // namespace detail

// Triality structure over an arbitrary base group Q of order coprime to 6.
// The extracted loop's table equals Q's under base_of relabeling.
inline TrialityGroup group_doubling(const FiniteGroup& q, const GroupOptions& opts = {}) {
  if (q.n % 2 == 0 || q.n % 3 == 0)
    throw std::invalid_argument("group_doubling: |Q| = " + std::to_string(q.n) + " is not coprime to 6");
  detail::TripleQuotient tq;
  tq.q = &q;
  tq.zelems = center(q).elems;

  // generating triples: (s, s^-1, 1) and cyclic shifts, for s and s^-1
  std::vector<u64> genkeys;
  std::vector<u32> qgens = q.gens;
  for (u32 s : q.gens) qgens.push_back(q.inverse(s));
  for (u32 s : qgens) {
    u32 si = q.inverse(s);
    genkeys.push_back(tq.canon(s, si, 0));
    genkeys.push_back(tq.canon(si, 0, s));
    genkeys.push_back(tq.canon(0, s, si));
  }

  // BFS closure
  std::unordered_map<u64, u32> seen;
  std::vector<u64> bfs{tq.canon(0, 0, 0)};
  seen.emplace(bfs[0], 0);
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (u64 gk : genkeys) {
      u64 nk = tq.mul_key(bfs[i], gk);
      if (seen.emplace(nk, static_cast<u32>(bfs.size())).second) {
        bfs.push_back(nk);
        if (bfs.size() > opts.max_order)
          throw std::invalid_argument("group_doubling: closure exceeds order cap " +
                                      std::to_string(opts.max_order) +
                                      " (raise BURNSIDE_MAX_GROUP_ORDER to allow)");
      }
    }
  seen.clear();
  // stable indexing: sort keys; identity key 0 stays first
  std::sort(bfs.begin(), bfs.end());
  tq.keys = std::move(bfs);
  tq.index_keys();

  const u32 n = static_cast<u32>(tq.keys.size());
  if (n > 65535) throw std::invalid_argument("group_doubling: order exceeds the u16 table limit");
  std::vector<u16> table(std::size_t(n) * n);
  for (u32 i = 0; i < n; ++i)
    for (u32 j = 0; j < n; ++j)
      table[std::size_t(i) * n + j] = static_cast<u16>(tq.id_at(tq.mul_key(tq.keys[i], tq.keys[j])));

  std::vector<u32> ggens;
  for (u64 gk : genkeys) ggens.push_back(tq.id_at(gk));
  std::sort(ggens.begin(), ggens.end());
  ggens.erase(std::unique(ggens.begin(), ggens.end()), ggens.end());

  TrialityGroup t;
  t.G = FiniteGroup::from_table("group_doubling(" + q.name + ")", n, std::move(table), std::move(ggens), opts);

  // sigma swaps the first two coordinates; rho shifts (x,y,z) -> (y,z,x)
  t.rho.images.resize(n);
  t.sigma.images.resize(n);
  for (u32 i = 0; i < n; ++i) {
    u32 x, y, z;
    tq.decode(tq.keys[i], x, y, z);
    t.rho.images[i] = tq.id_at(tq.canon(y, z, x));
    t.sigma.images[i] = tq.id_at(tq.canon(y, x, z));
  }

  // base-element bookkeeping: an element of U has a unique representative
  // (u, u^-1, zc) with zc central, namely the one whose third coordinate is
  // central; u = x zc^-1.
  t.base_name = q.name;
  t.base_of.assign(n, -1);
  std::vector<char> zmember(q.n, 0);
  for (u32 c : tq.zelems) zmember[c] = 1;
  for (u32 i = 0; i < n; ++i) {
    u32 x, y, z;
    tq.decode(tq.keys[i], x, y, z);
    if (!zmember[z]) continue;
    u32 u = q.mul(x, q.inverse(z));
    if (q.mul(y, q.inverse(z)) == q.inverse(u)) t.base_of[i] = u;
  }
  for (u32 s : q.gens) {
    u32 si = q.inverse(s);
    t.loop_gen_elems.push_back(tq.id_at(tq.canon(s, si, 0)));
  }

  CheckReport rep = verify_triality(t.G, t.rho, t.sigma);
  if (!rep.all_passed())
    throw std::logic_error("group_doubling: certification failed on " + q.name + ":\n" + rep.summary());
  return t;
}

// a^sigma = a^-1 inside G, for every a in U.
inline bool sigma_inverts_u(const TrialityGroup& t, const SigmaCommutatorSet& u) {
  for (u32 a : u.elems)
    if (t.sigma(a) != t.G.inverse(a)) return false;
  return true;
}

}  // namespace burnside

#endif  // BURNSIDE_TRIALITY_HPP
