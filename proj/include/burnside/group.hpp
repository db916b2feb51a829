// Finite groups as Cayley tables: validation, commutator calculus, subgroup
// machinery, and the stock of test groups (cyclic, Heisenberg p^3, modular
// p^3, direct products).
//
// Convention used repo-wide: [x,y] = x^-1 y^-1 x y, and maps compose left to
// right ("apply rho first, then sigma" for the product rho*sigma).

#ifndef BURNSIDE_GROUP_HPP
#define BURNSIDE_GROUP_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "burnside/config.hpp"
#include "burnside/fp.hpp"
#include "burnside/report.hpp"

namespace burnside {

using u16 = std::uint16_t;

struct GroupOptions {
  std::uint64_t max_order = config().max_group_order;
  bool validate = true;
};

class FiniteGroup {
 public:
  u32 n = 1;
  std::vector<u16> table;  // n*n, table[x*n+y] = x*y
  std::vector<u16> inv;
  std::vector<u32> gens;  // a generating set; never empty for n > 1
  std::string name = "trivial";

  FiniteGroup() : table(1, 0), inv(1, 0) {}

  u32 mul(u32 x, u32 y) const { return table[std::size_t(x) * n + y]; }
  u32 inverse(u32 x) const { return inv[x]; }
  u32 conj(u32 x, u32 g) const { return mul(mul(inverse(g), x), g); }  // x^g
  u32 comm(u32 x, u32 y) const { return mul(mul(inverse(x), inverse(y)), mul(x, y)); }

  u32 pow(u32 x, long long e) const {
    if (e < 0) return pow(inverse(x), -e);
    u32 r = 0, b = x;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  u32 element_order(u32 x) const {
    u32 k = 1, y = x;
    while (y != 0) {
      y = mul(y, x);
      ++k;
    }
    return k;
  }

  u32 exponent() const {
    std::uint64_t e = 1;
    for (u32 x = 0; x < n; ++x) e = std::lcm<std::uint64_t>(e, element_order(x));
    return static_cast<u32>(e);
  }

  bool is_p_group(u32 p) const {
    u32 m = n;
    while (m % p == 0) m /= p;
    return m == 1;
  }

  static FiniteGroup from_table(std::string name, u32 n, std::vector<u16> table,
                                std::vector<u32> gens = {}, const GroupOptions& opts = {});

  static FiniteGroup trivial() { return FiniteGroup(); }

  static FiniteGroup cyclic(u32 m, const GroupOptions& opts = {}) {
    std::vector<u16> t(std::size_t(m) * m);
    for (u32 x = 0; x < m; ++x)
      for (u32 y = 0; y < m; ++y) t[std::size_t(x) * m + y] = static_cast<u16>((x + y) % m);
    std::vector<u32> gens;
    if (m > 1) gens.push_back(1);
    return from_table("C" + std::to_string(m), m, std::move(t), std::move(gens), opts);
  }

  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const GroupOptions& opts = {}) {
    const u32 m = a.n * b.n;
    if (std::uint64_t(a.n) * b.n > opts.max_order)
      throw std::invalid_argument("direct_product: order exceeds cap");
    std::vector<u16> t(std::size_t(m) * m);
    auto idx = [&](u32 x, u32 y) { return x * b.n + y; };
    for (u32 x1 = 0; x1 < a.n; ++x1)
      for (u32 y1 = 0; y1 < b.n; ++y1)
        for (u32 x2 = 0; x2 < a.n; ++x2)
          for (u32 y2 = 0; y2 < b.n; ++y2)
            t[std::size_t(idx(x1, y1)) * m + idx(x2, y2)] =
                static_cast<u16>(idx(a.mul(x1, x2), b.mul(y1, y2)));
    std::vector<u32> gens;
    for (u32 g : a.gens) gens.push_back(idx(g, 0));
    for (u32 g : b.gens) gens.push_back(idx(0, g));
    GroupOptions o = opts;
    o.validate = false;  // product of valid tables is valid
    auto r = from_table(a.name + "x" + b.name, m, std::move(t), std::move(gens), o);
    return r;
  }

  static FiniteGroup elementary_abelian(u32 p, u32 rank, const GroupOptions& opts = {}) {
    FiniteGroup g = cyclic(p, opts);
    FiniteGroup r = g;
    for (u32 i = 1; i < rank; ++i) r = direct_product(r, g, opts);
    r.name = "C" + std::to_string(p) + "^" + std::to_string(rank);
    return r;
  }

  // Heisenberg group of order p^3, exponent p (p odd): triples (a,b,c) with
  // (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b').
  static FiniteGroup heisenberg(u32 p, const GroupOptions& opts = {}) {
    const u32 m = p * p * p;
    auto idx = [&](u32 a, u32 b, u32 c) { return (a * p + b) * p + c; };
    std::vector<u16> t(std::size_t(m) * m);
    for (u32 a = 0; a < p; ++a)
      for (u32 b = 0; b < p; ++b)
        for (u32 c = 0; c < p; ++c)
          for (u32 a2 = 0; a2 < p; ++a2)
            for (u32 b2 = 0; b2 < p; ++b2)
              for (u32 c2 = 0; c2 < p; ++c2)
                t[std::size_t(idx(a, b, c)) * m + idx(a2, b2, c2)] =
                    static_cast<u16>(idx((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p));
    return from_table("Heis" + std::to_string(m), m, std::move(t), {idx(1, 0, 0), idx(0, 1, 0)}, opts);
  }

  // Modular group of order p^3, exponent p^2: <x,y | x^{p^2}=y^p=1,
  // y^-1 x y = x^{1+p}>.  Elements x^a y^b, index a*p+b.
  static FiniteGroup modular_p3(u32 p, const GroupOptions& opts = {}) {
    const u32 p2 = p * p, m = p2 * p;
    // y x y^-1 = x^t with t = (1+p)^-1 mod p^2, so that y^-1 x y = x^{1+p}.
    u32 t_pow = 1;
    {
      // (1+p)^-1 mod p^2 equals (1+p)^{p-1} since (1+p)^p = 1 mod p^2
      for (u32 i = 0; i + 1 < p; ++i) t_pow = (t_pow * (1 + p)) % p2;
    }
    // precompute t^b mod p^2
    std::vector<u32> tb(p, 1);
    for (u32 b = 1; b < p; ++b) tb[b] = (tb[b - 1] * t_pow) % p2;
    auto idx = [&](u32 a, u32 b) { return a * p + b; };
    std::vector<u16> tab(std::size_t(m) * m);
    for (u32 a = 0; a < p2; ++a)
      for (u32 b = 0; b < p; ++b)
        for (u32 a2 = 0; a2 < p2; ++a2)
          for (u32 b2 = 0; b2 < p; ++b2)
            tab[std::size_t(idx(a, b)) * m + idx(a2, b2)] =
                static_cast<u16>(idx((a + a2 * tb[b]) % p2, (b + b2) % p));
    return from_table("Mod" + std::to_string(m), m, std::move(tab), {idx(1, 0), idx(0, 1)}, opts);
  }
};

// Bijective multiplicative self-map of a group, stored as an index permutation.
struct GroupMap {
  std::vector<u32> images;

  u32 operator()(u32 x) const { return images[x]; }
  std::size_t size() const { return images.size(); }

  bool is_permutation() const {
    std::vector<char> seen(images.size(), 0);
    for (u32 y : images) {
      if (y >= images.size() || seen[y]) return false;
      seen[y] = 1;
    }
    return true;
  }

  // images[xy] = images[x] images[y] for all pairs; witness set on failure.
  bool is_multiplicative(const FiniteGroup& g, std::string* witness = nullptr) const {
    for (u32 x = 0; x < g.n; ++x)
      for (u32 y = 0; y < g.n; ++y)
        if (images[g.mul(x, y)] != g.mul(images[x], images[y])) {
          if (witness)
            *witness = "pair (" + std::to_string(x) + "," + std::to_string(y) + ")";
          return false;
        }
    return true;
  }

  bool is_automorphism(const FiniteGroup& g, std::string* witness = nullptr) const {
    if (images.size() != g.n || !is_permutation()) {
      if (witness) *witness = "not a permutation";
      return false;
    }
    return is_multiplicative(g, witness);
  }

  static GroupMap identity(u32 n) {
    GroupMap m;
    m.images.resize(n);
    for (u32 i = 0; i < n; ++i) m.images[i] = i;
    return m;
  }

  // apply this first, then o
  GroupMap then(const GroupMap& o) const {
    GroupMap m;
    m.images.resize(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) m.images[i] = o.images[images[i]];
    return m;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images.size(); ++i)
      if (images[i] != i) return false;
    return true;
  }
};

namespace detail {

inline void validate_table(const FiniteGroup& g) {
  const u32 n = g.n;
  if (g.table.size() != std::size_t(n) * n) throw std::invalid_argument("group: table size mismatch");
  // identity at index 0
  for (u32 x = 0; x < n; ++x)
    if (g.mul(0, x) != x || g.mul(x, 0) != x)
      throw std::invalid_argument("group: index 0 is not a two-sided identity");
  // Latin square
  std::vector<char> seen(n);
  for (u32 x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (u32 y = 0; y < n; ++y) {
      u32 v = g.mul(x, y);
      if (v >= n || seen[v]) throw std::invalid_argument("group: row " + std::to_string(x) + " is not a permutation");
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (u32 y = 0; y < n; ++y) {
      u32 v = g.mul(y, x);
      if (seen[v]) throw std::invalid_argument("group: column " + std::to_string(x) + " is not a permutation");
      seen[v] = 1;
    }
  }
}

// Closure of gens under right multiplication, starting at the identity.
inline std::vector<u32> closure(const FiniteGroup& g, const std::vector<u32>& gens) {
  std::vector<char> in(g.n, 0);
  std::vector<u32> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (u32 s : gens) {
      u32 y = g.mul(elems[i], s);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

inline void validate_associativity(const FiniteGroup& g) {
  const u32 n = g.n;
  if (std::uint64_t(n) * n * n <= 32u * 1024 * 1024) {
    for (u32 x = 0; x < n; ++x)
      for (u32 y = 0; y < n; ++y) {
        const u32 xy = g.mul(x, y);
        for (u32 z = 0; z < n; ++z)
          if (g.mul(xy, z) != g.mul(x, g.mul(y, z)))
            throw std::invalid_argument("group: associativity fails at (" + std::to_string(x) + "," +
                                        std::to_string(y) + "," + std::to_string(z) + ")");
      }
    return;
  }
  // Light's associativity test against a verified generating set.
  if (g.gens.empty()) throw std::invalid_argument("group: large table requires a generating set");
  if (closure(g, g.gens).size() != n)
    throw std::invalid_argument("group: declared generators do not generate");
  for (u32 a : g.gens)
    for (u32 x = 0; x < n; ++x) {
      const u32 xa = g.mul(x, a);
      for (u32 y = 0; y < n; ++y)
        if (g.mul(xa, y) != g.mul(x, g.mul(a, y)))
          throw std::invalid_argument("group: associativity fails at generator " + std::to_string(a));
    }
}

}  // namespace detail

inline FiniteGroup FiniteGroup::from_table(std::string name, u32 n, std::vector<u16> table,
                                           std::vector<u32> gens, const GroupOptions& opts) {
  if (n == 0) throw std::invalid_argument("group: empty table");
  if (n > opts.max_order)
    throw std::invalid_argument("group: order " + std::to_string(n) + " exceeds cap " +
                                std::to_string(opts.max_order) +
                                " (raise BURNSIDE_MAX_GROUP_ORDER to allow)");
  FiniteGroup g;
  g.n = n;
  g.table = std::move(table);
  g.gens = std::move(gens);
  g.name = std::move(name);
  if (g.gens.empty() && n > 1)
    for (u32 x = 1; x < n; ++x) g.gens.push_back(x);
  if (opts.validate) {
    detail::validate_table(g);
    detail::validate_associativity(g);
  }
  g.inv.resize(n);
  for (u32 x = 0; x < n; ++x)
    for (u32 y = 0; y < n; ++y)
      if (g.mul(x, y) == 0) {
        g.inv[x] = static_cast<u16>(y);
        break;
      }
  return g;
}

// ---------------------------------------------------------------------------
// Subgroups

struct Subgroup {
  std::vector<u32> elems;    // sorted, always contains 0
  std::vector<char> member;  // indexed by group element
  std::vector<u32> gens;

  u32 order() const { return static_cast<u32>(elems.size()); }
  bool contains(u32 x) const { return member[x] != 0; }
  bool is_trivial() const { return elems.size() == 1; }

  static Subgroup trivial(const FiniteGroup& g) {
    Subgroup s;
    s.elems = {0};
    s.member.assign(g.n, 0);
    s.member[0] = 1;
    return s;
  }

  bool operator==(const Subgroup& o) const { return elems == o.elems; }
};

inline Subgroup subgroup_generated(const FiniteGroup& g, std::vector<u32> gens) {
  Subgroup s;
  s.member.assign(g.n, 0);
  s.member[0] = 1;
  std::vector<u32> bfs{0};
  std::vector<u32> kept;
  for (u32 x : gens)
    if (x != 0 && !std::count(kept.begin(), kept.end(), x)) kept.push_back(x);
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (u32 a : kept) {
      u32 y = g.mul(bfs[i], a);
      if (!s.member[y]) {
        s.member[y] = 1;
        bfs.push_back(y);
      }
    }
  s.elems = bfs;
  std::sort(s.elems.begin(), s.elems.end());
  s.gens = std::move(kept);
  return s;
}

inline bool is_subgroup(const FiniteGroup& g, const std::vector<u32>& elems) {
  std::vector<char> in(g.n, 0);
  for (u32 x : elems) in[x] = 1;
  if (!in[0]) return false;
  for (u32 x : elems)
    for (u32 y : elems)
      if (!in[g.mul(x, y)]) return false;
  return true;
}

// Least normal subgroup of G containing S.  Conjugation closure runs over
// G's generators, which reach every conjugator as a word.
inline Subgroup normal_closure(const FiniteGroup& g, std::vector<u32> seed) {
  std::vector<u32> work = std::move(seed);
  for (;;) {
    Subgroup s = subgroup_generated(g, work);
    bool grew = false;
    for (u32 x : s.elems) {
      if (x == 0) continue;
      for (u32 a : g.gens) {
        u32 y = g.conj(x, a);
        if (!s.member[y]) {
          work.push_back(y);
          grew = true;
        }
        u32 z = g.conj(x, g.inverse(a));
        if (!s.member[z]) {
          work.push_back(z);
          grew = true;
        }
      }
    }
    if (!grew) return s;
  }
}

// N' = <[N,N], {x^p : x in N}> for a subgroup N.
inline Subgroup n_prime(const FiniteGroup& g, const Subgroup& nsub, u32 p) {
  if (!is_subgroup(g, nsub.elems)) throw std::invalid_argument("n_prime: N is not a subgroup");
  std::vector<u32> gens;
  for (u32 a : nsub.elems)
    for (u32 b : nsub.elems) {
      u32 c = g.comm(a, b);
      if (c != 0) gens.push_back(c);
    }
  for (u32 a : nsub.elems) {
    u32 c = g.pow(a, p);
    if (c != 0) gens.push_back(c);
  }
  return subgroup_generated(g, std::move(gens));
}

inline Subgroup center(const FiniteGroup& g) {
  std::vector<u32> elems;
  for (u32 x = 0; x < g.n; ++x) {
    bool central = true;
    for (u32 s : g.gens)
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    if (central) elems.push_back(x);
  }
  Subgroup s;
  s.member.assign(g.n, 0);
  for (u32 x : elems) s.member[x] = 1;
  s.elems = std::move(elems);
  s.gens = s.elems;
  return s;
}

// [A, B] for A, B normal in G: normal closure of generator commutators.
inline Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<u32> seed;
  const std::vector<u32>& ga = a.gens.empty() ? a.elems : a.gens;
  const std::vector<u32>& gb = b.gens.empty() ? b.elems : b.gens;
  for (u32 x : ga)
    for (u32 y : gb) {
      u32 c = g.comm(x, y);
      if (c != 0) seed.push_back(c);
    }
  return normal_closure(g, std::move(seed));
}

inline Subgroup whole_group(const FiniteGroup& g) {
  Subgroup s;
  s.member.assign(g.n, 1);
  s.elems.resize(g.n);
  for (u32 x = 0; x < g.n; ++x) s.elems[x] = x;
  s.gens = g.gens;
  return s;
}

inline Subgroup power_subgroup(const FiniteGroup& g, const Subgroup& a, u32 p) {
  std::vector<u32> seed;
  for (u32 x : a.elems) {
    u32 y = g.pow(x, p);
    if (y != 0) seed.push_back(y);
  }
  return normal_closure(g, std::move(seed));
}

// ---------------------------------------------------------------------------
// Identity sweeps

// Hall identity [xy,z] = [y,[z,x]] [x,z] [y,z]; universally valid, so a
// violation flags a convention bug.
inline CheckReport check_hall_identity(const FiniteGroup& g) {
  CheckReport rep;
  rep.subject = g.name;
  const std::uint64_t total = std::uint64_t(g.n) * g.n * g.n;
  auto probe = [&](u32 x, u32 y, u32 z) -> bool {
    u32 lhs = g.comm(g.mul(x, y), z);
    u32 rhs = g.mul(g.mul(g.comm(y, g.comm(z, x)), g.comm(x, z)), g.comm(y, z));
    return lhs == rhs;
  };
  if (total <= config().sweep_exhaustive_cap) {
    for (u32 x = 0; x < g.n; ++x)
      for (u32 y = 0; y < g.n; ++y)
        for (u32 z = 0; z < g.n; ++z)
          if (!probe(x, y, z)) {
            rep.add_fail("hall_identity", "triple (" + std::to_string(x) + "," + std::to_string(y) + "," +
                                              std::to_string(z) + ")");
            return rep;
          }
    rep.add_pass("hall_identity", "exhaustive over " + std::to_string(total) + " triples");
  } else {
    std::mt19937_64 rng(config().seed);
    std::uniform_int_distribution<u32> d(0, g.n - 1);
    const std::uint64_t samples = config().sweep_sample_count;
    for (std::uint64_t i = 0; i < samples; ++i) {
      u32 x = d(rng), y = d(rng), z = d(rng);
      if (!probe(x, y, z)) {
        rep.add_fail("hall_identity", "sampled triple (" + std::to_string(x) + "," + std::to_string(y) + "," +
                                          std::to_string(z) + ")");
        return rep;
      }
    }
    rep.add_pass("hall_identity", "sampled " + std::to_string(samples) + " triples, seed " +
                                      std::to_string(config().seed));
  }
  return rep;
}

// [x,[x,...,[x,y]...]] (p^n-fold)  vs  [x^{p^n}, y], compared modulo
// N' = <[N,N], N^p> where N is the normal closure of y.
inline CheckReport check_power_commutator_congruence(const FiniteGroup& g, u32 x, u32 y, u32 p, u32 n) {
  CheckReport rep;
  rep.subject = g.name;
  if (x >= g.n || y >= g.n) throw std::out_of_range("check_power_commutator_congruence: bad index");
  std::uint64_t q = 1;
  for (u32 i = 0; i < n; ++i) q *= p;
  Subgroup N = normal_closure(g, {y});
  Subgroup Np = n_prime(g, N, p);
  u32 nested = y;
  for (std::uint64_t i = 0; i < q; ++i) nested = g.comm(x, nested);
  u32 power_side = g.comm(g.pow(x, static_cast<long long>(q)), y);
  u32 diff = g.mul(g.inverse(nested), power_side);
  if (Np.contains(diff))
    rep.add_pass("power_commutator_congruence",
                 "p^n = " + std::to_string(q) + ", |N| = " + std::to_string(N.order()) + ", |N'| = " +
                     std::to_string(Np.order()));
  else
    rep.add_fail("power_commutator_congruence", "difference element " + std::to_string(diff) + " not in N'");
  return rep;
}

}  // namespace burnside

#endif  // BURNSIDE_GROUP_HPP
