// Loops as Cayley tables and the two defining Moufang identities.
//
// Powers are only unambiguous in diassociative loops, so loop_exponent first
// certifies that left- and right-nested powers agree and fails loudly with a
// witness otherwise.

#ifndef BURNSIDE_LOOP_HPP
#define BURNSIDE_LOOP_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "burnside/config.hpp"
#include "burnside/group.hpp"
#include "burnside/report.hpp"

namespace burnside {

struct Loop {
  u32 n = 1;
  std::vector<u16> table;  // Latin square, identity at index 0
  std::string name = "trivial_loop";

  Loop() : table(1, 0) {}

  u32 mul(u32 x, u32 y) const { return table[std::size_t(x) * n + y]; }

  // unique solution of a*x = b
  u32 left_divide(u32 a, u32 b) const {
    for (u32 x = 0; x < n; ++x)
      if (mul(a, x) == b) return x;
    throw std::logic_error("loop: not a Latin square");
  }

  static Loop from_table(std::string name, u32 n, std::vector<u16> table) {
    if (n == 0 || table.size() != std::size_t(n) * n) throw std::invalid_argument("loop: bad table size");
    Loop l;
    l.n = n;
    l.table = std::move(table);
    l.name = std::move(name);
    for (u32 x = 0; x < n; ++x)
      if (l.mul(0, x) != x || l.mul(x, 0) != x)
        throw std::invalid_argument("loop: index 0 is not a two-sided identity");
    std::vector<char> seen(n);
    for (u32 x = 0; x < n; ++x) {
      std::fill(seen.begin(), seen.end(), 0);
      for (u32 y = 0; y < n; ++y) {
        u32 v = l.mul(x, y);
        if (v >= n || seen[v]) throw std::invalid_argument("loop: row " + std::to_string(x) + " not a permutation");
        seen[v] = 1;
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (u32 y = 0; y < n; ++y) {
        u32 v = l.mul(y, x);
        if (seen[v]) throw std::invalid_argument("loop: column " + std::to_string(x) + " not a permutation");
        seen[v] = 1;
      }
    }
    return l;
  }

  static Loop from_group(const FiniteGroup& g) {
    Loop l;
    l.n = g.n;
    l.table = g.table;
    l.name = g.name + "_as_loop";
    return l;
  }
};

// ((zx)y)x = z((xy)x)  and  x(y(xz)) = (x(yx))z over all triples (seeded
// sample above the sweep cap).
inline CheckReport check_moufang(const Loop& l) {
  CheckReport rep;
  rep.subject = l.name;
  auto probe1 = [&](u32 z, u32 x, u32 y) {
    return l.mul(l.mul(l.mul(z, x), y), x) == l.mul(z, l.mul(l.mul(x, y), x));
  };
  auto probe2 = [&](u32 x, u32 y, u32 z) {
    return l.mul(x, l.mul(y, l.mul(x, z))) == l.mul(l.mul(x, l.mul(y, x)), z);
  };
  const std::uint64_t total = std::uint64_t(l.n) * l.n * l.n;
  // Both identities matter for the acceptance fleet at order <= 125, so the
  // exhaustive path covers up to 2^21 triples regardless of the sweep cap.
  const bool exhaustive = total <= std::max<std::uint64_t>(config().sweep_exhaustive_cap, 1u << 21);
  if (exhaustive) {
    for (u32 a = 0; a < l.n; ++a)
      for (u32 b = 0; b < l.n; ++b)
        for (u32 c = 0; c < l.n; ++c) {
          if (!probe1(a, b, c)) {
            rep.add_fail("moufang_identity_1", "witness (z,x,y)=(" + std::to_string(a) + "," +
                                                   std::to_string(b) + "," + std::to_string(c) + ")");
            return rep;
          }
          if (!probe2(a, b, c)) {
            rep.add_fail("moufang_identity_2", "witness (x,y,z)=(" + std::to_string(a) + "," +
                                                   std::to_string(b) + "," + std::to_string(c) + ")");
            return rep;
          }
        }
    rep.add_pass("moufang_identity_1", "exhaustive over " + std::to_string(total) + " triples");
    rep.add_pass("moufang_identity_2", "exhaustive over " + std::to_string(total) + " triples");
  } else {
    std::mt19937_64 rng(config().seed);
    std::uniform_int_distribution<u32> d(0, l.n - 1);
    for (std::uint64_t i = 0; i < config().sweep_sample_count; ++i) {
      u32 a = d(rng), b = d(rng), c = d(rng);
      if (!probe1(a, b, c) || !probe2(a, b, c)) {
        rep.add_fail("moufang_identities", "sampled witness (" + std::to_string(a) + "," + std::to_string(b) +
                                               "," + std::to_string(c) + ")");
        return rep;
      }
    }
    rep.add_pass("moufang_identity_1", "sampled " + std::to_string(config().sweep_sample_count) +
                                           " triples, seed " + std::to_string(config().seed));
    rep.add_pass("moufang_identity_2", "same sample");
  }
  return rep;
}

inline bool is_associative(const Loop& l) {
  for (u32 x = 0; x < l.n; ++x)
    for (u32 y = 0; y < l.n; ++y) {
      u32 xy = l.mul(x, y);
      for (u32 z = 0; z < l.n; ++z)
        if (l.mul(xy, z) != l.mul(x, l.mul(y, z))) return false;
    }
  return true;
}

// Least e with x^e = 1 for all x.  Throws (with a witness) when left- and
// right-nested power towers disagree, which cannot happen for Moufang input.
inline u32 loop_exponent(const Loop& l) {
  std::uint64_t e = 1;
  for (u32 x = 0; x < l.n; ++x) {
    u32 left = x, right = x;  // x^1
    u32 k = 1;
    while (left != 0) {
      left = l.mul(left, x);
      right = l.mul(x, right);
      ++k;
      if (left != right)
        throw std::domain_error("loop_exponent: powers of element " + std::to_string(x) +
                                " depend on bracketing at exponent " + std::to_string(k));
      if (k > l.n)
        throw std::domain_error("loop_exponent: power orbit of element " + std::to_string(x) +
                                " does not return to the identity");
    }
    e = std::lcm<std::uint64_t>(e, k);
  }
  return static_cast<u32>(e);
}

inline Loop generated_subloop(const Loop& l, const std::vector<u32>& seed) {
  std::vector<char> in(l.n, 0);
  std::vector<u32> elems{0};
  in[0] = 1;
  for (u32 s : seed)
    if (!in[s]) {
      in[s] = 1;
      elems.push_back(s);
    }
  for (;;) {
    bool grew = false;
    const std::size_t sz = elems.size();
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = 0; j < sz; ++j) {
        u32 v = l.mul(elems[i], elems[j]);
        if (!in[v]) {
          in[v] = 1;
          elems.push_back(v);
          grew = true;
        }
      }
    if (!grew) break;
  }
  std::sort(elems.begin(), elems.end());
  // relabel: position in elems = new index; identity stays at 0
  std::vector<u32> newidx(l.n, 0);
  for (std::size_t i = 0; i < elems.size(); ++i) newidx[elems[i]] = static_cast<u32>(i);
  const u32 m = static_cast<u32>(elems.size());
  std::vector<u16> t(std::size_t(m) * m);
  for (u32 i = 0; i < m; ++i)
    for (u32 j = 0; j < m; ++j) t[std::size_t(i) * m + j] = static_cast<u16>(newidx[l.mul(elems[i], elems[j])]);
  return Loop::from_table(l.name + "_subloop", m, std::move(t));
}

}  // namespace burnside

#endif  // BURNSIDE_LOOP_HPP
