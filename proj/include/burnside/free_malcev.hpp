// Truncated free Malcev algebras M(m) and their Engel quotients M(m, p^n).
//
// Monomials are binary trees over m generators, kept in canonical
// anticommutative form: equal subtrees give zero, subtrees are ordered by
// (degree, serialization) with a sign flip on swap.  Each multidegree
// component carries its monomial basis and the span of all relation
// consequences: substitution instances of the defining identity (original
// and polarized forms) plus ideal closure by multiplication with canonical
// monomials, processed in increasing total degree.

#ifndef BURNSIDE_FREE_MALCEV_HPP
#define BURNSIDE_FREE_MALCEV_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "burnside/config.hpp"
#include "burnside/fp.hpp"

namespace burnside {

using MultiDeg = std::vector<u32>;

inline std::size_t total_degree(const MultiDeg& g) {
  return std::accumulate(g.begin(), g.end(), std::size_t(0));
}

// Moebius function, for the Witt formula below.
inline long long moebius(u64 n) {
  long long mu = 1;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

// Multigraded Witt (necklace) number: the dimension of the multidegree-gamma
// component of the free Lie algebra.
inline u64 witt_dimension(const MultiDeg& gamma) {
  u64 n = total_degree(gamma);
  if (n == 0) return 0;
  u64 g = 0;
  for (u32 c : gamma) g = std::gcd<u64>(g, c);
  long long acc = 0;
  for (u64 d = 1; d <= g; ++d) {
    if (g % d) continue;
    // multinomial (n/d)! / prod (gamma_i/d)!
    u64 rem = n / d;
    long long multi = 1;
    for (u32 c : gamma) {
      u64 k = c / d;
      for (u64 i = 1; i <= k; ++i) multi = multi * (rem - k + i) / i;
      rem -= k;
    }
    acc += moebius(d) * multi;
  }
  return static_cast<u64>(acc / static_cast<long long>(n));
}

struct Mono;
using MonoPtr = std::shared_ptr<const Mono>;

struct Mono {
  int leaf = -1;  // generator index when >= 0
  MonoPtr l, r;
  std::size_t degree = 1;
  MultiDeg mdeg;
  std::string key;  // canonical serialization; ordering is (degree, key)
};

inline bool mono_less(const MonoPtr& a, const MonoPtr& b) {
  if (a->degree != b->degree) return a->degree < b->degree;
  return a->key < b->key;
}

inline MonoPtr make_leaf(u32 m, u32 i) {
  auto n = std::make_shared<Mono>();
  n->leaf = static_cast<int>(i);
  n->mdeg.assign(m, 0);
  n->mdeg[i] = 1;
  n->key = std::string(1, static_cast<char>('a' + i));
  return n;
}

inline MonoPtr make_node(const MonoPtr& l, const MonoPtr& r) {
  auto n = std::make_shared<Mono>();
  n->l = l;
  n->r = r;
  n->degree = l->degree + r->degree;
  n->mdeg = l->mdeg;
  for (std::size_t i = 0; i < n->mdeg.size(); ++i) n->mdeg[i] += r->mdeg[i];
  n->key = "(" + l->key + r->key + ")";
  return n;
}

// signed canonical product; sign 0 means the product vanishes
struct SignedMono {
  int sign = 0;
  MonoPtr m;
};

inline SignedMono signed_mul(const MonoPtr& a, const MonoPtr& b) {
  if (a->degree == b->degree && a->key == b->key) return {};
  if (mono_less(a, b)) return {+1, make_node(a, b)};
  return {-1, make_node(b, a)};
}

// integer-coefficient combination of canonical monomials, keyed by serialization
using Combo = std::map<std::string, std::pair<long long, MonoPtr>>;

inline void combo_add(Combo& c, long long coeff, const MonoPtr& m) {
  if (!coeff) return;
  auto [it, fresh] = c.emplace(m->key, std::make_pair(coeff, m));
  if (!fresh) {
    it->second.first += coeff;
    if (it->second.first == 0) c.erase(it);
  }
}

inline Combo combo_of(const MonoPtr& m) {
  Combo c;
  combo_add(c, 1, m);
  return c;
}

inline Combo combo_mul(const Combo& a, const Combo& b) {
  Combo r;
  for (const auto& [ka, pa] : a)
    for (const auto& [kb, pb] : b) {
      SignedMono s = signed_mul(pa.second, pb.second);
      if (s.sign) combo_add(r, pa.first * pb.first * s.sign, s.m);
    }
  return r;
}

inline Combo combo_add2(const Combo& a, const Combo& b) {
  Combo r = a;
  for (const auto& [k, p] : b) combo_add(r, p.first, p.second);
  return r;
}

inline Combo combo_sub(const Combo& a, const Combo& b) {
  Combo r = a;
  for (const auto& [k, p] : b) combo_add(r, -p.first, p.second);
  return r;
}

// defect of the defining identity: (xy)(xz) - ((xy)z)x - ((yz)x)x - ((zx)x)y
inline Combo malcev_defect(const Combo& x, const Combo& y, const Combo& z) {
  Combo xy = combo_mul(x, y);
  Combo r = combo_mul(xy, combo_mul(x, z));
  r = combo_sub(r, combo_mul(combo_mul(xy, z), x));
  r = combo_sub(r, combo_mul(combo_mul(combo_mul(y, z), x), x));
  r = combo_sub(r, combo_mul(combo_mul(combo_mul(z, x), x), y));
  return r;
}

// One graded component: monomial basis plus the span of relation consequences.
struct FreeComponent {
  MultiDeg gamma;
  std::vector<MonoPtr> basis;  // sorted by key
  std::map<std::string, std::size_t> index;
  std::shared_ptr<EchelonBasis> relations;

  std::size_t dim() const { return basis.size() - relations->dim(); }
};

// Engine: builds all components of total degree <= max_degree in order,
// optionally imposing the Engel ideal at exponent q.
class FreeMalcevEngine {
 public:
  FreeMalcevEngine(u32 m, u32 p, std::size_t max_degree, u64 engel_q = 0)
      : m_(m), F_(p), max_degree_(max_degree), engel_q_(engel_q) {
    if (m == 0 || m > 16) throw std::invalid_argument("FreeMalcevEngine: 1 <= m <= 16 required");
    if (max_degree > config().max_free_degree)
      throw std::invalid_argument("FreeMalcevEngine: degree " + std::to_string(max_degree) +
                                  " exceeds the configured cap " +
                                  std::to_string(config().max_free_degree));
    if (engel_q > config().perm_budget)
      throw std::invalid_argument("FreeMalcevEngine: p^n = " + std::to_string(engel_q) +
                                  " exceeds the permutation budget " +
                                  std::to_string(config().perm_budget));
    for (std::size_t d = 1; d <= max_degree_; ++d)
      for (const MultiDeg& g : multidegrees_of(d)) build_component(g);
  }

  u32 m() const { return m_; }
  u32 p() const { return F_.p(); }
  std::size_t max_degree() const { return max_degree_; }

  const FreeComponent& component(const MultiDeg& g) const {
    auto it = comps_.find(g);
    if (it == comps_.end()) throw std::invalid_argument("FreeMalcevEngine: component out of range");
    return it->second;
  }

  std::vector<MultiDeg> multidegrees_of(std::size_t total) const {
    std::vector<MultiDeg> out;
    MultiDeg g(m_, 0);
    rec_multideg(out, g, 0, total);
    return out;
  }

  // coordinates of a combo in its (homogeneous) component
  FpVec coords(const FreeComponent& c, const Combo& combo) const {
    FpVec v(c.basis.size(), 0);
    for (const auto& [k, pr] : combo) {
      auto it = c.index.find(k);
      if (it == c.index.end()) throw std::logic_error("FreeMalcevEngine: monomial outside component");
      long long coeff = pr.first % static_cast<long long>(F_.p());
      if (coeff < 0) coeff += F_.p();
      v[it->second] = F_.add(v[it->second], static_cast<u32>(coeff));
    }
    return v;
  }

  // relation rows before elimination, for order-independence experiments
  const std::vector<FpVec>& raw_rows(const MultiDeg& g) const { return raw_rows_.at(g); }

 private:
  void rec_multideg(std::vector<MultiDeg>& out, MultiDeg& g, std::size_t i, std::size_t left) const {
    if (i + 1 == g.size()) {
      g[i] = static_cast<u32>(left);
      out.push_back(g);
      return;
    }
    for (std::size_t v = 0; v <= left; ++v) {
      g[i] = static_cast<u32>(v);
      rec_multideg(out, g, i + 1, left - v);
    }
  }

  static bool sub_deg(const MultiDeg& g, const MultiDeg& part, MultiDeg& rest) {
    rest = g;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (part[i] > g[i]) return false;
      rest[i] -= part[i];
    }
    return true;
  }

  // all nonempty multidegrees <= g componentwise (excluding g itself optional)
  std::vector<MultiDeg> sub_multidegrees(const MultiDeg& g, bool proper) const {
    std::vector<MultiDeg> out;
    std::size_t t = total_degree(g);
    for (std::size_t d = 1; d <= t; ++d)
      for (const MultiDeg& c : multidegrees_of(d)) {
        MultiDeg rest;
        if (!sub_deg(g, c, rest)) continue;
        if (proper && d == t) continue;
        out.push_back(c);
      }
    return out;
  }

  void build_component(const MultiDeg& g) {
    FreeComponent c;
    c.gamma = g;
    // monomial basis: leaves, or ordered pairs over all proper splits
    if (total_degree(g) == 1) {
      for (u32 i = 0; i < m_; ++i)
        if (g[i]) c.basis.push_back(make_leaf(m_, i));
    } else {
      for (const MultiDeg& g1 : sub_multidegrees(g, true)) {
        MultiDeg g2;
        sub_deg(g, g1, g2);
        const FreeComponent& c1 = comps_.at(g1);
        const FreeComponent& c2 = comps_.at(g2);
        for (const MonoPtr& l : c1.basis)
          for (const MonoPtr& r : c2.basis)
            if (mono_less(l, r)) c.basis.push_back(make_node(l, r));
      }
      std::sort(c.basis.begin(), c.basis.end(),
                [](const MonoPtr& a, const MonoPtr& b) { return a->key < b->key; });
    }
    for (std::size_t i = 0; i < c.basis.size(); ++i) c.index[c.basis[i]->key] = i;
    c.relations = std::make_shared<EchelonBasis>(F_.p(), c.basis.size());

    std::vector<FpVec> rows;
    auto push = [&](const Combo& combo) {
      FpVec v = coords(c, combo);
      if (!vec_is_zero(v)) rows.push_back(std::move(v));
    };

    if (total_degree(g) >= 4) {
      // original identity on monomial substitutions (x repeated)
      for_defect_instances(c, g, push);
      // polarized-in-x form on monomial pairs
      for_polarized_instances(c, g, push);
    }
    if (engel_q_ && total_degree(g) >= engel_q_ + 1) engel_instances(c, g, push);

    // ideal closure: products of lower-component relation rows with monomials
    for (const MultiDeg& g1 : sub_multidegrees(g, true)) {
      MultiDeg g2;
      sub_deg(g, g1, g2);
      const FreeComponent& lower = comps_.at(g1);
      const FreeComponent& other = comps_.at(g2);
      for (const FpVec& rel : lower.relations->rows()) {
        Combo rc;
        for (std::size_t i = 0; i < rel.size(); ++i)
          if (rel[i]) combo_add(rc, rel[i], lower.basis[i]);
        for (const MonoPtr& w : other.basis) push(combo_mul(rc, combo_of(w)));
      }
    }

    for (const FpVec& r : rows) c.relations->insert(r);
    raw_rows_[g] = std::move(rows);
    comps_.emplace(g, std::move(c));
  }

  template <class F>
  void for_defect_instances(const FreeComponent&, const MultiDeg& g, F push) {
    // 2*dx + dy + dz = g over monomials
    for (const MultiDeg& dx : sub_multidegrees(g, true)) {
      MultiDeg twice = dx, rest;
      for (std::size_t i = 0; i < twice.size(); ++i) twice[i] *= 2;
      if (!sub_deg(g, twice, rest) || total_degree(rest) < 2) continue;
      for (const MultiDeg& dy : sub_multidegrees(rest, false)) {
        MultiDeg dz;
        if (!sub_deg(rest, dy, dz) || total_degree(dz) == 0) continue;
        for (const MonoPtr& x : comps_.at(dx).basis)
          for (const MonoPtr& y : comps_.at(dy).basis)
            for (const MonoPtr& z : comps_.at(dz).basis)
              push(malcev_defect(combo_of(x), combo_of(y), combo_of(z)));
      }
    }
  }

  template <class F>
  void for_polarized_instances(const FreeComponent&, const MultiDeg& g, F push) {
    // dx1 + dx2 + dy + dz = g; defect(x1+x2) - defect(x1) - defect(x2)
    // (the pure terms vanish into other components unless dx1 == dx2)
    for (const MultiDeg& d1 : sub_multidegrees(g, true))
      for (const MultiDeg& d2 : sub_multidegrees(g, true)) {
        if (d1 > d2) continue;  // symmetric in (x1, x2)
        MultiDeg rest;
        MultiDeg both = d1;
        for (std::size_t i = 0; i < both.size(); ++i) both[i] += d2[i];
        if (!sub_deg(g, both, rest) || total_degree(rest) < 2) continue;
        for (const MultiDeg& dy : sub_multidegrees(rest, false)) {
          MultiDeg dz;
          if (!sub_deg(rest, dy, dz) || total_degree(dz) == 0) continue;
          for (const MonoPtr& x1 : comps_.at(d1).basis)
            for (const MonoPtr& x2 : comps_.at(d2).basis) {
              if (x1->key == x2->key) continue;
              Combo xs = combo_add2(combo_of(x1), combo_of(x2));
              for (const MonoPtr& y : comps_.at(dy).basis)
                for (const MonoPtr& z : comps_.at(dz).basis) {
                  Combo cy = combo_of(y), cz = combo_of(z);
                  Combo d = malcev_defect(xs, cy, cz);
                  d = combo_sub(d, malcev_defect(combo_of(x1), cy, cz));
                  d = combo_sub(d, malcev_defect(combo_of(x2), cy, cz));
                  // keep only the mixed-bilinear part, which lives in g
                  Combo in_g;
                  for (const auto& [k, pr] : d)
                    if (pr.second->mdeg == g) combo_add(in_g, pr.first, pr.second);
                  push(in_g);
                }
            }
        }
      }
  }

  template <class F>
  void engel_instances(const FreeComponent&, const MultiDeg& g, F push) {
    const std::size_t q = static_cast<std::size_t>(engel_q_);
    // a(a(...(a b)...)) with q copies of a
    for (const MultiDeg& da : sub_multidegrees(g, true)) {
      MultiDeg qa = da, db;
      for (std::size_t i = 0; i < qa.size(); ++i) qa[i] *= static_cast<u32>(q);
      if (!sub_deg(g, qa, db) || total_degree(db) == 0) continue;
      for (const MonoPtr& a : comps_.at(da).basis)
        for (const MonoPtr& b : comps_.at(db).basis) {
          Combo acc = combo_of(b), ca = combo_of(a);
          for (std::size_t i = 0; i < q; ++i) acc = combo_mul(ca, acc);
          push(acc);
        }
    }
    // symmetrized sum over tuples (a_1,...,a_q, b)
    std::vector<MultiDeg> degs = sub_multidegrees(g, true);
    std::vector<std::size_t> pick(q, 0);
    for (;;) {
      MultiDeg sum(m_, 0), db;
      bool nondecr = true;
      for (std::size_t i = 0; i < q; ++i) {
        if (i && pick[i] < pick[i - 1]) nondecr = false;
        for (std::size_t j = 0; j < m_; ++j) sum[j] += degs[pick[i]][j];
      }
      if (nondecr && sub_deg(g, sum, db) && total_degree(db) > 0) {
        // tuples of monomials from the chosen components
        std::vector<const std::vector<MonoPtr>*> pools;
        for (std::size_t i = 0; i < q; ++i) pools.push_back(&comps_.at(degs[pick[i]]).basis);
        std::vector<std::size_t> sel(q, 0);
        bool any = true;
        for (const auto* pool : pools)
          if (pool->empty()) any = false;
        while (any) {
          for (const MonoPtr& b : comps_.at(db).basis) {
            std::vector<std::size_t> perm(q);
            for (std::size_t i = 0; i < q; ++i) perm[i] = i;
            Combo acc;
            do {
              Combo term = combo_of(b);
              for (std::size_t i = q; i-- > 0;)
                term = combo_mul(combo_of((*pools[perm[i]])[sel[perm[i]]]), term);
              acc = combo_add2(acc, term);
            } while (std::next_permutation(perm.begin(), perm.end()));
            push(acc);
          }
          std::size_t k = 0;
          while (k < q && ++sel[k] == pools[k]->size()) sel[k++] = 0;
          if (k == q) break;
        }
      }
      std::size_t k = 0;
      while (k < q && ++pick[k] == degs.size()) pick[k++] = 0;
      if (k == q) break;
    }
  }

  u32 m_;
  PrimeField F_;
  std::size_t max_degree_;
  u64 engel_q_;
  std::map<MultiDeg, FreeComponent> comps_;
  std::map<MultiDeg, std::vector<FpVec>> raw_rows_;
};

inline std::vector<MonoPtr> enumerate_monomials(u32 m, const MultiDeg& gamma) {
  if (gamma.size() != m) throw std::invalid_argument("enumerate_monomials: gamma has wrong length");
  FreeMalcevEngine e(m, 5, total_degree(gamma));
  return e.component(gamma).basis;
}

inline FpMatrix malcev_relation_matrix(u32 m, const MultiDeg& gamma, u32 p) {
  FreeMalcevEngine e(m, p, total_degree(gamma));
  const auto& rows = e.raw_rows(gamma);
  std::size_t cols = e.component(gamma).basis.size();
  FpMatrix mat(p, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) mat.at(i, j) = rows[i][j];
  return mat;
}

struct ComponentDims {
  MultiDeg gamma;
  std::size_t monomials = 0, rank = 0, dim = 0;
};

struct DimTable {
  u32 m = 0, p = 0;
  std::size_t max_degree = 0;
  u64 engel_q = 0;  // 0 when no Engel ideal imposed
  std::vector<ComponentDims> components;
  bool top_degree_vanishes = false;

  std::vector<std::size_t> totals_by_degree() const {
    std::vector<std::size_t> t(max_degree, 0);
    for (const auto& c : components) t[total_degree(c.gamma) - 1] += c.dim;
    return t;
  }

  const ComponentDims* find(const MultiDeg& g) const {
    for (const auto& c : components)
      if (c.gamma == g) return &c;
    return nullptr;
  }
};

namespace detail {

inline DimTable dims_from_engine(const FreeMalcevEngine& e, u64 engel_q) {
  DimTable t;
  t.m = e.m();
  t.p = e.p();
  t.max_degree = e.max_degree();
  t.engel_q = engel_q;
  for (std::size_t d = 1; d <= e.max_degree(); ++d)
    for (const MultiDeg& g : e.multidegrees_of(d)) {
      const FreeComponent& c = e.component(g);
      t.components.push_back({g, c.basis.size(), c.relations->dim(), c.dim()});
    }
  t.top_degree_vanishes = true;
  for (const auto& c : t.components)
    if (total_degree(c.gamma) == t.max_degree && c.dim > 0) t.top_degree_vanishes = false;
  return t;
}

}  // namespace detail

// characteristic-zero proxy prime for rank computations without an Engel ideal
inline constexpr u32 kFreeMalcevDefaultPrime = 32003;

inline DimTable free_malcev_dims(u32 m, std::size_t max_degree, u32 p = kFreeMalcevDefaultPrime) {
  FreeMalcevEngine e(m, p, max_degree);
  return detail::dims_from_engine(e, 0);
}

inline DimTable engel_quotient_dims(u32 m, u32 p, u32 n, std::size_t max_degree) {
  if (p <= 3) throw std::invalid_argument("engel_quotient_dims: p > 3 required");
  u64 q = 1;
  for (u32 i = 0; i < n; ++i) q *= p;
  FreeMalcevEngine e(m, p, max_degree, q);
  return detail::dims_from_engine(e, q);
}

}  // namespace burnside

#endif  // BURNSIDE_FREE_MALCEV_HPP
