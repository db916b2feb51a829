// Exact dense linear algebra over the prime field F_p.
//
// Everything downstream (filtrations, quotient bases, relation ranks) runs on
// the deterministic elimination implemented here: leftmost pivot, first
// nonzero row wins, so computed bases are reproducible across runs.

#ifndef BURNSIDE_FP_HPP
#define BURNSIDE_FP_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace burnside {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

inline bool is_prime(u32 n) {
  if (n < 2) return false;
  for (u32 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Arithmetic in F_p.  p is kept small (< 2^15) so products fit in u32.
class PrimeField {
 public:
  explicit PrimeField(u32 p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) + " is not prime");
    if (p >= (1u << 15)) throw std::invalid_argument("PrimeField: modulus too large");
  }

  u32 p() const { return p_; }
  u32 reduce(u64 x) const { return static_cast<u32>(x % p_); }
  u32 add(u32 a, u32 b) const { u32 s = a + b; return s >= p_ ? s - p_ : s; }
  u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + p_ - b; }
  u32 neg(u32 a) const { return a == 0 ? 0 : p_ - a; }
  u32 mul(u32 a, u32 b) const { return (a * b) % p_; }

  u32 pow(u32 a, u64 e) const {
    u32 r = 1 % p_, base = a % p_;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  u32 inv(u32 a) const {
    if (a % p_ == 0) throw std::domain_error("PrimeField: inverse of zero");
    return pow(a, p_ - 2);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  u32 p_;
};

using FpVec = std::vector<u32>;

inline void check_same_modulus(u32 a, u32 b, const char* where) {
  if (a != b) throw std::invalid_argument(std::string(where) + ": modulus mismatch");
}

// Dense row-major matrix over F_p.
struct FpMatrix {
  u32 p = 2;
  std::size_t rows = 0, cols = 0;
  FpVec a;  // rows*cols entries, reduced mod p

  FpMatrix() = default;
  FpMatrix(u32 p_, std::size_t r, std::size_t c) : p(p_), rows(r), cols(c), a(r * c, 0) {
    PrimeField check(p_);  // validates primality
  }

  u32& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  u32 at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  static FpMatrix identity(u32 p, std::size_t n) {
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  FpVec row(std::size_t r) const { return FpVec(a.begin() + r * cols, a.begin() + (r + 1) * cols); }

  // y = M x (columns act on coordinate vectors)
  FpVec apply(const FpVec& x) const {
    if (x.size() != cols) throw std::invalid_argument("FpMatrix::apply: size mismatch");
    PrimeField F(p);
    FpVec y(rows, 0);
    for (std::size_t r = 0; r < rows; ++r) {
      u64 acc = 0;
      for (std::size_t c = 0; c < cols; ++c) acc += u64(at(r, c)) * x[c];
      y[r] = F.reduce(acc);
    }
    return y;
  }

  FpMatrix operator*(const FpMatrix& o) const {
    check_same_modulus(p, o.p, "FpMatrix::mul");
    if (cols != o.rows) throw std::invalid_argument("FpMatrix::mul: shape mismatch");
    PrimeField F(p);
    FpMatrix r(p, rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < cols; ++k) {
        u32 v = at(i, k);
        if (!v) continue;
        for (std::size_t j = 0; j < o.cols; ++j)
          r.at(i, j) = F.reduce(u64(r.at(i, j)) + u64(v) * o.at(k, j));
      }
    return r;
  }

  FpMatrix operator+(const FpMatrix& o) const {
    check_same_modulus(p, o.p, "FpMatrix::add");
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("FpMatrix::add: shape mismatch");
    PrimeField F(p);
    FpMatrix r(p, rows, cols);
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = F.add(a[i], o.a[i]);
    return r;
  }

  FpMatrix scaled(u32 k) const {
    PrimeField F(p);
    FpMatrix r(p, rows, cols);
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = F.mul(a[i], k % p);
    return r;
  }

  FpMatrix pow(u64 e) const {
    if (rows != cols) throw std::invalid_argument("FpMatrix::pow: not square");
    FpMatrix r = identity(p, rows), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  bool is_zero() const {
    for (u32 v : a) if (v) return false;
    return true;
  }

  bool operator==(const FpMatrix& o) const { return p == o.p && rows == o.rows && cols == o.cols && a == o.a; }
};

inline FpVec vec_add(const PrimeField& F, const FpVec& a, const FpVec& b) {
  FpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
  return r;
}

inline FpVec vec_sub(const PrimeField& F, const FpVec& a, const FpVec& b) {
  FpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
  return r;
}

inline FpVec vec_scale(const PrimeField& F, u32 k, const FpVec& a) {
  FpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(k % F.p(), a[i]);
  return r;
}

inline bool vec_is_zero(const FpVec& a) {
  for (u32 v : a) if (v) return false;
  return true;
}

// v -= c * w, in place
inline void vec_axpy_sub(const PrimeField& F, FpVec& v, u32 c, const FpVec& w) {
  const u32 p = F.p();
  for (std::size_t i = 0; i < v.size(); ++i) {
    u32 t = (c * w[i]) % p;
    v[i] = v[i] >= t ? v[i] - t : v[i] + p - t;
  }
}

// Incremental echelon basis.  Rows are kept with pivot scaled to 1; pivot
// columns strictly increase down the (logical) row order.  Used for span
// construction, membership tests, and rank bookkeeping.
class EchelonBasis {
 public:
  EchelonBasis(u32 p, std::size_t ambient)
      : F_(p), ambient_(ambient), pivot_row_(ambient, -1) {}

  u32 p() const { return F_.p(); }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }

  // Reduce v against the current rows (forward elimination only).
  FpVec reduce(FpVec v) const {
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (v[c] == 0) continue;
      int r = pivot_row_[c];
      if (r < 0) continue;
      vec_axpy_sub(F_, v, v[c], rows_[r]);
    }
    return v;
  }

  bool contains(const FpVec& v) const { return vec_is_zero(reduce(v)); }

  // Insert v if independent; returns true when the dimension grew.
  bool insert(FpVec v) {
    if (v.size() != ambient_) throw std::invalid_argument("EchelonBasis::insert: size mismatch");
    v = reduce(std::move(v));
    std::size_t c = 0;
    while (c < ambient_ && v[c] == 0) ++c;
    if (c == ambient_) return false;
    if (v[c] != 1) {
      u32 s = F_.inv(v[c]);
      for (auto& x : v) x = F_.mul(x, s);
    }
    pivot_row_[c] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    pivots_.push_back(c);
    return true;
  }

  const std::vector<FpVec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Fully reduced (RREF) rows sorted by pivot column.
  std::vector<FpVec> rref_rows() const {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return pivots_[x] < pivots_[y]; });
    std::vector<FpVec> out;
    out.reserve(rows_.size());
    for (std::size_t i : order) out.push_back(rows_[i]);
    // back-substitute: clear entries above each pivot
    for (std::size_t i = out.size(); i-- > 0;) {
      std::size_t pc = 0;
      while (out[i][pc] == 0) ++pc;
      for (std::size_t j = 0; j < i; ++j)
        if (out[j][pc] != 0) vec_axpy_sub(F_, out[j], out[j][pc], out[i]);
    }
    return out;
  }

 private:
  PrimeField F_;
  std::size_t ambient_;
  std::vector<FpVec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<int> pivot_row_;
};

// Row-reduced subspace of F_p^n.
struct Subspace {
  u32 p = 2;
  std::size_t ambient = 0;
  std::vector<FpVec> basis;  // RREF rows, pivots increasing

  Subspace() = default;
  Subspace(u32 p_, std::size_t ambient_) : p(p_), ambient(ambient_) {}

  static Subspace from_echelon(const EchelonBasis& e) {
    Subspace s(e.p(), e.ambient());
    s.basis = e.rref_rows();
    return s;
  }

  static Subspace span(u32 p, std::size_t ambient, const std::vector<FpVec>& vecs) {
    EchelonBasis e(p, ambient);
    for (const auto& v : vecs) e.insert(v);
    return from_echelon(e);
  }

  static Subspace zero(u32 p, std::size_t ambient) { return Subspace(p, ambient); }

  static Subspace full(u32 p, std::size_t ambient) {
    Subspace s(p, ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
      FpVec e(ambient, 0);
      e[i] = 1;
      s.basis.push_back(std::move(e));
    }
    return s;
  }

  std::size_t dim() const { return basis.size(); }

  bool contains(const FpVec& v) const {
    if (v.size() != ambient) throw std::invalid_argument("Subspace::contains: ambient mismatch");
    EchelonBasis e(p, ambient);
    for (const auto& b : basis) e.insert(b);
    return e.contains(v);
  }

  bool contains_all(const Subspace& o) const {
    check_same_modulus(p, o.p, "Subspace::contains_all");
    EchelonBasis e(p, ambient);
    for (const auto& b : basis) e.insert(b);
    for (const auto& b : o.basis)
      if (!e.contains(b)) return false;
    return true;
  }

  bool operator==(const Subspace& o) const { return p == o.p && ambient == o.ambient && basis == o.basis; }
};

inline void check_compatible(const Subspace& s, const Subspace& t, const char* where) {
  check_same_modulus(s.p, t.p, where);
  if (s.ambient != t.ambient) throw std::invalid_argument(std::string(where) + ": ambient mismatch");
}

inline Subspace sum(const Subspace& s, const Subspace& t) {
  check_compatible(s, t, "sum");
  EchelonBasis e(s.p, s.ambient);
  for (const auto& b : s.basis) e.insert(b);
  for (const auto& b : t.basis) e.insert(b);
  return Subspace::from_echelon(e);
}

// RREF with deterministic pivoting; pivot columns reported per pivot row.
inline std::pair<FpMatrix, std::vector<std::size_t>> rref_with_pivots(const FpMatrix& m) {
  PrimeField F(m.p);
  FpMatrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;  // next pivot row
  for (std::size_t c = 0; c < r.cols && pr < r.rows; ++c) {
    std::size_t sel = pr;
    while (sel < r.rows && r.at(sel, c) == 0) ++sel;
    if (sel == r.rows) continue;
    if (sel != pr)
      for (std::size_t j = 0; j < r.cols; ++j) std::swap(r.at(sel, j), r.at(pr, j));
    u32 s = F.inv(r.at(pr, c));
    for (std::size_t j = 0; j < r.cols; ++j) r.at(pr, j) = F.mul(r.at(pr, j), s);
    for (std::size_t i = 0; i < r.rows; ++i) {
      if (i == pr) continue;
      u32 f = r.at(i, c);
      if (!f) continue;
      for (std::size_t j = 0; j < r.cols; ++j) r.at(i, j) = F.sub(r.at(i, j), F.mul(f, r.at(pr, j)));
    }
    pivots.push_back(c);
    ++pr;
  }
  return {std::move(r), std::move(pivots)};
}

inline std::pair<FpMatrix, std::size_t> rref(const FpMatrix& m) {
  auto [r, pivots] = rref_with_pivots(m);
  return {std::move(r), pivots.size()};
}

// Inverse of a square matrix via elimination on [M | I].
inline FpMatrix inverse(const FpMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse: not square");
  FpMatrix aug(m.p, m.rows, 2 * m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols + i) = 1;
  }
  auto [r, pivots] = rref_with_pivots(aug);
  if (pivots.size() < m.rows || pivots[m.rows - 1] >= m.cols)
    throw std::domain_error("inverse: matrix is singular");
  FpMatrix inv(m.p, m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) inv.at(i, j) = r.at(i, m.cols + j);
  return inv;
}

// Basis of the right null space {x : Mx = 0}.
inline Subspace kernel(const FpMatrix& m) {
  PrimeField F(m.p);
  auto [r, pivots] = rref_with_pivots(m);
  std::vector<int> pivot_of_col(m.cols, -1);
  for (std::size_t i = 0; i < pivots.size(); ++i) pivot_of_col[pivots[i]] = static_cast<int>(i);
  EchelonBasis e(m.p, m.cols);
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    FpVec v(m.cols, 0);
    v[c] = 1;
    for (std::size_t c2 = 0; c2 < m.cols; ++c2)
      if (pivot_of_col[c2] >= 0) v[c2] = F.neg(r.at(pivot_of_col[c2], c));
    e.insert(std::move(v));
  }
  return Subspace::from_echelon(e);
}

// Intersection via the kernel of the stacked system: x = B_s^T u = B_t^T v.
inline Subspace intersect(const Subspace& s, const Subspace& t) {
  check_compatible(s, t, "intersect");
  PrimeField F(s.p);
  const std::size_t ds = s.dim(), dt = t.dim(), n = s.ambient;
  if (ds == 0 || dt == 0) return Subspace::zero(s.p, n);
  // columns: u (ds), v (dt); rows: ambient coordinates of  B_s^T u - B_t^T v = 0
  FpMatrix m(s.p, n, ds + dt);
  for (std::size_t i = 0; i < ds; ++i)
    for (std::size_t c = 0; c < n; ++c) m.at(c, i) = s.basis[i][c];
  for (std::size_t j = 0; j < dt; ++j)
    for (std::size_t c = 0; c < n; ++c) m.at(c, ds + j) = F.neg(t.basis[j][c]);
  Subspace ker = kernel(m);
  EchelonBasis e(s.p, n);
  for (const auto& uv : ker.basis) {
    FpVec x(n, 0);
    for (std::size_t i = 0; i < ds; ++i)
      if (uv[i]) for (std::size_t c = 0; c < n; ++c) x[c] = F.add(x[c], F.mul(uv[i], s.basis[i][c]));
    e.insert(std::move(x));
  }
  return Subspace::from_echelon(e);
}

}  // namespace burnside

#endif  // BURNSIDE_FP_HPP
