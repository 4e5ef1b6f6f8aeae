#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
// A scalar is a coordinate vector of length phi(N) in the power basis
// 1, zeta, ..., zeta^{phi(N)-1} with rational (GMP) entries, reduced modulo
// the N-th cyclotomic polynomial.  Binary operations on scalars of different
// orders lift both operands to the lcm order first.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace picardium {

using Rat = mpq_class;
using Int = mpz_class;

inline long euler_phi(long n) {
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

// Coefficients (ascending degree) of the N-th cyclotomic polynomial,
// computed by exact division Phi_N = (x^N - 1) / prod_{d|N, d<N} Phi_d.
inline const std::vector<Int>& cyclotomic_poly(long N) {
  static std::map<long, std::vector<Int>> cache;
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  if (N < 1) throw std::invalid_argument("cyclotomic_poly: N must be >= 1");
  std::vector<Int> num(static_cast<size_t>(N) + 1, Int(0));
  num[0] = -1;
  num[static_cast<size_t>(N)] = 1;
  for (long d = 1; d < N; ++d) {
    if (N % d != 0) continue;
    const std::vector<Int>& phi_d = cyclotomic_poly(d);
    // exact synthetic division of num by the monic polynomial phi_d
    std::vector<Int> quot(num.size() - phi_d.size() + 1, Int(0));
    std::vector<Int> rem = num;
    for (long k = static_cast<long>(quot.size()) - 1; k >= 0; --k) {
      Int coef = rem[static_cast<size_t>(k) + phi_d.size() - 1];
      quot[static_cast<size_t>(k)] = coef;
      if (coef == 0) continue;
      for (size_t j = 0; j < phi_d.size(); ++j)
        rem[static_cast<size_t>(k) + j] -= coef * phi_d[j];
    }
    for (const Int& r : rem)
      if (r != 0) throw std::logic_error("cyclotomic_poly: non-exact division");
    num = std::move(quot);
  }
  return cache.emplace(N, std::move(num)).first->second;
}

// Coordinate storage for cyclotomic scalars.  Length-one coordinate vectors
// (every rational, in particular every zero entry of a structure matrix) are
// stored inline so the common case performs no heap allocation.
class CoordVec {
 public:
  CoordVec() = default;
  CoordVec(size_t n, const Rat& v) { assign(n, v); }
  CoordVec(const CoordVec& o) : n_(o.n_) {
    if (n_ <= 1) {
      if (n_ == 1) one_ = o.one_;
    } else {
      rest_ = o.rest_;
    }
  }
  CoordVec(CoordVec&& o) noexcept : n_(o.n_) {
    if (n_ <= 1) {
      if (n_ == 1) one_ = std::move(o.one_);
    } else {
      rest_ = std::move(o.rest_);
    }
    o.n_ = 0;
  }
  CoordVec& operator=(const CoordVec& o) {
    if (this == &o) return *this;
    if (o.n_ <= 1) {
      rest_.clear();
      if (o.n_ == 1) one_ = o.one_;
    } else {
      rest_ = o.rest_;
    }
    n_ = o.n_;
    return *this;
  }
  CoordVec& operator=(CoordVec&& o) noexcept {
    if (this == &o) return *this;
    if (o.n_ <= 1) {
      rest_.clear();
      if (o.n_ == 1) one_ = std::move(o.one_);
    } else {
      rest_ = std::move(o.rest_);
    }
    n_ = o.n_;
    o.n_ = 0;
    return *this;
  }
  CoordVec(std::vector<Rat>&& v) {  // adopt a scratch polynomial
    if (v.size() <= 1) {
      n_ = v.size();
      if (n_ == 1) one_ = std::move(v[0]);
    } else {
      rest_ = std::move(v);
      n_ = rest_.size();
    }
  }

  void assign(size_t n, const Rat& v) {
    if (n <= 1) {
      rest_.clear();
      if (n == 1) one_ = v;
    } else {
      rest_.assign(n, v);
    }
    n_ = n;
  }

  size_t size() const { return n_; }
  Rat* data() { return n_ <= 1 ? &one_ : rest_.data(); }
  const Rat* data() const { return n_ <= 1 ? &one_ : rest_.data(); }
  Rat& operator[](size_t i) { return data()[i]; }
  const Rat& operator[](size_t i) const { return data()[i]; }
  Rat* begin() { return data(); }
  Rat* end() { return data() + n_; }
  const Rat* begin() const { return data(); }
  const Rat* end() const { return data() + n_; }

  friend bool operator==(const CoordVec& a, const CoordVec& b) {
    if (a.n_ != b.n_) return false;
    for (size_t i = 0; i < a.n_; ++i)
      if (a[i] != b[i]) return false;
    return true;
  }

 private:
  Rat one_;
  std::vector<Rat> rest_;
  size_t n_ = 0;
};

class Cyc {
 public:
  Cyc() : N_(1), c_(1, Rat(0)) {}
  explicit Cyc(const Rat& r, long N = 1) : N_(N), c_(static_cast<size_t>(euler_phi(N)), Rat(0)) {
    c_[0] = r;
    canon_();
  }
  explicit Cyc(long v, long N = 1) : Cyc(Rat(v), N) {}

  static Cyc zero(long N = 1) { return Cyc(Rat(0), N); }
  static Cyc one(long N = 1) { return Cyc(Rat(1), N); }

  // zeta_N^e
  static Cyc root(long N, long e) {
    if (N < 1) throw std::invalid_argument("Cyc::root: order must be >= 1");
    e %= N;
    if (e < 0) e += N;
    std::vector<Rat> poly(static_cast<size_t>(e) + 1, Rat(0));
    poly[static_cast<size_t>(e)] = 1;
    return from_poly_(std::move(poly), N);
  }

  long order() const { return N_; }
  const CoordVec& coords() const { return c_; }

  bool is_zero() const {
    for (const Rat& x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  // only meaningful when is_rational()
  Rat rational_part() const { return c_[0]; }

  Cyc lifted(long M) const {
    if (M == N_) return *this;
    if (M % N_ != 0) throw std::invalid_argument("Cyc::lifted: target order not a multiple");
    long step = M / N_;
    std::vector<Rat> poly(static_cast<size_t>((static_cast<long>(c_.size()) - 1) * step) + 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) poly[i * static_cast<size_t>(step)] = c_[i];
    return from_poly_(std::move(poly), M);
  }

  friend Cyc operator+(const Cyc& a, const Cyc& b) {
    Cyc x = a;
    x += b;
    return x;
  }
  friend Cyc operator-(const Cyc& a, const Cyc& b) {
    Cyc x = a;
    x -= b;
    return x;
  }
  Cyc operator-() const {
    Cyc r = *this;
    for (Rat& x : r.c_) x = -x;
    return r;
  }
  friend Cyc operator*(const Cyc& a, const Cyc& b) {
    long M = std::lcm(a.N_, b.N_);
    // scalar fast paths: a rational multiple of the other operand needs no
    // polynomial reduction
    if (a.is_rational()) return scaled_(b, a.c_[0], M);
    if (b.is_rational()) return scaled_(a, b.c_[0], M);
    Cyc xl, yl;
    const Cyc* x = &a;
    const Cyc* y = &b;
    if (a.N_ != M) xl = a.lifted(M), x = &xl;
    if (b.N_ != M) yl = b.lifted(M), y = &yl;
    long mx = x->monomial_(), my = y->monomial_();
    if (mx >= 0 && my >= 0) {
      std::vector<Rat> prod(static_cast<size_t>(mx + my) + 1, Rat(0));
      prod[static_cast<size_t>(mx + my)] = x->c_[static_cast<size_t>(mx)] * y->c_[static_cast<size_t>(my)];
      return from_poly_(std::move(prod), M);
    }
    std::vector<Rat> prod(x->c_.size() + y->c_.size() - 1, Rat(0));
    for (size_t i = 0; i < x->c_.size(); ++i) {
      if (x->c_[i] == 0) continue;
      for (size_t j = 0; j < y->c_.size(); ++j)
        if (y->c_[j] != 0) prod[i + j] += x->c_[i] * y->c_[j];
    }
    return from_poly_(std::move(prod), M);
  }
  friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }

  Cyc& operator+=(const Cyc& o) {
    if (N_ != o.N_) {
      if (is_zero()) return *this = o;       // accumulator fast path
      if (o.is_zero()) return *this;
      long M = std::lcm(N_, o.N_);
      *this = lifted(M);
      return *this += o.lifted(M);
    }
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Cyc& operator-=(const Cyc& o) {
    if (N_ != o.N_) {
      if (is_zero()) return *this = -o;
      if (o.is_zero()) return *this;
      long M = std::lcm(N_, o.N_);
      *this = lifted(M);
      return *this -= o.lifted(M);
    }
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

  // field inverse via extended Euclid against Phi_N (irreducible over Q)
  Cyc inverse() const {
    if (is_zero()) throw std::domain_error("Cyc::inverse: division by zero");
    if (is_rational()) {
      Cyc r = *this;
      r.c_[0] = Rat(1) / r.c_[0];
      for (size_t i = 1; i < r.c_.size(); ++i) r.c_[i] = 0;
      return r;
    }
    const std::vector<Int>& phiN = cyclotomic_poly(N_);
    std::vector<Rat> r0(phiN.begin(), phiN.end());
    std::vector<Rat> r1(c_.begin(), c_.end());
    trim_(r1);
    std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // Bezout coefficients against this
    while (true) {
      // r1 is nonzero; divide r0 by r1
      std::vector<Rat> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rat(0));
      std::vector<Rat> rem = r0;
      while (rem.size() >= r1.size() && !(rem.size() == 1 && rem[0] == 0)) {
        Rat lead = rem.back() / r1.back();
        size_t shift = rem.size() - r1.size();
        q[shift] += lead;
        for (size_t j = 0; j < r1.size(); ++j) rem[shift + j] -= lead * r1[j];
        trim_(rem);
        if (rem.size() == 1 && rem[0] == 0) break;
      }
      // s2 = s0 - q*s1
      std::vector<Rat> s2 = s0;
      if (s2.size() < q.size() + s1.size() - 1) s2.resize(q.size() + s1.size() - 1, Rat(0));
      for (size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
      }
      trim_(s2);
      if (rem.size() == 1 && rem[0] == 0) {
        // r1 is the gcd; it must be a nonzero constant (degree 0)
        if (r1.size() != 1) throw std::logic_error("Cyc::inverse: unexpected gcd degree");
        for (Rat& x : s1) x /= r1[0];
        return from_poly_(std::move(s1), N_);
      }
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
  }

  Cyc pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    Cyc acc = Cyc::one(N_), base = *this;
    while (k > 0) {
      if (k & 1) acc *= base;
      base *= base;
      k >>= 1;
    }
    return acc;
  }

  friend bool operator==(const Cyc& a, const Cyc& b) {
    if (a.N_ == b.N_) return a.c_ == b.c_;
    if (a.is_zero()) return b.is_zero();
    if (b.is_zero()) return false;
    auto [x, y] = aligned_(a, b);
    return x.c_ == y.c_;
  }
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  // express this scalar in Q(zeta_M) for M | N if possible
  bool compress_to(long M, Cyc* out) const {
    if (N_ % M != 0) return false;
    long step = N_ / M;
    long phiM = euler_phi(M);
    // candidate coords: solve lift(candidate) == *this; the lift map sends
    // basis vector i to root(N, i*step); invert by matching reduced coords
    std::vector<Cyc> lifted_basis;
    lifted_basis.reserve(static_cast<size_t>(phiM));
    for (long i = 0; i < phiM; ++i) lifted_basis.push_back(Cyc::root(N_, i * step));
    // solve small linear system over Q: sum x_i * lifted_basis[i] == *this
    size_t rows = c_.size(), cols = static_cast<size_t>(phiM);
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1, Rat(0)));
    for (size_t j = 0; j < cols; ++j)
      for (size_t i = 0; i < rows; ++i) m[i][j] = lifted_basis[j].c_[i];
    for (size_t i = 0; i < rows; ++i) m[i][cols] = c_[i];
    // Gaussian elimination
    size_t rank = 0;
    std::vector<long> pivot_col(rows, -1);
    for (size_t col = 0; col < cols && rank < rows; ++col) {
      size_t piv = rank;
      while (piv < rows && m[piv][col] == 0) ++piv;
      if (piv == rows) continue;
      std::swap(m[rank], m[piv]);
      Rat lead = m[rank][col];
      for (size_t j = col; j <= cols; ++j) m[rank][j] /= lead;
      for (size_t i = 0; i < rows; ++i) {
        if (i == rank || m[i][col] == 0) continue;
        Rat f = m[i][col];
        for (size_t j = col; j <= cols; ++j) m[i][j] -= f * m[rank][j];
      }
      pivot_col[rank] = static_cast<long>(col);
      ++rank;
    }
    for (size_t i = rank; i < rows; ++i)
      if (m[i][cols] != 0) return false;
    std::vector<Rat> sol(cols, Rat(0));
    for (size_t i = 0; i < rank; ++i) sol[static_cast<size_t>(pivot_col[i])] = m[i][cols];
    Cyc cand;
    cand.N_ = M;
    cand.c_ = std::move(sol);
    if (cand.lifted(N_) != *this) return false;
    if (out) *out = cand;
    return true;
  }

  std::string str() const {
    std::string s = "Cyc(N=" + std::to_string(N_) + "; ";
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ", ";
      s += c_[i].get_str();
    }
    return s + ")";
  }

 private:
  long N_;
  CoordVec c_;

  void canon_() {
    for (Rat& x : c_) x.canonicalize();
  }

  static void trim_(std::vector<Rat>& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
  }

  // reduce an arbitrary-degree polynomial in zeta_N modulo Phi_N
  // index of the only nonzero coordinate, or -1 when there are zero or
  // several of them
  long monomial_() const {
    long idx = -1;
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) {
        if (idx >= 0) return -1;
        idx = static_cast<long>(i);
      }
    return idx;
  }

  // v scaled by a rational, expressed in Q(zeta_M) with v.N_ | M
  static Cyc scaled_(const Cyc& v, const Rat& s, long M) {
    Cyc r = (v.N_ == M) ? v : v.lifted(M);
    if (s == 0) {
      for (Rat& x : r.c_) x = 0;
      return r;
    }
    if (s == 1) return r;
    for (Rat& x : r.c_) x *= s;
    return r;
  }

  static Cyc from_poly_(std::vector<Rat> poly, long N) {
    const std::vector<Int>& phiN = cyclotomic_poly(N);
    size_t deg = phiN.size() - 1;  // = phi(N)
    while (poly.size() > deg) {
      Rat lead = poly.back();
      if (lead != 0) {
        size_t shift = poly.size() - phiN.size();
        for (size_t j = 0; j + 1 < phiN.size(); ++j) poly[shift + j] -= lead * Rat(phiN[j]);
      }
      poly.pop_back();
    }
    poly.resize(deg, Rat(0));
    Cyc r;
    r.N_ = N;
    r.c_ = std::move(poly);
    r.canon_();
    return r;
  }

  static std::pair<Cyc, Cyc> aligned_(const Cyc& a, const Cyc& b) {
    if (a.N_ == b.N_) return {a, b};
    long M = std::lcm(a.N_, b.N_);
    return {a.lifted(M), b.lifted(M)};
  }
};

// A root of unity zeta_N^e kept in exponent form (exact torsion bookkeeping).
struct RootOfUnity {
  long N = 1;
  long e = 0;

  RootOfUnity() = default;
  RootOfUnity(long order, long exp) : N(order), e(((exp % order) + order) % order) {
    if (order < 1) throw std::invalid_argument("RootOfUnity: order must be >= 1");
  }

  RootOfUnity lifted(long M) const {
    if (M % N != 0) throw std::invalid_argument("RootOfUnity::lifted: bad target order");
    return RootOfUnity(M, e * (M / N));
  }
  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    long M = std::lcm(a.N, b.N);
    return RootOfUnity(M, a.lifted(M).e + b.lifted(M).e);
  }
  RootOfUnity inverse() const { return RootOfUnity(N, N - e); }
  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
    long M = std::lcm(a.N, b.N);
    return a.lifted(M).e == b.lifted(M).e;
  }
};

// canonical embedding mu_N -> Q(zeta_N)
inline Cyc embed_root(const RootOfUnity& r) { return Cyc::root(r.N, r.e); }

// If v is a root of unity of order dividing M, return its exponent; else -1.
inline long root_exponent(const Cyc& v, long M) {
  for (long k = 0; k < M; ++k)
    if (v == Cyc::root(M, k)) return k;
  return -1;
}

}  // namespace picardium
