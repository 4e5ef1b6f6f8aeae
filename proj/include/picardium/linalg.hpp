#pragma once

// Dense exact linear algebra over the cyclotomic scalars: products, rank
// factorization of idempotents, nullspaces and linear solving.  Pivoting is
// deterministic (first nonzero entry) so all downstream constructions are
// reproducible.

#include <picardium/cyclotomic.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace picardium {

struct Mat {
  size_t rows = 0, cols = 0;
  std::vector<Cyc> a;

  Mat() = default;
  Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

  Cyc& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Cyc& at(size_t i, size_t j) const { return a[i * cols + j]; }

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Cyc::one();
    return m;
  }

  bool is_zero() const {
    for (const Cyc& x : a)
      if (!x.is_zero()) return false;
    return true;
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("Mat: shape mismatch in product");
    Mat r(x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
      for (size_t k = 0; k < x.cols; ++k) {
        const Cyc& v = x.at(i, k);
        if (v.is_zero()) continue;
        for (size_t j = 0; j < y.cols; ++j) {
          if (y.at(k, j).is_zero()) continue;
          Cyc t = v * y.at(k, j);
          Cyc& acc = r.at(i, j);
          if (acc.is_zero())
            acc = std::move(t);
          else
            acc += t;
        }
      }
    return r;
  }
  friend Mat operator+(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("Mat: shape mismatch in sum");
    Mat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
  }
  friend Mat operator-(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("Mat: shape mismatch in difference");
    Mat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
  }
  friend Mat operator*(const Cyc& c, const Mat& y) {
    Mat r = y;
    for (Cyc& x : r.a) x *= c;
    return r;
  }
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

// reduced row echelon form in place; returns pivot column per pivot row
inline std::vector<size_t> rref(Mat& m) {
  std::vector<size_t> pivots;
  size_t rank = 0;
  for (size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    size_t piv = rank;
    while (piv < m.rows && m.at(piv, col).is_zero()) ++piv;
    if (piv == m.rows) continue;
    for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(rank, j), m.at(piv, j));
    Cyc lead = m.at(rank, col).inverse();
    for (size_t j = col; j < m.cols; ++j) m.at(rank, j) *= lead;
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == rank || m.at(i, col).is_zero()) continue;
      Cyc f = m.at(i, col);
      for (size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(rank, j);
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

// P idempotent: P = E * R with R * E = I (rank factorization)
struct RankFactor {
  Mat E, R;  // E: n x r, R: r x n
  size_t rank = 0;
};

inline RankFactor rank_factor_idempotent(const Mat& P) {
  if (P.rows != P.cols) throw std::invalid_argument("rank_factor_idempotent: square matrix required");
  Mat R = P;
  std::vector<size_t> piv = rref(R);
  size_t r = piv.size();
  RankFactor f;
  f.rank = r;
  f.R = Mat(r, P.cols);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < P.cols; ++j) f.R.at(i, j) = R.at(i, j);
  f.E = Mat(P.rows, r);
  for (size_t j = 0; j < r; ++j)
    for (size_t i = 0; i < P.rows; ++i) f.E.at(i, j) = P.at(i, piv[j]);
  // sanity: these identities characterize a rank factorization of an idempotent
  Mat re = f.R * f.E;
  if (!(re == Mat::identity(r))) throw std::invalid_argument("rank_factor_idempotent: matrix is not idempotent");
  if (!(f.E * f.R == P)) throw std::invalid_argument("rank_factor_idempotent: factorization failed");
  return f;
}

// columns spanning the nullspace of A
inline Mat nullspace(const Mat& A) {
  Mat R = A;
  std::vector<size_t> piv = rref(R);
  std::vector<bool> is_piv(A.cols, false);
  for (size_t p : piv) is_piv[p] = true;
  std::vector<size_t> free_cols;
  for (size_t j = 0; j < A.cols; ++j)
    if (!is_piv[j]) free_cols.push_back(j);
  Mat N(A.cols, free_cols.size());
  for (size_t k = 0; k < free_cols.size(); ++k) {
    N.at(free_cols[k], k) = Cyc::one();
    for (size_t i = 0; i < piv.size(); ++i) N.at(piv[i], k) = -R.at(i, free_cols[k]);
  }
  return N;
}

// one solution of A x = b (if any)
inline std::optional<std::vector<Cyc>> solve_linear(const Mat& A, const std::vector<Cyc>& b) {
  Mat M(A.rows, A.cols + 1);
  for (size_t i = 0; i < A.rows; ++i) {
    for (size_t j = 0; j < A.cols; ++j) M.at(i, j) = A.at(i, j);
    M.at(i, A.cols) = b[i];
  }
  Mat R = M;
  std::vector<size_t> piv = rref(R);
  if (!piv.empty() && piv.back() == A.cols) return std::nullopt;  // pivot in rhs column
  std::vector<Cyc> x(A.cols, Cyc::zero());
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = R.at(i, A.cols);
  return x;
}

inline std::optional<Mat> try_inverse(const Mat& A) {
  if (A.rows != A.cols) return std::nullopt;
  Mat M(A.rows, 2 * A.cols);
  for (size_t i = 0; i < A.rows; ++i) {
    for (size_t j = 0; j < A.cols; ++j) M.at(i, j) = A.at(i, j);
    M.at(i, A.cols + i) = Cyc::one();
  }
  std::vector<size_t> piv = rref(M);
  if (piv.size() != A.rows) return std::nullopt;
  for (size_t i = 0; i < piv.size(); ++i)
    if (piv[i] != i) return std::nullopt;
  Mat inv(A.rows, A.cols);
  for (size_t i = 0; i < A.rows; ++i)
    for (size_t j = 0; j < A.cols; ++j) inv.at(i, j) = M.at(i, A.cols + j);
  return inv;
}

}  // namespace picardium
