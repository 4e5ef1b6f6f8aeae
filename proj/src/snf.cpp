#include <picardium/snf.hpp>

#include <numeric>
#include <stdexcept>

namespace picardium {

namespace {

IntMat identity_mat(size_t n) {
  IntMat I(n, std::vector<mpz_class>(n, 0));
  for (size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

}  // namespace

SNF smith_normal_form(IntMat A) {
  size_t m = A.size();
  size_t n = m ? A[0].size() : 0;
  SNF r;
  r.rows = m;
  r.cols = n;
  r.U = identity_mat(m);
  r.V = identity_mat(n);
  size_t k = 0;
  while (k < m && k < n) {
    // find a nonzero pivot at or below/right of (k, k)
    size_t pi = k, pj = k;
    bool found = false;
    for (size_t i = k; i < m && !found; ++i)
      for (size_t j = k; j < n && !found; ++j)
        if (A[i][j] != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    std::swap(A[k], A[pi]);
    std::swap(r.U[k], r.U[pi]);
    for (size_t i = 0; i < m; ++i) std::swap(A[i][k], A[i][pj]);
    for (size_t i = 0; i < n; ++i) std::swap(r.V[i][k], r.V[i][pj]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = k + 1; i < m; ++i) {
        while (A[i][k] != 0) {
          mpz_class q = A[i][k] / A[k][k];
          for (size_t j = 0; j < n; ++j) A[i][j] -= q * A[k][j];
          for (size_t j = 0; j < m; ++j) r.U[i][j] -= q * r.U[k][j];
          if (A[i][k] != 0) {
            std::swap(A[i], A[k]);
            std::swap(r.U[i], r.U[k]);
          }
        }
      }
      for (size_t j = k + 1; j < n; ++j) {
        while (A[k][j] != 0) {
          mpz_class q = A[k][j] / A[k][k];
          for (size_t i = 0; i < m; ++i) A[i][j] -= q * A[i][k];
          for (size_t i = 0; i < n; ++i) r.V[i][j] -= q * r.V[i][k];
          if (A[k][j] != 0) {
            for (size_t i = 0; i < m; ++i) std::swap(A[i][j], A[i][k]);
            for (size_t i = 0; i < n; ++i) std::swap(r.V[i][j], r.V[i][k]);
          }
        }
      }
      for (size_t i = k + 1; i < m && clean; ++i)
        if (A[i][k] != 0) clean = false;
      for (size_t j = k + 1; j < n && clean; ++j)
        if (A[k][j] != 0) clean = false;
      if (!clean) continue;
      // divisibility fix-up: pivot must divide the remaining block
      for (size_t i = k + 1; i < m && clean; ++i)
        for (size_t j = k + 1; j < n && clean; ++j)
          if (A[i][j] % A[k][k] != 0) {
            for (size_t jj = 0; jj < n; ++jj) A[k][jj] += A[i][jj];
            for (size_t jj = 0; jj < m; ++jj) r.U[k][jj] += r.U[i][jj];
            clean = false;
          }
    }
    if (A[k][k] < 0) {
      for (size_t j = 0; j < n; ++j) A[k][j] = -A[k][j];
      for (size_t j = 0; j < m; ++j) r.U[k][j] = -r.U[k][j];
    }
    ++k;
  }
  for (size_t i = 0; i < std::min(m, n); ++i) r.diag.push_back(A[i][i]);
  return r;
}

mpz_class ModSolutions::count() const {
  if (!solvable) return 0;
  mpz_class c = 1;
  for (long o : gen_orders) c *= o;
  return c;
}

std::vector<long> ModSolutions::at(std::vector<long> t) const {
  if (t.size() != gens.size()) throw std::invalid_argument("ModSolutions::at: bad index tuple");
  std::vector<long> x = particular;
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j)
      x[j] = (x[j] + t[i] % gen_orders[i] * gens[i][j]) % N;
  return x;
}

ModSolutions solve_mod(const std::vector<std::vector<long>>& A, const std::vector<long>& b, long N) {
  size_t m = A.size();
  size_t n = m ? A[0].size() : 0;
  if (b.size() != m) throw std::invalid_argument("solve_mod: shape mismatch");
  ModSolutions res;
  res.N = N;
  if (n == 0) {
    res.solvable = true;
    for (long bi : b)
      if (((bi % N) + N) % N != 0) res.solvable = false;
    return res;
  }
  IntMat Az(m, std::vector<mpz_class>(n));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) Az[i][j] = A[i][j];
  SNF s = smith_normal_form(std::move(Az));
  // transform rhs: c = U b
  std::vector<mpz_class> c(m, 0);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) c[i] += s.U[i][j] * b[j];
  // solve D y = c (mod N) coordinatewise
  std::vector<mpz_class> y(n, 0);
  std::vector<std::pair<size_t, long>> free_orders;  // (index, order)
  mpz_class Nz(N);
  bool ok = true;
  for (size_t i = 0; i < n; ++i) {
    mpz_class d = (i < s.diag.size()) ? s.diag[i] : mpz_class(0);
    mpz_class ci = (i < m) ? c[i] : mpz_class(0);
    if (d == 0) {
      // no pivot for this column: y_i free over Z/N (consistency of the
      // corresponding zero row, if any, is checked below)
      free_orders.emplace_back(i, N);
      continue;
    }
    mpz_class g = gcd(d, Nz);
    if (ci % g != 0) {
      ok = false;
      continue;
    }
    mpz_class dd = d / g, cc = ci / g, Ng = Nz / g;
    if (Ng == 1) {
      y[i] = 0;
    } else {
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), dd.get_mpz_t(), Ng.get_mpz_t());
      y[i] = ((inv * cc) % Ng + Ng) % Ng;
    }
    long order = g.get_si();
    if (order > 1) free_orders.emplace_back(i, order);  // step N/g, order g
  }
  // rows without a pivot must have zero rhs mod N
  for (size_t i = 0; i < m; ++i) {
    mpz_class d = (i < s.diag.size()) ? s.diag[i] : mpz_class(0);
    if (d == 0 && ((c[i] % Nz) + Nz) % Nz != 0) ok = false;
  }
  res.solvable = ok;
  if (!ok) return res;
  // x = V y mod N
  res.particular.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    mpz_class acc = 0;
    for (size_t j = 0; j < n; ++j) acc += s.V[i][j] * y[j];
    res.particular[i] = mpz_class(((acc % Nz) + Nz) % Nz).get_si();
  }
  // kernel generators: columns V * (step_i * e_i), order_i solutions each
  for (auto [idx, order] : free_orders) {
    long step = N / order;
    std::vector<long> gen(n, 0);
    for (size_t i = 0; i < n; ++i) {
      mpz_class v = (s.V[i][idx] * step) % Nz;
      gen[i] = mpz_class((v + Nz) % Nz).get_si();
    }
    res.gens.push_back(std::move(gen));
    res.gen_orders.push_back(order);
  }
  return res;
}

IntMat lattice_basis_with_modulus(const IntMat& gens, size_t dim, long N) {
  // columns of [gens | N*I]; reduce to a square triangular basis by
  // column-wise gcd elimination
  std::vector<std::vector<mpz_class>> cols;
  if (!gens.empty()) {
    size_t k = gens[0].size();
    for (size_t j = 0; j < k; ++j) {
      std::vector<mpz_class> col(dim);
      for (size_t i = 0; i < dim; ++i) col[i] = gens[i][j];
      cols.push_back(std::move(col));
    }
  }
  for (size_t i = 0; i < dim; ++i) {
    std::vector<mpz_class> col(dim, 0);
    col[i] = N;
    cols.push_back(std::move(col));
  }
  IntMat basis(dim, std::vector<mpz_class>(dim, 0));
  size_t row = 0, placed = 0;
  std::vector<std::vector<mpz_class>> work = std::move(cols);
  for (row = 0; row < dim; ++row) {
    // eliminate row `row` across all remaining columns down to one
    size_t piv = work.size();
    for (size_t j = 0; j < work.size(); ++j)
      if (work[j][row] != 0) {
        piv = j;
        break;
      }
    if (piv == work.size()) continue;  // cannot happen: N*e_row present
    for (size_t j = piv + 1; j < work.size(); ++j) {
      while (work[j][row] != 0) {
        mpz_class q = work[j][row] / work[piv][row];
        for (size_t i = 0; i < dim; ++i) work[j][i] -= q * work[piv][i];
        if (work[j][row] != 0) std::swap(work[j], work[piv]);
      }
    }
    if (work[piv][row] < 0)
      for (size_t i = 0; i < dim; ++i) work[piv][i] = -work[piv][i];
    for (size_t i = 0; i < dim; ++i) basis[i][placed] = work[piv][i];
    work.erase(work.begin() + static_cast<long>(piv));
    ++placed;
  }
  if (placed != dim) throw std::logic_error("lattice_basis_with_modulus: rank deficiency");
  return basis;
}

std::vector<long> lattice_quotient_invariants(const IntMat& basis1, const IntMat& basis2) {
  size_t n = basis1.size();
  // solve basis1 * C = basis2 exactly over Q, column by column
  std::vector<std::vector<mpq_class>> M(n, std::vector<mpq_class>(2 * n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      M[i][j] = mpq_class(basis1[i][j]);
      M[i][n + j] = mpq_class(basis2[i][j]);
    }
  for (size_t col = 0, rank = 0; col < n && rank < n; ++col) {
    size_t piv = rank;
    while (piv < n && M[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("lattice_quotient_invariants: singular basis");
    std::swap(M[rank], M[piv]);
    mpq_class lead = M[rank][col];
    for (size_t j = 0; j < 2 * n; ++j) M[rank][j] /= lead;
    for (size_t i = 0; i < n; ++i) {
      if (i == rank || M[i][col] == 0) continue;
      mpq_class f = M[i][col];
      for (size_t j = 0; j < 2 * n; ++j) M[i][j] -= f * M[rank][j];
    }
    ++rank;
  }
  IntMat C(n, std::vector<mpz_class>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      mpq_class v = M[i][n + j];
      v.canonicalize();
      if (v.get_den() != 1) throw std::invalid_argument("lattice_quotient_invariants: L2 not inside L1");
      C[i][j] = v.get_num();
    }
  SNF s = smith_normal_form(std::move(C));
  std::vector<long> inv;
  for (const mpz_class& d : s.diag) {
    mpz_class a = abs(d);
    if (a > 1) inv.push_back(a.get_si());
  }
  return inv;
}

}  // namespace picardium
