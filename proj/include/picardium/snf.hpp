#pragma once

// Integer linear algebra: Smith normal form and linear solving mod N,
// with full enumeration data for the solution set.

#include <gmpxx.h>

#include <vector>

namespace picardium {

using IntMat = std::vector<std::vector<mpz_class>>;

struct SNF {
  IntMat U, V;                     // U * A * V = D with U, V unimodular
  std::vector<mpz_class> diag;     // diagonal of D, length min(rows, cols)
  size_t rows = 0, cols = 0;
};

SNF smith_normal_form(IntMat A);

// Solutions of A x = b (mod N) as x = particular + sum_i t_i * gen_i (mod N),
// t_i ranging over [0, gen_order_i).  Distinct tuples give distinct x.
struct ModSolutions {
  bool solvable = false;
  long N = 1;
  std::vector<long> particular;
  std::vector<std::vector<long>> gens;
  std::vector<long> gen_orders;

  mpz_class count() const;
  std::vector<long> at(std::vector<long> t) const;  // t[i] in [0, gen_order_i)
};

ModSolutions solve_mod(const std::vector<std::vector<long>>& A, const std::vector<long>& b, long N);

// Invariant factors (> 1) of the quotient L1 / L2 of two full-rank lattices
// given by square basis matrices (columns), with L2 <= L1.
std::vector<long> lattice_quotient_invariants(const IntMat& basis1, const IntMat& basis2);

// Basis (columns, square, full rank) of the lattice spanned by the given
// generator columns together with N * e_i.
IntMat lattice_basis_with_modulus(const IntMat& gens, size_t dim, long N);

}  // namespace picardium
