#pragma once

// Normalized cochains on a finite group with values in mu_N, stored as
// exponents mod N (dense, row-major over argument tuples).

#include <picardium/cyclotomic.hpp>
#include <picardium/group.hpp>

#include <vector>

namespace picardium {

struct Cochain {
  FiniteGroup G;
  int degree = 0;
  long N = 1;                // values live in mu_N
  std::vector<long> val;     // size |G|^degree, exponents in [0,N)

  size_t index(const std::vector<int>& args) const;
  long at(const std::vector<int>& args) const { return val[index(args)]; }
  void set(const std::vector<int>& args, long e);
  Cyc value(const std::vector<int>& args) const { return Cyc::root(N, at(args)); }

  bool is_normalized() const;   // vanishes when any argument is the identity
  bool is_zero() const;
  Cochain lifted(long M) const;  // scale exponents by M/N

  static Cochain zero(const FiniteGroup& G, int degree, long N);
};

Cochain coboundary(const Cochain& c);
bool is_normalized_cocycle(const Cochain& c);

// pull back an ambient cochain along a subgroup embedding
Cochain restrict_cochain(const Cochain& psi, const SubgroupEmbedding& H);

// psi_k on Z/n with values in mu_{n^2}: exponent k*a*(b + c - [b+c]_n)
Cochain standard_cyclic_cocycle(long n, long k);

// pointwise quotient lifted to a common order
Cochain cochain_ratio(const Cochain& a, const Cochain& b);

}  // namespace picardium
