#pragma once

// Trivialisations of a 3-cocycle on a subgroup: all normalized 2-cochains
// omega with d(omega) = psi|_H, solved as an integer linear system mod N'.

#include <picardium/cochain.hpp>
#include <picardium/snf.hpp>

#include <vector>

namespace picardium {

struct Trivialisation {
  bool solvable = false;
  long Nprime = 1;               // solution values live in mu_{N'}
  long Nsecond = 1;              // equivalence tested in mu_{N''}
  bool stabilized = false;       // doubling N' does not change solvability
  long solution_count = 0;
  std::vector<Cochain> solutions;  // deterministic lexicographic enumeration
};

// psi: normalized 3-cocycle on the ambient group; solves on H
Trivialisation trivialise(const Cochain& psi, const SubgroupEmbedding& H,
                          bool enumerate = true);

// Partition indices of `solutions` into coboundary-equivalence classes
// (omega ~ omega' iff omega/omega' = d(eta) for a normalized 1-cochain eta
// valued in mu_{Nsecond}).  Returns class -> member indices, first member is
// the representative.
std::vector<std::vector<size_t>> trivialisation_classes(const std::vector<Cochain>& solutions,
                                                        long Nsecond);

bool cochains_cohomologous(const Cochain& a, const Cochain& b, long Nsecond);

// invariant factors (>1) of H^degree(G, Z/N) on normalized cochains
std::vector<long> cohomology_group(const FiniteGroup& G, int degree, long N);

}  // namespace picardium
