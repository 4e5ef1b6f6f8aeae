#include <picardium/trivialise.hpp>

#include <numeric>
#include <stdexcept>

namespace picardium {

namespace {

// index of a tuple of non-identity elements, or -1 if any entry is identity
long nonid_index(const std::vector<int>& args, int n) {
  long idx = 0;
  for (int a : args) {
    if (a == 0) return -1;
    idx = idx * (n - 1) + (a - 1);
  }
  return idx;
}

size_t pow_sz(int base, int exp) {
  size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<size_t>(base);
  return r;
}

// matrix of the coboundary d: C^n_norm -> C^{n+1}_norm over non-identity
// tuples (identity-argument equations vanish identically on normalized
// cochains, and values at identity-argument tuples are zero)
std::vector<std::vector<long>> coboundary_matrix(const FiniteGroup& G, int n) {
  int ord = G.order();
  size_t rows = pow_sz(ord - 1, n + 1);
  size_t cols = pow_sz(ord - 1, n);
  std::vector<std::vector<long>> M(rows, std::vector<long>(cols, 0));
  std::vector<int> args(static_cast<size_t>(n + 1));
  std::vector<int> sub(static_cast<size_t>(n));
  for (size_t r = 0; r < rows; ++r) {
    size_t f = r;
    for (int i = n; i >= 0; --i) {
      args[static_cast<size_t>(i)] = 1 + static_cast<int>(f % static_cast<size_t>(ord - 1));
      f /= static_cast<size_t>(ord - 1);
    }
    for (int drop = 0; drop <= n + 1; ++drop) {
      long sign = (drop % 2 == 0) ? 1 : -1;
      if (drop == 0) {
        for (int i = 0; i < n; ++i) sub[static_cast<size_t>(i)] = args[static_cast<size_t>(i + 1)];
      } else if (drop == n + 1) {
        for (int i = 0; i < n; ++i) sub[static_cast<size_t>(i)] = args[static_cast<size_t>(i)];
      } else {
        for (int i = 0; i < drop - 1; ++i) sub[static_cast<size_t>(i)] = args[static_cast<size_t>(i)];
        sub[static_cast<size_t>(drop - 1)] =
            G.op(args[static_cast<size_t>(drop - 1)], args[static_cast<size_t>(drop)]);
        for (int i = drop; i < n; ++i) sub[static_cast<size_t>(i)] = args[static_cast<size_t>(i + 1)];
      }
      long c = nonid_index(sub, ord);
      if (c >= 0) M[r][static_cast<size_t>(c)] += sign;
    }
  }
  return M;
}

std::vector<long> restricted_rhs(const Cochain& psi, const SubgroupEmbedding& H, long Nprime) {
  Cochain r = restrict_cochain(psi, H).lifted(Nprime);
  int m = H.sub.order();
  size_t rows = pow_sz(m - 1, 3);
  std::vector<long> b(rows, 0);
  std::vector<int> args(3);
  for (size_t row = 0; row < rows; ++row) {
    size_t f = row;
    for (int i = 2; i >= 0; --i) {
      args[static_cast<size_t>(i)] = 1 + static_cast<int>(f % static_cast<size_t>(m - 1));
      f /= static_cast<size_t>(m - 1);
    }
    b[row] = r.at(args);
  }
  return b;
}

Cochain solution_to_cochain(const std::vector<long>& x, const FiniteGroup& H, long Nprime) {
  Cochain w = Cochain::zero(H, 2, Nprime);
  int m = H.order();
  for (int g = 1; g < m; ++g)
    for (int h = 1; h < m; ++h)
      w.set({g, h}, x[static_cast<size_t>((g - 1) * (m - 1) + (h - 1))]);
  return w;
}

}  // namespace

Trivialisation trivialise(const Cochain& psi, const SubgroupEmbedding& H, bool enumerate) {
  if (psi.degree != 3) throw std::invalid_argument("trivialise: psi must be a 3-cochain");
  if (!is_normalized_cocycle(psi)) throw std::invalid_argument("trivialise: psi is not a normalized 3-cocycle");
  const FiniteGroup& sub = H.sub;
  long m = sub.order();
  Trivialisation out;
  out.Nprime = std::lcm(psi.N, m * m);
  out.Nsecond = out.Nprime * sub.exponent();
  std::vector<std::vector<long>> D = coboundary_matrix(sub, 2);
  std::vector<long> b = restricted_rhs(psi, H, out.Nprime);
  ModSolutions sols = solve_mod(D, b, out.Nprime);
  out.solvable = sols.solvable;
  // stabilization: solvability must agree at the doubled order
  {
    std::vector<long> b2 = restricted_rhs(psi, H, 2 * out.Nprime);
    ModSolutions sols2 = solve_mod(D, b2, 2 * out.Nprime);
    out.stabilized = (sols.solvable == sols2.solvable);
  }
  if (!sols.solvable || !enumerate) {
    out.solution_count = sols.solvable ? static_cast<long>(sols.count().get_si()) : 0;
    return out;
  }
  mpz_class cnt = sols.count();
  if (cnt > 2000000) throw std::runtime_error("trivialise: solution set too large to enumerate");
  out.solution_count = static_cast<long>(cnt.get_si());
  std::vector<long> t(sols.gens.size(), 0);
  for (long i = 0; i < out.solution_count; ++i) {
    out.solutions.push_back(solution_to_cochain(sols.at(t), sub, out.Nprime));
    // lexicographic increment, last index fastest
    for (long j = static_cast<long>(t.size()) - 1; j >= 0; --j) {
      if (++t[static_cast<size_t>(j)] < sols.gen_orders[static_cast<size_t>(j)]) break;
      t[static_cast<size_t>(j)] = 0;
    }
  }
  return out;
}

bool cochains_cohomologous(const Cochain& a, const Cochain& b, long Nsecond) {
  Cochain diff = cochain_ratio(a, b);
  if (Nsecond % diff.N != 0)
    throw std::invalid_argument("cochains_cohomologous: Nsecond not a multiple of the value order");
  diff = diff.lifted(Nsecond);
  const FiniteGroup& G = a.G;
  std::vector<std::vector<long>> D = coboundary_matrix(G, 1);
  int m = G.order();
  std::vector<long> rhs(static_cast<size_t>((m - 1) * (m - 1)));
  for (int g = 1; g < m; ++g)
    for (int h = 1; h < m; ++h)
      rhs[static_cast<size_t>((g - 1) * (m - 1) + (h - 1))] = diff.at({g, h});
  return solve_mod(D, rhs, Nsecond).solvable;
}

std::vector<std::vector<size_t>> trivialisation_classes(const std::vector<Cochain>& solutions,
                                                        long Nsecond) {
  std::vector<std::vector<size_t>> classes;
  for (size_t i = 0; i < solutions.size(); ++i) {
    bool placed = false;
    for (auto& cls : classes) {
      if (cochains_cohomologous(solutions[i], solutions[cls[0]], Nsecond)) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({i});
  }
  return classes;
}

std::vector<long> cohomology_group(const FiniteGroup& G, int degree, long N) {
  if (degree < 1) throw std::invalid_argument("cohomology_group: degree must be >= 1");
  int ord = G.order();
  size_t k = pow_sz(ord - 1, degree);
  // kernel lattice of d_degree mod N via SNF
  std::vector<std::vector<long>> Dn = coboundary_matrix(G, degree);
  IntMat Dz(Dn.size(), std::vector<mpz_class>(k));
  for (size_t i = 0; i < Dn.size(); ++i)
    for (size_t j = 0; j < k; ++j) Dz[i][j] = Dn[i][j];
  SNF s = smith_normal_form(std::move(Dz));
  IntMat Zbasis(k, std::vector<mpz_class>(k, 0));
  mpz_class Nz(N);
  for (size_t j = 0; j < k; ++j) {
    mpz_class d = (j < s.diag.size()) ? s.diag[j] : mpz_class(0);
    mpz_class mult = (d == 0) ? mpz_class(1) : Nz / gcd(d, Nz);
    for (size_t i = 0; i < k; ++i) Zbasis[i][j] = s.V[i][j] * mult;
  }
  // image lattice of d_{degree-1} together with N * I
  IntMat Bgens;
  if (degree >= 2) {
    std::vector<std::vector<long>> Dprev = coboundary_matrix(G, degree - 1);
    Bgens.assign(k, std::vector<mpz_class>(Dprev.empty() ? 0 : Dprev[0].size()));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < Bgens[i].size(); ++j) Bgens[i][j] = Dprev[i][j];
  } else {
    Bgens.assign(k, std::vector<mpz_class>());
  }
  IntMat Bbasis = lattice_basis_with_modulus(Bgens, k, N);
  return lattice_quotient_invariants(Zbasis, Bbasis);
}

}  // namespace picardium
