#include <picardium/cochain.hpp>

#include <numeric>
#include <stdexcept>

namespace picardium {

size_t Cochain::index(const std::vector<int>& args) const {
  if (static_cast<int>(args.size()) != degree) throw std::invalid_argument("Cochain: arity mismatch");
  size_t idx = 0;
  for (int a : args) {
    if (a < 0 || a >= G.order()) throw std::invalid_argument("Cochain: element out of range");
    idx = idx * static_cast<size_t>(G.order()) + static_cast<size_t>(a);
  }
  return idx;
}

void Cochain::set(const std::vector<int>& args, long e) {
  val[index(args)] = ((e % N) + N) % N;
}

bool Cochain::is_normalized() const {
  int n = G.order();
  std::vector<int> args(static_cast<size_t>(degree), 0);
  for (size_t flat = 0; flat < val.size(); ++flat) {
    size_t f = flat;
    bool has_id = false;
    for (int i = degree - 1; i >= 0; --i) {
      args[static_cast<size_t>(i)] = static_cast<int>(f % static_cast<size_t>(n));
      if (args[static_cast<size_t>(i)] == 0) has_id = true;
      f /= static_cast<size_t>(n);
    }
    if (has_id && val[flat] != 0) return false;
  }
  return true;
}

bool Cochain::is_zero() const {
  for (long v : val)
    if (v != 0) return false;
  return true;
}

Cochain Cochain::lifted(long M) const {
  if (M % N != 0) throw std::invalid_argument("Cochain::lifted: target order not a multiple");
  Cochain r = *this;
  r.N = M;
  long s = M / N;
  for (long& v : r.val) v *= s;
  return r;
}

Cochain Cochain::zero(const FiniteGroup& G, int degree, long N) {
  Cochain c;
  c.G = G;
  c.degree = degree;
  c.N = N;
  size_t sz = 1;
  for (int i = 0; i < degree; ++i) sz *= static_cast<size_t>(G.order());
  c.val.assign(sz, 0);
  return c;
}

Cochain coboundary(const Cochain& c) {
  const FiniteGroup& G = c.G;
  int n = G.order();
  Cochain d = Cochain::zero(G, c.degree + 1, c.N);
  std::vector<int> args(static_cast<size_t>(c.degree + 1));
  std::vector<int> sub(static_cast<size_t>(c.degree));
  for (size_t flat = 0; flat < d.val.size(); ++flat) {
    size_t f = flat;
    for (int i = c.degree; i >= 0; --i) {
      args[static_cast<size_t>(i)] = static_cast<int>(f % static_cast<size_t>(n));
      f /= static_cast<size_t>(n);
    }
    long acc = 0;
    // (dc)(g_0,...,g_n) = c(g_1,...,g_n) + sum_i (-1)^i c(...,g_{i-1}g_i,...)
    //                     + (-1)^{n+1} c(g_0,...,g_{n-1})
    for (int drop = 0; drop <= c.degree + 1; ++drop) {
      long sign = (drop % 2 == 0) ? 1 : -1;
      if (drop == 0) {
        for (int i = 0; i < c.degree; ++i) sub[static_cast<size_t>(i)] = args[static_cast<size_t>(i + 1)];
      } else if (drop == c.degree + 1) {
        for (int i = 0; i < c.degree; ++i) sub[static_cast<size_t>(i)] = args[static_cast<size_t>(i)];
      } else {
        for (int i = 0; i < drop - 1; ++i) sub[static_cast<size_t>(i)] = args[static_cast<size_t>(i)];
        sub[static_cast<size_t>(drop - 1)] = G.op(args[static_cast<size_t>(drop - 1)], args[static_cast<size_t>(drop)]);
        for (int i = drop; i < c.degree; ++i) sub[static_cast<size_t>(i)] = args[static_cast<size_t>(i + 1)];
      }
      acc += sign * c.at(sub);
    }
    d.val[flat] = ((acc % c.N) + c.N) % c.N;
  }
  return d;
}

bool is_normalized_cocycle(const Cochain& c) {
  return c.is_normalized() && coboundary(c).is_zero();
}

Cochain restrict_cochain(const Cochain& psi, const SubgroupEmbedding& H) {
  Cochain r = Cochain::zero(H.sub, psi.degree, psi.N);
  int m = H.sub.order();
  std::vector<int> args(static_cast<size_t>(psi.degree));
  std::vector<int> amb(static_cast<size_t>(psi.degree));
  for (size_t flat = 0; flat < r.val.size(); ++flat) {
    size_t f = flat;
    for (int i = psi.degree - 1; i >= 0; --i) {
      args[static_cast<size_t>(i)] = static_cast<int>(f % static_cast<size_t>(m));
      f /= static_cast<size_t>(m);
    }
    for (int i = 0; i < psi.degree; ++i) amb[static_cast<size_t>(i)] = H.ambient_of(args[static_cast<size_t>(i)]);
    r.val[flat] = psi.at(amb);
  }
  return r;
}

Cochain standard_cyclic_cocycle(long n, long k) {
  FiniteGroup G = FiniteGroup::cyclic(static_cast<int>(n));
  Cochain psi = Cochain::zero(G, 3, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        long carry = (b + c) - ((b + c) % n);  // 0 or n
        psi.set({a, b, c}, k * a * carry);
      }
  return psi;
}

Cochain cochain_ratio(const Cochain& a, const Cochain& b) {
  if (a.degree != b.degree || a.G.order() != b.G.order() || a.G.mul != b.G.mul)
    throw std::invalid_argument("cochain_ratio: mismatched cochains");
  long M = std::lcm(a.N, b.N);
  Cochain x = a.lifted(M), y = b.lifted(M);
  for (size_t i = 0; i < x.val.size(); ++i) x.val[i] = ((x.val[i] - y.val[i]) % M + M) % M;
  return x;
}

}  // namespace picardium
