#pragma once

// Skeletal model of the pointed monoidal category of G-graded vector spaces
// with associativity twisted by a normalized 3-cocycle psi.  Objects are
// multiplicity vectors over G; morphisms are grade-diagonal blocks of exact
// cyclotomic matrices.  All coherence data (associators, duals) lives here;
// the chosen basis identification of (X(x)Y)_k is ordered by
// (g_x, i_x, g_y, i_y) lexicographically.

#include <picardium/cochain.hpp>
#include <picardium/linalg.hpp>

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

namespace picardium {

struct CategoryContext {
  FiniteGroup G;
  Cochain psi;

  CategoryContext(FiniteGroup g, Cochain p) : G(std::move(g)), psi(std::move(p)) {
    if (psi.degree != 3 || psi.G.mul != G.mul)
      throw std::invalid_argument("CategoryContext: psi must be a 3-cochain on G");
    if (!is_normalized_cocycle(psi))
      throw std::invalid_argument("CategoryContext: psi is not a normalized 3-cocycle");
  }
  static CategoryContext trivial(FiniteGroup g) {
    Cochain z = Cochain::zero(g, 3, 1);
    return CategoryContext(std::move(g), std::move(z));
  }

  Cyc psi_val(int a, int b, int c) const { return psi.value({a, b, c}); }
  Cyc psi_inv(int a, int b, int c) const { return Cyc::root(psi.N, psi.N - psi.at({a, b, c})); }
};

struct GradedObject {
  std::map<int, long> mult;  // grade -> multiplicity (only positive entries)

  long mult_at(int g) const {
    auto it = mult.find(g);
    return it == mult.end() ? 0 : it->second;
  }
  long total_dim() const {
    long d = 0;
    for (auto& [g, m] : mult) d += m;
    return d;
  }
  bool is_zero() const { return mult.empty(); }

  static GradedObject simple(int g) {
    GradedObject x;
    x.mult[g] = 1;
    return x;
  }
  static GradedObject unit() { return simple(0); }

  friend bool operator==(const GradedObject& a, const GradedObject& b) { return a.mult == b.mult; }
  friend bool operator!=(const GradedObject& a, const GradedObject& b) { return !(a == b); }
};

struct GradedMorphism {
  GradedObject src, dst;
  std::map<int, Mat> blocks;  // grades where both src and dst have multiplicity

  static GradedMorphism zero(const GradedObject& s, const GradedObject& d) {
    GradedMorphism f;
    f.src = s;
    f.dst = d;
    for (auto& [g, ms] : s.mult) {
      long md = d.mult_at(g);
      if (md > 0) f.blocks.emplace(g, Mat(static_cast<size_t>(md), static_cast<size_t>(ms)));
    }
    return f;
  }
  static GradedMorphism identity(const GradedObject& x) {
    GradedMorphism f = zero(x, x);
    for (auto& [g, b] : f.blocks) b = Mat::identity(b.rows);
    return f;
  }

  friend bool operator==(const GradedMorphism& a, const GradedMorphism& b) {
    return a.src == b.src && a.dst == b.dst && a.blocks == b.blocks;
  }
};

// ordered basis of (X(x)Y)_k: tuples (g_x, i_x, g_y, i_y)
inline std::vector<std::array<long, 4>> pair_basis(const FiniteGroup& G, const GradedObject& X,
                                                   const GradedObject& Y, int k) {
  std::vector<std::array<long, 4>> out;
  for (auto& [gx, mx] : X.mult)
    for (long ix = 0; ix < mx; ++ix)
      for (auto& [gy, my] : Y.mult) {
        if (G.op(gx, gy) != k) continue;
        for (long iy = 0; iy < my; ++iy) out.push_back({gx, ix, gy, iy});
      }
  return out;
}

struct GradedCat {
  using Obj = GradedObject;
  using Mor = GradedMorphism;

  CategoryContext ctx;

  explicit GradedCat(CategoryContext c) : ctx(std::move(c)) {}

  Obj unit() const { return GradedObject::unit(); }
  bool obj_eq(const Obj& x, const Obj& y) const { return x == y; }
  Obj mor_src(const Mor& f) const { return f.src; }
  Obj mor_dst(const Mor& f) const { return f.dst; }

  Mor id(const Obj& x) const { return GradedMorphism::identity(x); }
  Mor zero(const Obj& s, const Obj& d) const { return GradedMorphism::zero(s, d); }

  Mor compose(const Mor& f, const Mor& g) const {  // f after g
    if (!(g.dst == f.src)) throw std::invalid_argument("GradedCat::compose: type mismatch");
    Mor r = zero(g.src, f.dst);
    for (auto& [k, blk] : r.blocks) {
      if (g.dst.mult_at(k) == 0) continue;
      blk = f.blocks.at(k) * g.blocks.at(k);
    }
    return r;
  }
  Mor add(const Mor& f, const Mor& g) const {
    if (!(f.src == g.src && f.dst == g.dst)) throw std::invalid_argument("GradedCat::add: type mismatch");
    Mor r = f;
    for (auto& [k, blk] : r.blocks) blk = blk + g.blocks.at(k);
    return r;
  }
  Mor scale(const Cyc& c, const Mor& f) const {
    Mor r = f;
    for (auto& [k, blk] : r.blocks) blk = c * blk;
    return r;
  }
  bool eq(const Mor& f, const Mor& g) const {
    if (!(f.src == g.src && f.dst == g.dst)) return false;
    for (auto& [k, blk] : f.blocks) {
      const auto& other = g.blocks.at(k);
      for (size_t i = 0; i < blk.a.size(); ++i)
        if (blk.a[i] != other.a[i]) return false;
    }
    return true;
  }
  bool is_zero_mor(const Mor& f) const {
    for (auto& [k, blk] : f.blocks)
      if (!blk.is_zero()) return false;
    return true;
  }

  Obj tensor_obj(const Obj& x, const Obj& y) const {
    Obj r;
    for (auto& [gx, mx] : x.mult)
      for (auto& [gy, my] : y.mult) r.mult[ctx.G.op(gx, gy)] += mx * my;
    return r;
  }

  Mor tensor(const Mor& f, const Mor& g) const {
    Obj s = tensor_obj(f.src, g.src), d = tensor_obj(f.dst, g.dst);
    Mor r = zero(s, d);
    for (auto& [k, blk] : r.blocks) {
      auto rows = pair_basis(ctx.G, f.dst, g.dst, k);
      auto cols = pair_basis(ctx.G, f.src, g.src, k);
      for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) {
          auto& [ga, ia, gb, ib] = rows[i];
          auto& [gc, ic, gd2, id2] = cols[j];
          if (ga != gc || gb != gd2) continue;
          const Cyc& fv = f.blocks.at(static_cast<int>(ga)).at(static_cast<size_t>(ia), static_cast<size_t>(ic));
          if (fv.is_zero()) continue;
          const Cyc& gv = g.blocks.at(static_cast<int>(gb)).at(static_cast<size_t>(ib), static_cast<size_t>(id2));
          if (gv.is_zero()) continue;
          blk.at(i, j) = fv * gv;
        }
    }
    return r;
  }

  // flattened ordered basis of ((X(x)Y)(x)Z)_k as 6-tuples
  std::vector<std::array<long, 6>> left_triple_basis(const Obj& X, const Obj& Y, const Obj& Z, int k) const {
    std::vector<std::array<long, 6>> out;
    Obj XY = tensor_obj(X, Y);
    for (auto& [gxy, mxy] : XY.mult) {
      auto inner = pair_basis(ctx.G, X, Y, static_cast<int>(gxy));
      for (auto& [gz, mz] : Z.mult) {
        if (ctx.G.op(static_cast<int>(gxy), static_cast<int>(gz)) != k) continue;
        // pair order of (XY, Z): (g_xy, i_xy, g_z, i_z); i_xy expands to inner tuples
        (void)mxy;
        for (auto& t : inner)
          for (long iz = 0; iz < mz; ++iz) out.push_back({t[0], t[1], t[2], t[3], gz, iz});
      }
    }
    return out;
  }
  std::vector<std::array<long, 6>> right_triple_basis(const Obj& X, const Obj& Y, const Obj& Z, int k) const {
    std::vector<std::array<long, 6>> out;
    Obj YZ = tensor_obj(Y, Z);
    for (auto& [gx, mx] : X.mult)
      for (long ix = 0; ix < mx; ++ix)
        for (auto& [gyz, myz] : YZ.mult) {
          if (ctx.G.op(static_cast<int>(gx), static_cast<int>(gyz)) != k) continue;
          (void)myz;
          for (auto& t : pair_basis(ctx.G, Y, Z, static_cast<int>(gyz)))
            out.push_back({gx, ix, t[0], t[1], t[2], t[3]});
        }
    return out;
  }

  // associator (X(x)Y)(x)Z -> X(x)(Y(x)Z): entry psi(g_x, g_y, g_z)
  Mor assoc(const Obj& X, const Obj& Y, const Obj& Z) const { return assoc_impl_(X, Y, Z, false); }
  Mor assoc_inv(const Obj& X, const Obj& Y, const Obj& Z) const { return assoc_impl_(X, Y, Z, true); }

  // skeletal unit: 1 (x) X = X = X (x) 1 on the nose, unitors are identities
  Mor lunit(const Obj& x) const { return id(x); }
  Mor lunit_inv(const Obj& x) const { return id(x); }
  Mor runit(const Obj& x) const { return id(x); }
  Mor runit_inv(const Obj& x) const { return id(x); }

  Obj dual(const Obj& x) const {
    Obj r;
    for (auto& [g, m] : x.mult) r.mult[ctx.G.inv[static_cast<size_t>(g)]] = m;
    return r;
  }

  // duality quadruple: ev: X*(x)X -> 1, coev: 1 -> X(x)X*,
  //                    ev2: X(x)X* -> 1, coev2: 1 -> X*(x)X
  // normalization: ev, ev2 carry coefficient 1; coev carries 1/psi(g,g^-1,g),
  // coev2 carries psi(g,g^-1,g); then dim_l(L_g) = psi(g,g^-1,g).
  Mor ev(const Obj& x) const {
    Obj xs = dual(x);
    Mor f = zero(tensor_obj(xs, x), unit());
    if (f.blocks.empty()) return f;
    auto cols = pair_basis(ctx.G, xs, x, 0);
    Mat& blk = f.blocks.at(0);
    for (size_t j = 0; j < cols.size(); ++j) {
      auto& [ga, ia, gb, ib] = cols[j];
      if (ia == ib) blk.at(0, j) = Cyc::one();  // ga = gb^-1 automatically
    }
    return f;
  }
  Mor coev(const Obj& x) const {
    Obj xs = dual(x);
    Mor f = zero(unit(), tensor_obj(x, xs));
    if (f.blocks.empty()) return f;
    auto rows = pair_basis(ctx.G, x, xs, 0);
    Mat& blk = f.blocks.at(0);
    for (size_t i = 0; i < rows.size(); ++i) {
      auto& [ga, ia, gb, ib] = rows[i];
      int g = static_cast<int>(ga);
      if (ia == ib) blk.at(i, 0) = ctx.psi_inv(g, ctx.G.inv[static_cast<size_t>(g)], g);
    }
    return f;
  }
  Mor ev2(const Obj& x) const {
    Obj xs = dual(x);
    Mor f = zero(tensor_obj(x, xs), unit());
    if (f.blocks.empty()) return f;
    auto cols = pair_basis(ctx.G, x, xs, 0);
    Mat& blk = f.blocks.at(0);
    for (size_t j = 0; j < cols.size(); ++j) {
      auto& [ga, ia, gb, ib] = cols[j];
      if (ia == ib) blk.at(0, j) = Cyc::one();
    }
    return f;
  }
  Mor coev2(const Obj& x) const {
    Obj xs = dual(x);
    Mor f = zero(unit(), tensor_obj(xs, x));
    if (f.blocks.empty()) return f;
    auto rows = pair_basis(ctx.G, xs, x, 0);
    Mat& blk = f.blocks.at(0);
    for (size_t i = 0; i < rows.size(); ++i) {
      auto& [ga, ia, gb, ib] = rows[i];
      int g = static_cast<int>(gb);  // second factor is X at grade g
      if (ia == ib) blk.at(i, 0) = ctx.psi_val(g, ctx.G.inv[static_cast<size_t>(g)], g);
    }
    return f;
  }

  std::vector<Mor> hom_basis(const Obj& x, const Obj& y) const {
    std::vector<Mor> out;
    Mor z = zero(x, y);
    for (auto& [g, blk] : z.blocks)
      for (size_t i = 0; i < blk.rows; ++i)
        for (size_t j = 0; j < blk.cols; ++j) {
          Mor e = z;
          e.blocks.at(g).at(i, j) = Cyc::one();
          out.push_back(std::move(e));
        }
    return out;
  }

  std::vector<Cyc> mor_coords(const Mor& f) const {
    std::vector<Cyc> out;
    for (auto& [g, blk] : f.blocks) out.insert(out.end(), blk.a.begin(), blk.a.end());
    return out;
  }

  // value of an endomorphism of the unit object
  Cyc scalar_of(const Mor& f) const {
    if (!(f.src == unit() && f.dst == unit())) throw std::invalid_argument("scalar_of: not an endo of the unit");
    return f.blocks.at(0).at(0, 0);
  }

  struct Sum {
    Obj total;
    std::vector<Mor> inj, proj;
  };
  Sum direct_sum(const std::vector<Obj>& parts) const {
    Sum s;
    for (const Obj& p : parts)
      for (auto& [g, m] : p.mult) s.total.mult[g] += m;
    std::map<int, long> offset;
    for (const Obj& p : parts) {
      Mor in = zero(p, s.total), pr = zero(s.total, p);
      for (auto& [g, m] : p.mult) {
        long off = offset[g];
        for (long i = 0; i < m; ++i) {
          in.blocks.at(g).at(static_cast<size_t>(off + i), static_cast<size_t>(i)) = Cyc::one();
          pr.blocks.at(g).at(static_cast<size_t>(i), static_cast<size_t>(off + i)) = Cyc::one();
        }
        offset[g] += m;
      }
      s.inj.push_back(std::move(in));
      s.proj.push_back(std::move(pr));
    }
    return s;
  }

  struct Split {
    Obj im;
    Mor e;  // im -> X,  e o r = P
    Mor r;  // X -> im,  r o e = id
  };
  Split split(const Mor& P) const {
    if (!(P.src == P.dst)) throw std::invalid_argument("split: not an endomorphism");
    Split s;
    std::map<int, RankFactor> fac;
    for (auto& [g, blk] : P.blocks) {
      RankFactor f = rank_factor_idempotent(blk);
      if (f.rank > 0) s.im.mult[g] = static_cast<long>(f.rank);
      fac.emplace(g, std::move(f));
    }
    s.e = zero(s.im, P.src);
    s.r = zero(P.src, s.im);
    for (auto& [g, f] : fac) {
      if (f.rank == 0) continue;
      s.e.blocks.at(g) = f.E;
      s.r.blocks.at(g) = f.R;
    }
    return s;
  }

 private:
  Mor assoc_impl_(const Obj& X, const Obj& Y, const Obj& Z, bool inverse) const {
    Obj L = tensor_obj(tensor_obj(X, Y), Z);
    Obj R = tensor_obj(X, tensor_obj(Y, Z));
    Mor f = inverse ? zero(R, L) : zero(L, R);
    for (auto& [k, blk] : f.blocks) {
      auto lb = left_triple_basis(X, Y, Z, k);
      auto rb = right_triple_basis(X, Y, Z, k);
      const auto& rows = inverse ? lb : rb;
      const auto& cols = inverse ? rb : lb;
      for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) {
          if (rows[i] != cols[j]) continue;
          int a = static_cast<int>(rows[i][0]), b = static_cast<int>(rows[i][2]), c = static_cast<int>(rows[i][4]);
          blk.at(i, j) = inverse ? ctx.psi_inv(a, b, c) : ctx.psi_val(a, b, c);
        }
    }
    return f;
  }
};

}  // namespace picardium
