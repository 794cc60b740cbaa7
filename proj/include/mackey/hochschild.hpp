#pragma once

// Simplicial Mackey functors, their Moore complexes and homology, and the
// twisted cyclic nerve of a commutative Green functor.

#include "mackey/green.hpp"

#include <string>
#include <vector>

namespace mackey {

struct SimplicialMackey {
  std::vector<MackeyFunctor> objects;
  std::vector<std::vector<MackeyMorphism>> faces;         // faces[j][i] : X_j -> X_{j-1}
  std::vector<std::vector<MackeyMorphism>> degeneracies;  // degeneracies[j][i] : X_j -> X_{j+1}

  std::size_t max_degree() const { return objects.size() - 1; }
  long n() const { return objects.front().n(); }
  const MackeyMorphism& face(std::size_t j, std::size_t i) const { return faces.at(j).at(i); }
  const MackeyMorphism& degeneracy(std::size_t j, std::size_t i) const { return degeneracies.at(j).at(i); }
};

inline AxiomReport check_simplicial_identities(const SimplicialMackey& x) {
  AxiomReport rep;
  const std::size_t top = x.max_degree();
  auto same = [&](std::size_t deg, const MackeyMorphism& f, const MackeyMorphism& g, const std::string& what) {
    rep.expect(equal(x.objects[deg], f, g), what);
  };
  auto name = [](const char* s, std::size_t a, std::size_t b, std::size_t j) {
    return std::string(s) + " i=" + std::to_string(a) + " j=" + std::to_string(b) + " in degree " + std::to_string(j);
  };
  for (std::size_t j = 0; j <= top; ++j) {
    // d_i d_k = d_{k-1} d_i, i < k, on X_j
    if (j >= 2)
      for (std::size_t k = 1; k <= j; ++k)
        for (std::size_t i = 0; i < k; ++i)
          same(j - 2, compose(x.face(j - 1, i), x.face(j, k)), compose(x.face(j - 1, k - 1), x.face(j, i)), name("d_i d_j", i, k, j));
    if (j + 1 <= top) {
      for (std::size_t k = 0; k <= j; ++k) {
        const MackeyMorphism& s = x.degeneracy(j, k);
        for (std::size_t i = 0; i <= j + 1; ++i) {
          MackeyMorphism lhs = compose(x.face(j + 1, i), s);
          if (i == k || i == k + 1) {
            same(j, lhs, MackeyMorphism::identity(x.objects[j]), name("d s = id", i, k, j));
          } else if (i < k) {
            same(j, lhs, compose(x.degeneracy(j - 1, k - 1), x.face(j, i)), name("d_i s_j", i, k, j));
          } else {
            same(j, lhs, compose(x.degeneracy(j - 1, k), x.face(j, i - 1)), name("d_i s_j", i, k, j));
          }
        }
      }
      if (j + 2 <= top)
        for (std::size_t k = 0; k <= j; ++k)
          for (std::size_t i = 0; i <= k; ++i)
            same(j + 2, compose(x.degeneracy(j + 1, i), x.degeneracy(j, k)),
                 compose(x.degeneracy(j + 1, k + 1), x.degeneracy(j, i)), name("s_i s_j", i, k, j));
    }
    if (j >= 1)
      for (std::size_t i = 0; i <= j; ++i) rep.merge(check_morphism(x.objects[j], x.objects[j - 1], x.face(j, i)));
  }
  return rep;
}

/// i^*_{C_j} applied degreewise.
inline SimplicialMackey restrict_to(const SimplicialMackey& x, long j) {
  auto cut = [&](const MackeyMorphism& f) {
    MackeyMorphism g;
    for (long d : mackey::divisors(j)) g.maps[d] = f.at(d);
    return g;
  };
  SimplicialMackey out;
  for (const auto& o : x.objects) out.objects.push_back(restrict_to(o, j));
  for (const auto& fs : x.faces) {
    out.faces.emplace_back();
    for (const auto& f : fs) out.faces.back().push_back(cut(f));
  }
  for (const auto& ss : x.degeneracies) {
    out.degeneracies.emplace_back();
    for (const auto& s : ss) out.degeneracies.back().push_back(cut(s));
  }
  return out;
}

/// (sd_r X)_j = X_{r(j+1)-1}.
inline SimplicialMackey edgewise_subdivision(const SimplicialMackey& x, std::size_t r, std::size_t max_degree) {
  if (r < 1) throw InvalidArgument("edgewise subdivision needs r >= 1");
  if (r * (max_degree + 1) - 1 > x.max_degree())
    throw InvalidArgument("simplicial object is truncated too early for this subdivision");
  SimplicialMackey out;
  out.faces.resize(max_degree + 1);
  out.degeneracies.resize(max_degree + 1);
  for (std::size_t j = 0; j <= max_degree; ++j) out.objects.push_back(x.objects[r * (j + 1) - 1]);
  for (std::size_t j = 1; j <= max_degree; ++j) {
    const std::size_t src = r * (j + 1) - 1;
    for (std::size_t i = 0; i <= j; ++i) {
      // d_i d_{i+(j+1)} ... d_{i+(r-1)(j+1)}
      MackeyMorphism f = MackeyMorphism::identity(x.objects[src]);
      std::size_t deg = src;
      for (std::size_t t = r; t-- > 0;) f = compose(x.face(deg--, i + t * (j + 1)), f);
      out.faces[j].push_back(std::move(f));
    }
  }
  for (std::size_t j = 0; j < max_degree; ++j) {
    const std::size_t src = r * (j + 1) - 1;
    for (std::size_t i = 0; i <= j; ++i) {
      // s_{i+(r-1)(j+2)} ... s_{i+(j+2)} s_i
      MackeyMorphism s = MackeyMorphism::identity(x.objects[src]);
      std::size_t deg = src;
      for (std::size_t t = 0; t < r; ++t) s = compose(x.degeneracy(deg++, i + t * (j + 2)), s);
      out.degeneracies[j].push_back(std::move(s));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chain complexes

struct MackeyComplex {
  std::vector<MackeyFunctor> chains;
  std::vector<MackeyMorphism> boundary;  // boundary[j] : C_j -> C_{j-1}, j >= 1
};

/// The unnormalized complex with boundary sum (-1)^i d_i.
inline MackeyComplex moore_complex(const SimplicialMackey& x) {
  MackeyComplex c;
  c.chains = x.objects;
  c.boundary.resize(x.objects.size());
  for (std::size_t j = 1; j <= x.max_degree(); ++j) {
    MackeyMorphism b;
    for (long d : x.objects[j].divisors()) {
      Matrix m(x.objects[j - 1].gens(d), x.objects[j].gens(d));
      for (std::size_t i = 0; i <= j; ++i) {
        if (i % 2 == 0) m += x.face(j, i).at(d);
        else m -= x.face(j, i).at(d);
      }
      b.maps[d] = reduce_columns(x.objects[j - 1].level(d), m);
    }
    c.boundary[j] = std::move(b);
  }
  return c;
}

inline AxiomReport check_boundary_squared(const MackeyComplex& c) {
  AxiomReport rep;
  for (std::size_t j = 2; j < c.chains.size(); ++j)
    for (long d : c.chains[j].divisors()) {
      Matrix dd = c.boundary[j - 1].at(d) * c.boundary[j].at(d);
      rep.expect(equal_mod(c.chains[j - 2].level(d), dd, Matrix(dd.rows(), dd.cols())),
                 "boundary squared vanishes in degree " + std::to_string(j) + " at level " + std::to_string(d));
    }
  return rep;
}

struct MackeyHomology {
  std::size_t degree = 0;
  MackeyFunctor functor;
  std::map<long, Subquotient> levels;  // in the chain coordinates of the degree
};

/// Matrix of the map on homology induced by a chain-level map.
inline Matrix induced_on_homology(const Subquotient& src, const Subquotient& tgt, const Matrix& chain_map) {
  Matrix out(tgt.group.ngens(), src.group.ngens());
  for (std::size_t i = 0; i < src.group.ngens(); ++i) out.set_column(i, tgt.class_of(chain_map * src.reps.column(i)));
  return out;
}

inline MackeyHomology homology(const MackeyComplex& c, std::size_t k) {
  if (k + 1 >= c.chains.size()) throw InvalidArgument("complex is truncated too early for homology in degree " + std::to_string(k));
  const MackeyFunctor& ck = c.chains[k];
  MackeyHomology h;
  h.degree = k;
  h.functor = MackeyFunctor(ck.n());
  for (long d : ck.divisors()) {
    Matrix d_in = c.boundary[k + 1].at(d);
    Matrix d_out = k == 0 ? Matrix(0, ck.gens(d)) : c.boundary[k].at(d);
    FgAbGroup below = k == 0 ? FgAbGroup() : c.chains[k - 1].level(d);
    Subquotient s = homology(ck.level(d), d_in, d_out, below);
    h.functor.set_level(d, s.group);
    h.levels.emplace(d, std::move(s));
  }
  for (long d : ck.divisors()) h.functor.set_weyl(d, induced_on_homology(h.levels.at(d), h.levels.at(d), ck.weyl(d)));
  for (auto [d, e] : ck.edges()) {
    h.functor.set_res(e, d, induced_on_homology(h.levels.at(e), h.levels.at(d), ck.res_step(e, d)));
    h.functor.set_tr(d, e, induced_on_homology(h.levels.at(d), h.levels.at(e), ck.tr_step(d, e)));
  }
  return h;
}

/// Green structure on H_0 when C_0 is a Green functor.
inline GreenFunctor homology_ring(const MackeyHomology& h0, const GreenFunctor& c0) {
  if (h0.degree != 0) throw InvalidArgument("only degree-zero homology carries the ring structure");
  std::map<long, RingStructure> rings;
  for (long d : h0.functor.divisors()) {
    const Subquotient& s = h0.levels.at(d);
    const std::size_t k = s.group.ngens();
    RingStructure r;
    r.products.assign(k, std::vector<Vec>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        r.products[i][j] = s.class_of(c0.multiply(d, s.reps.column(i), s.reps.column(j)));
    r.unit = s.class_of(c0.unit(d));
    rings[d] = std::move(r);
  }
  return GreenFunctor(h0.functor, std::move(rings));
}

// ---------------------------------------------------------------------------
// The twisted cyclic nerve

struct CyclicNerve {
  GreenFunctor ring;                  // canonical presentation of the input
  std::vector<BoxPresentation> boxes;  // boxes[j] = ring^{[] j+1}
  SimplicialMackey simplicial;
};

/// Degree j is R^{[] j+1}; d_i multiplies factors i and i+1 for i < j, d_j
/// moves the last factor to the front, applies the generator and multiplies.
inline CyclicNerve twisted_cyclic_nerve(const GreenFunctor& input, std::size_t k_max) {
  CyclicNerve nv;
  nv.ring = input.canonicalized();
  const GreenFunctor& r = nv.ring;
  const MackeyFunctor& m = r.mackey();
  for (std::size_t j = 0; j <= k_max; ++j) nv.boxes.push_back(box_power(r, j + 1));
  auto gen = [&](long k, std::size_t i) { return unit_vec(m.gens(k), i); };
  SimplicialMackey& x = nv.simplicial;
  for (const auto& b : nv.boxes) x.objects.push_back(b.result());
  x.faces.resize(k_max + 1);
  x.degeneracies.resize(k_max + 1);
  for (std::size_t j = 1; j <= k_max; ++j)
    for (std::size_t i = 0; i <= j; ++i)
      x.faces[j].push_back(induced_on_tags(nv.boxes[j], nv.boxes[j - 1], [&, i, j](long k, const std::vector<std::size_t>& t) {
        std::vector<Vec> slots;
        if (i < j) {
          for (std::size_t s = 0; s < i; ++s) slots.push_back(gen(k, t[s]));
          slots.push_back(r.ring(k).multiply(gen(k, t[i]), gen(k, t[i + 1])));
          for (std::size_t s = i + 2; s <= j; ++s) slots.push_back(gen(k, t[s]));
        } else {
          slots.push_back(r.ring(k).multiply(m.weyl(k).column(t[j]), gen(k, t[0])));
          for (std::size_t s = 1; s < j; ++s) slots.push_back(gen(k, t[s]));
        }
        return detail::tensor_vectors(slots);
      }));
  for (std::size_t j = 0; j < k_max; ++j)
    for (std::size_t i = 0; i <= j; ++i)
      x.degeneracies[j].push_back(induced_on_tags(nv.boxes[j], nv.boxes[j + 1], [&, i, j](long k, const std::vector<std::size_t>& t) {
        std::vector<Vec> slots;
        for (std::size_t s = 0; s <= j; ++s) {
          slots.push_back(gen(k, t[s]));
          if (s == i) slots.push_back(r.unit(k));
        }
        return detail::tensor_vectors(slots);
      }));
  return nv;
}

/// HH_k of a commutative Green functor.
inline MackeyHomology hh(const CyclicNerve& nv, std::size_t k) {
  if (k + 1 > nv.simplicial.max_degree()) throw InvalidArgument("nerve is truncated too early for degree " + std::to_string(k));
  return homology(moore_complex(nv.simplicial), k);
}

inline MackeyHomology hh(const GreenFunctor& r, std::size_t k) { return hh(twisted_cyclic_nerve(r, k + 1), k); }

/// HH_0 with its Green structure (from R^{[]1}).
inline GreenFunctor hh0_green(const CyclicNerve& nv) { return homology_ring(hh(nv, 0), nv.boxes[0].green()); }

/// R modulo the Green ideal generated by g.x - x.
inline GreenQuotient hh0_oracle(const GreenFunctor& r) {
  const MackeyFunctor& m = r.mackey();
  std::vector<std::pair<long, Vec>> gens;
  for (long d : m.divisors())
    for (std::size_t i = 0; i < m.gens(d); ++i) {
      Vec x = unit_vec(m.gens(d), i);
      Vec gx = m.weyl(d).column(i);
      for (std::size_t j = 0; j < x.size(); ++j) gx[j] -= x[j];
      gens.emplace_back(d, std::move(gx));
    }
  return quotient_by_green_ideal(r, gens);
}

/// HH_0 computed from the nerve against the coinvariant quotient: the map
/// [x]_K -> tr^h_K(x) from R^{[]1} must induce a ring isomorphism.
inline AxiomReport compare_hh0_with_oracle(const GreenFunctor& input) {
  AxiomReport rep;
  CyclicNerve nv = twisted_cyclic_nerve(input, 1);
  MackeyHomology h0 = hh(nv, 0);
  GreenFunctor ring0 = homology_ring(h0, nv.boxes[0].green());
  GreenQuotient oracle = hh0_oracle(nv.ring);
  MackeyMorphism mu = multiplication(nv.boxes[0], nv.ring);
  MackeyMorphism f;
  for (long d : h0.functor.divisors()) {
    Matrix m = oracle.projection.at(d) * mu.at(d) * h0.levels.at(d).reps;
    f.maps[d] = reduce_columns(oracle.result.mackey().level(d), m);
  }
  const MackeyFunctor& om = oracle.result.mackey();
  rep.merge(check_isomorphism(h0.functor, om, f));
  for (long d : h0.functor.divisors()) {
    const std::size_t k = h0.functor.gens(d);
    rep.expect(om.level(d).equal(f.at(d) * ring0.unit(d), oracle.result.unit(d)), "unit preserved at " + std::to_string(d));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Vec x = unit_vec(k, i), y = unit_vec(k, j);
        rep.expect(om.level(d).equal(f.at(d) * ring0.multiply(d, x, y), oracle.result.multiply(d, f.at(d) * x, f.at(d) * y)),
                   "product preserved at " + std::to_string(d));
      }
  }
  return rep;
}

/// Degreewise maps a_j : X_j -> Z into one Mackey functor Z that are
/// isomorphisms and absorb every face and degeneracy; two simplicial objects
/// with such augmentations into the same Z are degreewise isomorphic
/// compatibly with the simplicial structure.
inline AxiomReport check_constant_augmentation(const SimplicialMackey& x, const MackeyFunctor& z,
                                               const std::vector<MackeyMorphism>& aug, std::size_t degrees) {
  AxiomReport rep;
  for (std::size_t j = 0; j <= degrees; ++j) {
    rep.merge(check_isomorphism(x.objects[j], z, aug[j]));
    if (j >= 1)
      for (std::size_t i = 0; i <= j; ++i)
        rep.expect(equal(z, compose(aug[j - 1], x.face(j, i)), aug[j]), "augmentation absorbs d_" + std::to_string(i));
    if (j + 1 <= degrees)
      for (std::size_t i = 0; i <= j; ++i)
        rep.expect(equal(z, compose(aug[j + 1], x.degeneracy(j, i)), aug[j]), "augmentation absorbs s_" + std::to_string(i));
  }
  return rep;
}

}  // namespace mackey
