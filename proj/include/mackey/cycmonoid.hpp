#pragma once

// Pointed monoids in C_n-sets, monoid algebras R[M], the cyclic nerve of a
// pointed monoid, Bredon-style cellular chains and the splitting comparison
// HC(R[M]) against HC(R) [] C(N^cyc M).

#include "mackey/hochschild.hpp"

#include <string>
#include <vector>

namespace mackey {

// ---------------------------------------------------------------------------
// Finite C_n-sets with a basepoint outside the listed points

/// A G-map between pointed finite C_n-sets given on non-basepoints; -1 is
/// the basepoint.
using PointedMap = std::vector<long>;

/// Orbit data of a finite C_n-set: every point is g^shift applied to the
/// base point of its orbit.
struct OrbitData {
  GSet set;
  std::vector<long> orbit_of, shift;
  std::vector<long> base, stab;  // per orbit

  explicit OrbitData(GSet s) : set(std::move(s)) {
    orbit_of.assign(set.size(), -1);
    shift.assign(set.size(), 0);
    for (const auto& orb : set.orbits()) {
      long o = static_cast<long>(base.size());
      base.push_back(orb[0]);
      stab.push_back(set.stabilizer(orb[0]));
      for (std::size_t i = 0; i < orb.size(); ++i) {
        orbit_of[static_cast<std::size_t>(orb[i])] = o;
        shift[static_cast<std::size_t>(orb[i])] = static_cast<long>(i);
      }
    }
  }
  std::size_t orbits() const { return base.size(); }
};

/// M_T = M(- x T): level d is the sum of M(C_n/C_c) over the orbits of
/// T x C_n/C_d (points numbered t |X| + x), c the stabilizer.
class MackeyExtension {
public:
  MackeyExtension(MackeyFunctor m, GSet t) : m_(std::move(m)), t_(std::move(t)) {
    if (m_.n() != t_.n()) throw InvalidArgument("extension by a set for a different group");
    const long n = m_.n();
    result_ = MackeyFunctor(n);
    for (long d : mackey::divisors(n)) {
      OrbitData od(GSet::product(t_, GSet::orbit(n, d)));
      std::vector<std::size_t> offs;
      std::size_t total = 0;
      for (std::size_t o = 0; o < od.orbits(); ++o) {
        offs.push_back(total);
        total += m_.gens(od.stab[o]);
      }
      offs.push_back(total);
      Matrix r(0, total);
      for (std::size_t o = 0; o < od.orbits(); ++o) {
        const Matrix& lr = m_.level(od.stab[o]).relations();
        Matrix pad(lr.rows(), total);
        for (std::size_t i = 0; i < lr.rows(); ++i)
          for (std::size_t j = 0; j < lr.cols(); ++j) pad(i, offs[o] + j) = lr(i, j);
        r = vstack(r, pad);
      }
      result_.set_level(d, FgAbGroup(total, r));
      data_.emplace(d, std::move(od));
      offsets_.emplace(d, std::move(offs));
    }
    for (long d : mackey::divisors(n)) {
      std::vector<long> f;
      const long xs = n / d;
      for (long t = 0; t < static_cast<long>(t_.size()); ++t)
        for (long x = 0; x < xs; ++x) f.push_back(t * xs + (x + 1) % xs);
      result_.set_weyl(d, pullback(d, d, f));
    }
    for (auto [d, e] : result_.edges()) {
      std::vector<long> f;
      const long xd = n / d, xe = n / e;
      for (long t = 0; t < static_cast<long>(t_.size()); ++t)
        for (long x = 0; x < xd; ++x) f.push_back(t * xe + x % xe);
      result_.set_res(e, d, pullback(d, e, f));
      result_.set_tr(d, e, pushforward(d, e, f, *this));
    }
  }

  const MackeyFunctor& base() const { return m_; }
  const GSet& set() const { return t_; }
  const MackeyFunctor& result() const { return result_; }
  const OrbitData& orbits(long d) const { return data_.at(d); }
  std::size_t offset(long d, std::size_t orbit) const { return offsets_.at(d)[orbit]; }

  /// Pullback along a pointed G-map of products T x X_d -> T' x X_e; here
  /// both sides are this extension.
  Matrix pullback(long d, long e, const PointedMap& f) const { return pullback(d, e, f, *this); }

  /// Pullback from `tgt` at level e to this extension at level d.
  Matrix pullback(long d, long e, const PointedMap& f, const MackeyExtension& tgt) const {
    const OrbitData& src = data_.at(d);
    const OrbitData& dst = tgt.data_.at(e);
    Matrix out(result_.gens(d), tgt.result_.gens(e));
    for (std::size_t o = 0; o < src.orbits(); ++o) {
      long img = f[static_cast<std::size_t>(src.base[o])];
      if (img < 0) continue;
      std::size_t p = static_cast<std::size_t>(dst.orbit_of[static_cast<std::size_t>(img)]);
      Matrix blk = m_.pullback_along(src.stab[o], dst.stab[p], dst.shift[static_cast<std::size_t>(img)]);
      paste(out, offset(d, o), tgt.offset(e, p), blk);
    }
    return out;
  }

  /// Pushforward along the same kind of map, into `tgt` at level e.
  Matrix pushforward(long d, long e, const PointedMap& f, const MackeyExtension& tgt) const {
    const OrbitData& src = data_.at(d);
    const OrbitData& dst = tgt.data_.at(e);
    Matrix out(tgt.result_.gens(e), result_.gens(d));
    for (std::size_t o = 0; o < src.orbits(); ++o) {
      long img = f[static_cast<std::size_t>(src.base[o])];
      if (img < 0) continue;
      std::size_t p = static_cast<std::size_t>(dst.orbit_of[static_cast<std::size_t>(img)]);
      Matrix blk = m_.pushforward_along(src.stab[o], dst.stab[p], dst.shift[static_cast<std::size_t>(img)]);
      paste(out, tgt.offset(e, p), offset(d, o), blk);
    }
    return out;
  }

  /// Element x of M(c) pushed along C_n/C_c -> T x X_d, base -> point.
  Vec push_point(long d, long c, long point, const Vec& x) const {
    const OrbitData& od = data_.at(d);
    std::size_t o = static_cast<std::size_t>(od.orbit_of[static_cast<std::size_t>(point)]);
    Vec out(result_.gens(d), Int(0));
    Vec y = m_.pushforward_along(c, od.stab[o], od.shift[static_cast<std::size_t>(point)]) * x;
    for (std::size_t i = 0; i < y.size(); ++i) out[offset(d, o) + i] = y[i];
    return out;
  }

  /// Component of a level-d vector on the orbit through `point`, pulled
  /// back to M(c) along C_n/C_c -> T x X_d, base -> point.
  Vec pull_point(long d, long c, long point, const Vec& v) const {
    const OrbitData& od = data_.at(d);
    std::size_t o = static_cast<std::size_t>(od.orbit_of[static_cast<std::size_t>(point)]);
    Vec blk(m_.gens(od.stab[o]));
    for (std::size_t i = 0; i < blk.size(); ++i) blk[i] = v[offset(d, o) + i];
    return m_.pullback_along(c, od.stab[o], od.shift[static_cast<std::size_t>(point)]) * blk;
  }

private:
  static void paste(Matrix& out, std::size_t r0, std::size_t c0, const Matrix& blk) {
    for (std::size_t i = 0; i < blk.rows(); ++i)
      for (std::size_t j = 0; j < blk.cols(); ++j) out(r0 + i, c0 + j) = blk(i, j);
  }

  MackeyFunctor m_;
  GSet t_;
  MackeyFunctor result_;
  std::map<long, OrbitData> data_;
  std::map<long, std::vector<std::size_t>> offsets_;
};

/// f_* : M_T -> M_{T'} for a pointed G-map f : T -> T'.
inline MackeyMorphism extension_map(const MackeyExtension& src, const MackeyExtension& tgt, const PointedMap& f) {
  MackeyMorphism out;
  const long n = src.base().n();
  for (long d : mackey::divisors(n)) {
    const long xs = n / d;
    PointedMap g;
    for (std::size_t t = 0; t < src.set().size(); ++t)
      for (long x = 0; x < xs; ++x) g.push_back(f[t] < 0 ? -1 : f[t] * xs + x);
    out.maps[d] = reduce_columns(tgt.result().level(d), src.pushforward(d, d, g, tgt));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pointed monoids

struct PointedGMonoid {
  long n = 1;
  std::vector<std::string> names;
  std::size_t zero = 0, one = 1;
  std::vector<std::vector<std::size_t>> table;
  std::vector<std::size_t> action;  // the generator

  std::size_t size() const { return names.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table[a][b]; }
  std::size_t act(std::size_t a, long k = 1) const {
    k = imod(k, n);
    while (k-- > 0) a = action[a];
    return a;
  }

  /// Non-zero elements in order; index_of gives the position there (-1 for zero).
  std::vector<std::size_t> nonzero() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (i != zero) out.push_back(i);
    return out;
  }
  long index_of(std::size_t a) const {
    if (a == zero) return -1;
    return static_cast<long>(a < zero ? a : a - 1);
  }

  GSet nonzero_set() const {
    std::vector<long> act;
    for (std::size_t a : nonzero()) act.push_back(index_of(action[a]));
    return GSet(n, act);
  }

  MonoidSpans spans() const {
    MonoidSpans s;
    s.elements = nonzero_set();
    for (std::size_t a : nonzero()) {
      s.mult.emplace_back();
      for (std::size_t b : nonzero()) s.mult.back().push_back(index_of(mul(a, b)));
    }
    s.one = index_of(one);
    return s;
  }
};

inline AxiomReport check_monoid(const PointedGMonoid& m) {
  AxiomReport rep;
  const std::size_t s = m.size();
  rep.expect(m.table.size() == s && m.action.size() == s && m.zero < s && m.one < s && m.zero != m.one, "shape");
  if (!rep.ok()) return rep;
  for (const auto& row : m.table) {
    rep.expect(row.size() == s, "table rows have one entry per element");
    for (std::size_t v : row) rep.expect(v < s, "table entries are elements");
  }
  for (std::size_t v : m.action) rep.expect(v < s, "action entries are elements");
  if (!rep.ok()) return rep;
  std::vector<bool> hit(s, false);
  for (std::size_t v : m.action) hit[v] = true;
  rep.expect(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }), "action is a permutation");
  for (std::size_t a = 0; a < s; ++a) {
    rep.expect(m.act(a, m.n) == a, "generator has order dividing n");
    rep.expect(m.mul(m.one, a) == a && m.mul(a, m.one) == a, "unit");
    rep.expect(m.mul(m.zero, a) == m.zero && m.mul(a, m.zero) == m.zero, "zero absorbs");
    for (std::size_t b = 0; b < s; ++b) {
      rep.expect(m.action[m.mul(a, b)] == m.mul(m.action[a], m.action[b]), "action respects products");
      for (std::size_t c = 0; c < s; ++c) rep.expect(m.mul(m.mul(a, b), c) == m.mul(a, m.mul(b, c)), "associativity");
    }
  }
  rep.expect(m.action[m.zero] == m.zero && m.action[m.one] == m.one, "action fixes 0 and 1");
  return rep;
}

/// {0, 1}.
inline PointedGMonoid unit_monoid(long n) { return PointedGMonoid{n, {"0", "1"}, 0, 1, {{0, 0}, {0, 1}}, {0, 1}}; }

/// {0, 1, x} with x^2 = 0 and trivial action.
inline PointedGMonoid dual_number_monoid(long n) {
  return PointedGMonoid{n, {"0", "1", "x"}, 0, 1, {{0, 0, 0}, {0, 1, 2}, {0, 2, 0}}, {0, 1, 2}};
}

/// {0, 1, a, b} with ab = ba = 0, a^2 = a, b^2 = b swapped by the generator.
inline PointedGMonoid swapped_idempotents(long n) {
  if (n % 2 != 0) throw InvalidArgument("the swap needs an even group order");
  return PointedGMonoid{n, {"0", "1", "a", "b"}, 0, 1, {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 2, 0}, {0, 3, 0, 3}}, {0, 1, 3, 2}};
}

// ---------------------------------------------------------------------------
// Monoid algebras

/// R[M] = R_{M - 0} with the product pushed along the multiplication.
inline GreenFunctor monoid_algebra_direct(const GreenFunctor& r, const PointedGMonoid& m) {
  const long n = r.n();
  if (m.n != n) throw InvalidArgument("monoid and Green functor over different groups");
  const GSet t = m.nonzero_set();
  const MonoidSpans sp = m.spans();
  MackeyExtension ext(r.mackey(), t);
  const MackeyFunctor& out = ext.result();
  std::map<long, RingStructure> rings;
  const long ts = static_cast<long>(t.size());
  for (long d : mackey::divisors(n)) {
    const long xs = n / d;
    const std::size_t k = out.gens(d);
    RingStructure rs;
    rs.products.assign(k, std::vector<Vec>(k, Vec(k, Int(0))));
    OrbitData q(GSet::product(GSet::product(t, t), GSet::orbit(n, d)));
    for (std::size_t o = 0; o < q.orbits(); ++o) {
      long pt = q.base[o];
      long x = pt % xs, t1 = pt / xs / ts, t2 = pt / xs % ts;
      long prod = sp.mult[static_cast<std::size_t>(t1)][static_cast<std::size_t>(t2)];
      if (prod < 0) continue;
      long c = q.stab[o];
      long p1 = t1 * xs + x, p2 = t2 * xs + x, pm = prod * xs + x;
      const auto& od = ext.orbits(d);
      std::size_t o1 = static_cast<std::size_t>(od.orbit_of[static_cast<std::size_t>(p1)]);
      std::size_t o2 = static_cast<std::size_t>(od.orbit_of[static_cast<std::size_t>(p2)]);
      const std::size_t g1 = r.mackey().gens(od.stab[o1]), g2 = r.mackey().gens(od.stab[o2]);
      for (std::size_t i = 0; i < g1; ++i)
        for (std::size_t j = 0; j < g2; ++j) {
          Vec a(k, Int(0)), b(k, Int(0));
          a[ext.offset(d, o1) + i] = 1;
          b[ext.offset(d, o2) + j] = 1;
          Vec prodc = r.multiply(c, ext.pull_point(d, c, p1, a), ext.pull_point(d, c, p2, b));
          Vec img = ext.push_point(d, c, pm, prodc);
          for (std::size_t s = 0; s < k; ++s) {
            rs.products[ext.offset(d, o1) + i][ext.offset(d, o2) + j][s] += img[s];
          }
        }
    }
    for (auto& row : rs.products)
      for (auto& v : row) v = out.level(d).normal_form(v);
    rs.unit = out.level(d).normal_form(ext.push_point(d, d, sp.one * xs, r.unit(d)));
    rings[d] = std::move(rs);
  }
  return GreenFunctor(out, std::move(rings));
}

/// A[M] for the pointed monoid.
inline GreenFunctor monoid_burnside(const PointedGMonoid& m) { return monoid_representable(m.spans()); }

/// R [] A[M] as a Green functor.
inline BoxPresentation monoid_algebra_box(const GreenFunctor& r, const PointedGMonoid& m) { return box(r, monoid_burnside(m)); }

inline GreenFunctor monoid_algebra(const GreenFunctor& r, const PointedGMonoid& m) { return monoid_algebra_box(r, m).green(); }

/// R [] A_T -> R_T, [x (X <- U -> T)]_K -> push along U -> T x X of x pulled to U.
inline MackeyMorphism box_to_extension(const BoxPresentation& b, const MackeyExtension& ext) {
  const long n = b.n();
  std::map<long, SpanBasis> bases;
  representable(ext.set(), &bases);
  return out_of_box(b, ext.result(), [&](long k, const std::vector<std::size_t>& t) {
    const SpanBasis& sb = bases.at(k);
    const auto& el = sb[t[1]];
    Vec x = unit_vec(ext.base().gens(k), t[0]);
    long xs = n / k;
    long j = sb.x_of(el.point);
    Vec pulled = ext.base().pullback_along(el.c, k, j) * x;
    return ext.push_point(k, el.c, sb.t_of(el.point) * xs + j, pulled);
  });
}

/// The direct and box constructions of R[M] agree: the tag map is an
/// isomorphism of Green functors.
inline AxiomReport compare_monoid_algebras(const GreenFunctor& r, const PointedGMonoid& m) {
  AxiomReport rep = check_monoid(m);
  if (!rep.ok()) return rep;
  BoxPresentation b = monoid_algebra_box(r, m);
  MackeyExtension ext(r.mackey(), m.nonzero_set());
  GreenFunctor direct = monoid_algebra_direct(r, m);
  GreenFunctor boxed = b.green();
  MackeyMorphism f = box_to_extension(b, ext);
  rep.merge(check_isomorphism(b.result(), direct.mackey(), f));
  for (long d : mackey::divisors(r.n())) {
    const FgAbGroup& lv = direct.mackey().level(d);
    const std::size_t k = b.result().gens(d);
    rep.expect(lv.equal(f.at(d) * boxed.unit(d), direct.unit(d)), "unit preserved at " + std::to_string(d));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Vec x = unit_vec(k, i), y = unit_vec(k, j);
        rep.expect(lv.equal(f.at(d) * boxed.multiply(d, x, y), direct.multiply(d, f.at(d) * x, f.at(d) * y)),
                   "product preserved at " + std::to_string(d));
      }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Simplicial C_n-sets and the cyclic nerve of a pointed monoid

/// Levels are pointed C_n-sets given on their non-basepoints.
struct SimplicialGSet {
  std::vector<GSet> sets;
  std::vector<std::vector<PointedMap>> faces;         // faces[j][i] : X_j -> X_{j-1}
  std::vector<std::vector<PointedMap>> degeneracies;  // degeneracies[j][i] : X_j -> X_{j+1}
  std::vector<PointedMap> cyclic;                     // tau_j : X_j -> X_j
  std::size_t max_degree() const { return sets.size() - 1; }
};

struct MonoidNerve {
  SimplicialGSet simplicial;
  std::vector<std::vector<std::vector<std::size_t>>> simplices;  // tuples of nonzero elements
};

inline MonoidNerve cyclic_nerve_monoid(const PointedGMonoid& m, std::size_t k_max) {
  AxiomReport ok = check_monoid(m);
  if (!ok.ok()) throw InvalidArgument("not a pointed C_n-monoid: " + ok.str());
  MonoidNerve nv;
  const auto nz = m.nonzero();
  const std::size_t q = nz.size();
  auto encode = [&](const std::vector<std::size_t>& tup) -> long {
    long idx = 0;
    for (std::size_t a : tup) {
      if (a == m.zero) return -1;
      idx = idx * static_cast<long>(q) + m.index_of(a);
    }
    return idx;
  };
  for (std::size_t j = 0; j <= k_max; ++j) {
    std::vector<std::vector<std::size_t>> tuples{{}};
    for (std::size_t s = 0; s <= j; ++s) {
      std::vector<std::vector<std::size_t>> next;
      for (const auto& t : tuples)
        for (std::size_t a : nz) {
          auto u = t;
          u.push_back(a);
          next.push_back(std::move(u));
        }
      tuples = std::move(next);
    }
    std::vector<long> act;
    PointedMap tau;
    for (const auto& t : tuples) {
      std::vector<std::size_t> g;
      for (std::size_t a : t) g.push_back(m.action[a]);
      act.push_back(encode(g));
      std::vector<std::size_t> rot{m.action[t.back()]};
      rot.insert(rot.end(), t.begin(), t.end() - 1);
      tau.push_back(encode(rot));
    }
    nv.simplicial.sets.emplace_back(m.n, act);
    nv.simplicial.cyclic.push_back(std::move(tau));
    nv.simplices.push_back(std::move(tuples));
  }
  auto& x = nv.simplicial;
  x.faces.resize(k_max + 1);
  x.degeneracies.resize(k_max + 1);
  for (std::size_t j = 1; j <= k_max; ++j)
    for (std::size_t i = 0; i <= j; ++i) {
      PointedMap f;
      for (const auto& t : nv.simplices[j]) {
        std::vector<std::size_t> u;
        if (i < j) {
          u.assign(t.begin(), t.begin() + static_cast<long>(i));
          u.push_back(m.mul(t[i], t[i + 1]));
          u.insert(u.end(), t.begin() + static_cast<long>(i) + 2, t.end());
        } else {
          u.push_back(m.mul(m.action[t[j]], t[0]));
          u.insert(u.end(), t.begin() + 1, t.end() - 1);
        }
        f.push_back(encode(u));
      }
      x.faces[j].push_back(std::move(f));
    }
  for (std::size_t j = 0; j < k_max; ++j)
    for (std::size_t i = 0; i <= j; ++i) {
      PointedMap s;
      for (const auto& t : nv.simplices[j]) {
        std::vector<std::size_t> u(t.begin(), t.begin() + static_cast<long>(i) + 1);
        u.push_back(m.one);
        u.insert(u.end(), t.begin() + static_cast<long>(i) + 1, t.end());
        s.push_back(encode(u));
      }
      x.degeneracies[j].push_back(std::move(s));
    }
  return nv;
}

/// Simplicial identities and equivariance of the structure maps.
inline AxiomReport check_simplicial_identities(const SimplicialGSet& x) {
  AxiomReport rep;
  auto comp = [](const PointedMap& g, const PointedMap& f) {
    PointedMap h;
    for (long v : f) h.push_back(v < 0 ? -1 : g[static_cast<std::size_t>(v)]);
    return h;
  };
  const std::size_t top = x.max_degree();
  for (std::size_t j = 1; j <= top; ++j)
    for (std::size_t i = 0; i <= j; ++i) rep.expect(is_equivariant(x.sets[j], x.sets[j - 1], x.faces[j][i]), "faces are equivariant");
  for (std::size_t j = 0; j < top; ++j)
    for (std::size_t i = 0; i <= j; ++i)
      rep.expect(is_equivariant(x.sets[j], x.sets[j + 1], x.degeneracies[j][i]), "degeneracies are equivariant");
  for (std::size_t j = 2; j <= top; ++j)
    for (std::size_t k = 1; k <= j; ++k)
      for (std::size_t i = 0; i < k; ++i)
        rep.expect(comp(x.faces[j - 1][i], x.faces[j][k]) == comp(x.faces[j - 1][k - 1], x.faces[j][i]), "d_i d_j = d_{j-1} d_i");
  for (std::size_t j = 0; j < top; ++j)
    for (std::size_t k = 0; k <= j; ++k)
      for (std::size_t i = 0; i <= j + 1; ++i) {
        PointedMap lhs = comp(x.faces[j + 1][i], x.degeneracies[j][k]);
        if (i == k || i == k + 1) {
          PointedMap id;
          for (long p = 0; p < static_cast<long>(x.sets[j].size()); ++p) id.push_back(p);
          rep.expect(lhs == id, "d s = id");
        } else if (i < k) {
          rep.expect(lhs == comp(x.degeneracies[j - 1][k - 1], x.faces[j][i]), "d_i s_j = s_{j-1} d_i");
        } else {
          rep.expect(lhs == comp(x.degeneracies[j - 1][k], x.faces[j][i - 1]), "d_i s_j = s_j d_{i-1}");
        }
      }
  return rep;
}

/// M_{X_.} for a simplicial pointed C_n-set; with M = A this is the Mackey
/// extension of the Bredon cellular chains.
inline SimplicialMackey extend_simplicial(const MackeyFunctor& mf, const SimplicialGSet& x, std::vector<MackeyExtension>* exts = nullptr) {
  std::vector<MackeyExtension> e;
  SimplicialMackey out;
  for (const auto& s : x.sets) {
    e.emplace_back(mf, s);
    out.objects.push_back(e.back().result());
  }
  out.faces.resize(x.faces.size());
  out.degeneracies.resize(x.degeneracies.size());
  for (std::size_t j = 1; j < x.faces.size(); ++j)
    for (const auto& f : x.faces[j]) out.faces[j].push_back(extension_map(e[j], e[j - 1], f));
  for (std::size_t j = 0; j < x.degeneracies.size(); ++j)
    for (const auto& s : x.degeneracies[j]) out.degeneracies[j].push_back(extension_map(e[j], e[j + 1], s));
  if (exts) *exts = std::move(e);
  return out;
}

inline MackeyComplex cellular_chains(const SimplicialGSet& x) { return moore_complex(extend_simplicial(burnside(x.sets.front().n()).mackey(), x)); }

// ---------------------------------------------------------------------------
// Splitting

/// Levelwise box of two simplicial Mackey functors.
inline SimplicialMackey box_simplicial(const SimplicialMackey& a, const SimplicialMackey& b) {
  const std::size_t top = std::min(a.max_degree(), b.max_degree());
  std::vector<BoxPresentation> boxes;
  SimplicialMackey out;
  for (std::size_t j = 0; j <= top; ++j) {
    boxes.push_back(box(a.objects[j], b.objects[j]));
    out.objects.push_back(boxes.back().result());
  }
  auto tensor_map = [&](const BoxPresentation& src, const BoxPresentation& tgt, const MackeyMorphism& f, const MackeyMorphism& g) {
    return induced_on_tags(src, tgt, [&](long k, const std::vector<std::size_t>& t) {
      return detail::tensor_vectors({f.at(k).column(t[0]), g.at(k).column(t[1])});
    });
  };
  out.faces.resize(top + 1);
  out.degeneracies.resize(top + 1);
  for (std::size_t j = 1; j <= top; ++j)
    for (std::size_t i = 0; i <= j; ++i) out.faces[j].push_back(tensor_map(boxes[j], boxes[j - 1], a.face(j, i), b.face(j, i)));
  for (std::size_t j = 0; j < top; ++j)
    for (std::size_t i = 0; i <= j; ++i)
      out.degeneracies[j].push_back(tensor_map(boxes[j], boxes[j + 1], a.degeneracy(j, i), b.degeneracy(j, i)));
  return out;
}

struct SplittingReport {
  AxiomReport report;
  std::vector<MackeyFunctor> left, right;  // homology in each degree
};

/// HH(R[M]) against H(HC(R) [] A_{N^cyc M}) in degrees <= k.
inline SplittingReport splitting_check(const GreenFunctor& r, const PointedGMonoid& m, std::size_t degrees) {
  SplittingReport out;
  CyclicNerve lhs = twisted_cyclic_nerve(monoid_algebra(r, m), degrees + 1);
  CyclicNerve hc = twisted_cyclic_nerve(r, degrees + 1);
  MonoidNerve nm = cyclic_nerve_monoid(m, degrees + 1);
  SimplicialMackey cells = extend_simplicial(burnside(r.n()).mackey(), nm.simplicial);
  SimplicialMackey rhs = box_simplicial(hc.simplicial, cells);
  out.report.merge(check_simplicial_identities(rhs));
  MackeyComplex cl = moore_complex(lhs.simplicial), cr = moore_complex(rhs);
  for (std::size_t k = 0; k <= degrees; ++k) {
    out.left.push_back(homology(cl, k).functor);
    out.right.push_back(homology(cr, k).functor);
    for (long d : mackey::divisors(r.n()))
      out.report.expect(out.left.back().level(d).same_canonical_form(out.right.back().level(d)),
                        "H_" + std::to_string(k) + " agrees at level " + std::to_string(d));
    out.report.expect(same_invariants(out.left.back(), out.right.back()), "H_" + std::to_string(k) + " structure maps agree");
  }
  return out;
}

}  // namespace mackey
