#pragma once

// Box products of Mackey functors for C_n, presented by transfer tags.
//
// The value of M_1 [] ... [] M_k at level h is generated by tags [x]_K, one
// for every K | h and every tuple x of generators of M_1(K), ..., M_k(K); the
// tag stands for tr^h_K(x_1 (x) ... (x) x_k). Relations: multilinearity, the
// diagonal action of C_h/C_K on tags at K, and Frobenius reciprocity in each
// slot for prime-index steps.

#include "mackey/mackey.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace mackey {

namespace detail {

/// Kronecker product of vectors, first factor most significant.
inline Vec tensor_vectors(const std::vector<Vec>& vs) {
  std::size_t total = 1;
  for (const auto& v : vs) total *= v.size();
  Vec out(total, Int(0));
  if (total == 0) return out;
  std::vector<std::vector<std::pair<std::size_t, Int>>> nz(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs[i].size(); ++j)
      if (vs[i][j] != 0) nz[i].emplace_back(j, vs[i][j]);
  std::function<void(std::size_t, std::size_t, const Int&)> rec = [&](std::size_t slot, std::size_t idx, const Int& c) {
    if (slot == vs.size()) {
      out[idx] += c;
      return;
    }
    for (const auto& [j, a] : nz[slot]) rec(slot + 1, idx * vs[slot].size() + j, c * a);
  };
  rec(0, 0, Int(1));
  return out;
}

inline std::vector<std::size_t> decode(std::size_t idx, const std::vector<std::size_t>& radices) {
  std::vector<std::size_t> t(radices.size());
  for (std::size_t i = radices.size(); i-- > 0;) {
    t[i] = idx % radices[i];
    idx /= radices[i];
  }
  return t;
}

inline std::size_t encode(const std::vector<std::size_t>& t, const std::vector<std::size_t>& radices) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < t.size(); ++i) idx = idx * radices[i] + t[i];
  return idx;
}

inline std::size_t product_of(const std::vector<std::size_t>& r) {
  std::size_t p = 1;
  for (auto x : r) p *= x;
  return p;
}

}  // namespace detail

class BoxPresentation {
public:
  struct Tag {
    long level;
    std::vector<std::size_t> tuple;
  };

  BoxPresentation() = default;

  explicit BoxPresentation(std::vector<MackeyFunctor> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw InvalidArgument("box product needs at least one factor");
    n_ = factors_.front().n();
    for (const auto& f : factors_)
      if (f.n() != n_) throw InvalidArgument("box product factors live over different groups");
    build();
  }

  /// Box product of Green functors; the result carries the levelwise product.
  explicit BoxPresentation(const std::vector<GreenFunctor>& rings) : BoxPresentation(mackeys(rings)) {
    rings_ = rings;
  }

  long n() const { return n_; }
  std::size_t arity() const { return factors_.size(); }
  const std::vector<MackeyFunctor>& factors() const { return factors_; }
  const MackeyFunctor& result() const { return result_; }
  bool has_rings() const { return !rings_.empty(); }

  const std::vector<std::size_t>& radices(long k) const { return radices_.at(k); }
  std::size_t block_size(long k) const { return detail::product_of(radices(k)); }
  std::size_t raw_dim(long h) const { return levels_.at(h).raw.ngens(); }
  std::size_t offset(long h, long k) const { return levels_.at(h).offset.at(k); }
  const FgAbGroup& raw_group(long h) const { return levels_.at(h).raw; }
  const Matrix& to_canonical(long h) const { return levels_.at(h).raw.to_canonical(); }
  const Matrix& from_canonical(long h) const { return levels_.at(h).raw.from_canonical(); }

  Tag tag(long h, std::size_t raw_index) const {
    const auto& lv = levels_.at(h);
    for (auto it = lv.offset.rbegin(); it != lv.offset.rend(); ++it)
      if (raw_index >= it->second) return {it->first, detail::decode(raw_index - it->second, radices(it->first))};
    throw InvalidArgument("raw tag index out of range");
  }

  /// Canonical coordinates of a raw tag vector at level h.
  Vec canonical(long h, const Vec& raw) const { return result_.level(h).normal_form(to_canonical(h) * raw); }
  /// A raw representative of canonical coordinates.
  Vec raw(long h, const Vec& canon) const { return from_canonical(h) * canon; }

  /// Raw vector of the tag [v_1 (x) ... (x) v_k]_K at level h.
  Vec tag_vector(long h, long k, const std::vector<Vec>& slots) const {
    Vec out(raw_dim(h), Int(0));
    place(out, h, k, detail::tensor_vectors(slots));
    return out;
  }

  /// Adds a K-block vector into a raw level-h vector.
  void place(Vec& out, long h, long k, const Vec& block) const {
    std::size_t off = offset(h, k);
    for (std::size_t i = 0; i < block.size(); ++i)
      if (block[i] != 0) out[off + i] += block[i];
  }

  Vec raw_unit(long h) const {
    std::vector<Vec> slots;
    for (const auto& r : rings_) slots.push_back(r.unit(h));
    return tag_vector(h, h, slots);
  }

  /// [x]_K [y]_L = sum over C_h/C_lcm of [res x . gamma res y]_gcd, slotwise.
  Vec raw_multiply(long h, const Vec& a, const Vec& b) const {
    if (!has_rings()) throw InvalidArgument("box product has no ring structure");
    Vec out(raw_dim(h), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      Tag x = tag(h, i);
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j] == 0) continue;
        Tag y = tag(h, j);
        long g = igcd(x.level, y.level), l = ilcm(x.level, y.level);
        for (long s = 0; s < h / l; ++s) {
          std::vector<Vec> slots;
          for (std::size_t f = 0; f < arity(); ++f) {
            const MackeyFunctor& m = factors_[f];
            Vec xr = m.res(x.level, g).column(x.tuple[f]);
            Vec yr = m.weyl_power(g, (n_ / h) * s) * m.res(y.level, g).column(y.tuple[f]);
            slots.push_back(rings_[f].ring(g).multiply(xr, yr));
          }
          Vec block = detail::tensor_vectors(slots);
          Int c = a[i] * b[j];
          for (auto& v : block) v *= c;
          place(out, h, g, block);
        }
      }
    }
    return out;
  }

  Vec multiply(long h, const Vec& x, const Vec& y) const { return canonical(h, raw_multiply(h, raw(h, x), raw(h, y))); }

  /// The result as a Green functor (requires ring factors).
  GreenFunctor green() const {
    if (green_) return *green_;
    std::map<long, RingStructure> rings;
    for (long h : result_.divisors()) {
      const std::size_t k = result_.gens(h);
      RingStructure r;
      r.products.assign(k, std::vector<Vec>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
          Vec p = multiply(h, unit_vec(k, i), unit_vec(k, j));
          r.products[i][j] = p;
          r.products[j][i] = p;
        }
      r.unit = canonical(h, raw_unit(h));
      rings[h] = std::move(r);
    }
    green_ = std::make_shared<GreenFunctor>(result_, std::move(rings));
    return *green_;
  }

private:
  struct Level {
    std::map<long, std::size_t> offset;
    FgAbGroup raw;
  };

  static std::vector<MackeyFunctor> mackeys(const std::vector<GreenFunctor>& rings) {
    std::vector<MackeyFunctor> out;
    for (const auto& r : rings) out.push_back(r.mackey());
    return out;
  }

  std::vector<Vec> units(long k, const std::vector<std::size_t>& t) const {
    std::vector<Vec> slots;
    for (std::size_t f = 0; f < arity(); ++f) slots.push_back(unit_vec(factors_[f].gens(k), t[f]));
    return slots;
  }

  void build() {
    const auto divs = mackey::divisors(n_);
    for (long k : divs) {
      std::vector<std::size_t> r;
      for (const auto& f : factors_) r.push_back(f.gens(k));
      radices_[k] = r;
    }
    for (long h : divs) {
      Level lv;
      std::size_t dim = 0;
      for (long k : mackey::divisors(h)) {
        lv.offset[k] = dim;
        dim += block_size(k);
      }
      lv.raw = FgAbGroup(dim, Matrix(0, dim));
      levels_[h] = std::move(lv);
      levels_[h].raw = FgAbGroup(dim, Matrix::from_rows(relations(h), dim));
    }
    result_ = MackeyFunctor(n_);
    for (long h : divs) result_.set_level(h, raw_group(h).canonical_group());
    for (long h : divs) {
      Matrix w(raw_dim(h), raw_dim(h));
      for (long k : mackey::divisors(h))
        for (std::size_t t = 0; t < block_size(k); ++t) {
          auto tup = detail::decode(t, radices(k));
          std::vector<Vec> slots;
          for (std::size_t f = 0; f < arity(); ++f) slots.push_back(factors_[f].weyl(k).column(tup[f]));
          w.set_column(offset(h, k) + t, tag_vector(h, k, slots));
        }
      result_.set_weyl(h, conj(h, h, w));
    }
    for (auto [d, e] : result_.edges()) {
      // transfer re-tags; restriction by the double coset formula
      Matrix t(raw_dim(e), raw_dim(d));
      for (long k : mackey::divisors(d))
        for (std::size_t i = 0; i < block_size(k); ++i) t(offset(e, k) + i, offset(d, k) + i) = 1;
      result_.set_tr(d, e, conj(e, d, t));
      Matrix r(raw_dim(d), raw_dim(e));
      for (long k : mackey::divisors(e)) {
        long g = igcd(d, k), l = ilcm(d, k);
        for (std::size_t i = 0; i < block_size(k); ++i) {
          auto tup = detail::decode(i, radices(k));
          Vec col(raw_dim(d), Int(0));
          for (long s = 0; s < e / l; ++s) {
            std::vector<Vec> slots;
            for (std::size_t f = 0; f < arity(); ++f) {
              const MackeyFunctor& m = factors_[f];
              slots.push_back(m.weyl_power(g, (n_ / e) * s) * m.res(k, g).column(tup[f]));
            }
            place(col, d, g, detail::tensor_vectors(slots));
          }
          r.set_column(offset(e, k) + i, col);
        }
      }
      result_.set_res(e, d, conj(d, e, r));
    }
  }

  Matrix conj(long tgt, long src, const Matrix& raw_map) const {
    return reduce_columns(result_.level(tgt), to_canonical(tgt) * raw_map * from_canonical(src));
  }

  std::vector<Vec> relations(long h) const {
    std::vector<Vec> rows;
    const std::size_t dim = raw_dim(h);
    for (long k : mackey::divisors(h)) {
      const std::size_t bs = block_size(k);
      // multilinearity
      for (std::size_t f = 0; f < arity(); ++f) {
        const Matrix& rel = factors_[f].level(k).relations();
        if (rel.rows() == 0) continue;
        std::vector<std::size_t> others = radices(k);
        others[f] = 1;
        for (std::size_t o = 0; o < detail::product_of(others); ++o) {
          auto tup = detail::decode(o, others);
          for (std::size_t q = 0; q < rel.rows(); ++q) {
            auto slots = units(k, tup);
            slots[f] = rel.row(q);
            rows.push_back(tag_vector(h, k, slots));
          }
        }
      }
      // diagonal action of C_h / C_K
      if (k != h) {
        for (std::size_t t = 0; t < bs; ++t) {
          auto tup = detail::decode(t, radices(k));
          std::vector<Vec> slots;
          for (std::size_t f = 0; f < arity(); ++f)
            slots.push_back(factors_[f].weyl_power(k, n_ / h).column(tup[f]));
          Vec row = tag_vector(h, k, slots);
          row[offset(h, k) + t] -= 1;
          rows.push_back(std::move(row));
        }
      }
      // Frobenius reciprocity across prime steps L < K
      for (long p : prime_factors(k)) {
        long l = k / p;
        for (std::size_t f = 0; f < arity(); ++f) {
          std::vector<std::size_t> mixed = radices(k);
          mixed[f] = factors_[f].gens(l);
          for (std::size_t o = 0; o < detail::product_of(mixed); ++o) {
            auto tup = detail::decode(o, mixed);
            std::vector<Vec> upper, lower;
            for (std::size_t s = 0; s < arity(); ++s) {
              const MackeyFunctor& m = factors_[s];
              if (s == f) {
                upper.push_back(m.tr_step(l, k).column(tup[s]));
                lower.push_back(unit_vec(m.gens(l), tup[s]));
              } else {
                upper.push_back(unit_vec(m.gens(k), tup[s]));
                lower.push_back(m.res_step(k, l).column(tup[s]));
              }
            }
            Vec row = tag_vector(h, k, upper);
            Vec low = tag_vector(h, l, lower);
            for (std::size_t i = 0; i < dim; ++i) row[i] -= low[i];
            if (!mackey::is_zero(row)) rows.push_back(std::move(row));
          }
        }
      }
    }
    return rows;
  }

  long n_ = 1;
  std::vector<MackeyFunctor> factors_;
  std::vector<GreenFunctor> rings_;
  std::map<long, std::vector<std::size_t>> radices_;
  std::map<long, Level> levels_;
  MackeyFunctor result_;
  mutable std::shared_ptr<GreenFunctor> green_;
};

inline BoxPresentation box(const MackeyFunctor& m, const MackeyFunctor& nn) { return BoxPresentation({m, nn}); }
inline BoxPresentation box(const GreenFunctor& r, const GreenFunctor& s) {
  return BoxPresentation(std::vector<GreenFunctor>{r, s});
}

/// R^{[]k}; R is used as given (canonicalize it first for small tags).
inline BoxPresentation box_power(const GreenFunctor& r, std::size_t k) {
  if (k < 1) throw InvalidArgument("box power needs k >= 1");
  return BoxPresentation(std::vector<GreenFunctor>(k, r));
}

// ---------------------------------------------------------------------------
// Morphisms defined on tags

/// Per-level rule on tags at K: returns a vector in the target's K-block.
using TagRule = std::function<Vec(long k, const std::vector<std::size_t>& tuple)>;

/// The morphism [x]_K -> [rule(K, x)]_K between two box presentations.
inline MackeyMorphism induced_on_tags(const BoxPresentation& src, const BoxPresentation& tgt, const TagRule& rule) {
  if (src.n() != tgt.n()) throw InvalidArgument("tag morphism between different groups");
  std::map<long, std::vector<Vec>> cache;
  for (long k : mackey::divisors(src.n())) {
    auto& c = cache[k];
    for (std::size_t t = 0; t < src.block_size(k); ++t) {
      Vec v = rule(k, detail::decode(t, src.radices(k)));
      if (v.size() != tgt.block_size(k)) throw InvalidArgument("tag rule returned a vector of the wrong size");
      c.push_back(std::move(v));
    }
  }
  MackeyMorphism out;
  for (long h : mackey::divisors(src.n())) {
    Matrix raw(tgt.raw_dim(h), src.raw_dim(h));
    for (long k : mackey::divisors(h))
      for (std::size_t t = 0; t < src.block_size(k); ++t) {
        Vec col(tgt.raw_dim(h), Int(0));
        tgt.place(col, h, k, cache[k][t]);
        raw.set_column(src.offset(h, k) + t, col);
      }
    Matrix m = reduce_columns(tgt.result().level(h), tgt.to_canonical(h) * raw * src.from_canonical(h));
    if (!map_well_defined(src.result().level(h), tgt.result().level(h), m))
      throw InvariantViolation("map induced on tags is not well defined at level " + std::to_string(h));
    out.maps[h] = std::move(m);
  }
  return out;
}

/// The morphism [x]_K -> tr^h_K rule(K, x) from a box into a Mackey functor.
inline MackeyMorphism out_of_box(const BoxPresentation& src, const MackeyFunctor& tgt, const TagRule& rule) {
  MackeyMorphism out;
  std::map<long, std::vector<Vec>> cache;
  for (long k : mackey::divisors(src.n()))
    for (std::size_t t = 0; t < src.block_size(k); ++t) cache[k].push_back(rule(k, detail::decode(t, src.radices(k))));
  for (long h : mackey::divisors(src.n())) {
    Matrix raw(tgt.gens(h), src.raw_dim(h));
    for (long k : mackey::divisors(h)) {
      Matrix t = tgt.tr(k, h);
      for (std::size_t i = 0; i < src.block_size(k); ++i) raw.set_column(src.offset(h, k) + i, t * cache[k][i]);
    }
    Matrix m = reduce_columns(tgt.level(h), raw * src.from_canonical(h));
    if (!map_well_defined(src.result().level(h), tgt.level(h), m))
      throw InvariantViolation("map out of the box product is not well defined at level " + std::to_string(h));
    out.maps[h] = std::move(m);
  }
  return out;
}

/// Total multiplication R^{[]k} -> R, [x]_K -> tr^h_K(x_1 ... x_k).
inline MackeyMorphism multiplication(const BoxPresentation& b, const GreenFunctor& r) {
  return out_of_box(b, r.mackey(), [&](long k, const std::vector<std::size_t>& t) {
    Vec acc = r.unit(k);
    for (std::size_t i : t) acc = r.ring(k).multiply(acc, unit_vec(r.mackey().gens(k), i));
    return acc;
  });
}

/// The unit isomorphism A [] M -> M: [C_K/C_c] (x) m -> tr^K_c res^K_c m.
inline MackeyMorphism unit_action(const BoxPresentation& b, const MackeyFunctor& m) {
  return out_of_box(b, m, [&](long k, const std::vector<std::size_t>& t) {
    long c = mackey::divisors(k)[t[0]];
    return Vec(m.tr(c, k) * m.res(k, c).column(t[1]));
  });
}

/// The swap isomorphism M [] N -> N [] M.
inline MackeyMorphism swap_tags(const BoxPresentation& src, const BoxPresentation& tgt) {
  return induced_on_tags(src, tgt, [&](long k, const std::vector<std::size_t>& t) {
    std::vector<std::size_t> s{t[1], t[0]};
    return unit_vec(tgt.block_size(k), detail::encode(s, tgt.radices(k)));
  });
}

// ---------------------------------------------------------------------------
// Morphism checks

/// Naturality and well-definedness of f : src -> tgt.
inline AxiomReport check_morphism(const MackeyFunctor& src, const MackeyFunctor& tgt, const MackeyMorphism& f) {
  AxiomReport rep;
  for (long d : src.divisors()) {
    rep.expect(map_well_defined(src.level(d), tgt.level(d), f.at(d)), "well-defined at " + std::to_string(d));
    rep.expect(equal_mod(tgt.level(d), f.at(d) * src.weyl(d), tgt.weyl(d) * f.at(d)), "commutes with weyl at " + std::to_string(d));
  }
  for (auto [d, e] : src.edges()) {
    std::string at = " " + std::to_string(d) + "<" + std::to_string(e);
    rep.expect(equal_mod(tgt.level(d), f.at(d) * src.res_step(e, d), tgt.res_step(e, d) * f.at(e)), "commutes with res" + at);
    rep.expect(equal_mod(tgt.level(e), f.at(e) * src.tr_step(d, e), tgt.tr_step(d, e) * f.at(d)), "commutes with tr" + at);
  }
  return rep;
}

inline bool is_group_isomorphism(const FgAbGroup& src, const FgAbGroup& tgt, const Matrix& m) {
  AbHom f{src, tgt, m};
  if (!f.well_defined()) return false;
  if (!kernel(f).group.is_trivial()) return false;
  return cokernel(f).is_trivial();
}

inline AxiomReport check_isomorphism(const MackeyFunctor& src, const MackeyFunctor& tgt, const MackeyMorphism& f) {
  AxiomReport rep = check_morphism(src, tgt, f);
  for (long d : src.divisors())
    rep.expect(is_group_isomorphism(src.level(d), tgt.level(d), f.at(d)), "bijective at " + std::to_string(d));
  return rep;
}

/// Isomorphism invariants: levels, and kernels and cokernels of every stored
/// structure map and of weyl - 1.
inline bool same_invariants(const MackeyFunctor& a, const MackeyFunctor& b) {
  if (a.n() != b.n()) return false;
  auto both = [](const FgAbGroup& s, const FgAbGroup& t, const Matrix& m, const FgAbGroup& s2, const FgAbGroup& t2,
                 const Matrix& m2) {
    AbHom f{s, t, m}, g{s2, t2, m2};
    return isomorphic(kernel(f).group, kernel(g).group) && isomorphic(cokernel(f), cokernel(g));
  };
  for (long d : a.divisors()) {
    if (!isomorphic(a.level(d), b.level(d))) return false;
    Matrix wa = a.weyl(d) - Matrix::identity(a.gens(d)), wb = b.weyl(d) - Matrix::identity(b.gens(d));
    if (!both(a.level(d), a.level(d), wa, b.level(d), b.level(d), wb)) return false;
  }
  for (auto [d, e] : a.edges()) {
    if (!both(a.level(e), a.level(d), a.res_step(e, d), b.level(e), b.level(d), b.res_step(e, d))) return false;
    if (!both(a.level(d), a.level(e), a.tr_step(d, e), b.level(d), b.level(e), b.tr_step(d, e))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Green ideals

struct GreenQuotient {
  GreenFunctor result;                // canonical
  std::map<long, Lattice> ideal;      // in the coordinates of R, containing R's relations
  std::map<long, Matrix> projection;  // R(d) -> result(d)
};

/// The smallest levelwise subgroups containing `gens` that are closed under
/// multiplication, res, tr and weyl.
inline std::map<long, Lattice> green_ideal(const GreenFunctor& r, const std::vector<std::pair<long, Vec>>& gens) {
  const MackeyFunctor& m = r.mackey();
  std::map<long, Lattice> ideal;
  for (long d : m.divisors()) {
    ideal.emplace(d, Lattice(m.gens(d)));
    ideal.at(d).insert_rows(m.level(d).relations());
  }
  std::vector<std::pair<long, Vec>> work;
  auto push = [&](long d, const Vec& v) {
    if (ideal.at(d).insert(v)) work.emplace_back(d, v);
  };
  for (const auto& [d, v] : gens) push(d, v);
  while (!work.empty()) {
    auto [d, v] = work.back();
    work.pop_back();
    for (std::size_t i = 0; i < m.gens(d); ++i) push(d, r.ring(d).multiply(unit_vec(m.gens(d), i), v));
    push(d, m.weyl(d) * v);
    for (long p : prime_factors(d)) push(d / p, m.res_step(d, d / p) * v);
    for (long e : m.divisors())
      if (e % d == 0 && is_prime(e / d)) push(e, m.tr_step(d, e) * v);
  }
  return ideal;
}

inline GreenQuotient quotient_by_lattices(const GreenFunctor& r, const std::map<long, Lattice>& ideal) {
  const MackeyFunctor& m = r.mackey();
  MackeyFunctor q(m.n());
  for (long d : m.divisors()) q.set_level(d, FgAbGroup(m.gens(d), ideal.at(d).basis_matrix()));
  for (long d : m.divisors()) q.set_weyl(d, m.weyl(d));
  for (auto [d, e] : m.edges()) {
    q.set_res(e, d, m.res_step(e, d));
    q.set_tr(d, e, m.tr_step(d, e));
  }
  std::map<long, RingStructure> rings;
  for (long d : m.divisors()) rings[d] = r.ring(d);
  GreenFunctor raw(q, std::move(rings));
  GreenQuotient out{raw.canonicalized(), ideal, {}};
  for (long d : m.divisors()) out.projection[d] = q.level(d).to_canonical();
  return out;
}

inline GreenQuotient quotient_by_green_ideal(const GreenFunctor& r, const std::vector<std::pair<long, Vec>>& gens) {
  return quotient_by_lattices(r, green_ideal(r, gens));
}

}  // namespace mackey
