#pragma once

// Finitely generated abelian groups and their homomorphisms.
//
// A group is presented as Z^g modulo the row span of an integer relation
// matrix (one relation per row). Elements are column vectors in generator
// coordinates, and a homomorphism A -> B is a (gens B) x (gens A) matrix whose
// j-th column is the image of the j-th generator of A.
//
// Everything reduces to the Smith normal form: canonical forms, membership in
// subgroups, kernels, and homology.

#include "mackey/integer.hpp"
#include "mackey/matrix.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace mackey {

// ---------------------------------------------------------------------------
// Smith normal form

struct SmithForm {
  Matrix U;  // unimodular, rows x rows
  Matrix D;  // diagonal, d_i | d_{i+1}, non-negative
  Matrix V;  // unimodular, cols x cols
};

namespace detail {

inline int cmpabs(const Int& x, const Int& y) { return mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t()); }

struct SnfTrack {
  Matrix* U = nullptr;     // accumulates row operations
  Matrix* Uinv = nullptr;  // inverse of U
  Matrix* V = nullptr;     // accumulates column operations
  Matrix* Vinv = nullptr;  // inverse of V
};

// new_x = s x + t y, new_y = -b x + a y  (s a + t b = 1)
inline void combine_rows(Matrix& m, std::size_t x, std::size_t y, const Int& s, const Int& t,
                         const Int& a, const Int& b) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Int vx = m(x, j), vy = m(y, j);
    if (vx == 0 && vy == 0) continue;
    m(x, j) = s * vx + t * vy;
    m(y, j) = a * vy - b * vx;
  }
}
inline void combine_cols(Matrix& m, std::size_t x, std::size_t y, const Int& s, const Int& t,
                         const Int& a, const Int& b) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int vx = m(i, x), vy = m(i, y);
    if (vx == 0 && vy == 0) continue;
    m(i, x) = s * vx + t * vy;
    m(i, y) = a * vy - b * vx;
  }
}

// Row transform on rows (x, y) with block [[s, t], [-b, a]].
inline void row_op(Matrix& m, SnfTrack& tr, std::size_t x, std::size_t y, const Int& s,
                   const Int& t, const Int& a, const Int& b) {
  combine_rows(m, x, y, s, t, a, b);
  if (tr.U) combine_rows(*tr.U, x, y, s, t, a, b);
  // U^{-1} picks up the inverse block [[a, -t], [b, s]] on the right
  if (tr.Uinv) combine_cols(*tr.Uinv, x, y, a, b, s, t);
}
// Column transform on columns (x, y): new_x = s x + t y, new_y = -b x + a y.
inline void col_op(Matrix& m, SnfTrack& tr, std::size_t x, std::size_t y, const Int& s,
                   const Int& t, const Int& a, const Int& b) {
  combine_cols(m, x, y, s, t, a, b);
  if (tr.V) combine_cols(*tr.V, x, y, s, t, a, b);
  if (tr.Vinv) combine_rows(*tr.Vinv, x, y, a, b, s, t);
}
inline void row_swap(Matrix& m, SnfTrack& tr, std::size_t i, std::size_t j) {
  m.swap_rows(i, j);
  if (tr.U) tr.U->swap_rows(i, j);
  if (tr.Uinv) tr.Uinv->swap_cols(i, j);
}
inline void col_swap(Matrix& m, SnfTrack& tr, std::size_t i, std::size_t j) {
  m.swap_cols(i, j);
  if (tr.V) tr.V->swap_cols(i, j);
  if (tr.Vinv) tr.Vinv->swap_rows(i, j);
}
inline void row_neg(Matrix& m, SnfTrack& tr, std::size_t i) {
  m.negate_row(i);
  if (tr.U) tr.U->negate_row(i);
  if (tr.Uinv) tr.Uinv->negate_col(i);
}

// Coefficients clearing y against pivot x: s x + t y = g, and a = x/g, b = y/g.
inline void gcd_coeffs(const Int& x, const Int& y, Int& s, Int& t, Int& a, Int& b) {
  if (divides(x, y)) {
    s = 1;
    t = 0;
    a = 1;
    b = y / x;
    return;
  }
  Int g = gcdext(x, y, s, t);
  a = x / g;
  b = y / g;
}

/// In-place Smith reduction. Pivots are the smallest entries of the trailing
/// block (ties broken by sparsity); rows and columns are cleared with 2x2
/// unimodular gcd steps.
inline void smith_reduce(Matrix& a, SnfTrack tr) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t lim = std::min(m, n);
  std::vector<std::size_t> rcount(m), ccount(n);
  for (std::size_t p = 0; p < lim; ++p) {
    std::fill(rcount.begin(), rcount.end(), 0);
    std::fill(ccount.begin(), ccount.end(), 0);
    bool any = false;
    for (std::size_t i = p; i < m; ++i)
      for (std::size_t j = p; j < n; ++j)
        if (a(i, j) != 0) ++rcount[i], ++ccount[j], any = true;
    if (!any) break;
    std::size_t pi = m, pj = n, cost = 0;
    Int best;
    for (std::size_t i = p; i < m; ++i)
      for (std::size_t j = p; j < n; ++j) {
        const Int& x = a(i, j);
        if (x == 0) continue;
        std::size_t c = (rcount[i] - 1) * (ccount[j] - 1);
        int cmp = pi == m ? -1 : cmpabs(x, best);
        if (cmp < 0 || (cmp == 0 && c < cost)) {
          best = abs(x);
          pi = i;
          pj = j;
          cost = c;
        }
      }
    row_swap(a, tr, p, pi);
    col_swap(a, tr, p, pj);
    Int s, t, ca, cb;
    for (;;) {
      for (std::size_t i = p + 1; i < m; ++i) {
        if (a(i, p) == 0) continue;
        gcd_coeffs(a(p, p), a(i, p), s, t, ca, cb);
        row_op(a, tr, p, i, s, t, ca, cb);
      }
      bool row_dirty = false;
      for (std::size_t j = p + 1; j < n; ++j) {
        if (a(p, j) == 0) continue;
        gcd_coeffs(a(p, p), a(p, j), s, t, ca, cb);
        if (t != 0) row_dirty = true;
        col_op(a, tr, p, j, s, t, ca, cb);
      }
      if (row_dirty) {
        bool col_dirty = false;
        for (std::size_t i = p + 1; i < m && !col_dirty; ++i) col_dirty = a(i, p) != 0;
        if (col_dirty) continue;
      }
      // enforce d_p | every remaining entry
      bool fixed = false;
      if (cmpabs(a(p, p), 1) != 0) {
        for (std::size_t i = p + 1; i < m && !fixed; ++i)
          for (std::size_t j = p + 1; j < n; ++j)
            if (!divides(a(p, p), a(i, j))) {
              row_op(a, tr, p, i, Int(1), Int(1), Int(1), Int(0));
              fixed = true;
              break;
            }
      }
      if (!fixed) break;
    }
    if (a(p, p) < 0) row_neg(a, tr, p);
  }
}


}  // namespace detail

/// U * m * V = D with U, V unimodular and D in Smith normal form.
inline SmithForm snf(const Matrix& m) {
  SmithForm f{Matrix::identity(m.rows()), m, Matrix::identity(m.cols())};
  detail::smith_reduce(f.D, {&f.U, nullptr, &f.V, nullptr});
  return f;
}

/// Columns form a basis of the integer kernel {x : a x = 0}.
inline Matrix kernel_basis(const Matrix& a) {
  Matrix d = a;
  Matrix v = Matrix::identity(a.cols());
  detail::smith_reduce(d, {nullptr, nullptr, &v, nullptr});
  std::size_t rank = 0;
  while (rank < std::min(d.rows(), d.cols()) && d(rank, rank) != 0) ++rank;
  std::vector<std::size_t> idx;
  for (std::size_t j = rank; j < a.cols(); ++j) idx.push_back(j);
  return v.select_cols(idx);
}

/// An integer solution x of a x = b, if one exists.
inline std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  Matrix d = a;
  Matrix u = Matrix::identity(a.rows());
  Matrix v = Matrix::identity(a.cols());
  detail::smith_reduce(d, {&u, nullptr, &v, nullptr});
  Vec c = u * b;  // d y = c with x = v y
  Vec y(a.cols(), Int(0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    Int di = (i < d.cols() && i < d.rows()) ? d(i, i) : Int(0);
    if (di == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (!divides(di, c[i])) return std::nullopt;
      y[i] = divexact(c[i], di);
    }
  }
  return v * y;
}

// ---------------------------------------------------------------------------
// Lattices in Z^n held in row Hermite form, grown one vector at a time.

class Lattice {
public:
  explicit Lattice(std::size_t dim = 0) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vec>& basis() const { return rows_; }

  Matrix basis_matrix() const { return Matrix::from_rows(rows_, dim_); }

  /// Adds v to the lattice; returns false when v was already a member.
  bool insert(Vec v) {
    bool grew = false;
    std::size_t k = 0;
    while (k <= rows_.size()) {
      std::size_t c = leading(v);
      if (c == dim_) return grew;
      while (k < rows_.size() && pivots_[k] < c) ++k;
      if (k == rows_.size() || pivots_[k] > c) {
        if (v[c] < 0)
          for (auto& x : v) x = -x;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(k), std::move(v));
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(k), c);
        normalize_above(k);
        return true;
      }
      Vec& b = rows_[k];
      if (divides(b[c], v[c])) {
        axpy(v, -(v[c] / b[c]), b);
        continue;
      }
      // gcd step: replace b by the combination with pivot gcd, keep reducing v
      Int s, t;
      Int g = gcdext(b[c], v[c], s, t);
      Vec nb(dim_), nv(dim_);
      Int bc = b[c] / g, vc = v[c] / g;
      for (std::size_t j = 0; j < dim_; ++j) {
        nb[j] = s * b[j] + t * v[j];
        nv[j] = vc * b[j] - bc * v[j];
      }
      b = std::move(nb);
      v = std::move(nv);
      normalize_above(k);
      grew = true;
    }
    return grew;
  }

  void insert_rows(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) insert(m.row(i));
  }

  /// Coefficients of v in the basis rows, or nullopt when v is not a member.
  std::optional<Vec> coordinates(Vec v) const {
    Vec coef(rows_.size(), Int(0));
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      std::size_t c = pivots_[k];
      if (v[c] == 0) continue;
      if (!divides(rows_[k][c], v[c])) return std::nullopt;
      coef[k] = v[c] / rows_[k][c];
      axpy(v, -coef[k], rows_[k]);
    }
    if (!is_zero(v)) return std::nullopt;
    return coef;
  }

  bool contains(const Vec& v) const { return coordinates(v).has_value(); }

  bool contains(const Lattice& other) const {
    for (const auto& r : other.rows_)
      if (!contains(r)) return false;
    return true;
  }

private:
  std::size_t leading(const Vec& v) const {
    for (std::size_t j = 0; j < dim_; ++j)
      if (v[j] != 0) return j;
    return dim_;
  }

  // keep entries above a pivot reduced to [0, pivot)
  void normalize_above(std::size_t k) {
    std::size_t c = pivots_[k];
    if (rows_[k][c] < 0)
      for (auto& x : rows_[k]) x = -x;
    for (std::size_t i = 0; i < k; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), rows_[i][c].get_mpz_t(), rows_[k][c].get_mpz_t());
      if (q != 0) axpy(rows_[i], -q, rows_[k]);
    }
  }

  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

// ---------------------------------------------------------------------------
// Finitely generated abelian groups

class FgAbGroup {
public:
  /// The zero group on no generators.
  FgAbGroup() : FgAbGroup(0, Matrix(0, 0)) {}

  FgAbGroup(std::size_t ngens, Matrix relations)
      : ngens_(ngens), relations_(std::move(relations)) {
    if (relations_.rows() == 0) relations_ = Matrix(0, ngens_);
    if (relations_.cols() != ngens_)
      throw InvalidArgument("relation matrix width does not match generator count");
    canonicalize();
  }

  static FgAbGroup free(std::size_t rank) { return FgAbGroup(rank, Matrix(0, rank)); }

  static FgAbGroup cyclic(const Int& order) {
    if (order == 0) return free(1);
    Matrix r(1, 1);
    r(0, 0) = order;
    return FgAbGroup(1, r);
  }

  /// Canonical presentation: generators of orders d_1 | ... | d_k, then rank
  /// free generators.
  static FgAbGroup diagonal(const std::vector<Int>& torsion, std::size_t rank) {
    std::size_t g = torsion.size() + rank;
    Matrix r(torsion.size(), g);
    for (std::size_t i = 0; i < torsion.size(); ++i) r(i, i) = torsion[i];
    return FgAbGroup(g, r);
  }

  std::size_t ngens() const { return ngens_; }
  const Matrix& relations() const { return relations_; }

  /// Invariant factors d_i >= 2 with d_i | d_{i+1}.
  const std::vector<Int>& invariant_factors() const { return torsion_; }
  std::size_t free_rank() const { return rank_; }
  std::size_t canonical_ngens() const { return torsion_.size() + rank_; }
  bool is_trivial() const { return torsion_.empty() && rank_ == 0; }

  /// True when this presentation is already the canonical one.
  bool is_canonical() const { return canonical_; }

  /// Order of the group, or 0 when infinite.
  Int order() const {
    if (rank_ > 0) return 0;
    Int o = 1;
    for (const auto& d : torsion_) o *= d;
    return o;
  }

  /// Generator coordinates -> canonical coordinates (unreduced).
  const Matrix& to_canonical() const { return to_; }
  /// Canonical generators expressed in generator coordinates.
  const Matrix& from_canonical() const { return from_; }

  FgAbGroup canonical_group() const { return diagonal(torsion_, rank_); }

  /// Canonical coordinates of x, each torsion coordinate reduced into [0, d_i).
  Vec canonical_coords(const Vec& x) const {
    Vec y = to_ * x;
    reduce_canonical(y);
    return y;
  }

  void reduce_canonical(Vec& y) const {
    for (std::size_t i = 0; i < torsion_.size(); ++i) y[i] = mod(y[i], torsion_[i]);
  }

  /// Normal form for elements of a canonical presentation; for others a
  /// representative is returned (equal elements map to equal vectors).
  Vec normal_form(const Vec& x) const {
    if (canonical_) {
      Vec y = x;
      reduce_canonical(y);
      return y;
    }
    return from_ * canonical_coords(x);
  }

  bool is_zero(const Vec& x) const { return is_zero_vec(canonical_coords(x)); }
  bool equal(const Vec& x, const Vec& y) const {
    Vec d = x;
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= y[i];
    return is_zero(d);
  }

  /// Additive order of x (0 when of infinite order).
  Int element_order(const Vec& x) const {
    Vec y = canonical_coords(x);
    Int o = 1;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i] == 0) continue;
      if (i >= torsion_.size()) return 0;
      Int oi = torsion_[i] / gcd(y[i], torsion_[i]);
      o = o / gcd(o, oi) * oi;
    }
    return o;
  }

  bool same_canonical_form(const FgAbGroup& other) const {
    return torsion_ == other.torsion_ && rank_ == other.rank_;
  }

  std::string str() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& d : torsion_) {
      os << (first ? "" : " + ") << "Z/" << d;
      first = false;
    }
    if (rank_ > 0) {
      os << (first ? "" : " + ") << "Z";
      if (rank_ > 1) os << "^" << rank_;
    }
    return os.str();
  }

private:
  static bool is_zero_vec(const Vec& v) { return mackey::is_zero(v); }

  void canonicalize() {
    const std::size_t g = ngens_;
    Matrix s = relations_.transpose();  // g x r, columns are relations
    Matrix u = Matrix::identity(g);
    Matrix uinv = Matrix::identity(g);
    detail::smith_reduce(s, {&u, &uinv, nullptr, nullptr});
    std::vector<std::size_t> keep_t, keep_f;
    torsion_.clear();
    for (std::size_t i = 0; i < g; ++i) {
      Int d = (i < s.cols()) ? s(i, i) : Int(0);
      if (d == 1) continue;
      if (d == 0) {
        keep_f.push_back(i);
      } else {
        keep_t.push_back(i);
        torsion_.push_back(d);
      }
    }
    rank_ = keep_f.size();
    std::vector<std::size_t> keep = keep_t;
    keep.insert(keep.end(), keep_f.begin(), keep_f.end());
    to_ = u.select_rows(keep);
    from_ = uinv.select_cols(keep);
    canonical_ = is_diagonal_canonical();
    if (canonical_) {
      to_ = Matrix::identity(g);
      from_ = Matrix::identity(g);
    }
  }

  bool is_diagonal_canonical() const {
    if (ngens_ != torsion_.size() + rank_) return false;
    // every relation must be a multiple of a unit vector e_i by d_i (i < k)
    Lattice mine(ngens_), canon(ngens_);
    for (std::size_t i = 0; i < relations_.rows(); ++i) {
      Vec r = relations_.row(i);
      std::size_t nz = 0, at = 0;
      for (std::size_t j = 0; j < ngens_; ++j)
        if (r[j] != 0) ++nz, at = j;
      if (nz > 1) return false;
      if (nz == 1 && at >= torsion_.size()) return false;
      mine.insert(r);
    }
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
      Vec e = unit_vec(ngens_, i);
      e[i] = torsion_[i];
      canon.insert(e);
    }
    return mine.contains(canon) && canon.contains(mine);
  }

  std::size_t ngens_;
  Matrix relations_;
  std::vector<Int> torsion_;
  std::size_t rank_ = 0;
  Matrix to_, from_;
  bool canonical_ = false;
};

inline bool isomorphic(const FgAbGroup& a, const FgAbGroup& b) { return a.same_canonical_form(b); }

inline std::ostream& operator<<(std::ostream& os, const FgAbGroup& g) { return os << g.str(); }

// ---------------------------------------------------------------------------
// Homomorphisms

struct AbHom {
  FgAbGroup source;
  FgAbGroup target;
  Matrix matrix;  // target.ngens() x source.ngens()

  AbHom(FgAbGroup s, FgAbGroup t, Matrix m)
      : source(std::move(s)), target(std::move(t)), matrix(std::move(m)) {
    if (matrix.rows() != target.ngens() || matrix.cols() != source.ngens())
      throw InvalidArgument("homomorphism matrix has the wrong shape");
  }

  static AbHom zero(const FgAbGroup& s, const FgAbGroup& t) {
    return AbHom(s, t, Matrix(t.ngens(), s.ngens()));
  }

  Vec apply(const Vec& x) const { return matrix * x; }

  /// Every source relation lands in the target relation lattice.
  bool well_defined() const {
    for (std::size_t i = 0; i < source.relations().rows(); ++i)
      if (!target.is_zero(matrix * source.relations().row(i))) return false;
    return true;
  }

  bool is_zero() const {
    for (std::size_t j = 0; j < matrix.cols(); ++j)
      if (!target.is_zero(matrix.column(j))) return false;
    return true;
  }
};

/// Equality of homomorphisms modulo the target relations.
inline bool equal(const AbHom& f, const AbHom& g) {
  if (f.matrix.rows() != g.matrix.rows() || f.matrix.cols() != g.matrix.cols()) return false;
  for (std::size_t j = 0; j < f.matrix.cols(); ++j)
    if (!f.target.equal(f.matrix.column(j), g.matrix.column(j))) return false;
  return true;
}

/// g o f
inline AbHom compose(const AbHom& g, const AbHom& f) {
  return AbHom(f.source, g.target, g.matrix * f.matrix);
}

/// Matrix equality modulo the relations of a target group.
inline bool equal_mod(const FgAbGroup& target, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!target.equal(a.column(j), b.column(j))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Subquotients: (a lattice N of cycles) / (relations + boundaries)

struct Subquotient {
  FgAbGroup group;  // canonical presentation
  Matrix reps;      // ambient coordinates of each generator of `group`
  Lattice cycles;   // N in ambient coordinates
  Matrix to;        // cycle-basis coordinates -> canonical coordinates

  /// Class of an element of N; throws if z is not in N.
  Vec class_of(const Vec& z) const {
    auto c = cycles.coordinates(z);
    if (!c) throw InvariantViolation("element is not a cycle of the subquotient");
    Vec y = to * *c;
    group.reduce_canonical(y);
    return y;
  }

  bool contains(const Vec& z) const { return cycles.contains(z); }
};

/// N / D where N is the lattice spanned by `numerator` (rows, must contain
/// the relation lattice of `ambient`) and D is spanned by the relations of
/// `ambient` together with `denominator` (rows, elements of N).
inline Subquotient subquotient(const FgAbGroup& ambient, const Lattice& numerator,
                               const std::vector<Vec>& denominator) {
  const std::size_t k = numerator.rank();
  std::vector<Vec> rel;
  auto add = [&](const Vec& v) {
    auto c = numerator.coordinates(v);
    if (!c) throw InvariantViolation("subquotient denominator is not inside the numerator");
    if (!is_zero(*c)) rel.push_back(std::move(*c));
  };
  for (std::size_t i = 0; i < ambient.relations().rows(); ++i) add(ambient.relations().row(i));
  for (const auto& v : denominator) add(v);
  FgAbGroup raw(k, Matrix::from_rows(rel, k));
  Matrix basis = numerator.basis_matrix().transpose();  // ambient x k
  Subquotient sq{raw.canonical_group(), basis * raw.from_canonical(), numerator,
                 raw.to_canonical()};
  return sq;
}

/// {x in Z^a : f x lies in the relation lattice of the target}.
inline Lattice preimage_of_zero(const Matrix& f, const FgAbGroup& target) {
  const std::size_t a = f.cols();
  Matrix block = hstack(f, target.relations().transpose());
  Matrix ker = kernel_basis(block);
  Lattice lat(a);
  for (std::size_t j = 0; j < ker.cols(); ++j) {
    Vec v(a);
    for (std::size_t i = 0; i < a; ++i) v[i] = ker(i, j);
    lat.insert(std::move(v));
  }
  return lat;
}

/// ker(d_out) / im(d_in) at the middle group B of A -> B -> C.
inline Subquotient homology(const FgAbGroup& b, const Matrix& d_in, const Matrix& d_out,
                            const FgAbGroup& c) {
  Lattice cycles = preimage_of_zero(d_out, c);
  std::vector<Vec> bounds;
  for (std::size_t j = 0; j < d_in.cols(); ++j) bounds.push_back(d_in.column(j));
  return subquotient(b, cycles, bounds);
}

/// Homology of d_in: A -> B, d_out: B -> C; fails unless d_out o d_in = 0.
inline FgAbGroup homology(const AbHom& d_in, const AbHom& d_out) {
  if (!compose(d_out, d_in).is_zero())
    throw InvalidArgument("homology: composite of the two maps is nonzero");
  return homology(d_in.target, d_in.matrix, d_out.matrix, d_out.target).group;
}

inline Subquotient kernel(const AbHom& f) {
  return subquotient(f.source, preimage_of_zero(f.matrix, f.target), {});
}

/// The cokernel on the target's generators (canonicalize via canonical_group()).
inline FgAbGroup cokernel(const AbHom& f) {
  Matrix rel = vstack(f.target.relations(), f.matrix.transpose());
  return FgAbGroup(f.target.ngens(), rel);
}

inline FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
  return FgAbGroup(a.ngens() + b.ngens(), block_diag(a.relations(), b.relations()));
}

/// A ⊗ B on generators a_i ⊗ b_j (index i * gens(B) + j).
inline FgAbGroup tensor(const FgAbGroup& a, const FgAbGroup& b) {
  const std::size_t na = a.ngens(), nb = b.ngens();
  std::vector<Vec> rel;
  for (std::size_t r = 0; r < a.relations().rows(); ++r)
    for (std::size_t j = 0; j < nb; ++j) {
      Vec v(na * nb, Int(0));
      for (std::size_t i = 0; i < na; ++i) v[i * nb + j] = a.relations()(r, i);
      rel.push_back(std::move(v));
    }
  for (std::size_t r = 0; r < b.relations().rows(); ++r)
    for (std::size_t i = 0; i < na; ++i) {
      Vec v(na * nb, Int(0));
      for (std::size_t j = 0; j < nb; ++j) v[i * nb + j] = b.relations()(r, j);
      rel.push_back(std::move(v));
    }
  return FgAbGroup(na * nb, Matrix::from_rows(rel, na * nb));
}

inline Matrix kronecker(const Matrix& f, const Matrix& g) {
  Matrix k(f.rows() * g.rows(), f.cols() * g.cols());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) {
      if (f(i, j) == 0) continue;
      for (std::size_t p = 0; p < g.rows(); ++p)
        for (std::size_t q = 0; q < g.cols(); ++q)
          k(i * g.rows() + p, j * g.cols() + q) = f(i, j) * g(p, q);
    }
  return k;
}

/// f ⊗ g between tensor products built by tensor().
inline AbHom tensor(const AbHom& f, const AbHom& g) {
  return AbHom(tensor(f.source, g.source), tensor(f.target, g.target),
               kronecker(f.matrix, g.matrix));
}

/// Canonical simplification of a presentation together with the coordinate
/// change; `to` maps generator coordinates into canonical ones.
struct Canonicalized {
  FgAbGroup group;
  Matrix to;
  Matrix from;
};

inline Canonicalized canonicalize(const FgAbGroup& g) {
  return {g.canonical_group(), g.to_canonical(), g.from_canonical()};
}

/// Lattice spanned by the relations of `g` together with the given vectors.
inline Lattice subgroup_lattice(const FgAbGroup& g, const std::vector<Vec>& gens) {
  Lattice lat(g.ngens());
  lat.insert_rows(g.relations());
  for (const auto& v : gens) lat.insert(v);
  return lat;
}

}  // namespace mackey
