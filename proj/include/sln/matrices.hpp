#ifndef SLN_MATRICES_HPP
#define SLN_MATRICES_HPP

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "sln/errors.hpp"
#include "sln/fields.hpp"

namespace sln {

template <class S>
using MatrixOf = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <class S>
using VectorOf = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
using RowVectorOf = Eigen::Matrix<S, 1, Eigen::Dynamic>;

using Index = Eigen::Index;

// --- constructors -------------------------------------------------------

template <class S>
MatrixOf<S> zero_matrix(Index n) {
  return MatrixOf<S>::Constant(n, n, S(0));
}

template <class S>
MatrixOf<S> identity_matrix(Index n) {
  MatrixOf<S> m = zero_matrix<S>(n);
  for (Index i = 0; i < n; ++i) m(i, i) = S(1);
  return m;
}

/// Matrix unit E_ij (0-based indices).
template <class S>
MatrixOf<S> unit_matrix(Index n, Index i, Index j) {
  MatrixOf<S> m = zero_matrix<S>(n);
  m(i, j) = S(1);
  return m;
}

template <class S>
MatrixOf<S> diagonal_matrix(const std::vector<S>& d) {
  const Index n = static_cast<Index>(d.size());
  MatrixOf<S> m = zero_matrix<S>(n);
  for (Index i = 0; i < n; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

// --- elementwise predicates ----------------------------------------------

template <class S>
bool is_zero_matrix(const MatrixOf<S>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!is_zero(S(m(i, j)))) return false;
  return true;
}

template <class S>
bool matrices_equal(const MatrixOf<S>& a, const MatrixOf<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <class S>
S trace(const MatrixOf<S>& m) {
  S t(0);
  for (Index i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

/// Field tag of a matrix. Over F_p the tag lives in the entries; a matrix
/// whose entries are all unbound literals has no recoverable modulus.
inline FieldSpec field_of(const MatrixOf<Rational>&) { return FieldSpec::rationals(); }

inline FieldSpec field_of(const MatrixOf<Fp>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j).bound()) return FieldSpec::prime_field(m(i, j).modulus());
  throw Error("cannot infer the modulus of an unbound prime-field matrix");
}

/// Rebind every entry of an F_p matrix to the given modulus.
inline MatrixOf<Fp> bind_matrix(const MatrixOf<Fp>& m, std::int64_t p) {
  MatrixOf<Fp> out = m;
  for (Index i = 0; i < out.rows(); ++i)
    for (Index j = 0; j < out.cols(); ++j) out(i, j) = out(i, j).bound_to(p);
  return out;
}

namespace detail {

template <class S>
void require_square(const MatrixOf<S>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("matrix is not square");
}

template <class S>
void require_same_shape(const MatrixOf<S>& a, const MatrixOf<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch();
}

}  // namespace detail

// --- Lie bracket ----------------------------------------------------------

/// [a, b] = ab - ba. Traceless by construction.
template <class S>
MatrixOf<S> bracket(const MatrixOf<S>& a, const MatrixOf<S>& b) {
  detail::require_square(a);
  detail::require_same_shape(a, b);
  return a * b - b * a;
}

/// True iff m^n = 0, by repeated exact multiplication.
template <class S>
bool is_nilpotent(const MatrixOf<S>& m) {
  detail::require_square(m);
  const Index n = m.rows();
  MatrixOf<S> power = m;
  for (Index k = 1; k < n; ++k) {
    if (is_zero_matrix(power)) return true;
    power = MatrixOf<S>(power * m);
  }
  return is_zero_matrix(power);
}

// --- row reduction ----------------------------------------------------------
//
// Exact Gaussian elimination. Pivoting takes the first nonzero entry in
// column order; over an exact field pivot magnitude is irrelevant and this
// keeps every reduction deterministic.

template <class S>
struct RowEchelon {
  MatrixOf<S> mat;            // reduced row-echelon form
  std::vector<Index> pivots;  // pivot column of each nonzero row
};

template <class S>
RowEchelon<S> row_echelon(MatrixOf<S> m) {
  const Index rows = m.rows(), cols = m.cols();
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = -1;
    for (Index i = r; i < rows; ++i) {
      if (!is_zero(S(m(i, c)))) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) m.row(r).swap(m.row(pivot));
    const S inv = inverse_of(S(m(r, c)));
    for (Index j = c; j < cols; ++j) m(r, j) = S(m(r, j) * inv);
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(S(m(i, c)))) continue;
      const S factor = m(i, c);
      for (Index j = c; j < cols; ++j) m(i, j) = S(m(i, j) - factor * m(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class S>
Index rank(const MatrixOf<S>& m) {
  return static_cast<Index>(row_echelon(m).pivots.size());
}

/// Basis of the right kernel: one vector per free column of the echelon form.
template <class S>
std::vector<VectorOf<S>> kernel_basis(const MatrixOf<S>& m) {
  const RowEchelon<S> re = row_echelon(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : re.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<VectorOf<S>> basis;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    VectorOf<S> v = VectorOf<S>::Constant(cols, S(0));
    v(f) = S(1);
    for (std::size_t i = 0; i < re.pivots.size(); ++i)
      v(re.pivots[i]) = S(-re.mat(static_cast<Index>(i), f));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class S>
MatrixOf<S> invert(const MatrixOf<S>& a) {
  detail::require_square(a);
  const Index n = a.rows();
  MatrixOf<S> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = identity_matrix<S>(n);
  RowEchelon<S> re = row_echelon(std::move(aug));
  if (static_cast<Index>(re.pivots.size()) != n || re.pivots.back() >= n)
    throw SingularMatrix();
  return re.mat.rightCols(n);
}

// --- similarity -------------------------------------------------------------

/// Invertible c together with its exact inverse, realizing a ~ c a c^{-1}.
template <class S>
struct SimilarityWitness {
  MatrixOf<S> c;
  MatrixOf<S> c_inv;

  static SimilarityWitness identity(Index n) {
    return {identity_matrix<S>(n), identity_matrix<S>(n)};
  }

  static SimilarityWitness from_matrix(const MatrixOf<S>& c) { return {c, invert(c)}; }
};

template <class S>
MatrixOf<S> conjugate(const SimilarityWitness<S>& w, const MatrixOf<S>& a) {
  if (w.c.rows() != a.rows()) throw DimensionMismatch("witness dimension does not match");
  detail::require_square(a);
  return w.c * a * w.c_inv;
}

// --- coordinates -------------------------------------------------------------
//
// Matrices are identified with row vectors of length n^2 in the row-major
// matrix-unit basis E_11, E_12, ..., E_nn.

template <class S>
RowVectorOf<S> flatten(const MatrixOf<S>& m) {
  const Index n = m.rows();
  RowVectorOf<S> v(n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) v(i * n + j) = m(i, j);
  return v;
}

template <class S>
MatrixOf<S> unflatten(const RowVectorOf<S>& v, Index n) {
  MatrixOf<S> m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = v(i * n + j);
  return m;
}

namespace detail {

using Integer = boost::multiprecision::mpz_int;

/// Scale a rational row to a primitive integer vector (coprime entries).
/// Unit-pivot elimination compounds fractions badly over long runs; keeping
/// rows primitive holds entry sizes down through thousands of reductions.
inline void make_primitive(RowVectorOf<Rational>& v) {
  Integer l(1);
  for (Index j = 0; j < v.size(); ++j) l = lcm(l, Integer(denominator(Rational(v(j)))));
  if (l != 1) {
    const Rational f(l);
    for (Index j = 0; j < v.size(); ++j) v(j) = Rational(v(j) * f);
  }
  Integer g(0);
  for (Index j = 0; j < v.size(); ++j) g = gcd(g, Integer(numerator(Rational(v(j)))));
  if (g > 1) {
    const Rational f(g);
    for (Index j = 0; j < v.size(); ++j) v(j) = Rational(v(j) / f);
  }
}

}  // namespace detail

/// Incrementally maintained row-reduced coordinate rows. Used wherever a set
/// of vectors is sifted for linear independence: closure bases, kernel
/// filtrations, span membership.
///
/// Rows are kept in echelon form (sorted by pivot column) and never mutated
/// after insertion. Over the rationals they are primitive integer vectors
/// with a positive pivot and all reductions are fraction-free; over a prime
/// field they carry unit pivots. `matrix()` back-substitutes once at the
/// end, so the exported coordinate matrix is an exact RREF either way.
template <class S>
class RrefAccumulator {
 public:
  explicit RrefAccumulator(Index width) : width_(width) {}

  /// Reduce v against the stored rows, up to a positive scalar multiple.
  /// A zero result means v was dependent.
  RowVectorOf<S> reduce(RowVectorOf<S> v) const {
    if constexpr (std::is_same_v<S, Rational>) detail::make_primitive(v);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const S coeff = v(pivots_[i]);
      if (is_zero(coeff)) continue;
      if constexpr (std::is_same_v<S, Rational>) {
        const S p = rows_[i](pivots_[i]);
        v = p * v - coeff * rows_[i];
        detail::make_primitive(v);
      } else {
        v -= coeff * rows_[i];
      }
    }
    return v;
  }

  bool contains(const RowVectorOf<S>& v) const {
    RowVectorOf<S> r = reduce(v);
    for (Index j = 0; j < width_; ++j)
      if (!is_zero(S(r(j)))) return false;
    return true;
  }

  /// Insert v if independent; returns the normalized new row, or nullopt.
  std::optional<RowVectorOf<S>> insert(RowVectorOf<S> v) {
    v = reduce(std::move(v));
    Index pivot = -1;
    for (Index j = 0; j < width_; ++j) {
      if (!is_zero(S(v(j)))) {
        pivot = j;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    if constexpr (std::is_same_v<S, Rational>) {
      if (v(pivot) < 0)
        for (Index j = pivot; j < width_; ++j) v(j) = Rational(-v(j));
    } else {
      const S inv = inverse_of(S(v(pivot)));
      for (Index j = pivot; j < width_; ++j) v(j) = S(v(j) * inv);
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), v);
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), pivot);
    return v;
  }

  Index rank() const { return static_cast<Index>(rows_.size()); }
  Index width() const { return width_; }

  /// Fully reduced rows: zeros above and below every pivot. Over the
  /// rationals they stay primitive integer vectors with positive pivots.
  std::vector<RowVectorOf<S>> reduced_rows() const {
    std::vector<RowVectorOf<S>> out = rows_;
    for (std::size_t i = out.size(); i-- > 0;) {
      for (std::size_t k = i + 1; k < out.size(); ++k) {
        const S coeff = out[i](pivots_[k]);
        if (is_zero(coeff)) continue;
        if constexpr (std::is_same_v<S, Rational>) {
          out[i] = out[k](pivots_[k]) * out[i] - coeff * out[k];
          detail::make_primitive(out[i]);
        } else {
          out[i] -= coeff * out[k];
        }
      }
      if constexpr (std::is_same_v<S, Rational>) {
        if (out[i](pivots_[i]) < 0)
          for (Index j = 0; j < width_; ++j) out[i](j) = Rational(-out[i](j));
      }
    }
    return out;
  }

  /// The accumulated rows as an RREF matrix: sorted by pivot column, unit
  /// pivots, zeros above and below every pivot.
  MatrixOf<S> matrix() const {
    const std::vector<RowVectorOf<S>> reduced = reduced_rows();
    MatrixOf<S> m = MatrixOf<S>::Constant(rank(), width_, S(0));
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      m.row(static_cast<Index>(i)) = reduced[i];
      if constexpr (std::is_same_v<S, Rational>) {
        const S p = reduced[i](pivots_[i]);
        if (p != Rational(1))
          for (Index j = 0; j < width_; ++j)
            m(static_cast<Index>(i), j) = Rational(m(static_cast<Index>(i), j) / p);
      }
    }
    return m;
  }

  const std::vector<Index>& pivot_columns() const { return pivots_; }

 private:
  Index width_;
  std::vector<RowVectorOf<S>> rows_;
  std::vector<Index> pivots_;
};

}  // namespace sln

#endif  // SLN_MATRICES_HPP
