// Seeded samplers shared by the unit and acceptance suites.
#ifndef SLN_TESTS_HELPERS_HPP
#define SLN_TESTS_HELPERS_HPP

#include "sln/construct.hpp"
#include "sln/matrices.hpp"
#include "sln/random.hpp"

namespace sln::testing {

template <class S>
S small_scalar(Rng& rng, const FieldSpec& field, std::int64_t window = 5) {
  if constexpr (std::is_same_v<S, Rational>) {
    (void)field;
    return Rational(rng.int_in(-window, window));
  } else {
    return Fp(rng.int_in(0, field.modulus() - 1), field.modulus());
  }
}

template <class S>
S small_nonzero(Rng& rng, const FieldSpec& field, std::int64_t window = 5) {
  for (;;) {
    S v = small_scalar<S>(rng, field, window);
    if (!is_zero(v)) return v;
  }
}

template <class S>
MatrixOf<S> random_matrix(Rng& rng, Index n, const FieldSpec& field, std::int64_t window = 5) {
  MatrixOf<S> m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = small_scalar<S>(rng, field, window);
  return m;
}

template <class S>
MatrixOf<S> random_traceless(Rng& rng, Index n, const FieldSpec& field,
                             std::int64_t window = 5) {
  MatrixOf<S> m = random_matrix<S>(rng, n, field, window);
  S sum(0);
  for (Index i = 0; i + 1 < n; ++i) sum += m(i, i);
  m(n - 1, n - 1) = -sum;
  return m;
}

/// Lemma-1-shaped second generator: traceless with every off-diagonal entry
/// nonzero.
template <class S>
MatrixOf<S> random_offdiag_nonzero_traceless(Rng& rng, Index n, const FieldSpec& field,
                                             std::int64_t window = 5) {
  MatrixOf<S> m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      m(i, j) = i == j ? small_scalar<S>(rng, field, window)
                       : small_nonzero<S>(rng, field, window);
  S sum(0);
  for (Index i = 0; i + 1 < n; ++i) sum += m(i, i);
  m(n - 1, n - 1) = -sum;
  return m;
}

/// Product of elementary unipotents I + c E_{ij}; determinant 1 and the
/// inverse is accumulated alongside, so the witness is exact by construction.
template <class S>
SimilarityWitness<S> random_witness(Rng& rng, Index n, const FieldSpec& field,
                                    int moves = -1) {
  if (moves < 0) moves = static_cast<int>(2 * n);
  MatrixOf<S> c = identity_matrix<S>(n);
  MatrixOf<S> c_inv = identity_matrix<S>(n);
  for (int m = 0; m < moves; ++m) {
    const Index i = static_cast<Index>(rng.below(static_cast<std::uint64_t>(n)));
    Index j = static_cast<Index>(rng.below(static_cast<std::uint64_t>(n)));
    if (i == j) j = (j + 1) % n;
    const S coeff = small_nonzero<S>(rng, field, 2);
    MatrixOf<S> e = identity_matrix<S>(n);
    e(i, j) = coeff;
    MatrixOf<S> e_inv = identity_matrix<S>(n);
    e_inv(i, j) = S(-coeff);
    c = MatrixOf<S>(c * e);
    c_inv = MatrixOf<S>(e_inv * c_inv);
  }
  return {std::move(c), std::move(c_inv)};
}

/// Nonzero nilpotent: random strictly upper triangular, then conjugated to
/// hide the triangular shape. Exactly nilpotent by construction.
template <class S>
MatrixOf<S> random_nilpotent(Rng& rng, Index n, const FieldSpec& field,
                             std::int64_t window = 3) {
  MatrixOf<S> m = zero_matrix<S>(n);
  bool nonzero = false;
  while (!nonzero) {
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j) {
        m(i, j) = small_scalar<S>(rng, field, window);
        if (!is_zero(S(m(i, j)))) nonzero = true;
      }
  }
  return conjugate(random_witness<S>(rng, n, field), m);
}

/// Random consistent set over the rationals, by rejection against the
/// verifier. Distinct from the deterministic powers-of-two construction.
inline ConsistentSet<Rational> random_consistent_set(Rng& rng, Index n,
                                                     std::int64_t window = 40) {
  for (;;) {
    ConsistentSet<Rational> s;
    s.field = FieldSpec::rationals();
    Rational sum(0);
    for (Index i = 0; i + 1 < n; ++i) {
      Rational v(rng.int_in(-window, window));
      s.values.push_back(v);
      sum += v;
    }
    s.values.push_back(-sum);
    if (verify_consistent(s)) return s;
  }
}

/// Traceless diagonal with pairwise distinct nonzero entries, the valid
/// input domain of the diagonal splitting.
template <class S>
MatrixOf<S> random_valid_diagonal(Rng& rng, Index n, const FieldSpec& field,
                                  std::int64_t window = 30) {
  for (;;) {
    std::vector<S> d;
    S sum(0);
    for (Index i = 0; i + 1 < n; ++i) {
      S v = small_nonzero<S>(rng, field, window);
      d.push_back(v);
      sum += v;
    }
    d.push_back(-sum);
    bool ok = !is_zero(d.back());
    for (std::size_t i = 0; i < d.size() && ok; ++i)
      for (std::size_t j = i + 1; j < d.size(); ++j)
        if (d[i] == d[j]) {
          ok = false;
          break;
        }
    if (ok) return diagonal_matrix(d);
  }
}

}  // namespace sln::testing

#endif  // SLN_TESTS_HELPERS_HPP
