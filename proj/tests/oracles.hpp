// Test-only oracles. These must stay independent of the library computation
// paths: naive triple-loop products instead of Eigen expressions, and small
// closed-form counts for the enumeration checks.
#ifndef SLN_TESTS_ORACLES_HPP
#define SLN_TESTS_ORACLES_HPP

#include "sln/matrices.hpp"

namespace sln::testing {

template <class S>
MatrixOf<S> naive_mul(const MatrixOf<S>& a, const MatrixOf<S>& b) {
  const Index n = a.rows();
  MatrixOf<S> out = zero_matrix<S>(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      S acc(0);
      for (Index k = 0; k < n; ++k) acc += S(a(i, k) * b(k, j));
      out(i, j) = acc;
    }
  return out;
}

template <class S>
MatrixOf<S> naive_bracket(const MatrixOf<S>& a, const MatrixOf<S>& b) {
  MatrixOf<S> ab = naive_mul(a, b);
  MatrixOf<S> ba = naive_mul(b, a);
  MatrixOf<S> out = ab;
  for (Index i = 0; i < out.rows(); ++i)
    for (Index j = 0; j < out.cols(); ++j) out(i, j) = S(ab(i, j) - ba(i, j));
  return out;
}

/// Number of nilpotent n x n matrices over F_q (the classical q^{n^2 - n}).
inline long long nilpotent_count_formula(long long q, long long n) {
  long long result = 1;
  for (long long e = 0; e < n * n - n; ++e) result *= q;
  return result;
}

}  // namespace sln::testing

#endif  // SLN_TESTS_ORACLES_HPP
